#include "vir/scalar.hpp"

#include <cctype>

namespace vir {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

Scalar power(const Scalar& x, long e) {
  if (e < 0) {
    if (is_zero(x)) throw PreconditionError("negative power of zero");
    return power(Scalar(1) / x, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

Scalar binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(r);
}

std::optional<mpz_class> integer_sqrt(const Scalar& x) {
  if (x.get_den() != 1 || sgn(x) < 0) return std::nullopt;
  mpz_class n = x.get_num();
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Scalar> rational_sqrt(const Scalar& x) {
  if (sgn(x) < 0) return std::nullopt;
  auto n = integer_sqrt(Scalar(x.get_num()));
  auto d = integer_sqrt(Scalar(x.get_den()));
  if (!n || !d) return std::nullopt;
  Scalar r(*n, *d);
  r.canonicalize();
  return r;
}

}  // namespace vir
