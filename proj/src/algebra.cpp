#include "vir/algebra.hpp"

#include <sstream>

namespace vir {

UeaElement identity_element() { return UeaElement::unit(UeaWord{}); }

UeaElement generator(int i) { return UeaElement::unit(UeaWord{{i}, 0}); }

UeaElement central_element() { return UeaElement::unit(UeaWord{{}, 1}); }

UeaElement operator*(const UeaElement& a, const UeaElement& b) {
  UeaElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      UeaWord w = wa;
      w.factors.insert(w.factors.end(), wb.factors.begin(), wb.factors.end());
      w.central_power += wb.central_power;
      out.add(w, ca * cb);
    }
  return out;
}

UeaElement bracket(int i, int j) {
  UeaElement out;
  if (i == j) return out;
  out.add(UeaWord{{i + j}, 0}, Scalar(j - i));
  if (i == -j) {
    Scalar li(i);
    out.add(UeaWord{{}, 1}, (li * li * li - li) / 12);
  }
  return out;
}

UeaElement omega_operator(int s, int l, int m) {
  if (s < 0) throw PreconditionError("omega_operator needs s >= 0");
  UeaElement out;
  for (int i = 0; i <= s; ++i) {
    Scalar c = binomial(s, i);
    if ((s - i) % 2 != 0) c = -c;
    out.add(UeaWord{{l - m - i, m + i}, 0}, c);
  }
  return out;
}

std::string to_string(const UeaElement& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (int f : w.factors) os << "*d(" << f << ")";
    if (w.central_power == 1) os << "*c";
    if (w.central_power > 1) os << "*c^" << w.central_power;
  }
  return os.str();
}

}  // namespace vir
