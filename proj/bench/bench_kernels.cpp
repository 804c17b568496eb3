// Serial reference kernels against their OpenMP counterparts.
// Usage: bench_kernels [max_level]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "vir/highest_weight.hpp"
#include "vir/induced.hpp"
#include "vir/linalg.hpp"
#include "vir/tensor.hpp"

using namespace vir;

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << "x" << (same ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const long max_level = argc > 1 ? std::atol(argv[1]) : 7;
  const int threads = omp_get_max_threads();
  std::cout << "threads: " << threads << "\n"
            << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "parallel" << std::setw(10) << "speedup" << "\n";

  const VermaParams p{Scalar(1, 3), Scalar(-2, 7)};
  for (long level = 4; level <= max_level; ++level) {
    Matrix gs, gp;
    const double a = seconds([&] { gs = gram_matrix(p, level, Exec::serial); });
    const double b = seconds([&] { gp = gram_matrix(p, level, Exec::parallel); });
    row("gram_matrix level " + std::to_string(level), a, b, gs == gp);

    Scalar ds, dp;
    const double c = seconds([&] { ds = determinant(gs, Exec::serial); });
    const double d = seconds([&] { dp = determinant(gs, Exec::parallel); });
    row("determinant level " + std::to_string(level), c, d, ds == dp);

    Rref rs, rp;
    const double e = seconds([&] { rs = rref(gs, Exec::serial); });
    const double f = seconds([&] { rp = rref(gs, Exec::parallel); });
    row("rref level " + std::to_string(level), e, f, rs.reduced == rp.reduced);
  }

  // kernels without an Exec switch: compare one thread against all
  const InducedModule m(InducedParams(2, Scalar(3, 2), Scalar(1, 3), {1, 2, -1}));
  std::vector<PbwVector> basis;
  for (const auto& mono : m.basis(5)) basis.push_back(m.vector(MonoVector::unit(mono)));
  std::size_t fs = 0, fp = 0;
  omp_set_num_threads(1);
  const double s1 = seconds([&] { fs = commutator_sweep(InducedModule(m.params()), basis, 6).size(); });
  omp_set_num_threads(threads);
  const double s2 = seconds([&] { fp = commutator_sweep(InducedModule(m.params()), basis, 6).size(); });
  row("commutator_sweep induced n=2", s1, s2, fs == fp);

  const TensorModule t(OmegaParams(1, 2), std::make_shared<Verma>(VermaParams{Scalar(1, 3), Scalar(1, 5)}));
  const Truncation w{5, 4, 5};
  ClosureResult cs, cp;
  omp_set_num_threads(1);
  const double c1 = seconds([&] { cs = cyclic_closure(t, {t.cyclic()}, w); });
  omp_set_num_threads(threads);
  const double c2 = seconds([&] { cp = cyclic_closure(t, {t.cyclic()}, w); });
  row("cyclic_closure " + w.str(), c1, c2, cs.basis == cp.basis);

  IsoReport is, ip;
  omp_set_num_threads(1);
  const double i1 = seconds([&] { is = iso_verifier(m.params(), {4, 4, 5}); });
  omp_set_num_threads(threads);
  const double i2 = seconds([&] { ip = iso_verifier(m.params(), {4, 4, 5}); });
  row("iso_verifier n=2 (4,4,5)", i1, i2, is.passed() == ip.passed() && is.rank == ip.rank);
}
