#pragma once

#include <optional>

#include "vir/pbw.hpp"
#include "vir/scalar.hpp"

namespace vir {

/// (h + φ(k) + (kl-1)/2)(h + φ(l) + (kl-1)/2) + (k^2 - l^2)^2/16,
/// φ(j) = (j^2 - 1)(θ - 13)/24.
///
/// The formula is written in the L0 weight. With the bracket used here d_0
/// acts on v_h by h, i.e. L0 = -d_0, so the Verma module V̄(θ,h) is reducible
/// exactly when kac_factor(θ, -h, k, l) vanishes for some k, l. The helpers
/// below take that L0 weight explicitly.
Scalar kac_factor(const Scalar& theta, const Scalar& h, long k, long l);

/// First zero of kac_factor(θ, weight, ·, ·) with kl <= bound, ordered by kl then k.
std::optional<KacWitness> kac_scan(const Scalar& theta, const Scalar& weight, long bound);

/// Exact decision over all k, l >= 1; returns the zero with least kl (then k).
std::optional<KacWitness> kac_exact(const Scalar& theta, const Scalar& weight);

/// Simplicity of V̄(θ,h). Bounded scan by default; `exact` also runs kac_exact
/// when the scan finds nothing.
SimplicityReport verma_is_simple(const Scalar& theta, const Scalar& h, long bound = 200, bool exact = false);

/// Simplicity of M(θ,0): reducible iff θ = 1 - 6(p-q)^2/(pq) for coprime p, q >= 2.
SimplicityReport mtheta0_is_simple(const Scalar& theta);

}  // namespace vir
