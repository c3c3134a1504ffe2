#ifndef TRISIN_FUNCTIONS_HPP
#define TRISIN_FUNCTIONS_HPP

#include <utility>

#include "trisin/precision.hpp"
#include "trisin/rational.hpp"

namespace trisin {

// Exact harmonic numbers are memoized up to this cap; larger indices go
// through harmonic_real.
inline constexpr long kHarmonicCap = 10000;

// H_n = sum_{k=1..n} 1/k, exact. H_0 = 0.
ExactRational harmonic(long n);

// H_n summed directly in BigReal, for n beyond the exact cap.
BigReal harmonic_real(long n, int digits);

// lhs = sum_{k=1..n} (-1)^k C(n,k)/k^2, rhs = -sum_{k=1..n} H_k/k.
std::pair<ExactRational, ExactRational> lemma_identity(long n);

// lhs = sum_{k=1..n} (-1)^{k+1} C(n,k)/k, rhs = H_n.
std::pair<ExactRational, ExactRational> gr_identity(long n);

// Psi(n+1) = H_n - gamma and Psi'(n+1) = pi^2/6 - sum_{k<=n} 1/k^2.
BigReal digamma_int(long n, const PrecisionContext& ctx);
BigReal trigamma_int(long n, const PrecisionContext& ctx);

// Bernoulli number B_n (B_1 = -1/2 convention), memoized.
ExactRational bernoulli(long n);

// Dilogarithm, principal branch. Defined on C minus the real ray (1, inf);
// the closure points 0 and 1 evaluate to their classical limits 0 and
// pi^2/6. Accurate to ~10^{1-digits}.
BigComplex dilog(const BigComplex& z, int digits);
BigReal dilog_real(const BigReal& x, int digits);  // x <= 1

inline BigComplex dilog(const CutPlanePoint& p, const PrecisionContext& ctx) {
    return dilog(p.z, ctx.decimal_digits);
}

} // namespace trisin

#endif
