#ifndef TRISIN_SERIES_HPP
#define TRISIN_SERIES_HPP

#include <string>

#include "trisin/precision.hpp"
#include "trisin/rational.hpp"

namespace trisin {

// f(t) = sum_{n>=1} (-1)^n c_n t^{2n+1}/(2n+1)!  with
// c_n = (sum_{k=1..2n+1} H_{k-1}/k) / (2n+1).  c_0 = 0, c_n >= 0.
//
// Exact coefficients are kept up to this index; evaluations needing more
// terms are refused (PrecisionOverflow).
inline constexpr long kCoefficientCap = 10000;

ExactRational series_coefficient(long n);

// Truncation / working-precision plan: summing the first `terms` terms of
// the series leaves a tail below 2^{-2 terms} <= eps, provided
// terms > 3|t| and terms >= log(1/eps)/(2 log 2); each term is computed
// with enough digits that the summed rounding error stays below eps too.
struct TruncationPlan {
    long terms;            // N
    int working_digits;    // summation precision (includes guard digits)
    double log10_inv_eps;  // eps = 10^{-log10_inv_eps}
};

TruncationPlan truncation_plan(double t_abs, double eps);
TruncationPlan truncation_plan_log(double t_abs, double log10_inv_eps);

enum class Method { series, fourier, laplace, asymptotic, oracle };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::fourier: return "fourier";
        case Method::laplace: return "laplace";
        case Method::asymptotic: return "asymptotic";
        case Method::oracle: return "oracle";
    }
    return "?";
}

// A value with a certified error bound (truncation plus rounding).
struct Evaluation {
    BigComplex value;
    BigReal error_bound;
    Method method = Method::series;
    long terms_used = 0;
};

// Power-series evaluation of f; |true - value| <= error_bound <= 2 eps.
Evaluation eval_f_series(const BigComplex& z, double eps);
Evaluation eval_f_series(const BigReal& t, double eps);
Evaluation eval_f_series(double t, double eps);

// Same with a caller-supplied plan (shared-plan grid sweeps).
Evaluation eval_f_series_planned(const BigComplex& z, const TruncationPlan& plan);

// Termwise derivative: f'(t) = sum (-1)^n c_n t^{2n}/(2n)!.
Evaluation eval_f_prime(const BigComplex& z, double eps);
Evaluation eval_f_prime(const BigReal& t, double eps);

} // namespace trisin

#endif
