#ifndef TRISIN_QUAD_HPP
#define TRISIN_QUAD_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "trisin/precision.hpp"

namespace trisin {

struct QuadratureSpec {
    enum class Scheme { double_exponential, gauss_panel };
    Scheme scheme = Scheme::double_exponential;
    double tol = 1e-12;
    int max_level = 12;
    std::optional<int> panel_hint;

    void validate() const {
        if (tol <= 0) throw DomainError("QuadratureSpec: tol must be > 0");
        if (max_level < 1 || max_level > 20)
            throw DomainError("QuadratureSpec: max_level must be in [1, 20]");
    }
};

namespace quad {

// ---- tanh-sinh (double-exponential) nodes -------------------------------
//
// u-grid abscissa s = tanh((pi/2) sinh u) stored via its distance to the
// endpoint, one_minus_s = 1 - s, at extended precision so integrands with
// log endpoint singularities see accurate x - a and b - x.
struct DeNode {
    BigReal one_minus_s;  // at digits + 24
    BigReal weight;       // (pi/2) cosh(u) / cosh^2((pi/2) sinh u)
};

struct DeLevel {
    std::vector<DeNode> nodes;  // k = 0,1,2,... (level 0) or odd k (level >= 1)
};

struct DeTable {
    int digits;
    std::vector<DeLevel> levels;
};

// Table with levels 0..level built, cached per digit count.
std::shared_ptr<const DeTable> de_table(int digits, int level);

// ---- Gauss-Legendre nodes ------------------------------------------------
struct GlTable {
    int order;
    int digits;
    std::vector<BigReal> x;  // nodes in (0, 1): positive half, x[0] smallest
    std::vector<BigReal> w;
    bool has_center;         // odd order: node at 0 with weight w_center
    BigReal w_center;
};

std::shared_ptr<const GlTable> gauss_legendre(int order, int digits);

// ---- integration drivers -------------------------------------------------

struct RealResult {
    BigReal value;
    BigReal error;
    int level = 0;
    long evals = 0;
};
struct ComplexResult {
    BigComplex value;
    BigReal error;
    int level = 0;
    long evals = 0;
};

// f: (const BigReal& x) -> BigReal / BigComplex. Absolute tolerance.
RealResult tanh_sinh(const std::function<BigReal(const BigReal&)>& f,
                     const BigReal& a, const BigReal& b,
                     int digits, double tol, int max_level = 12);
ComplexResult tanh_sinh_complex(const std::function<BigComplex(const BigReal&)>& f,
                                const BigReal& a, const BigReal& b,
                                int digits, double tol, int max_level = 12);

// Fixed-order panel quadrature (no error estimate; order chosen by caller).
BigReal gl_panel(const std::function<BigReal(const BigReal&)>& f,
                 const BigReal& a, const BigReal& b, const GlTable& t);

// Globally adaptive bisection with per-panel GL comparison.
RealResult adaptive_gl(const std::function<BigReal(const BigReal&)>& f,
                       const BigReal& a, const BigReal& b,
                       int digits, double tol, int max_depth = 30, int order = 15);

// Euler-transform style acceleration of a sequence of partial sums of an
// (eventually) alternating series; returns the extrapolated limit and a
// last-correction error estimate.
BigReal accelerate_alternating(std::vector<BigReal> partial_sums, BigReal* err_estimate);

} // namespace quad
} // namespace trisin

#endif
