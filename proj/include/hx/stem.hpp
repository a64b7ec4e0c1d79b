#ifndef HX_STEM_HPP
#define HX_STEM_HPP

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "hx/algebra.hpp"

namespace hx {

/// A symmetric plane domain: membership predicate plus a sampling box.
struct SymmetricDomain {
    std::function<bool(double, double)> contains = [](double, double) { return true; };
    bool contains_real_axis = true;
    double x_min = -2.0, x_max = 2.0;
    double y_min = -2.0, y_max = 2.0;

    static SymmetricDomain plane(double x_lo = -2.0, double x_hi = 2.0,
                                 double y_lo = -2.0, double y_hi = 2.0);
    /// The strip R x (-y_bound, y_bound), open at the boundary.
    static SymmetricDomain strip(double y_bound, double x_lo = -2.0, double x_hi = 2.0);
    /// The half strip {x > 0} x (-y_bound, y_bound).
    static SymmetricDomain half_strip(double y_bound, double x_hi = 2.0);

    /// Rejection-samples a point of the domain.
    std::pair<double, double> sample(std::mt19937_64& rng) const;
    /// Samples with |y| bounded below by margin (off-axis samples).
    std::pair<double, double> sample_off_axis(std::mt19937_64& rng, double margin) const;
    /// A real-axis point; requires contains_real_axis.
    double sample_real(std::mt19937_64& rng) const;
};

using StemValue = std::vector<HyperNum>;
using StemEval = std::function<StemValue(double, double)>;

/// A stem function F = F1 + iota F2 on a symmetric plane domain, with
/// values in A^n for A in {R, H, O}. Real-valued stems store their
/// components as HyperNums of the target algebra with only the real
/// coefficient set, so I * F2 is an ordinary algebra product.
struct StemFunction {
    int algebra_dim = 4;      // dim of K the induced slice function maps into
    bool real_valued = true;  // A = R
    int arity = 1;
    SymmetricDomain domain;

    StemEval f1, f2;
    // Optional analytic partials; central differences otherwise.
    StemEval dx_f1, dy_f1, dx_f2, dy_f2;

    bool has_partials() const { return dx_f1 && dy_f1 && dx_f2 && dy_f2; }

    StemValue eval_f1(double x, double y) const;
    StemValue eval_f2(double x, double y) const;
    StemValue eval_dx_f1(double x, double y) const;
    StemValue eval_dy_f1(double x, double y) const;
    StemValue eval_dx_f2(double x, double y) const;
    StemValue eval_dy_f2(double x, double y) const;
};

/// f(x + Iy) = F1(x + iy) + I F2(x + iy), componentwise.
StemValue eval_slice(const StemFunction& F, const SlicePoint& p);

struct IntrinsicReport {
    double max_residual = 0.0;
    bool pass = false;
};

/// Checks F1 even / F2 odd in y over paired samples (z, conj z).
IntrinsicReport check_intrinsic(const StemFunction& F, int samples,
                                std::mt19937_64& rng, double tol = 1e-9);

/// Cauchy-Riemann check dx F1 = dy F2, dy F1 = -dx F2 at one point.
bool check_holomorphic(const StemFunction& F, double x, double y, double tol = 1e-6);

/// Slice function induced by the derivative stem F' = dx F1 + iota dx F2.
StemValue slice_derivative(const StemFunction& F, const SlicePoint& p);

/// y^{-1} F2(x, y) for y > 0, the limit dy F2(x, 0) at the real axis.
StemValue spherical_derivative(const StemFunction& F, const SlicePoint& p);

/// Local representation formula: predicts f(x + Ly) from the values at
/// x + My and x + Ny.  Products associate as written, left to right.
HyperNum representation_formula(const HyperNum& fM, const HyperNum& fN,
                                const ImaginaryUnit& M, const ImaginaryUnit& N,
                                const ImaginaryUnit& L);

/// Stem of z^k with HyperNum coefficient on the right: z^k * a.
StemFunction monomial_stem(int k, const HyperNum& a);
/// Polynomial stem sum_k z^k coeffs[k] with K-valued coefficients.
StemFunction polynomial_stem(const std::vector<HyperNum>& coeffs, int algebra_dim);

} // namespace hx

#endif
