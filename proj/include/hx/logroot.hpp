#ifndef HX_LOGROOT_HPP
#define HX_LOGROOT_HPP

#include <random>
#include <vector>

#include "hx/algebra.hpp"

namespace hx {

/// A point (q, p) of the logarithm manifold E+: q = |q| exp(p) with p
/// purely imaginary.
struct LogPoint {
    HyperNum q;
    HyperNum p;

    /// Max residual of the manifold invariant, 0 for exact points.
    double invariant_residual() const;
};

/// A point (q, s) of the n-th root manifold Q+(n): |s| = n.
struct RootPoint {
    int n;
    HyperNum q;
    HyperNum s;

    double invariant_residual() const;  // | |s| - n |
};

/// E(x + Iy) = (exp(x + Iy), Iy).
LogPoint E_exponential(const HyperNum& q, const ImaginaryUnit& fallback);
LogPoint E_exponential(const HyperNum& q);

/// L(q, p) = log|q| + p; inverse of E on the manifold. Rejects points
/// violating the manifold invariant beyond tol.
HyperNum L_logarithm(const LogPoint& pt, double tol = 1e-9);

/// Principal branch: log|q| + I_q theta, theta = atan2(|Im q|, Re q)
/// in [0, pi). Negative reals are rejected unless an explicit unit is
/// supplied; q = 0 is always rejected.
HyperNum principal_log(const HyperNum& q);
HyperNum principal_log(const HyperNum& q, const ImaginaryUnit& negative_real_unit);

/// phi_n(x + Iy) = (exp(x + Iy), n exp(I y / n)) on R+ x S(-pi n, pi n).
RootPoint phi_n(int n, const SlicePoint& p);

/// R_n(q, s) = |q|^{1/n} s / n, including the closure points q = 0 and
/// s = +-n with real q >= 0.
HyperNum R_nthroot(const RootPoint& pt, double tol = 1e-9);

/// Principal branch of the n-th root: |q|^{1/n} exp(I_q theta / n).
HyperNum principal_nthroot(int n, const HyperNum& q);
HyperNum principal_nthroot(int n, const HyperNum& q, const ImaginaryUnit& negative_real_unit);

/// Samples distinct logarithms of q (preimages under exp): shifts of
/// the principal value by 2 pi k along the slice unit, and for real q
/// arbitrary units. All returned w satisfy exp(w) = q.
std::vector<HyperNum> sample_exp_preimages(const HyperNum& q, int count, std::mt19937_64& rng);

} // namespace hx

#endif
