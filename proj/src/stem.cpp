#include "hx/stem.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace hx {

namespace {

double fd_step(double x, double y) {
    return 1e-6 * std::max({1.0, std::abs(x), std::abs(y)});
}

StemValue scale(StemValue v, double s) {
    for (auto& c : v) c *= s;
    return v;
}

StemValue sub(StemValue a, const StemValue& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

StemValue central_diff(const StemEval& f, double x, double y, bool in_x) {
    const double h = fd_step(x, y);
    const StemValue hi = in_x ? f(x + h, y) : f(x, y + h);
    const StemValue lo = in_x ? f(x - h, y) : f(x, y - h);
    return scale(sub(hi, lo), 1.0 / (2.0 * h));
}

} // namespace

SymmetricDomain SymmetricDomain::plane(double x_lo, double x_hi, double y_lo, double y_hi) {
    SymmetricDomain d;
    d.x_min = x_lo;
    d.x_max = x_hi;
    d.y_min = y_lo;
    d.y_max = y_hi;
    return d;
}

SymmetricDomain SymmetricDomain::strip(double y_bound, double x_lo, double x_hi) {
    SymmetricDomain d;
    d.contains = [y_bound](double, double y) { return std::abs(y) < y_bound; };
    d.x_min = x_lo;
    d.x_max = x_hi;
    d.y_min = -0.999 * y_bound;
    d.y_max = 0.999 * y_bound;
    return d;
}

SymmetricDomain SymmetricDomain::half_strip(double y_bound, double x_hi) {
    SymmetricDomain d;
    d.contains = [y_bound](double x, double y) { return x > 0.0 && std::abs(y) < y_bound; };
    d.contains_real_axis = true;
    d.x_min = 0.05;
    d.x_max = x_hi;
    d.y_min = -0.999 * y_bound;
    d.y_max = 0.999 * y_bound;
    return d;
}

std::pair<double, double> SymmetricDomain::sample(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> ux(x_min, x_max), uy(y_min, y_max);
    for (int tries = 0; tries < 10000; ++tries) {
        const double x = ux(rng), y = uy(rng);
        if (contains(x, y)) return {x, y};
    }
    throw config_error("domain sampler failed to find a point");
}

std::pair<double, double> SymmetricDomain::sample_off_axis(std::mt19937_64& rng, double margin) const {
    for (int tries = 0; tries < 10000; ++tries) {
        const auto [x, y] = sample(rng);
        if (std::abs(y) >= margin) return {x, y};
    }
    throw config_error("domain sampler found no off-axis points");
}

double SymmetricDomain::sample_real(std::mt19937_64& rng) const {
    if (!contains_real_axis) throw config_error("domain does not meet the real axis");
    std::uniform_real_distribution<double> ux(x_min, x_max);
    for (int tries = 0; tries < 10000; ++tries) {
        const double x = ux(rng);
        if (contains(x, 0.0)) return x;
    }
    throw config_error("domain sampler found no real-axis points");
}

StemValue StemFunction::eval_f1(double x, double y) const { return f1(x, y); }
StemValue StemFunction::eval_f2(double x, double y) const { return f2(x, y); }

StemValue StemFunction::eval_dx_f1(double x, double y) const {
    return dx_f1 ? dx_f1(x, y) : central_diff(f1, x, y, true);
}
StemValue StemFunction::eval_dy_f1(double x, double y) const {
    return dy_f1 ? dy_f1(x, y) : central_diff(f1, x, y, false);
}
StemValue StemFunction::eval_dx_f2(double x, double y) const {
    return dx_f2 ? dx_f2(x, y) : central_diff(f2, x, y, true);
}
StemValue StemFunction::eval_dy_f2(double x, double y) const {
    return dy_f2 ? dy_f2(x, y) : central_diff(f2, x, y, false);
}

StemValue eval_slice(const StemFunction& F, const SlicePoint& p) {
    if (!F.domain.contains(p.x, p.y))
        throw domain_error("slice point outside the stem domain");
    const StemValue v1 = F.f1(p.x, p.y);
    const StemValue v2 = F.f2(p.x, p.y);
    StemValue out;
    out.reserve(v1.size());
    for (std::size_t i = 0; i < v1.size(); ++i)
        out.push_back(v1[i] + mul(p.unit.value(), v2[i]));
    return out;
}

IntrinsicReport check_intrinsic(const StemFunction& F, int samples,
                                std::mt19937_64& rng, double tol) {
    if (samples <= 0) throw config_error("check_intrinsic needs a nonempty sample set");
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const auto [x, y] = F.domain.sample(rng);
        const StemValue f1p = F.f1(x, y), f1m = F.f1(x, -y);
        const StemValue f2p = F.f2(x, y), f2m = F.f2(x, -y);
        for (std::size_t i = 0; i < f1p.size(); ++i) {
            worst = std::max(worst, norm(f1p[i] - f1m[i]));
            worst = std::max(worst, norm(f2p[i] + f2m[i]));
        }
        if (F.domain.contains_real_axis) {
            const double xr = F.domain.sample_real(rng);
            for (const HyperNum& c : F.f2(xr, 0.0)) worst = std::max(worst, norm(c));
        }
    }
    return {worst, worst <= tol};
}

bool check_holomorphic(const StemFunction& F, double x, double y, double tol) {
    const StemValue a = sub(F.eval_dx_f1(x, y), F.eval_dy_f2(x, y));
    const StemValue b = F.eval_dy_f1(x, y);
    const StemValue c = F.eval_dx_f2(x, y);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, norm(a[i]));
        worst = std::max(worst, norm(b[i] + c[i]));
    }
    return worst <= tol;
}

StemValue slice_derivative(const StemFunction& F, const SlicePoint& p) {
    if (!check_holomorphic(F, p.x, p.y, 1e-5))
        throw error("slice_derivative requires a holomorphic stem");
    const StemValue d1 = F.eval_dx_f1(p.x, p.y);
    const StemValue d2 = F.eval_dx_f2(p.x, p.y);
    StemValue out;
    out.reserve(d1.size());
    for (std::size_t i = 0; i < d1.size(); ++i)
        out.push_back(d1[i] + mul(p.unit.value(), d2[i]));
    return out;
}

StemValue spherical_derivative(const StemFunction& F, const SlicePoint& p) {
    if (!F.domain.contains(p.x, p.y))
        throw domain_error("slice point outside the stem domain");
    if (p.y > 0.0) return scale(F.f2(p.x, p.y), 1.0 / p.y);
    return F.eval_dy_f2(p.x, 0.0);
}

HyperNum representation_formula(const HyperNum& fM, const HyperNum& fN,
                                const ImaginaryUnit& M, const ImaginaryUnit& N,
                                const ImaginaryUnit& L) {
    const HyperNum diff = M.value() - N.value();
    if (norm(diff) < 1e-12)
        throw algebra_error("representation formula needs M != N");
    const HyperNum dinv = inv(diff);
    const HyperNum sym = mul(dinv, mul(M.value(), fM) - mul(N.value(), fN));
    const HyperNum sph = mul(L.value(), mul(dinv, fM - fN));
    return sym + sph;
}

StemFunction monomial_stem(int k, const HyperNum& a) {
    std::vector<HyperNum> coeffs(static_cast<std::size_t>(k) + 1, HyperNum(a.dim()));
    coeffs.back() = a;
    return polynomial_stem(coeffs, a.dim());
}

StemFunction polynomial_stem(const std::vector<HyperNum>& coeffs, int algebra_dim) {
    StemFunction F;
    F.algebra_dim = algebra_dim;
    F.real_valued = false;
    F.arity = 1;
    F.domain = SymmetricDomain::plane();

    auto eval = [coeffs, algebra_dim](double x, double y, bool deriv) {
        const std::complex<double> z(x, y);
        HyperNum v1(algebra_dim), v2(algebra_dim);
        std::complex<double> zk(1.0, 0.0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (!deriv) {
                v1 += coeffs[k] * zk.real();
                v2 += coeffs[k] * zk.imag();
            } else if (k + 1 < coeffs.size()) {
                const std::complex<double> dk = static_cast<double>(k + 1) * zk;
                v1 += coeffs[k + 1] * dk.real();
                v2 += coeffs[k + 1] * dk.imag();
            }
            zk *= z;
        }
        return std::pair{v1, v2};
    };

    F.f1 = [eval](double x, double y) { return StemValue{eval(x, y, false).first}; };
    F.f2 = [eval](double x, double y) { return StemValue{eval(x, y, false).second}; };
    F.dx_f1 = [eval](double x, double y) { return StemValue{eval(x, y, true).first}; };
    F.dx_f2 = [eval](double x, double y) { return StemValue{eval(x, y, true).second}; };
    // Holomorphic stem: dy F1 = -dx F2, dy F2 = dx F1.
    F.dy_f1 = [eval](double x, double y) { return StemValue{-eval(x, y, true).second}; };
    F.dy_f2 = [eval](double x, double y) { return StemValue{eval(x, y, true).first}; };
    return F;
}

} // namespace hx
