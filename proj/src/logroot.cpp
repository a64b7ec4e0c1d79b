#include "hx/logroot.hpp"

#include <cmath>

namespace hx {

namespace {

ImaginaryUnit random_unit(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    while (true) {
        HyperNum v(dim);
        for (int i = 1; i < dim; ++i) v[i] = g(rng);
        const double n = norm(v);
        if (n > 1e-9) return ImaginaryUnit(v * (1.0 / n));
    }
}

HyperNum principal_log_impl(const HyperNum& q, const ImaginaryUnit* negative_real_unit) {
    const double n = norm(q);
    if (n == 0.0) throw domain_error("logarithm pole at q = 0");
    const HyperNum imq = q.im();
    const double y = norm(imq);
    if (y == 0.0) {
        if (q.re() > 0.0) return HyperNum::real(std::log(n), q.dim());
        if (!negative_real_unit)
            throw branch_error("no continuous branch near the negative reals; "
                               "supply a unit explicitly to select one");
        return HyperNum::real(std::log(n), q.dim()) + negative_real_unit->value() * M_PI;
    }
    const double theta = std::atan2(y, q.re());
    return HyperNum::real(std::log(n), q.dim()) + imq * (theta / y);
}

} // namespace

double LogPoint::invariant_residual() const {
    const double r = norm(q);
    double res = std::abs(p.re());
    res = std::max(res, norm(q - exp(p) * r));
    return res;
}

double RootPoint::invariant_residual() const {
    return std::abs(norm(s) - static_cast<double>(n));
}

LogPoint E_exponential(const HyperNum& q, const ImaginaryUnit& fallback) {
    const SlicePoint sp = decompose(q, fallback);
    return {exp(q), sp.unit.value() * sp.y};
}

LogPoint E_exponential(const HyperNum& q) {
    return E_exponential(q, ImaginaryUnit::canonical(q.dim()));
}

HyperNum L_logarithm(const LogPoint& pt, double tol) {
    if (norm_sq(pt.q) == 0.0) throw domain_error("logarithm pole at q = 0");
    if (pt.q.dim() != pt.p.dim()) throw algebra_error("LogPoint dimension mismatch");
    if (pt.invariant_residual() > tol)
        throw not_on_manifold_error("point violates the logarithm-manifold invariant");
    return HyperNum::real(std::log(norm(pt.q)), pt.q.dim()) + pt.p;
}

HyperNum principal_log(const HyperNum& q) { return principal_log_impl(q, nullptr); }

HyperNum principal_log(const HyperNum& q, const ImaginaryUnit& negative_real_unit) {
    return principal_log_impl(q, &negative_real_unit);
}

RootPoint phi_n(int n, const SlicePoint& p) {
    if (n <= 1) throw config_error("phi_n requires n > 1");
    if (p.x <= 0.0 || p.y >= M_PI * n)
        throw domain_error("phi_n parameter outside R+ x S(-pi n, pi n)");
    const HyperNum q = p.reconstruct();
    const HyperNum I = p.unit.value();
    return {n, exp(q), exp(I * (p.y / n)) * static_cast<double>(n)};
}

HyperNum R_nthroot(const RootPoint& pt, double tol) {
    if (pt.n <= 1) throw config_error("R_n requires n > 1");
    if (pt.invariant_residual() > tol)
        throw not_on_manifold_error("point violates |s| = n");
    const double r = std::pow(norm(pt.q), 1.0 / pt.n);
    return pt.s * (r / pt.n);
}

HyperNum principal_nthroot(int n, const HyperNum& q) {
    if (n <= 1) throw config_error("principal_nthroot requires n > 1");
    return exp(principal_log(q) * (1.0 / n));
}

HyperNum principal_nthroot(int n, const HyperNum& q, const ImaginaryUnit& negative_real_unit) {
    if (n <= 1) throw config_error("principal_nthroot requires n > 1");
    return exp(principal_log(q, negative_real_unit) * (1.0 / n));
}

std::vector<HyperNum> sample_exp_preimages(const HyperNum& q, int count, std::mt19937_64& rng) {
    const double n = norm(q);
    if (n == 0.0) throw domain_error("0 has no exponential preimage");
    const int dim = q.dim();
    const double logr = std::log(n);
    std::vector<HyperNum> out;
    const HyperNum imq = q.im();
    const double y = norm(imq);

    if (y > 0.0) {
        // Preimages stay on the slice of q: log|q| + I (theta + 2 pi k).
        const HyperNum I = imq * (1.0 / y);
        const double theta = std::atan2(y, q.re());
        for (int k = 0; out.size() < static_cast<std::size_t>(count); k = k <= 0 ? 1 - k : -k)
            out.push_back(HyperNum::real(logr, dim) + I * (theta + 2.0 * M_PI * k));
        return out;
    }
    if (q.re() > 0.0) {
        // The principal preimage is real and isolated; the rest form
        // spheres log|q| + S 2 pi k with arbitrary unit.
        out.push_back(HyperNum::real(logr, dim));
        int k = 1;
        while (out.size() < static_cast<std::size_t>(count)) {
            out.push_back(HyperNum::real(logr, dim) +
                          random_unit(dim, rng).value() * (2.0 * M_PI * k));
            ++k;
        }
        return out;
    }
    // Negative reals: every preimage lies on a sphere log|x| + S (2k+1) pi.
    int k = 0;
    while (out.size() < static_cast<std::size_t>(count)) {
        out.push_back(HyperNum::real(logr, dim) +
                      random_unit(dim, rng).value() * ((2.0 * k + 1.0) * M_PI));
        ++k;
    }
    return out;
}

} // namespace hx
