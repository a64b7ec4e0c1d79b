#include "hx/differential.hpp"

#include <cmath>
#include <limits>

namespace hx {

namespace {

void check_alignment(const SlicePoint& p, const Basis& basis) {
    if (basis.dim != p.unit.dim())
        throw algebra_error("basis dimension does not match the slice point");
    if (norm(basis.units[0] - HyperNum::real(1.0, basis.dim)) > 1e-9 ||
        norm(basis.units[1] - p.unit.value()) > 1e-9)
        throw algebra_error("basis must begin with (1, I) aligned to the point");
}

Eigen::VectorXd flatten(const StemValue& v) {
    const int dim = v.empty() ? 0 : v[0].dim();
    Eigen::VectorXd out(static_cast<int>(v.size()) * dim);
    for (std::size_t c = 0; c < v.size(); ++c)
        for (int i = 0; i < dim; ++i) out(static_cast<int>(c) * dim + i) = v[c][i];
    return out;
}

double value_norm(const StemValue& v) {
    double s = 0.0;
    for (const HyperNum& c : v) s += norm_sq(c);
    return std::sqrt(s);
}

BlockReport audit_block(const Eigen::MatrixXd& block, double tol) {
    BlockReport r;
    const Eigen::MatrixXd gram = block.transpose() * block;
    const int n = static_cast<int>(gram.rows());
    r.factor = gram.trace() / n;

    bool all_zero = true;
    for (int j = 0; j < n; ++j)
        if (block.col(j).norm() >= tol) all_zero = false;
    if (all_zero) {
        r.verdict = Verdict::degenerate;
        return r;
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j)
                r.norm_ratio_dev = std::max(r.norm_ratio_dev, std::abs(gram(i, i) / r.factor - 1.0));
            else
                r.ortho_residual = std::max(r.ortho_residual, std::abs(gram(i, j)) / r.factor);
        }
    }
    r.verdict = r.residual() <= tol ? Verdict::pass : Verdict::fail;
    return r;
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::degenerate: return "degenerate";
    }
    return "unknown";
}

CurveSet standard_curves(const SlicePoint& p, const Basis& basis) {
    check_alignment(p, basis);
    CurveSet cs{p, basis, {}};
    const double x = p.x, y = p.y;
    const HyperNum I = p.unit.value();
    const int dim = basis.dim;

    cs.curves.push_back([x, y, I, dim](double t) {
        return HyperNum::real(x + t, dim) + I * y;
    });
    cs.curves.push_back([x, y, I, dim](double t) {
        return HyperNum::real(x, dim) + I * (y + t);
    });
    for (int l = 2; l < dim; ++l) {
        const HyperNum Il = basis.units[static_cast<std::size_t>(l)];
        if (y > 0.0) {
            // Gamma_{I_l}(t) = x + gamma(t) y along a great circle of S.
            cs.curves.push_back([x, y, I, Il, dim](double t) {
                const HyperNum gamma = I * std::cos(t / y) + Il * std::sin(t / y);
                return HyperNum::real(x, dim) + gamma * y;
            });
        } else {
            cs.curves.push_back([x, Il, dim](double t) {
                return HyperNum::real(x, dim) + Il * t;
            });
        }
    }
    return cs;
}

DifferentialMatrix jacobian_numeric(const AmbientMap& map, const SlicePoint& p,
                                    const Basis& basis, double h) {
    const CurveSet cs = standard_curves(p, basis);
    auto at = [&](const HyperNum& q) {
        return map(decompose(q, p.unit));
    };
    DifferentialMatrix J;
    for (std::size_t l = 0; l < cs.curves.size(); ++l) {
        Eigen::VectorXd hi, lo;
        try {
            hi = at(cs.curves[l](h));
            lo = at(cs.curves[l](-h));
        } catch (const error& e) {
            throw domain_error(std::string("stencil evaluation failed: ") + e.what());
        }
        if (J.size() == 0) J.resize(hi.size(), basis.dim);
        J.col(static_cast<int>(l)) = (hi - lo) / (2.0 * h);
    }
    return J;
}

DifferentialMatrix jacobian_slice_analytic(const StemFunction& F, const SlicePoint& p,
                                           const Basis& basis) {
    check_alignment(p, basis);
    const double x = p.x, y = p.y;
    const HyperNum I = p.unit.value();
    const int dim = basis.dim;

    const StemValue dx1 = F.eval_dx_f1(x, y), dx2 = F.eval_dx_f2(x, y);
    const StemValue dy1 = F.eval_dy_f1(x, y), dy2 = F.eval_dy_f2(x, y);

    StemValue col0, col1;
    for (std::size_t c = 0; c < dx1.size(); ++c) {
        col0.push_back(dx1[c] + mul(I, dx2[c]));
        col1.push_back(dy1[c] + mul(I, dy2[c]));
    }

    DifferentialMatrix J(static_cast<int>(col0.size()) * dim, dim);
    J.col(0) = flatten(col0);
    J.col(1) = flatten(col1);

    const StemValue transverse = (y > 0.0) ? F.f2(x, y) : F.eval_dy_f2(x, 0.0);
    for (int l = 2; l < dim; ++l) {
        const HyperNum Il = basis.units[static_cast<std::size_t>(l)];
        StemValue col;
        for (const HyperNum& c : transverse)
            col.push_back(y > 0.0 ? mul(Il, c) * (1.0 / y) : mul(Il, c));
        J.col(l) = flatten(col);
    }
    return J;
}

nlohmann::json ConformalityReport::to_json() const {
    auto block = [](const BlockReport& b) {
        return nlohmann::json{{"factor", b.factor},
                              {"orthogonality_residual", b.ortho_residual},
                              {"norm_ratio_deviation", b.norm_ratio_dev},
                              {"verdict", to_string(b.verdict)}};
    };
    return {{"slice_block", block(slice_block)},
            {"perp_block", block(perp_block)},
            {"full", block(full)},
            {"tolerance", tol}};
}

ConformalityReport conformality_audit(const DifferentialMatrix& J, double tol) {
    if (J.cols() < 3) throw config_error("audit expects at least 3 columns");
    ConformalityReport r;
    r.tol = tol;
    r.slice_block = audit_block(J.leftCols(2), tol);
    r.perp_block = audit_block(J.rightCols(J.cols() - 2), tol);
    r.full = audit_block(J, tol);
    return r;
}

nlohmann::json TheoremCertificate::to_json() const {
    return {{"df_conformality_residual", df_conformality_residual},
            {"min_f2_off_axis", min_f2_off_axis},
            {"min_dyf2_on_axis", min_dyf2_on_axis},
            {"condition_a", condition_a},
            {"condition_b", condition_b},
            {"pass", pass},
            {"spot_check_residual", spot_check_residual}};
}

TheoremCertificate certify_theorem(const StemFunction& F, int samples,
                                   std::mt19937_64& rng, double tol) {
    TheoremCertificate cert;
    cert.min_f2_off_axis = std::numeric_limits<double>::infinity();
    cert.min_dyf2_on_axis = std::numeric_limits<double>::infinity();

    const double off_axis_margin = 0.1;
    for (int s = 0; s < samples; ++s) {
        const auto [x, y] = F.domain.sample(rng);

        // (a) conformality of dF as a real 2-column matrix.
        const Eigen::VectorXd u1 = flatten(F.eval_dx_f1(x, y)), u2 = flatten(F.eval_dx_f2(x, y));
        const Eigen::VectorXd v1 = flatten(F.eval_dy_f1(x, y)), v2 = flatten(F.eval_dy_f2(x, y));
        Eigen::VectorXd u(u1.size() + u2.size()), v(v1.size() + v2.size());
        u << u1, u2;
        v << v1, v2;
        const double k = (u.squaredNorm() + v.squaredNorm()) / 2.0;
        if (k > 0.0) {
            const double res = std::max(std::abs(u.squaredNorm() - v.squaredNorm()),
                                        std::abs(u.dot(v))) / k;
            cert.df_conformality_residual = std::max(cert.df_conformality_residual, res);
        }

        // (b) non-vanishing of F2 off the real axis.
        const auto [xo, yo] = F.domain.sample_off_axis(rng, off_axis_margin);
        cert.min_f2_off_axis = std::min(cert.min_f2_off_axis, value_norm(F.f2(xo, yo)));
    }
    if (F.domain.contains_real_axis) {
        for (int s = 0; s < samples; ++s) {
            const double x = F.domain.sample_real(rng);
            cert.min_dyf2_on_axis = std::min(cert.min_dyf2_on_axis,
                                             value_norm(F.eval_dy_f2(x, 0.0)));
        }
    }

    cert.condition_a = cert.df_conformality_residual <= tol;
    cert.condition_b = cert.min_f2_off_axis > tol && cert.min_dyf2_on_axis > tol;
    cert.pass = cert.condition_a && cert.condition_b;

    if (cert.pass) {
        for (int s = 0; s < 32; ++s) {
            const auto [x, y] = F.domain.sample(rng);
            std::normal_distribution<double> g(0.0, 1.0);
            HyperNum imv(F.algebra_dim);
            for (int i = 1; i < F.algebra_dim; ++i) imv[i] = g(rng);
            const double n = norm(imv);
            if (n < 1e-9) continue;
            const ImaginaryUnit I(imv * (1.0 / n));
            const SlicePoint p(x, std::abs(y), I);
            const auto rep = conformality_audit(
                jacobian_slice_analytic(F, p, complete_basis(I)), tol);
            cert.spot_check_residual =
                std::max({cert.spot_check_residual, rep.slice_block.residual(),
                          rep.perp_block.residual()});
        }
    }
    return cert;
}

} // namespace hx
