#include "hx/verify.hpp"

#include <cmath>
#include <sstream>

#include "hx/logroot.hpp"
#include "hx/manifolds.hpp"
#include "hx/sampling.hpp"

namespace hx {

namespace {

CriterionResult make_result(int id, std::string name, double residual, double tol,
                            std::string detail = {}) {
    return {id, std::move(name), residual <= tol, residual, tol, std::move(detail)};
}

SlicePoint chart_point(const ManifoldChart& chart, std::mt19937_64& rng, bool allow_axis) {
    const SymmetricDomain& d = chart.has_stem ? chart.stem.domain : SymmetricDomain::plane();
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (allow_axis && d.contains_real_axis && coin(rng) < 0.1)
        return SlicePoint(d.sample_real(rng), 0.0, random_imaginary_unit(chart.dim, rng));
    const auto [x, y] = d.sample_off_axis(rng, 0.1);
    return SlicePoint(x, std::abs(y), random_imaginary_unit(chart.dim, rng));
}

std::vector<ManifoldChart> catalog(int dim) {
    std::vector<ManifoldChart> charts;
    charts.push_back(make_sphere_chart(dim, true));
    charts.push_back(make_sphere_chart(dim, false));
    charts.push_back(make_helicoid_chart(dim));
    charts.push_back(make_catenoid_chart(dim));
    charts.push_back(make_nroot_chart(dim, 3));
    charts.push_back(make_deformation_chart(dim, 0.6));
    charts.push_back(make_log_chart(dim));
    const std::vector<HyperNum> coeffs{HyperNum::real(0.5, dim), HyperNum(dim),
                                       HyperNum::real(1.0, dim)};
    charts.push_back(make_graph_chart(polynomial_stem(coeffs, dim), "z^2"));
    return charts;
}

CriterionResult c1_algebra_laws(std::mt19937_64& rng) {
    const double tol = 1e-12;
    double worst = 0.0;
    for (int dim : {4, 8}) {
        for (int s = 0; s < 10000; ++s) {
            const HyperNum p = random_hypernum(dim, rng), q = random_hypernum(dim, rng);
            const double scale = std::max(1.0, norm(p) * norm(q));
            worst = std::max(worst, std::abs(norm(mul(p, q)) - norm(p) * norm(q)) / scale);
            worst = std::max(worst,
                             norm(conj(mul(p, q)) - mul(conj(q), conj(p))) / scale);
            if (dim == 8)
                worst = std::max(worst,
                                 norm(mul(mul(q, q), p) - mul(q, mul(q, p))) /
                                     std::max(1.0, norm_sq(q) * norm(p)));
        }
    }
    return make_result(1, "algebra laws (norm, alternativity, conjugation)", worst, tol);
}

CriterionResult c2_representation_formula(std::mt19937_64& rng) {
    const double tol = 1e-10;
    double worst = 0.0;
    std::uniform_real_distribution<double> uxy(-1.5, 1.5);
    std::uniform_int_distribution<int> udeg(1, 6);
    for (int dim : {4, 8}) {
        for (int s = 0; s < 1000; ++s) {
            const int deg = udeg(rng);
            std::vector<HyperNum> coeffs;
            for (int k = 0; k <= deg; ++k) coeffs.push_back(random_hypernum(dim, rng));
            const StemFunction F = polynomial_stem(coeffs, dim);
            const double x = uxy(rng);
            const double y = std::abs(uxy(rng)) + 0.05;
            ImaginaryUnit M = random_imaginary_unit(dim, rng);
            ImaginaryUnit N = random_imaginary_unit(dim, rng);
            while (norm(M.value() - N.value()) < 1e-3) N = random_imaginary_unit(dim, rng);
            const ImaginaryUnit L = random_imaginary_unit(dim, rng);
            const HyperNum fM = eval_slice(F, SlicePoint(x, y, M))[0];
            const HyperNum fN = eval_slice(F, SlicePoint(x, y, N))[0];
            const HyperNum predicted = representation_formula(fM, fN, M, N, L);
            const HyperNum direct = eval_slice(F, SlicePoint(x, y, L))[0];
            worst = std::max(worst, norm(predicted - direct) / std::max(1.0, norm(direct)));
        }
    }
    return make_result(2, "representation formula vs direct evaluation", worst, tol);
}

CriterionResult c3_jacobian_oracle(std::mt19937_64& rng) {
    const double tol = 1e-6;
    double worst = 0.0;
    for (int dim : {4, 8}) {
        for (const ManifoldChart& chart : catalog(dim)) {
            for (int s = 0; s < 1000; ++s) {
                const SlicePoint p = chart_point(chart, rng, true);
                const Basis basis = complete_basis(p.unit);
                const DifferentialMatrix Ja = chart.analytic_jacobian(p, basis);
                const DifferentialMatrix Jn = jacobian_numeric(chart.map, p, basis, 1e-5);
                worst = std::max(worst, (Ja - Jn).cwiseAbs().maxCoeff());
            }
        }
    }
    return make_result(3, "analytic vs central-difference Jacobians", worst, tol);
}

CriterionResult c4_paper_matrices(std::mt19937_64& rng) {
    const double tol = 1e-12;
    double worst = 0.0;
    for (int dim : {4, 8}) {
        std::vector<ManifoldChart> charts;
        charts.push_back(make_helicoid_chart(dim));
        charts.push_back(make_catenoid_chart(dim));
        charts.push_back(make_nroot_chart(dim, 3));
        for (const ManifoldChart& chart : charts) {
            for (int s = 0; s < 100; ++s) {
                const bool axis = s % 5 == 0;
                SlicePoint p = chart_point(chart, rng, false);
                if (axis) p = SlicePoint(p.x, 0.0, p.unit);
                const Basis basis = complete_basis(p.unit);
                const DifferentialMatrix Ja = chart.analytic_jacobian(p, basis);
                const DifferentialMatrix Jp = chart.closed_form_jacobian(p, basis);
                worst = std::max(worst, (Ja - Jp).cwiseAbs().maxCoeff());
            }
        }
    }
    return make_result(4, "transcribed closed-form Jacobian entries", worst, tol);
}

CriterionResult c5_sphere(std::mt19937_64& rng) {
    double worst_conf = 0.0, worst_norm = 0.0, worst_trans = 0.0;
    for (int dim : {4, 8}) {
        const ManifoldChart north = make_sphere_chart(dim, true);
        for (int s = 0; s < 500; ++s) {
            const SlicePoint p = chart_point(north, rng, true);
            const Basis basis = complete_basis(p.unit);
            const auto report = conformality_audit(north.analytic_jacobian(p, basis), 1e-10);
            const double d = 1.0 + p.x * p.x + p.y * p.y;
            const double k_expected = 4.0 / (d * d);
            worst_conf = std::max({worst_conf, report.full.residual(),
                                   std::abs(report.full.factor - k_expected) / k_expected});
            worst_norm = std::max(worst_norm, std::abs(north.map(p).norm() - 1.0));

            const HyperNum q = p.reconstruct();
            if (norm(q) > 1e-2) {
                const HyperNum via_charts = south_chart_inverse(north.map(p), p.unit);
                worst_trans = std::max(worst_trans, norm(via_charts - sphere_transition(q)));
            }
        }
    }
    std::ostringstream detail;
    detail << "conformality " << worst_conf << ", image-norm " << worst_norm
           << ", transition " << worst_trans;
    CriterionResult r = make_result(5, "sphere conformality, image norm, transition",
                                    worst_conf, 1e-10, detail.str());
    r.pass = worst_conf <= 1e-10 && worst_norm <= 1e-13 && worst_trans <= 1e-12;
    return r;
}

CriterionResult c6_theorem_certifier(std::mt19937_64& rng) {
    bool ok = true;
    std::ostringstream detail;
    for (int dim : {4, 8}) {
        for (const char* name : {"helicoid", "catenoid", "nroot", "deformation"}) {
            const ManifoldChart chart = chart_by_name(name, dim, 0.7, 3);
            const TheoremCertificate cert = certify_theorem(chart.stem, 200, rng, 1e-9);
            if (!cert.pass) {
                ok = false;
                detail << name << "/" << dim << " unexpectedly failed; ";
            }
        }
    }
    // Negative controls: the zero-F2 stem must fail condition (b) ...
    StemFunction zero2;
    zero2.algebra_dim = 4;
    zero2.arity = 1;
    zero2.domain = SymmetricDomain::plane();
    zero2.f1 = [](double x, double) { return StemValue{HyperNum::real(x, 4)}; };
    zero2.f2 = [](double, double) { return StemValue{HyperNum(4)}; };
    const TheoremCertificate zc = certify_theorem(zero2, 100, rng, 1e-9);
    if (zc.pass || zc.condition_b) {
        ok = false;
        detail << "zero-F2 stem not rejected on condition (b); ";
    }
    // ... and the psi chart must fail the perpendicular block.
    const ManifoldChart psi = make_psi_chart();
    const SlicePoint p(0.3, 1.2, ImaginaryUnit::canonical(4));
    const auto rep = conformality_audit(
        jacobian_numeric(psi.map, p, complete_basis(p.unit), 1e-6), 1e-9);
    if (rep.perp_block.verdict != Verdict::fail) {
        ok = false;
        detail << "psi perp block did not fail; ";
    }
    CriterionResult r = make_result(6, "theorem hypotheses certified, negative controls rejected",
                                    ok ? 0.0 : 1.0, 0.5, detail.str());
    return r;
}

CriterionResult c7_psi_negative_control(std::mt19937_64& rng) {
    const double tol = 1e-9;
    double worst = 0.0;
    bool all_fail = true;
    const ManifoldChart psi = make_psi_chart();
    std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(0.5, 2.0);
    const ImaginaryUnit i4 = ImaginaryUnit::canonical(4);
    for (int s = 0; s < 100; ++s) {
        const SlicePoint p(ux(rng), uy(rng), i4);
        const Basis basis = complete_basis(p.unit);
        const DifferentialMatrix J = jacobian_numeric(psi.map, p, basis, 1e-6);
        const double n3 = J.col(2).norm(), n4 = J.col(3).norm();
        worst = std::max(worst, std::abs(n3 / n4 - std::sqrt(2.0)));
        if (conformality_audit(J, tol).perp_block.verdict != Verdict::fail) all_fail = false;
    }
    CriterionResult r = make_result(7, "psi perp-block norm ratio sqrt(2) : 1", worst, tol);
    r.pass = r.pass && all_fail;
    return r;
}

CriterionResult c8_deformation_family(std::mt19937_64&) {
    const double tol = 1e-12;
    double worst = 0.0;
    const int dim = 4;
    const ImaginaryUnit I = ImaginaryUnit::canonical(dim);
    const Basis basis = complete_basis(I);
    for (int it = 0; it < 20; ++it) {
        const double theta = M_PI_2 * it / 19.0;
        const ManifoldChart chart = make_deformation_chart(dim, theta);
        for (int ix = 0; ix < 50; ++ix) {
            const double x = -2.0 + 4.0 * ix / 49.0;
            for (int iy = 0; iy < 50; ++iy) {
                const double y = -3.0 + 6.0 * iy / 49.0;
                if (std::abs(y) >= M_PI) continue;
                const SlicePoint p(x, std::abs(y), I);
                const DifferentialMatrix J = chart.analytic_jacobian(p, basis);
                worst = std::max(worst,
                                 std::abs(J.col(0).squaredNorm() - J.col(1).squaredNorm()) /
                                     std::max(1.0, J.col(0).squaredNorm()));
            }
        }
    }
    // Endpoints coincide with the embedded helicoid and catenoid.
    double endpoint = 0.0;
    const ManifoldChart h0 = make_deformation_chart(dim, 0.0);
    const ManifoldChart c1 = make_deformation_chart(dim, M_PI_2);
    for (int ix = 0; ix < 20; ++ix) {
        const double x = -2.0 + 4.0 * ix / 19.0;
        const SlicePoint p(x, 1.0, I);
        Eigen::VectorXd helic = Eigen::VectorXd::Zero(2 * dim);
        helic(0) = std::sinh(x) * std::cos(1.0);
        helic(1) = std::sinh(x) * std::sin(1.0);
        helic(dim + 1) = 1.0;  // iota y component on the unit I
        Eigen::VectorXd caten = Eigen::VectorXd::Zero(2 * dim);
        caten(0) = std::cosh(x) * std::cos(1.0);
        caten(1) = std::cosh(x) * std::sin(1.0);
        caten(dim) = x;
        endpoint = std::max(endpoint, (h0.map(p) - helic).lpNorm<Eigen::Infinity>());
        endpoint = std::max(endpoint, (c1.map(p) - caten).lpNorm<Eigen::Infinity>());
    }
    std::ostringstream detail;
    detail << "equal-norm residual " << worst << ", endpoint residual " << endpoint;
    CriterionResult r = make_result(8, "deformation family equal-norm identity and endpoints",
                                    worst, tol, detail.str());
    r.pass = r.pass && endpoint <= 1e-14;
    return r;
}

CriterionResult c9_log_root(std::mt19937_64& rng) {
    double worst_round = 0.0, worst_root = 0.0, worst_closure = 0.0;
    for (int dim : {4, 8}) {
        for (int s = 0; s < 10000; ++s) {
            const HyperNum q = random_hypernum(dim, rng);
            worst_round = std::max(worst_round, norm(L_logarithm(E_exponential(q)) - q));
            if (norm(q.im()) > 1e-6 && norm(q) > 1e-6) {
                worst_round = std::max(worst_round,
                                       norm(exp(principal_log(q)) - q) / std::max(1.0, norm(q)));
            }
        }
        for (int n = 2; n <= 7; ++n) {
            for (int s = 0; s < 200; ++s) {
                const HyperNum q = random_hypernum(dim, rng);
                if (norm(q.im()) < 1e-6 || norm(q) < 1e-6) continue;
                const HyperNum root = principal_nthroot(n, q);
                worst_root = std::max(worst_root,
                                      norm(pow_int(root, n) - q) / std::max(1.0, norm(q)));
            }
        }
    }
    for (int n = 2; n <= 5; ++n) {
        for (double r = 0.0; r <= 10.0; r += 0.5) {
            const RootPoint pt{n, HyperNum::real(r, 4), HyperNum::real(-double(n), 4)};
            const double expected = -std::pow(r, 1.0 / n);
            worst_closure = std::max(worst_closure,
                                     std::abs(R_nthroot(pt).re() - expected) /
                                         std::max(1.0, std::abs(expected)));
        }
    }
    std::ostringstream detail;
    detail << "round-trips " << worst_round << ", root identity " << worst_root
           << ", closure " << worst_closure;
    CriterionResult r = make_result(9, "log/root round trips and closure values",
                                    worst_round, 1e-12, detail.str());
    r.pass = worst_round <= 1e-12 && worst_root <= 1e-11 && worst_closure <= 4e-16;
    return r;
}

CriterionResult c10_obstruction_witness(std::mt19937_64& rng) {
    const double tol = 1e-12;
    double worst = 0.0;
    bool distinct_ok = true;
    for (int dim : {4, 8}) {
        const HyperNum x = HyperNum::real(-2.0, dim);
        const auto preimages = sample_exp_preimages(x, 4, rng);
        int distinct = 0;
        for (std::size_t a = 0; a < preimages.size(); ++a) {
            worst = std::max(worst, norm(exp(preimages[a]) - x));
            for (std::size_t b = 0; b < a; ++b)
                if (norm(preimages[a] - preimages[b]) > 1e-6) ++distinct;
        }
        if (distinct < 1) distinct_ok = false;
    }
    CriterionResult r = make_result(10, "multiple logarithm preimages over x = -2", worst, tol);
    r.pass = r.pass && distinct_ok;
    return r;
}

std::vector<CriterionResult> run_core(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CriterionResult> out;
    out.push_back(c1_algebra_laws(rng));
    out.push_back(c2_representation_formula(rng));
    out.push_back(c3_jacobian_oracle(rng));
    out.push_back(c4_paper_matrices(rng));
    out.push_back(c5_sphere(rng));
    out.push_back(c6_theorem_certifier(rng));
    out.push_back(c7_psi_negative_control(rng));
    out.push_back(c8_deformation_family(rng));
    out.push_back(c9_log_root(rng));
    out.push_back(c10_obstruction_witness(rng));
    return out;
}

nlohmann::json results_json(const std::vector<CriterionResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results)
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"residual", r.residual},
                       {"tolerance", r.tolerance},
                       {"detail", r.detail}});
    return arr;
}

} // namespace

bool VerifyReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string VerifyReport::table() const {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name
           << "  (residual " << r.residual << ", tol " << r.tolerance << ")";
        if (!r.detail.empty()) os << "  [" << r.detail << "]";
        os << "\n";
    }
    return os.str();
}

nlohmann::json VerifyReport::to_json() const {
    return {{"criteria", results_json(results)}, {"all_pass", all_pass()}};
}

VerifyReport verify_paper(std::uint64_t seed) {
    std::vector<CriterionResult> first = run_core(seed);
    const std::string bytes_a = results_json(first).dump(2);
    const std::string bytes_b = results_json(run_core(seed)).dump(2);
    CriterionResult c11{11, "determinism: identical reports for identical seeds",
                        bytes_a == bytes_b, bytes_a == bytes_b ? 0.0 : 1.0, 0.5, ""};
    first.push_back(c11);
    return VerifyReport{std::move(first)};
}

} // namespace hx
