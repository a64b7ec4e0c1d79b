#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hx/expr.hpp"
#include "hx/logroot.hpp"
#include "hx/manifolds.hpp"
#include "hx/sampling.hpp"
#include "hx/verify.hpp"

namespace {

using nlohmann::json;

struct ChartOptions {
    std::string chart;
    std::string expr;
    std::string pole;
    int dim = 4;
    double theta = 0.0;
    int n = 2;
};

hx::ManifoldChart resolve_chart(const ChartOptions& opt) {
    if (!opt.expr.empty()) {
        const hx::StemExpr e = hx::parse_stem_expr(opt.expr);
        hx::ManifoldChart c;
        c.name = "expr:" + opt.expr;
        c.dim = opt.dim;
        c.conformality_class = "slice";
        c.stem = e.to_stem(opt.dim);
        c.ambient = c.stem.arity * opt.dim;
        for (int i = 0; i < c.ambient; ++i) c.coord_mask.push_back(i);
        const hx::StemFunction stem = c.stem;
        const std::vector<int> mask = c.coord_mask;
        c.map = [stem, mask](const hx::SlicePoint& p) {
            const hx::StemValue v = eval_slice(stem, p);
            Eigen::VectorXd out(static_cast<int>(mask.size()));
            const int dim = v[0].dim();
            for (std::size_t r = 0; r < mask.size(); ++r)
                out(static_cast<int>(r)) = v[static_cast<std::size_t>(mask[r] / dim)][mask[r] % dim];
            return out;
        };
        return c;
    }
    if (opt.chart.rfind("graph:", 0) == 0) {
        const std::string inner = opt.chart.substr(6);
        return hx::make_graph_chart(hx::parse_stem_expr(inner).to_stem(opt.dim), inner);
    }
    std::string name = opt.chart;
    if (name == "sphere") name += "-" + (opt.pole.empty() ? "north" : opt.pole);
    return hx::chart_by_name(name, opt.dim, opt.theta, opt.n);
}

std::vector<hx::SlicePoint> sample_points(const hx::ManifoldChart& chart, int count,
                                          const std::string& grid, std::uint64_t seed) {
    std::vector<hx::SlicePoint> pts;
    const hx::SymmetricDomain dom =
        chart.has_stem ? chart.stem.domain : hx::SymmetricDomain::plane();
    if (!grid.empty()) {
        int a = 0, b = 0;
        char x = 0;
        std::istringstream is(grid);
        if (!(is >> a >> x >> b) || x != 'x' || a < 1 || b < 1)
            throw hx::config_error("grid must be AxB with positive counts");
        const hx::ImaginaryUnit I = hx::ImaginaryUnit::canonical(chart.dim);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) {
                const double xx = dom.x_min + (dom.x_max - dom.x_min) * (a == 1 ? 0.5 : double(i) / (a - 1));
                const double yy = dom.y_min + (dom.y_max - dom.y_min) * (b == 1 ? 0.5 : double(j) / (b - 1));
                if (dom.contains(xx, yy)) pts.emplace_back(xx, std::abs(yy), I);
            }
        return pts;
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const auto [x, y] = dom.sample(rng);
        pts.emplace_back(x, std::abs(y), hx::random_imaginary_unit(chart.dim, rng));
    }
    return pts;
}

json point_json(const hx::SlicePoint& p) {
    json unit = json::array();
    for (int i = 1; i < p.unit.dim(); ++i) unit.push_back(p.unit.value()[i]);
    return {{"x", p.x}, {"y", p.y}, {"unit", unit}};
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hx::config_error("cannot open output file '" + path + "'");
    out << bytes;
}

int cmd_sample(const ChartOptions& copt, int points, const std::string& grid,
               std::uint64_t seed, bool with_jacobian, const std::string& format,
               const std::string& out_path) {
    const hx::ManifoldChart chart = resolve_chart(copt);
    const auto pts = sample_points(chart, points, grid, seed);
    if (format == "json") {
        json arr = json::array();
        for (const auto& p : pts) {
            json rec = point_json(p);
            const Eigen::VectorXd v = chart.map(p);
            rec["value"] = std::vector<double>(v.data(), v.data() + v.size());
            if (with_jacobian) {
                const hx::DifferentialMatrix J =
                    chart.has_stem
                        ? chart.analytic_jacobian(p, hx::complete_basis(p.unit))
                        : hx::jacobian_numeric(chart.map, p, hx::complete_basis(p.unit));
                json rows = json::array();
                for (int r = 0; r < J.rows(); ++r) {
                    json row = json::array();
                    for (int c = 0; c < J.cols(); ++c) row.push_back(J(r, c));
                    rows.push_back(row);
                }
                rec["jacobian"] = rows;
            }
            arr.push_back(rec);
        }
        write_output(out_path, arr.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os.precision(17);
        for (const auto& p : pts) {
            os << p.x << "," << p.y;
            for (int i = 1; i < p.unit.dim(); ++i) os << "," << p.unit.value()[i];
            const Eigen::VectorXd v = chart.map(p);
            for (int i = 0; i < v.size(); ++i) os << "," << v(i);
            os << "\n";
        }
        write_output(out_path, os.str());
    }
    return 0;
}

int cmd_audit(const ChartOptions& copt, int points, std::uint64_t seed, double tol,
              const std::string& out_path) {
    const hx::ManifoldChart chart = resolve_chart(copt);
    const auto pts = sample_points(chart, points, "", seed);
    hx::ConformalityReport worst;
    double worst_res = -1.0;
    bool ok = true;
    for (const auto& p : pts) {
        const hx::DifferentialMatrix J =
            chart.has_stem ? chart.analytic_jacobian(p, hx::complete_basis(p.unit))
                           : hx::jacobian_numeric(chart.map, p, hx::complete_basis(p.unit), 1e-6);
        const hx::ConformalityReport rep = hx::conformality_audit(J, tol);
        const bool point_ok = chart.conformality_class == "full"
                                  ? rep.full.verdict == hx::Verdict::pass
                                  : rep.slice_conformal();
        ok = ok && point_ok;
        const double res = std::max(rep.slice_block.residual(),
                                    std::max(rep.perp_block.residual(), rep.full.residual()));
        if (res > worst_res) {
            worst_res = res;
            worst = rep;
        }
    }
    json rep = worst.to_json();
    rep["chart"] = chart.name;
    rep["expected_class"] = chart.conformality_class;
    rep["points"] = static_cast<int>(pts.size());
    rep["verdict"] = ok ? "pass" : "fail";
    write_output(out_path, rep.dump(2) + "\n");
    return ok ? 0 : 1;
}

int cmd_certify(const ChartOptions& copt, int samples, std::uint64_t seed, double tol,
                const std::string& out_path) {
    const hx::ManifoldChart chart = resolve_chart(copt);
    if (!chart.has_stem) throw hx::config_error("certify requires a stem-backed chart");
    std::mt19937_64 rng(seed);
    const hx::TheoremCertificate cert = hx::certify_theorem(chart.stem, samples, rng, tol);
    json out = cert.to_json();
    out["chart"] = chart.name;
    write_output(out_path, out.dump(2) + "\n");
    return cert.pass ? 0 : 1;
}

int cmd_transition(int dim, int points, std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        hx::SlicePoint p = hx::random_slice_point(dim, rng, -2.0, 2.0, 0.05, 2.0);
        const hx::HyperNum q = p.reconstruct();
        const hx::HyperNum t = hx::south_chart_inverse(hx::param_sphere(true, p), p.unit);
        worst = std::max(worst,
                         hx::norm(hx::mul(t, q) - hx::HyperNum::real(1.0, dim)));
    }
    std::cout << "max |south^-1(north(q)) * q - 1| = " << worst << "\n";
    return worst <= tol ? 0 : 1;
}

std::vector<hx::HyperNum> read_stdin_points(int dim) {
    std::vector<hx::HyperNum> out;
    std::string line;
    while (std::getline(std::cin, line)) {
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream is(line);
        std::vector<double> vals;
        double v = 0.0;
        while (is >> v) vals.push_back(v);
        if (vals.empty()) continue;
        if (static_cast<int>(vals.size()) != dim)
            throw hx::config_error("expected " + std::to_string(dim) + " coefficients per line");
        out.emplace_back(dim, vals);
    }
    return out;
}

int cmd_log(int dim) {
    for (const hx::HyperNum& q : read_stdin_points(dim)) {
        const hx::HyperNum w = hx::principal_log(q);
        json arr = json::array();
        for (double c : w.coeffs()) arr.push_back(c);
        std::cout << arr.dump() << "\n";
    }
    return 0;
}

int cmd_root(int dim, int n) {
    for (const hx::HyperNum& q : read_stdin_points(dim)) {
        const hx::HyperNum w = hx::principal_nthroot(n, q);
        json arr = json::array();
        for (double c : w.coeffs()) arr.push_back(c);
        std::cout << arr.dump() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercomplex slice-conformality toolkit"};
    app.require_subcommand(1);

    ChartOptions copt;
    int points = 100;
    int samples = 200;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string format = "json";
    std::string out_path;
    std::string grid;
    bool with_jacobian = false;

    auto add_chart_opts = [&](CLI::App* sub, bool expr_ok = true) {
        sub->add_option("--chart", copt.chart, "chart name (see registry)");
        if (expr_ok) sub->add_option("--expr", copt.expr, "stem expression");
        sub->add_option("--dim", copt.dim, "algebra dimension (4 or 8)")
            ->check(CLI::IsMember({4, 8}));
        sub->add_option("--pole", copt.pole, "sphere chart pole")
            ->check(CLI::IsMember({"north", "south"}));
        sub->add_option("--theta", copt.theta, "deformation parameter");
        sub->add_option("--n", copt.n, "root index");
        sub->add_option("--seed", seed, "random seed");
    };

    auto* sample = app.add_subcommand("sample", "sample points and values of a chart");
    add_chart_opts(sample);
    sample->add_option("--points", points, "number of random points");
    sample->add_option("--grid", grid, "grid AxB instead of random sampling");
    sample->add_flag("--jacobian", with_jacobian, "include Jacobians");
    sample->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    sample->add_option("--out", out_path, "output path (default stdout)");

    auto* audit = app.add_subcommand("audit", "conformality audit of a chart");
    add_chart_opts(audit);
    audit->add_option("--points", points, "number of random points");
    audit->add_option("--tol", tol, "relative block tolerance");
    audit->add_option("--out", out_path, "report path (default stdout)");

    auto* certify = app.add_subcommand("certify", "check the slice-conformality hypotheses");
    add_chart_opts(certify);
    certify->add_option("--samples", samples, "domain samples");
    certify->add_option("--tol", tol, "tolerance");
    certify->add_option("--out", out_path, "certificate path (default stdout)");

    auto* transition = app.add_subcommand("transition", "verify the sphere atlas transition map");
    int tdim = 4;
    int tpoints = 500;
    double ttol = 1e-11;
    transition->add_option("--chart", copt.chart)->check(CLI::IsMember({"sphere"}));
    transition->add_option("--dim", tdim)->check(CLI::IsMember({4, 8}));
    transition->add_option("--points", tpoints);
    transition->add_option("--seed", seed);
    transition->add_option("--tol", ttol);

    auto* logc = app.add_subcommand("log", "principal logarithm of stdin points");
    int ldim = 4;
    logc->add_option("--dim", ldim)->check(CLI::IsMember({4, 8}));

    auto* rootc = app.add_subcommand("root", "principal n-th root of stdin points");
    int rdim = 4;
    int rn = 2;
    rootc->add_option("--dim", rdim)->check(CLI::IsMember({4, 8}));
    rootc->add_option("--n", rn)->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify-paper", "run the full identity battery");
    verify->add_option("--seed", seed);
    verify->add_option("--out", out_path, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sample->parsed())
            return cmd_sample(copt, points, grid, seed, with_jacobian, format, out_path);
        if (audit->parsed()) return cmd_audit(copt, points, seed, tol, out_path);
        if (certify->parsed()) return cmd_certify(copt, samples, seed, tol, out_path);
        if (transition->parsed()) return cmd_transition(tdim, tpoints, seed, ttol);
        if (logc->parsed()) return cmd_log(ldim);
        if (rootc->parsed()) return cmd_root(rdim, rn);
        if (verify->parsed()) {
            const hx::VerifyReport report = hx::verify_paper(seed);
            std::cout << report.table();
            if (!out_path.empty()) write_output(out_path, report.to_json().dump(2) + "\n");
            return report.all_pass() ? 0 : 1;
        }
    } catch (const hx::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const hx::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const hx::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
