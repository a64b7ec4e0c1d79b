#include "hx/manifolds.hpp"

#include <cmath>

namespace hx {

namespace {

double sinc(double y) {
    if (std::abs(y) < 1e-4) {
        const double y2 = y * y;
        return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
    }
    return std::sin(y) / y;
}

using Scalar2 = std::function<double(double, double)>;

// Builds a real-valued stem from per-component scalar evaluators and
// their analytic partials. Components are widened to the algebra dim.
StemFunction real_stem(int dim, std::vector<std::array<Scalar2, 6>> comps) {
    // order per component: f1, f2, dx f1, dy f1, dx f2, dy f2
    StemFunction F;
    F.algebra_dim = dim;
    F.real_valued = true;
    F.arity = static_cast<int>(comps.size());
    auto make = [dim, comps](int slot) {
        return [dim, comps, slot](double x, double y) {
            StemValue v;
            v.reserve(comps.size());
            for (const auto& c : comps)
                v.push_back(HyperNum::real(c[static_cast<std::size_t>(slot)](x, y), dim));
            return v;
        };
    };
    F.f1 = make(0);
    F.f2 = make(1);
    F.dx_f1 = make(2);
    F.dy_f1 = make(3);
    F.dx_f2 = make(4);
    F.dy_f2 = make(5);
    return F;
}

std::vector<int> iota_mask(int count, int offset = 0) {
    std::vector<int> m(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) m[static_cast<std::size_t>(i)] = offset + i;
    return m;
}

Eigen::VectorXd embed(const StemValue& v, const std::vector<int>& mask) {
    const int dim = v[0].dim();
    Eigen::VectorXd full(static_cast<int>(v.size()) * dim);
    for (std::size_t c = 0; c < v.size(); ++c)
        for (int i = 0; i < dim; ++i) full(static_cast<int>(c) * dim + i) = v[c][i];
    Eigen::VectorXd out(static_cast<int>(mask.size()));
    for (std::size_t r = 0; r < mask.size(); ++r) out(static_cast<int>(r)) = full(mask[r]);
    return out;
}

AmbientMap stem_map(const StemFunction& stem, std::vector<int> mask) {
    return [stem, mask = std::move(mask)](const SlicePoint& p) {
        return embed(eval_slice(stem, p), mask);
    };
}

// Writes coeff * unit into rows [offset, offset+dim) of a column.
void add_block(Eigen::VectorXd& col, int offset, const HyperNum& v) {
    for (int i = 0; i < v.dim(); ++i) col(offset + i) += v[i];
}

} // namespace

DifferentialMatrix ManifoldChart::analytic_jacobian(const SlicePoint& p, const Basis& basis) const {
    if (!has_stem)
        throw config_error("chart '" + name + "' has no stem; use jacobian_numeric");
    const DifferentialMatrix full = jacobian_slice_analytic(stem, p, basis);
    DifferentialMatrix J(static_cast<int>(coord_mask.size()), full.cols());
    for (std::size_t r = 0; r < coord_mask.size(); ++r) J.row(static_cast<int>(r)) = full.row(coord_mask[r]);
    return J;
}

ManifoldChart make_sphere_chart(int dim, bool north) {
    const double sy = north ? 1.0 : -1.0;  // sign of the I-component
    const double sh = north ? 1.0 : -1.0;  // sign of the height component
    auto d = [](double x, double y) { return 1.0 + x * x + y * y; };
    std::vector<std::array<Scalar2, 6>> comps{
        {Scalar2{[d](double x, double y) { return 2.0 * x / d(x, y); }},
         [d, sy](double x, double y) { return sy * 2.0 * y / d(x, y); },
         [d](double x, double y) { const double dd = d(x, y); return 2.0 * (1.0 - x * x + y * y) / (dd * dd); },
         [d](double x, double y) { const double dd = d(x, y); return -4.0 * x * y / (dd * dd); },
         [d, sy](double x, double y) { const double dd = d(x, y); return sy * -4.0 * x * y / (dd * dd); },
         [d, sy](double x, double y) { const double dd = d(x, y); return sy * 2.0 * (1.0 + x * x - y * y) / (dd * dd); }},
        {Scalar2{[d, sh](double x, double y) { return sh * (-1.0 + x * x + y * y) / d(x, y); }},
         [](double, double) { return 0.0; },
         [d, sh](double x, double y) { const double dd = d(x, y); return sh * 4.0 * x / (dd * dd); },
         [d, sh](double x, double y) { const double dd = d(x, y); return sh * 4.0 * y / (dd * dd); },
         [](double, double) { return 0.0; },
         [](double, double) { return 0.0; }}};

    ManifoldChart c;
    c.name = north ? "sphere-north" : "sphere-south";
    c.dim = dim;
    c.ambient = dim + 1;
    c.conformality_class = "full";
    c.stem = real_stem(dim, std::move(comps));
    c.stem.domain = SymmetricDomain::plane(-3.0, 3.0, -3.0, 3.0);
    c.coord_mask = iota_mask(dim);
    c.coord_mask.push_back(dim);
    c.map = stem_map(c.stem, c.coord_mask);
    return c;
}

ManifoldChart make_helicoid_chart(int dim) {
    std::vector<std::array<Scalar2, 6>> comps{
        {Scalar2{[](double x, double y) { return std::sinh(x) * std::cos(y); }},
         [](double x, double y) { return std::sinh(x) * std::sin(y); },
         [](double x, double y) { return std::cosh(x) * std::cos(y); },
         [](double x, double y) { return -std::sinh(x) * std::sin(y); },
         [](double x, double y) { return std::cosh(x) * std::sin(y); },
         [](double x, double y) { return std::sinh(x) * std::cos(y); }},
        {Scalar2{[](double, double) { return 0.0; }},
         [](double, double y) { return y; },
         [](double, double) { return 0.0; },
         [](double, double) { return 0.0; },
         [](double, double) { return 0.0; },
         [](double, double) { return 1.0; }}};

    ManifoldChart c;
    c.name = "helicoid";
    c.dim = dim;
    c.ambient = 2 * dim - 1;  // K x Im(K)
    c.conformality_class = "slice";
    c.stem = real_stem(dim, std::move(comps));
    c.stem.domain = SymmetricDomain::plane(-2.0, 2.0, -3.0, 3.0);
    c.coord_mask = iota_mask(dim);
    for (int i = dim + 1; i < 2 * dim; ++i) c.coord_mask.push_back(i);
    c.map = stem_map(c.stem, c.coord_mask);

    c.closed_form_jacobian = [dim](const SlicePoint& p, const Basis& b) {
        const double x = p.x, y = p.y;
        DifferentialMatrix J = DifferentialMatrix::Zero(2 * dim - 1, dim);
        auto col = [&](int l) { return J.col(l); };
        Eigen::VectorXd c0 = Eigen::VectorXd::Zero(2 * dim - 1);
        add_block(c0, 0, b.units[0] * (std::cosh(x) * std::cos(y)) +
                             b.units[1] * (std::cosh(x) * std::sin(y)));
        col(0) = c0;
        Eigen::VectorXd c1 = Eigen::VectorXd::Zero(2 * dim - 1);
        add_block(c1, 0, b.units[0] * (-std::sinh(x) * std::sin(y)) +
                             b.units[1] * (std::sinh(x) * std::cos(y)));
        for (int i = 1; i < dim; ++i) c1(dim - 1 + i) += b.units[1][i];
        col(1) = c1;
        const double s = std::sinh(x) * sinc(y);
        for (int l = 2; l < dim; ++l) {
            Eigen::VectorXd cl = Eigen::VectorXd::Zero(2 * dim - 1);
            add_block(cl, 0, b.units[static_cast<std::size_t>(l)] * s);
            for (int i = 1; i < dim; ++i) cl(dim - 1 + i) += b.units[static_cast<std::size_t>(l)][i];
            col(l) = cl;
        }
        return J;
    };
    return c;
}

ManifoldChart make_catenoid_chart(int dim) {
    std::vector<std::array<Scalar2, 6>> comps{
        {Scalar2{[](double x, double y) { return std::cosh(x) * std::cos(y); }},
         [](double x, double y) { return std::cosh(x) * std::sin(y); },
         [](double x, double y) { return std::sinh(x) * std::cos(y); },
         [](double x, double y) { return -std::cosh(x) * std::sin(y); },
         [](double x, double y) { return std::sinh(x) * std::sin(y); },
         [](double x, double y) { return std::cosh(x) * std::cos(y); }},
        {Scalar2{[](double x, double) { return x; }},
         [](double, double) { return 0.0; },
         [](double, double) { return 1.0; },
         [](double, double) { return 0.0; },
         [](double, double) { return 0.0; },
         [](double, double) { return 0.0; }}};

    ManifoldChart c;
    c.name = "catenoid";
    c.dim = dim;
    c.ambient = dim + 1;  // K x R
    c.conformality_class = "slice";
    c.stem = real_stem(dim, std::move(comps));
    c.stem.domain = SymmetricDomain::strip(M_PI);
    c.coord_mask = iota_mask(dim);
    c.coord_mask.push_back(dim);
    c.map = stem_map(c.stem, c.coord_mask);

    c.closed_form_jacobian = [dim](const SlicePoint& p, const Basis& b) {
        const double x = p.x, y = p.y;
        DifferentialMatrix J = DifferentialMatrix::Zero(dim + 1, dim);
        Eigen::VectorXd c0 = Eigen::VectorXd::Zero(dim + 1);
        add_block(c0, 0, b.units[0] * (std::sinh(x) * std::cos(y)) +
                             b.units[1] * (std::sinh(x) * std::sin(y)));
        c0(dim) = 1.0;
        J.col(0) = c0;
        Eigen::VectorXd c1 = Eigen::VectorXd::Zero(dim + 1);
        add_block(c1, 0, b.units[0] * (-std::cosh(x) * std::sin(y)) +
                             b.units[1] * (std::cosh(x) * std::cos(y)));
        J.col(1) = c1;
        const double s = std::cosh(x) * sinc(y);
        for (int l = 2; l < dim; ++l) {
            Eigen::VectorXd cl = Eigen::VectorXd::Zero(dim + 1);
            add_block(cl, 0, b.units[static_cast<std::size_t>(l)] * s);
            J.col(l) = cl;
        }
        return J;
    };
    return c;
}

ManifoldChart make_nroot_chart(int dim, int n) {
    if (n <= 1) throw config_error("n-th root chart requires n > 1");
    const double dn = static_cast<double>(n);
    std::vector<std::array<Scalar2, 6>> comps{
        {Scalar2{[](double x, double y) { return std::sinh(x) * std::cos(y); }},
         [](double x, double y) { return std::sinh(x) * std::sin(y); },
         [](double x, double y) { return std::cosh(x) * std::cos(y); },
         [](double x, double y) { return -std::sinh(x) * std::sin(y); },
         [](double x, double y) { return std::cosh(x) * std::sin(y); },
         [](double x, double y) { return std::sinh(x) * std::cos(y); }},
        {Scalar2{[dn](double, double y) { return dn * std::cos(y / dn); }},
         [dn](double, double y) { return dn * std::sin(y / dn); },
         [](double, double) { return 0.0; },
         [dn](double, double y) { return -std::sin(y / dn); },
         [](double, double) { return 0.0; },
         [dn](double, double y) { return std::cos(y / dn); }}};

    ManifoldChart c;
    c.name = "nroot";
    c.dim = dim;
    c.ambient = 2 * dim;  // K x K
    c.conformality_class = "slice";
    c.stem = real_stem(dim, std::move(comps));
    c.stem.domain = SymmetricDomain::strip(M_PI * dn, -2.0, 2.0);
    c.coord_mask = iota_mask(2 * dim);
    c.map = stem_map(c.stem, c.coord_mask);

    c.closed_form_jacobian = [dim, dn](const SlicePoint& p, const Basis& b) {
        const double x = p.x, y = p.y;
        DifferentialMatrix J = DifferentialMatrix::Zero(2 * dim, dim);
        Eigen::VectorXd c0 = Eigen::VectorXd::Zero(2 * dim);
        add_block(c0, 0, b.units[0] * (std::cosh(x) * std::cos(y)) +
                             b.units[1] * (std::cosh(x) * std::sin(y)));
        J.col(0) = c0;
        Eigen::VectorXd c1 = Eigen::VectorXd::Zero(2 * dim);
        add_block(c1, 0, b.units[0] * (-std::sinh(x) * std::sin(y)) +
                             b.units[1] * (std::sinh(x) * std::cos(y)));
        add_block(c1, dim, b.units[0] * (-std::sin(y / dn)) + b.units[1] * std::cos(y / dn));
        J.col(1) = c1;
        const double s1 = std::sinh(x) * sinc(y);
        const double root_block = sinc(y / dn);  // n sin(y/n) / y
        for (int l = 2; l < dim; ++l) {
            Eigen::VectorXd cl = Eigen::VectorXd::Zero(2 * dim);
            add_block(cl, 0, b.units[static_cast<std::size_t>(l)] * s1);
            add_block(cl, dim, b.units[static_cast<std::size_t>(l)] * root_block);
            J.col(l) = cl;
        }
        return J;
    };
    return c;
}

ManifoldChart make_deformation_chart(int dim, double theta) {
    if (theta < 0.0 || theta > M_PI_2)
        throw config_error("deformation parameter must lie in [0, pi/2]");
    const double ct = std::cos(theta), st = std::sin(theta);
    auto s = [ct, st](double x) { return std::sinh(x) * ct + std::cosh(x) * st; };
    auto a = [ct, st](double x) { return std::cosh(x) * ct + std::sinh(x) * st; };
    std::vector<std::array<Scalar2, 6>> comps{
        {Scalar2{[s](double x, double y) { return s(x) * std::cos(y); }},
         [s](double x, double y) { return s(x) * std::sin(y); },
         [a](double x, double y) { return a(x) * std::cos(y); },
         [s](double x, double y) { return -s(x) * std::sin(y); },
         [a](double x, double y) { return a(x) * std::sin(y); },
         [s](double x, double y) { return s(x) * std::cos(y); }},
        {Scalar2{[st](double x, double) { return x * st; }},
         [ct](double, double y) { return y * ct; },
         [st](double, double) { return st; },
         [](double, double) { return 0.0; },
         [](double, double) { return 0.0; },
         [ct](double, double) { return ct; }}};

    ManifoldChart c;
    c.name = "deformation";
    c.dim = dim;
    c.ambient = 2 * dim;
    c.conformality_class = "slice";
    c.stem = real_stem(dim, std::move(comps));
    c.stem.domain = SymmetricDomain::strip(M_PI);
    c.coord_mask = iota_mask(2 * dim);
    c.map = stem_map(c.stem, c.coord_mask);
    return c;
}

ManifoldChart make_log_chart(int dim) {
    ManifoldChart c = make_helicoid_chart(dim);
    c.name = "log";
    SymmetricDomain d = c.stem.domain;
    d.contains = [](double x, double) { return x > 0.0; };
    d.x_min = 0.05;
    c.stem.domain = d;
    c.map = stem_map(c.stem, c.coord_mask);
    return c;
}

ManifoldChart make_psi_chart() {
    ManifoldChart c;
    c.name = "psi";
    c.dim = 4;
    c.ambient = 8;
    c.conformality_class = "slice";
    c.has_stem = false;
    c.map = [](const SlicePoint& p) { return psi_map(p); };
    return c;
}

ManifoldChart make_graph_chart(const StemFunction& f, const std::string& label) {
    StemFunction g;
    g.algebra_dim = f.algebra_dim;
    g.real_valued = f.real_valued;
    g.arity = f.arity + 1;
    g.domain = f.domain;
    const int dim = f.algebra_dim;

    auto prepend = [dim](double head, StemValue tail) {
        StemValue v;
        v.reserve(tail.size() + 1);
        v.push_back(HyperNum::real(head, dim));
        for (auto& t : tail) v.push_back(std::move(t));
        return v;
    };
    g.f1 = [f, prepend](double x, double y) { return prepend(x, f.f1(x, y)); };
    g.f2 = [f, prepend](double x, double y) { return prepend(y, f.f2(x, y)); };
    if (f.has_partials()) {
        g.dx_f1 = [f, prepend](double x, double y) { return prepend(1.0, f.dx_f1(x, y)); };
        g.dy_f1 = [f, prepend](double x, double y) { return prepend(0.0, f.dy_f1(x, y)); };
        g.dx_f2 = [f, prepend](double x, double y) { return prepend(0.0, f.dx_f2(x, y)); };
        g.dy_f2 = [f, prepend](double x, double y) { return prepend(1.0, f.dy_f2(x, y)); };
    }

    ManifoldChart c;
    c.name = "graph:" + label;
    c.dim = dim;
    c.ambient = g.arity * dim;
    c.conformality_class = "slice";
    c.stem = std::move(g);
    c.coord_mask = iota_mask(c.ambient);
    c.map = stem_map(c.stem, c.coord_mask);
    return c;
}

ManifoldChart chart_by_name(const std::string& name, int dim, double theta, int n) {
    if (name == "sphere-north") return make_sphere_chart(dim, true);
    if (name == "sphere-south") return make_sphere_chart(dim, false);
    if (name == "helicoid") return make_helicoid_chart(dim);
    if (name == "catenoid") return make_catenoid_chart(dim);
    if (name == "nroot") return make_nroot_chart(dim, n);
    if (name == "deformation") return make_deformation_chart(dim, theta);
    if (name == "log") return make_log_chart(dim);
    if (name == "psi") {
        if (dim != 4) throw config_error("psi chart is quaternionic only");
        return make_psi_chart();
    }
    throw config_error("unknown chart '" + name + "'");
}

std::vector<std::string> chart_names() {
    return {"sphere-north", "sphere-south", "helicoid", "catenoid",
            "deformation", "nroot", "log", "psi"};
}

Eigen::VectorXd param_sphere(bool north, const SlicePoint& p) {
    return make_sphere_chart(p.unit.dim(), north).map(p);
}

HyperNum south_chart_inverse(const Eigen::VectorXd& point, const ImaginaryUnit& fallback) {
    const int dim = fallback.dim();
    if (point.size() != dim + 1) throw config_error("sphere point has wrong dimension");
    const double w = point(dim);
    if (std::abs(1.0 + w) < 1e-14) throw domain_error("south chart undefined at the south pole");
    HyperNum u(dim);
    for (int i = 0; i < dim; ++i) u[i] = point(i);
    return conj(u) * (1.0 / (1.0 + w));
}

HyperNum sphere_transition(const HyperNum& q) {
    if (norm_sq(q) == 0.0) throw domain_error("sphere transition undefined at 0");
    return inv(q);
}

Eigen::VectorXd param_helicoid(const SlicePoint& p) {
    return make_helicoid_chart(p.unit.dim()).map(p);
}

Eigen::VectorXd param_catenoid(const SlicePoint& p) {
    if (std::abs(p.y) >= M_PI) throw domain_error("catenoid parameter requires |y| < pi");
    return make_catenoid_chart(p.unit.dim()).map(p);
}

Eigen::VectorXd param_deformation(double theta, const SlicePoint& p) {
    if (std::abs(p.y) >= M_PI) throw domain_error("deformation parameter requires |y| < pi");
    return make_deformation_chart(p.unit.dim(), theta).map(p);
}

HyperNum psi_unit(const HyperNum& imaginary) {
    if (imaginary.dim() != 4) throw algebra_error("psi is defined on quaternions");
    const double a = imaginary[1], b = imaginary[2], g = imaginary[3];
    const double den = std::sqrt(std::pow(a, 6) + b * b + std::pow(g, 6));
    if (den == 0.0) throw algebra_error("psi undefined at zero imaginary part");
    HyperNum r(4);
    r[1] = a * a * a / den;
    r[2] = b / den;
    r[3] = g * g * g / den;
    return r;
}

Eigen::VectorXd psi_map(const SlicePoint& p) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(8);
    const HyperNum q1 = p.reconstruct();
    for (int i = 0; i < 4; ++i) out(i) = q1[i];
    out(4) = p.x;
    if (p.y > 0.0) {
        const HyperNum s = psi_unit(p.unit.value()) * p.y;
        for (int i = 1; i < 4; ++i) out(4 + i) = s[i];
    }
    return out;
}

} // namespace hx
