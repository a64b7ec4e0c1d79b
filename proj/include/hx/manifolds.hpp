#ifndef HX_MANIFOLDS_HPP
#define HX_MANIFOLDS_HPP

#include "hx/differential.hpp"

namespace hx {

/// A catalog chart: a stem-backed parameterization of an ambient
/// manifold together with the conformality class it is expected to
/// pass and, where the closed form is known, the transcribed Jacobian.
struct ManifoldChart {
    std::string name;
    int dim = 4;
    int ambient = 0;
    std::string conformality_class;  // "slice" or "full"
    bool has_stem = true;
    StemFunction stem;
    std::vector<int> coord_mask;  // rows of the flattened K^n coordinates kept
    AmbientMap map;
    std::function<DifferentialMatrix(const SlicePoint&, const Basis&)> closed_form_jacobian;

    /// Stem-based analytic Jacobian restricted to the ambient rows.
    DifferentialMatrix analytic_jacobian(const SlicePoint& p, const Basis& basis) const;
};

ManifoldChart make_sphere_chart(int dim, bool north);
ManifoldChart make_helicoid_chart(int dim);
ManifoldChart make_catenoid_chart(int dim);
ManifoldChart make_nroot_chart(int dim, int n);
ManifoldChart make_deformation_chart(int dim, double theta);
ManifoldChart make_log_chart(int dim);  // helicoid restricted to x > 0
ManifoldChart make_psi_chart();         // dim 4 counterexample, map only
/// Graph chart q -> (q, f(q)) of the slice function induced by f.
ManifoldChart make_graph_chart(const StemFunction& f, const std::string& label);

/// Builtin registry: sphere-north, sphere-south, helicoid, catenoid,
/// deformation, nroot, log, psi. Graph charts are built by the caller.
ManifoldChart chart_by_name(const std::string& name, int dim, double theta = 0.0, int n = 2);
std::vector<std::string> chart_names();

Eigen::VectorXd param_sphere(bool north, const SlicePoint& p);
/// Inverse of the south chart, defined off the south pole.
HyperNum south_chart_inverse(const Eigen::VectorXd& point, const ImaginaryUnit& fallback);
/// Atlas transition south^{-1} o north = 1/q.
HyperNum sphere_transition(const HyperNum& q);

Eigen::VectorXd param_helicoid(const SlicePoint& p);
Eigen::VectorXd param_catenoid(const SlicePoint& p);
Eigen::VectorXd param_deformation(double theta, const SlicePoint& p);

/// The odd sphere map psi(ai + bj + ck) = (a^3 i + b j + c^3 k) / |...|.
HyperNum psi_unit(const HyperNum& imaginary);
Eigen::VectorXd psi_map(const SlicePoint& p);

} // namespace hx

#endif
