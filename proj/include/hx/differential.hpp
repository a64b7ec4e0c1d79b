#ifndef HX_DIFFERENTIAL_HPP
#define HX_DIFFERENTIAL_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "hx/stem.hpp"

#include "json.hpp"

namespace hx {

/// Real N x dim(K) Jacobian, columns ordered (d1, dI, dI2, ...).
using DifferentialMatrix = Eigen::MatrixXd;

using AmbientMap = std::function<Eigen::VectorXd(const SlicePoint&)>;

/// The standard set of curves at p with respect to a basis (1, I, ...).
/// For y > 0: alpha, beta_I and the great-circle arcs Gamma_{I_l};
/// for y = 0: alpha, beta_I, beta_{I_l}.
struct CurveSet {
    SlicePoint base;
    Basis basis;
    std::vector<std::function<HyperNum(double)>> curves;
};

CurveSet standard_curves(const SlicePoint& p, const Basis& basis);

/// Central-difference Jacobian along the standard curves.
DifferentialMatrix jacobian_numeric(const AmbientMap& map, const SlicePoint& p,
                                    const Basis& basis, double h = 1e-5);

/// Analytic Jacobian of the slice map induced by a stem, embedded into
/// the full K^n coordinates (n * dim rows). Columns:
/// [dx F1 + I dx F2, dy F1 + I dy F2, I_2 F2 / y, ...], the y = 0 limit
/// replacing F2 / y with dy F2(x, 0).
DifferentialMatrix jacobian_slice_analytic(const StemFunction& F, const SlicePoint& p,
                                           const Basis& basis);

enum class Verdict { pass, fail, degenerate };

std::string to_string(Verdict v);

struct BlockReport {
    double factor = 0.0;          // mean squared column norm
    double ortho_residual = 0.0;  // max |G_ij| / factor, i != j
    double norm_ratio_dev = 0.0;  // max |G_ii / factor - 1|
    Verdict verdict = Verdict::fail;

    double residual() const { return std::max(ortho_residual, norm_ratio_dev); }
};

struct ConformalityReport {
    BlockReport slice_block;  // columns 1..2
    BlockReport perp_block;   // columns 3..dim
    BlockReport full;
    double tol = 0.0;

    bool slice_conformal() const {
        return slice_block.verdict != Verdict::fail && perp_block.verdict != Verdict::fail;
    }
    nlohmann::json to_json() const;
};

/// Relative block test: each Gram block must be k * I within tol, the
/// residual normalized by the block's mean squared column norm.
ConformalityReport conformality_audit(const DifferentialMatrix& J, double tol = 1e-9);

struct TheoremCertificate {
    double df_conformality_residual = 0.0;  // condition (a), worst over samples
    double min_f2_off_axis = 0.0;           // condition (b), off the real axis
    double min_dyf2_on_axis = 0.0;          // condition (b), on the real axis
    bool condition_a = false;
    bool condition_b = false;
    bool pass = false;
    double spot_check_residual = 0.0;  // slice-conformality of induced Jacobians
    nlohmann::json to_json() const;
};

/// Checks the hypotheses under which an intrinsic stem induces a slice
/// conformal curve: (a) dF conformal over domain samples, (b) F2
/// nonvanishing off the real axis and dy F2 nonvanishing on it.
/// On pass, spot-checks induced Jacobians at 32 random slice points.
TheoremCertificate certify_theorem(const StemFunction& F, int samples,
                                   std::mt19937_64& rng, double tol = 1e-9);

} // namespace hx

#endif
