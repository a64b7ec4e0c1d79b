#ifndef HX_ALGEBRA_HPP
#define HX_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hx/errors.hpp"

namespace hx {

/// An element of R (dim 1), H (dim 4) or O (dim 8), stored as real
/// coefficients over the ordered basis (e0 = 1, e1, ..., e_{dim-1}).
class HyperNum {
public:
    HyperNum() = default;
    explicit HyperNum(int dim) : dim_(check_dim(dim)) {}
    HyperNum(int dim, std::span<const double> coeffs);

    static HyperNum real(double value, int dim = 1);
    /// The basis unit e_index in the given dimension.
    static HyperNum unit(int dim, int index);

    int dim() const { return dim_; }
    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    double re() const { return c_[0]; }
    /// Imaginary part as a HyperNum (real coefficient zeroed).
    HyperNum im() const;

    std::vector<double> coeffs() const { return {c_.begin(), c_.begin() + dim_}; }

    HyperNum& operator+=(const HyperNum& rhs);
    HyperNum& operator-=(const HyperNum& rhs);
    HyperNum& operator*=(double s);

    friend HyperNum operator+(HyperNum a, const HyperNum& b) { return a += b; }
    friend HyperNum operator-(HyperNum a, const HyperNum& b) { return a -= b; }
    friend HyperNum operator*(HyperNum a, double s) { return a *= s; }
    friend HyperNum operator*(double s, HyperNum a) { return a *= s; }
    friend HyperNum operator-(HyperNum a) { return a *= -1.0; }

    std::string str() const;

private:
    static int check_dim(int dim);

    int dim_ = 1;
    std::array<double, 8> c_{};
};

HyperNum mul(const HyperNum& a, const HyperNum& b);
HyperNum conj(const HyperNum& q);
double norm_sq(const HyperNum& q);
double norm(const HyperNum& q);
HyperNum inv(const HyperNum& q);
/// exp(x + Iy) = e^x (cos y + I sin y); series-safe near y = 0.
HyperNum exp(const HyperNum& q);
/// q^n by repeated multiplication (n >= 0); values stay in one slice,
/// so the association order is immaterial.
HyperNum pow_int(const HyperNum& q, int n);

/// A unit I with I^2 = -1: zero real part, Euclidean norm 1.
class ImaginaryUnit {
public:
    /// Validates |value| = 1 and Re = 0 within tol; throws algebra_error.
    explicit ImaginaryUnit(const HyperNum& value, double tol = 1e-9);

    static ImaginaryUnit canonical(int dim, int index = 1);

    const HyperNum& value() const { return value_; }
    int dim() const { return value_.dim(); }

private:
    HyperNum value_;
};

/// The decomposition q = x + I y with y >= 0.
struct SlicePoint {
    double x = 0.0;
    double y = 0.0;
    ImaginaryUnit unit;

    SlicePoint(double x_, double y_, ImaginaryUnit unit_)
        : x(x_), y(y_), unit(std::move(unit_)) {
        if (y < 0.0) throw algebra_error("SlicePoint requires y >= 0");
    }

    HyperNum reconstruct() const { return HyperNum::real(x, unit.dim()) + unit.value() * y; }
};

/// decompose(q) = (Re q, |Im q|, Im q / |Im q|); real points take the fallback unit.
SlicePoint decompose(const HyperNum& q, const ImaginaryUnit& fallback);
SlicePoint decompose(const HyperNum& q);

/// Orthonormal positively oriented basis (1, I, I2, ..., I_{dim-1}).
struct Basis {
    int dim;
    std::vector<HyperNum> units;
};

/// Deterministic completion of {1, I} to an orthonormal positively
/// oriented basis: Gram-Schmidt against the canonical units in index
/// order, last vector flipped if the orientation comes out negative.
Basis complete_basis(const ImaginaryUnit& I);

double basis_determinant(const Basis& b);

} // namespace hx

#endif
