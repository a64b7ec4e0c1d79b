#include "hx/algebra.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

namespace hx {

namespace {

// sin(y)/y, series form below the cancellation threshold.
double sinc(double y) {
    if (std::abs(y) < 1e-4) {
        const double y2 = y * y;
        return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
    }
    return std::sin(y) / y;
}

using Quat = std::array<double, 4>;

Quat quat_mul(const Quat& a, const Quat& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat quat_conj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quat quat_sub(const Quat& a, const Quat& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Quat quat_add(const Quat& a, const Quat& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

} // namespace

int HyperNum::check_dim(int dim) {
    if (dim != 1 && dim != 4 && dim != 8)
        throw algebra_error("HyperNum dimension must be 1, 4 or 8, got " + std::to_string(dim));
    return dim;
}

HyperNum::HyperNum(int dim, std::span<const double> coeffs) : dim_(check_dim(dim)) {
    if (static_cast<int>(coeffs.size()) != dim)
        throw algebra_error("coefficient count does not match dimension");
    for (int i = 0; i < dim; ++i) c_[static_cast<std::size_t>(i)] = coeffs[static_cast<std::size_t>(i)];
}

HyperNum HyperNum::real(double value, int dim) {
    HyperNum q(dim);
    q.c_[0] = value;
    return q;
}

HyperNum HyperNum::unit(int dim, int index) {
    HyperNum q(dim);
    if (index < 0 || index >= dim) throw algebra_error("unit index out of range");
    q.c_[static_cast<std::size_t>(index)] = 1.0;
    return q;
}

HyperNum HyperNum::im() const {
    HyperNum q = *this;
    q.c_[0] = 0.0;
    return q;
}

HyperNum& HyperNum::operator+=(const HyperNum& rhs) {
    if (dim_ != rhs.dim_) throw algebra_error("dimension mismatch in addition");
    for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] += rhs.c_[static_cast<std::size_t>(i)];
    return *this;
}

HyperNum& HyperNum::operator-=(const HyperNum& rhs) {
    if (dim_ != rhs.dim_) throw algebra_error("dimension mismatch in subtraction");
    for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] -= rhs.c_[static_cast<std::size_t>(i)];
    return *this;
}

HyperNum& HyperNum::operator*=(double s) {
    for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] *= s;
    return *this;
}

std::string HyperNum::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim_; ++i) os << (i ? ", " : "") << c_[static_cast<std::size_t>(i)];
    os << "]";
    return os.str();
}

HyperNum mul(const HyperNum& a, const HyperNum& b) {
    if (a.dim() != b.dim()) throw algebra_error("dimension mismatch in multiplication");
    const int dim = a.dim();
    if (dim == 1) return HyperNum::real(a[0] * b[0], 1);
    if (dim == 4) {
        const Quat qa{a[0], a[1], a[2], a[3]};
        const Quat qb{b[0], b[1], b[2], b[3]};
        const Quat r = quat_mul(qa, qb);
        return HyperNum(4, r);
    }
    // Cayley-Dickson doubling over quaternion pairs:
    // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
    const Quat xa{a[0], a[1], a[2], a[3]}, xb{a[4], a[5], a[6], a[7]};
    const Quat yc{b[0], b[1], b[2], b[3]}, yd{b[4], b[5], b[6], b[7]};
    const Quat first = quat_sub(quat_mul(xa, yc), quat_mul(quat_conj(yd), xb));
    const Quat second = quat_add(quat_mul(yd, xa), quat_mul(xb, quat_conj(yc)));
    std::array<double, 8> r{first[0], first[1], first[2], first[3],
                            second[0], second[1], second[2], second[3]};
    return HyperNum(8, r);
}

HyperNum conj(const HyperNum& q) {
    HyperNum r = -q;
    r[0] = q[0];
    return r;
}

double norm_sq(const HyperNum& q) {
    double s = 0.0;
    for (int i = 0; i < q.dim(); ++i) s += q[i] * q[i];
    return s;
}

double norm(const HyperNum& q) { return std::sqrt(norm_sq(q)); }

HyperNum inv(const HyperNum& q) {
    const double n2 = norm_sq(q);
    if (n2 == 0.0) throw algebra_error("division by zero: inv(0)");
    return conj(q) * (1.0 / n2);
}

HyperNum exp(const HyperNum& q) {
    const double x = q.re();
    const HyperNum imq = q.im();
    const double y = norm(imq);
    const double ex = std::exp(x);
    // e^x cos y + e^x Im(q) sin(y)/y
    return HyperNum::real(ex * std::cos(y), q.dim()) + imq * (ex * sinc(y));
}

HyperNum pow_int(const HyperNum& q, int n) {
    if (n < 0) throw algebra_error("pow_int requires n >= 0");
    HyperNum r = HyperNum::real(1.0, q.dim());
    for (int i = 0; i < n; ++i) r = mul(r, q);
    return r;
}

ImaginaryUnit::ImaginaryUnit(const HyperNum& value, double tol) : value_(value) {
    if (std::abs(value[0]) > tol)
        throw algebra_error("imaginary unit has nonzero real part");
    if (std::abs(norm(value) - 1.0) > tol)
        throw algebra_error("imaginary unit is not normalized");
}

ImaginaryUnit ImaginaryUnit::canonical(int dim, int index) {
    return ImaginaryUnit(HyperNum::unit(dim, index));
}

SlicePoint decompose(const HyperNum& q, const ImaginaryUnit& fallback) {
    if (q.dim() != fallback.dim())
        throw algebra_error("dimension mismatch in decompose fallback");
    const HyperNum imq = q.im();
    const double y = norm(imq);
    if (y > 0.0) return SlicePoint(q.re(), y, ImaginaryUnit(imq * (1.0 / y)));
    return SlicePoint(q.re(), 0.0, fallback);
}

SlicePoint decompose(const HyperNum& q) {
    return decompose(q, ImaginaryUnit::canonical(q.dim()));
}

Basis complete_basis(const ImaginaryUnit& I) {
    const int dim = I.dim();
    std::vector<HyperNum> units;
    units.push_back(HyperNum::real(1.0, dim));
    units.push_back(I.value());

    // Gram-Schmidt over the canonical units in fixed index order.
    for (int cand = 1; cand < dim && static_cast<int>(units.size()) < dim; ++cand) {
        HyperNum v = HyperNum::unit(dim, cand);
        for (const HyperNum& u : units) {
            double dot = 0.0;
            for (int i = 0; i < dim; ++i) dot += v[i] * u[i];
            v -= u * dot;
        }
        const double n = norm(v);
        if (n < 1e-6) continue; // candidate already spanned
        units.push_back(v * (1.0 / n));
    }
    if (static_cast<int>(units.size()) != dim)
        throw algebra_error("basis completion failed");

    Basis b{dim, std::move(units)};
    if (basis_determinant(b) < 0.0) b.units.back() *= -1.0;
    return b;
}

double basis_determinant(const Basis& b) {
    Eigen::MatrixXd m(b.dim, b.dim);
    for (int j = 0; j < b.dim; ++j)
        for (int i = 0; i < b.dim; ++i) m(i, j) = b.units[static_cast<std::size_t>(j)][i];
    return m.determinant();
}

} // namespace hx
