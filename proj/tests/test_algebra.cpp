#include <complex>
#include <random>
#include <vector>

#include "doctest.h"

#include "hx/algebra.hpp"
#include "hx/sampling.hpp"

using hx::HyperNum;

namespace {

// Independent multiplication oracle: recursive doubling over pairs,
// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)), written against raw
// coefficient vectors so it shares no code with the library.
std::vector<double> cd_conj(const std::vector<double>& a) {
    std::vector<double> r = a;
    for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
}

std::vector<double> cd_mul(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    if (n == 1) return {a[0] * b[0]};
    const std::size_t h = n / 2;
    auto lo = [h](const std::vector<double>& v) { return std::vector<double>(v.begin(), v.begin() + static_cast<long>(h)); };
    auto hi = [h](const std::vector<double>& v) { return std::vector<double>(v.begin() + static_cast<long>(h), v.end()); };
    auto add = [](std::vector<double> u, const std::vector<double>& v, double s) {
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += s * v[i];
        return u;
    };
    const auto A = lo(a), B = hi(a), C = lo(b), D = hi(b);
    const auto first = add(cd_mul(A, C), cd_mul(cd_conj(D), B), -1.0);
    const auto second = add(cd_mul(D, A), cd_mul(B, cd_conj(C)), 1.0);
    std::vector<double> r(n);
    for (std::size_t i = 0; i < h; ++i) {
        r[i] = first[i];
        r[h + i] = second[i];
    }
    return r;
}

double mul_residual(const HyperNum& a, const HyperNum& b) {
    const HyperNum got = mul(a, b);
    const auto want = cd_mul(a.coeffs(), b.coeffs());
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(got[i] - want[static_cast<std::size_t>(i)]));
    return worst;
}

} // namespace

TEST_CASE("multiplication matches the doubling oracle") {
    std::mt19937_64 rng(2024);
    for (int dim : {4, 8})
        for (int i = 0; i < 500; ++i) {
            const HyperNum a = hx::random_hypernum(dim, rng);
            const HyperNum b = hx::random_hypernum(dim, rng);
            CHECK(mul_residual(a, b) < 1e-13);
        }
}

TEST_CASE("quaternion and octonion unit table") {
    auto e = [](int i) { return HyperNum::unit(8, i); };
    auto is = [](const HyperNum& a, const HyperNum& b) { return norm(a - b) < 1e-15; };
    CHECK(is(mul(e(1), e(2)), e(3)));
    CHECK(is(mul(e(2), e(1)), -e(3)));
    CHECK(is(mul(e(1), e(4)), e(5)));
    CHECK(is(mul(e(2), e(4)), e(6)));
    CHECK(is(mul(e(3), e(4)), e(7)));
    for (int i = 1; i < 8; ++i) CHECK(is(mul(e(i), e(i)), -HyperNum::real(1.0, 8)));
    // Non-associativity witness.
    CHECK(is(mul(mul(e(1), e(2)), e(4)), e(7)));
    CHECK(is(mul(e(1), mul(e(2), e(4))), -e(7)));
}

TEST_CASE("norm multiplicativity, conjugation, alternativity") {
    std::mt19937_64 rng(7);
    for (int dim : {1, 4, 8})
        for (int i = 0; i < 200; ++i) {
            const HyperNum a = hx::random_hypernum(dim, rng);
            const HyperNum b = hx::random_hypernum(dim, rng);
            CHECK(std::abs(norm(mul(a, b)) - norm(a) * norm(b)) < 1e-12);
            CHECK(norm(conj(mul(a, b)) - mul(conj(b), conj(a))) < 1e-12);
            CHECK(norm(mul(a, mul(a, b)) - mul(mul(a, a), b)) < 1e-12);
            CHECK(norm(mul(b, mul(a, a)) - mul(mul(b, a), a)) < 1e-12);
        }
}

TEST_CASE("inverse and integer powers") {
    std::mt19937_64 rng(19);
    for (int dim : {4, 8})
        for (int i = 0; i < 100; ++i) {
            const HyperNum a = hx::random_hypernum(dim, rng);
            if (norm(a) < 1e-6) continue;
            CHECK(norm(mul(a, hx::inv(a)) - HyperNum::real(1.0, dim)) < 1e-12);
            HyperNum p = HyperNum::real(1.0, dim);
            for (int k = 0; k <= 5; ++k) {
                CHECK(norm(hx::pow_int(a, k) - p) < 1e-9 * std::max(1.0, norm(p)));
                p = mul(p, a);
            }
        }
    CHECK_THROWS_AS((void)hx::inv(HyperNum(4)), hx::algebra_error);
}

TEST_CASE("exp agrees with the complex exponential on each slice") {
    std::mt19937_64 rng(4);
    for (int dim : {4, 8})
        for (int i = 0; i < 200; ++i) {
            const hx::SlicePoint p = hx::random_slice_point(dim, rng, -2.0, 2.0, 0.0, 3.0);
            const std::complex<double> w = std::exp(std::complex<double>(p.x, p.y));
            const HyperNum got = hx::exp(p.reconstruct());
            const HyperNum want = HyperNum::real(w.real(), dim) + p.unit.value() * w.imag();
            CHECK(norm(got - want) < 1e-13 * std::max(1.0, norm(want)));
        }
    // Series branch near the axis.
    const HyperNum tiny = HyperNum::real(0.5, 4) + HyperNum::unit(4, 2) * 1e-9;
    const HyperNum got = hx::exp(tiny);
    CHECK(got.re() == doctest::Approx(std::exp(0.5)).epsilon(1e-14));
    CHECK(got[2] == doctest::Approx(std::exp(0.5) * 1e-9).epsilon(1e-12));
}

TEST_CASE("imaginary units validate their invariants") {
    CHECK_NOTHROW((void)hx::ImaginaryUnit{HyperNum::unit(4, 2)});
    CHECK_THROWS_AS((void)hx::ImaginaryUnit{HyperNum::unit(4, 2) * 1.5}, hx::algebra_error);
    HyperNum with_real = HyperNum::unit(4, 2);
    with_real[0] = 0.1;
    CHECK_THROWS_AS((void)hx::ImaginaryUnit{with_real}, hx::algebra_error);
}

TEST_CASE("slice decomposition round trip") {
    std::mt19937_64 rng(99);
    for (int dim : {4, 8})
        for (int i = 0; i < 200; ++i) {
            const HyperNum q = hx::random_hypernum(dim, rng);
            const hx::SlicePoint p = hx::decompose(q);
            CHECK(p.y >= 0.0);
            CHECK(norm(p.reconstruct() - q) < 1e-12);
        }
    // Real points fall back to the supplied unit.
    const hx::ImaginaryUnit J = hx::ImaginaryUnit::canonical(4, 2);
    const hx::SlicePoint p = hx::decompose(HyperNum::real(3.0, 4), J);
    CHECK(p.x == 3.0);
    CHECK(p.y == 0.0);
    CHECK(norm(p.unit.value() - J.value()) == 0.0);
}

TEST_CASE("basis completion is orthonormal, oriented and deterministic") {
    std::mt19937_64 rng(5);
    for (int dim : {4, 8})
        for (int i = 0; i < 50; ++i) {
            const hx::ImaginaryUnit I = hx::random_imaginary_unit(dim, rng);
            const hx::Basis b = hx::complete_basis(I);
            REQUIRE(static_cast<int>(b.units.size()) == dim);
            CHECK(norm(b.units[0] - HyperNum::real(1.0, dim)) == 0.0);
            CHECK(norm(b.units[1] - I.value()) < 1e-14);
            for (std::size_t r = 0; r < b.units.size(); ++r)
                for (std::size_t c = 0; c < b.units.size(); ++c) {
                    double dot = 0.0;
                    for (int k = 0; k < dim; ++k) dot += b.units[r][k] * b.units[c][k];
                    CHECK(std::abs(dot - (r == c ? 1.0 : 0.0)) < 1e-12);
                }
            CHECK(hx::basis_determinant(b) == doctest::Approx(1.0).epsilon(1e-10));
            const hx::Basis again = hx::complete_basis(I);
            for (std::size_t k = 0; k < b.units.size(); ++k)
                CHECK(norm(b.units[k] - again.units[k]) == 0.0);
        }
}
