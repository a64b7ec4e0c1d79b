#include <random>

#include "doctest.h"

#include "hx/sampling.hpp"
#include "hx/stem.hpp"

using hx::HyperNum;

namespace {

HyperNum first(const hx::StemValue& v) { return v.at(0); }

hx::StemFunction zsq(int dim) {
    return hx::polynomial_stem({HyperNum::real(0.0, dim), HyperNum::real(0.0, dim),
                                HyperNum::real(1.0, dim)},
                               dim);
}

} // namespace

TEST_CASE("z^2 slice evaluation: (1 + 2J)^2 = -3 + 4J") {
    const hx::ImaginaryUnit J = hx::ImaginaryUnit::canonical(4, 2);
    const HyperNum got = first(eval_slice(zsq(4), hx::SlicePoint(1.0, 2.0, J)));
    const HyperNum want = HyperNum::real(-3.0, 4) + J.value() * 4.0;
    CHECK(norm(got - want) < 1e-14);
}

TEST_CASE("slice evaluation equals the direct algebra power") {
    std::mt19937_64 rng(31);
    for (int dim : {4, 8})
        for (int i = 0; i < 200; ++i) {
            const hx::SlicePoint p = hx::random_slice_point(dim, rng, -2.0, 2.0, 0.0, 2.0);
            const HyperNum q = p.reconstruct();
            const HyperNum got = first(eval_slice(zsq(dim), p));
            CHECK(norm(got - mul(q, q)) < 1e-12 * std::max(1.0, norm_sq(q)));
        }
}

TEST_CASE("intrinsic check accepts polynomials and rejects even F2") {
    std::mt19937_64 rng(8);
    const hx::IntrinsicReport good = hx::check_intrinsic(zsq(4), 200, rng);
    CHECK(good.pass);
    CHECK(good.max_residual < 1e-12);

    hx::StemFunction bad = zsq(4);
    bad.f2 = [](double, double) { return hx::StemValue{HyperNum::real(1.0, 4)}; };
    bad.dx_f2 = nullptr;  // force numeric partials for the overridden slot
    bad.dy_f2 = nullptr;
    const hx::IntrinsicReport rep = hx::check_intrinsic(bad, 200, rng);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("holomorphy check and slice derivative") {
    CHECK(hx::check_holomorphic(zsq(4), 0.7, 1.3));

    hx::StemFunction conj_z = zsq(4);
    conj_z.f1 = [](double x, double) { return hx::StemValue{HyperNum::real(x, 4)}; };
    conj_z.f2 = [](double, double y) { return hx::StemValue{HyperNum::real(-y, 4)}; };
    conj_z.dx_f1 = conj_z.dy_f1 = conj_z.dx_f2 = conj_z.dy_f2 = nullptr;
    CHECK_FALSE(hx::check_holomorphic(conj_z, 0.7, 1.3));

    // (z^3)' = 3 z^2.
    const int dim = 8;
    const hx::StemFunction cube = hx::polynomial_stem(
        {HyperNum(dim), HyperNum(dim), HyperNum(dim), HyperNum::real(1.0, dim)}, dim);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const hx::SlicePoint p = hx::random_slice_point(dim, rng, -1.5, 1.5, 0.0, 1.5);
        const HyperNum q = p.reconstruct();
        const HyperNum got = first(hx::slice_derivative(cube, p));
        CHECK(norm(got - mul(q, q) * 3.0) < 1e-10);
    }
}

TEST_CASE("spherical derivative of z^2 is q + conj(q)") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const hx::SlicePoint p = hx::random_slice_point(4, rng, -2.0, 2.0, 0.2, 2.0);
        const HyperNum got = first(hx::spherical_derivative(zsq(4), p));
        CHECK(norm(got - HyperNum::real(2.0 * p.x, 4)) < 1e-12);
    }
    // Real-axis limit via dy F2.
    const hx::SlicePoint axis(0.75, 0.0, hx::ImaginaryUnit::canonical(4));
    const HyperNum got = first(hx::spherical_derivative(zsq(4), axis));
    CHECK(norm(got - HyperNum::real(1.5, 4)) < 1e-12);
}

TEST_CASE("representation formula reproduces slice values") {
    std::mt19937_64 rng(77);
    for (int dim : {4, 8}) {
        const hx::StemFunction F = hx::polynomial_stem(
            {hx::random_hypernum(dim, rng), hx::random_hypernum(dim, rng),
             hx::random_hypernum(dim, rng), hx::random_hypernum(dim, rng)},
            dim);
        for (int i = 0; i < 100; ++i) {
            const hx::ImaginaryUnit M = hx::random_imaginary_unit(dim, rng);
            const hx::ImaginaryUnit N = hx::random_imaginary_unit(dim, rng);
            const hx::ImaginaryUnit L = hx::random_imaginary_unit(dim, rng);
            if (norm(M.value() - N.value()) < 1e-3) continue;
            const double x = 0.8, y = 1.1;
            const HyperNum fM = first(eval_slice(F, hx::SlicePoint(x, y, M)));
            const HyperNum fN = first(eval_slice(F, hx::SlicePoint(x, y, N)));
            const HyperNum fL = first(eval_slice(F, hx::SlicePoint(x, y, L)));
            const HyperNum pred = hx::representation_formula(fM, fN, M, N, L);
            CHECK(norm(pred - fL) < 1e-10);
        }
    }
}

TEST_CASE("representation formula worked example: 2k = (1 + k)^2 pattern") {
    // f(q) = q^2 at q = 1 + k, reconstructed from the i and j slices.
    const hx::ImaginaryUnit i_unit = hx::ImaginaryUnit::canonical(4, 1);
    const hx::ImaginaryUnit j_unit = hx::ImaginaryUnit::canonical(4, 2);
    const hx::ImaginaryUnit k_unit = hx::ImaginaryUnit::canonical(4, 3);
    const hx::StemFunction F = zsq(4);
    const HyperNum fM = first(eval_slice(F, hx::SlicePoint(1.0, 1.0, i_unit)));
    const HyperNum fN = first(eval_slice(F, hx::SlicePoint(1.0, 1.0, j_unit)));
    const HyperNum pred = hx::representation_formula(fM, fN, i_unit, j_unit, k_unit);
    const HyperNum want = HyperNum::unit(4, 3) * 2.0;  // (1 + k)^2 = 2k
    CHECK(norm(pred - want) < 1e-13);
}

TEST_CASE("representation formula rejects coincident units") {
    const hx::ImaginaryUnit I = hx::ImaginaryUnit::canonical(4);
    CHECK_THROWS_AS(hx::representation_formula(HyperNum(4), HyperNum(4), I, I, I),
                    hx::algebra_error);
}

TEST_CASE("symmetric domains: membership, sampling, diagnostics") {
    const hx::SymmetricDomain strip = hx::SymmetricDomain::strip(1.5);
    CHECK(strip.contains(0.0, 1.4));
    CHECK_FALSE(strip.contains(0.0, 1.6));
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
        const auto [x, y] = strip.sample(rng);
        CHECK(strip.contains(x, y));
    }
    const auto [xo, yo] = strip.sample_off_axis(rng, 0.25);
    CHECK(std::abs(yo) >= 0.25);
    CHECK(strip.contains(xo, yo));
    CHECK_NOTHROW((void)strip.sample_real(rng));

    hx::SymmetricDomain off_axis = strip;
    off_axis.contains_real_axis = false;
    CHECK_THROWS_AS((void)off_axis.sample_real(rng), hx::config_error);

    // Evaluation outside the domain is a domain error.
    hx::StemFunction F = zsq(4);
    F.domain = strip;
    CHECK_THROWS_AS((void)eval_slice(F, hx::SlicePoint(0.0, 2.0, hx::ImaginaryUnit::canonical(4))),
                    hx::domain_error);
}
