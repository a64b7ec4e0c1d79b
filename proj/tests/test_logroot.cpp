#include <cmath>
#include <random>

#include "doctest.h"

#include "hx/logroot.hpp"
#include "hx/sampling.hpp"

using hx::HyperNum;

TEST_CASE("E and L are mutually inverse on the manifold") {
    std::mt19937_64 rng(101);
    for (int dim : {4, 8})
        for (int i = 0; i < 500; ++i) {
            const HyperNum w = hx::random_hypernum(dim, rng);
            const hx::LogPoint pt = hx::E_exponential(w);
            CHECK(pt.invariant_residual() < 1e-12);
            const HyperNum back = hx::L_logarithm(pt);
            // L recovers w up to the slice normalization y >= 0, which E
            // already applies, so exp must match exactly.
            CHECK(norm(hx::exp(back) - pt.q) < 1e-12 * std::max(1.0, norm(pt.q)));
        }
}

TEST_CASE("L rejects off-manifold and pole inputs") {
    const hx::LogPoint bogus{HyperNum::real(2.0, 4), HyperNum::unit(4, 1) * 3.0};
    CHECK_THROWS_AS((void)hx::L_logarithm(bogus), hx::not_on_manifold_error);
    const hx::LogPoint pole{HyperNum(4), HyperNum(4)};
    CHECK_THROWS_AS((void)hx::L_logarithm(pole), hx::domain_error);
    hx::LogPoint real_part{HyperNum::real(1.0, 4), HyperNum::real(0.5, 4)};
    CHECK(real_part.invariant_residual() >= 0.5);
}

TEST_CASE("principal logarithm: values, branch cut, round trip") {
    CHECK(norm(hx::principal_log(HyperNum::real(std::exp(2.0), 4)) -
               HyperNum::real(2.0, 4)) < 1e-13);

    // i maps to i pi/2.
    const HyperNum li = hx::principal_log(HyperNum::unit(4, 1));
    CHECK(norm(li - HyperNum::unit(4, 1) * (M_PI / 2.0)) < 1e-14);

    CHECK_THROWS_AS((void)hx::principal_log(HyperNum::real(-1.0, 4)), hx::branch_error);
    CHECK_THROWS_AS((void)hx::principal_log(HyperNum(8)), hx::domain_error);

    // Explicit unit resolves the negative reals: log(-e) = 1 + J pi.
    const hx::ImaginaryUnit J = hx::ImaginaryUnit::canonical(4, 2);
    const HyperNum lneg = hx::principal_log(HyperNum::real(-std::exp(1.0), 4), J);
    CHECK(norm(lneg - (HyperNum::real(1.0, 4) + J.value() * M_PI)) < 1e-13);

    std::mt19937_64 rng(103);
    for (int dim : {4, 8})
        for (int i = 0; i < 500; ++i) {
            const HyperNum q = hx::random_hypernum(dim, rng, 2.0);
            if (norm(q.im()) < 1e-6 || norm(q) < 1e-6) continue;
            CHECK(norm(hx::exp(hx::principal_log(q)) - q) < 1e-12 * std::max(1.0, norm(q)));
        }
}

TEST_CASE("phi_n parameterizes the root manifold") {
    std::mt19937_64 rng(107);
    for (int dim : {4, 8})
        for (int n = 2; n <= 5; ++n)
            for (int i = 0; i < 100; ++i) {
                const hx::SlicePoint p =
                    hx::random_slice_point(dim, rng, 0.05, 2.0, 0.0, M_PI * n - 0.05);
                const hx::RootPoint pt = hx::phi_n(n, p);
                CHECK(pt.invariant_residual() < 1e-12);
                // R_n o phi_n = exp(q / n): raising back to the n-th power
                // recovers exp(q).
                const HyperNum root = hx::R_nthroot(pt);
                CHECK(norm(hx::pow_int(root, n) - pt.q) < 1e-10 * std::max(1.0, norm(pt.q)));
            }
    const hx::ImaginaryUnit I = hx::ImaginaryUnit::canonical(4);
    CHECK_THROWS_AS((void)hx::phi_n(2, hx::SlicePoint(-1.0, 0.5, I)), hx::domain_error);
    CHECK_THROWS_AS((void)hx::phi_n(2, hx::SlicePoint(1.0, 7.0, I)), hx::domain_error);
    CHECK_THROWS_AS((void)hx::phi_n(1, hx::SlicePoint(1.0, 0.5, I)), hx::config_error);
}

TEST_CASE("R_n closure points give real roots of real arguments") {
    // s = +n with q = r >= 0: the positive real root.
    const hx::RootPoint plus{3, HyperNum::real(27.0, 4), HyperNum::real(3.0, 4)};
    CHECK(norm(hx::R_nthroot(plus) - HyperNum::real(3.0, 4)) < 1e-14);
    // s = -n: the closure point R_n(r, -n) = -r^(1/n).
    const hx::RootPoint minus{5, HyperNum::real(32.0, 4), HyperNum::real(-5.0, 4)};
    CHECK(norm(hx::R_nthroot(minus) - HyperNum::real(-2.0, 4)) < 1e-14);
    // q = 0 closure.
    const hx::RootPoint origin{4, HyperNum(4), HyperNum::real(4.0, 4)};
    CHECK(norm(hx::R_nthroot(origin)) == 0.0);
    // |s| != n is off the manifold.
    const hx::RootPoint off{3, HyperNum::real(8.0, 4), HyperNum::real(1.0, 4)};
    CHECK_THROWS_AS((void)hx::R_nthroot(off), hx::not_on_manifold_error);
}

TEST_CASE("principal n-th root") {
    CHECK(norm(hx::principal_nthroot(3, HyperNum::real(8.0, 4)) -
               HyperNum::real(2.0, 4)) < 1e-13);
    // sqrt(i) = exp(i pi/4).
    const HyperNum r = hx::principal_nthroot(2, HyperNum::unit(8, 1));
    CHECK(r.re() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(r[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));

    std::mt19937_64 rng(109);
    for (int dim : {4, 8})
        for (int n = 2; n <= 6; ++n)
            for (int i = 0; i < 100; ++i) {
                const HyperNum q = hx::random_hypernum(dim, rng, 2.0);
                if (norm(q.im()) < 1e-6) continue;
                const HyperNum root = hx::principal_nthroot(n, q);
                CHECK(norm(hx::pow_int(root, n) - q) < 1e-11 * std::max(1.0, norm(q)));
            }

    CHECK_THROWS_AS((void)hx::principal_nthroot(2, HyperNum::real(-4.0, 4)), hx::branch_error);
    const hx::ImaginaryUnit J = hx::ImaginaryUnit::canonical(4, 3);
    const HyperNum sq = hx::principal_nthroot(2, HyperNum::real(-4.0, 4), J);
    CHECK(norm(sq - J.value() * 2.0) < 1e-13);
}

TEST_CASE("negative reals have whole spheres of logarithms") {
    std::mt19937_64 rng(113);
    for (int dim : {4, 8}) {
        const HyperNum target = HyperNum::real(-2.0, dim);
        const auto pre = hx::sample_exp_preimages(target, 6, rng);
        REQUIRE(pre.size() >= 2);
        for (std::size_t a = 0; a < pre.size(); ++a) {
            CHECK(norm(hx::exp(pre[a]) - target) < 1e-12);
            for (std::size_t b = a + 1; b < pre.size(); ++b)
                CHECK(norm(pre[a] - pre[b]) > 1e-6);
        }
    }
    // Non-real points: preimages shift by 2 pi k along the slice.
    std::mt19937_64 rng2(5);
    const HyperNum q = HyperNum::real(1.0, 4) + HyperNum::unit(4, 1) * 2.0;
    const auto pre = hx::sample_exp_preimages(q, 4, rng2);
    for (const auto& w : pre) CHECK(norm(hx::exp(w) - q) < 1e-12);
    CHECK_THROWS_AS((void)hx::sample_exp_preimages(HyperNum(4), 3, rng2), hx::domain_error);
}
