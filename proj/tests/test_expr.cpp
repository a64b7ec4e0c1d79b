#include <complex>
#include <random>
#include <vector>

#include "doctest.h"

#include "hx/expr.hpp"
#include "hx/manifolds.hpp"
#include "hx/sampling.hpp"

using hx::HyperNum;

namespace {

std::complex<double> eval1(const std::string& text, double x, double y) {
    return hx::parse_stem_expr(text).eval_component(0, x, y);
}

} // namespace

TEST_CASE("expression evaluation basics") {
    CHECK(eval1("z^2", 1.0, 2.0) == std::complex<double>(-3.0, 4.0));
    CHECK(eval1("x + iota*y", 1.5, -0.5) == std::complex<double>(1.5, -0.5));
    CHECK(std::abs(eval1("conj(z)", 1.0, 2.0) - std::complex<double>(1.0, -2.0)) < 1e-15);
    CHECK(std::abs(eval1("exp(z)", 0.5, 1.0) -
                   std::exp(std::complex<double>(0.5, 1.0))) < 1e-15);
    CHECK(std::abs(eval1("sin(z)*sin(z) + cos(z)^2", 0.3, 0.7) - 1.0) < 1e-13);
    CHECK(eval1("2*pi", 0.0, 0.0).real() == doctest::Approx(2.0 * M_PI));
    // Precedence and associativity.
    CHECK(eval1("2 + 3 * 4", 0, 0).real() == 14.0);
    CHECK(eval1("2 ^ 3 ^ 2", 0, 0).real() == 512.0);  // right associative
    CHECK(eval1("-2^2", 0, 0).real() == -4.0);
    CHECK(eval1("(2 + 3) * 4", 0, 0).real() == 20.0);
    CHECK(eval1("7 / 2 / 2", 0, 0).real() == 1.75);  // left associative
}

TEST_CASE("tuple expressions carry their arity") {
    const hx::StemExpr t = hx::parse_stem_expr("(sinh(z), iota*y)");
    REQUIRE(t.arity() == 2);
    CHECK(std::abs(t.eval_component(0, 0.4, 0.9) -
                   std::sinh(std::complex<double>(0.4, 0.9))) < 1e-15);
    CHECK(t.eval_component(1, 0.4, 0.9) == std::complex<double>(0.0, 0.9));
    // A parenthesized single expression is not a tuple.
    CHECK(hx::parse_stem_expr("(x + y)").arity() == 1);
}

TEST_CASE("diagnostics point at the offending column") {
    auto col = [](const std::string& text) {
        try {
            (void)hx::parse_stem_expr(text);
        } catch (const hx::parse_error& e) {
            return e.column;
        }
        return -1;
    };
    CHECK(col("(x,") == 4);
    CHECK(col("x + ") == 5);
    CHECK(col("x + $") == 5);
    CHECK(col("foo(x)") == 1);
    CHECK(col("sin()") == 5);
    CHECK(col("(x, y") == 6);
    CHECK(col("1..2") >= 1);
    CHECK(col("x + y") == -1);
}

TEST_CASE("printing round-trips structurally") {
    const std::vector<std::string> corpus = {
        "x",
        "y",
        "z",
        "iota",
        "pi",
        "1.5",
        "-x",
        "x + y",
        "x - y",
        "x*y",
        "x/y",
        "x^2",
        "z^3",
        "-z^2",
        "(x + y)*z",
        "x + y*z",
        "x - (y - z)",
        "x/(y*z)",
        "x/y*z",
        "2^x^3",
        "(2^x)^3",
        "sin(z)",
        "cos(x + iota*y)",
        "sinh(z)*cosh(z)",
        "exp(-z^2)",
        "log(1 + z)",
        "sqrt(x^2 + y^2)",
        "conj(z)*z",
        "(sinh(z), iota*y)",
        "(cosh(z), x)",
        "(z, z^2, z^3)",
        "1 + 2*z + 3*z^2",
        "-(x + y)",
        "x - -y",
        "0.25*z^4 - z + 1e-3",
    };
    std::mt19937_64 rng(211);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const auto& text : corpus) {
        const hx::StemExpr a = hx::parse_stem_expr(text);
        const std::string printed = a.print();
        const hx::StemExpr b = hx::parse_stem_expr(printed);
        CHECK_MESSAGE(hx::structurally_equal(a, b), text, " -> ", printed);
        CHECK(b.print() == printed);  // printing is a fixpoint
        for (int i = 0; i < 5; ++i) {
            const double x = u(rng), y = u(rng);
            for (int c = 0; c < a.arity(); ++c) {
                const auto va = a.eval_component(c, x, y);
                const auto vb = b.eval_component(c, x, y);
                if (std::isfinite(va.real()) && std::isfinite(va.imag()))
                    CHECK(std::abs(va - vb) < 1e-12 * std::max(1.0, std::abs(va)));
            }
        }
    }
}

TEST_CASE("expression stems match builtin charts") {
    std::mt19937_64 rng(223);
    const hx::StemFunction builtin = hx::make_helicoid_chart(8).stem;
    const hx::StemFunction parsed =
        hx::parse_stem_expr("(sinh(x)*exp(iota*y), iota*y)").to_stem(8);
    const hx::StemFunction cat_builtin = hx::make_catenoid_chart(8).stem;
    const hx::StemFunction cat_parsed =
        hx::parse_stem_expr("(cosh(x)*exp(iota*y), x)").to_stem(8);
    for (int i = 0; i < 100; ++i) {
        const hx::SlicePoint p = hx::random_slice_point(8, rng, -2.0, 2.0, 0.0, 3.0);
        const hx::StemValue a = eval_slice(builtin, p);
        const hx::StemValue b = eval_slice(parsed, p);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(norm(a[k] - b[k]) < 1e-12);
        if (p.y < 3.0 && p.y > -3.0 && std::abs(p.y) < M_PI) {
            const hx::StemValue ca = eval_slice(cat_builtin, p);
            const hx::StemValue cb = eval_slice(cat_parsed, p);
            for (std::size_t k = 0; k < ca.size(); ++k) CHECK(norm(ca[k] - cb[k]) < 1e-12);
        }
    }
}

TEST_CASE("parsed stems are intrinsic and certify like the builtins") {
    std::mt19937_64 rng(227);
    hx::StemFunction F = hx::parse_stem_expr("(sinh(x)*exp(iota*y), iota*y)").to_stem(4);
    F.domain = hx::SymmetricDomain::plane(-2.0, 2.0, -3.0, 3.0);
    CHECK(hx::check_intrinsic(F, 100, rng).pass);
    const hx::TheoremCertificate cert = hx::certify_theorem(F, 100, rng, 1e-6);
    CHECK(cert.pass);
}
