#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slr/mat2.hpp"
#include "slr/rng.hpp"

using namespace slr;

TEST_CASE("classification of normal forms") {
    ConjClass r = classify(Mat2{0, -1, 1, 0});
    CHECK(r.kind == ConjKind::elliptic);
    CHECK(r.angle == doctest::Approx(M_PI / 2).epsilon(1e-12));

    ConjClass p = classify(Mat2{1, -1, 0, 1});
    CHECK(p.kind == ConjKind::parabolic);
    CHECK(p.trace_sign == 1);
    CHECK(p.shear_sign == -1);

    ConjClass h = classify(Mat2{2, 0, 0, 0.5});
    CHECK(h.kind == ConjKind::hyperbolic);
    CHECK(h.trace_sign == 1);
    CHECK(h.eigenvalue == doctest::Approx(2.0));
    CHECK(h.n_fixed == 2);
    double lo = std::min(h.fixed_dir[0], h.fixed_dir[1]);
    double hi = std::max(h.fixed_dir[0], h.fixed_dir[1]);
    CHECK(lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hi == doctest::Approx(M_PI / 2).epsilon(1e-12));

    CHECK(classify(Mat2::identity()).kind == ConjKind::identity);
    CHECK(classify(-Mat2::identity()).kind == ConjKind::minus_identity);
}

TEST_CASE("elliptic angle recovered through conjugation") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        Mat2 p = random_sl2(rng);
        ConjClass c = classify(Mat2::rotation(1.2).conj(p));
        CHECK(c.kind == ConjKind::elliptic);
        CHECK(c.angle == doctest::Approx(1.2).epsilon(1e-9));
    }
}

TEST_CASE("classify is conjugation invariant") {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        Mat2 m = random_sl2(rng);
        Mat2 p = random_sl2(rng);
        ConjClass a, b;
        try {
            a = classify(m);
            b = classify(m.conj(p));
        } catch (const error&) {
            continue; // inside the guard band; samplers reject these
        }
        CHECK(a.kind == b.kind);
        if (a.kind == ConjKind::elliptic) CHECK(a.angle == doctest::Approx(b.angle).epsilon(1e-9));
        if (a.kind == ConjKind::hyperbolic) {
            CHECK(a.trace_sign == b.trace_sign);
            CHECK(a.eigenvalue == doctest::Approx(b.eigenvalue).epsilon(1e-9));
        }
        if (a.kind == ConjKind::parabolic) {
            CHECK(a.trace_sign == b.trace_sign);
            CHECK(a.shear_sign == b.shear_sign);
        }
    }
}

TEST_CASE("elliptic angle sign rule") {
    Rng rng(9);
    for (int i = 0; i < 2000; ++i) {
        double th = rng.uniform(0.05, 2 * M_PI - 0.05);
        if (std::abs(th - M_PI) < 0.05) continue;
        Mat2 m = Mat2::rotation(th).conj(random_sl2(rng));
        double d = m.c - m.b;
        CHECK((d > 0) == (std::sin(th) > 0));
    }
}

TEST_CASE("parabolic shear rule for both normal forms") {
    Rng rng(11);
    auto phi = [](int re, int im) {
        double s = im - re;
        Mat2 m = Mat2::shear(s);
        return (re + 1) % 2 == 0 ? m : -m;
    };
    const int vals[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (int i = 0; i < 2000; ++i) {
        const int* a = vals[i % 4];
        Mat2 p = random_sl2(rng);
        ConjClass c = classify(phi(a[0], a[1]).conj(p));
        REQUIRE(c.kind == ConjKind::parabolic);
        CHECK(c.shear_sign == a[1] - a[0]);
    }
}

TEST_CASE("iwasawa decomposition") {
    IwasawaCoords d = iwasawa(Mat2{2, 0, 0, 0.5});
    CHECK(d.tau == doctest::Approx(0.0));
    CHECK(d.r == doctest::Approx(2.0));
    CHECK(d.x == doctest::Approx(0.0));

    IwasawaCoords s = iwasawa(Mat2{1, 3, 0, 1});
    CHECK(s.tau == doctest::Approx(0.0));
    CHECK(s.r == doctest::Approx(1.0));
    CHECK(s.x == doctest::Approx(3.0));

    Mat2 m = Mat2::rotation(0.7) * Mat2::diagonal(1.5) * Mat2::shear(-2);
    IwasawaCoords c = iwasawa(m);
    CHECK(c.tau == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(c.r == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(c.x == doctest::Approx(-2.0).epsilon(1e-12));

    Rng rng(5);
    for (int i = 0; i < 2000; ++i) {
        Mat2 p = random_sl2(rng);
        CHECK(from_iwasawa(iwasawa(p)).dist(p) < 1e-12 * std::max(1.0, p.max_abs()));
        // tr(P^T P) = r^2 + r^-2 + r^2 x^2
        IwasawaCoords co = iwasawa(p);
        double s2 = co.r * co.r + 1 / (co.r * co.r) + co.r * co.r * co.x * co.x;
        CHECK((p.transpose() * p).trace() == doctest::Approx(s2).epsilon(1e-10));
    }
}

TEST_CASE("trace identity spot values") {
    // commutator with a diagonal: 2 - bc (lam - 1/lam)^2
    Mat2 beta{1, 1, 1, 2};
    CHECK(commutator(Mat2::diagonal(2), beta).trace() == doctest::Approx(-0.25).epsilon(1e-12));
    // unipotent commutator with c = 0
    Mat2 upper{1.3, 0.4, 0, 1 / 1.3};
    CHECK(commutator(Mat2::shear(1), upper).trace() == doctest::Approx(2.0).epsilon(1e-12));
    // rotation commutator against the identity
    CHECK(commutator(Mat2::rotation(M_PI / 2), Mat2::identity()).trace() ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("trace identity sweep") {
    auto results = trace_identities(2000, 123);
    CHECK(results.size() == 8);
    for (const auto& r : results) {
        INFO(r.name);
        CHECK(r.passed);
        CHECK(r.max_residual < 1e-9);
    }
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(checked_mat2(1, 0, 0, 2), error);
    CHECK_THROWS_AS(parse_mat2("1,0,0"), error);
    CHECK_THROWS_AS(parse_mat2("1,x,0,1"), error);
    Mat2 m = parse_mat2("0,-1,1,0");
    CHECK(m.dist(Mat2{0, -1, 1, 0}) == 0.0);
    CHECK_THROWS_AS(classify(Mat2{1, 1e-13, -1e-13, 1}), error); // ambiguous near I
}
