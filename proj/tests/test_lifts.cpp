#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slr/lifts.hpp"
#include "slr/rng.hpp"

using namespace slr;

TEST_CASE("circle action basics") {
    CHECK(rp1_act(Mat2{2, 0, 0, 0.5}, 0.0) == doctest::Approx(0.0));
    CHECK(rp1_act(Mat2{2, 0, 0, 0.5}, M_PI / 4) == doctest::Approx(std::atan(0.25)));
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        double x = rng.uniform(0, M_PI);
        double want = std::fmod(x + M_PI / 2, M_PI);
        CHECK(rp1_act(Mat2::rotation(M_PI / 2), x) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("lift equivariance f(x+pi) = f(x)+pi") {
    Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        LiftedMap f{random_sl2(rng), long(rng.uniform_int(7)) - 3};
        for (int k = 0; k < 8; ++k) {
            double x = rng.uniform(-6, 6);
            CHECK(lift_eval(f, x + M_PI) - lift_eval(f, x) == doctest::Approx(M_PI).epsilon(1e-10));
        }
    }
}

TEST_CASE("euler lift fixes an eigendirection") {
    LiftedMap f = lift(Mat2{2, 0, 0, 0.5}, LiftMode::euler);
    CHECK(f.k == 0);
    CHECK(lift_eval(f, 0.0) == doctest::Approx(0.0));
    LiftedMap g = lift(Mat2{-3, 0, 0, -1.0 / 3}, LiftMode::euler);
    CHECK(translation_number(g) == doctest::Approx(0.0));
    CHECK(lift_eval(g, 0.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(lift(Mat2::rotation(1.0), LiftMode::euler), error);
    CHECK_THROWS_AS(lift(-Mat2::identity(), LiftMode::euler), error);
}

TEST_CASE("canonical lift of -I is the identity map") {
    LiftedMap f = lift(-Mat2::identity());
    CHECK(translation_number(f) == doctest::Approx(0.0));
    CHECK(lift_eval(f, 0.3) == doctest::Approx(0.3));
}

TEST_CASE("translation numbers") {
    CHECK(translation_number(lift(Mat2::rotation(M_PI / 2))) == doctest::Approx(0.5));
    CHECK(translation_number(lift(Mat2::diagonal(2), LiftMode::euler)) == doctest::Approx(0.0));
    CHECK(translation_number(lift_central({3})) == doctest::Approx(3.0));
    // z . F shifts by one
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        LiftedMap f{random_sl2(rng), 0};
        LiftedMap zf = lift_compose(lift_central({1}), f);
        CHECK(translation_number(zf) ==
              doctest::Approx(translation_number(f) + 1).epsilon(1e-12));
    }
}

TEST_CASE("translation number is a conjugation invariant") {
    Rng rng(29);
    for (int i = 0; i < 500; ++i) {
        Mat2 m = random_sl2(rng), p = random_sl2(rng);
        LiftedMap lp = lift(p);
        LiftedMap conj = lift_compose(lift_compose(lp, lift(m)), lift_inverse(lp));
        double a = translation_number(lift(m));
        double b = translation_number(conj);
        CHECK(std::abs(a - b - std::round(a - b)) < 1e-9); // equal mod Z
    }
}

TEST_CASE("composition winding stays in {0,1} and is associative") {
    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        LiftedMap f{random_sl2(rng), 0}, g{random_sl2(rng), 0}, h{random_sl2(rng), 0};
        LiftedMap fg = lift_compose(f, g);
        CHECK(fg.k >= 0);
        CHECK(fg.k <= 1);
        LiftedMap ab = lift_compose(lift_compose(f, g), h);
        LiftedMap bc = lift_compose(f, lift_compose(g, h));
        CHECK(ab.k == bc.k);
        CHECK(ab.m.dist(bc.m) < 1e-9 * std::max(1.0, ab.m.max_abs()));
    }
}

TEST_CASE("composition of realized lifts is pointwise the lift of the product") {
    Rng rng(37);
    for (int i = 0; i < 300; ++i) {
        LiftedMap f{random_sl2(rng), long(rng.uniform_int(5)) - 2};
        LiftedMap g{random_sl2(rng), long(rng.uniform_int(5)) - 2};
        LiftedMap fg = lift_compose(f, g);
        for (int k = 0; k < 4; ++k) {
            double x = rng.uniform(-4, 4);
            CHECK(lift_eval(f, lift_eval(g, x)) ==
                  doctest::Approx(lift_eval(fg, x)).epsilon(1e-9));
        }
    }
}

TEST_CASE("two quarter turns make z") {
    LiftedMap q = lift(Mat2::rotation(M_PI / 2));
    LiftedMap full = lift_compose(q, q);
    CHECK(central_degree(full) == 1);
}

TEST_CASE("inverse lifts cancel") {
    Rng rng(41);
    for (int i = 0; i < 500; ++i) {
        LiftedMap f{random_sl2(rng), long(rng.uniform_int(9)) - 4};
        CHECK(central_degree(lift_compose(f, lift_inverse(f))) == 0);
        CHECK(central_degree(lift_compose(lift_inverse(f), f)) == 0);
    }
}

TEST_CASE("central element composition shifts the offset") {
    Rng rng(43);
    Mat2 m = random_sl2(rng);
    LiftedMap f{m, 2};
    LiftedMap zf = lift_compose(lift_central({5}), f);
    CHECK(zf.k == 7);
    CHECK_THROWS_AS(central_degree(LiftedMap{m, 0}), error); // generic m is not central
}

TEST_CASE("rotation products: degree = 2a - r") {
    // canonical lifts of R(theta_i), sum = 2a*pi with r angles above pi
    Rng rng(47);
    for (int iter = 0; iter < 300; ++iter) {
        int count = 3 + rng.uniform_int(3);
        std::vector<double> th(count);
        // brute-force oracle: draw all but the last angle, close to a 2*pi multiple
        for (int i = 0; i + 1 < count; ++i) th[i] = rng.uniform(0.1, 2 * M_PI - 0.1);
        double partial = 0;
        for (int i = 0; i + 1 < count; ++i) partial += th[i];
        int a = int(std::ceil(partial / (2 * M_PI) + 0.25));
        double last = 2 * M_PI * a - partial;
        if (last <= 0.1 || last >= 2 * M_PI - 0.1 || std::abs(last - M_PI) < 0.1) continue;
        th.back() = last;
        int r = 0;
        for (double t : th) r += t > M_PI ? 1 : 0;
        LiftedMap total = lift_central({0});
        for (double t : th) total = lift_compose(total, lift(Mat2::rotation(t)));
        CHECK(central_degree(total) == 2 * a - r);
    }
}
