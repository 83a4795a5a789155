#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fusionrank/closed_form.hpp"
#include "fusionrank/verlinde.hpp"

using namespace fusionrank;

TEST_CASE("root data invariants hold exactly") {
    const auto d = g2_root_data();
    CHECK(check_root_data(d).empty());
    CHECK(d.positive_roots.size() == 6);
    const auto theta = d.highest_root();
    CHECK(theta == RootVector{Rat(3), Rat(2)});
    CHECK(d.inner(theta, theta) == Rat(2));
    CHECK(d.dual_coxeter == 4);
    CHECK(1 + d.comarks[0] + d.comarks[1] == d.dual_coxeter);
}

TEST_CASE("corrupted root data is caught") {
    auto d = g2_root_data();
    d.rho = {Rat(5), Rat(2)};
    CHECK_FALSE(check_root_data(d).empty());
    d = g2_root_data();
    d.gram[1][1] = Rat(1);
    CHECK_FALSE(check_root_data(d).empty());
    d = g2_root_data();
    d.comarks = {2, 1};
    CHECK_FALSE(check_root_data(d).empty());
}

TEST_CASE("weights at a level") {
    const auto d = g2_root_data();
    const auto one = g2_weights_at_level(1);
    CHECK(one.size() == 2);
    CHECK(one[0] == LevelWeight{0, 0});
    CHECK(one[1] == LevelWeight{1, 0});
    const auto two = g2_weights_at_level(2);
    CHECK(two.size() >= 3);
    for (const auto& w : one) CHECK(std::find(two.begin(), two.end(), w) != two.end());
    for (std::int64_t level = 1; level <= 6; ++level)
        for (const auto& w : g2_weights_at_level(level)) CHECK(level_of(w, d) <= level);
    CHECK_THROWS_AS(g2_weights_at_level(0), PreconditionError);
}

TEST_CASE("calibration picks exactly one variant") {
    const auto variant = calibrate_exponent();
    CHECK(variant == ExponentVariant::standard);
    CHECK(calibrate_exponent(g2_root_data(), 2, 10) == variant);
}

TEST_CASE("calibration fails on corrupted rho") {
    auto d = g2_root_data();
    d.rho = {Rat(4), Rat(3)};
    CHECK_THROWS_AS(calibrate_exponent(d), CalibrationError);
}

TEST_CASE("level-1 values match the exact closed form") {
    const auto variant = calibrate_exponent();
    auto v = verlinde_trig_rank(2, 1, variant);
    CHECK(v.nearest == 5);
    CHECK(v.residual < 1e-6L);
    CHECK(verlinde_trig_rank(1, 1, variant).nearest == 2);
    v = verlinde_trig_rank(6, 1, variant);
    CHECK(v.nearest == gregoire_rank(6));
    CHECK(v.residual < 1e-6L);
    for (std::int64_t g = 1; g <= 10; ++g) {
        const long double exact = gregoire_rank(g).get_d();
        const auto value = verlinde_trig_rank(g, 1, variant).value;
        CHECK(std::fabs(value - exact) < 1e-6L * exact);
    }
}

TEST_CASE("higher levels are nearly integral") {
    const auto variant = calibrate_exponent();
    for (std::int64_t level : {2, 3})
        for (std::int64_t g = 1; g <= 4; ++g) {
            const auto v = verlinde_trig_rank(g, level, variant);
            CAPTURE(level);
            CAPTURE(g);
            CHECK(v.residual < 1e-4L);
            CHECK(v.nearest > 0);
        }
}
