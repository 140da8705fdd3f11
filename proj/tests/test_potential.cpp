#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ggl/potential.hpp"

using namespace ggl;

TEST_CASE("standard well values") {
    DoubleWell w = standard_well();
    CHECK(w.w(0.0) == 0.0);
    CHECK(w.w(1.0) == 0.0);
    CHECK(w.w(0.5) == doctest::Approx(1.0 / 16).epsilon(1e-15));
    CHECK(w.dw(0.25) == doctest::Approx(3.0 / 16).epsilon(1e-15));
    CHECK(w.dw(0.0) == 0.0);
    CHECK(w.dw(1.0) == 0.0);
    CHECK(*w.beta == 2.0);
    CHECK(*w.p_growth == 4.0);
    CHECK(*w.q_growth == 3.0);
}

TEST_CASE("derivative matches a central difference of the potential") {
    DoubleWell w = standard_well();
    for (int i = 0; i <= 500; ++i) {
        double s = -2.0 + 5.0 * i / 500.0;
        double h = 1e-6;
        double fd = (w.w(s + h) - w.w(s - h)) / (2.0 * h);
        double scale = std::max(1e-3, std::abs(w.dw(s)));
        CHECK(std::abs(fd - w.dw(s)) <= 1e-6 * scale);
    }
}

TEST_CASE("surface tension constant") {
    DoubleWell w = standard_well();
    CHECK(sigma_w(w) == doctest::Approx(1.0 / 3).epsilon(1e-9));

    DoubleWell scaled = standard_well();
    auto base = standard_well();
    scaled.w = [base](double s) { return 4.0 * base.w(s); };
    scaled.dw = [base](double s) { return 4.0 * base.dw(s); };
    CHECK(sigma_w(scaled) == doctest::Approx(2.0 / 3).epsilon(1e-9));

    DoubleWell flat;
    flat.w = [](double) { return 0.0; };
    flat.dw = [](double) { return 0.0; };
    CHECK(sigma_w(flat) == 0.0);

    DoubleWell bad;
    bad.w = [](double s) { return s - 0.5; };  // negative on [0, 1/2)
    bad.dw = [](double) { return 1.0; };
    CHECK_THROWS_AS(sigma_w(bad), std::runtime_error);
}

TEST_CASE("alpha regime classification") {
    DoubleWell w = standard_well();  // beta = 2, q = 3: k range (0, 1/3), conjectural to 0.4
    CHECK(validate_alpha(w, ScalingMode::K, 0.3) == AlphaVerdict::InRegime);
    CHECK(validate_alpha(w, ScalingMode::K, 0.35) == AlphaVerdict::Conjectural);
    CHECK(validate_alpha(w, ScalingMode::K, 0.45) == AlphaVerdict::OutOfRegime);
    CHECK(validate_alpha(w, ScalingMode::K, -0.1) == AlphaVerdict::OutOfRegime);
    CHECK(validate_alpha(w, ScalingMode::H, 2.5) == AlphaVerdict::InRegime);
    CHECK(validate_alpha(w, ScalingMode::H, 1.5) == AlphaVerdict::OutOfRegime);

    DoubleWell bare;
    bare.w = [](double) { return 0.0; };
    bare.dw = [](double) { return 0.0; };
    CHECK_THROWS_AS(validate_alpha(bare, ScalingMode::K, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(validate_alpha(bare, ScalingMode::H, 2.5), std::invalid_argument);
}
