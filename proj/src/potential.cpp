#include "ggl/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace ggl {

DoubleWell standard_well() {
    DoubleWell w;
    w.w = [](double s) {
        double t = s * (s - 1.0);
        return t * t;
    };
    w.dw = [](double s) { return 2.0 * s * (s - 1.0) * (2.0 * s - 1.0); };
    w.beta = 2.0;
    w.p_growth = 4.0;
    w.q_growth = 3.0;
    return w;
}

namespace {

double sqrt_w(const DoubleWell& well, double s) {
    double v = well.w(s);
    if (v < 0.0)
        throw std::runtime_error("sigma_w: negative potential sample at s = " +
                                 std::to_string(s));
    return std::sqrt(v);
}

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const DoubleWell& well, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = sqrt_w(well, lm), frm = sqrt_w(well, rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(well, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(well, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double sigma_w(const DoubleWell& well, double abs_tol) {
    double fa = sqrt_w(well, 0.0), fm = sqrt_w(well, 0.5), fb = sqrt_w(well, 1.0);
    double whole = simpson(fa, fm, fb, 1.0);
    double integral = adaptive_simpson(well, 0.0, 1.0, fa, fm, fb, whole, abs_tol, 40);
    return 2.0 * integral;
}

AlphaVerdict validate_alpha(const DoubleWell& well, ScalingMode mode, double alpha) {
    if (mode == ScalingMode::H) {
        if (!well.beta)
            throw std::invalid_argument("validate_alpha: well growth exponent beta not recorded");
        return alpha > *well.beta ? AlphaVerdict::InRegime : AlphaVerdict::OutOfRegime;
    }
    if (!well.q_growth)
        throw std::invalid_argument("validate_alpha: derivative growth exponent q not recorded");
    double q = *well.q_growth;
    if (alpha > 0.0 && alpha < 2.0 / (q + 3.0)) return AlphaVerdict::InRegime;
    if (alpha >= 2.0 / (q + 3.0) && alpha < 2.0 / (q + 2.0)) return AlphaVerdict::Conjectural;
    return AlphaVerdict::OutOfRegime;
}

const char* to_string(AlphaVerdict v) {
    switch (v) {
        case AlphaVerdict::InRegime: return "in-regime";
        case AlphaVerdict::Conjectural: return "conjectural";
        case AlphaVerdict::OutOfRegime: return "out-of-regime";
    }
    return "?";
}

}  // namespace ggl
