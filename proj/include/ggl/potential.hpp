// potential.hpp - double-well potentials, the surface-tension constant
// sigma(W) = 2 * int_0^1 sqrt(W), and the admissible exponent ranges for the
// simultaneous scaling eps = N^-alpha.
#pragma once

#include <functional>
#include <optional>

namespace ggl {

struct DoubleWell {
    std::function<double(double)> w;       // W(s) >= 0, wells at 0 and 1
    std::function<double(double)> dw;      // W'(s)
    // Recorded growth exponents: beta near the wells, p for the tail of W,
    // q for the tail of W'. Optional because custom wells may not state them.
    std::optional<double> beta;
    std::optional<double> p_growth;
    std::optional<double> q_growth;
};

// W(s) = s^2 (s-1)^2 with beta = 2, p = 4, q = 3.
DoubleWell standard_well();

// sigma(W) = 2 * int_0^1 sqrt(W(s)) ds by adaptive Simpson quadrature.
// Throws if a negative sample of W is encountered.
double sigma_w(const DoubleWell& well, double abs_tol = 1e-10);

enum class ScalingMode { H, K };
enum class AlphaVerdict { InRegime, Conjectural, OutOfRegime };

// H mode: in-regime iff alpha > beta. K mode: in-regime iff
// 0 < alpha < 2/(q+3); conjectural on [2/(q+3), 2/(q+2)).
AlphaVerdict validate_alpha(const DoubleWell& well, ScalingMode mode, double alpha);

const char* to_string(AlphaVerdict v);

}  // namespace ggl
