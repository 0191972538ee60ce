#pragma once

#include <vector>

namespace logbloch {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights for the n-point rule, computed by Newton iteration on
/// Legendre polynomials and cached per n. Thread-safe.
const GaussLegendreRule& gauss_legendre(int n);

} // namespace logbloch
