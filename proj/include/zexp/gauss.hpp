#pragma once

#include <vector>

namespace zexp {

// Gauss-Legendre rule on [-1, 1]. Nodes are computed once per order by Newton
// iteration on the Legendre recurrence and cached for the process lifetime.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

}  // namespace zexp
