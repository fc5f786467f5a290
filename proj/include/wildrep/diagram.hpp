#pragma once

#include <string>
#include <vector>

#include "wildrep/formal.hpp"

namespace wildrep {

struct DiagramNode {
    std::string label;
    SpherePoint point;
    int dim = 1;
    std::vector<int> legs;  // leg-node dimensions, outward
};

struct Diagram {
    std::vector<DiagramNode> nodes;
    std::vector<std::vector<long>> B;  // core nodes only; diagonal is twice the loop count

    /// Full dimension vector: core nodes first, then each leg in node order.
    std::vector<int> dimension_vector() const;
    /// B extended to leg nodes by weight-1 chain edges.
    std::vector<std::vector<long>> full_matrix() const;
};

std::vector<std::vector<long>> core_b_matrix(const GlobalClass& g);
std::vector<int> legs(const ConjClass& c);
Diagram diagram_of(const GlobalClass& g);
long dimension(const Diagram& d);
bool diagram_eq(const Diagram& a, const Diagram& b);

}  // namespace wildrep
