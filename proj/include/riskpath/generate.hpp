#pragma once

#include <cstdint>

#include "riskpath/graph.hpp"

namespace riskpath {

struct LayeredOptions {
    int layers = 4;        // >= 2; source alone in layer 0, destination in the last
    int width = 3;         // >= 1 vertices per interior layer
    double edge_prob = 0.5;  // (0, 1]: chance of each forward edge
    std::uint64_t seed = 0;
    double risk_min = 0.0;
    double risk_max = 1.0;
};

/// Random layered DAG with forward-only edges between consecutive layers and
/// uniform risks in [risk_min, risk_max]. A source-to-destination spine is
/// always forced in. Deterministic per seed.
Dag generate_layered(const LayeredOptions& opt);

}  // namespace riskpath
