#include "riskpath/generate.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "riskpath/rng.hpp"

namespace riskpath {

Dag generate_layered(const LayeredOptions& opt) {
    if (opt.layers < 2) throw std::invalid_argument("generate_layered: layers must be >= 2");
    if (opt.width < 1) throw std::invalid_argument("generate_layered: width must be >= 1");
    if (!(opt.edge_prob > 0.0 && opt.edge_prob <= 1.0))
        throw std::invalid_argument("generate_layered: edge_prob must be in (0,1]");
    if (!(opt.risk_min >= 0.0 && opt.risk_max <= 1.0 && opt.risk_min <= opt.risk_max))
        throw std::invalid_argument("generate_layered: risks must satisfy 0 <= min <= max <= 1");

    SplitMix64 rng(opt.seed);
    auto layer_names = [&](int layer) {
        std::vector<std::string> names;
        if (layer == 0) {
            names.push_back("s");
        } else if (layer == opt.layers - 1) {
            names.push_back("t");
        } else {
            for (int k = 0; k < opt.width; ++k)
                names.push_back("L" + std::to_string(layer) + "N" + std::to_string(k));
        }
        return names;
    };

    GraphSpec spec;
    spec.source = "s";
    spec.destination = "t";
    for (int layer = 0; layer + 1 < opt.layers; ++layer) {
        auto tails = layer_names(layer);
        auto heads = layer_names(layer + 1);
        for (size_t a = 0; a < tails.size(); ++a) {
            for (size_t b = 0; b < heads.size(); ++b) {
                // the spine (first vertex of each layer) is always connected
                bool forced = a == 0 && b == 0;
                bool sampled = rng.next_double() < opt.edge_prob;
                double risk = opt.risk_min + (opt.risk_max - opt.risk_min) * rng.next_double();
                if (!forced && !sampled) continue;
                spec.edges.push_back(
                    {tails[a] + "->" + heads[b], tails[a], heads[b], risk});
            }
        }
    }
    return Dag::validate(spec);
}

}  // namespace riskpath
