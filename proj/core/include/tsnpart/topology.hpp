#pragma once

#include "tsnpart/network.hpp"

#include <cstdint>
#include <string>

namespace tsnpart {

enum class TopologyKind { Grid, ErdosRenyi, Waxman, BarabasiAlbert, SmallWorld };

std::string to_string(TopologyKind kind);
TopologyKind topology_kind_from_string(const std::string& text);

/// Knobs for the random families. Values aim for average bridge degrees in
/// the range of a mid-size industrial backbone; all overridable.
struct GeneratorParams {
    double er_edge_prob = 0.08;
    double waxman_alpha = 0.4;
    double waxman_beta = 0.4;
    unsigned ba_attach = 2;
    unsigned sw_ring_degree = 4;
    double sw_rewire_prob = 0.1;
    unsigned max_attempts = 100;
};

/// Generate a connected bridge topology of the given family with one end
/// device attached per bridge. Bridges get ids 0..n-1 in generator order, the
/// end device of bridge i gets id n+i. Deterministic in (kind, n, params,
/// seed); random families retry with derived sub-seeds until connected and
/// throw after params.max_attempts failures.
Network gen_topology(TopologyKind kind, unsigned n_bridges, const GeneratorParams& params,
                     std::uint64_t seed);

inline Network gen_topology(TopologyKind kind, unsigned n_bridges, std::uint64_t seed) {
    return gen_topology(kind, n_bridges, GeneratorParams{}, seed);
}

} // namespace tsnpart
