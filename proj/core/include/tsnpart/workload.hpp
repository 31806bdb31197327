#pragma once

#include "tsnpart/network.hpp"
#include "tsnpart/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tsnpart {

/// Cyclic time-triggered communication demand. Deadline always equals the
/// period; all endpoints are end devices and the source is never a
/// destination.
struct Stream {
    StreamId id{};
    NodeId source{};
    std::vector<NodeId> destinations; // sorted, non-empty
    MicroTime period_us{};
    std::uint32_t frame_bytes{};
    MicroTime deadline_us{};

    friend bool operator==(const Stream&, const Stream&) = default;
};

void validate_stream(const Stream& s, const Network& net);

/// Distributions used for random stream generation. Destination-count levels
/// are drawn with halving weights (1/2, 1/4, ...) where the final level
/// repeats the weight of its predecessor.
struct WorkloadProfile {
    std::string label;
    std::vector<std::uint32_t> frame_sizes;
    std::vector<MicroTime> periods;
    std::vector<std::uint32_t> dest_levels;

    static WorkloadProfile five_level();
    static WorkloadProfile three_level();
};

struct IterationDelta {
    std::vector<Stream> add;
    std::vector<StreamId> del; // sorted

    friend bool operator==(const IterationDelta&, const IterationDelta&) = default;
};

/// Replayable sequence of stream arrivals and departures against one
/// topology. Deterministic for a fixed generation seed.
struct Scenario {
    std::string topology_name;
    std::vector<Stream> initial;
    std::vector<IterationDelta> deltas;
    std::map<std::string, std::string> meta;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

using StreamSet = std::map<StreamId, Stream>;

std::vector<Stream> gen_streams(std::size_t n, const Network& net, const WorkloadProfile& profile,
                                std::uint64_t seed);

/// S_{i+1} = (admitted \ delta.del) ∪ (delta.add \ rejected).
/// Throws if a del id is not admitted or a rejected id is not among the adds.
StreamSet apply_iteration(const StreamSet& admitted, const IterationDelta& delta,
                          const std::vector<StreamId>& rejected);

Scenario gen_scenario(const Network& net, std::size_t initial_n, std::size_t add_per_iter,
                      std::size_t del_per_iter, std::size_t iterations,
                      const WorkloadProfile& profile, std::uint64_t seed);

} // namespace tsnpart
