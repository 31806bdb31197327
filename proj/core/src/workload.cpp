#include "tsnpart/workload.hpp"

#include "tsnpart/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsnpart {

namespace {

std::uint32_t draw_dest_count(const std::vector<std::uint32_t>& levels, std::mt19937_64& eng) {
    // Halving weights over 2^(k-1) slots: level i gets 2^(k-2-i) slots,
    // the last level gets 1 slot like its predecessor.
    const std::size_t k = levels.size();
    if (k == 1) {
        return levels[0];
    }
    const std::uint64_t slots = std::uint64_t(1) << (k - 1);
    std::uint64_t r = rng::below(eng, slots);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const std::uint64_t w = std::uint64_t(1) << (k - 2 - i);
        if (r < w) {
            return levels[i];
        }
        r -= w;
    }
    return levels[k - 1];
}

Stream draw_stream(StreamId id, const Network& net, const WorkloadProfile& profile,
                   std::mt19937_64& eng) {
    Stream s;
    s.id = id;
    s.period_us = profile.periods[rng::below(eng, profile.periods.size())];
    s.frame_bytes = profile.frame_sizes[rng::below(eng, profile.frame_sizes.size())];
    s.deadline_us = s.period_us;

    const std::uint32_t dest_count = draw_dest_count(profile.dest_levels, eng);
    const auto& eds = net.end_devices();
    if (dest_count + 1 > eds.size()) {
        throw std::invalid_argument("gen_streams: destination count exceeds available end devices");
    }
    std::vector<NodeId> pool = eds;
    rng::partial_shuffle(pool, std::size_t(dest_count) + 1, eng);
    s.source = pool[0];
    s.destinations.assign(pool.begin() + 1, pool.begin() + 1 + dest_count);
    std::sort(s.destinations.begin(), s.destinations.end());
    return s;
}

} // namespace

void validate_stream(const Stream& s, const Network& net) {
    if (s.destinations.empty()) {
        throw std::invalid_argument("Stream: empty destination set");
    }
    if (s.period_us <= 0 || s.frame_bytes == 0) {
        throw std::invalid_argument("Stream: period and frame size must be positive");
    }
    if (s.deadline_us != s.period_us) {
        throw std::invalid_argument("Stream: deadline must equal period");
    }
    if (s.source >= net.node_count() || !net.is_end_device(s.source)) {
        throw std::invalid_argument("Stream: source must be an end device");
    }
    for (NodeId d : s.destinations) {
        if (d >= net.node_count() || !net.is_end_device(d)) {
            throw std::invalid_argument("Stream: destinations must be end devices");
        }
        if (d == s.source) {
            throw std::invalid_argument("Stream: source cannot be a destination");
        }
    }
    if (std::adjacent_find(s.destinations.begin(), s.destinations.end()) != s.destinations.end()) {
        throw std::invalid_argument("Stream: duplicate destination");
    }
}

WorkloadProfile WorkloadProfile::five_level() {
    return WorkloadProfile{"5level",
                           {125, 250, 500, 750, 1000, 1500},
                           {250, 500, 1000, 2000},
                           {1, 2, 4, 8, 16}};
}

WorkloadProfile WorkloadProfile::three_level() {
    return WorkloadProfile{"3level",
                           {125, 250, 500, 750, 1000, 1500},
                           {250, 500, 1000, 2000},
                           {1, 2, 4}};
}

std::vector<Stream> gen_streams(std::size_t n, const Network& net, const WorkloadProfile& profile,
                                std::uint64_t seed) {
    if (profile.frame_sizes.empty() || profile.periods.empty() || profile.dest_levels.empty()) {
        throw std::invalid_argument("gen_streams: profile has an empty distribution");
    }
    auto eng = rng::make_engine(seed, 0x6765'6e73);
    std::vector<Stream> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(draw_stream(StreamId(i), net, profile, eng));
    }
    return out;
}

StreamSet apply_iteration(const StreamSet& admitted, const IterationDelta& delta,
                          const std::vector<StreamId>& rejected) {
    for (StreamId r : rejected) {
        const bool in_add = std::any_of(delta.add.begin(), delta.add.end(),
                                        [&](const Stream& s) { return s.id == r; });
        if (!in_add) {
            throw std::invalid_argument("apply_iteration: rejected id not among added streams");
        }
    }
    StreamSet next = admitted;
    for (StreamId id : delta.del) {
        if (next.erase(id) == 0) {
            throw std::invalid_argument("apply_iteration: deleted id " + std::to_string(id) +
                                        " is not admitted (scenario corruption)");
        }
    }
    for (const Stream& s : delta.add) {
        if (std::find(rejected.begin(), rejected.end(), s.id) != rejected.end()) {
            continue;
        }
        if (!next.emplace(s.id, s).second) {
            throw std::invalid_argument("apply_iteration: added id already admitted");
        }
    }
    return next;
}

Scenario gen_scenario(const Network& net, std::size_t initial_n, std::size_t add_per_iter,
                      std::size_t del_per_iter, std::size_t iterations,
                      const WorkloadProfile& profile, std::uint64_t seed) {
    auto gen_eng = rng::make_engine(seed, 0x6164'64);
    auto del_eng = rng::make_engine(seed, 0x6465'6c);

    Scenario sc;
    sc.topology_name = net.name();
    sc.meta["profile"] = profile.label;
    sc.meta["seed"] = std::to_string(seed);
    sc.meta["initial"] = std::to_string(initial_n);
    sc.meta["add_per_iter"] = std::to_string(add_per_iter);
    sc.meta["del_per_iter"] = std::to_string(del_per_iter);

    StreamId next_id = 0;
    std::vector<StreamId> alive; // no-rejection evolution
    sc.initial.reserve(initial_n);
    for (std::size_t i = 0; i < initial_n; ++i) {
        sc.initial.push_back(draw_stream(next_id++, net, profile, gen_eng));
        alive.push_back(sc.initial.back().id);
    }

    sc.deltas.reserve(iterations);
    for (std::size_t it = 0; it < iterations; ++it) {
        IterationDelta delta;
        const std::size_t k = std::min(del_per_iter, alive.size());
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t idx = std::size_t(rng::below(del_eng, alive.size()));
            delta.del.push_back(alive[idx]);
            alive[idx] = alive.back();
            alive.pop_back();
        }
        std::sort(delta.del.begin(), delta.del.end());
        delta.add.reserve(add_per_iter);
        for (std::size_t j = 0; j < add_per_iter; ++j) {
            delta.add.push_back(draw_stream(next_id++, net, profile, gen_eng));
            alive.push_back(delta.add.back().id);
        }
        sc.deltas.push_back(std::move(delta));
    }
    return sc;
}

} // namespace tsnpart
