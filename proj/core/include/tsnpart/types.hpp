#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace tsnpart {

using NodeId = std::uint32_t;
using StreamId = std::uint64_t;

/// Times and durations are microseconds throughout; signed to keep
/// interval arithmetic safe.
using MicroTime = std::int64_t;

enum class NodeKind : std::uint8_t { Bridge, EndDevice };

/// Egress port of `from` towards `to`. A physical link {u,v} yields the two
/// directed links (u,v) and (v,u), each with its own occupancy.
struct DirectedLink {
    NodeId from{};
    NodeId to{};

    friend auto operator<=>(const DirectedLink&, const DirectedLink&) = default;
};

/// Identity of one sub-stream: the parent stream it was partitioned from and
/// its position within the parent's group list.
struct SubStreamId {
    StreamId parent{};
    std::uint32_t sub_index{};

    friend auto operator<=>(const SubStreamId&, const SubStreamId&) = default;
};

} // namespace tsnpart
