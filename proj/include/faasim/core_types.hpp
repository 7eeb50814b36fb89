#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace faasim {

// All simulated time is integer microseconds.
using Usec = std::uint64_t;
using TaskId = std::uint32_t;
using CoreId = std::uint32_t;

inline constexpr Usec kNoSlice = std::numeric_limits<Usec>::max();

enum class SegKind : std::uint8_t { Cpu, Io };

struct Segment {
    SegKind kind;
    Usec length_us;
};

// One function invocation: a submit time plus an ordered list of CPU/IO
// bursts. Generated workloads use dense ids 0..n-1 with non-decreasing
// submit times.
struct FunctionRequest {
    std::uint32_t id = 0;
    Usec submit_time_us = 0;
    std::vector<Segment> segments;
    Usec total_cpu_us = 0;
    int group_label = 0;

    Usec total_service_us() const {
        Usec s = 0;
        for (const auto& seg : segments) s += seg.length_us;
        return s;
    }
};

enum class SchedClass : std::uint8_t { None, Filter, CfsPool, RtFifo, RtRr, Oracle };

inline const char* to_string(SchedClass c) {
    switch (c) {
        case SchedClass::None: return "none";
        case SchedClass::Filter: return "filter";
        case SchedClass::CfsPool: return "cfs";
        case SchedClass::RtFifo: return "fifo";
        case SchedClass::RtRr: return "rr";
        case SchedClass::Oracle: return "oracle";
    }
    return "?";
}

enum class TaskStatus : std::uint8_t { Queued, Running, BlockedIo, Done };

enum class PreemptReason : std::uint8_t {
    SliceExpired,
    HigherPriority,
    IoBlock,
    PolicyDemand,
};

// Configuration errors (bad specs, bad config files).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency faults of the simulation engine or a policy.
struct SimError : std::logic_error {
    explicit SimError(const std::string& what) : std::logic_error(what) {}
};

// Validates the FunctionRequest invariants; throws ConfigError on violation.
inline void validate_request(const FunctionRequest& req) {
    if (req.segments.empty())
        throw ConfigError("request " + std::to_string(req.id) + ": no segments");
    Usec cpu = 0;
    for (const auto& seg : req.segments) {
        if (seg.length_us == 0)
            throw ConfigError("request " + std::to_string(req.id) + ": zero-length segment");
        if (seg.kind == SegKind::Cpu) cpu += seg.length_us;
    }
    if (cpu != req.total_cpu_us)
        throw ConfigError("request " + std::to_string(req.id) + ": total_cpu_us mismatch");
    if (cpu == 0)
        throw ConfigError("request " + std::to_string(req.id) + ": no CPU work");
}

}  // namespace faasim
