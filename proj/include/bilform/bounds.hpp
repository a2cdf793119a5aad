#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bilform/bignum.hpp"
#include "bilform/graph.hpp"

namespace bilform {

enum class LogBase { natural, two, ten };
const char* to_string(LogBase b);
LogBase log_base_from_string(const std::string& s);  // "e", "2", "10"

// Exact Gaussian binomial [a over b]_q.
BigUint gaussian(std::uint32_t a, std::uint32_t b, std::uint64_t q);

// Size of the constructed resolving set: q^{n+d-1} when n >= d+2, q^{n+d}
// otherwise. Defined for n >= d >= 2.
BigUint theorem_bound(std::uint64_t q, std::uint32_t n, std::uint32_t d);

// 4 sqrt(q^{nd}) log(q^{nd}) — the general bound for primitive
// distance-regular graphs, evaluated for H_q(n,d).
double babai_general(std::uint64_t q, std::uint32_t n, std::uint32_t d,
                     LogBase base = LogBase::natural);

struct BabaiStrong {
    double bound;          // 2d * q^{nd} / (q^{nd} - M) * log(q^{nd})
    BigUint largest_class; // M: the largest rank class size
};
BabaiStrong babai_strong(std::uint64_t q, std::uint32_t n, std::uint32_t d,
                         LogBase base = LogBase::natural);

// Baseline: grows a resolving set by always adding the vertex separating the
// most still-unseparated pairs, smallest index on ties. Needs the dense
// distance matrix, so it is limited to small graphs.
std::vector<std::uint64_t> greedy_resolving(const GraphSpec& spec,
                                            std::uint64_t cap = kDefaultEnumCap);

// Smallest k <= k_max such that some k-subset of vertices resolves the graph;
// exhaustive subset search with pair-coverage pruning. Practical only for
// graphs with at most ~100 vertices.
std::optional<std::uint32_t> exact_min_resolving(const GraphSpec& spec,
                                                 std::uint32_t k_max,
                                                 std::uint64_t cap = kDefaultEnumCap);

struct BoundsRow {
    std::uint64_t q = 0;
    std::uint32_t n = 0, d = 0;
    BigUint theorem;
    double babai_gen = 0.0;
    double babai_str = 0.0;
    BigUint babai_m;
    LogBase base = LogBase::natural;
    std::optional<std::uint32_t> greedy_size;
    std::optional<std::uint32_t> exact_min;
    std::string best;  // smallest of {"theorem", "babai_general", "babai_strong"}
};

struct GridPoint {
    std::uint64_t q = 0;
    std::uint32_t n = 0, d = 0;
};

struct ReportOptions {
    LogBase base = LogBase::natural;
    bool with_greedy = false;
    bool with_exact = false;
    std::uint32_t exact_k_max = 8;
    std::uint64_t cap = kDefaultEnumCap;
};

BoundsRow bounds_row(std::uint64_t q, std::uint32_t n, std::uint32_t d,
                     const ReportOptions& opt = {});
std::vector<BoundsRow> compare_report(std::span<const GridPoint> grid,
                                      const ReportOptions& opt = {});

}  // namespace bilform
