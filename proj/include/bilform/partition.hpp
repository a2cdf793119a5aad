#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bilform/linalg.hpp"

namespace bilform {

// A partition of F_q^{s+t} into one t-dimensional piece and q^t pieces of
// dimension s, every nonzero vector covered exactly once. Built by slicing
// the line spread of K^2, K = F_{q^t}: the big piece is {0} x K and the
// small piece with label a is {(x, a*x) : x in H} for an s-dimensional
// F_q-subspace H of K.
struct STPartition {
    FieldPtr field;
    std::uint32_t ambient = 0;   // s_small + t_big
    std::uint32_t s_small = 0, t_big = 0;
    Subspace big_piece;
    // (label code in F_{q^t}, piece), in increasing label order.
    std::vector<std::pair<std::uint64_t, Subspace>> small_pieces;
    // Change of basis from construction coordinates (H x K) to the caller's
    // standard coordinates; identity as built.
    Mat frame;

    STPartition(FieldPtr f, std::uint32_t s, std::uint32_t t);
};

// Builds and exhaustively verifies the partition. Requires 1 <= s <= t and
// both q^t and q^{s+t} within the cap.
STPartition build_partition(FieldPtr field, std::uint32_t t_big, std::uint32_t s_small,
                            std::uint64_t cap = kDefaultEnumCap);

struct PartitionViolation {
    std::vector<code_t> vec;      // first nonzero vector not covered exactly once
    std::uint32_t cover_count = 0;
};

// Checks every nonzero ambient vector against every piece; nullopt means the
// partition property holds.
std::optional<PartitionViolation> verify_partition(const STPartition& p,
                                                   std::uint64_t cap = kDefaultEnumCap);

}  // namespace bilform
