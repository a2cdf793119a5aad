#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bilform/graph.hpp"
#include "bilform/partition.hpp"

namespace bilform {

// One block of the construction: a (d+1)-dimensional space W and the
// 1-dimensional line its landmarks must avoid (W cap N in the wide case,
// the fixed line of N in the near-square case).
struct Block {
    Subspace space;
    Subspace line;
    std::uint64_t label = 0;
};

struct ConstructionContext {
    int case_tag = 0;        // 1: n >= d+2, 2: d <= n <= d+1
    GraphSpec graph;
    STPartition partition;   // construction coordinates; frame maps them out
    Subspace fixed_n;        // N = span(e_0..e_{n-1}), standard coordinates
    Subspace anchor;         // dim n-1 (case 1) or dim 1 (case 2), standard coords
    std::vector<Block> blocks;
};

struct Landmark {
    Mat vertex;                      // n x d matrix
    std::uint32_t block = 0;         // index into ConstructionContext::blocks
    std::vector<code_t> functional;  // d coordinates selecting the hyperplane
};

struct LandmarkSet {
    GraphSpec spec;
    std::vector<Landmark> items;

    std::vector<Mat> vertices() const;
};

struct Construction {
    LandmarkSet set;
    ConstructionContext context;
};

// Builds the landmark family: q^{n+d-1} vertices when n >= d+2, q^{n+d}
// otherwise. Landmarks are ordered block-by-block (partition label order),
// hyperplanes in lexicographic functional order. Every internal step is
// cross-checked; failures abort with verification_error.
Construction build_landmarks(const GraphSpec& spec, std::uint64_t cap = kDefaultEnumCap);

// All dim(W)-1 subspaces of W meeting the line trivially, exactly q^{dim(W)-1}
// of them: with W = span{ell, w_1, ..., w_k} and ell spanning the line, the
// hyperplane for functional c is span{w_j - c_j * ell}. Lexicographic order
// of c, first coordinate most significant.
std::vector<Subspace> hyperplanes_avoiding(const Subspace& w, const Subspace& line);

// Metric representation: entry k is the distance from v to the k-th landmark.
std::vector<std::uint32_t> signature(const GraphSpec& spec, const Mat& v,
                                     const LandmarkSet& set);

struct VerifyStats {
    std::uint64_t vertices_checked = 0;
    double wall_ms = 0.0;
    unsigned workers = 1;
};

struct Certificate {
    bool resolving = false;
    // Lexicographically first colliding pair of vertex indices, if any.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> counterexample;
    VerifyStats stats;
};

// Streams every vertex, packs its signature, and detects duplicates exactly.
// Signature filling is split across workers; the verdict is identical for
// any worker count.
Certificate verify_resolving(const GraphSpec& spec, std::span<const Mat> landmarks,
                             unsigned workers = 1, std::uint64_t cap = kDefaultEnumCap);
Certificate verify_resolving(const LandmarkSet& set, unsigned workers = 1,
                             std::uint64_t cap = kDefaultEnumCap);

enum class WitnessBranch {
    dim_gap,   // the two block traces have different dimensions
    in_span,   // equal dimensions, distinguishing vector inside span{line, trace}
    off_span,  // equal dimensions, distinguishing vector outside it
};
const char* to_string(WitnessBranch b);

struct Witness {
    std::size_t landmark_pos = 0;    // position in the LandmarkSet order
    std::uint32_t block = 0;
    std::vector<code_t> functional;
    Subspace separator;              // the landmark's subspace U
    std::uint32_t dim_a = 0, dim_b = 0;  // dim(A cap U), dim(B cap U); never equal
    WitnessBranch branch = WitnessBranch::dim_gap;
    std::vector<code_t> theta;       // basis vector of the block line
    std::vector<code_t> alpha;       // distinguishing vector; empty in dim_gap
};

// Constructive separation: walks the blocks for the first differing trace and
// builds a landmark U with dim(A cap U) != dim(B cap U). The inequality is
// re-verified before returning; failure throws verification_error.
Witness find_separating_landmark(const Mat& a, const Mat& b,
                                 const ConstructionContext& ctx, const LandmarkSet& set);

}  // namespace bilform
