#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bilform/bignum.hpp"
#include "bilform/linalg.hpp"

namespace bilform {

// The bilinear forms graph H_q(n, d): vertices are the n x d matrices over
// F_q, at rank distance; equivalently the d-subspaces of F_q^{n+d} meeting
// the fixed n-subspace N = span(e_0, ..., e_{n-1}) trivially. q^{nd}
// vertices, diameter min(n, d).
struct GraphSpec {
    FieldPtr field;
    std::uint32_t n = 0, d = 0;

    GraphSpec(FieldPtr f, std::uint32_t n_, std::uint32_t d_);

    std::uint64_t q() const { return field->q(); }
    std::uint32_t diameter() const { return n < d ? n : d; }
    std::uint64_t vertex_count() const;  // throws std::overflow_error past 2^63

    bool operator==(const GraphSpec& rhs) const;
};

// Vertex count checked against the enumeration cap.
std::uint64_t enumeration_count(const GraphSpec& spec, std::uint64_t cap);

// Vertex <-> index bijection: the matrix entries read row-major from the top
// left are the base-q digits of the index, most significant first. Index 0 is
// the zero matrix, and the digit string of an index is the flattened matrix.
Mat vertex_matrix(const GraphSpec& spec, std::uint64_t index);
std::uint64_t vertex_index(const GraphSpec& spec, const Mat& v);

// Rank distance rank(f_u - f_v); equals d - dim(U_u cap U_v) in the subspace
// model. Values lie in [0, min(n, d)].
std::uint32_t distance(const GraphSpec& spec, const Mat& u, const Mat& v);

// Subspace model: f maps to U_f = {(f(y), y) : y in F_q^d}, the row space of
// [f^T | I_d]; the first n coordinates span N.
Subspace subspace_of(const GraphSpec& spec, const Mat& v);
// Inverse of subspace_of; throws if u does not meet N trivially.
Mat vertex_of(const GraphSpec& spec, const Subspace& u);

Subspace distinguished_subspace(const GraphSpec& spec);  // N

// Matrix transpose realizes the isomorphism H_q(n,d) -> H_q(d,n); it
// preserves all pairwise distances.
Mat transpose_map(const Mat& v);
GraphSpec transpose_spec(const GraphSpec& spec);

// Exact number of n x d matrices of each rank i in [0, min(n,d)]:
// [n over i]_q [d over i]_q prod_{j<i} (q^i - q^j). Sums to q^{nd}. Also the
// sphere sizes around any fixed vertex.
std::vector<BigUint> rank_class_sizes(std::uint64_t q, std::uint32_t n, std::uint32_t d);
std::vector<BigUint> rank_class_sizes(const GraphSpec& spec);

// Batch rank-distance evaluation against a fixed landmark list, indexed by
// vertex number. Bit-packed XOR path for q = 2, table-driven otherwise.
// Immutable after construction; safe to share across verification workers.
class DistanceKernel {
public:
    DistanceKernel(const GraphSpec& spec, std::span<const Mat> landmarks);

    std::size_t landmark_count() const { return count_; }
    // Fills out[k] = distance(vertex(index), landmark k) for all k.
    void distances(std::uint64_t vertex_index, std::span<std::uint32_t> out) const;
    std::uint32_t distance_to(std::uint64_t vertex_index, std::size_t k) const;

private:
    GraphSpec spec_;
    std::size_t count_;
    bool bits_;
    std::vector<std::uint64_t> lm_bits_;    // q = 2: packed vertex index bits
    std::vector<std::uint8_t> lm_digits_;   // otherwise: flat n*d digit blocks

    std::uint32_t rank_digits(std::uint8_t* work) const;
};

}  // namespace bilform
