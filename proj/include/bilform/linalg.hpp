#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bilform/mat.hpp"

namespace bilform {

struct RrefResult {
    Mat reduced;                       // same shape, zero rows at the bottom
    std::uint32_t rank = 0;
    std::vector<std::uint32_t> pivots; // pivot column per nonzero row, ascending
};

// Unique reduced row echelon form; row space preserved. GF(2) matrices with
// at most 64 columns go through a bit-packed XOR eliminator.
RrefResult rref(const Mat& m);
std::uint32_t rank_of(const Mat& m);

// Rank of GF(2) rows packed one per machine word (bit c = column c).
std::uint32_t rank_gf2(std::span<const std::uint64_t> rows);

// A subspace of F_q^ambient held as its canonical RREF basis with no zero
// rows. Two Subspace values are equal as sets iff their bases are identical.
class Subspace {
public:
    Subspace(FieldPtr field, std::uint32_t ambient);  // the zero subspace
    static Subspace from_generators(const Mat& generators);
    // span(e_0, ..., e_{dim-1})
    static Subspace coordinate_prefix(FieldPtr field, std::uint32_t ambient,
                                      std::uint32_t dim);

    const FieldPtr& field() const { return basis_.field(); }
    std::uint32_t ambient() const { return ambient_; }
    std::uint32_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }

    bool contains(std::span<const code_t> v) const;
    bool contains(const Subspace& other) const;  // other as a subset of *this

    // v reduced against the basis; zero iff v is a member.
    std::vector<code_t> reduce(std::span<const code_t> v) const;

    bool operator==(const Subspace& rhs) const;

private:
    std::uint32_t ambient_;
    Mat basis_;
    std::vector<std::uint32_t> pivots_;
};

std::uint32_t intersect_dim(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Completes the given independent vectors (all inside `within`) to a full
// basis of `within`. The input prefix is kept verbatim; completion vectors
// are the first canonical basis rows of `within` that keep the set
// independent, scanned in row order.
std::vector<std::vector<code_t>> extend_to_basis(
    const std::vector<std::vector<code_t>>& independent, const Subspace& within);

}  // namespace bilform
