#include "bilform/partition.hpp"

#include <stdexcept>
#include <string>

namespace bilform {

STPartition::STPartition(FieldPtr f, std::uint32_t s, std::uint32_t t)
    : field(f),
      ambient(s + t),
      s_small(s),
      t_big(t),
      big_piece(f, s + t),
      frame(Mat::identity(f, s + t)) {}

STPartition build_partition(FieldPtr field, std::uint32_t t_big, std::uint32_t s_small,
                            std::uint64_t cap) {
    if (s_small < 1 || s_small > t_big)
        throw std::invalid_argument("partition requires 1 <= s_small <= t_big");

    ExtField k(field, t_big, cap);  // throws cap_exceeded past the cap
    const std::uint64_t labels = k.order();
    const std::uint32_t s = s_small, t = t_big, amb = s + t;

    STPartition out(field, s, t);

    // big piece {0} x K
    Mat big(field, t, amb);
    for (std::uint32_t i = 0; i < t; ++i) big.at(i, s + i) = 1;
    out.big_piece = Subspace::from_generators(big);

    // small piece for label a: rows (e_i, a * x^i), x^i the power basis of H
    out.small_pieces.reserve(labels);
    for (std::uint64_t a = 0; a < labels; ++a) {
        Mat rows(field, s, amb);
        std::uint64_t basis = 1;  // code of x^i
        for (std::uint32_t i = 0; i < s; ++i) {
            rows.at(i, i) = 1;
            std::vector<code_t> img = k.digits(k.mul(a, basis));
            for (std::uint32_t j = 0; j < t; ++j) rows.at(i, s + j) = img[j];
            basis *= field->q();
        }
        Subspace piece = Subspace::from_generators(rows);
        if (piece.dim() != s)
            throw verification_error("partition piece has wrong dimension");
        out.small_pieces.emplace_back(a, std::move(piece));
    }

    if (auto bad = verify_partition(out, cap)) {
        throw verification_error("constructed partition fails verification at cover count " +
                                 std::to_string(bad->cover_count));
    }
    return out;
}

std::optional<PartitionViolation> verify_partition(const STPartition& p, std::uint64_t cap) {
    const std::uint64_t q = p.field->q();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < p.ambient; ++i) {
        if (total > cap / q) throw cap_exceeded("partition verification exceeds the cap");
        total *= q;
    }

    std::vector<code_t> v(p.ambient, 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t tmp = code;
        for (std::uint32_t i = 0; i < p.ambient; ++i) {
            v[i] = static_cast<code_t>(tmp % q);
            tmp /= q;
        }
        std::uint32_t covers = p.big_piece.contains(v) ? 1u : 0u;
        for (const auto& [label, piece] : p.small_pieces)
            if (piece.contains(v)) ++covers;
        if (covers != 1) return PartitionViolation{v, covers};
    }
    return std::nullopt;
}

}  // namespace bilform
