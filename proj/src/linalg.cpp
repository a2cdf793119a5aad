#include "bilform/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bilform {

namespace {

RrefResult rref_gf2(const Mat& m) {
    const std::uint32_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> piv(cols, 0);  // piv[c]: reduced row with pivot c
    std::vector<bool> has(cols, false);

    for (std::uint32_t r = 0; r < rows; ++r) {
        std::uint64_t v = 0;
        for (std::uint32_t c = 0; c < cols; ++c)
            if (m.at(r, c)) v |= std::uint64_t(1) << c;
        while (v) {
            std::uint32_t c = std::countr_zero(v);
            if (!has[c]) {
                piv[c] = v;
                has[c] = true;
                break;
            }
            v ^= piv[c];
        }
    }
    // clear later pivot columns, highest pivot first so one pass suffices
    for (std::uint32_t c = cols; c-- > 0;) {
        if (!has[c]) continue;
        std::uint64_t v = piv[c];
        std::uint64_t above = (c + 1 >= 64) ? 0 : ~((std::uint64_t(1) << (c + 1)) - 1);
        std::uint64_t rest = v & above;
        while (rest) {
            std::uint32_t b = std::countr_zero(rest);
            rest &= rest - 1;
            if (has[b]) v ^= piv[b];
        }
        piv[c] = v;
    }

    RrefResult out{Mat(m.field(), rows, cols), 0, {}};
    for (std::uint32_t c = 0; c < cols; ++c) {
        if (!has[c]) continue;
        for (std::uint32_t b = 0; b < cols; ++b)
            out.reduced.at(out.rank, b) = (piv[c] >> b) & 1;
        out.pivots.push_back(c);
        ++out.rank;
    }
    return out;
}

}  // namespace

RrefResult rref(const Mat& m) {
    if (m.field()->q() == 2 && m.cols() <= 64) return rref_gf2(m);

    const Field& k = *m.field();
    Mat w = m;
    const std::uint32_t rows = w.rows(), cols = w.cols();
    RrefResult out{Mat(m.field(), rows, cols), 0, {}};
    std::uint32_t cur = 0;
    for (std::uint32_t c = 0; c < cols && cur < rows; ++c) {
        std::uint32_t pr = cur;
        while (pr < rows && w.at(pr, c) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != cur)
            for (std::uint32_t b = 0; b < cols; ++b) std::swap(w.at(pr, b), w.at(cur, b));
        code_t scale = k.inv(w.at(cur, c));
        for (std::uint32_t b = 0; b < cols; ++b) w.at(cur, b) = k.mul(w.at(cur, b), scale);
        for (std::uint32_t r = 0; r < rows; ++r) {
            if (r == cur || w.at(r, c) == 0) continue;
            code_t f = w.at(r, c);
            for (std::uint32_t b = 0; b < cols; ++b)
                w.at(r, b) = k.sub(w.at(r, b), k.mul(f, w.at(cur, b)));
        }
        out.pivots.push_back(c);
        ++cur;
    }
    out.rank = cur;
    for (std::uint32_t r = 0; r < cur; ++r)
        for (std::uint32_t b = 0; b < cols; ++b) out.reduced.at(r, b) = w.at(r, b);
    return out;
}

std::uint32_t rank_of(const Mat& m) { return rref(m).rank; }

std::uint32_t rank_gf2(std::span<const std::uint64_t> rows) {
    std::uint64_t piv[64];
    std::uint32_t count = 0;
    for (std::uint64_t v : rows) {
        for (std::uint32_t i = 0; i < count; ++i)
            v = std::min(v, v ^ piv[i]);
        if (v) piv[count++] = v;
    }
    return count;
}

Subspace::Subspace(FieldPtr field, std::uint32_t ambient)
    : ambient_(ambient), basis_(std::move(field), 0, ambient) {}

Subspace Subspace::from_generators(const Mat& generators) {
    RrefResult r = rref(generators);
    Subspace s(generators.field(), generators.cols());
    Mat b(generators.field(), r.rank, generators.cols());
    for (std::uint32_t i = 0; i < r.rank; ++i)
        for (std::uint32_t c = 0; c < generators.cols(); ++c)
            b.at(i, c) = r.reduced.at(i, c);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::coordinate_prefix(FieldPtr field, std::uint32_t ambient,
                                     std::uint32_t dim) {
    if (dim > ambient) throw std::invalid_argument("dim exceeds ambient");
    Mat b(field, dim, ambient);
    for (std::uint32_t i = 0; i < dim; ++i) b.at(i, i) = 1;
    return from_generators(b);
}

std::vector<code_t> Subspace::reduce(std::span<const code_t> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
    const Field& k = *basis_.field();
    std::vector<code_t> w(v.begin(), v.end());
    for (std::uint32_t r = 0; r < basis_.rows(); ++r) {
        code_t f = w[pivots_[r]];
        if (f == 0) continue;
        for (std::uint32_t c = 0; c < ambient_; ++c)
            w[c] = k.sub(w[c], k.mul(f, basis_.at(r, c)));
    }
    return w;
}

bool Subspace::contains(std::span<const code_t> v) const {
    std::vector<code_t> w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](code_t c) { return c == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (std::uint32_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis().row(r))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

std::uint32_t intersect_dim(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || !(*a.field() == *b.field()))
        throw std::invalid_argument("subspaces live in different spaces");
    std::uint32_t r = rank_of(vstack(a.basis(), b.basis()));
    return a.dim() + b.dim() - r;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || !(*a.field() == *b.field()))
        throw std::invalid_argument("subspaces live in different spaces");
    const std::uint32_t m = a.ambient();
    // Zassenhaus: rows [A|A] over [B|0]; left-zero rows carry the intersection.
    Mat block(a.field(), a.dim() + b.dim(), 2 * m);
    for (std::uint32_t r = 0; r < a.dim(); ++r)
        for (std::uint32_t c = 0; c < m; ++c) {
            block.at(r, c) = a.basis().at(r, c);
            block.at(r, m + c) = a.basis().at(r, c);
        }
    for (std::uint32_t r = 0; r < b.dim(); ++r)
        for (std::uint32_t c = 0; c < m; ++c) block.at(a.dim() + r, c) = b.basis().at(r, c);

    RrefResult red = rref(block);
    std::vector<std::vector<code_t>> gens;
    for (std::uint32_t r = 0; r < red.rank; ++r) {
        bool left_zero = true;
        for (std::uint32_t c = 0; c < m && left_zero; ++c)
            if (red.reduced.at(r, c) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<code_t> v(m);
        for (std::uint32_t c = 0; c < m; ++c) v[c] = red.reduced.at(r, m + c);
        gens.push_back(std::move(v));
    }
    Subspace result = Subspace::from_generators(Mat::from_rows(a.field(), m, gens));
    if (result.dim() != intersect_dim(a, b))
        throw verification_error("intersection dimension mismatch between routes");
    return result;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || !(*a.field() == *b.field()))
        throw std::invalid_argument("subspaces live in different spaces");
    return Subspace::from_generators(vstack(a.basis(), b.basis()));
}

std::vector<std::vector<code_t>> extend_to_basis(
    const std::vector<std::vector<code_t>>& independent, const Subspace& within) {
    std::vector<std::vector<code_t>> out;
    Mat acc(within.field(), 0, within.ambient());
    for (const auto& v : independent) {
        if (!within.contains(v))
            throw std::invalid_argument("extend_to_basis: vector outside the subspace");
        acc = vstack(acc, Mat::from_rows(within.field(), within.ambient(), {v}));
        out.push_back(v);
    }
    if (rank_of(acc) != out.size())
        throw std::invalid_argument("extend_to_basis: input vectors are dependent");

    std::uint32_t rank = static_cast<std::uint32_t>(out.size());
    for (std::uint32_t r = 0; r < within.dim() && rank < within.dim(); ++r) {
        std::vector<code_t> cand = within.basis().row_vec(r);
        Mat trial = vstack(acc, Mat::from_rows(within.field(), within.ambient(), {cand}));
        if (rank_of(trial) > rank) {
            acc = std::move(trial);
            out.push_back(std::move(cand));
            ++rank;
        }
    }
    if (rank != within.dim())
        throw verification_error("extend_to_basis failed to reach full dimension");
    return out;
}

}  // namespace bilform
