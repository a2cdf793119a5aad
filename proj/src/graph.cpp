#include "bilform/graph.hpp"

#include <stdexcept>
#include <string>

namespace bilform {

GraphSpec::GraphSpec(FieldPtr f, std::uint32_t n_, std::uint32_t d_)
    : field(std::move(f)), n(n_), d(d_) {
    if (!field) throw std::invalid_argument("graph needs a field");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
}

std::uint64_t GraphSpec::vertex_count() const {
    const std::uint64_t limit = std::uint64_t(1) << 63;
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < n * d; ++i) {
        if (r > limit / q()) throw std::overflow_error("vertex count exceeds 2^63");
        r *= q();
    }
    return r;
}

bool GraphSpec::operator==(const GraphSpec& rhs) const {
    return n == rhs.n && d == rhs.d && *field == *rhs.field;
}

std::uint64_t enumeration_count(const GraphSpec& spec, std::uint64_t cap) {
    std::uint64_t count;
    try {
        count = spec.vertex_count();
    } catch (const std::overflow_error&) {
        throw cap_exceeded("vertex enumeration exceeds the cap");
    }
    if (count > cap)
        throw cap_exceeded("vertex enumeration exceeds the cap: " + std::to_string(count) +
                           " > " + std::to_string(cap));
    return count;
}

Mat vertex_matrix(const GraphSpec& spec, std::uint64_t index) {
    const std::uint32_t cells = spec.n * spec.d;
    Mat m(spec.field, spec.n, spec.d);
    for (std::uint32_t k = cells; k-- > 0;) {  // last cell is the least significant digit
        m.at(k / spec.d, k % spec.d) = static_cast<code_t>(index % spec.q());
        index /= spec.q();
    }
    if (index != 0) throw std::invalid_argument("vertex index out of range");
    return m;
}

std::uint64_t vertex_index(const GraphSpec& spec, const Mat& v) {
    if (v.rows() != spec.n || v.cols() != spec.d || !(*v.field() == *spec.field))
        throw std::invalid_argument("vertex does not belong to this graph");
    spec.vertex_count();  // range check
    std::uint64_t idx = 0;
    for (code_t c : v.data()) idx = idx * spec.q() + c;
    return idx;
}

std::uint32_t distance(const GraphSpec& spec, const Mat& u, const Mat& v) {
    if (u.rows() != spec.n || u.cols() != spec.d || v.rows() != spec.n || v.cols() != spec.d)
        throw std::invalid_argument("vertex shape mismatch");
    return rank_of(u.sub(v));
}

Subspace subspace_of(const GraphSpec& spec, const Mat& v) {
    // row j = (column j of f, e_j), i.e. the basis [f^T | I_d]
    Mat b(spec.field, spec.d, spec.n + spec.d);
    for (std::uint32_t j = 0; j < spec.d; ++j) {
        for (std::uint32_t i = 0; i < spec.n; ++i) b.at(j, i) = v.at(i, j);
        b.at(j, spec.n + j) = 1;
    }
    return Subspace::from_generators(b);
}

Mat vertex_of(const GraphSpec& spec, const Subspace& u) {
    if (u.ambient() != spec.n + spec.d || !(*u.field() == *spec.field))
        throw std::invalid_argument("subspace lives in the wrong space");
    if (u.dim() != spec.d) throw std::invalid_argument("subspace dimension is not d");

    // invert the last-d-column block; singular iff u meets N nontrivially
    Mat aug(spec.field, spec.d, 2 * spec.d);
    for (std::uint32_t r = 0; r < spec.d; ++r) {
        for (std::uint32_t c = 0; c < spec.d; ++c)
            aug.at(r, c) = u.basis().at(r, spec.n + c);
        aug.at(r, spec.d + r) = 1;
    }
    RrefResult red = rref(aug);
    for (std::uint32_t r = 0; r < spec.d; ++r)
        if (red.rank <= r || red.pivots[r] != r)
            throw std::invalid_argument("subspace meets the distinguished n-subspace nontrivially");
    Mat cinv(spec.field, spec.d, spec.d);
    for (std::uint32_t r = 0; r < spec.d; ++r)
        for (std::uint32_t c = 0; c < spec.d; ++c)
            cinv.at(r, c) = red.reduced.at(r, spec.d + c);

    Mat x(spec.field, spec.d, spec.n);
    for (std::uint32_t r = 0; r < spec.d; ++r)
        for (std::uint32_t c = 0; c < spec.n; ++c) x.at(r, c) = u.basis().at(r, c);

    Mat ft = cinv.mul(x);  // f^T, after normalizing the basis to [f^T | I_d]
    Mat f(spec.field, spec.n, spec.d);
    for (std::uint32_t i = 0; i < spec.n; ++i)
        for (std::uint32_t j = 0; j < spec.d; ++j) f.at(i, j) = ft.at(j, i);
    return f;
}

Subspace distinguished_subspace(const GraphSpec& spec) {
    return Subspace::coordinate_prefix(spec.field, spec.n + spec.d, spec.n);
}

Mat transpose_map(const Mat& v) { return v.transpose(); }

GraphSpec transpose_spec(const GraphSpec& spec) {
    return GraphSpec(spec.field, spec.d, spec.n);
}

std::vector<BigUint> rank_class_sizes(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
    const std::uint32_t diam = n < d ? n : d;
    std::vector<BigUint> out;
    out.reserve(diam + 1);
    for (std::uint32_t i = 0; i <= diam; ++i) {
        BigUint v = gaussian_binomial(n, i, q) * gaussian_binomial(d, i, q);
        for (std::uint32_t j = 0; j < i; ++j)
            v = v * (BigUint::pow(q, i) - BigUint::pow(q, j));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<BigUint> rank_class_sizes(const GraphSpec& spec) {
    return rank_class_sizes(spec.q(), spec.n, spec.d);
}

// --- DistanceKernel ---------------------------------------------------------

DistanceKernel::DistanceKernel(const GraphSpec& spec, std::span<const Mat> landmarks)
    : spec_(spec), count_(landmarks.size()), bits_(spec.q() == 2 && spec.n * spec.d <= 64) {
    if (bits_) {
        lm_bits_.reserve(count_);
        for (const Mat& m : landmarks) lm_bits_.push_back(vertex_index(spec_, m));
    } else {
        if (spec.n * spec.d > 256 || spec.q() > 256)
            throw cap_exceeded("distance kernel supports n*d <= 256 and q <= 256");
        lm_digits_.reserve(count_ * spec.n * spec.d);
        for (const Mat& m : landmarks) {
            if (m.rows() != spec.n || m.cols() != spec.d)
                throw std::invalid_argument("landmark shape mismatch");
            for (code_t c : m.data()) lm_digits_.push_back(static_cast<std::uint8_t>(c));
        }
    }
}

namespace {

inline std::uint32_t rank_bits(std::uint64_t x, std::uint32_t n, std::uint32_t d) {
    std::uint64_t piv[64];
    std::uint32_t count = 0;
    const std::uint64_t mask = (d >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << d) - 1);
    for (std::uint32_t r = 0; r < n; ++r) {
        std::uint64_t v = (x >> ((n - 1 - r) * d)) & mask;
        for (std::uint32_t i = 0; i < count; ++i)
            v = std::min(v, v ^ piv[i]);
        if (v) piv[count++] = v;
    }
    return count;
}

}  // namespace

std::uint32_t DistanceKernel::rank_digits(std::uint8_t* work) const {
    const Field& k = *spec_.field;
    const std::uint32_t n = spec_.n, d = spec_.d;
    std::uint32_t rank = 0;
    for (std::uint32_t c = 0; c < d && rank < n; ++c) {
        std::uint32_t pr = rank;
        while (pr < n && work[pr * d + c] == 0) ++pr;
        if (pr == n) continue;
        if (pr != rank)
            for (std::uint32_t b = 0; b < d; ++b)
                std::swap(work[pr * d + b], work[rank * d + b]);
        code_t s = k.inv(work[rank * d + c]);
        for (std::uint32_t b = 0; b < d; ++b)
            work[rank * d + b] = static_cast<std::uint8_t>(k.mul(work[rank * d + b], s));
        for (std::uint32_t r = rank + 1; r < n; ++r) {
            code_t f = work[r * d + c];
            if (f == 0) continue;
            for (std::uint32_t b = 0; b < d; ++b)
                work[r * d + b] = static_cast<std::uint8_t>(
                    k.sub(work[r * d + b], k.mul(f, work[rank * d + b])));
        }
        ++rank;
    }
    return rank;
}

void DistanceKernel::distances(std::uint64_t vertex_index, std::span<std::uint32_t> out) const {
    if (out.size() < count_) throw std::invalid_argument("output span too small");
    if (bits_) {
        for (std::size_t k = 0; k < count_; ++k)
            out[k] = rank_bits(vertex_index ^ lm_bits_[k], spec_.n, spec_.d);
        return;
    }
    const std::uint32_t cells = spec_.n * spec_.d;
    const Field& f = *spec_.field;
    std::uint8_t dig[256];
    std::uint8_t work[256];
    std::uint64_t idx = vertex_index;
    for (std::uint32_t k = cells; k-- > 0;) {
        dig[k] = static_cast<std::uint8_t>(idx % spec_.q());
        idx /= spec_.q();
    }
    for (std::size_t k = 0; k < count_; ++k) {
        const std::uint8_t* lm = lm_digits_.data() + k * cells;
        for (std::uint32_t i = 0; i < cells; ++i)
            work[i] = static_cast<std::uint8_t>(f.sub(dig[i], lm[i]));
        out[k] = rank_digits(work);
    }
}

std::uint32_t DistanceKernel::distance_to(std::uint64_t vertex_index, std::size_t k) const {
    if (bits_) return rank_bits(vertex_index ^ lm_bits_[k], spec_.n, spec_.d);
    std::vector<std::uint32_t> all(count_);
    distances(vertex_index, all);
    return all[k];
}

}  // namespace bilform
