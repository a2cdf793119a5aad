#include "bilform/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace bilform {

namespace {

double base_divisor(LogBase b) {
    switch (b) {
        case LogBase::natural: return 1.0;
        case LogBase::two: return std::log(2.0);
        case LogBase::ten: return std::log(10.0);
    }
    return 1.0;
}

double log_q_pow(std::uint64_t q, std::uint64_t exp, LogBase base) {
    return static_cast<double>(exp) * std::log(static_cast<double>(q)) / base_divisor(base);
}

// Dense distance matrix for the baseline solvers.
std::vector<std::uint8_t> distance_matrix(const GraphSpec& spec, std::uint64_t count) {
    std::vector<Mat> all;
    all.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) all.push_back(vertex_matrix(spec, i));
    DistanceKernel kernel(spec, all);
    std::vector<std::uint8_t> dm(count * count);
    std::vector<std::uint32_t> row(count);
    for (std::uint64_t v = 0; v < count; ++v) {
        kernel.distances(v, row);
        for (std::uint64_t w = 0; w < count; ++w)
            dm[v * count + w] = static_cast<std::uint8_t>(row[w]);
    }
    return dm;
}

}  // namespace

const char* to_string(LogBase b) {
    switch (b) {
        case LogBase::natural: return "e";
        case LogBase::two: return "2";
        case LogBase::ten: return "10";
    }
    return "?";
}

LogBase log_base_from_string(const std::string& s) {
    if (s == "e") return LogBase::natural;
    if (s == "2") return LogBase::two;
    if (s == "10") return LogBase::ten;
    throw std::invalid_argument("log base must be one of e, 2, 10");
}

BigUint gaussian(std::uint32_t a, std::uint32_t b, std::uint64_t q) {
    return gaussian_binomial(a, b, q);
}

BigUint theorem_bound(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
    if (d < 2 || n < d) throw std::invalid_argument("bound requires n >= d >= 2");
    return BigUint::pow(q, n >= d + 2 ? n + d - 1 : n + d);
}

double babai_general(std::uint64_t q, std::uint32_t n, std::uint32_t d, LogBase base) {
    const std::uint64_t nd = static_cast<std::uint64_t>(n) * d;
    const double sqrt_vertices = std::exp(0.5 * nd * std::log(static_cast<double>(q)));
    return 4.0 * sqrt_vertices * log_q_pow(q, nd, base);
}

BabaiStrong babai_strong(std::uint64_t q, std::uint32_t n, std::uint32_t d, LogBase base) {
    if (d < 1) throw std::invalid_argument("babai_strong requires d >= 1");
    const std::uint64_t nd = static_cast<std::uint64_t>(n) * d;
    std::vector<BigUint> classes = rank_class_sizes(q, n, d);
    BigUint m = classes[0];
    for (const BigUint& c : classes)
        if (c > m) m = c;
    BigUint total = BigUint::pow(q, static_cast<std::uint32_t>(nd));
    const double ratio = total.to_double() / (total - m).to_double();
    return BabaiStrong{2.0 * d * ratio * log_q_pow(q, nd, base), std::move(m)};
}

std::vector<std::uint64_t> greedy_resolving(const GraphSpec& spec, std::uint64_t cap) {
    const std::uint64_t count = enumeration_count(spec, cap);
    if (count > 8192) throw cap_exceeded("greedy baseline needs a dense distance matrix");
    if (count <= 1) return {};
    const std::vector<std::uint8_t> dm = distance_matrix(spec, count);
    const std::uint32_t diam = spec.diameter();

    std::vector<std::vector<std::uint32_t>> groups{std::vector<std::uint32_t>(count)};
    for (std::uint32_t v = 0; v < count; ++v) groups[0][v] = v;
    std::vector<std::uint64_t> chosen;
    std::vector<bool> used(count, false);

    auto unresolved = [&]() {
        std::uint64_t pairs = 0;
        for (const auto& g : groups) pairs += std::uint64_t(g.size()) * (g.size() - 1) / 2;
        return pairs;
    };

    while (unresolved() > 0) {
        std::uint64_t best_after = ~std::uint64_t(0);
        std::uint32_t best_w = 0;
        for (std::uint32_t w = 0; w < count; ++w) {
            if (used[w]) continue;
            std::uint64_t after = 0;
            for (const auto& g : groups) {
                if (g.size() < 2) continue;
                std::vector<std::uint32_t> bucket(diam + 1, 0);
                for (std::uint32_t v : g) ++bucket[dm[std::uint64_t(v) * count + w]];
                for (std::uint32_t c : bucket) after += std::uint64_t(c) * (c - 1) / 2;
            }
            if (after < best_after) {  // strict: ties keep the smallest index
                best_after = after;
                best_w = w;
            }
        }
        used[best_w] = true;
        chosen.push_back(best_w);

        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& g : groups) {
            std::vector<std::vector<std::uint32_t>> buckets(diam + 1);
            for (std::uint32_t v : g) buckets[dm[std::uint64_t(v) * count + best_w]].push_back(v);
            for (auto& b : buckets)
                if (!b.empty()) next.push_back(std::move(b));
        }
        groups = std::move(next);
    }
    return chosen;
}

std::optional<std::uint32_t> exact_min_resolving(const GraphSpec& spec, std::uint32_t k_max,
                                                 std::uint64_t cap) {
    const std::uint64_t count = enumeration_count(spec, cap);
    if (count > 128) throw cap_exceeded("exact search is limited to graphs with <= 128 vertices");
    if (count <= 1) return 0;
    const std::vector<std::uint8_t> dm = distance_matrix(spec, count);

    const std::uint32_t v_count = static_cast<std::uint32_t>(count);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t u = 0; u < v_count; ++u)
        for (std::uint32_t v = u + 1; v < v_count; ++v) pairs.emplace_back(u, v);
    const std::size_t words = (pairs.size() + 63) / 64;

    // sep[w]: bitset of pairs the vertex w separates
    std::vector<std::vector<std::uint64_t>> sep(v_count,
                                                std::vector<std::uint64_t>(words, 0));
    for (std::uint32_t w = 0; w < v_count; ++w)
        for (std::size_t pi = 0; pi < pairs.size(); ++pi)
            if (dm[std::uint64_t(pairs[pi].first) * count + w] !=
                dm[std::uint64_t(pairs[pi].second) * count + w])
                sep[w][pi / 64] |= std::uint64_t(1) << (pi % 64);

    std::vector<std::uint64_t> all(words, 0);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) all[pi / 64] |= std::uint64_t(1) << (pi % 64);

    auto is_empty = [&](const std::vector<std::uint64_t>& bs) {
        return std::all_of(bs.begin(), bs.end(), [](std::uint64_t w) { return w == 0; });
    };

    std::function<bool(std::uint32_t, std::uint32_t, const std::vector<std::uint64_t>&)> dfs =
        [&](std::uint32_t start, std::uint32_t depth,
            const std::vector<std::uint64_t>& uncovered) -> bool {
        if (is_empty(uncovered)) return true;
        if (depth == 0) return false;
        for (std::uint32_t w = start; w + depth <= v_count; ++w) {
            std::vector<std::uint64_t> next(words);
            for (std::size_t i = 0; i < words; ++i) next[i] = uncovered[i] & ~sep[w][i];
            if (dfs(w + 1, depth - 1, next)) return true;
        }
        return false;
    };

    for (std::uint32_t k = 1; k <= k_max; ++k)
        if (dfs(0, k, all)) return k;
    return std::nullopt;
}

BoundsRow bounds_row(std::uint64_t q, std::uint32_t n, std::uint32_t d,
                     const ReportOptions& opt) {
    BoundsRow row;
    row.q = q;
    row.n = n;
    row.d = d;
    row.base = opt.base;
    row.theorem = theorem_bound(q, n, d);
    row.babai_gen = babai_general(q, n, d, opt.base);
    BabaiStrong bs = babai_strong(q, n, d, opt.base);
    row.babai_str = bs.bound;
    row.babai_m = std::move(bs.largest_class);

    const double tv = row.theorem.to_double();
    row.best = "theorem";
    double best_val = tv;
    if (row.babai_gen < best_val) {
        best_val = row.babai_gen;
        row.best = "babai_general";
    }
    if (row.babai_str < best_val) {
        best_val = row.babai_str;
        row.best = "babai_strong";
    }

    if (opt.with_greedy || opt.with_exact) {
        GraphSpec spec(make_field_for_order(q), n, d);
        if (opt.with_greedy)
            row.greedy_size = static_cast<std::uint32_t>(greedy_resolving(spec, opt.cap).size());
        if (opt.with_exact) row.exact_min = exact_min_resolving(spec, opt.exact_k_max, opt.cap);
    }
    return row;
}

std::vector<BoundsRow> compare_report(std::span<const GridPoint> grid,
                                      const ReportOptions& opt) {
    std::vector<BoundsRow> out;
    out.reserve(grid.size());
    for (const GridPoint& g : grid) out.push_back(bounds_row(g.q, g.n, g.d, opt));
    return out;
}

}  // namespace bilform
