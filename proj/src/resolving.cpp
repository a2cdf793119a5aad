#include "bilform/resolving.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace bilform {

namespace {

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp, std::uint64_t cap,
                              const char* what) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > cap / base) throw cap_exceeded(what);
        r *= base;
    }
    return r;
}

Subspace transformed(const Subspace& s, const Mat& frame) {
    return Subspace::from_generators(s.basis().mul(frame));
}

std::vector<code_t> row_add(const Field& k, std::span<const code_t> a,
                            std::span<const code_t> b) {
    std::vector<code_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.add(a[i], b[i]);
    return out;
}

std::vector<code_t> row_sub_scaled(const Field& k, std::span<const code_t> a,
                                   code_t c, std::span<const code_t> b) {
    std::vector<code_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.sub(a[i], k.mul(c, b[i]));
    return out;
}

}  // namespace

std::vector<Mat> LandmarkSet::vertices() const {
    std::vector<Mat> out;
    out.reserve(items.size());
    for (const Landmark& lm : items) out.push_back(lm.vertex);
    return out;
}

std::vector<Subspace> hyperplanes_avoiding(const Subspace& w, const Subspace& line) {
    if (line.dim() != 1) throw std::invalid_argument("line must be 1-dimensional");
    if (!w.contains(line)) throw std::invalid_argument("line does not lie in the space");
    const Field& k = *w.field();
    const std::uint64_t q = k.q();
    const std::uint32_t hdim = w.dim() - 1;

    std::vector<std::vector<code_t>> frame =
        extend_to_basis({line.basis().row_vec(0)}, w);
    const std::vector<code_t>& ell = frame[0];

    std::uint64_t total = checked_pow_u64(q, hdim, ~std::uint64_t(0) >> 1,
                                          "hyperplane enumeration overflow");
    std::vector<Subspace> out;
    out.reserve(total);
    std::vector<code_t> c(hdim, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t tmp = code;
        for (std::uint32_t j = hdim; j-- > 0;) {  // first coordinate most significant
            c[j] = static_cast<code_t>(tmp % q);
            tmp /= q;
        }
        std::vector<std::vector<code_t>> rows;
        rows.reserve(hdim);
        for (std::uint32_t j = 0; j < hdim; ++j)
            rows.push_back(row_sub_scaled(k, frame[j + 1], c[j], ell));
        Subspace u = Subspace::from_generators(Mat::from_rows(w.field(), w.ambient(), rows));
        if (u.dim() != hdim) throw verification_error("hyperplane has wrong dimension");
        out.push_back(std::move(u));
    }
    return out;
}

Construction build_landmarks(const GraphSpec& spec, std::uint64_t cap) {
    const std::uint32_t n = spec.n, d = spec.d;
    if (d < 2 || n < d) throw std::invalid_argument("construction requires n >= d >= 2");
    const std::uint64_t q = spec.q();
    const bool wide = n >= d + 2;
    const std::uint32_t exponent = wide ? n + d - 1 : n + d;
    const std::uint64_t expected =
        checked_pow_u64(q, exponent, cap, "landmark count exceeds the cap");

    const std::uint32_t t = wide ? n - 1 : n;
    const std::uint32_t s = wide ? d + 1 : d;
    STPartition part = build_partition(spec.field, t, s, cap);
    const std::uint32_t amb = n + d;
    ExtField ext(spec.field, t, cap);  // same modulus as inside build_partition

    // construction-coordinate pieces
    Subspace n_c(spec.field, amb);
    Subspace anchor_c(spec.field, amb);
    std::vector<Block> blocks_c;
    blocks_c.reserve(part.small_pieces.size());

    if (wide) {
        anchor_c = part.big_piece;  // dim n-1, inside N
        std::vector<code_t> h0(amb, 0);
        h0[0] = 1;
        n_c = sum(anchor_c,
                  Subspace::from_generators(Mat::from_rows(spec.field, amb, {h0})));
        if (n_c.dim() != n) throw verification_error("N has wrong dimension");
        for (const auto& [label, piece] : part.small_pieces) {
            // closed form: W_a cap N = span{(h0, a * h0)}, h0 = 1 in K
            std::vector<code_t> line_vec(amb, 0);
            line_vec[0] = 1;
            std::vector<code_t> dig = ext.digits(label);
            for (std::uint32_t j = 0; j < t; ++j) line_vec[s + j] = dig[j];
            Subspace line = Subspace::from_generators(
                Mat::from_rows(spec.field, amb, {line_vec}));
            if (!(line == intersect(piece, n_c)))
                throw verification_error("block line differs from W cap N");
            if (sum(piece, n_c).dim() != amb)
                throw verification_error("W + N is not the whole space");
            blocks_c.push_back(Block{piece, line, label});
        }
    } else {
        n_c = part.big_piece;  // dim n
        anchor_c = Subspace::from_generators(
            Mat::from_rows(spec.field, amb, {n_c.basis().row_vec(0)}));
        for (const auto& [label, piece] : part.small_pieces) {
            Subspace w = sum(anchor_c, piece);
            if (w.dim() != d + 1)
                throw verification_error("block W = line + piece has wrong dimension");
            blocks_c.push_back(Block{w, anchor_c, label});
        }
    }

    // permutation frame sending the construction N onto span(e_0..e_{n-1})
    Mat frame(spec.field, amb, amb);
    if (wide) {
        frame.at(0, 0) = 1;                                        // (h0, 0) -> e_0
        for (std::uint32_t j = 0; j < t; ++j) frame.at(s + j, 1 + j) = 1;  // K block
        for (std::uint32_t i = 0; i + 1 < s; ++i) frame.at(1 + i, n + i) = 1;
    } else {
        for (std::uint32_t j = 0; j < t; ++j) frame.at(s + j, j) = 1;      // K block
        for (std::uint32_t i = 0; i < s; ++i) frame.at(i, n + i) = 1;
    }
    part.frame = frame;

    ConstructionContext ctx{wide ? 1 : 2,
                            spec,
                            std::move(part),
                            transformed(n_c, frame),
                            transformed(anchor_c, frame),
                            {}};
    if (!(ctx.fixed_n == distinguished_subspace(spec)))
        throw verification_error("frame does not map N onto the coordinate subspace");

    ctx.blocks.reserve(blocks_c.size());
    for (const Block& b : blocks_c) {
        Block tb{transformed(b.space, frame), transformed(b.line, frame), b.label};
        if (tb.line.dim() != 1) throw verification_error("block line is not a line");
        ctx.blocks.push_back(std::move(tb));
    }

    LandmarkSet set{spec, {}};
    set.items.reserve(expected);
    for (std::uint32_t bi = 0; bi < ctx.blocks.size(); ++bi) {
        const Block& b = ctx.blocks[bi];
        std::vector<Subspace> planes = hyperplanes_avoiding(b.space, b.line);
        std::uint64_t code = 0;
        for (Subspace& u : planes) {
            if (intersect_dim(u, ctx.fixed_n) != 0)
                throw verification_error("landmark meets N nontrivially");
            Mat vert = vertex_of(spec, u);
            std::vector<code_t> functional(d, 0);
            std::uint64_t tmp = code;
            for (std::uint32_t j = d; j-- > 0;) {
                functional[j] = static_cast<code_t>(tmp % q);
                tmp /= q;
            }
            set.items.push_back(Landmark{std::move(vert), bi, std::move(functional)});
            ++code;
        }
    }

    if (set.items.size() != expected)
        throw verification_error("landmark count differs from q^" + std::to_string(exponent));
    std::vector<std::vector<code_t>> keys;
    keys.reserve(set.items.size());
    for (const Landmark& lm : set.items) keys.push_back(lm.vertex.data());
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw verification_error("landmark set contains duplicates");

    return Construction{std::move(set), std::move(ctx)};
}

std::vector<std::uint32_t> signature(const GraphSpec& spec, const Mat& v,
                                     const LandmarkSet& set) {
    if (!(spec == set.spec)) throw std::invalid_argument("landmark set spec mismatch");
    std::vector<std::uint32_t> out;
    out.reserve(set.items.size());
    for (const Landmark& lm : set.items) out.push_back(distance(spec, v, lm.vertex));
    return out;
}

Certificate verify_resolving(const GraphSpec& spec, std::span<const Mat> landmarks,
                             unsigned workers, std::uint64_t cap) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t total = enumeration_count(spec, cap);
    const std::size_t count = landmarks.size();
    if (workers == 0) workers = 1;

    const std::uint32_t diam = spec.diameter();
    const std::uint32_t bits = std::max(1u, static_cast<std::uint32_t>(std::bit_width(diam)));
    const std::size_t words = (count * bits + 63) / 64;

    std::vector<std::uint64_t> sigs(static_cast<std::size_t>(total) * words, 0);
    DistanceKernel kernel(spec, landmarks);

    auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint32_t> dist(count);
        for (std::uint64_t v = lo; v < hi; ++v) {
            kernel.distances(v, dist);
            std::uint64_t* rec = sigs.data() + v * words;
            for (std::size_t k = 0; k < count; ++k) {
                const std::size_t bit = k * bits;
                rec[bit / 64] |= static_cast<std::uint64_t>(dist[k]) << (bit % 64);
                if (bit % 64 + bits > 64)
                    rec[bit / 64 + 1] |= static_cast<std::uint64_t>(dist[k]) >> (64 - bit % 64);
            }
        }
    };

    const unsigned used = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
    if (used <= 1) {
        fill(0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(used - 1);
        const std::uint64_t chunk = (total + used - 1) / used;
        for (unsigned w = 1; w < used; ++w) {
            std::uint64_t lo = w * chunk, hi = std::min<std::uint64_t>(total, lo + chunk);
            if (lo < hi) pool.emplace_back(fill, lo, hi);
        }
        fill(0, std::min<std::uint64_t>(total, chunk));
        for (std::thread& th : pool) th.join();
    }

    std::vector<std::uint64_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    auto cmp = [&](std::uint64_t a, std::uint64_t b) {
        const std::uint64_t* ra = sigs.data() + a * words;
        const std::uint64_t* rb = sigs.data() + b * words;
        for (std::size_t w = 0; w < words; ++w)
            if (ra[w] != rb[w]) return ra[w] < rb[w];
        return a < b;
    };
    std::sort(order.begin(), order.end(), cmp);

    Certificate cert;
    cert.resolving = true;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const std::uint64_t* ra = sigs.data() + order[i] * words;
        const std::uint64_t* rb = sigs.data() + order[i + 1] * words;
        if (std::equal(ra, ra + words, rb)) {
            cert.resolving = false;
            cert.counterexample = {order[i], order[i + 1]};
            break;
        }
    }

    cert.stats.vertices_checked = total;
    cert.stats.workers = workers;
    cert.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return cert;
}

Certificate verify_resolving(const LandmarkSet& set, unsigned workers, std::uint64_t cap) {
    return verify_resolving(set.spec, set.vertices(), workers, cap);
}

const char* to_string(WitnessBranch b) {
    switch (b) {
        case WitnessBranch::dim_gap: return "dim_gap";
        case WitnessBranch::in_span: return "in_span";
        case WitnessBranch::off_span: return "off_span";
    }
    return "?";
}

Witness find_separating_landmark(const Mat& a, const Mat& b,
                                 const ConstructionContext& ctx, const LandmarkSet& set) {
    if (a == b) throw std::invalid_argument("vertices must be distinct");
    const GraphSpec& spec = ctx.graph;
    const Field& k = *spec.field;
    const std::uint64_t q = spec.q();
    const std::uint32_t d = spec.d;

    const Subspace sa = subspace_of(spec, a);
    const Subspace sb = subspace_of(spec, b);

    for (std::uint32_t bi = 0; bi < ctx.blocks.size(); ++bi) {
        const Block& blk = ctx.blocks[bi];
        Subspace ta = intersect(sa, blk.space);
        Subspace tb = intersect(sb, blk.space);
        if (ta == tb) continue;

        const bool swapped = ta.dim() > tb.dim();
        const Subspace& small = swapped ? tb : ta;
        const Subspace& large = swapped ? ta : tb;
        const std::uint32_t tdim = large.dim();

        std::vector<code_t> theta = blk.line.basis().row_vec(0);
        std::vector<std::vector<code_t>> betas;
        betas.reserve(tdim);
        for (std::uint32_t r = 0; r < tdim; ++r) betas.push_back(large.basis().row_vec(r));

        WitnessBranch branch;
        std::vector<code_t> alpha;
        Subspace sep(spec.field, spec.n + spec.d);

        auto drop_theta_hyperplane = [&]() {
            std::vector<std::vector<code_t>> base;
            base.push_back(theta);
            for (const auto& v : betas) base.push_back(v);
            std::vector<std::vector<code_t>> full = extend_to_basis(base, blk.space);
            std::vector<std::vector<code_t>> rows(full.begin() + 1, full.end());
            return Subspace::from_generators(
                Mat::from_rows(spec.field, spec.n + spec.d, rows));
        };

        if (small.dim() < tdim) {
            branch = WitnessBranch::dim_gap;
            sep = drop_theta_hyperplane();
        } else {
            // equal trace dimensions: pick a basis row of one trace outside the other
            for (std::uint32_t r = 0; r < small.dim(); ++r) {
                if (!large.contains(small.basis().row(r))) {
                    alpha = small.basis().row_vec(r);
                    break;
                }
            }
            if (alpha.empty())
                throw verification_error("equal traces have no distinguishing vector");

            std::vector<std::vector<code_t>> span_test;
            span_test.push_back(theta);
            for (const auto& v : betas) span_test.push_back(v);
            span_test.push_back(alpha);
            const std::uint32_t r =
                rank_of(Mat::from_rows(spec.field, spec.n + spec.d, span_test));
            if (r == tdim + 1) {
                branch = WitnessBranch::in_span;
                sep = drop_theta_hyperplane();
                if (sep.contains(alpha))
                    throw verification_error("distinguishing vector landed inside the landmark");
            } else {
                branch = WitnessBranch::off_span;
                if (tdim >= d)
                    throw verification_error(
                        "independent case impossible for full-dimensional traces");
                std::vector<std::vector<code_t>> base;
                base.push_back(alpha);
                base.push_back(theta);
                for (const auto& v : betas) base.push_back(v);
                std::vector<std::vector<code_t>> full = extend_to_basis(base, blk.space);
                std::vector<std::vector<code_t>> rows;
                rows.push_back(row_add(k, alpha, theta));
                for (std::size_t i = 2; i < full.size(); ++i) rows.push_back(full[i]);
                sep = Subspace::from_generators(
                    Mat::from_rows(spec.field, spec.n + spec.d, rows));
                if (sep.contains(theta) || sep.contains(alpha))
                    throw verification_error("landmark contains a vector it must avoid");
            }
        }

        if (sep.dim() != d) throw verification_error("separator has wrong dimension");

        // recover the functional coordinates: w_j = c_j * ell + u_j with u_j in U
        std::vector<std::vector<code_t>> frame =
            extend_to_basis({blk.line.basis().row_vec(0)}, blk.space);
        std::vector<code_t> r_ell = sep.reduce(frame[0]);
        std::uint32_t lead = 0;
        while (lead < r_ell.size() && r_ell[lead] == 0) ++lead;
        if (lead == r_ell.size())
            throw verification_error("block line lies inside the separator");
        std::vector<code_t> functional(d, 0);
        for (std::uint32_t j = 0; j < d; ++j) {
            std::vector<code_t> rw = sep.reduce(frame[j + 1]);
            code_t c = k.div(rw[lead], r_ell[lead]);
            for (std::uint32_t i = 0; i < rw.size(); ++i)
                if (rw[i] != k.mul(c, r_ell[i]))
                    throw verification_error("separator is not one of the block hyperplanes");
            functional[j] = c;
        }

        std::uint64_t code = 0;
        for (std::uint32_t j = 0; j < d; ++j) code = code * q + functional[j];
        std::uint64_t per_block = 1;
        for (std::uint32_t j = 0; j < d; ++j) per_block *= q;
        const std::size_t pos = static_cast<std::size_t>(bi) * per_block + code;

        if (pos >= set.items.size() || set.items[pos].block != bi)
            throw verification_error("witness position out of landmark order");
        if (!(subspace_of(spec, set.items[pos].vertex) == sep))
            throw verification_error("witness does not match the stored landmark");

        const std::uint32_t da = intersect_dim(sa, sep);
        const std::uint32_t db = intersect_dim(sb, sep);
        if (da == db)
            throw verification_error("witness fails to separate the pair");

        return Witness{pos, bi, std::move(functional), std::move(sep),
                       da,  db, branch,  std::move(theta), std::move(alpha)};
    }
    throw verification_error("distinct vertices with identical traces in every block");
}

}  // namespace bilform
