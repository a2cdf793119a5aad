#include "bilform/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bilform {

using nlohmann::json;

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const json& j) {
    FieldPtr f = make_field(j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>());
    if (j.contains("modulus") &&
        j.at("modulus").get<std::vector<std::uint32_t>>() != f->modulus())
        throw std::invalid_argument("field modulus in file differs from the canonical one");
    return f;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::uint32_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::uint32_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(FieldPtr field, std::uint32_t rows, std::uint32_t cols, const json& j) {
    if (!j.is_array() || j.size() != rows)
        throw std::invalid_argument("matrix row count mismatch");
    std::vector<std::vector<code_t>> data;
    data.reserve(rows);
    for (const json& row : j) data.push_back(row.get<std::vector<code_t>>());
    return Mat::from_rows(std::move(field), cols, data);
}

json subspace_to_json(const Subspace& s) {
    return json{{"ambient", s.ambient()}, {"basis", mat_to_json(s.basis())}};
}

Subspace subspace_from_json(FieldPtr field, const json& j) {
    const std::uint32_t ambient = j.at("ambient").get<std::uint32_t>();
    const json& basis = j.at("basis");
    Mat m = mat_from_json(field, static_cast<std::uint32_t>(basis.size()), ambient, basis);
    Subspace s = Subspace::from_generators(m);
    if (s.dim() != m.rows() || !(s.basis() == m))
        throw std::invalid_argument("subspace basis in file is not canonical");
    return s;
}

json landmark_set_to_json(const LandmarkSet& set, const ConstructionContext* ctx) {
    json j;
    j["field"] = field_to_json(*set.spec.field);
    j["n"] = set.spec.n;
    j["d"] = set.spec.d;
    j["landmark_count"] = set.items.size();
    json lms = json::array();
    json prov = json::array();
    for (const Landmark& lm : set.items) {
        lms.push_back(mat_to_json(lm.vertex));
        prov.push_back(json{{"block", lm.block}, {"functional", lm.functional}});
    }
    j["landmarks"] = std::move(lms);
    j["provenance"] = std::move(prov);
    if (ctx) {
        j["construction"] = json{{"case", ctx->case_tag},
                                 {"block_count", ctx->blocks.size()},
                                 {"anchor_dim", ctx->anchor.dim()}};
    }
    return j;
}

LandmarkSet landmark_set_from_json(const json& j) {
    FieldPtr field = field_from_json(j.at("field"));
    GraphSpec spec(field, j.at("n").get<std::uint32_t>(), j.at("d").get<std::uint32_t>());
    LandmarkSet set{spec, {}};
    const json& lms = j.at("landmarks");
    const json* prov = j.contains("provenance") ? &j.at("provenance") : nullptr;
    if (prov && prov->size() != lms.size())
        throw std::invalid_argument("provenance length mismatch");
    set.items.reserve(lms.size());
    for (std::size_t i = 0; i < lms.size(); ++i) {
        Landmark lm;
        lm.vertex = mat_from_json(field, spec.n, spec.d, lms[i]);
        if (prov) {
            lm.block = (*prov)[i].at("block").get<std::uint32_t>();
            lm.functional = (*prov)[i].at("functional").get<std::vector<code_t>>();
        }
        set.items.push_back(std::move(lm));
    }
    return set;
}

std::string landmarks_to_csv(const LandmarkSet& set) {
    if (set.spec.q() > 36)
        throw std::invalid_argument("digit strings support q <= 36");
    static const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string out;
    for (const Landmark& lm : set.items) {
        for (code_t c : lm.vertex.data()) out.push_back(digits[c]);
        out.push_back('\n');
    }
    return out;
}

json certificate_to_json(const GraphSpec& spec, std::size_t landmark_count,
                         const Certificate& cert, bool include_stats) {
    json j;
    j["field"] = field_to_json(*spec.field);
    j["n"] = spec.n;
    j["d"] = spec.d;
    j["landmark_count"] = landmark_count;
    j["vertex_count"] = cert.stats.vertices_checked;
    j["resolving"] = cert.resolving;
    if (cert.counterexample) {
        j["counterexample"] = json{{"u", cert.counterexample->first},
                                   {"v", cert.counterexample->second}};
    } else {
        j["counterexample"] = nullptr;
    }
    if (include_stats) {
        j["stats"] = json{{"wall_ms", cert.stats.wall_ms}, {"workers", cert.stats.workers}};
    }
    return j;
}

json partition_to_json(const STPartition& p) {
    json small = json::array();
    for (const auto& [label, piece] : p.small_pieces)
        small.push_back(json{{"label", label}, {"basis", mat_to_json(piece.basis())}});
    return json{{"field", field_to_json(*p.field)},
                {"ambient", p.ambient},
                {"s_small", p.s_small},
                {"t_big", p.t_big},
                {"frame", mat_to_json(p.frame)},
                {"big_piece", mat_to_json(p.big_piece.basis())},
                {"small_pieces", std::move(small)}};
}

STPartition partition_from_json(const json& j) {
    FieldPtr field = field_from_json(j.at("field"));
    const std::uint32_t s = j.at("s_small").get<std::uint32_t>();
    const std::uint32_t t = j.at("t_big").get<std::uint32_t>();
    STPartition p(field, s, t);
    if (j.at("ambient").get<std::uint32_t>() != p.ambient)
        throw std::invalid_argument("partition ambient mismatch");
    p.frame = mat_from_json(field, p.ambient, p.ambient, j.at("frame"));
    const json& big = j.at("big_piece");
    p.big_piece = Subspace::from_generators(
        mat_from_json(field, static_cast<std::uint32_t>(big.size()), p.ambient, big));
    for (const json& piece : j.at("small_pieces")) {
        const json& basis = piece.at("basis");
        p.small_pieces.emplace_back(
            piece.at("label").get<std::uint64_t>(),
            Subspace::from_generators(mat_from_json(
                field, static_cast<std::uint32_t>(basis.size()), p.ambient, basis)));
    }
    return p;
}

json witness_to_json(const Witness& w) {
    return json{{"landmark", w.landmark_pos},
                {"block", w.block},
                {"functional", w.functional},
                {"separator_basis", mat_to_json(w.separator.basis())},
                {"dim_a", w.dim_a},
                {"dim_b", w.dim_b},
                {"branch", to_string(w.branch)}};
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

json bounds_row_to_json(const BoundsRow& row) {
    json j;
    j["q"] = row.q;
    j["n"] = row.n;
    j["d"] = row.d;
    j["theorem_bound"] = row.theorem.to_string();
    j["babai_general"] = row.babai_gen;
    j["babai_strong"] = row.babai_str;
    j["babai_M"] = row.babai_m.to_string();
    j["log_base"] = to_string(row.base);
    j["greedy_size"] = row.greedy_size ? json(*row.greedy_size) : json(nullptr);
    j["exact_min"] = row.exact_min ? json(*row.exact_min) : json(nullptr);
    j["best"] = row.best;
    return j;
}

json bounds_rows_to_json(std::span<const BoundsRow> rows) {
    json arr = json::array();
    for (const BoundsRow& r : rows) arr.push_back(bounds_row_to_json(r));
    return arr;
}

std::string bounds_rows_to_csv(std::span<const BoundsRow> rows) {
    std::ostringstream out;
    out << "q,n,d,theorem_bound,babai_general,babai_strong,babai_M,log_base,"
           "greedy_size,exact_min,best\n";
    for (const BoundsRow& r : rows) {
        out << r.q << ',' << r.n << ',' << r.d << ',' << r.theorem.to_string() << ','
            << fmt_double(r.babai_gen) << ',' << fmt_double(r.babai_str) << ','
            << r.babai_m.to_string() << ',' << to_string(r.base) << ',';
        if (r.greedy_size) out << *r.greedy_size;
        out << ',';
        if (r.exact_min) out << *r.exact_min;
        out << ',' << r.best << '\n';
    }
    return out.str();
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace bilform
