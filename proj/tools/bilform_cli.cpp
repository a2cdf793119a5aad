// bilform: resolving-set construction, exhaustive verification, separating
// witnesses, and bound tables for bilinear forms graphs H_q(n,d).
//
// Exit codes: 0 success, 1 negative mathematical verdict (or an internal
// verification failure), 2 usage error, 3 enumeration cap exceeded.

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bilform/io.hpp"

using namespace bilform;
using nlohmann::json;

namespace {

struct GraphArgs {
    std::uint64_t q = 2;
    std::uint32_t n = 2, d = 2;
    std::uint64_t cap = kDefaultEnumCap;
};

void add_graph_options(CLI::App* cmd, GraphArgs& a, bool required = true) {
    auto* oq = cmd->add_option("--q", a.q, "field order (a prime power)");
    auto* on = cmd->add_option("--n", a.n, "row dimension n");
    auto* od = cmd->add_option("--d", a.d, "column dimension d");
    if (required) {
        oq->required();
        on->required();
        od->required();
    }
    cmd->add_option("--cap", a.cap, "enumeration cap")->capture_default_str();
}

GraphSpec spec_of(const GraphArgs& a) {
    return GraphSpec(make_field_for_order(a.q), a.n, a.d);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

int cmd_construct(const GraphArgs& a, const std::string& format,
                  const std::string& out_path) {
    Construction c = build_landmarks(spec_of(a), a.cap);
    emit(out_path, format == "csv"
                       ? landmarks_to_csv(c.set)
                       : dump_canonical(landmark_set_to_json(c.set, &c.context)));
    std::cerr << "constructed " << c.set.items.size() << " landmarks (case "
              << c.context.case_tag << ", " << c.context.blocks.size() << " blocks)\n";
    return 0;
}

int cmd_verify(const GraphArgs& a, bool have_graph, const std::string& landmarks_path,
               unsigned workers, bool canonical, const std::string& out_path) {
    LandmarkSet set = [&]() {
        if (!landmarks_path.empty()) {
            LandmarkSet from_file =
                landmark_set_from_json(json::parse(read_text_file(landmarks_path)));
            if (have_graph && !(from_file.spec == spec_of(a)))
                throw std::invalid_argument("landmark file spec differs from --q/--n/--d");
            return from_file;
        }
        if (!have_graph)
            throw std::invalid_argument("verify needs --landmarks or --q/--n/--d");
        GraphSpec spec = spec_of(a);
        enumeration_count(spec, a.cap);  // fail on the graph cap before constructing
        return build_landmarks(spec, a.cap).set;
    }();

    Certificate cert = verify_resolving(set, workers, a.cap);
    emit(out_path,
         dump_canonical(certificate_to_json(set.spec, set.items.size(), cert, !canonical)));
    std::cerr << (cert.resolving ? "resolving" : "NOT resolving") << " ("
              << cert.stats.vertices_checked << " vertices, " << cert.stats.wall_ms
              << " ms, " << workers << " worker(s))\n";
    return cert.resolving ? 0 : 1;
}

int cmd_witness(const GraphArgs& a, std::uint64_t va, std::uint64_t vb,
                const std::string& out_path) {
    GraphSpec spec = spec_of(a);
    Construction c = build_landmarks(spec, a.cap);
    Witness w = find_separating_landmark(vertex_matrix(spec, va), vertex_matrix(spec, vb),
                                         c.context, c.set);
    emit(out_path, dump_canonical(witness_to_json(w)));
    return 0;
}

int cmd_bounds(const GraphArgs& a, const ReportOptions& opt, const std::string& format,
               const std::string& out_path) {
    std::vector<BoundsRow> rows{bounds_row(a.q, a.n, a.d, opt)};
    emit(out_path, format == "csv" ? bounds_rows_to_csv(rows)
                                   : dump_canonical(bounds_rows_to_json(rows)));
    return 0;
}

int cmd_table(const std::vector<std::uint64_t>& qs, std::uint32_t n_min, std::uint32_t n_max,
              std::uint32_t d_min, std::uint32_t d_max, const ReportOptions& opt,
              const std::string& format, const std::string& out_path) {
    std::vector<GridPoint> grid;
    for (std::uint64_t q : qs)
        for (std::uint32_t d = d_min; d <= d_max; ++d)
            for (std::uint32_t n = std::max(n_min, d); n <= n_max; ++n)
                grid.push_back({q, n, d});
    std::vector<BoundsRow> rows = compare_report(grid, opt);
    emit(out_path, format == "csv" ? bounds_rows_to_csv(rows)
                                   : dump_canonical(bounds_rows_to_json(rows)));
    return 0;
}

int cmd_search(const GraphArgs& a, bool with_exact, std::uint32_t k_max,
               const std::string& out_path) {
    GraphSpec spec = spec_of(a);
    std::vector<std::uint64_t> picks = greedy_resolving(spec, a.cap);
    std::vector<Mat> lms;
    lms.reserve(picks.size());
    for (std::uint64_t i : picks) lms.push_back(vertex_matrix(spec, i));
    Certificate cert = verify_resolving(spec, lms, 1, a.cap);

    json j;
    j["field"] = field_to_json(*spec.field);
    j["n"] = spec.n;
    j["d"] = spec.d;
    j["greedy_size"] = picks.size();
    j["greedy_indices"] = picks;
    j["greedy_resolving"] = cert.resolving;
    if (with_exact) {
        auto exact = exact_min_resolving(spec, k_max, a.cap);
        j["exact_min"] = exact ? json(*exact) : json(nullptr);
    }
    emit(out_path, dump_canonical(j));
    return cert.resolving ? 0 : 1;
}

int cmd_selftest(std::uint64_t cap) {
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        bool ok = true;
        for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}}) {
            FieldPtr f = make_field(p, e);
            const code_t q = static_cast<code_t>(f->q());
            for (code_t x = 0; x < q && ok; ++x) {
                if (x != 0 && f->mul(x, f->inv(x)) != 1) ok = false;
                for (code_t y = 0; y < q && ok; ++y) {
                    if (f->add(x, y) != f->add(y, x)) ok = false;
                    for (code_t z = 0; z < q && ok; ++z)
                        if (f->mul(x, f->add(y, z)) !=
                            f->add(f->mul(x, y), f->mul(x, z)))
                            ok = false;
                }
            }
        }
        report("field axioms (q = 2, 3, 4, 8)", ok);
    }

    {
        bool ok = true;
        std::mt19937_64 rng(20240101);
        for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}}) {
            FieldPtr f = make_field(p, e);
            std::uniform_int_distribution<std::uint64_t> pick(0, f->q() - 1);
            for (int it = 0; it < 40 && ok; ++it) {
                Mat m(f, 4, 6);
                for (std::uint32_t r = 0; r < 4; ++r)
                    for (std::uint32_t c = 0; c < 6; ++c)
                        m.at(r, c) = static_cast<code_t>(pick(rng));
                RrefResult once = rref(m);
                if (!(rref(once.reduced).reduced == once.reduced)) ok = false;
                Subspace s = Subspace::from_generators(m);
                if (intersect_dim(s, s) != s.dim()) ok = false;
            }
        }
        report("row reduction idempotent, canonical subspaces", ok);
    }

    {
        bool ok = true;
        for (auto [q, t, s] : {std::tuple{2u, 3u, 3u}, {3u, 2u, 2u}, {2u, 4u, 3u}}) {
            STPartition p = build_partition(make_field(q, 1), t, s, cap);
            if (verify_partition(p, cap).has_value()) ok = false;
        }
        report("vector space partitions cover exactly once", ok);
    }

    {
        bool ok = true;
        std::mt19937_64 rng(20240202);
        for (auto [q, n, d] : {std::tuple{2u, 2u, 2u}, {2u, 3u, 2u}, {3u, 2u, 2u}}) {
            GraphSpec g(make_field(q, 1), n, d);
            std::uniform_int_distribution<std::uint64_t> pick(0, g.vertex_count() - 1);
            if (g.vertex_count() <= 16) {
                for (std::uint64_t i = 0; i < g.vertex_count() && ok; ++i)
                    for (std::uint64_t j = 0; j < g.vertex_count() && ok; ++j) {
                        Mat u = vertex_matrix(g, i), v = vertex_matrix(g, j);
                        if (distance(g, u, v) !=
                            g.d - intersect_dim(subspace_of(g, u), subspace_of(g, v)))
                            ok = false;
                    }
            } else {
                for (std::uint64_t it = 0; it < 3000 && ok; ++it) {
                    Mat u = vertex_matrix(g, pick(rng)), v = vertex_matrix(g, pick(rng));
                    if (distance(g, u, v) !=
                        g.d - intersect_dim(subspace_of(g, u), subspace_of(g, v)))
                        ok = false;
                }
            }
        }
        report("rank distance agrees with the subspace model", ok);
    }

    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resolving sets and bound tables for bilinear forms graphs H_q(n,d)"};
    app.require_subcommand(1);
    int result = 0;

    // construct
    GraphArgs c_args;
    std::string c_out, c_format = "json";
    bool c_canonical = false;
    auto* construct = app.add_subcommand("construct", "build the landmark family");
    add_graph_options(construct, c_args);
    construct->add_option("--format", c_format, "json, or csv digit strings")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    construct->add_option("--out", c_out, "output path (default: stdout)");
    construct->add_flag("--canonical", c_canonical,
                        "accepted for symmetry; construct output is always canonical");
    construct->callback([&] { result = cmd_construct(c_args, c_format, c_out); });

    // verify
    GraphArgs v_args;
    std::string v_out, v_landmarks;
    unsigned v_workers = 1;
    bool v_canonical = false;
    auto* verify = app.add_subcommand("verify", "exhaustively verify the resolving property");
    add_graph_options(verify, v_args, false);
    verify->add_option("--landmarks", v_landmarks, "landmark JSON file (default: construct)");
    verify->add_option("--workers", v_workers, "verification worker threads")
        ->capture_default_str();
    verify->add_option("--out", v_out, "certificate path (default: stdout)");
    verify->add_flag("--canonical", v_canonical, "omit volatile stats from the certificate");
    verify->callback([&] {
        const bool have_graph = verify->count("--q") || verify->count("--n") ||
                                verify->count("--d");
        if (have_graph &&
            !(verify->count("--q") && verify->count("--n") && verify->count("--d")))
            throw CLI::ValidationError("verify", "--q, --n, --d must be given together");
        result = cmd_verify(v_args, have_graph, v_landmarks, v_workers, v_canonical, v_out);
    });

    // witness
    GraphArgs w_args;
    std::uint64_t w_a = 0, w_b = 0;
    std::string w_out;
    auto* witness = app.add_subcommand(
        "witness", "build the separating landmark for two vertex indices");
    add_graph_options(witness, w_args);
    witness->add_option("--a", w_a, "first vertex index")->required();
    witness->add_option("--b", w_b, "second vertex index")->required();
    witness->add_option("--out", w_out, "output path (default: stdout)");
    witness->callback([&] { result = cmd_witness(w_args, w_a, w_b, w_out); });

    // bounds
    GraphArgs b_args;
    std::string b_out, b_format = "json", b_base = "e";
    bool b_greedy = false, b_exact = false;
    std::uint32_t b_kmax = 8;
    auto* bounds = app.add_subcommand("bounds", "bound comparison for one parameter set");
    add_graph_options(bounds, b_args);
    bounds->add_option("--log-base", b_base, "log base: e, 2 or 10")->capture_default_str();
    bounds->add_option("--format", b_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    bounds->add_flag("--greedy", b_greedy, "include the greedy baseline size");
    bounds->add_flag("--exact", b_exact, "include the exact minimum (tiny graphs only)");
    bounds->add_option("--k-max", b_kmax, "exact search depth limit")->capture_default_str();
    bounds->add_option("--out", b_out, "output path (default: stdout)");
    bounds->callback([&] {
        ReportOptions opt{log_base_from_string(b_base), b_greedy, b_exact, b_kmax, b_args.cap};
        result = cmd_bounds(b_args, opt, b_format, b_out);
    });

    // table
    std::vector<std::uint64_t> t_qs{2, 3};
    std::uint32_t t_nmin = 2, t_nmax = 6, t_dmin = 2, t_dmax = 6, t_kmax = 8;
    std::string t_out, t_format = "csv", t_base = "e";
    bool t_greedy = false, t_exact = false;
    std::uint64_t t_cap = kDefaultEnumCap;
    auto* table = app.add_subcommand("table", "bound comparison over a parameter grid");
    table->add_option("--qs", t_qs, "field orders")->capture_default_str();
    table->add_option("--n-min", t_nmin)->capture_default_str();
    table->add_option("--n-max", t_nmax)->capture_default_str();
    table->add_option("--d-min", t_dmin)->capture_default_str();
    table->add_option("--d-max", t_dmax)->capture_default_str();
    table->add_option("--log-base", t_base, "log base: e, 2 or 10")->capture_default_str();
    table->add_option("--format", t_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    table->add_flag("--greedy", t_greedy, "include greedy sizes (small graphs only)");
    table->add_flag("--exact", t_exact, "include exact minima (tiny graphs only)");
    table->add_option("--k-max", t_kmax)->capture_default_str();
    table->add_option("--cap", t_cap)->capture_default_str();
    table->add_option("--out", t_out, "output path (default: stdout)");
    table->callback([&] {
        ReportOptions opt{log_base_from_string(t_base), t_greedy, t_exact, t_kmax, t_cap};
        result = cmd_table(t_qs, t_nmin, t_nmax, t_dmin, t_dmax, opt, t_format, t_out);
    });

    // search
    GraphArgs s_args;
    std::string s_out;
    bool s_exact = false;
    std::uint32_t s_kmax = 8;
    auto* search = app.add_subcommand("search", "greedy and exact baseline solvers");
    add_graph_options(search, s_args);
    search->add_flag("--exact", s_exact, "also run the exact minimum search");
    search->add_option("--k-max", s_kmax, "exact search depth limit")->capture_default_str();
    search->add_option("--out", s_out, "output path (default: stdout)");
    search->callback([&] { result = cmd_search(s_args, s_exact, s_kmax, s_out); });

    // selftest
    std::uint64_t st_cap = kDefaultEnumCap;
    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suites");
    selftest->add_option("--cap", st_cap)->capture_default_str();
    selftest->callback([&] { result = cmd_selftest(st_cap); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const verification_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return result;
}
