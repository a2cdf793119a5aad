// Exercises the installed binary end to end: artifact round trips, the
// documented exit codes, and agreement between file-driven and in-process
// verification. Expects the CLI path as argv[1].

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "bilform/io.hpp"

using namespace bilform;
using nlohmann::json;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++g_failures;
}

int run(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return status < 0 ? status : WEXITSTATUS(status);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 1;
    }
    const std::string cli = argv[1];
    namespace fs = std::filesystem;
    fs::path dir = fs::path("cli_test_artifacts");
    fs::create_directories(dir);
    auto at = [&](const char* name) { return (dir / name).string(); };

    const std::string quiet = " 2>/dev/null";

    // construct + verify round trip reproduces the in-process certificate
    check(run(cli + " construct --q 2 --n 2 --d 2 --out " + at("lm.json") + quiet) == 0,
          "construct exits 0");
    check(run(cli + " verify --landmarks " + at("lm.json") + " --canonical --out " +
              at("cert_file.json") + quiet) == 0,
          "verify from file exits 0 on a resolving set");
    check(run(cli + " verify --q 2 --n 2 --d 2 --canonical --out " + at("cert_fresh.json") +
              quiet) == 0,
          "verify from parameters exits 0");
    check(read_text_file(at("cert_file.json")) == read_text_file(at("cert_fresh.json")),
          "file-driven and parameter-driven certificates are byte-identical");

    GraphSpec g(make_field(2, 1), 2, 2);
    Construction c = build_landmarks(g);
    Certificate cert = verify_resolving(c.set, 1);
    check(read_text_file(at("cert_fresh.json")) ==
              dump_canonical(certificate_to_json(g, c.set.items.size(), cert, false)),
          "CLI certificate equals the in-process one");

    // trimming the landmark file down to two landmarks forces a collision
    json lm = json::parse(read_text_file(at("lm.json")));
    json trimmed = lm;
    trimmed["landmarks"].erase(trimmed["landmarks"].begin() + 2,
                               trimmed["landmarks"].end());
    trimmed["provenance"].erase(trimmed["provenance"].begin() + 2,
                                trimmed["provenance"].end());
    trimmed["landmark_count"] = 2;
    write_text_file(at("lm_trimmed.json"), dump_canonical(trimmed));
    check(run(cli + " verify --landmarks " + at("lm_trimmed.json") + " --out " +
              at("cert_bad.json") + quiet) == 1,
          "verify exits 1 when the trimmed set no longer resolves");
    json bad = json::parse(read_text_file(at("cert_bad.json")));
    check(bad["resolving"] == false && !bad["counterexample"].is_null(),
          "failing certificate carries a counterexample pair");

    // exit codes: usage and cap
    check(run(cli + " verify --n 2 --d 2" + quiet) == 2, "incomplete flags exit 2");
    check(run(cli + " nonsense" + quiet) == 2, "unknown subcommand exits 2");
    check(run(cli + " verify --q 2 --n 6 --d 5" + quiet) == 3, "cap overflow exits 3");

    // csv digit strings: one row-major numeral per landmark
    check(run(cli + " construct --q 2 --n 2 --d 2 --format csv --out " + at("lm.csv") +
              quiet) == 0,
          "construct --format csv exits 0");
    std::string csv = read_text_file(at("lm.csv"));
    check(std::count(csv.begin(), csv.end(), '\n') == 16 &&
              csv.find_first_not_of("01\n") == std::string::npos,
          "csv has 16 binary digit strings");

    // witness agrees with the in-process procedure
    check(run(cli + " witness --q 2 --n 2 --d 2 --a 3 --b 12 --out " + at("w.json") +
              quiet) == 0,
          "witness exits 0");
    json w = json::parse(read_text_file(at("w.json")));
    check(w["dim_a"] != w["dim_b"], "witness separates the pair");

    // table emits the documented header
    check(run(cli + " table --qs 2 --n-min 2 --n-max 3 --d-min 2 --d-max 3 --out " +
              at("table.csv") + quiet) == 0,
          "table exits 0");
    check(read_text_file(at("table.csv"))
              .starts_with("q,n,d,theorem_bound,babai_general,babai_strong,babai_M"),
          "table csv header matches the documented columns");

    std::cout << (g_failures == 0 ? "CLI tests passed" : "CLI tests FAILED") << "\n";
    return g_failures == 0 ? 0 : 1;
}
