#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "golden.hpp"
#include "rhzeta/io.hpp"
#include "rhzeta/zeta.hpp"

using namespace rhz;
namespace golden = rhz::test::golden;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cols.push_back(cell);
        if (!line.empty() && line.back() == ',') cols.emplace_back();
        rows.push_back(cols);
    }
    return rows;
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

void check_diagnostic(const Result& r, int code) {
    CHECK(r.code == code);
    REQUIRE(line_count(r.err) == 1);
    const auto j = nlohmann::json::parse(r.err);
    CHECK(j["exit_code"] == code);
    CHECK(j.contains("error"));
    CHECK(j.contains("message"));
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "rhzeta_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("synth: reference Hamiltonian as CSV") {
    const Result r = invoke({"synth", "--n", "5", "--a", "0.5", "--sigma", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"index", "B", "J_next"});
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(std::abs(io::parse_real(rows[i + 1][1]) - golden::kDiagonal[i]) < golden::kTolerance);
        if (i < 4) CHECK(std::abs(io::parse_real(rows[i + 1][2]) - golden::kOffdiagonal[i]) < golden::kTolerance);
    }
    CHECK(rows[5][2].empty());
    CHECK(r.out.find("# max_eigenvalue_error=") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("synth: single level and JSON") {
    const Result one = invoke({"synth", "--n", "1", "--a", "1", "--sigma", "2"});
    REQUIRE(one.code == 0);
    const auto rows = csv_rows(one.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][1] == "0");

    const Result js = invoke({"synth", "--n", "3", "--format", "json"});
    REQUIRE(js.code == 0);
    const auto body = js.out.substr(0, js.out.find("\n# "));
    const auto j = nlohmann::json::parse(body);
    CHECK(j["n"] == 3);
    CHECK(j["offdiagonal"].size() == 2);
}

TEST_CASE("synth: failures exit non-zero with one diagnostic line") {
    const Result r = invoke({"synth", "--n", "5", "--a", "1", "--sigma", "0.9"});
    check_diagnostic(r, 2);
    CHECK(r.err.find("sigma > 1") != std::string::npos);
    check_diagnostic(invoke({"synth", "--a", "x"}), 2);
    check_diagnostic(invoke({"synth", "--n", "0"}), 2);
    check_diagnostic(invoke({"synth", "--format", "xml"}), 2);
    check_diagnostic(invoke({"synth", "--bogus"}), 2);
    const Result chain = invoke({"synth", "--n", "20", "--a", "0.01", "--sigma", "20"});
    check_diagnostic(chain, 3);
    CHECK(nlohmann::json::parse(chain.err)["error"] == "DisconnectedChain");
    check_diagnostic(invoke({}), 2);
}

TEST_CASE("synth: identical flags give byte-identical files") {
    const fs::path a = scratch("det_a.csv");
    const fs::path b = scratch("det_b.csv");
    REQUIRE(invoke({"synth", "--n", "64", "--a", "0.3", "--sigma", "1.7", "--out", a.string()}).code == 0);
    REQUIRE(invoke({"synth", "--n", "64", "--a", "0.3", "--sigma", "1.7", "--out", b.string()}).code == 0);
    const std::string sa = slurp(a);
    CHECK(!sa.empty());
    CHECK(sa == slurp(b));

    const fs::path c = scratch("det_c.csv");
    const fs::path d = scratch("det_d.csv");
    REQUIRE(invoke({"simulate", "--n", "8", "--points", "101", "--out", c.string()}).code == 0);
    REQUIRE(invoke({"simulate", "--n", "8", "--points", "101", "--out", d.string()}).code == 0);
    CHECK(slurp(c) == slurp(d));
}

TEST_CASE("verify: synthesized chain passes, rounded reference chain fails tight tolerances") {
    const Result ok = invoke({"verify", "--n", "5", "--a", "0.5", "--sigma", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("pass") != std::string::npos);

    const fs::path in = scratch("reference.csv");
    {
        std::ofstream f(in);
        f << "index,B,J_next\n";
        for (std::size_t i = 0; i < 5; ++i) {
            f << i << ',' << golden::kDiagonal[i] << ',';
            if (i < 4) f << golden::kOffdiagonal[i];
            f << '\n';
        }
    }
    const std::vector<std::string> base{"verify", "--n", "5", "--a", "0.5", "--sigma", "2", "--in", in.string()};
    check_diagnostic(invoke(base), 1);
    auto loose = base;
    loose.insert(loose.end(), {"--tol-lambda", "5e-3", "--tol-overlap", "5e-3"});
    CHECK(invoke(loose).code == 0);

    check_diagnostic(invoke({"verify", "--in", scratch("missing.csv").string()}), 2);
}

TEST_CASE("simulate: t = 0 row and tail bound") {
    const Result r = invoke({"simulate", "--n", "5", "--a", "1", "--sigma", "2", "--t-end", "50"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2002);
    CHECK(rows[0] == std::vector<std::string>{"t", "re_a", "im_a", "abs_a", "re_zeta_norm_ref", "im_zeta_norm_ref",
                                              "abs_deviation"});
    CHECK(io::parse_real(rows[1][0]) == 0.0);
    CHECK(std::abs(io::parse_real(rows[1][1]) - 1.0) < 1e-15);
    CHECK(io::parse_real(rows[1][2]) == 0.0);
    CHECK(io::parse_real(rows[1][6]) < 1e-15);
    const double bound = 2.0 * integral_tail_bound(2.0, 1.0, 5) / hurwitz_zeta({2.0, 0.0}, 1.0).real();
    for (std::size_t i = 1; i < rows.size(); ++i) REQUIRE(io::parse_real(rows[i][6]) <= bound);
}

TEST_CASE("simulate: ODE and spectral methods agree row by row") {
    const std::vector<std::string> base{"simulate", "--n", "5", "--a", "0.5", "--sigma", "2", "--t-end", "20",
                                        "--points", "201"};
    auto ode = base;
    ode.insert(ode.end(), {"--method", "ode"});
    const auto a = csv_rows(invoke(base).out);
    const auto b = csv_rows(invoke(ode).out);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 1; i < a.size(); ++i) {
        const double dre = io::parse_real(a[i][1]) - io::parse_real(b[i][1]);
        const double dim = io::parse_real(a[i][2]) - io::parse_real(b[i][2]);
        REQUIRE(std::hypot(dre, dim) < 1e-6);
    }
}

TEST_CASE("simulate: flag conflicts and oracle domain") {
    check_diagnostic(invoke({"simulate", "--step", "1e-3"}), 2);
    check_diagnostic(invoke({"simulate", "--format", "json"}), 2);
    check_diagnostic(invoke({"simulate", "--t-start", "5", "--t-end", "1"}), 2);
    const Result r = invoke({"simulate", "--sigma", "1.0000001"});
    check_diagnostic(r, 4);
    CHECK(nlohmann::json::parse(r.err)["error"] == "OutOfDomain");
    check_diagnostic(invoke({"simulate", "--points", "11", "--method", "ode", "--step", "1.5"}), 3);
}

TEST_CASE("simulate: coherence window truncates rows") {
    const auto rows = csv_rows(invoke({"simulate", "--t-end", "50", "--points", "101", "--t-coh", "10"}).out);
    REQUIRE(rows.size() == 22);
    CHECK(io::parse_real(rows.back()[0]) == 10.0);
}

TEST_CASE("domain: N_min thresholds") {
    const Result r = invoke({"domain", "--sigmas", "1.5,1.3,1.2,2", "--t-coh", "10"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"sigma", "n_min", "n_required", "t_max", "feasible"});
    CHECK(rows[1][2] == "4");
    CHECK(rows[2][2] == "56");
    CHECK(std::floor(io::parse_real(rows[2][1])) == 55.0);
    CHECK(rows[3][2] == "3125");
    CHECK(rows[4][2] == "1");
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][3] == "10");

    const auto grid = csv_rows(invoke({"domain"}).out);
    CHECK(grid.size() == 41);
    CHECK(grid[1][4] == "0");
    check_diagnostic(invoke({"domain", "--sigmas", "1.5,0.5"}), 2);
    check_diagnostic(invoke({"domain", "--sigmas", "1.5", "--sigma-min", "1.1"}), 2);
    check_diagnostic(invoke({"domain", "--sigma-min", "2", "--sigma-max", "1.5"}), 2);
}

TEST_CASE("design: waveguide JSON and infeasible kappa") {
    const Result ok = invoke({"design", "--n", "5", "--a", "0.5", "--sigma", "2", "--kappa", "2", "--radius", "1000"});
    REQUIRE(ok.code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["bonds"].size() == 4);
    CHECK(j["guides"].size() == 5);

    const Result bad = invoke({"design", "--n", "5", "--a", "0.5", "--sigma", "2", "--kappa", "0.3"});
    check_diagnostic(bad, 5);
    CHECK(bad.err.find("minimum kappa") != std::string::npos);
    check_diagnostic(invoke({"design", "--radius", "10"}), 5);
    check_diagnostic(invoke({"design", "--lambda", "100"}), 5);
    check_diagnostic(invoke({"design", "--format", "csv"}), 2);
}

TEST_CASE("design: spin target reproduces the tridiagonal") {
    const Result spin = invoke({"design", "--target", "spin", "--n", "5", "--a", "0.5", "--sigma", "2"});
    REQUIRE(spin.code == 0);
    const Result tri = invoke({"synth", "--n", "5", "--a", "0.5", "--sigma", "2"});
    const auto s = csv_rows(spin.out);
    const auto t = csv_rows(tri.out);
    REQUIRE(s.size() == t.size());
    CHECK(s[0] == std::vector<std::string>{"index", "J", "B"});
    for (std::size_t i = 1; i < s.size(); ++i) {
        CHECK(s[i][1] == t[i][2]);
        CHECK(s[i][2] == t[i][1]);
    }
}

TEST_CASE("help exits cleanly") {
    const Result r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("synth") != std::string::npos);
    CHECK(r.err.empty());
}
