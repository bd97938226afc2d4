#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the command-line binary: exit-code contract
// (0 pass, 1 verified fail, 2 usage/parse error), wire formats, and
// byte-for-byte determinism.

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CliResult run(const std::string& args) {
    std::string cmd = std::string(H2WAV_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "h2wav_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream(p) << content;
    return p;
}

Json result_of(const CliResult& r) { return Json::parse(r.output).at("result"); }

}  // namespace

TEST_CASE("construct emits canonical sets") {
    CliResult r = run("construct kr --r 1");
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc.at("schema") == "h2wav/1");
    CHECK(doc.at("manifest").at("command") == "construct");
    CHECK(doc.at("result").at("set") == Json::parse(R"([["4/3","2"],["4","16/3"]])"));

    CliResult x = run("construct kxy --x 3/2 --y 8/5");
    CHECK(x.exit_code == 0);
    CHECK(result_of(x).at("set").size() == 5);

    CHECK(run("construct --family shannon").exit_code == 0);
}

TEST_CASE("parameter violations exit 2 with a machine-readable message") {
    for (const std::string& args :
         {std::string("construct kr --r 0"), std::string("construct krk --r 1 --k 2"),
          std::string("construct kxy --x 3/2 --y 7/4"),
          std::string("construct kreps --r 1 --eps 1/2"), std::string("construct nosuch"),
          std::string("construct kxy --x 1.5 --y 1.6"),
          std::string("sweep --family nosuch"), std::string("nosuchcommand")}) {
        CliResult r = run(args);
        CHECK(r.exit_code == 2);
        CHECK(Json::parse(r.output).contains("error"));
    }
}

TEST_CASE("verify exit codes follow the verdict") {
    fs::path k1 = scratch_dir() / "k1.json";
    REQUIRE(run("construct kr --r 1 --out " + k1.string()).exit_code == 0);
    CHECK(run("verify --mode set " + k1.string()).exit_code == 0);
    CHECK(run("verify --set " + k1.string()).exit_code == 0);

    fs::path bad = write_file("bad_set.json", R"([["1","3"]])");
    CliResult r = run("verify --mode set " + bad.string());
    CHECK(r.exit_code == 1);
    Json res = result_of(r);
    CHECK(res.at("ok") == false);
    CHECK(res.at("dilation").at("overlap_defect") == "1*pi");
    CHECK(res.at("translation").at("overlap_defect") == "0*pi");

    fs::path malformed = write_file("malformed.json", "{not json");
    CHECK(run("verify --mode set " + malformed.string()).exit_code == 2);
    CHECK(run("verify --mode set /nonexistent/file.json").exit_code == 2);

    // a set reaching below zero is a domain error, not a quiet failure
    fs::path neg = write_file("neg_set.json", R"([["-1","1"]])");
    CHECK(run("verify --mode set " + neg.string()).exit_code == 2);
}

TEST_CASE("wavelet verification and classification through the CLI") {
    fs::path psi1 = scratch_dir() / "psi1.json";
    REQUIRE(run("construct kr --r 1 --wavelet --out " + psi1.string()).exit_code == 0);
    CliResult v = run("verify --mode wavelet " + psi1.string());
    CHECK(v.exit_code == 0);
    CHECK(result_of(v).at("pass") == true);
    CHECK(result_of(v).at("norm_sq_pi") == "2 + 0*sqrt2");

    CliResult c = run("classify " + psi1.string());
    CHECK(c.exit_code == 0);
    CHECK(result_of(c).at("kind") == "M_r");
    CHECK(result_of(c).at("r") == 1);
    CHECK(result_of(c).at("profile").at("script_e") == Json::array({-4, -2, 0, 2, 4}));
    CHECK(result_of(c).at("profile").at("ek").at("2") == Json::parse(R"([["2/3","1"]])"));

    fs::path sh = scratch_dir() / "shannon.json";
    REQUIRE(run("construct shannon --wavelet --out " + sh.string()).exit_code == 0);
    CliResult cm = run("classify " + sh.string());
    CHECK(cm.exit_code == 0);
    CHECK(result_of(cm) == Json({{"kind", "M_infinity"}}));

    // the sign flip: verified fail with failing_q = 1
    Json pieces = Json::parse(run("construct kr --r 1 --wavelet").output).at("result");
    for (auto& piece : pieces)
        if (piece[0][0] == "28/3") piece[1] = "0 + 1/2*sqrt2";
    fs::path broken = write_file("broken.json", pieces.dump());
    CliResult bv = run("verify --mode wavelet " + broken.string());
    CHECK(bv.exit_code == 1);
    CHECK(result_of(bv).at("failing_q") == 1);
    CHECK(run("classify " + broken.string()).exit_code == 1);
}

TEST_CASE("equivalence subcommand") {
    fs::path k1 = scratch_dir() / "e_k1.json";
    fs::path sh = scratch_dir() / "e_sh.json";
    fs::path w = scratch_dir() / "e_w.json";
    REQUIRE(run("construct kr --r 1 --out " + k1.string()).exit_code == 0);
    REQUIRE(run("construct shannon --out " + sh.string()).exit_code == 0);
    REQUIRE(run("construct kreps --r 1 --eps 1/4 --depth 2 --out " + w.string()).exit_code == 0);

    CHECK(run("equiv --mode translation --a " + k1.string() + " --b " + sh.string()).exit_code ==
          0);
    CHECK(run("equiv --mode dilation --a " + w.string() + " --b " + k1.string()).exit_code == 0);
    CliResult r = run("equiv --mode translation --a " + w.string() + " --b " + k1.string());
    CHECK(r.exit_code == 1);
    CHECK(result_of(r).at("equivalent") == false);
    CHECK(run("equiv --mode nosuch --a " + k1.string() + " --b " + sh.string()).exit_code == 2);
}

TEST_CASE("sample and probe") {
    fs::path sh = scratch_dir() / "s_sh.json";
    REQUIRE(run("construct shannon --wavelet --out " + sh.string()).exit_code == 0);
    CliResult s = run("sample --wavelet " + sh.string() + " --xs 0,0.5");
    CHECK(s.exit_code == 0);
    CHECK(s.output.substr(0, 10) == "x,re,im\r\n0");

    fs::path w = scratch_dir() / "s_w.json";
    REQUIRE(run("construct kreps --r 1 --eps 1/4 --depth 3 --out " + w.string()).exit_code == 0);
    CliResult p = run("probe --set " + w.string() + " --deltas 1/12,1/32");
    CHECK(p.exit_code == 0);
    Json rows = result_of(p);
    CHECK(rows[0] == Json::array({"1/12*pi", true}));
    CHECK(rows[1] == Json::array({"1/32*pi", false}));
    CHECK(run("probe --set " + w.string() + " --deltas 0").exit_code == 2);
}

TEST_CASE("gram through the CLI") {
    fs::path psi1 = scratch_dir() / "g_psi1.json";
    REQUIRE(run("construct kr --r 1 --wavelet --out " + psi1.string()).exit_code == 0);
    CliResult g = run("gram --wavelet " + psi1.string() +
                      " --jmin -1 --jmax 1 --kmin -1 --kmax 1");
    CHECK(g.exit_code == 0);
    Json res = result_of(g);
    CHECK(res.at("index_grid").size() == 9);
    CHECK(res.at("max_offdiag").get<double>() < 1e-10);
    CHECK(res.at("max_diag_err").get<double>() < 1e-10);
}

TEST_CASE("sweeps") {
    SUBCASE("two-interval family all pass") {
        CliResult r = run("sweep --family krk --rmin 1 --rmax 6");
        CHECK(r.exit_code == 0);
        std::size_t rows = 0, passes = 0, pos = 0;
        // header + one row per (r, k): sum of 2^(r+1)-3 over r=1..6 is 234
        while ((pos = r.output.find("\r\n", pos)) != std::string::npos) { ++rows; pos += 2; }
        CHECK(rows == 235);
        pos = 0;
        while ((pos = r.output.find(",1,0*pi,0*pi,0*pi,0*pi", pos)) != std::string::npos) {
            ++passes;
            ++pos;
        }
        CHECK(passes == 234);
    }
    SUBCASE("triangle sweep: interior passes, exterior rejected") {
        CliResult r = run("sweep --family kxy --nx 20 --ny 20");
        CHECK(r.exit_code == 0);
        std::istringstream in(r.output);
        std::string line;
        std::getline(in, line);
        CHECK(line.substr(0, 4) == "x,y,");
        int interior = 0, exterior = 0;
        while (std::getline(in, line)) {
            if (line.find(",1,1,0*pi,0*pi,0*pi,0*pi") != std::string::npos)
                ++interior;
            else if (line.find(",0,0,") != std::string::npos)
                ++exterior;
        }
        CHECK(interior + exterior == 400);
        CHECK(interior > 50);
    }
    SUBCASE("truncation sweep: defect column follows the recurrence") {
        CliResult r = run("sweep --family kreps --r 1 --eps 1/4 --nmin 0 --nmax 6");
        CHECK(r.exit_code == 0);
        std::istringstream in(r.output);
        std::string line;
        std::getline(in, line);  // header
        int depth = 0;
        while (std::getline(in, line)) {
            // tail defect 3/16 * 2^-((N+1)(N+6)/2), and the tau overlap equals it
            long long drop = (depth + 1LL) * (depth + 6LL) / 2;
            std::string defect = "3/" + std::to_string(16LL << drop) + "*pi";
            CHECK(line.find("," + defect + "," + defect + ",") != std::string::npos);
            ++depth;
        }
        CHECK(depth == 7);
    }
}

TEST_CASE("deterministic output bytes") {
    CliResult a = run("construct kxy --x 3/2 --y 8/5");
    CliResult b = run("construct kxy --x 3/2 --y 8/5");
    CHECK(a.output == b.output);
    CliResult s1 = run("sweep --family kxy --nx 5 --ny 5");
    CliResult s2 = run("sweep --family kxy --nx 5 --ny 5");
    CHECK(s1.output == s2.output);
    CliResult r1 = run("sweep --family kxy --samples 8 --seed 12");
    CliResult r2 = run("sweep --family kxy --samples 8 --seed 12");
    CliResult r3 = run("sweep --family kxy --samples 8 --seed 13");
    CHECK(r1.output == r2.output);
    CHECK(r1.output != r3.output);
}
