// Command-line front end: exact constructions, tiling and wavelet
// verification, classification, equivalence tests, and the floating-point
// sampling/Gram/probe layer. Exact results are emitted as versioned JSON
// documents; sample and sweep emit CSV. Outputs are deterministic: the same
// command line produces the same bytes.

#include "h2wav/characterize.hpp"
#include "h2wav/constructions.hpp"
#include "h2wav/json_io.hpp"
#include "h2wav/numeric.hpp"
#include "h2wav/tiling.hpp"
#include "h2wav/wavelets.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

namespace {

using namespace h2wav;

constexpr const char* kSchema = "h2wav/1";
constexpr const char* kVersion = "1.0.0";

// 0: pass/success, 1: verified fail, 2: usage/parameter/parse error
enum ExitCode { kOk = 0, kFail = 1, kUsage = 2 };

struct Output {
    std::optional<std::string> path;

    void write(const std::string& text) const {
        if (path) {
            std::ofstream out(*path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file: " + *path);
            out << text;
        } else {
            std::cout << text;
        }
    }
};

void emit_json(const Output& out, const std::string& command, Json params, Json result) {
    Json doc{{"schema", kSchema},
             {"manifest",
              Json{{"command", command},
                   {"params", std::move(params)},
                   {"artifact_version", kVersion},
                   {"outputs", out.path ? Json::array({*out.path}) : Json::array()}}},
             {"result", std::move(result)}};
    out.write(doc.dump(2) + "\n");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

// Inputs may be bare wire-format arrays or documents produced by `construct`.
Json unwrap(const Json& doc) {
    if (doc.is_object() && doc.contains("result")) return unwrap(doc.at("result"));
    if (doc.is_object() && doc.contains("set")) return doc.at("set");
    return doc;
}

IntervalSet load_set(const std::string& path) {
    return interval_set_from_json(unwrap(load_json_file(path)));
}

StepFunction load_wavelet(const std::string& path) {
    return step_function_from_json(unwrap(load_json_file(path)));
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

StepFunction indicator_of(const IntervalSet& s) {
    std::vector<StepFunction::Piece> pieces;
    for (const auto& iv : s.pieces()) pieces.push_back({iv, Q2Value(1)});
    return StepFunction::from_pieces(std::move(pieces));
}

struct ConstructArgs {
    std::string family_pos;
    int r = 1;
    long long k = 1;
    std::string x, y, eps;
    int depth = 12;
    bool as_wavelet = false;

    std::string family() const {
        if (family_pos.empty()) throw std::invalid_argument("a family is required");
        return family_pos;
    }
};

int run_construct(const ConstructArgs& a, const Output& out) {
    const std::string family = a.family();
    Json params{{"family", family}, {"wavelet", a.as_wavelet}};
    Json result;

    // constructors may reject their parameters, so build them into named
    // values before any JSON assembly
    auto wrap_set = [](const IntervalSet& s) {
        Json out_set;
        out_set["set"] = to_json(s);
        return out_set;
    };

    if (family == "krk") {
        params["r"] = a.r;
        params["k"] = a.k;
        IntervalSet s = make_krk(a.r, a.k);
        result = a.as_wavelet ? to_json(indicator_wavelet(s)) : wrap_set(s);
    } else if (family == "kr") {
        params["r"] = a.r;
        if (a.as_wavelet) {
            result = to_json(make_psi_r(a.r));
        } else {
            IntervalSet s = make_kr(a.r).set;
            result = wrap_set(s);
        }
    } else if (family == "kxy") {
        if (a.x.empty() || a.y.empty())
            throw std::invalid_argument("kxy requires --x and --y");
        params["x"] = a.x;
        params["y"] = a.y;
        PiScalar x = PiScalar::parse(a.x), y = PiScalar::parse(a.y);
        if (a.as_wavelet) {
            result = to_json(make_psi_xy(x, y));
        } else {
            IntervalSet s = make_kxy(x, y);
            result = wrap_set(s);
        }
    } else if (family == "kreps") {
        if (a.eps.empty()) throw std::invalid_argument("kreps requires --eps");
        params["r"] = a.r;
        params["eps"] = a.eps;
        params["depth"] = a.depth;
        KrepsBuild b = make_kreps(a.r, PiScalar::parse(a.eps), a.depth);
        // the truncated set is deliberately not a wavelet set, so its
        // indicator is emitted without the wavelet-set gate
        result = a.as_wavelet ? to_json(indicator_of(b.set)) : to_json(b);
    } else if (family == "shannon") {
        IntervalSet s = shannon_set();
        result = a.as_wavelet ? to_json(indicator_wavelet(s)) : wrap_set(s);
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }

    emit_json(out, "construct", std::move(params), std::move(result));
    return kOk;
}

int run_verify(const std::string& mode, const std::string& path, const Output& out) {
    Json params{{"mode", mode}, {"in", path}};
    if (mode == "set") {
        WaveletSetCheck c = check_wavelet_set(load_set(path));
        emit_json(out, "verify", std::move(params), to_json(c));
        return c.ok ? kOk : kFail;
    }
    if (mode == "wavelet") {
        WaveletVerdict v = verify_wavelet(load_wavelet(path));
        emit_json(out, "verify", std::move(params), to_json(v));
        return v.pass() ? kOk : kFail;
    }
    throw std::invalid_argument("mode must be 'set' or 'wavelet'");
}

int run_classify(const std::string& path, const Output& out) {
    Json params{{"in", path}};
    StepFunction f = load_wavelet(path);
    try {
        ClassLabel label = classify(f);
        Json result = to_json(label);
        if (label.r) result["profile"] = to_json(support_profile(f));
        emit_json(out, "classify", std::move(params), std::move(result));
        return kOk;
    } catch (const std::invalid_argument&) {
        emit_json(out, "classify", std::move(params),
                  Json{{"error", "input fails the wavelet characterization"}});
        return kFail;
    } catch (const std::runtime_error& e) {
        emit_json(out, "classify", std::move(params), Json{{"error", e.what()}});
        return kFail;
    }
}

int run_equiv(const std::string& mode, const std::string& pa, const std::string& pb,
              const Output& out) {
    Json params{{"mode", mode}, {"a", pa}, {"b", pb}};
    IntervalSet a = load_set(pa), b = load_set(pb);
    EquivalenceResult r;
    if (mode == "translation")
        r = translation_equivalent(a, b);
    else if (mode == "dilation")
        r = dilation_equivalent(a, b);
    else
        throw std::invalid_argument("mode must be 'translation' or 'dilation'");
    emit_json(out, "equiv", std::move(params), to_json(r));
    return r.equivalent ? kOk : kFail;
}

int run_sample(const std::string& path, const std::string& xs_csv, const Output& out) {
    StepFunction f = load_wavelet(path);
    std::vector<double> xs;
    for (const auto& tok : split_list(xs_csv)) xs.push_back(std::stod(tok));
    std::string csv = "x,re,im\r\n";
    for (const auto& s : sample_time(f, xs))
        csv += format_double(s.x) + "," + format_double(s.value.real()) + "," +
               format_double(s.value.imag()) + "\r\n";
    out.write(csv);
    return kOk;
}

int run_gram(const std::string& path, int jmin, int jmax, long kmin, long kmax,
             const Output& out) {
    StepFunction f = load_wavelet(path);
    GramReport g = gram(f, jmin, jmax, kmin, kmax);
    emit_json(out, "gram",
              Json{{"in", path}, {"jmin", jmin}, {"jmax", jmax}, {"kmin", kmin}, {"kmax", kmax}},
              to_json(g));
    return kOk;
}

int run_probe(const std::string& path, const std::string& deltas_csv, const Output& out) {
    IntervalSet s = load_set(path);
    std::vector<PiScalar> deltas;
    for (const auto& tok : split_list(deltas_csv)) deltas.push_back(PiScalar::parse(tok));
    Json rows = Json::array();
    for (const auto& [delta, hit] : origin_probe(s, deltas))
        rows.push_back(Json::array({delta.to_string(), hit}));
    emit_json(out, "probe", Json{{"in", path}, {"deltas", deltas_csv}}, std::move(rows));
    return kOk;
}

std::string defect_fields(const WaveletSetCheck& c) {
    return std::string(c.ok ? "1" : "0") + "," + c.translation.overlap_defect.to_string() + "," +
           c.translation.gap_defect.to_string() + "," + c.dilation.overlap_defect.to_string() +
           "," + c.dilation.gap_defect.to_string();
}

struct SweepArgs {
    std::string family;
    int nx = 20, ny = 20;
    int samples = 0;  // kxy: when > 0, draw random rational points instead of a grid
    unsigned seed = 0;
    int rmin = 1, rmax = 6;
    int r = 1;
    std::string eps = "1/4";
    int nmin = 0, nmax = 12;
};

int run_sweep(const SweepArgs& a, const Output& out) {
    std::string csv;
    if (a.family == "kxy") {
        if (a.samples < 0 || (a.samples == 0 && (a.nx < 1 || a.ny < 1)))
            throw std::invalid_argument("grid resolution must be >= 1");
        csv = "x,y,in_domain,pass,tau_overlap,tau_gap,d_overlap,d_gap\r\n";
        std::vector<std::pair<PiScalar, PiScalar>> points;
        if (a.samples > 0) {
            // random rational parameter points; rationals are dense in the
            // triangle, so any resolution is reachable
            std::mt19937 gen(a.seed);
            std::uniform_int_distribution<long> num(1, 4095);
            while (points.size() < static_cast<std::size_t>(a.samples)) {
                points.push_back({PiScalar(1 + Rational(num(gen), 4096)),
                                  PiScalar(1 + Rational(num(gen), 4096))});
            }
        } else {
            for (int i = 1; i <= a.nx; ++i)
                for (int j = 1; j <= a.ny; ++j)
                    points.push_back({PiScalar(1 + Rational(i, a.nx + 1)),
                                      PiScalar(1 + Rational(j, a.ny + 1))});
        }
        for (const auto& [x, y] : points) {
            std::string row = x.coeff_string() + "," + y.coeff_string() + ",";
            try {
                WaveletSetCheck c = check_wavelet_set(make_kxy(x, y));
                row += "1," + defect_fields(c);
            } catch (const std::invalid_argument&) {
                row += "0,0,,,,";
            }
            csv += row + "\r\n";
        }
    } else if (a.family == "krk") {
        csv = "r,k,pass,tau_overlap,tau_gap,d_overlap,d_gap\r\n";
        for (int r = a.rmin; r <= a.rmax; ++r) {
            const long long k_end = 2 * ((1LL << r) - 1);
            for (long long k = 1; k < k_end; ++k) {
                WaveletSetCheck c = check_wavelet_set(make_krk(r, k));
                csv += std::to_string(r) + "," + std::to_string(k) + "," + defect_fields(c) +
                       "\r\n";
            }
        }
    } else if (a.family == "kr") {
        csv = "r,pass,tau_overlap,tau_gap,d_overlap,d_gap\r\n";
        for (int r = a.rmin; r <= a.rmax; ++r) {
            WaveletSetCheck c = check_wavelet_set(make_kr(r).set);
            csv += std::to_string(r) + "," + defect_fields(c) + "\r\n";
        }
    } else if (a.family == "kreps") {
        csv = "r,eps,depth,tail_defect,tau_overlap,tau_gap,d_overlap,d_gap,"
              "dilation_equivalent\r\n";
        PiScalar eps = PiScalar::parse(a.eps);
        KrParts kr = make_kr(a.r);
        for (int n = a.nmin; n <= a.nmax; ++n) {
            KrepsBuild b = make_kreps(a.r, eps, n);
            TilingReport tau = tiling_report(tau_profile(b.set));
            TilingReport dil = tiling_report(d_profile(b.set));
            bool deq = dilation_equivalent(b.set, kr.set).equivalent;
            csv += std::to_string(a.r) + "," + eps.to_string() + "," + std::to_string(n) + "," +
                   b.tail_defect.to_string() + "," + tau.overlap_defect.to_string() + "," +
                   tau.gap_defect.to_string() + "," + dil.overlap_defect.to_string() + "," +
                   dil.gap_defect.to_string() + "," + (deq ? "1" : "0") + "\r\n";
        }
    } else {
        throw std::invalid_argument("unknown sweep family: " + a.family);
    }
    out.write(csv);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and verification of H2(R) wavelet sets and step wavelets"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    std::string out_path;
    bool json_flag = false;
    unsigned seed = 0;
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_flag("--json", json_flag, "JSON output (default for non-CSV commands)");
    app.add_option("--seed", seed, "seed for randomized property sweeps");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a wavelet set family member");
    construct->add_option("family,--family", ca.family_pos, "krk|kr|kxy|kreps|shannon");
    construct->add_option("--r", ca.r, "family parameter r >= 1");
    construct->add_option("--k", ca.k, "two-interval family parameter k");
    construct->add_option("--x", ca.x, "kxy parameter x (coefficient of pi, e.g. 3/2)");
    construct->add_option("--y", ca.y, "kxy parameter y (coefficient of pi)");
    construct->add_option("--eps", ca.eps, "kreps parameter eps (coefficient of pi)");
    construct->add_option("--depth", ca.depth, "kreps truncation depth (default 12)");
    construct->add_flag("--wavelet", ca.as_wavelet,
                        "emit the associated step wavelet instead of the set");

    std::string verify_mode = "set", verify_in, verify_set_in, verify_wavelet_in;
    auto* verify = app.add_subcommand("verify", "run the tiling or wavelet characterization");
    verify->add_option("--mode", verify_mode, "set|wavelet");
    verify->add_option("target,--in", verify_in, "input JSON file");
    verify->add_option("--set", verify_set_in, "interval-set JSON file (implies --mode set)");
    verify->add_option("--wavelet", verify_wavelet_in,
                       "wavelet JSON file (implies --mode wavelet)");

    std::string classify_in;
    auto* classify_cmd = app.add_subcommand("classify", "equivalence class of a wavelet");
    classify_cmd->add_option("target,--wavelet", classify_in, "wavelet JSON file");

    std::string equiv_mode = "translation", equiv_a, equiv_b;
    auto* equiv = app.add_subcommand("equiv", "translation/dilation equivalence of two sets");
    equiv->add_option("--mode", equiv_mode, "translation|dilation");
    equiv->add_option("--a", equiv_a, "first interval-set JSON file")->required();
    equiv->add_option("--b", equiv_b, "second interval-set JSON file")->required();

    std::string sample_in, sample_xs;
    auto* sample = app.add_subcommand("sample", "closed-form time-domain samples (CSV)");
    sample->add_option("--wavelet", sample_in, "wavelet JSON file")->required();
    sample->add_option("--xs", sample_xs, "comma-separated sample points")->required();

    std::string gram_in;
    int gram_jmin = -2, gram_jmax = 2;
    long gram_kmin = -3, gram_kmax = 3;
    auto* gram_cmd = app.add_subcommand("gram", "Gram-matrix deviation report");
    gram_cmd->add_option("--wavelet", gram_in, "wavelet JSON file")->required();
    gram_cmd->add_option("--jmin", gram_jmin);
    gram_cmd->add_option("--jmax", gram_jmax);
    gram_cmd->add_option("--kmin", gram_kmin);
    gram_cmd->add_option("--kmax", gram_kmax);

    std::string probe_in, probe_deltas;
    auto* probe = app.add_subcommand("probe", "origin support probe");
    probe->add_option("--set", probe_in, "interval-set JSON file")->required();
    probe->add_option("--deltas", probe_deltas, "comma-separated pi coefficients")->required();

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "parameter sweep (CSV)");
    sweep->add_option("--family", sa.family, "kxy|krk|kr|kreps")->required();
    sweep->add_option("--nx", sa.nx, "kxy grid columns");
    sweep->add_option("--samples", sa.samples, "kxy: random parameter points instead of a grid");
    sweep->add_option("--ny", sa.ny, "kxy grid rows");
    sweep->add_option("--rmin", sa.rmin);
    sweep->add_option("--rmax", sa.rmax);
    sweep->add_option("--r", sa.r, "kreps r");
    sweep->add_option("--eps", sa.eps, "kreps eps (coefficient of pi)");
    sweep->add_option("--nmin", sa.nmin, "kreps minimal depth");
    sweep->add_option("--nmax", sa.nmax, "kreps maximal depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << Json{{"error", {{"kind", "usage_error"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kUsage;
    }
    out.path = out_path.empty() ? std::nullopt : std::optional(out_path);
    (void)json_flag;

    try {
        if (construct->parsed()) return run_construct(ca, out);
        if (verify->parsed()) {
            if (!verify_set_in.empty()) return run_verify("set", verify_set_in, out);
            if (!verify_wavelet_in.empty()) return run_verify("wavelet", verify_wavelet_in, out);
            if (verify_in.empty())
                throw std::invalid_argument("verify: an input file is required");
            return run_verify(verify_mode, verify_in, out);
        }
        if (classify_cmd->parsed()) {
            if (classify_in.empty())
                throw std::invalid_argument("classify: an input file is required");
            return run_classify(classify_in, out);
        }
        if (equiv->parsed()) return run_equiv(equiv_mode, equiv_a, equiv_b, out);
        if (sample->parsed()) return run_sample(sample_in, sample_xs, out);
        if (gram_cmd->parsed())
            return run_gram(gram_in, gram_jmin, gram_jmax, gram_kmin, gram_kmax, out);
        if (probe->parsed()) return run_probe(probe_in, probe_deltas, out);
        if (sweep->parsed()) {
            sa.seed = seed;
            return run_sweep(sa, out);
        }
        return kUsage;
    } catch (const Json::exception& e) {
        std::cerr << Json{{"error", {{"kind", "parse_error"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << Json{{"error", {{"kind", "parameter_violation"}, {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << Json{{"error", {{"kind", "domain_error"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", {{"kind", "internal_error"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kUsage;
    }
}
