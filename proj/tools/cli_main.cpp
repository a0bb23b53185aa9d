// vexcap-cli: batch experiment runner over path corpora.
//
// Exit codes: 0 success, 2 validation error, 1 runtime error (including
// malformed corpus files that were skipped with a warning).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vexcap/bruneau.hpp"
#include "vexcap/capital.hpp"
#include "vexcap/certificate.hpp"
#include "vexcap/generators.hpp"
#include "vexcap/serialize.hpp"
#include "vexcap/strategy_a.hpp"
#include "vexcap/strategy_b.hpp"
#include "vexcap/upcrossings.hpp"
#include "vexcap/variation.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace vexcap;

namespace {

// ---------------------------------------------------------------------------
// config-file merge: every option is registered with a JSON key; values from
// --config fill in options the command line left untouched (flags win).

struct Binding {
    std::string key;
    CLI::Option* opt = nullptr;
    std::function<void(const json&)> apply;
};

struct SubCtx {
    CLI::App* sub = nullptr;
    std::string config_file;
    std::vector<Binding> bindings;

    template <typename T>
    CLI::Option* bind(const std::string& name, T& var,
                      const std::string& desc) {
        CLI::Option* opt = sub->add_option(name, var, desc);
        bindings.push_back(
            {key_of(name), opt, [&var](const json& j) { var = j.get<T>(); }});
        return opt;
    }

    CLI::Option* bind_flag(const std::string& name, bool& var,
                           const std::string& desc) {
        CLI::Option* opt = sub->add_flag(name, var, desc);
        bindings.push_back(
            {key_of(name), opt, [&var](const json& j) { var = j.get<bool>(); }});
        return opt;
    }

    static std::string key_of(const std::string& name) {
        auto pos = name.find_first_not_of('-');
        return name.substr(pos == std::string::npos ? 0 : pos);
    }

    void add_config_option() {
        sub->add_option("--config", config_file,
                        "JSON config file; explicit flags take precedence");
    }

    void merge_config() const {
        if (config_file.empty()) return;
        std::ifstream in(config_file);
        if (!in)
            throw CLI::ValidationError("--config",
                                       "cannot read " + config_file);
        json cfg = json::parse(in);
        if (!cfg.is_object())
            throw CLI::ValidationError("--config", "expected a JSON object");
        for (const auto& [key, value] : cfg.items()) {
            const Binding* found = nullptr;
            for (const auto& b : bindings)
                if (b.key == key) found = &b;
            if (!found)
                throw CLI::ValidationError("--config", "unknown key " + key);
            if (found->opt->count() == 0) found->apply(value);
        }
    }
};

struct CommonOpts {
    std::string in_dir;
    std::string out_dir;
    bool as_json = false;
    int threads = 1;
};

void add_common(SubCtx& ctx, CommonOpts& c, bool with_in = true) {
    ctx.add_config_option();
    // required options are checked after the config merge, not by the parser
    if (with_in) ctx.bind("--in", c.in_dir, "directory of path JSON files");
    ctx.bind("--out", c.out_dir, "directory for report files");
    ctx.bind_flag("--json", c.as_json, "machine-parseable JSON on stdout");
    ctx.bind("--threads", c.threads, "worker threads for corpus batches")
        ->check(CLI::PositiveNumber);
}

// ---------------------------------------------------------------------------

template <typename F>
void parallel_for(std::size_t n, int threads, F&& body) {
    std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next.store(n);
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct Corpus {
    std::vector<std::string> ids;  // file stems, sorted
    std::vector<paths::SampledPath> members;
    bool had_errors = false;  // malformed files were skipped
};

Corpus load_corpus(const std::string& dir) {
    if (dir.empty())
        throw CLI::ValidationError("--in", "a corpus directory is required");
    if (!fs::is_directory(dir))
        throw CLI::ValidationError("--in", dir + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json" &&
            e.path().filename() != "manifest.json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());

    Corpus corpus;
    for (const auto& f : files) {
        try {
            corpus.members.push_back(io::read_path_json(f.string()));
            corpus.ids.push_back(f.stem().string());
        } catch (const std::exception& ex) {
            std::cerr << "warning: skipping malformed path file " << f << ": "
                      << ex.what() << "\n";
            corpus.had_errors = true;
        }
    }
    return corpus;
}

// prints CSV (default) or JSON to stdout; mirrors both into --out if set
void emit_report(const json& rows, const std::string& csv, bool as_json,
                 const std::string& out_dir, const std::string& base) {
    if (as_json)
        std::cout << rows.dump(2) << "\n";
    else
        std::cout << csv;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream(fs::path(out_dir) / (base + ".json")) << rows.dump(2)
                                                            << "\n";
        std::ofstream(fs::path(out_dir) / (base + ".csv")) << csv;
    }
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

double or_default(double flag_value, double fallback) {
    return std::isnan(flag_value) ? fallback : flag_value;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOpts {
    CommonOpts common;
    std::string kind = "brownian";
    int count = 1;
    std::size_t steps = 1024;
    double T = 1.0;
    std::uint64_t seed = 1;
    double scale = 1.0;
    double hurst = 0.5;
    paths::DeterministicParams det;
    bool csv = false;
};

int cmd_generate(const GenerateOpts& o) {
    if (o.count < 1)
        throw CLI::ValidationError("--n", "count must be positive");
    std::string out = o.common.out_dir.empty() ? "." : o.common.out_dir;
    fs::create_directories(out);

    json manifest;
    manifest["command"] = "generate";
    manifest["kind"] = o.kind;
    manifest["count"] = o.count;
    manifest["steps"] = o.steps;
    manifest["T"] = o.T;
    manifest["base_seed"] = o.seed;
    manifest["files"] = json::array();

    std::vector<paths::SampledPath> generated(
        static_cast<std::size_t>(o.count));
    parallel_for(generated.size(), o.common.threads, [&](std::size_t i) {
        std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
        if (o.kind == "brownian")
            generated[i] = paths::generate_brownian(o.steps, o.T, o.scale, seed);
        else if (o.kind == "fbm")
            generated[i] = paths::generate_fbm(o.steps, o.T, o.hurst, seed);
        else
            generated[i] = paths::generate_deterministic(
                paths::deterministic_kind_from_string(o.kind), o.det, o.steps,
                o.T);
    });

    char name[64];
    for (std::size_t i = 0; i < generated.size(); ++i) {
        std::snprintf(name, sizeof(name), "%s_%04zu", o.kind.c_str(), i);
        fs::path file = fs::path(out) / (std::string(name) + ".json");
        io::write_path_json(generated[i], file.string());
        if (o.csv) {
            std::ofstream cs(fs::path(out) / (std::string(name) + ".csv"));
            io::write_path_csv(generated[i], cs);
        }
        json entry;
        entry["file"] = file.filename().string();
        entry["seed"] = generated[i].seed;
        entry["params"] = generated[i].params;
        manifest["files"].push_back(entry);
    }
    std::ofstream(fs::path(out) / "manifest.json") << manifest.dump(2) << "\n";
    if (o.common.as_json)
        std::cout << manifest.dump(2) << "\n";
    else
        std::cout << "wrote " << generated.size() << " paths to " << out
                  << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// varp

struct VarpOpts {
    CommonOpts common;
    double p = std::numeric_limits<double>::quiet_NaN();
    double t = std::numeric_limits<double>::quiet_NaN();
};

int cmd_varp(const VarpOpts& o) {
    if (std::isnan(o.p))
        throw CLI::ValidationError("--p", "a variation order is required");
    auto corpus = load_corpus(o.common.in_dir);
    json rows = json::array();
    std::vector<json> out(corpus.members.size());
    parallel_for(corpus.members.size(), o.common.threads, [&](std::size_t i) {
        const auto& w = corpus.members[i];
        json row;
        row["path"] = corpus.ids[i];
        if (std::isnan(o.t)) {
            auto rep = analysis::var_p(w, o.p);
            row.update(io::variation_to_json(rep));
        } else {
            row["p"] = o.p;
            row["t"] = o.t;
            row["value"] = analysis::var_p_prefix(w, o.p, o.t);
            row["infinite"] = false;
        }
        out[i] = std::move(row);
    });
    std::ostringstream csv;
    csv << "path,p,value,infinite\n";
    for (auto& row : out) {
        csv << row["path"].get<std::string>() << "," << fmt(o.p) << ","
            << (row["infinite"].get<bool>() ? "inf"
                                            : fmt(row["value"].get<double>()))
            << "," << (row["infinite"].get<bool>() ? 1 : 0) << "\n";
        rows.push_back(std::move(row));
    }
    emit_report(rows, csv.str(), o.common.as_json, o.common.out_dir, "varp");
    return corpus.had_errors ? 1 : 0;
}

// ---------------------------------------------------------------------------
// vex

struct VexOpts {
    CommonOpts common;
    int levels = 10;
};

int cmd_vex(const VexOpts& o) {
    auto corpus = load_corpus(o.common.in_dir);
    auto grid = analysis::default_p_grid();
    std::vector<double> est(corpus.members.size());
    parallel_for(corpus.members.size(), o.common.threads, [&](std::size_t i) {
        est[i] = analysis::vex_estimate(corpus.members[i], grid, o.levels);
    });
    json rows = json::array();
    std::ostringstream csv;
    csv << "path,vex\n";
    for (std::size_t i = 0; i < est.size(); ++i) {
        csv << corpus.ids[i] << "," << fmt(est[i]) << "\n";
        rows.push_back({{"path", corpus.ids[i]}, {"vex", est[i]}});
    }
    emit_report(rows, csv.str(), o.common.as_json, o.common.out_dir, "vex");
    return corpus.had_errors ? 1 : 0;
}

// ---------------------------------------------------------------------------
// upcross

struct UpcrossOpts {
    CommonOpts common;
    double a = std::numeric_limits<double>::quiet_NaN();
    double b = std::numeric_limits<double>::quiet_NaN();
    double delta = std::numeric_limits<double>::quiet_NaN();
    double t = std::numeric_limits<double>::quiet_NaN();
    bool strict = false;
};

int cmd_upcross(const UpcrossOpts& o) {
    bool interval = !std::isnan(o.a) || !std::isnan(o.b);
    bool grid = !std::isnan(o.delta);
    if (interval == grid)
        throw CLI::ValidationError(
            "upcross", "give either --a/--b (interval) or --delta (grid sum)");
    if (interval && (std::isnan(o.a) || std::isnan(o.b)))
        throw CLI::ValidationError("upcross", "--a and --b are both required");
    auto conv = o.strict ? analysis::TouchConvention::strict
                         : analysis::TouchConvention::closed;

    auto corpus = load_corpus(o.common.in_dir);
    std::vector<long long> counts(corpus.members.size());
    parallel_for(corpus.members.size(), o.common.threads, [&](std::size_t i) {
        const auto& w = corpus.members[i];
        double t = or_default(o.t, w.horizon());
        counts[i] = interval
                        ? analysis::count_upcrossings(w, o.a, o.b, t, conv)
                        : analysis::grid_upcrossing_sum(w, o.delta, t, conv);
    });
    json rows = json::array();
    std::ostringstream csv;
    csv << "path,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        csv << corpus.ids[i] << "," << counts[i] << "\n";
        rows.push_back({{"path", corpus.ids[i]}, {"count", counts[i]}});
    }
    emit_report(rows, csv.str(), o.common.as_json, o.common.out_dir,
                "upcross");
    return corpus.had_errors ? 1 : 0;
}

// ---------------------------------------------------------------------------
// bruneau

struct BruneauOpts {
    CommonOpts common;
    double q = 2.0;
    double p = std::numeric_limits<double>::quiet_NaN();  // bound check when set
    double lambda = std::numeric_limits<double>::quiet_NaN();
    double t = std::numeric_limits<double>::quiet_NaN();
    int k_max = 0;  // 0: per-path default
};

int cmd_bruneau(const BruneauOpts& o) {
    bool check = !std::isnan(o.p);
    if (check && o.q >= o.p)
        throw CLI::ValidationError("--p",
                                   "the bound check needs q < p");
    auto corpus = load_corpus(o.common.in_dir);
    std::vector<json> out(corpus.members.size());
    std::vector<analysis::BruneauReport> reports(corpus.members.size());
    parallel_for(corpus.members.size(), o.common.threads, [&](std::size_t i) {
        const auto& w = corpus.members[i];
        double t = or_default(o.t, w.horizon());
        double lambda = or_default(o.lambda, paths::sup_abs_deviation(w, t));
        json row;
        row["path"] = corpus.ids[i];
        if (lambda <= 0.0) {  // constant path: nothing to measure
            row["constant"] = 0.0;
            if (check) {
                row["lhs"] = 0.0;
                row["rhs"] = 0.0;
                row["holds"] = true;
            }
            out[i] = std::move(row);
            return;
        }
        int k_max = o.k_max > 0 ? o.k_max : analysis::default_k_max(w, lambda);
        if (check) {
            auto chk = analysis::bruneau_bound_check(w, o.p, o.q, t, k_max);
            reports[i] = chk.levels;
            row["lhs"] = chk.lhs;
            row["rhs"] = chk.rhs;
            row["holds"] = chk.holds;
            row["constant"] = chk.levels.constant;
            row["lambda"] = chk.lambda;
        } else {
            reports[i] = analysis::bruneau_constant(w, o.q, lambda, t, k_max);
            row.update(io::bruneau_to_json(reports[i]));
        }
        out[i] = std::move(row);
    });
    json rows = json::array();
    std::ostringstream csv;
    csv << (check ? "path,lhs,rhs,holds\n" : "path,constant,k_max,saturated\n");
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto& row = out[i];
        if (check)
            csv << corpus.ids[i] << "," << fmt(row["lhs"].get<double>()) << ","
                << fmt(row["rhs"].get<double>()) << ","
                << (row["holds"].get<bool>() ? 1 : 0) << "\n";
        else
            csv << corpus.ids[i] << "," << fmt(row["constant"].get<double>())
                << "," << (row.contains("k_max") ? row["k_max"].get<int>() : 0)
                << ","
                << (row.contains("saturated") && row["saturated"].get<bool>()
                        ? 1
                        : 0)
                << "\n";
        rows.push_back(std::move(row));
    }
    emit_report(rows, csv.str(), o.common.as_json, o.common.out_dir,
                "bruneau");
    if (!o.common.out_dir.empty()) {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (reports[i].per_level.empty()) continue;
            std::ofstream cs(fs::path(o.common.out_dir) /
                             (corpus.ids[i] + "_levels.csv"));
            io::write_bruneau_csv(reports[i], cs);
        }
    }
    return corpus.had_errors ? 1 : 0;
}

// ---------------------------------------------------------------------------
// simulate-a / simulate-b

struct SimAOpts {
    CommonOpts common;
    double delta = 0.01;
    double p = 1.5;
    double C = 1.0;
    double A = 1.0;
};

int cmd_simulate_a(const SimAOpts& o) {
    auto corpus = load_corpus(o.common.in_dir);
    std::vector<json> out(corpus.members.size());
    std::vector<game::CapitalTrajectory> trajs(corpus.members.size());
    parallel_for(corpus.members.size(), o.common.threads, [&](std::size_t i) {
        auto w = paths::normalized(corpus.members[i]);
        auto res = game::strategy_a(w, o.delta, o.p, o.C, o.A);
        trajs[i] =
            game::run_elementary(w, res.strategy, res.initial_capital);
        json row;
        row["path"] = corpus.ids[i];
        row["initial_capital"] = res.initial_capital;
        row["uncorrected_initial_capital"] = res.uncorrected_initial_capital;
        row["hit_time"] =
            res.hit_time ? json(*res.hit_time) : json(nullptr);
        row["active_trades"] = res.active_trades;
        row["terminal_capital"] = trajs[i].terminal_capital;
        row["min_capital"] = trajs[i].min_capital;
        out[i] = std::move(row);
    });
    json rows = json::array();
    std::ostringstream csv;
    csv << "path,S0,terminal,min,trades\n";
    for (std::size_t i = 0; i < out.size(); ++i) {
        csv << corpus.ids[i] << ","
            << fmt(out[i]["initial_capital"].get<double>()) << ","
            << fmt(out[i]["terminal_capital"].get<double>()) << ","
            << fmt(out[i]["min_capital"].get<double>()) << ","
            << out[i]["active_trades"].get<long long>() << "\n";
        rows.push_back(std::move(out[i]));
    }
    emit_report(rows, csv.str(), o.common.as_json, o.common.out_dir,
                "simulate_a");
    if (!o.common.out_dir.empty())
        for (std::size_t i = 0; i < trajs.size(); ++i)
            std::ofstream(fs::path(o.common.out_dir) /
                          (corpus.ids[i] + "_trajectory.json"))
                << io::trajectory_to_json(trajs[i]).dump(2) << "\n";
    return corpus.had_errors ? 1 : 0;
}

struct SimBOpts {
    CommonOpts common;
    double q = 3.0;
    double A = 1.0;
    int k_levels = 6;
};

int cmd_simulate_b(const SimBOpts& o) {
    auto corpus = load_corpus(o.common.in_dir);
    std::vector<json> out(corpus.members.size());
    std::vector<json> full(corpus.members.size());
    parallel_for(corpus.members.size(), o.common.threads, [&](std::size_t i) {
        auto w = paths::normalized(corpus.members[i]);
        auto res = game::strategy_b(w, o.q, o.A, o.k_levels);
        json row;
        row["path"] = corpus.ids[i];
        row["initial_capital"] = res.ensemble.initial_capital;
        row["stop_time"] = res.stop_time;
        row["terminal_capital"] = res.terminal_capital;
        row["min_capital"] = res.min_capital;
        row["truncated_bruneau"] = res.truncated_bruneau;
        out[i] = std::move(row);
        full[i] = io::strategy_b_to_json(res);
    });
    json rows = json::array();
    std::ostringstream csv;
    csv << "path,S0,terminal,min,payoff,stop_time\n";
    for (std::size_t i = 0; i < out.size(); ++i) {
        csv << corpus.ids[i] << ","
            << fmt(out[i]["initial_capital"].get<double>()) << ","
            << fmt(out[i]["terminal_capital"].get<double>()) << ","
            << fmt(out[i]["min_capital"].get<double>()) << ","
            << fmt(out[i]["truncated_bruneau"].get<double>()) << ","
            << fmt(out[i]["stop_time"].get<double>()) << "\n";
        rows.push_back(std::move(out[i]));
    }
    emit_report(rows, csv.str(), o.common.as_json, o.common.out_dir,
                "simulate_b");
    if (!o.common.out_dir.empty())
        for (std::size_t i = 0; i < full.size(); ++i)
            std::ofstream(fs::path(o.common.out_dir) /
                          (corpus.ids[i] + "_ensemble.json"))
                << full[i].dump(2) << "\n";
    return corpus.had_errors ? 1 : 0;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyOpts {
    CommonOpts common;
    std::string event = "var-below";
    std::string strategy = "a";
    double p = 2.0;
    double C = 1.0;
    double A = 1.0;
    double V = 1.0;
    double delta = 0.01;
    double q = 3.0;
    int k_levels = 6;
};

int cmd_certify(const CertifyOpts& o) {
    game::EventSpec event;
    if (o.event == "var-below")
        event = game::EventVarBelow{o.p, o.C, o.A};
    else if (o.event == "var-large")
        event = game::EventVarLarge{o.p, o.A, o.V};
    else
        throw CLI::ValidationError("--event",
                                   "expected var-below or var-large");
    game::StrategySpec builder;
    if (o.strategy == "a")
        builder = game::StrategyASpec{o.delta, o.p, o.C, o.A};
    else if (o.strategy == "b")
        builder = game::StrategyBSpec{o.q, o.A, o.k_levels};
    else
        throw CLI::ValidationError("--strategy", "expected a or b");

    auto corpus = load_corpus(o.common.in_dir);
    auto rep = game::superhedge_certificate(corpus.members, corpus.ids, event,
                                            builder);
    json rows = io::certificate_to_json(rep);
    std::ostringstream csv;
    io::write_certificate_csv(rep, csv);
    emit_report(rows, csv.str(), o.common.as_json, o.common.out_dir,
                "certificate");

    if (!o.common.as_json) {
        double min_terminal = std::numeric_limits<double>::infinity();
        for (const auto& pr : rep.per_path)
            if (pr.in_event) min_terminal = std::min(min_terminal,
                                                     pr.terminal_capital);
        std::cout << "S_0 = " << rep.initial_capital;
        if (std::isfinite(min_terminal))
            std::cout << ", min in-event terminal = " << min_terminal;
        if (rep.certified_bound)
            std::cout << ", certified bound = " << *rep.certified_bound;
        std::cout << "\n";
    }
    if (!rep.positivity_ok) {
        std::cerr << "positivity refused on path " << rep.offending_path
                  << "\n";
        return 1;
    }
    return corpus.had_errors ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path-variation and trading-strategy experiment runner"};
    app.require_subcommand(1);

    GenerateOpts gen;
    SubCtx gen_ctx{app.add_subcommand("generate", "write a seeded corpus")};
    gen_ctx.add_config_option();
    gen_ctx.bind("--kind", gen.kind,
                 "brownian|fbm|constant|linear|sine|sawtooth|weierstrass");
    gen_ctx.bind("--n", gen.count, "number of paths");
    gen_ctx.bind("--steps", gen.steps, "samples per path minus one");
    gen_ctx.bind("--T", gen.T, "time horizon");
    gen_ctx.bind("--seed", gen.seed, "base seed; path i uses seed + i");
    gen_ctx.bind("--scale", gen.scale, "diffusion scale (brownian)");
    gen_ctx.bind("--hurst", gen.hurst, "Hurst index in (0, 1) (fbm)");
    gen_ctx.bind("--level", gen.det.level, "constant level");
    gen_ctx.bind("--slope", gen.det.slope, "linear slope");
    gen_ctx.bind("--amplitude", gen.det.amplitude, "oscillation amplitude");
    gen_ctx.bind("--cycles", gen.det.cycles, "periods / teeth over [0, T]");
    gen_ctx.bind("--decay", gen.det.decay, "weierstrass amplitude ratio");
    gen_ctx.bind("--lacunarity", gen.det.lacunarity,
                 "weierstrass frequency ratio");
    gen_ctx.bind("--terms", gen.det.terms, "weierstrass series terms");
    gen_ctx.bind_flag("--csv", gen.csv, "also write t,x CSV per path");
    gen_ctx.bind("--out", gen.common.out_dir, "output directory");
    gen_ctx.bind_flag("--json", gen.common.as_json, "print the manifest");
    gen_ctx.bind("--threads", gen.common.threads, "worker threads")
        ->check(CLI::PositiveNumber);

    VarpOpts varp;
    SubCtx varp_ctx{app.add_subcommand("varp", "strong p-variation per path")};
    add_common(varp_ctx, varp.common);
    varp_ctx.bind("--p", varp.p, "variation order");
    varp_ctx.bind("--t", varp.t, "restrict to [0, t] (default: horizon)");

    VexOpts vex;
    SubCtx vex_ctx{
        app.add_subcommand("vex", "variation-exponent estimate per path")};
    add_common(vex_ctx, vex.common);
    vex_ctx.bind("--levels", vex.levels, "dyadic refinement levels")
        ->check(CLI::PositiveNumber);

    UpcrossOpts up;
    SubCtx up_ctx{app.add_subcommand("upcross", "upcrossing counts per path")};
    add_common(up_ctx, up.common);
    up_ctx.bind("--a", up.a, "interval lower endpoint");
    up_ctx.bind("--b", up.b, "interval upper endpoint");
    up_ctx.bind("--delta", up.delta, "grid step for the grid upcrossing sum");
    up_ctx.bind("--t", up.t, "count on [0, t] (default: horizon)");
    up_ctx.bind_flag("--strict", up.strict,
                     "strict touch convention (default: closed)");

    BruneauOpts bru;
    SubCtx bru_ctx{app.add_subcommand(
        "bruneau", "truncated oscillation constant / variation bound")};
    add_common(bru_ctx, bru.common);
    bru_ctx.bind("--q", bru.q, "level weight exponent (q >= 1)");
    bru_ctx.bind("--p", bru.p,
                 "also check the p-variation bound (needs q < p)");
    bru_ctx.bind("--lambda", bru.lambda,
                 "oscillation scale (default: sup |path - path(0)|)");
    bru_ctx.bind("--t", bru.t, "horizon restriction");
    bru_ctx.bind("--k-max", bru.k_max,
                 "truncation depth (default: per-path resolution)");

    SimAOpts sa;
    SubCtx sa_ctx{
        app.add_subcommand("simulate-a", "grid-momentum strategy per path")};
    add_common(sa_ctx, sa.common);
    sa_ctx.bind("--delta", sa.delta, "grid step");
    sa_ctx.bind("--p", sa.p, "variation order in (0, 2)");
    sa_ctx.bind("--C", sa.C, "variation budget");
    sa_ctx.bind("--A", sa.A, "stopping band half-width");

    SimBOpts sb;
    SubCtx sb_ctx{app.add_subcommand("simulate-b",
                                     "upcrossing ensemble per path")};
    add_common(sb_ctx, sb.common);
    sb_ctx.bind("--q", sb.q, "level weight exponent (q > 2)");
    sb_ctx.bind("--A", sb.A, "band half-width");
    sb_ctx.bind("--k-levels", sb.k_levels, "levels kept in the truncation")
        ->check(CLI::PositiveNumber);

    CertifyOpts ce;
    SubCtx ce_ctx{app.add_subcommand(
        "certify", "superhedging certificate over a corpus")};
    add_common(ce_ctx, ce.common);
    ce_ctx.bind("--event", ce.event, "var-below | var-large");
    ce_ctx.bind("--strategy", ce.strategy, "a | b");
    ce_ctx.bind("--p", ce.p, "variation order of the event");
    ce_ctx.bind("--C", ce.C, "variation budget (var-below)");
    ce_ctx.bind("--A", ce.A, "band half-width");
    ce_ctx.bind("--V", ce.V, "variation threshold (var-large)");
    ce_ctx.bind("--delta", ce.delta, "grid step (strategy a)");
    ce_ctx.bind("--q", ce.q, "level weight exponent (strategy b)");
    ce_ctx.bind("--k-levels", ce.k_levels, "levels kept (strategy b)");

    try {
        app.parse(argc, argv);
        for (SubCtx* ctx : {&gen_ctx, &varp_ctx, &vex_ctx, &up_ctx, &bru_ctx,
                            &sa_ctx, &sb_ctx, &ce_ctx})
            if (ctx->sub->parsed()) ctx->merge_config();

        if (gen_ctx.sub->parsed()) return cmd_generate(gen);
        if (varp_ctx.sub->parsed()) return cmd_varp(varp);
        if (vex_ctx.sub->parsed()) return cmd_vex(vex);
        if (up_ctx.sub->parsed()) return cmd_upcross(up);
        if (bru_ctx.sub->parsed()) return cmd_bruneau(bru);
        if (sa_ctx.sub->parsed()) return cmd_simulate_a(sa);
        if (sb_ctx.sub->parsed()) return cmd_simulate_b(sb);
        if (ce_ctx.sub->parsed()) return cmd_certify(ce);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
