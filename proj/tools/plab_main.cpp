// plab: command line laboratory for permutation processes, permutons and
// their transport geometry. Every experiment takes an explicit seed and
// writes its reports (JSON) and data tables (CSV by default) into --out,
// together with a manifest echoing the configuration.
//
// Exit codes: 0 success, 1 numeric/assertion failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plab/energy.hpp"
#include "plab/io.hpp"
#include "plab/lab.hpp"
#include "plab/limits.hpp"
#include "plab/measures.hpp"
#include "plab/networks.hpp"
#include "plab/process.hpp"
#include "plab/rng.hpp"
#include "plab/stats.hpp"
#include "plab/transport.hpp"
#include "plab/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace plab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Global {
    std::uint64_t seed = 0;
    std::string out = ".";
    std::string format = "csv";
    int jobs = 1;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << content;
}

// Data tables honour --format: CSV (the documented layouts) or a JSON
// rendering of the same content.
void write_table(const Global& g, const std::string& stem, const std::string& csv,
                 const json& as_json, std::vector<std::string>& outputs) {
    if (g.format == "json") {
        write_file(fs::path(g.out) / (stem + ".json"), as_json.dump(2) + "\n");
        outputs.push_back(stem + ".json");
    } else {
        write_file(fs::path(g.out) / (stem + ".csv"), csv);
        outputs.push_back(stem + ".csv");
    }
}

json trajectory_json(const TrajectoryEnsemble& e) {
    json j;
    j["times"] = std::vector<double>(e.grid().times().begin(), e.grid().times().end());
    json paths = json::array();
    for (int i = 0; i < e.path_count(); ++i)
        paths.push_back(std::vector<double>(e.path(i).begin(), e.path(i).end()));
    j["paths"] = std::move(paths);
    return j;
}

json permuton_json(const DiscretePermuton& p) {
    json j;
    j["x"] = std::vector<double>(p.xs().begin(), p.xs().end());
    j["y"] = std::vector<double>(p.ys().begin(), p.ys().end());
    return j;
}

json planar_json(const PlanarEnsemble& e) {
    json j;
    j["times"] = std::vector<double>(e.grid().times().begin(), e.grid().times().end());
    json paths = json::array();
    for (int i = 0; i < e.path_count(); ++i) {
        json p;
        p["x"] = std::vector<double>(e.path_x(i).begin(), e.path_x(i).end());
        p["y"] = std::vector<double>(e.path_y(i).begin(), e.path_y(i).end());
        paths.push_back(std::move(p));
    }
    j["paths"] = std::move(paths);
    return j;
}

// Each report file embeds the configuration, seed and tolerances used.
void write_report(const Global& g, const std::string& stem, json report, const json& config,
                  const json& tolerances, std::vector<std::string>& outputs) {
    report["config"] = config;
    report["tolerances"] = tolerances;
    if (!report.contains("seed")) report["seed"] = g.seed;
    write_file(fs::path(g.out) / (stem + ".json"), report.dump(2) + "\n");
    outputs.push_back(stem + ".json");
}

void write_manifest(const Global& g, const std::string& experiment, const json& config,
                    const std::vector<std::string>& outputs) {
    json m;
    m["experiment"] = experiment;
    m["seed"] = g.seed;
    m["version"] = PLAB_VERSION;
    m["eg_reading"] = "reverse-bump, insertion order"; // run metadata for the sampler convention
    m["config"] = config;
    m["outputs"] = outputs;
    const std::string text = m.dump(2) + "\n";
    write_file(fs::path(g.out) / (experiment + "_manifest.json"), text);
    std::cout << text;
}

// Deterministic fan-out: replica r uses mix_seed(seed, r); results aggregate
// in replica order whatever the worker count.
template <typename T, typename Fn>
std::vector<T> run_replicas(int count, int jobs, Fn&& fn) {
    std::vector<T> results(static_cast<std::size_t>(count));
    if (jobs <= 1) {
        for (int r = 0; r < count; ++r) results[static_cast<std::size_t>(r)] = fn(r);
        return results;
    }
    std::atomic<int> next{0};
    std::vector<std::future<void>> workers;
    const int w = std::min(jobs, count);
    for (int t = 0; t < w; ++t)
        workers.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                const int r = next.fetch_add(1);
                if (r >= count) return;
                results[static_cast<std::size_t>(r)] = fn(r);
            }
        }));
    for (auto& f : workers) f.get();
    return results;
}

json ks_json(const KsResult& k) {
    return json{{"statistic", k.statistic}, {"p_value", k.p_value}};
}

// Finite-n speed diagnostic: avg (X(t)-X(0))^2 / t^2 over the first few
// positive grid times, with the limiting sine-speed constant pi^2/3 as the
// reference. Interpretation is left to the reader; the double limit it
// shadows is not testable at finite n.
json speed_ratios(const ConjectureReport& curve) {
    json out = json::array();
    for (std::size_t j = 1; j < curve.t_values.size() && out.size() < 8; ++j) {
        const double t = curve.t_values[j];
        out.push_back(json{{"t", t}, {"ratio", curve.empirical[j] / (t * t)}});
    }
    return json{{"small_t", out}, {"limit_reference", kPi * kPi / 3.0}};
}

int cmd_rsn(const Global& g, int n, int samples) {
    const json config{{"n", n}, {"samples", samples}, {"seed", g.seed}, {"jobs", g.jobs}};
    std::vector<std::string> outputs;

    const auto words = run_replicas<SwapWord>(samples, g.jobs, [&](int r) {
        return sample_rsn(n, mix_seed(g.seed, static_cast<std::uint64_t>(r)));
    });
    int invalid = 0;
    for (const auto& w : words)
        if (!is_sorting_network(w)) ++invalid;

    std::vector<ConjectureReport> curves(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        curves[i] = second_moment_curve(trajectories(process_from_word(words[i])));
    const auto curve = average_curves(curves);

    const auto first = trajectories(process_from_word(words.front()));
    std::ostringstream csv;
    write_trajectory_csv(csv, first);
    write_table(g, "rsn_trajectories", csv.str(), trajectory_json(first), outputs);

    std::ostringstream hist_csv;
    const auto hist = swap_histogram(words.front(), 0.0, 1.0);
    write_histogram_csv(hist_csv, hist);
    json hist_json;
    hist_json["count"] = hist;
    write_table(g, "rsn_swap_histogram", hist_csv.str(), hist_json, outputs);

    json rep;
    rep["n"] = n;
    rep["samples"] = samples;
    rep["invalid_words"] = invalid;
    rep["t_values"] = curve.t_values;
    rep["empirical"] = curve.empirical;
    rep["target"] = curve.target;
    rep["sup_gap"] = curve.sup_gap;
    rep["speed"] = speed_ratios(curve);
    write_report(g, "rsn_second_moment", rep, config, json{{"sup_gap_soft", 0.1}}, outputs);
    write_manifest(g, "rsn", config, outputs);
    if (invalid > 0) {
        std::cerr << json{{"error", "sampled word failed is_sorting_network"},
                          {"invalid", invalid}}.dump() << "\n";
        return 1;
    }
    return 0;
}

int cmd_interchange(const Global& g, int n, int steps, bool cycle) {
    const char* name = cycle ? "cycle" : "interchange";
    const json config{{"n", n}, {"steps", steps}, {"seed", g.seed}};
    std::vector<std::string> outputs;
    const auto proc = cycle ? sample_cycle_rotation(n, steps, g.seed)
                            : sample_interchange(n, steps, g.seed);
    // Interchange snapshots must differ by one adjacent swap, cycle snapshots
    // by a one-unit rotation.
    bool chain_ok = true;
    for (int t = 1; t <= proc.t_max() && chain_ok; ++t) {
        if (cycle) {
            const auto& prev = proc.snapshot(t - 1);
            const auto& cur = proc.snapshot(t);
            bool plus = true, minus = true;
            for (int i = 1; i <= n; ++i) {
                const int fwd = prev(i % n + 1);
                const int bwd = prev((i + n - 2) % n + 1);
                if (cur(i) != fwd) plus = false;
                if (cur(i) != bwd) minus = false;
            }
            if (!plus && !minus) chain_ok = false;
        } else {
            int diffs = 0;
            for (int i = 1; i <= n; ++i)
                if (proc.snapshot(t)(i) != proc.snapshot(t - 1)(i)) ++diffs;
            if (diffs != 2) chain_ok = false;
        }
    }
    // Long histories are resampled onto a 1000-interval grid for output;
    // the report records which grid was written.
    const auto traj = trajectories(proc);
    const bool resampled = proc.t_max() > 2000;
    const auto table = resampled ? linearize(traj, 1000) : traj;
    std::ostringstream csv;
    write_trajectory_csv(csv, table);
    write_table(g, std::string(name) + "_trajectories", csv.str(), trajectory_json(table), outputs);

    json rep;
    rep["n"] = n;
    rep["steps"] = steps;
    rep["adjacent_chain_ok"] = chain_ok;
    rep["trajectories_grid"] = table.grid().intervals();
    rep["final_inversions"] = inversions(proc.snapshot(proc.t_max()));
    rep["marginal_ks_end"] = ks_json(marginal_uniformity(traj, 1.0));
    write_report(g, std::string(name) + "_report", rep, config, json::object(), outputs);
    write_manifest(g, name, config, outputs);
    return chain_ok ? 0 : 1;
}

int cmd_archimedean(const Global& g, int m, int grid) {
    const json config{{"m", m}, {"grid", grid}, {"seed", g.seed}};
    std::vector<std::string> outputs;
    const auto pi = Partition::uniform(grid);
    const auto e = archimedean_process(m, pi, g.seed);

    std::ostringstream csv;
    write_trajectory_csv(csv, e);
    write_table(g, "archimedean_trajectories", csv.str(), trajectory_json(e), outputs);

    const auto curve = second_moment_curve(e);
    json rep;
    rep["m"] = m;
    rep["t_values"] = curve.t_values;
    rep["empirical"] = curve.empirical;
    rep["target"] = curve.target;
    rep["sup_gap"] = curve.sup_gap;
    rep["speed"] = speed_ratios(curve);
    rep["marginal_ks"] = {
        {"t0", ks_json(marginal_uniformity(e, 0.0))},
        {"t_half", ks_json(marginal_uniformity(e, 0.5))},
        {"t1", ks_json(marginal_uniformity(e, 1.0))},
    };
    write_report(g, "archimedean_second_moment", rep, config, json::object(), outputs);

    const auto er = ensemble_energy(e, pi);
    json ej = json::parse(energy_report_to_json(er));
    ej["exact_moment_total"] = archimedean_process_energy_exact(pi);
    ej["limit"] = kPi * kPi / 3.0;
    write_report(g, "archimedean_energy", ej, config, json::object(), outputs);
    write_manifest(g, "archimedean", config, outputs);
    return 0;
}

int cmd_discretize(const Global& g, int n, int runs) {
    const json config{{"n", n}, {"runs", runs}, {"seed", g.seed}, {"jobs", g.jobs}};
    std::vector<std::string> outputs;
    const auto reports = run_replicas<DeviationReport>(runs, g.jobs, [&](int r) {
        const std::uint64_t s = mix_seed(g.seed, static_cast<std::uint64_t>(r));
        const auto src = archimedean_process(n, Partition::uniform(n), s);
        const auto d = discretize(src, s);
        auto rep = deviation_report(d, src);
        rep.seed = s;
        return rep;
    });
    int holds = 0;
    json arr = json::array();
    for (const auto& r : reports) {
        arr.push_back(json::parse(deviation_report_to_json(r)));
        if (r.hold) ++holds;
    }
    json rep;
    rep["n"] = n;
    rep["runs"] = runs;
    rep["holds"] = holds;
    rep["reports"] = arr;
    write_report(g, "discretize_deviation", rep, config,
                 json{{"hold_threshold", 4.0 * std::pow(n, -0.25)}}, outputs);
    write_manifest(g, "discretize", config, outputs);
    return holds == runs ? 0 : 1;
}

Permutation named_permutation(const std::string& name, int n, std::uint64_t seed) {
    if (name == "id" || name == "identity") return Permutation::identity(n);
    if (name == "rev" || name == "reverse") return Permutation::reverse(n);
    if (name == "random") {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        std::mt19937_64 gen(seed);
        std::shuffle(w.begin(), w.end(), gen);
        return Permutation::from_one_line(std::move(w));
    }
    throw CLI::ValidationError("--a/--b must be one of id, rev, random");
}

int cmd_w2(const Global& g, const std::string& method, const std::string& a,
           const std::string& b, int n, double s, double t) {
    const json config{{"method", method}, {"a", a}, {"b", b}, {"n", n}, {"s", s}, {"t", t},
                      {"seed", g.seed}};
    std::vector<std::string> outputs;
    DistanceReport rep;
    rep.method = method;
    if (method == "assignment") {
        rep.n_or_m = n;
        rep.seed = g.seed;
        rep.value = w2sq_permutations(named_permutation(a, n, mix_seed(g.seed, 1)),
                                      named_permutation(b, n, mix_seed(g.seed, 2)));
    } else if (method == "maxsum") {
        rep.n_or_m = n;
        rep.seed = g.seed;
        rep.value = w2sq_identity_maxsum(named_permutation(b, n, mix_seed(g.seed, 2)));
    } else if (method == "formula") {
        rep.n_or_m = 0;
        const double d = closed_form_arch_dist(s, t);
        rep.value = d * d;
    } else {
        throw CLI::ValidationError("--method must be assignment, maxsum or formula");
    }
    write_report(g, "w2_distance", json::parse(distance_report_to_json(rep)), config,
                 json::object(), outputs);
    write_manifest(g, "w2", config, outputs);
    return 0;
}

int cmd_energy(const Global& g, const std::string& kind, int m, int grid) {
    const json config{{"kind", kind}, {"m", m}, {"grid", grid}, {"seed", g.seed}};
    std::vector<std::string> outputs;
    const auto pi = Partition::uniform(grid);
    TrajectoryEnsemble e = [&] {
        if (kind == "archimedean") return archimedean_process(m, pi, g.seed);
        if (kind == "rsn") return trajectories(process_from_word(sample_rsn(m, g.seed)));
        if (kind == "interchange") return trajectories(sample_interchange(m, m * m, g.seed));
        throw CLI::ValidationError("--kind must be archimedean, rsn or interchange");
    }();
    const auto er = ensemble_energy(e, pi);
    const auto sb = sigma_energy_bound(e, pi);
    json rep = json::parse(energy_report_to_json(er));
    rep["sigma_energy"] = sb.sigma_energy;
    rep["centered_energy"] = sb.energy;
    if (kind == "archimedean") {
        rep["exact_moment_total"] = archimedean_process_energy_exact(pi);
        rep["limit"] = kPi * kPi / 3.0;
    }
    write_report(g, "energy_" + kind, rep, config, json::object(), outputs);
    write_manifest(g, "energy", config, outputs);
    return 0;
}

int cmd_sum_squares(const Global& g, const std::string& kind, int m) {
    const json config{{"kind", kind}, {"m", m}, {"seed", g.seed}};
    std::vector<std::string> outputs;
    const auto p = sample_permuton(parse_permuton_kind(kind), m, g.seed);
    std::ostringstream csv;
    write_permuton_csv(csv, p);
    write_table(g, "sum_squares_points", csv.str(), permuton_json(p), outputs);
    json rep;
    rep["kind"] = kind;
    rep["m"] = m;
    rep["sum_distance_squared"] = sum_distance_squared(p);
    rep["identity_distance_sq"] = identity_distance_sq(p);
    rep["archimedean_optimum"] = (8.0 - 4.0 * std::sqrt(2.0)) / 3.0;
    write_report(g, "sum_squares", rep, config, json::object(), outputs);
    write_manifest(g, "sum-squares", config, outputs);
    return 0;
}

int cmd_enumerate(const Global& g, int n) {
    const json config{{"n", n}, {"seed", g.seed}};
    std::vector<std::string> outputs;
    const auto words = enumerate_networks(n);
    json arr = json::array();
    for (const auto& w : words) arr.push_back(json::parse(swap_word_to_json(w)));
    write_file(fs::path(g.out) / "networks.json", arr.dump(2) + "\n");
    outputs.push_back("networks.json");

    const BigInt expect = stanley_count(n);
    json rep;
    rep["n"] = n;
    rep["count"] = words.size();
    rep["stanley_count"] = expect.str();
    const bool ok = BigInt(words.size()) == expect;
    rep["count_matches"] = ok;
    write_report(g, "enumerate_report", rep, config, json::object(), outputs);
    write_manifest(g, "enumerate", config, outputs);
    if (!ok) {
        std::cerr << json{{"error", "enumeration count does not match the product formula"}}.dump()
                  << "\n";
        return 1;
    }
    return 0;
}

int cmd_stretchable(const Global& g, const std::string& target, int m) {
    const json config{{"target", target}, {"m", m}, {"seed", g.seed}};
    std::vector<std::string> outputs;
    const auto cloud = sample_permuton(parse_permuton_kind(target), m, g.seed);
    try {
        const auto r = stretchable_network(cloud);
        write_file(fs::path(g.out) / "stretchable_word.json",
                   swap_word_to_json(r.word) + "\n");
        outputs.push_back("stretchable_word.json");
        json rep;
        rep["m"] = m;
        rep["swaps"] = r.word.positions.size();
        rep["tie_warnings"] = r.tie_warnings;
        rep["is_sorting_network"] = is_sorting_network(r.word);
        write_report(g, "stretchable_report", rep, config, json::object(), outputs);
        write_manifest(g, "stretchable", config, outputs);
        return rep["is_sorting_network"].get<bool>() ? 0 : 1;
    } catch (const NotANetworkError& e) {
        json rep;
        rep["error"] = e.what();
        rep["pair"] = {e.i, e.j};
        write_report(g, "stretchable_report", rep, config, json::object(), outputs);
        write_manifest(g, "stretchable", config, outputs);
        std::cerr << rep.dump() << "\n";
        return 1;
    }
}

int cmd_plank(const Global& g, const std::string& kind, int m) {
    const json config{{"kind", kind}, {"m", m}, {"seed", g.seed}};
    std::vector<std::string> outputs;
    const auto p = sample_permuton(parse_permuton_kind(kind), m, g.seed);
    const std::vector<double> slopes{-1.4, -1.1, -kPi / 4.0, -0.4, -0.1, 0.0};
    std::vector<double> widths{0.05, 0.1, 0.2};
    const double floor = 2.0 / std::sqrt(static_cast<double>(m));
    std::erase_if(widths, [&](double w) { return w < floor; });
    json rep;
    rep["kind"] = kind;
    rep["m"] = m;
    rep["slopes"] = slopes;
    rep["widths"] = widths;
    rep["max_ratio"] = plank_mass_ratio(p, slopes, widths);
    rep["uniform_projection_ratio"] = 0.5;
    write_report(g, "plank_report", rep, config, json::object(), outputs);
    write_manifest(g, "plank", config, outputs);
    return 0;
}

int cmd_realize(const Global& g, int m, int slices) {
    const json config{{"m", m}, {"slices", slices}, {"seed", g.seed}};
    std::vector<std::string> outputs;
    const auto grid = Partition::uniform(slices);
    std::vector<DiscretePermuton> ms;
    for (int j = 0; j <= slices; ++j)
        ms.push_back(archimedean_path_marginal(grid.times()[static_cast<std::size_t>(j)], m, g.seed));
    const auto path = realize_discrete_path(ms, grid);

    std::ostringstream csv;
    write_planar_csv(csv, path);
    write_table(g, "realize_paths", csv.str(), planar_json(path), outputs);

    const auto er = permuton_path_energy(ms, grid, [](const DiscretePermuton& a,
                                                      const DiscretePermuton& b) {
        return w2sq_pointsets(a, b);
    });
    json rep = json::parse(energy_report_to_json(er));
    rep["closed_form_total"] = archimedean_path_energy_closed_form(grid);
    rep["limit"] = kPi * kPi / 6.0;
    write_report(g, "realize_energy", rep, config, json::object(), outputs);
    write_manifest(g, "realize", config, outputs);
    return 0;
}

int cmd_report(const Global& g) {
    json combined = json::object();
    for (const auto& entry : fs::directory_iterator(g.out)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream is(entry.path());
        try {
            combined[entry.path().filename().string()] = json::parse(is);
        } catch (...) {
            combined[entry.path().filename().string()] = "unparseable";
        }
    }
    std::cout << combined.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plab: a numerical laboratory for permutation-valued processes"};
    app.set_version_flag("--version", PLAB_VERSION);
    app.set_config("--config", "", "Flat key=value config file; flags override it");
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    Global g;
    app.add_option("--seed", g.seed, "RNG seed (mandatory; no wall-clock default)")->required();
    app.add_option("--out", g.out, "Output directory")->capture_default_str();
    app.add_option("--format", g.format, "Data table format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker count for replicated experiments")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int n = 100, m = 10000, samples = 20, steps = 1000, grid = 100, runs = 1, slices = 5;
    std::string method = "assignment", pa = "id", pb = "rev", kind = "archimedean";
    double s = 0.0, t = 1.0;

    auto* rsn = app.add_subcommand("rsn", "Sample uniform random sorting networks");
    rsn->add_option("--n", n, "Permutation order")->check(CLI::Range(2, 2000));
    rsn->add_option("--samples", samples, "Number of sampled networks")->check(CLI::PositiveNumber);

    auto* inter = app.add_subcommand("interchange", "Run the discrete interchange process");
    inter->add_option("--n", n, "Permutation order")->check(CLI::Range(2, 100000));
    inter->add_option("--steps", steps, "Steps")->check(CLI::PositiveNumber);

    auto* cyc = app.add_subcommand("cycle", "Run the cycle-rotation process");
    cyc->add_option("--n", n, "Permutation order")->check(CLI::Range(2, 100000));
    cyc->add_option("--steps", steps, "Steps")->check(CLI::PositiveNumber);

    auto* arch = app.add_subcommand("archimedean", "Sample the Archimedean process");
    arch->add_option("--m", m, "Sample paths")->check(CLI::PositiveNumber);
    arch->add_option("--grid", grid, "Uniform grid intervals")->check(CLI::PositiveNumber);

    auto* disc = app.add_subcommand("discretize", "Rank-discretize Archimedean sources");
    disc->add_option("--n", n, "Paths and grid intervals")->check(CLI::Range(2, 100000));
    disc->add_option("--runs", runs, "Seeded repetitions")->check(CLI::PositiveNumber);

    auto* w2 = app.add_subcommand("w2", "Wasserstein-2 distances between permutation measures");
    w2->add_option("--method", method, "assignment | maxsum | formula");
    w2->add_option("--a", pa, "First permutation: id | rev | random");
    w2->add_option("--b", pb, "Second permutation: id | rev | random");
    w2->add_option("--n", n, "Permutation order")->check(CLI::Range(1, 3000));
    w2->add_option("--s", s, "Formula start time");
    w2->add_option("--t", t, "Formula end time");

    auto* en = app.add_subcommand("energy", "Dirichlet energy of trajectory ensembles");
    en->add_option("--kind", kind, "archimedean | rsn | interchange");
    en->add_option("--m", m, "Paths (archimedean) or order (rsn/interchange)")
        ->check(CLI::PositiveNumber);
    en->add_option("--grid", grid, "Partition intervals")->check(CLI::PositiveNumber);

    auto* ss = app.add_subcommand("sum-squares", "Sum of squared distances to id and rev");
    ss->add_option("--kind", kind, "identity | reverse | lebesgue | archimedean");
    ss->add_option("--m", m, "Sample size")->check(CLI::PositiveNumber);

    auto* enu = app.add_subcommand("enumerate", "Enumerate all sorting networks (n <= 5)");
    enu->add_option("--n", n, "Permutation order")->check(CLI::Range(2, 5));

    auto* str = app.add_subcommand("stretchable", "Stretchable sorting network of a sample cloud");
    str->add_option("--target", kind, "identity | reverse | lebesgue | archimedean");
    str->add_option("--m", m, "Sample size")->check(CLI::PositiveNumber);

    auto* plk = app.add_subcommand("plank", "Scanned plank mass/width ratios");
    plk->add_option("--kind", kind, "identity | reverse | lebesgue | archimedean");
    plk->add_option("--m", m, "Sample size")->check(CLI::PositiveNumber);

    auto* rea = app.add_subcommand("realize", "Optimal-coupling chain through path marginals");
    rea->add_option("--m", m, "Points per slice")->check(CLI::Range(1, 4000));
    rea->add_option("--slices", slices, "Grid intervals")->check(CLI::PositiveNumber);

    app.add_subcommand("report", "Combine all JSON reports under --out");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        fs::create_directories(g.out);
        if (rsn->parsed()) return cmd_rsn(g, n, samples);
        if (inter->parsed()) return cmd_interchange(g, n, steps, false);
        if (cyc->parsed()) return cmd_interchange(g, n, steps, true);
        if (arch->parsed()) return cmd_archimedean(g, m, grid);
        if (disc->parsed()) return cmd_discretize(g, n, runs);
        if (w2->parsed()) return cmd_w2(g, method, pa, pb, n, s, t);
        if (en->parsed()) return cmd_energy(g, kind, m, grid);
        if (ss->parsed()) return cmd_sum_squares(g, kind, m);
        if (enu->parsed()) return cmd_enumerate(g, n);
        if (str->parsed()) return cmd_stretchable(g, kind, m);
        if (plk->parsed()) return cmd_plank(g, kind, m);
        if (rea->parsed()) return cmd_realize(g, m, slices);
        return cmd_report(g);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
