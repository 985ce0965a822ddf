// Command-line front end: figure datasets, optimizer runs, interference
// sweeps, MAC simulation curves.  JSON config in, CSV + JSON manifest out.
// Exit codes: 0 ok, 2 config/usage, 3 infeasible, 4 numerical failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "radiolim/channel.hpp"
#include "radiolim/efficiency.hpp"
#include "radiolim/errors.hpp"
#include "radiolim/interference.hpp"
#include "radiolim/mac_bounds.hpp"
#include "radiolim/mac_sim.hpp"
#include "radiolim/optimize.hpp"
#include "radiolim/report.hpp"
#include "radiolim/signals.hpp"

using nlohmann::ordered_json;
using namespace radiolim;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    long long seed = -1;   // -1: keep config value
    long long trials = -1; // -1: keep config value
    int workers = 0;       // 0: library default
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON config file (merged over defaults)");
    cmd->add_option("--out", o.out_dir, "output directory (created if missing)");
    cmd->add_option("--seed", o.seed, "override the config seed");
    cmd->add_option("--trials", o.trials, "override the config trial count");
    cmd->add_option("--workers", o.workers, "worker thread cap (0 = default)");
}

// Recursive merge of `patch` over `base`; keys absent from the defaults are
// rejected so typos fail loudly instead of silently running the default.
void merge_config(ordered_json& base, const ordered_json& patch, const std::string& prefix) {
    for (const auto& [key, value] : patch.items()) {
        if (!base.contains(key)) throw config_error("unknown config key: " + prefix + key);
        if (base[key].is_object() && value.is_object())
            merge_config(base[key], value, prefix + key + ".");
        else
            base[key] = value;
    }
}

ordered_json resolve_config(ordered_json defaults, const CommonOpts& o) {
    if (!o.config_path.empty()) {
        ordered_json patch;
        try {
            patch = ordered_json::parse(read_text_file(o.config_path));
        } catch (const nlohmann::json::exception& e) {
            throw config_error(std::string("config parse: ") + e.what());
        }
        if (!patch.is_object()) throw config_error("config root must be a JSON object");
        merge_config(defaults, patch, "");
    }
    if (o.seed >= 0) {
        if (!defaults.contains("seed")) throw config_error("--seed does not apply here");
        defaults["seed"] = o.seed;
    }
    if (o.trials >= 0) {
        if (!defaults.contains("trials")) throw config_error("--trials does not apply here");
        defaults["trials"] = o.trials;
    }
    return defaults;
}

std::string out_path(const CommonOpts& o, const std::string& name) {
    std::filesystem::create_directories(o.out_dir);
    return (std::filesystem::path(o.out_dir) / name).string();
}

SerModel model_from_name(const std::string& name) {
    SerModel m;
    if (name == "orthogonal")
        m.kind = SerKind::OrthogonalCoherent;
    else if (name == "qam")
        m.kind = SerKind::SquareQam;
    else if (name == "union")
        m.kind = SerKind::UnionBoundOrthogonal;
    else
        throw config_error("unknown ser_model: " + name);
    return m;
}

GridAxis axis_from_json(const ordered_json& j) {
    GridAxis a;
    a.lo = j.at("lo").get<double>();
    a.hi = j.at("hi").get<double>();
    a.points = j.at("points").get<int>();
    a.log_spaced = j.at("log").get<bool>();
    a.fixed = j.at("fixed").get<bool>();
    return a;
}

ordered_json axis_defaults(double lo, double hi, int points, bool log_spaced, bool fixed) {
    return ordered_json{{"lo", lo}, {"hi", hi}, {"points", points}, {"log", log_spaced},
                        {"fixed", fixed}};
}

ErrorDistribution errors_from_json(const ordered_json& j) {
    ErrorDistribution d;
    d.amplitude_sd = j.at("amplitude_sd").get<double>();
    d.delay_sd_chips = j.at("delay_sd_chips").get<double>();
    d.duration_sd = j.at("duration_sd").get<double>();
    d.freq_sd_rad_per_chip = j.at("freq_sd_rad_per_chip").get<double>();
    d.phase_sd_rad = j.at("phase_sd_rad").get<double>();
    return d;
}

ordered_json errors_defaults() {
    return ordered_json{{"amplitude_sd", 0.05},
                        {"delay_sd_chips", 0.05},
                        {"duration_sd", 0.02},
                        {"freq_sd_rad_per_chip", 0.05},
                        {"phase_sd_rad", 0.1}};
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo)) throw config_error("grid bounds must satisfy 0 < lo < hi");
    if (points < 2) throw config_error("grid needs at least 2 points");
    std::vector<double> v(static_cast<size_t>(points));
    double ratio = hi / lo;
    for (int i = 0; i < points; ++i)
        v[static_cast<size_t>(i)] =
            lo * std::pow(ratio, static_cast<double>(i) / (points - 1));
    return v;
}

void finish(const CommonOpts& o, const std::string& manifest_name, const std::string& command,
            const ordered_json& cfg, const ordered_json& seeds,
            const std::vector<std::string>& outputs,
            std::chrono::steady_clock::time_point t0, ordered_json extra = {}) {
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ordered_json m = make_manifest(command, cfg, seeds, outputs, wall);
    for (auto& [k, v] : extra.items()) m[k] = v;
    write_text_file(out_path(o, manifest_name), m.dump(2) + "\n");
    std::printf("%s: wrote %zu file(s) to %s\n", command.c_str(), outputs.size() + 1,
                o.out_dir.c_str());
}

// ---- figure commands ------------------------------------------------------

void run_fig2(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json cfg{{"sinr_db_lo", -10.0}, {"sinr_db_hi", 40.0},  {"sinr_db_step", 0.5},
                     {"signal_base", 2.0},  {"qam_orders", {4, 16, 64}}};
    cfg = resolve_config(cfg, o);
    double lo = cfg["sinr_db_lo"].get<double>();
    double hi = cfg["sinr_db_hi"].get<double>();
    double step = cfg["sinr_db_step"].get<double>();
    double base = cfg["signal_base"].get<double>();
    auto orders = cfg["qam_orders"].get<std::vector<int>>();
    if (!(step > 0.0) || hi < lo) throw config_error("bad sinr axis");
    if (orders.empty()) throw config_error("qam_orders must not be empty");

    std::vector<std::string> cols{"sinr_db", "se_shannon"};
    for (int m : orders) cols.push_back("icse_qam" + std::to_string(m));
    CsvFile csv(out_path(o, "fig2.csv"), "fig2", 1, cols);
    SerModel qam = model_from_name("qam");
    long steps = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= steps; ++i) {
        double db = lo + static_cast<double>(i) * step;
        double snr = std::pow(10.0, db / 10.0);
        double g = std::sqrt(snr);
        std::vector<double> row{db, 0.0};
        InvariantPoint ref{2, g, base};
        row[1] = continuous_se(esinr(ref)) / (base / 2.0);
        for (int m : orders) {
            InvariantPoint p{m, g, base};
            row.push_back(icse(p, qam));
        }
        csv.row(row);
    }
    csv.close();
    finish(o, "fig2_manifest.json", "figure fig2", cfg, nullptr, {"fig2.csv"}, t0);
}

void run_fig3(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json cfg{{"amplitude", 1.0},
                     {"m_set", {2, 4, 8, 16}},
                     {"base_lo", 0.03125},
                     {"base_hi", 4096.0},
                     {"points", 97},
                     {"ser_model", "orthogonal"}};
    cfg = resolve_config(cfg, o);
    double g = cfg["amplitude"].get<double>();
    auto m_set = cfg["m_set"].get<std::vector<int>>();
    if (m_set.empty()) throw config_error("m_set must not be empty");
    SerModel model = model_from_name(cfg["ser_model"].get<std::string>());
    auto bases = log_grid(cfg["base_lo"].get<double>(), cfg["base_hi"].get<double>(),
                          cfg["points"].get<int>());

    std::vector<std::string> cols{"signal_base"};
    for (int m : m_set) cols.push_back("icpe_m" + std::to_string(m));
    CsvFile csv(out_path(o, "fig3.csv"), "fig3", 1, cols);
    for (double b : bases) {
        std::vector<double> row{b};
        for (int m : m_set) row.push_back(icpe(InvariantPoint{m, g, b}, model));
        csv.row(row);
    }
    csv.close();
    finish(o, "fig3_manifest.json", "figure fig3", cfg, nullptr, {"fig3.csv"}, t0);
}

void run_fig4(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json cfg{{"amplitudes", {0.5, 1.0, 2.0}},
                     {"m_set", {2, 4, 8, 16}},
                     {"base_lo", 0.25},
                     {"base_hi", 65536.0},
                     {"points", 129},
                     {"power_slack", 0.02},
                     {"ser_model", "orthogonal"}};
    cfg = resolve_config(cfg, o);
    auto amplitudes = cfg["amplitudes"].get<std::vector<double>>();
    auto m_set = cfg["m_set"].get<std::vector<int>>();
    if (amplitudes.empty() || m_set.empty()) throw config_error("empty amplitude or m set");
    SerModel model = model_from_name(cfg["ser_model"].get<std::string>());
    double slack = cfg["power_slack"].get<double>();
    double blo = cfg["base_lo"].get<double>();
    double bhi = cfg["base_hi"].get<double>();
    int points = cfg["points"].get<int>();
    auto bases = log_grid(blo, bhi, points);

    CsvFile curves(out_path(o, "fig4_curves.csv"), "fig4_curves", 1,
                   {"amplitude", "signal_base", "icse_best"});
    CsvFile peaks(out_path(o, "fig4_peaks.csv"), "fig4_peaks", 1,
                  {"amplitude", "alphabet_size", "signal_base", "icse", "icpe", "band_lo",
                   "band_hi", "interior"});
    for (double g : amplitudes) {
        for (double b : bases) {
            double best = 0.0;
            for (int m : m_set) best = std::max(best, icse(InvariantPoint{m, g, b}, model));
            curves.row({g, b, best});
        }
        SearchDomain domain;
        domain.m_set = m_set;
        domain.amplitude = GridAxis{g, g, 1, true, true};
        domain.signal_base = GridAxis{blo, bhi, points, true, false};
        ExtremumResult r = maximize_spectral(domain, model, slack);
        peaks.row({g, static_cast<double>(r.point.alphabet_size), r.point.signal_base,
                   r.icse_value, r.icpe_value, r.band_lo, r.band_hi,
                   r.interior ? 1.0 : 0.0});
    }
    curves.close();
    peaks.close();
    finish(o, "fig4_manifest.json", "figure fig4", cfg, nullptr,
           {"fig4_curves.csv", "fig4_peaks.csv"}, t0);
}

void run_fig5(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json cfg{{"ensemble_size", 8},
                     {"oversampling", 8},
                     {"trials", 10000},
                     {"seed", 1},
                     {"scale_lo", 1e-3},
                     {"scale_hi", 1.0},
                     {"scale_points", 13},
                     {"errors", errors_defaults()},
                     {"thermal_db", -113.101},
                     {"path_loss_exponent", 3.5},
                     {"cells", ordered_json::array({ordered_json{{"distance", 2.5}, {"actives", 4}},
                                                    ordered_json{{"distance", 4.0}, {"actives", 4}}})}};
    cfg = resolve_config(cfg, o);
    int size = cfg["ensemble_size"].get<int>();
    int ovs = cfg["oversampling"].get<int>();

    InterferenceScenario sc;
    sc.ensemble = walsh_ensemble(size, ovs);
    sc.layout.path_loss_exponent = cfg["path_loss_exponent"].get<double>();
    for (const auto& c : cfg["cells"]) {
        sc.layout.cells.push_back(
            CellSite{c.at("distance").get<double>(), c.at("actives").get<int>()});
        sc.cell_ensembles.push_back(walsh_ensemble(size, ovs));
    }
    sc.thermal_power = std::pow(10.0, cfg["thermal_db"].get<double>() / 10.0);

    ErrorDistribution d = errors_from_json(cfg["errors"]);
    McRun mc;
    mc.trials = cfg["trials"].get<long>();
    mc.seed = cfg["seed"].get<std::uint64_t>();
    auto scales = log_grid(cfg["scale_lo"].get<double>(), cfg["scale_hi"].get<double>(),
                           cfg["scale_points"].get<int>());
    auto rows = asymptotic_sweep(sc, d, scales, mc);

    CsvFile csv(out_path(o, "fig5.csv"), "fig5", 1,
                {"scale", "signal_power", "intra_power", "inter_power", "thermal_power",
                 "sinr"});
    for (const auto& r : rows)
        csv.row({r.scale, r.estimate.signal.mean, r.estimate.intra.mean,
                 r.estimate.inter.mean, r.estimate.thermal_power, r.estimate.sinr});
    csv.close();
    finish(o, "fig5_manifest.json", "figure fig5", cfg, cfg["seed"], {"fig5.csv"}, t0);
}

void run_fig6(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json cfg{
        {"mean_lo", 1.0}, {"mean_hi", 64.0}, {"points", 61}, {"buffer", 16}};
    cfg = resolve_config(cfg, o);
    long buffer = cfg["buffer"].get<long>();
    auto means = log_grid(cfg["mean_lo"].get<double>(), cfg["mean_hi"].get<double>(),
                          cfg["points"].get<int>());
    CsvFile csv(out_path(o, "fig6.csv"), "fig6", 1,
                {"mean_slots", "entropy_bits", "overhead_mm1", "overhead_mm1n",
                 "overhead_md1"});
    for (double mean : means) {
        double h = geometric_entropy(mean);
        csv.row({mean, h, overhead_infimum_mm1(h), overhead_infimum_mm1n(h, buffer),
                 overhead_infimum_md1(h)});
    }
    csv.close();
    finish(o, "fig6_manifest.json", "figure fig6", cfg, nullptr, {"fig6.csv"}, t0);
}

void run_figure(const std::string& id, const CommonOpts& o) {
    if (id == "fig2")
        run_fig2(o);
    else if (id == "fig3")
        run_fig3(o);
    else if (id == "fig4")
        run_fig4(o);
    else if (id == "fig5")
        run_fig5(o);
    else if (id == "fig6")
        run_fig6(o);
    else
        throw config_error("unknown figure id: " + id +
                           " (expected fig2, fig3, fig4, fig5, fig6)");
}

// ---- optimize -------------------------------------------------------------

void run_optimize(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json cfg{{"mode", "minimize_power"},
                     {"m_set", {2, 4, 8, 16}},
                     {"amplitude", axis_defaults(0.1, 10.0, 33, true, false)},
                     {"signal_base", axis_defaults(1e-3, 65536.0, 129, true, false)},
                     {"spectral_floor", 0.0},
                     {"power_slack", 0.02},
                     {"ser_model", "orthogonal"},
                     {"alphabet", 2},
                     {"amplitudes", {0.25, 0.5, 1.0, 2.0, 4.0}}};
    cfg = resolve_config(cfg, o);
    std::string mode = cfg["mode"].get<std::string>();
    SerModel model = model_from_name(cfg["ser_model"].get<std::string>());
    ordered_json extra;
    std::vector<std::string> outputs;

    if (mode == "minimize_power") {
        SearchDomain domain;
        domain.m_set = cfg["m_set"].get<std::vector<int>>();
        domain.amplitude = axis_from_json(cfg["amplitude"]);
        domain.signal_base = axis_from_json(cfg["signal_base"]);
        ExtremumResult r = minimize_power(domain, cfg["spectral_floor"].get<double>(), model);
        CsvFile csv(out_path(o, "optimize.csv"), "optimize_min", 1,
                    {"alphabet_size", "amplitude", "signal_base", "icpe", "icse",
                     "constraint_active"});
        csv.row({static_cast<double>(r.point.alphabet_size), r.point.amplitude,
                 r.point.signal_base, r.icpe_value, r.icse_value,
                 r.constraint_active ? 1.0 : 0.0});
        csv.close();
        outputs = {"optimize.csv"};
    } else if (mode == "maximize_spectral") {
        SearchDomain domain;
        domain.m_set = cfg["m_set"].get<std::vector<int>>();
        domain.amplitude = axis_from_json(cfg["amplitude"]);
        domain.signal_base = axis_from_json(cfg["signal_base"]);
        ExtremumResult r = maximize_spectral(domain, model, cfg["power_slack"].get<double>());
        CsvFile csv(out_path(o, "optimize.csv"), "optimize_max", 1,
                    {"alphabet_size", "amplitude", "signal_base", "icse", "icpe", "band_lo",
                     "band_hi", "interior"});
        csv.row({static_cast<double>(r.point.alphabet_size), r.point.amplitude,
                 r.point.signal_base, r.icse_value, r.icpe_value, r.band_lo, r.band_hi,
                 r.interior ? 1.0 : 0.0});
        csv.close();
        outputs = {"optimize.csv"};
    } else if (mode == "power_constant") {
        auto amps = cfg["amplitudes"].get<std::vector<double>>();
        PowerConstantReport rep =
            verify_power_constant(cfg["alphabet"].get<int>(), amps, model);
        CsvFile csv(out_path(o, "optimize.csv"), "optimize_power_constant", 1,
                    {"alphabet_size", "amplitude", "signal_base", "icpe_min"});
        for (size_t i = 0; i < rep.amplitudes.size(); ++i)
            csv.row({static_cast<double>(rep.alphabet_size), rep.amplitudes[i], rep.bases[i],
                     rep.minima[i]});
        csv.close();
        extra["relative_spread"] = rep.relative_spread;
        outputs = {"optimize.csv"};
    } else if (mode == "trend") {
        auto amps = cfg["amplitudes"].get<std::vector<double>>();
        std::sort(amps.begin(), amps.end(), std::greater<double>());
        TrendReport rep = optimal_complexity_trend(
            amps, cfg["m_set"].get<std::vector<int>>(), model,
            axis_from_json(cfg["signal_base"]), cfg["power_slack"].get<double>());
        CsvFile csv(out_path(o, "optimize.csv"), "optimize_trend", 1,
                    {"amplitude", "alphabet_size", "signal_base", "icse", "icpe",
                     "interior"});
        for (const auto& r : rep.rows)
            csv.row({r.amplitude, static_cast<double>(r.alphabet_size), r.signal_base,
                     r.icse_value, r.icpe_value, r.interior ? 1.0 : 0.0});
        csv.close();
        extra["base_strictly_increasing"] = rep.base_strictly_increasing;
        outputs = {"optimize.csv"};
    } else {
        throw config_error("unknown optimize mode: " + mode);
    }
    finish(o, "optimize_manifest.json", "optimize", cfg, nullptr, outputs, t0, extra);
}

// ---- interference ---------------------------------------------------------

void run_interference(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json cfg{{"mode", "scale_sweep"},
                     {"ensemble", "walsh"},
                     {"ensemble_size", 8},
                     {"sequence_degree", 5},
                     {"oversampling", 4},
                     {"trials", 4000},
                     {"seed", 1},
                     {"scale_lo", 1e-3},
                     {"scale_hi", 1.0},
                     {"scale_points", 13},
                     {"errors", errors_defaults()},
                     {"thermal_db", -113.101},
                     {"path_loss_exponent", 3.5},
                     {"cells", ordered_json::array({ordered_json{{"distance", 2.5}, {"actives", 4}},
                                                    ordered_json{{"distance", 4.0}, {"actives", 4}}})},
                     {"degrees", {5, 7, 9, 11}},
                     {"ring_cells", 4},
                     {"actives_per_cell", 2},
                     {"distance_ratio", 2.5}};
    cfg = resolve_config(cfg, o);
    std::string mode = cfg["mode"].get<std::string>();
    ErrorDistribution d = errors_from_json(cfg["errors"]);
    McRun mc;
    mc.trials = cfg["trials"].get<long>();
    mc.seed = cfg["seed"].get<std::uint64_t>();
    ordered_json extra;

    if (mode == "scale_sweep") {
        int ovs = cfg["oversampling"].get<int>();
        std::string kind = cfg["ensemble"].get<std::string>();
        auto make_ensemble = [&]() {
            if (kind == "walsh") return walsh_ensemble(cfg["ensemble_size"].get<int>(), ovs);
            if (kind == "mseq") {
                int deg = cfg["sequence_degree"].get<int>();
                auto polys = primitive_polynomials(deg, 1);
                return mseq_ensemble(deg, polys[0], (1 << deg) - 1, ovs);
            }
            throw config_error("unknown ensemble: " + kind);
        };
        InterferenceScenario sc;
        sc.ensemble = make_ensemble();
        sc.layout.path_loss_exponent = cfg["path_loss_exponent"].get<double>();
        for (const auto& c : cfg["cells"]) {
            sc.layout.cells.push_back(
                CellSite{c.at("distance").get<double>(), c.at("actives").get<int>()});
            sc.cell_ensembles.push_back(make_ensemble());
        }
        sc.thermal_power = std::pow(10.0, cfg["thermal_db"].get<double>() / 10.0);
        auto scales = log_grid(cfg["scale_lo"].get<double>(), cfg["scale_hi"].get<double>(),
                               cfg["scale_points"].get<int>());
        auto rows = asymptotic_sweep(sc, d, scales, mc);
        CsvFile csv(out_path(o, "interference.csv"), "interference_scale", 1,
                    {"scale", "signal_power", "intra_power", "inter_power", "thermal_power",
                     "sinr"});
        for (const auto& r : rows)
            csv.row({r.scale, r.estimate.signal.mean, r.estimate.intra.mean,
                     r.estimate.inter.mean, r.estimate.thermal_power, r.estimate.sinr});
        csv.close();
    } else if (mode == "degree_sweep") {
        auto degrees = cfg["degrees"].get<std::vector<int>>();
        auto rows = degree_suppression_sweep(
            degrees, cfg["ring_cells"].get<int>(), cfg["actives_per_cell"].get<int>(),
            cfg["distance_ratio"].get<double>(), cfg["path_loss_exponent"].get<double>(),
            cfg["oversampling"].get<int>(), d, mc);
        CsvFile csv(out_path(o, "interference.csv"), "interference_degree", 1,
                    {"degree", "period", "rms_inter", "std_error"});
        std::vector<double> xs, ys;
        for (const auto& r : rows) {
            csv.row({static_cast<double>(r.degree), static_cast<double>(r.period),
                     r.rms_inter, r.std_error});
            xs.push_back(static_cast<double>(r.period));
            ys.push_back(r.rms_inter);
        }
        csv.close();
        extra["period_slope"] = log_log_slope(xs, ys);
    } else {
        throw config_error("unknown interference mode: " + mode);
    }
    finish(o, "interference_manifest.json", "interference", cfg, cfg["seed"],
           {"interference.csv"}, t0, extra);
}

// ---- macsim ---------------------------------------------------------------

void run_macsim(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json cfg{{"stations", 16},
                     {"packet_law", "geometric"},
                     {"mean_slots", 2.0},
                     {"slots", 2},
                     {"reservation_overhead", 8},
                     {"slot_size", 100},
                     {"ser", 0.0},
                     {"duration", 30000},
                     {"seed", 1},
                     {"seed_count", 10},
                     {"loads", {0.3, 0.4, 0.45, 0.5, 0.55, 0.65}}};
    cfg = resolve_config(cfg, o);

    SimConfig base;
    base.stations = cfg["stations"].get<int>();
    std::string law = cfg["packet_law"].get<std::string>();
    if (law == "geometric") {
        base.packet_law.kind = PacketLawKind::Geometric;
        base.packet_law.mean_slots = cfg["mean_slots"].get<double>();
    } else if (law == "deterministic") {
        base.packet_law.kind = PacketLawKind::Deterministic;
        base.packet_law.slots = cfg["slots"].get<int>();
    } else {
        throw config_error("unknown packet_law: " + law);
    }
    base.reservation_overhead = cfg["reservation_overhead"].get<int>();
    base.slot_size = cfg["slot_size"].get<int>();
    base.ser = cfg["ser"].get<double>();
    base.duration = cfg["duration"].get<long>();
    base.seed = cfg["seed"].get<std::uint64_t>();
    auto loads = cfg["loads"].get<std::vector<double>>();
    int seed_count = cfg["seed_count"].get<int>();

    ThroughputCurve curve = sweep_load(base, loads, seed_count);

    CsvFile csv(out_path(o, "macsim.csv"), "macsim_curve", 1,
                {"offered_load", "throughput", "ci_low", "ci_high", "seed_count"});
    double best_se = 0.0;
    for (const auto& p : curve.points) {
        csv.row({p.offered_load, p.throughput, p.ci_low, p.ci_high,
                 static_cast<double>(p.seed_count)});
        if (p.throughput == curve.measured_capacity)
            best_se = (p.ci_high - p.throughput) / 1.96;
    }
    csv.close();

    // in-tool comparison against the analytic ceiling and overhead floor
    double mean_slots = law_mean_slots(base.packet_law);
    double payload =
        mean_slots * base.slot_size - static_cast<double>(base.reservation_overhead);
    double entropy = base.packet_law.kind == PacketLawKind::Geometric
                         ? geometric_entropy(base.packet_law.mean_slots)
                         : 0.0;
    double floor_bits = base.packet_law.kind == PacketLawKind::Geometric
                            ? overhead_infimum_mm1(entropy)
                            : overhead_infimum_md1(0.0);
    double ceiling =
        base.ser > 0.0
            ? capacity_upper_with_errors(symbol_rate_efficiency(2, base.ser),
                                         static_cast<double>(base.reservation_overhead),
                                         payload)
            : capacity_upper(static_cast<double>(base.reservation_overhead) / payload);
    bool overhead_ok = static_cast<double>(base.reservation_overhead) >= floor_bits;
    bool dominated = curve.measured_capacity <= ceiling + 3.0 * best_se;
    CsvFile sum(out_path(o, "macsim_summary.csv"), "macsim_summary", 1,
                {"measured_capacity", "capacity_ceiling", "overhead_floor_bits",
                 "overhead_above_floor", "dominance_pass"});
    sum.row({curve.measured_capacity, ceiling, floor_bits, overhead_ok ? 1.0 : 0.0,
             dominated ? 1.0 : 0.0});
    sum.close();

    ordered_json extra;
    extra["bound_check"] = ordered_json{{"measured_capacity", curve.measured_capacity},
                                        {"capacity_ceiling", ceiling},
                                        {"overhead_floor_bits", floor_bits},
                                        {"overhead_above_floor", overhead_ok},
                                        {"pass", dominated}};
    std::printf("bound check: %s (measured %.6g, ceiling %.6g)\n",
                dominated ? "PASS" : "FAIL", curve.measured_capacity, ceiling);
    finish(o, "macsim_manifest.json", "macsim", cfg, cfg["seed"],
           {"macsim.csv", "macsim_summary.csv"}, t0, extra);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant-criteria radio limit toolkit"};
    app.require_subcommand(1);

    std::string figure_id;
    CommonOpts fig_opts, opt_opts, int_opts, mac_opts;

    CLI::App* fig = app.add_subcommand("figure", "emit a figure dataset");
    fig->add_option("id", figure_id, "figure id: fig2..fig6")->required();
    add_common(fig, fig_opts);
    CLI::App* opt = app.add_subcommand("optimize", "extremal criteria search");
    add_common(opt, opt_opts);
    CLI::App* itf = app.add_subcommand("interference", "orthogonal-ensemble Monte Carlo");
    add_common(itf, int_opts);
    CLI::App* mac = app.add_subcommand("macsim", "reservation MAC throughput sweep");
    add_common(mac, mac_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto apply_workers = [](const CommonOpts& o) {
#ifdef _OPENMP
        if (o.workers > 0) omp_set_num_threads(o.workers);
#else
        (void)o;
#endif
    };

    try {
        if (fig->parsed()) {
            apply_workers(fig_opts);
            run_figure(figure_id, fig_opts);
        } else if (opt->parsed()) {
            apply_workers(opt_opts);
            run_optimize(opt_opts);
        } else if (itf->parsed()) {
            apply_workers(int_opts);
            run_interference(int_opts);
        } else if (mac->parsed()) {
            apply_workers(mac_opts);
            run_macsim(mac_opts);
        }
    } catch (const infeasible_error& e) {
        std::fprintf(stderr, "error: infeasible: %s (closest: alphabet %d, base %.6g, icse %.6g)\n",
                     e.what(), e.alphabet_size, e.signal_base, e.objective);
        return 3;
    } catch (const config_error& e) {
        std::fprintf(stderr, "error: config: %s\n", e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: config: %s\n", e.what());
        return 2;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "error: domain: %s\n", e.what());
        return 4;
    } catch (const numerical_error& e) {
        std::fprintf(stderr, "error: numerical: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
    return 0;
}
