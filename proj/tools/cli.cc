// Copyright 2026 The jpoim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <unistd.h>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "jpoim/annealer.h"
#include "jpoim/circuit_params.h"
#include "jpoim/errors.h"
#include "jpoim/histogram_io.h"
#include "jpoim/lhz_map.h"
#include "jpoim/problem_io.h"
#include "jpoim/quantum_tile.h"
#include "jpoim/tile_model.h"

namespace jpoim::cli {

namespace {

constexpr const char *kToolVersion = "jpoim 0.1.0";

/// Flags shared by every leaf command.
struct CommonFlags {
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format = "csv";
    std::optional<std::uint64_t> trials;
    bool dense = false;
    bool canonical = false;
    bool quiet = false;
    unsigned workers = 0;
};

void add_common(CLI::App *cmd, CommonFlags &flags) {
    cmd->add_option("--seed", flags.seed, "Master RNG seed (drawn from the system and printed when absent)");
    cmd->add_option("--out", flags.out_path, "Write data to this file instead of standard output");
    cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--trials", flags.trials, "Number of trials");
    cmd->add_flag("--dense", flags.dense, "Emit zero-probability states");
    cmd->add_flag("--canonical", flags.canonical, "Fold each state with its global complement");
    cmd->add_flag("--quiet", flags.quiet, "Suppress diagnostic logging");
    cmd->add_option("--workers", flags.workers, "Worker threads (0 = hardware concurrency); output is unaffected");
}

std::string num(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

class Context {
   public:
    Context(const CommonFlags &flags, std::ostream &out, std::ostream &err) : flags_(flags), out_(out), err_(err) {
    }

    void log(const std::string &msg) const {
        if (!flags_.quiet) {
            err_ << msg << '\n';
        }
    }

    void warn(const std::string &msg) const {
        err_ << "warning: " << msg << '\n';
    }

    std::uint64_t seed() {
        if (!resolved_seed_) {
            if (flags_.seed) {
                resolved_seed_ = *flags_.seed;
            } else {
                std::random_device rd;
                resolved_seed_ = (std::uint64_t{rd()} << 32) ^ rd();
                err_ << "seed: " << *resolved_seed_ << '\n';
            }
        }
        return *resolved_seed_;
    }

    std::size_t trials(std::uint64_t fallback) const {
        const std::uint64_t t = flags_.trials.value_or(fallback);
        if (t == 0) {
            throw InvalidArgument("--trials must be at least 1");
        }
        return static_cast<std::size_t>(t);
    }

    report::EmitOptions emit_options() const {
        return {report::parse_format(flags_.format), flags_.dense, flags_.canonical};
    }

    bool json() const {
        return flags_.format == "json";
    }

    unsigned workers() const {
        return flags_.workers;
    }

    /// Writes the payload to --out (temp file + rename) or the data stream.
    void emit(const std::string &payload) const {
        if (flags_.out_path.empty()) {
            out_ << payload;
            out_.flush();
            return;
        }
        std::filesystem::path path(flags_.out_path);
        if (path.is_relative()) {
            if (const char *dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
                path = std::filesystem::path(dir) / path;
            }
        }
        if (path.has_parent_path()) {
            std::filesystem::create_directories(path.parent_path());
        }
        std::filesystem::path tmp = path;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) {
                throw InvalidArgument("cannot write '" + tmp.string() + "'");
            }
            f << payload;
            if (!f.flush()) {
                throw InvalidArgument("write to '" + tmp.string() + "' failed");
            }
        }
        std::filesystem::rename(tmp, path);
        log("wrote " + path.string());
    }

   private:
    const CommonFlags &flags_;
    std::ostream &out_;
    std::ostream &err_;
    std::optional<std::uint64_t> resolved_seed_;
};

io::Json base_metadata(const std::string &command) {
    return io::Json{{"command", command}, {"tool", kToolVersion}};
}

// ---------------------------------------------------------------- lhz map

struct LhzMapArgs {
    std::size_t n = 0;
    std::string problem;
    std::optional<double> penalty;
};

void run_lhz_map(const LhzMapArgs &args, Context &ctx) {
    const lhz::LhzLayout layout = lhz::build_layout(args.n);
    std::vector<double> fields(layout.k_physical(), 0.0);
    io::Json meta = base_metadata("lhz map");
    meta["n"] = args.n;
    if (!args.problem.empty()) {
        const IsingProblem problem = io::load_ising_problem(args.problem);
        if (problem.size() != args.n) {
            throw InvalidArgument("--n " + std::to_string(args.n) + " does not match problem size " +
                                  std::to_string(problem.size()));
        }
        fields = lhz::map_couplings(problem);
        meta["problem"] = io::ising_problem_to_json(problem);
    }
    if (args.penalty) {
        const lhz::LhzProblem lp(fields, *args.penalty);
        meta["c_penalty"] = *args.penalty;
        if (lhz::penalty_possibly_weak(lp)) {
            ctx.warn("penalty C=" + num(*args.penalty) + " does not exceed max |J_k|; constraints may be violated");
        }
    }

    if (ctx.json()) {
        io::Json doc{{"metadata", meta}, {"layout", lhz::layout_to_json(layout)}, {"j_fields", fields}};
        ctx.emit(doc.dump(2) + "\n");
        return;
    }
    meta["rows"] = layout.rows();
    io::Json tiles = io::Json::array();
    for (const auto &t : layout.tiles()) {
        io::Json members = io::Json::array();
        for (const auto &m : t.members) {
            members.push_back(m.fixed ? "f" + std::to_string(m.index) : std::to_string(m.index));
        }
        tiles.push_back(members);
    }
    meta["tiles_nesw"] = tiles;
    std::ostringstream os;
    os << report::csv_metadata_block(meta) << "k,i,j,row,j_field\n";
    std::size_t k = 0;
    for (std::size_t r = 0; r < layout.rows().size(); ++r) {
        for (std::size_t c = 0; c < layout.rows()[r]; ++c, ++k) {
            auto [i, j] = layout.pair_of(k);
            os << k << ',' << i << ',' << j << ',' << r << ',' << num(fields[k]) << '\n';
        }
    }
    ctx.emit(os.str());
}

// ---------------------------------------------------------- tile enumerate

void run_tile_enumerate(const std::string &params_path, Context &ctx) {
    const io::Json doc = io::read_json_file(params_path);
    const tile::TileParams params = tile::tile_params_from_json(doc);
    const auto rows = tile::enumerate_tile(params);
    const auto ground = tile::ground_set(params);
    const auto parity_report = tile::lhz_parity_valid(params);
    if (!parity_report.valid) {
        ctx.warn("ground set contains odd-parity logical states");
    }

    io::Json meta = base_metadata("tile enumerate");
    meta["params"] = tile::tile_params_to_json(params);
    meta["ground_energy"] = ground.min_energy;
    io::Json ground_states = io::Json::array();
    for (const auto &c : ground.configs) {
        ground_states.push_back(c.logical().bits() + c.ancilla().bits());
    }
    meta["ground_set"] = ground_states;
    meta["lhz_parity_valid"] = parity_report.valid;

    if (ctx.json()) {
        io::Json out_rows = io::Json::array();
        for (const auto &r : rows) {
            std::vector<int> s(r.config.logical().spins().begin(), r.config.logical().spins().end());
            std::vector<int> a(r.config.ancilla().spins().begin(), r.config.ancilla().spins().end());
            out_rows.push_back(
                {{"s", s}, {"a", a}, {"energy", r.energy}, {"parity", r.config.logical_parity()}});
        }
        ctx.emit(io::Json{{"metadata", meta}, {"rows", out_rows}}.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os << report::csv_metadata_block(meta) << "s1,s2,s3,s4,a1,a2,energy,parity\n";
    for (const auto &r : rows) {
        for (auto s : r.config.logical().spins()) {
            os << int{s} << ',';
        }
        for (auto s : r.config.ancilla().spins()) {
            os << int{s} << ',';
        }
        os << num(r.energy) << ',' << r.config.logical_parity() << '\n';
    }
    ctx.emit(os.str());
}

// ------------------------------------------------------------ tile quantum

struct QuantumArgs {
    std::string params;
    std::optional<double> noise;
    std::string noise_dist;
    bool sweep = false;
};

void run_tile_quantum(const QuantumArgs &args, Context &ctx) {
    const io::Json doc = io::read_json_file(args.params);
    const quantum::QuantumTileParams params = quantum::quantum_params_from_json(doc);

    quantum::NoiseSpec noise;
    bool sweep = args.sweep;
    if (doc.contains("noise")) {
        const io::Json &n = doc.at("noise");
        noise.thermal_coefficient = io::optional_number(n, "thermal_coefficient", "noise").value_or(0.0);
        if (n.contains("distribution")) {
            noise.distribution = quantum::parse_noise_distribution(n.at("distribution").get<std::string>());
        }
    }
    if (doc.contains("sweep") && doc.at("sweep").is_boolean()) {
        sweep = sweep || doc.at("sweep").get<bool>();
    }
    if (args.noise) {
        noise.thermal_coefficient = *args.noise;
    }
    if (!args.noise_dist.empty()) {
        noise.distribution = quantum::parse_noise_distribution(args.noise_dist);
    }
    const std::size_t trials = ctx.trials(1000);
    noise.seed = ctx.seed();

    const auto fields = sweep ? quantum::default_sweep(params.j_c) : std::vector<std::array<double, 4>>{params.j};
    const auto dist = quantum::sweep_distribution(params.j_a, params.j_c, fields, noise, trials, ctx.workers());

    io::Json meta = base_metadata("tile quantum");
    meta["params"] = {{"j", params.j}, {"j_a", params.j_a}, {"j_c", params.j_c}};
    meta["noise"] = {{"thermal_coefficient", noise.thermal_coefficient},
                     {"distribution", std::string(quantum::noise_distribution_name(noise.distribution))}};
    meta["seed"] = noise.seed;
    meta["trials"] = trials;
    meta["sweep"] = sweep ? io::Json(fields) : io::Json(false);
    ctx.emit(report::emit_distribution(dist.probabilities, 4, ctx.emit_options(), meta));
}

// ----------------------------------------------------------- circuit sweep

circuit::CircuitConfig load_circuit_config(const std::string &path) {
    if (path.empty()) {
        return circuit::default_circuit_config();
    }
    return circuit::circuit_config_from_json(io::read_json_file(path));
}

void run_circuit_sweep(const std::string &config_path, Context &ctx) {
    const circuit::CircuitConfig cfg = load_circuit_config(config_path);
    const auto samples =
        circuit::flux_sweep(cfg.resonator, cfg.squid, cfg.squid.l1, cfg.current_to_flux, cfg.sweep);
    std::size_t diverged = 0;
    for (const auto &s : samples) {
        diverged += s.diverged ? 1 : 0;
    }
    if (diverged > 0) {
        ctx.warn(std::to_string(diverged) + " sample(s) within the half-flux-quantum divergence guard were dropped");
    }
    io::Json meta = base_metadata("circuit sweep");
    meta["config"] = circuit::circuit_config_to_json(cfg);
    meta["diverged_samples"] = diverged;
    meta["pump_hz"] = circuit::pump_frequency(
                          circuit::resonance_frequency(cfg.resonator, cfg.squid, cfg.squid.l1, 0.0)) /
                      (2.0 * circuit::kPi);

    if (ctx.json()) {
        io::Json rows = io::Json::array();
        for (const auto &s : samples) {
            if (!s.diverged) {
                rows.push_back({{"i_dc_A", s.i_dc},
                                {"flux_wb", s.flux},
                                {"l_squid_H", s.l_squid},
                                {"f0_Hz", s.omega0 / (2.0 * circuit::kPi)}});
            }
        }
        ctx.emit(io::Json{{"metadata", meta}, {"samples", rows}}.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os << report::csv_metadata_block(meta) << "i_dc_A,flux_wb,l_squid_H,f0_Hz\n";
    for (const auto &s : samples) {
        if (!s.diverged) {
            os << num(s.i_dc) << ',' << num(s.flux) << ',' << num(s.l_squid) << ','
               << num(s.omega0 / (2.0 * circuit::kPi)) << '\n';
        }
    }
    ctx.emit(os.str());
}

// -------------------------------------------------------------- circuit iv

void run_circuit_iv(const std::string &config_path, double temperature, Context &ctx) {
    const circuit::CircuitConfig cfg = load_circuit_config(config_path);
    const std::uint64_t seed = ctx.seed();
    const auto samples = circuit::rsj_iv_curve(cfg.junction, temperature, cfg.iv, seed, cfg.brownian_dt);
    io::Json meta = base_metadata("circuit iv");
    meta["junction"] = {{"i_c", cfg.junction.i_c}, {"r_shunt", cfg.junction.r_shunt}};
    meta["iv"] = {{"i_start", cfg.iv.start}, {"i_stop", cfg.iv.stop}, {"points", cfg.iv.points},
                  {"dt_eff", cfg.brownian_dt}};
    meta["temperature_k"] = temperature;
    meta["seed"] = seed;
    if (ctx.json()) {
        io::Json rows = io::Json::array();
        for (const auto &s : samples) {
            rows.push_back({{"i_A", s.current}, {"v_V", s.voltage}});
        }
        ctx.emit(io::Json{{"metadata", meta}, {"samples", rows}}.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os << report::csv_metadata_block(meta) << "i_A,v_V\n";
    for (const auto &s : samples) {
        os << num(s.current) << ',' << num(s.voltage) << '\n';
    }
    ctx.emit(os.str());
}

// ------------------------------------------------------------------ anneal

void run_anneal(const std::string &program_path, Context &ctx) {
    const anneal::AnnealRun run = anneal::anneal_run_from_json(io::read_json_file(program_path));
    const std::size_t trials = ctx.trials(1000);
    const std::uint64_t seed = ctx.seed();
    ctx.log("running " + std::to_string(trials) + " anneal trials");
    const auto hist = anneal::run_trials(run.program, run.schedule, run.dynamics, trials, seed, ctx.workers());
    if (hist.unsettled > 0) {
        ctx.warn(std::to_string(hist.unsettled) + " trial(s) did not settle above the readout threshold");
    }

    io::Json meta = base_metadata("anneal");
    meta["program"] = anneal::anneal_run_to_json(run);
    const auto params = anneal::effective_tile_couplings(run.program);
    meta["effective_couplings"] = tile::tile_params_to_json(params);
    meta["seed"] = seed;
    meta["trials"] = trials;
    meta["settled"] = hist.settled();
    meta["unsettled"] = hist.unsettled;
    meta["canonical"] = ctx.emit_options().canonical;
    meta["simulated_time_s"] = run.schedule.duration / run.linewidth_hz;

    report::CountTable table{4, std::vector<std::uint64_t>(hist.counts.begin(), hist.counts.end())};
    ctx.emit(report::emit_histogram(table, ctx.emit_options(), meta));
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulator for six-oscillator LHZ tiles built from Josephson parametric oscillators", "jpoim"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CommonFlags flags;

    auto *lhz_cmd = app.add_subcommand("lhz", "LHZ parity mapping");
    lhz_cmd->require_subcommand(1);
    LhzMapArgs lhz_args;
    auto *lhz_map = lhz_cmd->add_subcommand("map", "Build the layout and physical fields for a logical problem");
    lhz_map->add_option("--n", lhz_args.n, "Logical spin count")->required();
    lhz_map->add_option("--problem", lhz_args.problem, "Ising problem file")->check(CLI::ExistingFile);
    lhz_map->add_option("--penalty", lhz_args.penalty, "Penalty strength C (checked against max |J_k|)");
    add_common(lhz_map, flags);

    auto *tile_cmd = app.add_subcommand("tile", "Six-spin tile models");
    tile_cmd->require_subcommand(1);
    std::string enum_params;
    auto *tile_enum = tile_cmd->add_subcommand("enumerate", "Energies of all 64 tile configurations");
    tile_enum->add_option("--params", enum_params, "Tile parameter file")->required()->check(CLI::ExistingFile);
    add_common(tile_enum, flags);

    QuantumArgs q_args;
    auto *tile_q = tile_cmd->add_subcommand("quantum", "Ground-state histogram of the tile Hamiltonian");
    tile_q->add_option("--params", q_args.params, "Tile parameter file")->required()->check(CLI::ExistingFile);
    tile_q->add_option("--noise", q_args.noise, "Thermal coefficient of the diagonal noise");
    tile_q->add_option("--noise-dist", q_args.noise_dist, "uniform or normal");
    tile_q->add_flag("--sweep", q_args.sweep, "Sweep field sign patterns of magnitude 0 and J_C/4");
    add_common(tile_q, flags);

    auto *circuit_cmd = app.add_subcommand("circuit", "JPO circuit parameters");
    circuit_cmd->require_subcommand(1);
    std::string sweep_cfg;
    auto *c_sweep = circuit_cmd->add_subcommand("sweep", "Resonance frequency against DC bias");
    c_sweep->add_option("--config", sweep_cfg, "Circuit configuration file")->check(CLI::ExistingFile);
    add_common(c_sweep, flags);

    std::string iv_cfg;
    double temperature = 4.2;
    auto *c_iv = circuit_cmd->add_subcommand("iv", "Junction I-V curve with Brownian noise");
    c_iv->add_option("--config", iv_cfg, "Circuit configuration file")->check(CLI::ExistingFile);
    c_iv->add_option("--temp", temperature, "Noise temperature in K");
    add_common(c_iv, flags);

    std::string program_path;
    auto *anneal_cmd = app.add_subcommand("anneal", "Noisy anneal trial ensemble");
    anneal_cmd->add_option("--program", program_path, "Program file")->required()->check(CLI::ExistingFile);
    add_common(anneal_cmd, flags);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, err, err);
        err << '\n';
        const CLI::App *failing = &app;
        for (const CLI::App *sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front(); sub;
             sub = sub->get_subcommands().empty() ? nullptr : sub->get_subcommands().front()) {
            failing = sub;
        }
        err << failing->help();
        return kExitUsage;
    }

    Context ctx(flags, out, err);
    try {
        if (lhz_map->parsed()) {
            run_lhz_map(lhz_args, ctx);
        } else if (tile_enum->parsed()) {
            run_tile_enumerate(enum_params, ctx);
        } else if (tile_q->parsed()) {
            run_tile_quantum(q_args, ctx);
        } else if (c_sweep->parsed()) {
            run_circuit_sweep(sweep_cfg, ctx);
        } else if (c_iv->parsed()) {
            run_circuit_iv(iv_cfg, temperature, ctx);
        } else if (anneal_cmd->parsed()) {
            run_anneal(program_path, ctx);
        }
    } catch (const Error &e) {
        err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << '\n';
        const bool numerical = e.kind() == ErrorKind::kNumerical || e.kind() == ErrorKind::kIntegrationBlowup;
        return numerical ? kExitNumerical : kExitValidation;
    } catch (const io::Json::exception &e) {
        err << "error (parse): " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error (io): " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace jpoim::cli
