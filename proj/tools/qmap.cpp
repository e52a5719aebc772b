// qmap: map circuits onto multi-core devices and characterize their qubit traffic.
//
// Exit codes: 0 ok, 1 usage/io, 2 parse, 3 capacity, 4 verification/deadlock,
// 5 oracle guard.

#include "qmap/arch.hpp"
#include "qmap/batch.hpp"
#include "qmap/digest.hpp"
#include "qmap/export.hpp"
#include "qmap/generators.hpp"
#include "qmap/manifest.hpp"
#include "qmap/mapped_io.hpp"
#include "qmap/oracle.hpp"
#include "qmap/qasm.hpp"
#include "qmap/traffic.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace qmap;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kCapacity = 3, kVerify = 4, kGuard = 5 };

struct ExitError {
    int code;
    std::string message;
};

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("qmap");
    logger->set_pattern("qmap: [%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::info);
    if (const char* env = std::getenv("QMAP_LOG")) {
        const std::string level = env;
        if (level == "error") spdlog::set_level(spdlog::level::err);
        else if (level == "info") spdlog::set_level(spdlog::level::info);
        else if (level == "debug") spdlog::set_level(spdlog::level::debug);
        else spdlog::warn("ignoring QMAP_LOG={} (expected error|info|debug)", level);
    }
}

void emit(const std::optional<std::string>& out, const std::string& body) {
    if (!out || out->empty() || *out == "-") {
        std::cout << body;
        return;
    }
    const fs::path p(*out);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    write_file_atomic(p, body);
    spdlog::info("wrote {}", p.string());
}

Circuit load_circuit(const std::string& path) {
    const std::string text = read_file(path);
    return parse_circuit(text, fs::path(path).stem().string());
}

struct ArchOptions {
    std::string spec;
    std::string file;
    std::uint64_t seed = 0;
    bool allow_full = false;
    std::string placement = "block";
    std::optional<int> dur_teleport;
    int lookahead = 0;

    void add_to(CLI::App& cmd) {
        auto* a = cmd.add_option("--arch", spec, "architecture shorthand CxQ:intra/inter, e.g. 8x8:alltoall/alltoall");
        auto* f = cmd.add_option("--arch-file", file, "architecture description file (key = value)");
        a->excludes(f);
        cmd.add_option("--seed", seed, "seed for random placement")->capture_default_str();
        cmd.add_flag("--allow-full", allow_full, "allow filling every slot (enables the exchange primitive)");
        cmd.add_option("--placement", placement, "initial placement")
            ->check(CLI::IsMember({"block", "random"}))
            ->capture_default_str();
        cmd.add_option("--dur-teleport", dur_teleport, "teleport duration in timesteps per link hop");
        cmd.add_option("--lookahead", lookahead, "routing lookahead window (0 = greedy)")->capture_default_str();
    }

    std::pair<Architecture, MapperConfig> resolve() const {
        if (spec.empty() == file.empty()) throw ExitError{kUsage, "exactly one of --arch / --arch-file is required"};
        MapperConfig cfg;
        std::optional<Architecture> arch;
        if (!file.empty()) {
            ArchDescription d = parse_arch_file(read_file(file));
            arch = d.arch;
            cfg.cost = d.cost;
        } else {
            arch = parse_arch_spec(spec);
        }
        cfg.seed = seed;
        cfg.allow_full = allow_full;
        cfg.placement = placement == "random" ? PlacementStrategy::random : PlacementStrategy::block;
        cfg.lookahead = lookahead;
        if (dur_teleport) cfg.cost.dur_teleport = *dur_teleport;
        cfg.validate();
        return {*arch, cfg};
    }
};

int exit_code_for(MapStatus s) {
    switch (s) {
        case MapStatus::ok: return kOk;
        case MapStatus::capacity: return kCapacity;
        case MapStatus::routing:
        case MapStatus::verification: return kVerify;
        case MapStatus::invalid: return kUsage;
    }
    return kUsage;
}

int run_map(const std::vector<std::string>& circuits, const ArchOptions& opts, const std::string& out_dir, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    auto [arch, cfg] = opts.resolve();

    std::vector<MapJob> batch;
    for (const std::string& path : circuits) batch.push_back(MapJob{load_circuit(path), arch, cfg});
    const std::vector<MapOutcome> results = qmap::omp::map_batch(batch, jobs);

    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].status != MapStatus::ok) {
            throw ExitError{exit_code_for(results[i].status), circuits[i] + ": " + results[i].error};
        }
    }

    // everything verified; only now touch the output directory
    fs::create_directories(out_dir);
    RunManifest manifest;
    manifest.seed = cfg.seed;
    manifest.arch = arch.spec_string();
    manifest.arch_digest = sha256_hex(manifest.arch);
    manifest.config = cfg.canonical();
    manifest.config_digest = sha256_hex(manifest.config);
    for (std::size_t i = 0; i < results.size(); ++i) {
        const MappedCircuit& m = *results[i].mapped;
        const fs::path out = fs::path(out_dir) / (fs::path(circuits[i]).stem().string() + ".mapped");
        write_file_atomic(out, write_mapped(m));
        manifest.inputs.push_back(digest_file(fs::absolute(circuits[i])));
        manifest.outputs.push_back(digest_file(out, out_dir));

        const Summary s = summarize(VerifiedMapping::check(m));
        manifest.metrics.push_back({m.circuit.name(), s.depth, s.swaps, s.teleports, s.comm_ratio});
        std::cout << out.string() << ": depth=" << s.depth << " gates=" << s.gates << " swaps=" << s.swaps
                  << " teleports=" << s.teleports << " comm_ratio=" << s.comm_ratio << "\n";
    }
    manifest.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_file_atomic(fs::path(out_dir) / "manifest.json", manifest_to_json(manifest));
    spdlog::info("mapped {} circuit(s) onto {} in {:.3f}s", circuits.size(), manifest.arch,
                 manifest.wall_clock_seconds);
    return kOk;
}

int run_analyze(const std::string& mapped_path, const std::string& out_dir) {
    MappedCircuit m = read_mapped(read_file(mapped_path));
    const VerifiedMapping vm = VerifiedMapping::check(std::move(m));
    const TrafficReport report = analyze(vm);
    const auto files = write_report(report, vm.mapped(), out_dir);
    for (const auto& f : files) spdlog::debug("wrote {}", f.string());
    const Summary& s = report.summary;
    std::cout << "circuit      " << vm.mapped().circuit.name() << "\n"
              << "architecture " << vm.mapped().arch.spec_string() << "\n"
              << "depth        " << s.depth << "\n"
              << "gates        " << s.gates << "\n"
              << "swaps        " << s.swaps << "\n"
              << "teleports    " << s.teleports << "\n"
              << "comm_ratio   " << s.comm_ratio << "\n"
              << "load_cov     " << s.load_cov << "\n";
    return kOk;
}

int run_oracle(const std::string& circuit_path, const ArchOptions& opts) {
    auto [arch, cfg] = opts.resolve();
    const Circuit c = load_circuit(circuit_path);
    const Placement start = initial_placement(c, arch, cfg);
    const int optimal = oracle_min_route(c, arch, start);
    const MappedCircuit m = map_circuit(c, arch, cfg, start);
    const VerificationReport r = verify_mapped(m);
    if (!r.ok) throw ExitError{kVerify, "heuristic mapping failed verification: " + r.violation};
    const auto heuristic = routing_counts(m.ops).total();

    char ratio[32];
    if (optimal == 0) {
        std::snprintf(ratio, sizeof ratio, "%s", heuristic == 0 ? "1.000" : "inf");
    } else {
        std::snprintf(ratio, sizeof ratio, "%.3f", static_cast<double>(heuristic) / optimal);
    }
    std::printf("%-24s %10s %8s %7s\n", "instance", "heuristic", "optimal", "ratio");
    std::printf("%-24s %10zu %8d %7s\n", c.name().c_str(), heuristic, optimal, ratio);
    return kOk;
}

int run_check_manifest(const std::string& path) {
    const RunManifest m = manifest_from_json(read_file(path));
    const auto problems = check_manifest(m, fs::path(path).parent_path());
    for (const auto& p : problems) std::cerr << path << ": " << p << "\n";
    if (!problems.empty()) throw ExitError{kVerify, "manifest check failed"};
    std::cout << path << ": ok\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();
    CLI::App app{"qmap: multi-core quantum circuit mapping and qubit traffic analysis"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a benchmark circuit");
    gen->require_subcommand(1);
    std::optional<std::string> gen_out;
    int qft_n = 0;
    bool qft_reverse = false;
    auto* qft = gen->add_subcommand("qft", "quantum Fourier transform");
    qft->add_option("--n", qft_n, "qubit count")->required();
    qft->add_flag("--reverse", qft_reverse, "append the bit-reversal SWAP stage");
    qft->add_option("--out", gen_out, "output file (default stdout)");
    int rnd_n = 0;
    int rnd_gates = 0;
    double rnd_p2 = 0.0;
    std::uint64_t rnd_seed = 0;
    auto* rnd = gen->add_subcommand("random", "seeded random circuit");
    rnd->add_option("--n", rnd_n, "qubit count")->required();
    rnd->add_option("--gates", rnd_gates, "gate count")->required();
    rnd->add_option("--p2", rnd_p2, "fraction of two-qubit gates")->required();
    rnd->add_option("--seed", rnd_seed, "random seed")->capture_default_str();
    rnd->add_option("--out", gen_out, "output file (default stdout)");

    // map
    auto* map = app.add_subcommand("map", "map circuits onto an architecture");
    std::vector<std::string> map_inputs;
    std::string map_out = ".";
    int jobs = 0;
    ArchOptions map_opts;
    map->add_option("circuits", map_inputs, "circuit files")->required();
    map_opts.add_to(*map);
    map->add_option("--out", map_out, "output directory")->capture_default_str();
    map->add_option("--jobs", jobs, "map independent circuits concurrently (0 = all threads)");

    // analyze
    auto* an = app.add_subcommand("analyze", "verify a mapped file and export its traffic analysis");
    std::string an_input;
    std::string an_out = ".";
    an->add_option("mapped", an_input, "mapped file")->required();
    an->add_option("--out", an_out, "output directory")->capture_default_str();

    // oracle
    auto* orc = app.add_subcommand("oracle", "compare heuristic routing against the exact optimum");
    std::string orc_input;
    ArchOptions orc_opts;
    orc->add_option("circuit", orc_input, "circuit file")->required();
    orc_opts.add_to(*orc);

    // check-manifest
    auto* chk = app.add_subcommand("check-manifest", "recompute the digests recorded in a run manifest");
    std::string chk_input;
    chk->add_option("manifest", chk_input, "manifest.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*qft) {
            const Circuit c = gen_qft(qft_n, qft_reverse);
            emit(gen_out, to_qasm(c));
            return kOk;
        }
        if (*rnd) {
            const Circuit c = gen_random(rnd_n, rnd_gates, rnd_p2, rnd_seed);
            emit(gen_out, to_qasm(c));
            return kOk;
        }
        if (*map) return run_map(map_inputs, map_opts, map_out, jobs);
        if (*an) return run_analyze(an_input, an_out);
        if (*orc) return run_oracle(orc_input, orc_opts);
        if (*chk) return run_check_manifest(chk_input);
    } catch (const ExitError& e) {
        spdlog::error("{}", e.message);
        return e.code;
    } catch (const ParseError& e) {
        spdlog::error("parse error: {}", e.what());
        return kParse;
    } catch (const MappedFormatError& e) {
        spdlog::error("mapped file: {}", e.what());
        return kParse;
    } catch (const InvalidCircuit& e) {
        // generator parameter errors
        spdlog::error("{}", e.what());
        return kUsage;
    } catch (const CapacityError& e) {
        spdlog::error("capacity: {}", e.what());
        return kCapacity;
    } catch (const RoutingError& e) {
        spdlog::error("routing: {}", e.what());
        return kVerify;
    } catch (const VerificationError& e) {
        spdlog::error("{}", e.what());
        return kVerify;
    } catch (const OracleGuardError& e) {
        spdlog::error("oracle: {}", e.what());
        return kGuard;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return kUsage;
    }
    return kUsage;
}
