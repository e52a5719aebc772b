// Acceptance suite: one PASS/FAIL line per criterion.
// usage: acceptance <path-to-qmap> <work-dir>

#include "fixtures.hpp"

#include "qmap/export.hpp"
#include "qmap/mapped_io.hpp"
#include "qmap/oracle.hpp"
#include "qmap/traffic.hpp"
#include "qmap/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>

using namespace qmap;
using namespace qmap::testing;
namespace fs = std::filesystem;

namespace {

std::string g_qmap;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

int run(const std::string& args) {
    const std::string cmd = "\"" + g_qmap + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

const std::vector<std::string> kReportFiles = {"core_matrix.csv", "core_matrix_sym.csv", "per_qubit.csv", "raster.csv",
                                               "vertical.csv",    "summary.csv",         "report.json"};

// gen -> map -> analyze for the 64-qubit QFT on the 8x8 device
bool pipeline(const fs::path& dir, Outcome& o) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string d = "\"" + dir.string() + "\"";
    o.require(run("gen qft --n 64 --out " + d + "/qft64.qasm") == 0, "gen failed");
    o.require(run("map " + d + "/qft64.qasm --arch 8x8:alltoall/alltoall --allow-full --out " + d) == 0, "map failed");
    o.require(run("analyze " + d + "/qft64.mapped --out " + d + "/report") == 0, "analyze failed");
    return o.pass;
}

Outcome paper_experiment(const fs::path& work) {
    Outcome o;
    const fs::path dir = work / "qft64";
    const auto t0 = std::chrono::steady_clock::now();
    if (!pipeline(dir, o)) return o;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < 10.0, "pipeline took " + std::to_string(secs) + " s");

    const MappedCircuit m = read_mapped(read_file(dir / "qft64.mapped"));
    const VerificationReport vr = verify_mapped(m);
    o.require(vr.ok, "verifier: " + vr.violation);
    o.require(m.circuit.size() == 2080, "mapped circuit is not QFT(64)");

    const auto report = nlohmann::json::parse(read_file(dir / "report" / "report.json"));
    const auto& rows = report.at("raster").at("rows");
    o.require(rows.size() == 64, "raster rows != 64");
    for (const auto& r : rows) o.require(r.get<std::string>().size() == static_cast<std::size_t>(m.depth), "raster row length");
    const auto raster = lines(read_file(dir / "report" / "raster.csv"));
    o.require(raster.size() == 1 + static_cast<std::size_t>(m.depth) * 64, "raster.csv size");

    const auto matrix = lines(read_file(dir / "report" / "core_matrix.csv"));
    o.require(matrix.size() == 1 + 64, "core matrix is not 8x8");
    std::uint64_t total = 0;
    for (std::size_t i = 1; i < matrix.size(); ++i) {
        int src = 0, dst = 0;
        unsigned long long count = 0;
        o.require(std::sscanf(matrix[i].c_str(), "%d,%d,%llu", &src, &dst, &count) == 3, "core matrix row");
        if (src == dst) o.require(count == 0, "nonzero diagonal");
        total += count;
    }
    o.require(total == routing_counts(m.ops).teleports, "matrix total != teleports");
    o.require(total > 0, "no inter-core traffic");

    const auto per_qubit = lines(read_file(dir / "report" / "per_qubit.csv"));
    o.require(per_qubit.size() == 1 + 64, "per-qubit rows != 64");
    if (o.pass) o.detail = "depth " + std::to_string(m.depth) + ", " + std::to_string(total) + " teleports, " +
                           std::to_string(secs).substr(0, 5) + " s";
    return o;
}

Outcome adjacency() {
    Outcome o;
    constexpr int kInstances = 600;
    std::size_t two_qubit_ops = 0;
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
        const Instance in = random_instance(seed + 1'000'000);
        const MappedCircuit m = map_circuit(in.circuit, in.arch, in.config);
        for (const TimedOp& op : m.ops) {
            if (op.kind != OpKind::gate || op.arity() != 2) continue;
            ++two_qubit_ops;
            o.require(in.arch.core_of(op.qubits[0]) == in.arch.core_of(op.qubits[1]),
                      "cross-core gate in " + in.describe());
            o.require(in.arch.are_adjacent(op.qubits[0], op.qubits[1]), "non-adjacent gate in " + in.describe());
        }
        const VerificationReport vr = verify_mapped(m);
        o.require(vr.ok, in.describe() + ": " + vr.violation);
    }
    if (o.pass) o.detail = std::to_string(kInstances) + " instances, " + std::to_string(two_qubit_ops) + " two-qubit ops";
    return o;
}

Outcome oracle_dominance() {
    Outcome o;
    const std::pair<Instance, int> fixtures[] = {{two_by_two_cnot(), 1}, {line_of_four_cnot(), 2}};
    for (const auto& [in, expected] : fixtures) {
        const MappedCircuit m = map_circuit(in.circuit, in.arch, in.config);
        const auto h = routing_counts(m.ops).total();
        const int best = oracle_min_route(in.circuit, in.arch, m.initial);
        o.require(verify_mapped(m).ok, "fixture does not verify");
        o.require(best == expected, in.describe() + ": optimum " + std::to_string(best));
        o.require(static_cast<int>(h) == best, in.describe() + ": heuristic " + std::to_string(h) + " vs optimum " +
                                                   std::to_string(best));
    }
    InstanceLimits lim;
    lim.max_physical = kOracleMaxPhysical;
    lim.max_gates = kOracleMaxGates;
    int compared = 0;
    int optimal = 0;
    for (std::uint64_t seed = 0; compared < 100; ++seed) {
        const Instance in = random_instance(seed + 2'000'000, lim);
        if (in.circuit.size() > static_cast<std::size_t>(kOracleMaxGates)) continue;
        const MappedCircuit m = map_circuit(in.circuit, in.arch, in.config);
        o.require(verify_mapped(m).ok, in.describe() + " does not verify");
        const auto h = static_cast<int>(routing_counts(m.ops).total());
        const int best = oracle_min_route(in.circuit, in.arch, m.initial);
        o.require(h >= best, in.describe() + ": heuristic below optimum");
        optimal += h == best;
        ++compared;
    }
    if (o.pass) o.detail = "fixtures 1/1 and 2/2, " + std::to_string(compared) + " instances (" +
                           std::to_string(optimal) + " optimal)";
    return o;
}

Outcome qft_structure() {
    Outcome o;
    for (int n = 1; n <= 128; ++n) {
        const CircuitStats s = circuit_stats(gen_qft(n));
        o.require(s.total == static_cast<std::size_t>(n + n * (n - 1) / 2), "gate count at n=" + std::to_string(n));
        o.require(s.two_qubit == static_cast<std::size_t>(n * (n - 1) / 2), "two-qubit count at n=" + std::to_string(n));
    }
    const CircuitStats s64 = circuit_stats(gen_qft(64));
    o.require(s64.total == 2080 && s64.two_qubit == 2016, "QFT(64) totals");
    if (o.pass) o.detail = "n = 1..128; n=64: 2080 gates, 2016 two-qubit";
    return o;
}

Outcome projection() {
    Outcome o;
    const std::uint64_t bps = readout_projection(1'000'000, CostModel{});
    o.require(bps == 1'000'000'000'000ULL, "projection " + std::to_string(bps));
    if (o.pass) o.detail = "10^6 qubits x 10^6 b/s = " + std::to_string(bps) + " b/s";
    return o;
}

Outcome conservation() {
    Outcome o;
    constexpr int kInstances = 300;
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
        const Instance in = random_instance(seed + 3'000'000);
        const VerifiedMapping vm = VerifiedMapping::check(map_circuit(in.circuit, in.arch, in.config));
        const MappedCircuit& m = vm.mapped();
        const TrafficReport r = analyze(vm);
        const std::uint64_t teleports = routing_counts(m.ops).teleports;
        o.require(r.core_matrix.total() == teleports, "matrix total in " + in.describe());
        std::uint64_t per = 0;
        for (const QubitLoad& l : r.per_qubit) per += l.teleports;
        o.require(per == teleports, "per-qubit teleports in " + in.describe());
        for (int t = 0; t < m.depth; ++t) {
            int compute = 0, communicate = 0;
            for (const TimedOp& op : m.ops) {
                if (t < op.timestep || t >= op.end()) continue;
                if (op.is_routing()) communicate += 2;
                else compute += op.arity();
            }
            int c = 0, x = 0;
            for (int p = 0; p < m.arch.n_physical(); ++p) {
                c += r.raster.at(t, p) == Activity::compute;
                x += r.raster.at(t, p) == Activity::communicate;
            }
            o.require(c == compute && x == communicate, "raster accounting in " + in.describe());
        }
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 2 + static_cast<int>(seed % 20);
        const Architecture a = Architecture::build(1, n, IntraTopology::all_to_all, InterTopology::all_to_all);
        const Summary s = summarize(VerifiedMapping::check(map_circuit(gen_random(n, 80, 0.6, seed), a, MapperConfig{})));
        o.require(s.comm_ratio == 0.0, "single-core comm_ratio");
    }
    if (o.pass) o.detail = std::to_string(kInstances) + " mappings + 50 single-core runs";
    return o;
}

Outcome determinism(const fs::path& work) {
    Outcome o;
    const fs::path a = work / "det_a";
    const fs::path b = work / "det_b";
    for (const fs::path& dir : {a, b}) {
        if (!pipeline(dir, o)) return o;
        const std::string d = "\"" + dir.string() + "\"";
        o.require(run("gen random --n 20 --gates 300 --p2 0.5 --seed 11 --out " + d + "/rnd.qasm") == 0, "gen random");
        o.require(run("map " + d + "/rnd.qasm --arch 4x6:line/ring --placement random --seed 5 --out " + d) == 0,
                  "map random");
        o.require(run("analyze " + d + "/rnd.mapped --out " + d + "/rnd_report") == 0, "analyze random");
    }
    std::vector<fs::path> files = {"qft64.qasm", "qft64.mapped", "rnd.qasm", "rnd.mapped"};
    for (const std::string& f : kReportFiles) {
        files.push_back(fs::path("report") / f);
        files.push_back(fs::path("rnd_report") / f);
    }
    for (const fs::path& f : files) {
        o.require(fs::exists(a / f) && read_file(a / f) == read_file(b / f), "differs: " + f.string());
    }
    if (o.pass) o.detail = std::to_string(files.size()) + " files byte-identical across two runs";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: %s <qmap> <work-dir>\n", argv[0]);
        return 2;
    }
    g_qmap = argv[1];
    const fs::path work = argv[2];
    fs::create_directories(work);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"paper-experiment-qft64-8x8", [&] { return paper_experiment(work); }},
        {"adjacency-constraint", adjacency},
        {"oracle-dominance", oracle_dominance},
        {"qft-structure", qft_structure},
        {"vertical-projection", projection},
        {"conservation-suite", conservation},
        {"determinism", [&] { return determinism(work); }},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %-28s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
