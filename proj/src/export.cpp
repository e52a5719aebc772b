#include "qmap/export.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace qmap {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::string core_matrix_csv(const CoreMatrix& m) {
    std::string s = "src,dst,count\n";
    for (int i = 0; i < m.n_cores; ++i)
        for (int j = 0; j < m.n_cores; ++j)
            s += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(m.at(i, j)) + "\n";
    return s;
}

std::string per_qubit_csv(const std::vector<QubitLoad>& loads) {
    std::string s = "vqubit,teleports,intra_ops\n";
    for (std::size_t q = 0; q < loads.size(); ++q) {
        s += std::to_string(q) + "," + std::to_string(loads[q].teleports) + "," +
             std::to_string(loads[q].intra_ops) + "\n";
    }
    return s;
}

std::string raster_csv(const Raster& r) {
    std::string s = "timestep,pqubit,state\n";
    s.reserve(s.size() + r.cells.size() * 10);
    for (int t = 0; t < r.depth; ++t) {
        const std::string prefix = std::to_string(t) + ",";
        for (int p = 0; p < r.n_physical; ++p) {
            s += prefix;
            s += std::to_string(p);
            s += ',';
            s += activity_code(r.at(t, p));
            s += '\n';
        }
    }
    return s;
}

std::string vertical_csv(const VerticalSeries& v) {
    std::string s = "timestep,control_bits,readout_bps\n";
    for (std::size_t t = 0; t < v.control_bits.size(); ++t) {
        s += std::to_string(t) + "," + std::to_string(v.control_bits[t]) + "," +
             std::to_string(v.readout_bps[t]) + "\n";
    }
    return s;
}

std::string summary_csv(const Summary& s) {
    std::string out = "metric,value\n";
    out += "depth," + std::to_string(s.depth) + "\n";
    out += "gates," + std::to_string(s.gates) + "\n";
    out += "swaps," + std::to_string(s.swaps) + "\n";
    out += "teleports," + std::to_string(s.teleports) + "\n";
    out += "comm_ratio," + fmt_double(s.comm_ratio) + "\n";
    out += "load_cov," + fmt_double(s.load_cov) + "\n";
    return out;
}

std::string report_json(const TrafficReport& r, const MappedCircuit& m) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["architecture"] = m.arch.spec_string();
    j["circuit"] = m.circuit.name();
    j["config"] = m.config.canonical();
    j["summary"] = {
        {"depth", r.summary.depth},
        {"gates", r.summary.gates},
        {"swaps", r.summary.swaps},
        {"teleports", r.summary.teleports},
        {"comm_ratio", r.summary.comm_ratio},
        {"load_cov", r.summary.load_cov},
    };
    auto matrix = [](const CoreMatrix& cm) {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < cm.n_cores; ++i) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < cm.n_cores; ++k) row.push_back(cm.at(i, k));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["core_matrix"] = matrix(r.core_matrix);
    j["core_matrix_symmetric"] = matrix(r.core_matrix.symmetrized());
    ordered_json per = ordered_json::array();
    for (const QubitLoad& l : r.per_qubit) per.push_back({{"teleports", l.teleports}, {"intra_ops", l.intra_ops}});
    j["per_qubit"] = std::move(per);
    ordered_json raster = ordered_json::array();
    for (int p = 0; p < r.raster.n_physical; ++p) {
        std::string row(static_cast<std::size_t>(r.raster.depth), 'I');
        for (int t = 0; t < r.raster.depth; ++t) row[static_cast<std::size_t>(t)] = activity_code(r.raster.at(t, p));
        raster.push_back(std::move(row));
    }
    j["raster"] = {{"depth", r.raster.depth}, {"n_physical", r.raster.n_physical}, {"rows", std::move(raster)}};
    j["vertical"] = {
        {"control_bits", r.vertical.control_bits},
        {"readout_bps", r.vertical.readout_bps},
        {"peak_control_bits", r.vertical.peak_control_bits},
        {"peak_readout_bps", r.vertical.peak_readout_bps},
        {"readout_projection_1M_qubits_bps", readout_projection(1'000'000, m.config.cost)},
    };
    return j.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::filesystem::path> write_report(const TrafficReport& r, const MappedCircuit& m,
                                                const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    // render everything before touching the filesystem
    const std::vector<std::pair<std::string, std::string>> files = {
        {"core_matrix.csv", core_matrix_csv(r.core_matrix)},
        {"core_matrix_sym.csv", core_matrix_csv(r.core_matrix.symmetrized())},
        {"per_qubit.csv", per_qubit_csv(r.per_qubit)},
        {"raster.csv", raster_csv(r.raster)},
        {"vertical.csv", vertical_csv(r.vertical)},
        {"summary.csv", summary_csv(r.summary)},
        {"report.json", report_json(r, m)},
    };
    std::vector<std::filesystem::path> written;
    for (const auto& [name, body] : files) {
        write_file_atomic(dir / name, body);
        written.push_back(dir / name);
    }
    return written;
}

}  // namespace qmap
