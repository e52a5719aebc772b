#include "qmap/manifest.hpp"

#include "qmap/digest.hpp"
#include "qmap/export.hpp"

#include <json.hpp>

namespace qmap {

using nlohmann::ordered_json;

FileDigest digest_file(const std::filesystem::path& path, const std::filesystem::path& relative_to) {
    const std::string shown = relative_to.empty() ? path.string() : path.lexically_relative(relative_to).string();
    return FileDigest{shown, sha256_hex(read_file(path))};
}

std::string manifest_to_json(const RunManifest& m) {
    ordered_json j;
    j["tool"] = "qmap";
    j["tool_version"] = m.tool_version;
    j["seed"] = m.seed;
    j["arch"] = m.arch;
    j["arch_digest"] = m.arch_digest;
    j["config"] = m.config;
    j["config_digest"] = m.config_digest;
    auto files = [](const std::vector<FileDigest>& v) {
        ordered_json a = ordered_json::array();
        for (const FileDigest& f : v) a.push_back({{"path", f.path}, {"sha256", f.sha256}});
        return a;
    };
    j["inputs"] = files(m.inputs);
    j["outputs"] = files(m.outputs);
    ordered_json metrics = ordered_json::array();
    for (const RunMetrics& r : m.metrics) {
        metrics.push_back({{"circuit", r.circuit},
                           {"depth", r.depth},
                           {"swaps", r.swaps},
                           {"teleports", r.teleports},
                           {"comm_ratio", r.comm_ratio}});
    }
    j["metrics"] = std::move(metrics);
    j["wall_clock_seconds"] = m.wall_clock_seconds;
    return j.dump(2) + "\n";
}

RunManifest manifest_from_json(std::string_view text) {
    const ordered_json j = ordered_json::parse(text);
    RunManifest m;
    m.tool_version = j.at("tool_version").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.arch = j.at("arch").get<std::string>();
    m.arch_digest = j.at("arch_digest").get<std::string>();
    m.config = j.at("config").get<std::string>();
    m.config_digest = j.at("config_digest").get<std::string>();
    for (const auto& f : j.at("inputs")) m.inputs.push_back({f.at("path"), f.at("sha256")});
    for (const auto& f : j.at("outputs")) m.outputs.push_back({f.at("path"), f.at("sha256")});
    for (const auto& r : j.at("metrics")) {
        m.metrics.push_back({r.at("circuit"), r.at("depth"), r.at("swaps"), r.at("teleports"), r.at("comm_ratio")});
    }
    m.wall_clock_seconds = j.at("wall_clock_seconds").get<double>();
    return m;
}

std::vector<std::string> check_manifest(const RunManifest& m, const std::filesystem::path& manifest_dir) {
    std::vector<std::string> problems;
    if (sha256_hex(m.arch) != m.arch_digest) problems.push_back("arch digest mismatch");
    if (sha256_hex(m.config) != m.config_digest) problems.push_back("config digest mismatch");
    auto check = [&](const FileDigest& f, const std::filesystem::path& base) {
        const std::filesystem::path p = base.empty() ? std::filesystem::path(f.path) : base / f.path;
        try {
            if (sha256_hex(read_file(p)) != f.sha256) problems.push_back("digest mismatch: " + f.path);
        } catch (const std::exception&) {
            problems.push_back("missing file: " + f.path);
        }
    };
    for (const FileDigest& f : m.inputs) check(f, {});
    for (const FileDigest& f : m.outputs) check(f, manifest_dir);
    return problems;
}

}  // namespace qmap
