#pragma once

#include "qmap/mapper.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qmap {

inline constexpr const char* kToolVersion = "0.1.0";

struct FileDigest {
    std::string path;  // inputs: as given; outputs: relative to the manifest directory
    std::string sha256;
};

struct RunMetrics {
    std::string circuit;
    int depth = 0;
    std::uint64_t swaps = 0;
    std::uint64_t teleports = 0;
    double comm_ratio = 0.0;
};

/// Provenance record written next to mapped outputs.
struct RunManifest {
    std::string tool_version = kToolVersion;
    std::uint64_t seed = 0;
    std::string arch;
    std::string arch_digest;
    std::string config;
    std::string config_digest;
    std::vector<FileDigest> inputs;
    std::vector<FileDigest> outputs;
    std::vector<RunMetrics> metrics;
    double wall_clock_seconds = 0.0;
};

FileDigest digest_file(const std::filesystem::path& path, const std::filesystem::path& relative_to = {});

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(std::string_view text);

/// Recomputes every digest; returns one message per mismatch (empty = intact).
std::vector<std::string> check_manifest(const RunManifest& m, const std::filesystem::path& manifest_dir);

}  // namespace qmap
