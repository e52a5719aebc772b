#pragma once

#include "qmap/traffic.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qmap {

std::string core_matrix_csv(const CoreMatrix& m);
std::string per_qubit_csv(const std::vector<QubitLoad>& loads);
std::string raster_csv(const Raster& r);
std::string vertical_csv(const VerticalSeries& v);
std::string summary_csv(const Summary& s);

/// Structured aggregate of all analyses (pretty-printed JSON).
std::string report_json(const TrafficReport& r, const MappedCircuit& m);

/// Writes `content` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

/**
 * Writes core_matrix.csv, core_matrix_sym.csv, per_qubit.csv, raster.csv,
 * vertical.csv, summary.csv and report.json into `dir`. Returns the paths.
 */
std::vector<std::filesystem::path> write_report(const TrafficReport& r, const MappedCircuit& m,
                                                const std::filesystem::path& dir);

}  // namespace qmap
