#pragma once

#include <filesystem>
#include <string>

#include "rcm/estimators.hpp"
#include "rcm/grid.hpp"
#include "rcm/sample.hpp"

namespace rcm {

// EstimateTable: CSV with header "input,estimate,stderr,n" plus a JSON
// metadata sidecar (same stem, .json extension).
void write_estimate_csv(const EstimateTable& table, const std::filesystem::path& csv_path);
void write_estimate_meta(const EstimateMeta& meta, const std::filesystem::path& json_path);

// GridFunction CSV: "index,x0[,x1..],value" with minimal-image coordinates.
void write_grid_csv(const GridFunction& g, const std::filesystem::path& path);

// GridFunction raw binary: little-endian header (u64 dimension, u64 cells
// per axis, f64 spacing), then the values as little-endian f64, row-major.
void write_grid_binary(const GridFunction& g, const std::filesystem::path& path);
GridFunction read_grid_binary(const std::filesystem::path& path);

// RcmSample export: points.csv (index,x0[,x1..]) and edges.csv (i,j).
void write_sample_csv(const RcmSample& s, const std::filesystem::path& points_path,
                      const std::filesystem::path& edges_path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace rcm
