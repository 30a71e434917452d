#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bbmfront/bbm.hpp"
#include "bbmfront/cluster.hpp"
#include "bbmfront/front.hpp"
#include "bbmfront/rho.hpp"

namespace bbmfront {

enum class ArtifactFormat { csv, json };

// Shortest round-trip decimal representation; fixed formatting keeps
// re-runs byte-identical.
std::string format_double(double v);

// Column-labeled rows rendered as CSV (header + '.' decimals) or as a JSON
// array of objects with the same fields.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

void write_table(const Table& table, const std::filesystem::path& path, ArtifactFormat format);

Table tree_table(const BbmTree& tree, std::int64_t replica);
void append_tree_rows(Table& table, const BbmTree& tree, std::int64_t replica);

Table front_surface_table(const FrontSurface& surface);

Table landscape_table(const std::vector<LandscapeEntry>& entries);
Table landscape_cluster_table(const std::vector<LandscapeEntry>& entries);

Table cluster_table(const PointCloud& cluster, const BranchingTimes& times,
                    std::int64_t replica);
void append_cluster_rows(Table& table, const PointCloud& cluster, const BranchingTimes& times,
                         std::int64_t replica);

Table rho_table_header(std::size_t s_count);
void append_rho_rows(Table& table, const RhoSample& sample, std::int64_t replica);

Table gr_table_table(const GrTable& table);
GrTable load_gr_table_csv(const std::filesystem::path& path);

std::uint64_t fnv1a64_file(const std::filesystem::path& path);

// Run manifest: resolved configuration plus artifact checksums, written next
// to the artifacts as manifest.json.
struct ManifestArtifact {
    std::string name;
    std::uint64_t bytes = 0;
    std::uint64_t checksum = 0;
};

void write_manifest(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& config,
                    const std::vector<ManifestArtifact>& artifacts);

}  // namespace bbmfront
