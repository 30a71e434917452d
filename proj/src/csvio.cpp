#include "bbmfront/csvio.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "bbmfront/errors.hpp"

namespace bbmfront {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_table(const Table& table, const std::filesystem::path& path,
                 ArtifactFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    if (format == ArtifactFormat::csv) {
        for (std::size_t i = 0; i < table.header.size(); ++i)
            out << (i ? "," : "") << table.header[i];
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << '\n';
        }
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < row.size(); ++i) obj[table.header[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        out << arr.dump(1) << '\n';
    }
    if (!out) throw io_error("failed writing " + path.string());
}

Table tree_table(const BbmTree& tree, std::int64_t replica) {
    Table t;
    t.header = {"replica", "id", "parent_id", "birth_time", "final_time"};
    for (int j = 1; j <= tree.dim; ++j) t.header.push_back("x" + std::to_string(j));
    append_tree_rows(t, tree, replica);
    return t;
}

void append_tree_rows(Table& table, const BbmTree& tree, std::int64_t replica) {
    for (std::size_t i = 0; i < tree.node_count(); ++i) {
        const auto id = static_cast<std::int64_t>(i);
        std::vector<std::string> row{std::to_string(replica), std::to_string(id),
                                     std::to_string(tree.parent(id)),
                                     format_double(tree.birth_time(id)),
                                     format_double(tree.final_time(id))};
        for (double c : tree.final_position(id)) row.push_back(format_double(c));
        table.add_row(std::move(row));
    }
}

Table front_surface_table(const FrontSurface& surface) {
    Table t;
    t.header = {"s", "theta_index"};
    for (int j = 1; j <= surface.theta_dim; ++j) t.header.push_back("theta_" + std::to_string(j));
    t.header.push_back("height");
    for (std::size_t si = 0; si < surface.s_grid.size(); ++si) {
        for (std::size_t ti = 0; ti < surface.theta_count(); ++ti) {
            std::vector<std::string> row{format_double(surface.s_grid[si]), std::to_string(ti)};
            for (double c : surface.theta(ti)) row.push_back(format_double(c));
            row.push_back(format_double(surface.height(si, ti)));
            t.add_row(std::move(row));
        }
    }
    return t;
}

Table landscape_table(const std::vector<LandscapeEntry>& entries) {
    Table t;
    t.header = {"entry_index", "recentered_norm"};
    const int dim = entries.empty() ? 0 : entries.front().cluster.dim;
    for (int j = 1; j <= dim; ++j) t.header.push_back("dir_" + std::to_string(j));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::vector<std::string> row{std::to_string(i), format_double(entries[i].recentered_norm)};
        for (double c : entries[i].direction) row.push_back(format_double(c));
        t.add_row(std::move(row));
    }
    return t;
}

Table landscape_cluster_table(const std::vector<LandscapeEntry>& entries) {
    Table t;
    t.header = {"entry_index", "point_index"};
    const int dim = entries.empty() ? 0 : entries.front().cluster.dim;
    for (int j = 1; j <= dim; ++j) t.header.push_back("x" + std::to_string(j));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const PointCloud& c = entries[i].cluster;
        for (std::size_t p = 0; p < c.size(); ++p) {
            std::vector<std::string> row{std::to_string(i), std::to_string(p)};
            for (double x : c.point(p)) row.push_back(format_double(x));
            t.add_row(std::move(row));
        }
    }
    return t;
}

Table cluster_table(const PointCloud& cluster, const BranchingTimes& times,
                    std::int64_t replica) {
    Table t;
    t.header = {"replica", "point_index"};
    for (int j = 1; j <= cluster.dim; ++j) t.header.push_back("x" + std::to_string(j));
    t.header.push_back("source");
    t.header.push_back("branch_time");
    append_cluster_rows(t, cluster, times, replica);
    return t;
}

void append_cluster_rows(Table& table, const PointCloud& cluster, const BranchingTimes& times,
                         std::int64_t replica) {
    for (std::size_t p = 0; p < cluster.size(); ++p) {
        std::vector<std::string> row{std::to_string(replica), std::to_string(p)};
        for (double x : cluster.point(p)) row.push_back(format_double(x));
        const std::int64_t tag = cluster.tag[p];
        if (tag < 0) {
            row.push_back("origin");
            row.push_back(format_double(0.0));
        } else {
            row.push_back("cloud_" + std::to_string(tag));
            row.push_back(format_double(times.times[static_cast<std::size_t>(tag)]));
        }
        table.add_row(std::move(row));
    }
}

Table rho_table_header(std::size_t) {
    Table t;
    t.header = {"replica", "s", "rho", "argmax_sigma"};
    return t;
}

void append_rho_rows(Table& table, const RhoSample& sample, std::int64_t replica) {
    for (std::size_t i = 0; i < sample.s_grid.size(); ++i)
        table.add_row({std::to_string(replica), format_double(sample.s_grid[i]),
                       format_double(sample.rho[i]), format_double(sample.argmax_sigma[i])});
}

Table gr_table_table(const GrTable& table) {
    Table t;
    t.header = {"r", "x", "value", "stderr"};
    for (std::size_t ri = 0; ri < table.r_grid.size(); ++ri)
        for (std::size_t xi = 0; xi < table.x_grid.size(); ++xi)
            t.add_row({format_double(table.r_grid[ri]), format_double(table.x_grid[xi]),
                       format_double(table.cell(ri, xi)),
                       format_double(table.stderrs[ri * table.x_grid.size() + xi])});
    return t;
}

GrTable load_gr_table_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw io_error("empty G table file " + path.string());

    std::map<std::pair<double, double>, std::pair<double, double>> cells;
    std::set<double> rs, xs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double r, x, v, se;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r, &x, &v, &se) != 4)
            throw io_error("malformed G table row: " + line);
        cells[{r, x}] = {v, se};
        rs.insert(r);
        xs.insert(x);
    }
    GrTable table;
    table.r_grid.assign(rs.begin(), rs.end());
    table.x_grid.assign(xs.begin(), xs.end());
    table.values.assign(table.r_grid.size() * table.x_grid.size(), 0.0);
    table.stderrs.assign(table.values.size(), 0.0);
    for (std::size_t ri = 0; ri < table.r_grid.size(); ++ri)
        for (std::size_t xi = 0; xi < table.x_grid.size(); ++xi) {
            const auto it = cells.find({table.r_grid[ri], table.x_grid[xi]});
            if (it == cells.end()) throw io_error("G table file is not a full grid");
            table.values[ri * table.x_grid.size() + xi] = it->second.first;
            table.stderrs[ri * table.x_grid.size() + xi] = it->second.second;
        }
    // Rows whose cells are all analytic (stderr 0) sit beyond the feasible
    // range; recover the boundary for lookups.
    table.feasible_r_max = 0.0;
    for (std::size_t ri = 0; ri < table.r_grid.size(); ++ri)
        for (std::size_t xi = 0; xi < table.x_grid.size(); ++xi)
            if (table.stderrs[ri * table.x_grid.size() + xi] > 0.0)
                table.feasible_r_max = std::max(table.feasible_r_max, table.r_grid[ri]);
    return table;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string() + " for checksum");
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[65536];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const std::streamsize n = in.gcount();
        for (std::streamsize i = 0; i < n; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
        if (in.eof()) break;
    }
    return h;
}

void write_manifest(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& config,
                    const std::vector<ManifestArtifact>& artifacts) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json cfg;
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = std::move(cfg);
    nlohmann::ordered_json arts = nlohmann::ordered_json::array();
    for (const auto& a : artifacts) {
        nlohmann::ordered_json obj;
        obj["name"] = a.name;
        obj["bytes"] = a.bytes;
        char buf[24];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(a.checksum));
        obj["fnv1a64"] = buf;
        arts.push_back(std::move(obj));
    }
    j["artifacts"] = std::move(arts);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out << j.dump(1) << '\n';
    if (!out) throw io_error("failed writing " + path.string());
}

}  // namespace bbmfront
