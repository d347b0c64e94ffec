#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modbound/graph.hpp"
#include "modbound/matching.hpp"
#include "modbound/modularity.hpp"

namespace modbound {

struct EdgeListData {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    bool had_header = false;
};

/// Reads "u v" pairs, one per line, 0-indexed. Lines starting with '#' are
/// ignored. An optional "n <count>" header pins the vertex count; otherwise
/// n = max index + 1.
EdgeListData read_edge_list(const std::string& path);

void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<std::string>& comments = {});

/// Partition file: one "vertex part" pair per line.
void write_partition(const std::string& path, const Partition& p);
Partition read_partition(const std::string& path, int n);

/// Matching dump: one "v w" pair per line plus a trailing
/// "# unmatched: ..." comment.
void write_matching(const std::string& path, const BandwidthMatching& m);
BandwidthMatching read_matching(const std::string& path, int n);

}  // namespace modbound
