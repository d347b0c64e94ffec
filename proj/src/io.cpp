#include "modbound/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace modbound {

EdgeListData read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    EdgeListData data;
    int max_index = -1;
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        std::string first;
        ls >> first;
        if (first == "n") {
            if (!(ls >> data.n) || data.n < 0) throw std::runtime_error("bad header line in " + path);
            data.had_header = true;
            continue;
        }
        int u = 0, v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw std::runtime_error("bad edge line in " + path + ": " + line);
        }
        if (!(ls >> v)) throw std::runtime_error("bad edge line in " + path + ": " + line);
        data.edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    if (!data.had_header) data.n = max_index + 1;
    return data;
}

void write_edge_list(const std::string& path, const Graph& g, const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "n " << g.n() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_partition(const std::string& path, const Partition& p) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write partition: " + path);
    for (int v = 0; v < p.n(); ++v) out << v << " " << p.part_of[static_cast<std::size_t>(v)] << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

Partition read_partition(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open partition: " + path);
    Partition p;
    p.part_of.assign(static_cast<std::size_t>(n), -1);
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        int v = 0, part = 0;
        if (!(ls >> v >> part)) throw std::runtime_error("bad partition line: " + line);
        if (v < 0 || v >= n) throw std::runtime_error("partition vertex out of range");
        p.part_of[static_cast<std::size_t>(v)] = part;
        p.k = std::max(p.k, part + 1);
    }
    for (int v = 0; v < n; ++v)
        if (p.part_of[static_cast<std::size_t>(v)] < 0) throw std::runtime_error("partition misses a vertex");
    p.validate();
    return p;
}

void write_matching(const std::string& path, const BandwidthMatching& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matching: " + path);
    for (const auto& [v, w] : m.pairs) out << v << " " << w << "\n";
    out << "# unmatched:";
    for (int v : m.unmatched.members()) out << " " << v;
    out << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

BandwidthMatching read_matching(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matching: " + path);
    BandwidthMatching m;
    m.n = n;
    m.mate.assign(static_cast<std::size_t>(n), -1);
    m.unmatched = VertexSet(n);
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        int v = 0, w = 0;
        if (!(ls >> v >> w)) throw std::runtime_error("bad matching line: " + line);
        if (v < 0 || v >= n || w < 0 || w >= n || v == w) throw std::runtime_error("matching vertex out of range");
        if (m.mate[static_cast<std::size_t>(v)] >= 0 || m.mate[static_cast<std::size_t>(w)] >= 0)
            throw std::runtime_error("matching reuses a vertex");
        m.pairs.emplace_back(std::min(v, w), std::max(v, w));
        m.mate[static_cast<std::size_t>(v)] = w;
        m.mate[static_cast<std::size_t>(w)] = v;
        m.bandwidth_observed = std::max<std::int64_t>(m.bandwidth_observed, std::abs(v - w));
    }
    for (int v = 0; v < n; ++v)
        if (m.mate[static_cast<std::size_t>(v)] < 0) m.unmatched.insert(v);
    return m;
}

}  // namespace modbound
