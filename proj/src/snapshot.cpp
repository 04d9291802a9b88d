#include "ants/snapshot.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ants {

void save_snapshot(const Universe& u, std::ostream& out) {
    out << "ANTSNAP 1\n";
    out << u.rule().letters << "\n";
    out << u.time() << "\n";
    out << u.pose().target.x << " " << u.pose().target.y << " "
        << heading_letter(u.pose().heading) << "\n";
    std::vector<Cell> cells(u.visited_cells().begin(), u.visited_cells().end());
    for (const auto& [c, s] : u.switched_cells())
        if (!u.visited(c)) cells.push_back(c);
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
    for (const Cell& c : cells)
        out << c.x << " " << c.y << " " << u.state(c) << " " << (u.visited(c) ? 1 : 0) << "\n";
}

Universe load_snapshot(std::istream& in) {
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "ANTSNAP" || version != 1)
        throw std::runtime_error("not an ANTSNAP 1 snapshot");
    std::string letters;
    std::uint64_t time = 0;
    int px = 0, py = 0;
    char hc = 0;
    if (!(in >> letters >> time >> px >> py >> hc))
        throw std::runtime_error("truncated snapshot header");
    Universe u(parse_rule_string(letters));
    int x, y, s, v;
    while (in >> x >> y >> s >> v) {
        if (v != 0 && v != 1) throw std::runtime_error("bad visited flag in snapshot");
        u.set_state({x, y}, s);
        if (v) u.mark_visited({x, y});
    }
    if (!in.eof() && in.fail() && !in.bad()) {
        in.clear();
        std::string rest;
        std::getline(in, rest);
        if (rest.find_first_not_of(" \t\r\n") != std::string::npos)
            throw std::runtime_error("malformed cell line in snapshot");
    }
    u.restore({{px, py}, heading_from_letter(hc)}, time);
    return u;
}

std::string snapshot_to_string(const Universe& u) {
    std::ostringstream os;
    save_snapshot(u, os);
    return os.str();
}

Universe snapshot_from_string(const std::string& text) {
    std::istringstream is(text);
    return load_snapshot(is);
}

void save_snapshot_file(const Universe& u, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open snapshot file for writing: " + path);
    save_snapshot(u, f);
    if (!f) throw std::runtime_error("write failed: " + path);
}

Universe load_snapshot_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open snapshot file: " + path);
    return load_snapshot(f);
}

}  // namespace ants
