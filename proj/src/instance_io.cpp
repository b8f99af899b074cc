#include "topo/instance_io.hpp"

#include <cctype>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace topo {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ParseError("instance file, line " + std::to_string(line_no) + ": " + what);
}

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace

Instance read_instance(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    std::size_t n = 0;
    bool have_n = false;
    std::optional<NodeId> source;
    std::vector<Point> points;
    std::vector<bool> seen;
    std::size_t nodes_read = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line)) continue;
        std::istringstream ls(line);

        if (!have_n) {
            std::string tag;
            long long count = -1;
            if (!(ls >> tag >> count) || tag != "n" || count < 1) {
                fail(line_no, "expected 'n <count>' header");
            }
            n = static_cast<std::size_t>(count);
            have_n = true;
            points.resize(n);
            seen.assign(n, false);
            continue;
        }

        std::string first;
        ls >> first;
        if (first == "source") {
            if (nodes_read > 0 || source) fail(line_no, "misplaced 'source' line");
            long long s = -1;
            if (!(ls >> s) || s < 0 || static_cast<std::size_t>(s) >= n) {
                fail(line_no, "source id out of range");
            }
            source = static_cast<NodeId>(s);
            continue;
        }

        long long id = -1;
        double x = 0.0, y = 0.0;
        std::istringstream node_ls(line);
        if (!(node_ls >> id >> x >> y)) fail(line_no, "expected '<id> <x> <y>'");
        std::string extra;
        if (node_ls >> extra) fail(line_no, "trailing tokens after coordinates");
        if (id < 0 || static_cast<std::size_t>(id) >= n) {
            fail(line_no, "node id " + std::to_string(id) + " out of range [0, " +
                              std::to_string(n) + ")");
        }
        if (seen[static_cast<std::size_t>(id)]) {
            fail(line_no, "duplicate node id " + std::to_string(id));
        }
        if (!std::isfinite(x) || !std::isfinite(y)) fail(line_no, "non-finite coordinate");
        seen[static_cast<std::size_t>(id)] = true;
        points[static_cast<std::size_t>(id)] = {x, y};
        ++nodes_read;
    }

    if (!have_n) throw ParseError("instance file: missing 'n <count>' header");
    if (nodes_read != n) {
        throw ParseError("instance file: expected " + std::to_string(n) + " nodes, got " +
                         std::to_string(nodes_read));
    }
    try {
        return Instance(points, source);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("instance file: ") + e.what());
    }
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << "n " << inst.size() << "\n";
    if (inst.source()) out << "source " << *inst.source() << "\n";
    char buf[64];
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const Point p = inst.point(static_cast<NodeId>(i));
        // %.17g round-trips doubles exactly
        std::snprintf(buf, sizeof(buf), "%zu %.17g %.17g", i, p.x, p.y);
        out << buf << "\n";
    }
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return read_instance(in);
}

void save_instance(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    write_instance(out, inst);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::uint64_t position_checksum(const Instance& inst) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](double v) {
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &v, sizeof(double));
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
    };
    for (std::size_t i = 0; i < inst.size(); ++i) {
        mix(inst.xs()[i]);
        mix(inst.ys()[i]);
    }
    return h;
}

}  // namespace topo
