#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "topo/instance.hpp"

namespace topo {

/// Malformed instance file (bad syntax, duplicate/out-of-range ids,
/// non-finite coordinates, wrong node count). The message carries the
/// offending line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Line-oriented text format:
//   n <count>
//   source <id>            (optional)
//   <id> <x> <y>           (one line per node, ids 0..n-1)
// Lines starting with '#' and blank lines are ignored.

Instance read_instance(std::istream& in);
void write_instance(std::ostream& out, const Instance& inst);

/// File wrappers; throw std::runtime_error when the file cannot be opened.
Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& inst);

/// FNV-1a over the coordinate bytes in node order; logged by the CLI so a
/// generated instance can be recognized later.
std::uint64_t position_checksum(const Instance& inst);

}  // namespace topo
