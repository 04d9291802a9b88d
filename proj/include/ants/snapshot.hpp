#pragma once

#include <iosfwd>
#include <string>

#include "ants/engine.hpp"

namespace ants {

/// Line-oriented text snapshot of a universe:
///   ANTSNAP 1
///   <rule letters>
///   <time>
///   <target.x> <target.y> <heading letter>
///   <x> <y> <state> <visited flag>      (one line per tracked cell)
/// Cell lines are sorted by (y, x), so saving is deterministic and the
/// save/load round trip is byte-identical.
void save_snapshot(const Universe& u, std::ostream& out);
Universe load_snapshot(std::istream& in);

std::string snapshot_to_string(const Universe& u);
Universe snapshot_from_string(const std::string& text);

void save_snapshot_file(const Universe& u, const std::string& path);
Universe load_snapshot_file(const std::string& path);

}  // namespace ants
