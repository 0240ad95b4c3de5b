#ifndef CHIPFIRE_IO_HPP
#define CHIPFIRE_IO_HPP

#include <iosfwd>
#include <string>

#include "chipfire/core.hpp"
#include "chipfire/poset.hpp"
#include "chipfire/system.hpp"

namespace chipfire {

// ---- configuration text ----
//
// Sparse form: whitespace-separated "site:count" tokens.
// Compact line form: a digit string with the origin digit fenced by
// underscores, e.g. "10_3_01" for one chip at -2, three at the origin
// and one at +2 (single-digit counts only).

enum class ConfigKind { Line, Graph };

ChipConfig parse_config(const std::string& text, ConfigKind kind);

// Compact rendering; requires all counts <= 9. Covers at least
// min(support, 0)..max(support, 0).
std::string format_compact(const ChipConfig& cfg);
bool compact_representable(const ChipConfig& cfg);

// Sparse rendering "k1:c1 k2:c2 ..." in site order.
std::string format_sparse(const ChipConfig& cfg);
std::string format_sparse(const MoveVector& mv);

// Best-effort: compact when representable, sparse otherwise.
std::string format_config(const ChipConfig& cfg);

// ---- graph files ----
//
//   graph <vertex_count>
//   edge <u> <v> <multiplicity>     (repeatable; duplicates sum)
//   sink <v>                        (repeatable)
//   # comment
FiringSystem parse_graph_file(std::istream& in);
FiringSystem load_graph_file(const std::string& path);

// ---- poset emission ----

enum class PosetFormat { Text, Dot, Tikz };

// Deterministic document: nodes ranked by depth; text format lists
// elements and cover pairs sorted by label.
std::string emit_poset(const FinitePoset& p, PosetFormat format);

}  // namespace chipfire

#endif
