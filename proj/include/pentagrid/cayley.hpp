#ifndef PENTAGRID_CAYLEY_HPP
#define PENTAGRID_CAYLEY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pentagrid/grid.hpp"

namespace pentagrid {

enum class Color : std::uint8_t { a, b, c, d };

// side colours, slot 0 on the father, counterclockwise
using ColorPattern = std::array<Color, 5>;

char to_char(Color c);
Color color_from_char(char c);
std::string to_string(const ColorPattern &p);
ColorPattern parse_pattern(std::string_view text);

// d x y x y up to rotation, {x, y} two of a, b, c
bool is_alpha_pattern(const ColorPattern &p);
// all 30 such patterns, lexicographic
const std::vector<ColorPattern> &alpha_patterns();

enum class Shade { white, black };

struct NodeTypeTag {
  int type = 0; // 1..5, slot of d plus one
  Shade shade = Shade::white;
};

// Throws std::invalid_argument unless exactly one side is d.
int node_type(const ColorPattern &p);
// black for 2-nodes of the standard tree
NodeTypeTag node_type_tag(const ColorPattern &p, const Natural &node);

struct Coloring {
  Ball ball;
  std::vector<std::optional<ColorPattern>> sides; // per ball tile

  const std::optional<ColorPattern> &at(const TileAddress &a) const;
};

// Center and the five roots; ball(0).
Coloring initial_coloring();

inline constexpr std::size_t kColoringCap = 10;

struct ExtendStats {
  std::size_t assignments = 0;
  std::size_t backjumps = 0;
};

// Colours ball(L) ring by ring, keeping the vertex condition and the son
// table. Throws std::runtime_error on a dead end.
Coloring extend_coloring(std::size_t levels, ExtendStats *stats = nullptr,
                         std::size_t cap = kColoringCap);

struct SideMismatch {
  int tile, slot, other, other_slot;
};
struct VertexDefect {
  // the (tile, slot) sides meeting at the vertex
  std::vector<std::pair<int, int>> sides;
};

struct ColoringReport {
  std::vector<SideMismatch> side_mismatches;
  std::vector<VertexDefect> vertex_defects;
  std::vector<int> non_alpha; // tile indices
  std::vector<int> uncolored;
  std::size_t vertices_checked = 0;

  bool ok() const {
    return side_mismatches.empty() && vertex_defects.empty() &&
           non_alpha.empty() && uncolored.empty();
  }
};

ColoringReport verify_coloring(const Coloring &c);

// One son-type entry of the table; 0 is a wildcard.
struct SonEntry {
  int type;
  Shade shade;
  std::vector<int> sons; // son types left to right, then the next node's first son
};

struct TableRow {
  int number;
  std::string pattern; // e.g. "5 4b 2"
  std::vector<SonEntry> entries;
  std::vector<int> successors;
};

const std::vector<TableRow> &son_table();

struct Fingerprint {
  int tile;
  int type;
  Shade shade;
  std::vector<int> sons;
  std::vector<int> rows; // table rows holding a matching entry
};

struct TableCheck {
  std::vector<Fingerprint> fingerprints; // every node below the last level
  std::vector<Fingerprint> outside;      // matching no entry
  std::set<int> rows_seen;
  bool ok() const { return outside.empty(); }
};

TableCheck check_son_table(const Coloring &c);

} // namespace pentagrid

#endif
