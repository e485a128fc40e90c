#ifndef PENTAGRID_TILINGS_HPP
#define PENTAGRID_TILINGS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pentagrid/grid.hpp"

namespace pentagrid {

// Five side labels read counterclockwise, compared up to rotation.
struct Assortment {
  std::array<char, 5> labels{};

  // five characters from 1..5
  static Assortment parse(std::string_view word);
  std::string str() const;

  std::vector<Assortment> rotations() const; // distinct, sorted
  Assortment canonical() const;              // least rotation
  Assortment mirror() const;                 // read clockwise

  auto operator<=>(const Assortment &) const = default;
};

inline constexpr std::size_t kTilingCap = 6;

// Labelings of ball(depth) that extend to ball(lookahead), every shared
// side matched; boundary sides of ball(lookahead) are free. With
// fix_center the central tile keeps its least rotation.
Natural count_extendable(const Assortment &a, std::size_t depth,
                         std::size_t lookahead, bool fix_center);

// Partial tilings of ball(depth) counted up to rotation about the centre
// and extendable one level further; a word and its mirror image are one
// assortment.
Natural enumerate(const Assortment &a, std::size_t depth,
                  std::size_t cap = kTilingCap);

enum class Outcome { no_solution, finite, growing, inconclusive };

std::string to_string(Outcome o);

struct EnumerationOutcome {
  Outcome kind = Outcome::inconclusive;
  std::vector<Natural> counts; // depth 0, 1, ...
  std::size_t depth = 0;       // first zero (no_solution) or stable from (finite)
  Natural count = 0;           // finite
};

EnumerationOutcome classify_assortment(const Assortment &a, std::size_t max_depth,
                                       std::size_t cap = kTilingCap);

// Rotation offset per ball tile for one tiling of the ball: tile t shows
// labels[(k + offset) % 5] on slot k.
std::optional<std::vector<int>> find_tiling(const Assortment &a, const Ball &b);

} // namespace pentagrid

#endif
