#ifndef PENTAGRID_GRID_HPP
#define PENTAGRID_GRID_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pentagrid/fibtree.hpp"

namespace pentagrid {

// Center, or node `node` of the tree in sector 1..5.
struct TileAddress {
  int sector = 0; // 0 = Center
  Natural node = 0;

  static TileAddress center() { return {}; }
  bool is_center() const noexcept { return sector == 0; }

  // "C" or "s:n"
  std::string str() const;
  static TileAddress parse(std::string_view text);

  friend bool operator==(const TileAddress &a, const TileAddress &b) {
    return a.sector == b.sector && a.node == b.node;
  }
  friend bool operator<(const TileAddress &a, const TileAddress &b) {
    return a.sector != b.sector ? a.sector < b.sector : a.node < b.node;
  }
};

inline int next_sector(int s) { return s % 5 + 1; }
inline int prev_sector(int s) { return (s + 3) % 5 + 1; }

// All five neighbours in the infinite grid, counterclockwise, slot 0 on
// the father (for Center: slot i is the root of sector i+1). Standard and
// best flavors only.
std::array<TileAddress, 5> neighbors_full(const TileAddress &a,
                                          const TreeFlavor &flavor);

inline constexpr int kExterior = -1;

struct Ball {
  std::size_t radius = 0;
  TreeFlavor flavor;
  // index 0 is Center, then sector by sector in node order
  std::vector<TileAddress> tiles;
  // neighbour index per slot, kExterior beyond the radius
  std::vector<std::array<int, 5>> adjacency;
  // slot of this tile as seen from the neighbour, kExterior likewise
  std::vector<std::array<int, 5>> back_slot;

  // tree level per tile, -1 for Center
  std::vector<int> levels;

  std::size_t size() const noexcept { return tiles.size(); }
  // nodes per sector
  std::size_t sector_size() const noexcept { return (tiles.size() - 1) / 5; }
  std::optional<int> index_of(const TileAddress &a) const;
  int level_of(int index) const { return levels.at(index); }
};

inline constexpr std::size_t kBallCap = 10;

Ball ball(std::size_t radius, const TreeFlavor &flavor = TreeFlavor::standard(),
          std::size_t cap = kBallCap);

} // namespace pentagrid

#endif
