#include "pentagrid/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace pentagrid {

namespace {

void check_address(const TileAddress &a) {
  if (a.is_center())
    return;
  if (a.sector < 1 || a.sector > 5)
    throw std::invalid_argument("tile address: sector must be 1..5, got " +
                                std::to_string(a.sector));
  if (a.node < 1)
    throw std::invalid_argument("tile address: node numbers start at 1");
}

// Standard-tree slots with border entries moved to the adjacent sector.
std::array<TileAddress, 5> resolve_standard(int s, const Natural &n) {
  const auto raw = neighbors(n, TreeFlavor::standard());
  const std::size_t k = level(n);
  const Natural first = level_first(k), last = level_last(k);
  std::array<TileAddress, 5> out;
  for (int slot = 0; slot < 5; ++slot) {
    const Natural &m = raw[slot];
    if (n == 1 && slot == 0) {
      out[slot] = TileAddress::center();
      continue;
    }
    if (m >= 1) {
      std::size_t km = level(m);
      if (km + 1 == k || km == k + 1) {
        out[slot] = {s, m};
        continue;
      }
    }
    if (k >= 1 && n == first && slot == 1)
      out[slot] = {prev_sector(s), level_last(k - 1)};
    else if (n == last)
      out[slot] = {next_sector(s), level_first(k + 1)};
    else
      throw std::logic_error("unresolved border slot at " +
                             TileAddress{s, n}.str());
  }
  return out;
}

} // namespace

std::string TileAddress::str() const {
  if (is_center())
    return "C";
  return std::to_string(sector) + ":" + node.str();
}

TileAddress TileAddress::parse(std::string_view text) {
  if (text == "C")
    return center();
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size())
    throw std::invalid_argument("tile address: expected \"C\" or \"s:n\", got \"" +
                                std::string(text) + "\"");
  auto digits = [&](std::string_view part) {
    if (!std::all_of(part.begin(), part.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("tile address: bad number \"" +
                                  std::string(part) + "\"");
    return part;
  };
  TileAddress a;
  auto sec = digits(text.substr(0, colon));
  if (sec.size() != 1)
    throw std::invalid_argument("tile address: sector must be 1..5");
  a.sector = sec[0] - '0';
  a.node = Natural(std::string(digits(text.substr(colon + 1))));
  check_address(a);
  return a;
}

std::array<TileAddress, 5> neighbors_full(const TileAddress &a,
                                          const TreeFlavor &flavor) {
  check_address(a);
  if (flavor.kind != TreeFlavor::Kind::standard &&
      flavor.kind != TreeFlavor::Kind::best)
    throw std::invalid_argument("neighbors_full: no rule for the " +
                                flavor.name() + " tree");
  if (a.is_center())
    return {TileAddress{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}};

  auto out = resolve_standard(a.sector, a.node);
  if (flavor.kind == TreeFlavor::Kind::best && a.node > 1) {
    TileAddress up{a.sector, *father(a.node, flavor)};
    auto it = std::find(out.begin(), out.end(), up);
    if (it == out.end())
      throw std::logic_error("best-tree father not adjacent to " + a.str());
    std::rotate(out.begin(), it, out.end());
  }
  return out;
}

std::optional<int> Ball::index_of(const TileAddress &a) const {
  if (a.is_center())
    return 0;
  if (a.sector < 1 || a.sector > 5 || a.node < 1 || a.node > sector_size())
    return std::nullopt;
  return 1 + static_cast<int>((a.sector - 1) * sector_size() +
                              (a.node - 1).convert_to<std::size_t>());
}

Ball ball(std::size_t radius, const TreeFlavor &flavor, std::size_t cap) {
  if (radius > cap)
    throw std::out_of_range("ball: radius " + std::to_string(radius) +
                            " exceeds the cap of " + std::to_string(cap));
  Ball b;
  b.radius = radius;
  b.flavor = flavor;
  const auto per = level_last(radius).convert_to<std::size_t>();

  b.tiles.reserve(1 + 5 * per);
  b.levels.reserve(1 + 5 * per);
  b.tiles.push_back(TileAddress::center());
  b.levels.push_back(-1);
  std::vector<int> node_level(per + 1);
  for (std::size_t k = 0, n = 1; k <= radius; ++k)
    for (; n <= level_last(k); ++n)
      node_level[n] = static_cast<int>(k);
  for (int s = 1; s <= 5; ++s)
    for (std::size_t n = 1; n <= per; ++n) {
      b.tiles.push_back({s, n});
      b.levels.push_back(node_level[n]);
    }

  b.adjacency.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto around = neighbors_full(b.tiles[i], flavor);
    for (int slot = 0; slot < 5; ++slot) {
      auto j = b.index_of(around[slot]);
      b.adjacency[i][slot] = j ? *j : kExterior;
    }
  }

  b.back_slot.assign(b.size(), {kExterior, kExterior, kExterior, kExterior,
                                kExterior});
  for (std::size_t i = 0; i < b.size(); ++i)
    for (int slot = 0; slot < 5; ++slot) {
      int j = b.adjacency[i][slot];
      if (j == kExterior)
        continue;
      const auto &back = b.adjacency[j];
      auto it = std::find(back.begin(), back.end(), static_cast<int>(i));
      if (it == back.end())
        throw std::logic_error("ball: asymmetric adjacency between " +
                               b.tiles[i].str() + " and " + b.tiles[j].str());
      b.back_slot[i][slot] = static_cast<int>(it - back.begin());
    }
  return b;
}

} // namespace pentagrid
