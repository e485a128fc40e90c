#ifndef PENTAGRID_FIBTREE_HPP
#define PENTAGRID_FIBTREE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pentagrid/fibcode.hpp"

namespace pentagrid {

enum class NodeKind { two = 2, three = 3 };

struct TreeFlavor {
  enum class Kind { standard, central, best, random };

  Kind kind = Kind::standard;
  std::uint64_t seed = 0;

  static TreeFlavor standard() { return {Kind::standard, 0}; }
  static TreeFlavor central() { return {Kind::central, 0}; }
  static TreeFlavor best() { return {Kind::best, 0}; }
  static TreeFlavor random(std::uint64_t seed) { return {Kind::random, seed}; }

  std::string name() const;
  // "standard", "central", "best", "random" (seed supplied separately)
  static TreeFlavor parse(std::string_view name, std::uint64_t seed = 0);

  bool operator==(const TreeFlavor &) const = default;
};

// Tree levels: level k holds the nodes first(k) .. last(k).
std::size_t level(const Natural &n);
Natural level_first(std::size_t k);
Natural level_last(std::size_t k);
Natural level_size(std::size_t k);

Natural continuator(const Natural &n);
Natural co_continuator(const Natural &n);

// standard, best and central; random is served by build_oracle only
NodeKind status(const Natural &n, const TreeFlavor &flavor);
std::optional<Natural> father(const Natural &n, const TreeFlavor &flavor);
std::vector<Natural> sons(const Natural &n, const TreeFlavor &flavor);

// Counterclockwise 5-tuple from the son rules of the standard and best
// trees. Border entries are passed through unresolved.
std::array<Natural, 5> neighbors(const Natural &n, const TreeFlavor &flavor);

// root first, n last
std::vector<Natural> path_to_root(const Natural &n, const TreeFlavor &flavor);

struct OracleNode {
  std::uint64_t number = 0;
  NodeKind kind = NodeKind::three;
  std::uint64_t father = 0; // 0 for the root
  std::vector<std::uint64_t> sons;
};

struct OracleTree {
  std::vector<std::vector<OracleNode>> levels;

  std::size_t size() const;
  // nullptr when n lies outside the materialized levels
  const OracleNode *find(std::uint64_t n) const;
};

inline constexpr std::size_t kOracleCap = 14;

// Breadth-first materialization from the son rules alone.
OracleTree build_oracle(const TreeFlavor &flavor, std::size_t levels,
                        std::size_t cap = kOracleCap);

// Son kinds for one node of the random flavor, left to right.
std::vector<NodeKind> random_rule(std::uint64_t seed, std::uint64_t node,
                                  NodeKind kind);

} // namespace pentagrid

#endif
