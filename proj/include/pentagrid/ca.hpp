#ifndef PENTAGRID_CA_HPP
#define PENTAGRID_CA_HPP

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pentagrid/grid.hpp"

namespace pentagrid {

using State = std::string;

// (fa, n1, n2, n3, n4, old)
using Neighborhood = std::array<State, 6>;

struct RuleTable {
  std::map<Neighborhood, State> rules;

  std::size_t size() const noexcept { return rules.size(); }
  const State *find(const Neighborhood &key) const;
};

struct RuleParseError : std::runtime_error {
  RuleParseError(std::size_t line, std::size_t column, const std::string &what);
  std::size_t line, column;
};

// One rule per line: "fa n1 n2 n3 n4 old -> new"; '#' starts a comment.
RuleTable parse_rules(std::string_view text);
std::string format_rules(const RuleTable &table);

struct Configuration {
  std::shared_ptr<const Ball> ball;
  std::vector<State> states; // per ball tile
  State quiescent = "Q";

  Configuration() = default;
  Configuration(std::shared_ptr<const Ball> b, State q);

  const State &at(const TileAddress &a) const;
  void set(const TileAddress &a, State s);

  bool operator==(const Configuration &o) const {
    return states == o.states && quiescent == o.quiescent;
  }
};

struct MissingRule : std::runtime_error {
  MissingRule(const TileAddress &tile, const Neighborhood &key);
  TileAddress tile;
  Neighborhood key;
};

// The neighbourhood a sector tile reads; beyond the ball reads quiescent.
Neighborhood neighborhood(const Configuration &c, int tile);

// Synchronous update. `order` fixes the evaluation order of the tiles and
// must not change the result.
Configuration step(const Configuration &c, const RuleTable &r,
                   const std::vector<int> *order = nullptr);

std::vector<Configuration> run(const Configuration &c0, const RuleTable &r,
                               std::size_t steps);

} // namespace pentagrid

#endif
