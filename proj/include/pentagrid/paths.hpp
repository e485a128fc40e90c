#ifndef PENTAGRID_PATHS_HPP
#define PENTAGRID_PATHS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pentagrid/grid.hpp"

namespace pentagrid {

struct Path {
  std::vector<TileAddress> tiles;
  // tiles[0..lambda_end] run down the leftmost branch below the start
  std::size_t lambda_end = 0;
};

// Consecutive tiles share a side.
bool is_valid(const Path &p);
// Throws std::invalid_argument on an invalid path.
bool is_closed(const Path &p);

// Sector 1, start at node 2 (leftmost son of the root): down the leftmost
// branch n levels, across that level, back up the rightmost branch.
Path build_Pn(std::size_t n, std::size_t cap = kBallCap);

// Repeats the stretch T_{i+1}..T_j of the leftmost branch m more times and
// carries the rest of the path along by the matching tree translation.
Path pump(const Path &p, std::size_t i, std::size_t j, std::size_t m);

struct PumpingWitness {
  TileAddress start, end;
  bool closed = false;
  Path path;
};

PumpingWitness pumping_witness(std::size_t n, std::size_t k, std::size_t m);

struct PathDFA {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::map<std::pair<std::string, std::string>, std::string> delta;
  std::string start;
  std::set<std::string> accept;

  // Throws std::invalid_argument unless delta is total and closed.
  void validate() const;
  // {states, alphabet, delta: {state: {symbol: state}}, start, accept}
  static PathDFA from_json(const std::string &text);
};

struct DfaRun {
  bool accepted = false;
  std::vector<std::string> trace; // state before each tile
  std::string final_state;
  // first x < y on the leftmost branch with equal (symbol, state)
  std::optional<std::pair<std::size_t, std::size_t>> repeat;
};

DfaRun run_dfa(const PathDFA &d, const Path &p,
               const std::map<TileAddress, std::string> &symbols);

} // namespace pentagrid

#endif
