#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pentagrid/geometry.hpp"
#include "pentagrid/paths.hpp"

using namespace pentagrid;

namespace {

std::vector<std::string> names(const Path &p) {
  std::vector<std::string> out;
  for (const auto &t : p.tiles)
    out.push_back(t.str());
  return out;
}

// consecutive tiles share a side in the drawing of ball(radius)
bool drawn_valid(const Path &p, std::size_t radius) {
  Ball b = ball(radius);
  auto adj = geometric_adjacency(b, layout(b));
  for (std::size_t x = 1; x < p.tiles.size(); ++x) {
    auto i = b.index_of(p.tiles[x - 1]), j = b.index_of(p.tiles[x]);
    if (!i || !j)
      return false;
    if (std::find(adj[*i].begin(), adj[*i].end(), *j) == adj[*i].end())
      return false;
  }
  return true;
}

std::map<TileAddress, std::string> status_symbols(const Path &p) {
  std::map<TileAddress, std::string> out;
  for (const auto &t : p.tiles)
    out[t] = status(t.node, TreeFlavor::standard()) == NodeKind::two ? "2" : "3";
  return out;
}

const char *kTwoState = R"({
  "states": ["even", "odd"],
  "alphabet": ["2", "3"],
  "delta": {"even": {"2": "odd", "3": "even"}, "odd": {"2": "even", "3": "odd"}},
  "start": "even",
  "accept": ["even"]
})";

} // namespace

TEST_CASE("P_1") {
  auto p = build_Pn(1);
  CHECK(names(p) == std::vector<std::string>{"1:2", "1:5", "1:2", "1:6", "1:2"});
  CHECK(p.lambda_end == 1);
  CHECK(is_closed(p));
}

TEST_CASE("P_n is a closed walk for n = 1..8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto p = build_Pn(n);
    CAPTURE(n);
    CHECK(is_valid(p));
    CHECK(is_closed(p));
    CHECK(p.lambda_end == n);
    CHECK(p.tiles.front() == TileAddress{1, 2});
    if (n <= 5)
      CHECK(drawn_valid(p, n + 2));
  }
  CHECK_THROWS_AS(build_Pn(0), std::out_of_range);
  CHECK_THROWS_AS(build_Pn(11), std::out_of_range);
}

TEST_CASE("pump") {
  auto p = build_Pn(4);
  CHECK(names(pump(p, 0, 2, 0)) == names(p));
  auto q = pump(p, 1, 3, 2);
  CHECK(is_valid(q));
  CHECK(q.lambda_end == 4 + 4);
  CHECK(q.tiles.size() == p.tiles.size() + 4);
  // prefix through T_j is kept
  for (std::size_t x = 0; x <= 3; ++x)
    CHECK(q.tiles[x] == p.tiles[x]);
  CHECK_THROWS_AS(pump(p, 2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(pump(p, 0, 5, 1), std::invalid_argument);
  CHECK(drawn_valid(pump(build_Pn(2), 0, 1, 2), 7));
}

TEST_CASE("pumping witnesses are open") {
  for (std::size_t n : {6, 8})
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t m = 1; m <= 3; ++m) {
        auto w = pumping_witness(n, k, m);
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(m);
        CHECK(is_valid(w.path));
        CHECK_FALSE(w.closed);
        CHECK(w.start == TileAddress{1, 2});
        CHECK(w.end != w.start);
      }
  auto w = pumping_witness(1, 1, 1);
  CHECK(w.end.str() == "1:5");
  CHECK_THROWS(pumping_witness(3, 4, 1));
  CHECK_THROWS(pumping_witness(3, 0, 1));
}

TEST_CASE("an invalid path is not judged") {
  Path p;
  p.tiles = {TileAddress{1, 2}, TileAddress{1, 13}};
  CHECK_FALSE(is_valid(p));
  CHECK_THROWS_AS(is_closed(p), std::invalid_argument);
}

TEST_CASE("automaton runs") {
  auto d = PathDFA::from_json(kTwoState);
  auto p = build_Pn(5);
  auto run = run_dfa(d, p, status_symbols(p));
  CHECK(run.trace.size() == p.tiles.size());
  CHECK(run.trace.front() == "even");
  // parity of 2-nodes read
  std::size_t twos = 0;
  for (const auto &t : p.tiles)
    twos += status(t.node, TreeFlavor::standard()) == NodeKind::two;
  CHECK(run.final_state == (twos % 2 ? "odd" : "even"));
  CHECK(run.accepted == (twos % 2 == 0));
  // 6 tiles on the leftmost branch, 4 (symbol, state) pairs
  REQUIRE(run.repeat.has_value());
  CHECK(run.repeat->first < run.repeat->second);
  CHECK(run.repeat->second <= p.lambda_end);

  Path single;
  single.tiles = {TileAddress{1, 2}};
  auto one = run_dfa(d, single, status_symbols(single));
  CHECK(one.trace.size() == 1);
  CHECK(one.final_state == "odd");
  CHECK_FALSE(one.accepted);
  CHECK_THROWS(run_dfa(d, p, {}));
}

TEST_CASE("malformed automata are rejected") {
  CHECK_THROWS_AS(PathDFA::from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(PathDFA::from_json(R"({"states": ["s"], "alphabet": ["2"],
    "delta": {"s": {}}, "start": "s", "accept": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(PathDFA::from_json(R"({"states": ["s"], "alphabet": ["2"],
    "delta": {"s": {"2": "t"}}, "start": "s", "accept": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(PathDFA::from_json(R"({"states": ["s"], "alphabet": ["2"],
    "delta": {"s": {"2": "s"}}, "start": "u", "accept": []})"),
                  std::invalid_argument);
}
