#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "pentagrid/ca.hpp"

using namespace pentagrid;

namespace {

std::vector<Neighborhood> all_keys(const std::vector<State> &alphabet) {
  std::vector<Neighborhood> out;
  std::size_t n = alphabet.size(), total = 1;
  for (int k = 0; k < 6; ++k)
    total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    Neighborhood key;
    std::size_t c = code;
    for (int k = 0; k < 6; ++k, c /= n)
      key[k] = alphabet[c % n];
    out.push_back(key);
  }
  return out;
}

RuleTable identity_table() {
  RuleTable r;
  for (const auto &key : all_keys({"Q", "X"}))
    r.rules[key] = key[5];
  return r;
}

RuleTable infection_table() {
  RuleTable r;
  for (const auto &key : all_keys({"Q", "X"}))
    r.rules[key] = std::count(key.begin(), key.end(), "X") ? "X" : "Q";
  return r;
}

std::size_t count_x(const Configuration &c) {
  return std::count(c.states.begin(), c.states.end(), "X");
}

std::shared_ptr<const Ball> shared_ball(std::size_t radius) {
  return std::make_shared<const Ball>(ball(radius));
}

} // namespace

TEST_CASE("rule parsing") {
  auto r = parse_rules("# comment\n"
                       "Q Q Q Q Q Q -> Q\n"
                       "\n"
                       "X Q Q Q Q Q → X   # trailing\n");
  CHECK(r.size() == 2);
  REQUIRE(r.find({"X", "Q", "Q", "Q", "Q", "Q"}));
  CHECK(*r.find({"X", "Q", "Q", "Q", "Q", "Q"}) == "X");
  CHECK(r.find({"Q", "Q", "Q", "Q", "Q", "X"}) == nullptr);
  // a repeated identical rule is harmless
  CHECK(parse_rules("Q Q Q Q Q Q -> Q\nQ Q Q Q Q Q -> Q\n").size() == 1);
}

TEST_CASE("rule parse errors carry line and column") {
  try {
    parse_rules("Q Q Q Q Q Q -> Q\n\nQ Q Q Q Q -> Q\n");
    FAIL("accepted five states");
  } catch (const RuleParseError &e) {
    CHECK(e.line == 3);
    CHECK(e.column == 11);
    CHECK(std::string(e.what()).rfind("line 3, column 11:", 0) == 0);
  }
  try {
    parse_rules("Q Q Q Q Q Q -> Q\nQ Q Q Q Q Q -> X\n");
    FAIL("accepted a conflict");
  } catch (const RuleParseError &e) {
    CHECK(e.line == 2);
    CHECK(e.column == 16);
  }
  CHECK_THROWS_AS(parse_rules("Q Q Q Q Q Q Q\n"), RuleParseError);
  CHECK_THROWS_AS(parse_rules("Q Q Q Q Q Q -> X Y\n"), RuleParseError);
  CHECK_THROWS_AS(parse_rules("Q Q Q Q Q Q ->\n"), RuleParseError);
}

TEST_CASE("format and parse round trip") {
  auto r = identity_table();
  CHECK(r.size() == 64);
  auto again = parse_rules(format_rules(r));
  CHECK(again.rules == r.rules);
}

TEST_CASE("identity table leaves every configuration alone") {
  auto b = shared_ball(3);
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    Configuration c(b, "Q");
    for (auto &s : c.states)
      s = rng() % 2 ? "X" : "Q";
    c.states[0] = "Q";
    CHECK(step(c, identity_table()) == c);
  }
}

TEST_CASE("infection front on ball(3)") {
  Configuration c(shared_ball(3), "Q");
  c.set(TileAddress::center(), "X");
  auto trace = run(c, infection_table(), 3);
  REQUIRE(trace.size() == 4);
  std::vector<std::size_t> sizes;
  for (const auto &x : trace)
    sizes.push_back(count_x(x));
  CHECK(sizes == std::vector<std::size_t>{1, 6, 21, 61});
  CHECK(run(c, infection_table(), 0).size() == 1);
}

TEST_CASE("evaluation order does not matter") {
  auto b = shared_ball(3);
  std::mt19937 rng(6);
  Configuration c(b, "Q");
  for (std::size_t i = 1; i < c.states.size(); ++i)
    c.states[i] = rng() % 3 ? "Q" : "X";
  auto rules = infection_table();
  auto expected = step(c, rules);
  std::vector<int> order(c.states.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    order[i] = i;
  for (int t = 0; t < 5; ++t) {
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(step(c, rules, &order) == expected);
  }
  std::vector<int> short_order(order.begin(), order.end() - 1);
  CHECK_THROWS_AS(step(c, rules, &short_order), std::invalid_argument);
}

TEST_CASE("a tile only reads its neighbours") {
  // random table; keys with a quiescent father keep the old state so the
  // five windows at the Center agree
  std::mt19937 rng(7);
  RuleTable rules;
  for (const auto &key : all_keys({"Q", "X"}))
    rules.rules[key] = key[0] == "Q" ? key[5] : (rng() % 2 ? "X" : "Q");
  auto b = shared_ball(3);
  Configuration c(b, "Q");
  for (std::size_t i = 1; i < c.states.size(); ++i)
    c.states[i] = rng() % 2 ? "X" : "Q";
  auto before = step(c, rules);
  for (int trial = 0; trial < 50; ++trial) {
    int t = 1 + static_cast<int>(rng() % (c.states.size() - 1));
    int u = 1 + static_cast<int>(rng() % (c.states.size() - 1));
    const auto &around = b->adjacency[t];
    if (u == t || std::find(around.begin(), around.end(), u) != around.end())
      continue;
    Configuration d = c;
    d.states[u] = d.states[u] == "X" ? "Q" : "X";
    CHECK(step(d, rules).states[t] == before.states[t]);
  }
}

TEST_CASE("a missing rule names the tile") {
  Configuration c(shared_ball(1), "Q");
  c.set(TileAddress{2, 3}, "X");
  RuleTable only_quiet;
  only_quiet.rules[{"Q", "Q", "Q", "Q", "Q", "Q"}] = "Q";
  try {
    step(c, only_quiet);
    FAIL("step succeeded without rules");
  } catch (const MissingRule &e) {
    CHECK(e.tile.sector == 2);
    CHECK(std::string(e.what()).find("tile 2:") != std::string::npos);
  }
  CHECK_THROWS_AS(c.set(TileAddress{1, 100}, "X"), std::out_of_range);
}

TEST_CASE("Center windows must agree") {
  Configuration c(shared_ball(0), "Q");
  c.set(TileAddress{1, 1}, "X");
  RuleTable r = identity_table();
  // only the windows holding root 1 flip the Center
  r.rules[{"Q", "X", "Q", "Q", "Q", "Q"}] = "X";
  CHECK_THROWS_AS(step(c, r), std::runtime_error);
}
