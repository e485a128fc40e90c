#include "pentagrid/ca.hpp"

namespace pentagrid {

namespace {

std::string join(const Neighborhood &key) {
  std::string s;
  for (const auto &x : key)
    s += (s.empty() ? "" : " ") + x;
  return s;
}

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start)
      out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

} // namespace

const State *RuleTable::find(const Neighborhood &key) const {
  auto it = rules.find(key);
  return it == rules.end() ? nullptr : &it->second;
}

RuleParseError::RuleParseError(std::size_t l, std::size_t c, const std::string &what)
    : std::runtime_error("line " + std::to_string(l) + ", column " +
                         std::to_string(c) + ": " + what),
      line(l), column(c) {}

RuleTable parse_rules(std::string_view text) {
  RuleTable table;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    auto tokens = split(line);
    if (tokens.empty())
      continue;
    std::size_t arrow = 0;
    while (arrow < tokens.size() && tokens[arrow].text != "->" &&
           tokens[arrow].text != "→")
      ++arrow;
    if (arrow == tokens.size())
      throw RuleParseError(number, tokens.back().column, "missing \"->\"");
    if (arrow != 6)
      throw RuleParseError(number, tokens[arrow].column,
                           "expected 6 states before \"->\", found " +
                               std::to_string(arrow));
    if (tokens.size() != 8)
      throw RuleParseError(number,
                           tokens.size() > 8 ? tokens[8].column : tokens[arrow].column,
                           "expected exactly one state after \"->\"");
    Neighborhood key;
    for (int k = 0; k < 6; ++k)
      key[k] = tokens[k].text;
    const State &to = tokens[7].text;
    auto [it, fresh] = table.rules.emplace(key, to);
    if (!fresh && it->second != to)
      throw RuleParseError(number, tokens[7].column,
                           "conflicting rule for \"" + join(key) + "\": " +
                               it->second + " vs " + to);
  }
  return table;
}

std::string format_rules(const RuleTable &table) {
  std::string out;
  for (const auto &[key, to] : table.rules)
    out += join(key) + " -> " + to + "\n";
  return out;
}

Configuration::Configuration(std::shared_ptr<const Ball> b, State q)
    : ball(std::move(b)), states(ball->size(), q), quiescent(std::move(q)) {}

const State &Configuration::at(const TileAddress &a) const {
  auto i = ball->index_of(a);
  if (!i)
    throw std::out_of_range("configuration: " + a.str() + " is outside the ball");
  return states[*i];
}

void Configuration::set(const TileAddress &a, State s) {
  auto i = ball->index_of(a);
  if (!i)
    throw std::out_of_range("configuration: " + a.str() + " is outside the ball");
  states[*i] = std::move(s);
}

MissingRule::MissingRule(const TileAddress &t, const Neighborhood &k)
    : std::runtime_error("no rule for tile " + t.str() + " with neighbourhood \"" +
                         join(k) + "\""),
      tile(t), key(k) {}

Neighborhood neighborhood(const Configuration &c, int tile) {
  Neighborhood key;
  const auto &around = c.ball->adjacency[tile];
  for (int k = 0; k < 5; ++k)
    key[k] = around[k] == kExterior ? c.quiescent : c.states[around[k]];
  key[5] = c.states[tile];
  return key;
}

namespace {

State next_state(const Configuration &c, const RuleTable &r, int tile) {
  if (tile != 0) {
    Neighborhood key = neighborhood(c, tile);
    const State *to = r.find(key);
    if (!to)
      throw MissingRule(c.ball->tiles[tile], key);
    return *to;
  }
  // Center reads each of its five windows; they must agree.
  const auto &roots = c.ball->adjacency[0];
  const State *agreed = nullptr;
  for (int s = 0; s < 5; ++s) {
    Neighborhood key{c.quiescent};
    for (int k = 0; k < 4; ++k)
      key[k + 1] = c.states[roots[(s + k) % 5]];
    key[5] = c.states[0];
    const State *to = r.find(key);
    if (!to)
      throw MissingRule(TileAddress::center(), key);
    if (agreed && *agreed != *to)
      throw std::runtime_error("rules disagree at C: windows give " + *agreed +
                               " and " + *to);
    agreed = to;
  }
  return *agreed;
}

} // namespace

Configuration step(const Configuration &c, const RuleTable &r,
                   const std::vector<int> *order) {
  Configuration next = c;
  const int n = static_cast<int>(c.states.size());
  if (order) {
    if (order->size() != c.states.size())
      throw std::invalid_argument("step: evaluation order must list every tile once");
    for (int t : *order)
      next.states.at(t) = next_state(c, r, t);
  } else {
    for (int t = 0; t < n; ++t)
      next.states[t] = next_state(c, r, t);
  }
  return next;
}

std::vector<Configuration> run(const Configuration &c0, const RuleTable &r,
                               std::size_t steps) {
  std::vector<Configuration> trace{c0};
  for (std::size_t k = 0; k < steps; ++k)
    trace.push_back(step(trace.back(), r));
  return trace;
}

} // namespace pentagrid
