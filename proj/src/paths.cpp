#include "pentagrid/paths.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace pentagrid {

namespace {

const TreeFlavor kStd = TreeFlavor::standard();
constexpr int kSector = 1;
const Natural kStart = 2;

bool adjacent(const TileAddress &a, const TileAddress &b) {
  auto around = neighbors_full(a, kStd);
  return std::find(around.begin(), around.end(), b) != around.end();
}

Natural first_son(const Natural &n) { return sons(n, kStd).front(); }
Natural last_son(const Natural &n) { return sons(n, kStd).back(); }

// node x levels down the leftmost branch below the start
Natural lambda(std::size_t x) {
  Natural n = kStart;
  for (std::size_t i = 0; i < x; ++i)
    n = first_son(n);
  return n;
}

// tile between two consecutive nodes of one level
TileAddress bridge(const Natural &left, const Natural &right) {
  auto a = neighbors_full({kSector, left}, kStd);
  auto b = neighbors_full({kSector, right}, kStd);
  const std::size_t k = level(left);
  std::optional<TileAddress> below;
  for (const auto &x : a) {
    if (std::find(b.begin(), b.end(), x) == b.end() || x.is_center())
      continue;
    std::size_t kx = level(x.node);
    if (kx + 1 == k)
      return x;
    if (kx == k + 1 && (!below || x < *below))
      below = x;
  }
  if (!below)
    throw std::logic_error("no tile joins " + left.str() + " and " + right.str());
  return *below;
}

// son positions from the start node down to n
std::vector<std::size_t> son_steps(const Natural &n) {
  auto up = path_to_root(n, kStd);
  if (up.size() < 2 || up[1] != kStart)
    throw std::invalid_argument("pump: tile 1:" + n.str() +
                                " lies outside the subtree being moved");
  std::vector<std::size_t> steps;
  for (std::size_t x = 2; x < up.size(); ++x) {
    auto s = sons(up[x - 1], kStd);
    steps.push_back(std::find(s.begin(), s.end(), up[x]) - s.begin());
  }
  return steps;
}

TileAddress translate(const TileAddress &t, const Natural &image_of_start) {
  if (t.sector != kSector)
    throw std::invalid_argument("pump: tile " + t.str() + " is outside sector 1");
  Natural n = image_of_start;
  for (std::size_t s : son_steps(t.node))
    n = sons(n, kStd).at(s);
  return {kSector, n};
}

} // namespace

bool is_valid(const Path &p) {
  if (p.tiles.empty())
    return false;
  for (std::size_t x = 1; x < p.tiles.size(); ++x)
    if (!adjacent(p.tiles[x - 1], p.tiles[x]))
      return false;
  return true;
}

bool is_closed(const Path &p) {
  if (!is_valid(p))
    throw std::invalid_argument("is_closed: consecutive tiles do not share a side");
  return p.tiles.front() == p.tiles.back();
}

Path build_Pn(std::size_t n, std::size_t cap) {
  if (n < 1 || n > cap)
    throw std::out_of_range("build_Pn: n must be in 1.." + std::to_string(cap));
  Path p;
  Natural x = kStart;
  p.tiles.push_back({kSector, x});
  for (std::size_t k = 0; k < n; ++k) {
    x = first_son(x);
    p.tiles.push_back({kSector, x});
  }
  p.lambda_end = n;

  std::vector<Natural> right{kStart};
  for (std::size_t k = 0; k < n; ++k)
    right.push_back(last_son(right.back()));

  for (Natural m = x; m < right[n]; ++m) {
    p.tiles.push_back(bridge(m, m + 1));
    p.tiles.push_back({kSector, m + 1});
  }
  for (std::size_t k = n; k-- > 0;)
    p.tiles.push_back({kSector, right[k]});
  return p;
}

Path pump(const Path &p, std::size_t i, std::size_t j, std::size_t m) {
  if (!(i < j && j <= p.lambda_end))
    throw std::invalid_argument("pump: need i < j <= " + std::to_string(p.lambda_end) +
                                " on the leftmost branch");
  if (m == 0)
    return p;
  const std::size_t shift = (j - i) * m;
  const Natural image = lambda(shift);

  Path out;
  out.tiles.assign(p.tiles.begin(), p.tiles.begin() + j + 1);
  Natural x = p.tiles[j].node;
  for (std::size_t step = 0; step < shift; ++step) {
    x = first_son(x);
    out.tiles.push_back({kSector, x});
  }
  for (std::size_t t = j + 1; t < p.tiles.size(); ++t)
    out.tiles.push_back(translate(p.tiles[t], image));
  out.lambda_end = p.lambda_end + shift;
  return out;
}

PumpingWitness pumping_witness(std::size_t n, std::size_t k, std::size_t m) {
  if (k < 1 || k > n)
    throw std::invalid_argument("pumping_witness: period must be in 1..n");
  PumpingWitness w;
  w.path = pump(build_Pn(n), 0, k, m);
  w.start = w.path.tiles.front();
  w.end = w.path.tiles.back();
  w.closed = is_closed(w.path);
  return w;
}

void PathDFA::validate() const {
  auto known = [](const std::vector<std::string> &v, const std::string &s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  if (states.empty())
    throw std::invalid_argument("dfa: no states");
  if (!known(states, start))
    throw std::invalid_argument("dfa: unknown start state " + start);
  for (const auto &a : accept)
    if (!known(states, a))
      throw std::invalid_argument("dfa: unknown accepting state " + a);
  for (const auto &q : states)
    for (const auto &s : alphabet) {
      auto it = delta.find({q, s});
      if (it == delta.end())
        throw std::invalid_argument("dfa: missing transition (" + q + ", " + s + ")");
      if (!known(states, it->second))
        throw std::invalid_argument("dfa: transition to unknown state " + it->second);
    }
}

PathDFA PathDFA::from_json(const std::string &text) {
  PathDFA d;
  try {
    auto j = nlohmann::json::parse(text);
    d.states = j.at("states").get<std::vector<std::string>>();
    d.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    d.start = j.at("start").get<std::string>();
    for (const auto &a : j.at("accept"))
      d.accept.insert(a.get<std::string>());
    for (const auto &[q, row] : j.at("delta").items())
      for (const auto &[s, target] : row.items())
        d.delta[{q, s}] = target.get<std::string>();
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("dfa: ") + e.what());
  }
  d.validate();
  return d;
}

DfaRun run_dfa(const PathDFA &d, const Path &p,
               const std::map<TileAddress, std::string> &symbols) {
  DfaRun run;
  std::string q = d.start;
  std::vector<std::string> read;
  for (const auto &t : p.tiles) {
    auto sym = symbols.find(t);
    if (sym == symbols.end())
      throw std::invalid_argument("run_dfa: no symbol for tile " + t.str());
    auto next = d.delta.find({q, sym->second});
    if (next == d.delta.end())
      throw std::invalid_argument("run_dfa: malformed automaton, no move from (" +
                                  q + ", " + sym->second + ")");
    run.trace.push_back(q);
    read.push_back(sym->second);
    q = next->second;
  }
  run.final_state = q;
  run.accepted = d.accept.count(q) > 0;

  std::map<std::pair<std::string, std::string>, std::size_t> first_at;
  const std::size_t end = std::min(p.lambda_end + 1, run.trace.size());
  for (std::size_t x = 0; x < end && !run.repeat; ++x) {
    auto [it, fresh] = first_at.emplace(std::pair(read[x], run.trace[x]), x);
    if (!fresh)
      run.repeat = std::pair(it->second, x);
  }
  return run;
}

} // namespace pentagrid
