#include "pentagrid/cayley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pentagrid {

namespace {

using Side = std::pair<int, int>; // (tile, slot)

// Sides around the corner between slot k and slot k+1 of tile t, starting
// with side k+1 and turning through the neighbours. `closed` is false
// when the walk leaves the ball.
struct Corner {
  std::vector<Side> sides;
  bool closed = false;
};

Corner corner(const Ball &b, int t, int k) {
  Corner c;
  Side cur{t, (k + 1) % 5};
  for (int step = 0; step < 4; ++step) {
    c.sides.push_back(cur);
    int u = b.adjacency[cur.first][cur.second];
    if (u == kExterior)
      return c;
    int j = b.back_slot[cur.first][cur.second];
    cur = {u, (j + 4) % 5};
  }
  c.closed = cur == Side{t, (k + 1) % 5};
  return c;
}

std::vector<std::array<Corner, 5>> corners(const Ball &b) {
  std::vector<std::array<Corner, 5>> out(b.size());
  for (std::size_t t = 0; t < b.size(); ++t)
    for (int k = 0; k < 5; ++k)
      out[t][k] = corner(b, static_cast<int>(t), k);
  return out;
}

bool is_black(const Natural &node) {
  return node > 1 && status(node, TreeFlavor::standard()) == NodeKind::two;
}

// Son lists of nodes in the standard tree, as ball indices.
class TreeView {
public:
  explicit TreeView(const Ball &b) : b_(b) {}

  std::vector<int> sons(int t) const {
    std::vector<int> out;
    for (const auto &n : pentagrid::sons(b_.tiles[t].node, TreeFlavor::standard()))
      out.push_back(*b_.index_of({b_.tiles[t].sector, n}));
    return out;
  }

  // next node around the level ring, crossing into the next sector
  int ring_next(int t) const {
    const auto &a = b_.tiles[t];
    std::size_t k = b_.levels[t];
    if (a.node < level_last(k))
      return *b_.index_of({a.sector, a.node + 1});
    return *b_.index_of({next_sector(a.sector), level_first(k)});
  }

  int ring_prev(int t) const {
    const auto &a = b_.tiles[t];
    std::size_t k = b_.levels[t];
    if (a.node > level_first(k))
      return *b_.index_of({a.sector, a.node - 1});
    return *b_.index_of({prev_sector(a.sector), level_last(k)});
  }

private:
  const Ball &b_;
};

std::string describe(const Ball &b, int t) { return b.tiles[t].str(); }

} // namespace

char to_char(Color c) { return static_cast<char>('a' + static_cast<int>(c)); }

Color color_from_char(char c) {
  if (c < 'a' || c > 'd')
    throw std::invalid_argument(std::string("colour must be a, b, c or d, got '") +
                                c + "'");
  return static_cast<Color>(c - 'a');
}

std::string to_string(const ColorPattern &p) {
  std::string s;
  for (Color c : p)
    s += to_char(c);
  return s;
}

ColorPattern parse_pattern(std::string_view text) {
  if (text.size() != 5)
    throw std::invalid_argument("colour pattern needs 5 sides: \"" +
                                std::string(text) + "\"");
  ColorPattern p;
  for (int k = 0; k < 5; ++k)
    p[k] = color_from_char(text[k]);
  return p;
}

bool is_alpha_pattern(const ColorPattern &p) {
  int at = -1;
  for (int k = 0; k < 5; ++k)
    if (p[k] == Color::d) {
      if (at >= 0)
        return false;
      at = k;
    }
  if (at < 0)
    return false;
  Color x = p[(at + 1) % 5], y = p[(at + 2) % 5];
  return x != y && p[(at + 3) % 5] == x && p[(at + 4) % 5] == y;
}

const std::vector<ColorPattern> &alpha_patterns() {
  static const std::vector<ColorPattern> all = [] {
    std::vector<ColorPattern> v;
    const Color abc[3] = {Color::a, Color::b, Color::c};
    for (Color x : abc)
      for (Color y : abc) {
        if (x == y)
          continue;
        ColorPattern w{Color::d, x, y, x, y};
        for (int r = 0; r < 5; ++r) {
          ColorPattern p;
          for (int k = 0; k < 5; ++k)
            p[k] = w[(k - r + 5) % 5];
          v.push_back(p);
        }
      }
    std::sort(v.begin(), v.end());
    return v;
  }();
  return all;
}

int node_type(const ColorPattern &p) {
  int at = 0;
  for (int k = 0; k < 5; ++k)
    if (p[k] == Color::d) {
      if (at)
        throw std::invalid_argument("node_type: more than one d side in " +
                                    to_string(p));
      at = k + 1;
    }
  if (!at)
    throw std::invalid_argument("node_type: no d side in " + to_string(p));
  return at;
}

NodeTypeTag node_type_tag(const ColorPattern &p, const Natural &node) {
  return {node_type(p), is_black(node) ? Shade::black : Shade::white};
}

const std::optional<ColorPattern> &Coloring::at(const TileAddress &a) const {
  auto i = ball.index_of(a);
  if (!i)
    throw std::out_of_range("coloring: " + a.str() + " is outside the ball");
  return sides[*i];
}

Coloring initial_coloring() {
  Coloring c;
  c.ball = ball(0);
  c.sides.assign(c.ball.size(), std::nullopt);
  c.sides[0] = parse_pattern("dabab");
  const char *roots[5] = {"dabab", "acacd", "bcbcd", "acacd", "bcbdc"};
  for (int s = 1; s <= 5; ++s)
    c.sides[*c.ball.index_of({s, 1})] = parse_pattern(roots[s - 1]);
  return c;
}

const std::vector<TableRow> &son_table() {
  constexpr Shade W = Shade::white, B = Shade::black;
  static const std::vector<TableRow> rows = {
      {1, "5 5", {{5, W, {0, 2, 2, 2}}, {5, W, {2, 2, 2, 2}}}, {6}},
      {2, "5 5b", {{5, W, {0, 2, 2, 2}}, {5, B, {2, 2, 2}}}, {6}},
      {3, "5b 5", {{5, B, {0, 2, 2}}, {5, W, {2, 2, 2, 2}}}, {6}},
      {4, "5 4", {{5, W, {0, 2, 2, 2}}, {4, W, {2, 2, 1, 5}}}, {8}},
      {5, "4 1 5",
       {{4, W, {0, 2, 1, 5}}, {1, W, {5, 5, 5, 4}}, {5, W, {4, 2, 2, 2}}},
       {9, 13}},
      {6, "2 2 2b",
       {{2, W, {1, 5, 5, 1}}, {2, W, {1, 5, 5, 5}}, {2, B, {5, 5, 0}}},
       {12}},
      {7, "2b 2 1", {{2, B, {5, 5, 1}}, {2, W, {1, 5, 5, 5}}, {1, W, {5, 5, 5, 0}}}, {}},
      {8, "2 1 5b", {{2, W, {1, 5, 5, 5}}, {1, W, {5, 5, 5, 5}}, {5, B, {5, 4, 2}}}, {11}},
      {9, "5 4b 2", {{5, W, {0, 2, 2, 2}}, {4, B, {2, 1, 1}}, {2, W, {1, 5, 5, 0}}}, {10, 14}},
      {10, "2b 1 1b", {{2, B, {5, 5, 5}}, {1, W, {5, 5, 5, 5}}, {1, B, {5, 5, 0}}}, {}},
      {11, "5b 4 2b", {{5, B, {0, 2, 2}}, {4, W, {2, 2, 1, 5}}, {2, B, {5, 5, 0}}}, {7}},
      {12, "5 1b 5", {{5, W, {0, 2, 2, 2}}, {1, B, {2, 2, 3}}, {5, W, {3, 2, 2, 2}}}, {15}},
      {13, "5 4b 2", {{5, W, {0, 2, 2, 2}}, {4, B, {2, 1, 1}}, {2, W, {1, 5, 5, 0}}}, {10, 14}},
      {14, "1 1b 5", {{1, W, {5, 5, 5, 5}}, {1, B, {5, 5, 4}}, {5, W, {4, 2, 2, 2}}}, {13}},
      {15, "2 3b 2", {{2, W, {1, 5, 5, 1}}, {3, B, {1, 5, 1}}, {2, W, {1, 5, 5, 0}}}, {12}},
  };
  return rows;
}

namespace {

// wildcard-aware match; 0 in `seen` means not coloured yet
bool entry_fits(const SonEntry &e, const std::vector<int> &seen) {
  if (e.sons.size() != seen.size())
    return false;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] && e.sons[i] && seen[i] != e.sons[i])
      return false;
  return true;
}

std::vector<const SonEntry *> entries_for(int type, Shade shade) {
  std::vector<const SonEntry *> out;
  for (const auto &row : son_table())
    for (const auto &e : row.entries)
      if (e.type == type && e.shade == shade)
        out.push_back(&e);
  return out;
}

class Search {
public:
  Search(std::size_t levels, ExtendStats *stats)
      : levels_(levels), stats_(stats), coloring_(initial_coloring()) {
    Ball b = ball(levels);
    auto seeded = std::move(coloring_.sides);
    coloring_.ball = std::move(b);
    const Ball &ball = coloring_.ball;
    coloring_.sides.assign(ball.size(), std::nullopt);
    Ball small = pentagrid::ball(0);
    for (std::size_t i = 0; i < small.size(); ++i)
      coloring_.sides[*ball.index_of(small.tiles[i])] = seeded[i];

    corners_ = corners(ball);
    tree_.emplace(ball);
    type_.assign(ball.size(), 0);
    for (std::size_t i = 0; i < ball.size(); ++i)
      if (coloring_.sides[i])
        type_[i] = node_type(*coloring_.sides[i]);

    for (std::size_t i = 1; i < ball.size(); ++i)
      if (!coloring_.sides[i])
        order_.push_back(static_cast<int>(i));
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return ball.levels[x] < ball.levels[y];
    });
    pos_.assign(ball.size(), -1);
    for (std::size_t i = 0; i < order_.size(); ++i)
      pos_[order_[i]] = static_cast<int>(i);

    related_.resize(ball.size());
    for (std::size_t t = 1; t < ball.size(); ++t) {
      std::set<int> r;
      for (const auto &cn : corners_[t])
        for (auto [u, j] : cn.sides)
          if (u != static_cast<int>(t) && u != 0)
            r.insert(u);
      related_[t].assign(r.begin(), r.end());
    }

    for (int type = 1; type <= 5; ++type)
      for (Shade s : {Shade::white, Shade::black})
        entries_[type - 1][s == Shade::black] = entries_for(type, s);
  }

  Coloring run() {
    const auto &pats = alpha_patterns();
    const int n = static_cast<int>(order_.size());
    std::vector<std::vector<int>> candidates(n);
    std::vector<std::size_t> next(n, 0);
    std::vector<std::set<int>> conflicts(n);
    std::vector<bool> fresh(n, true);

    int i = 0;
    while (i >= 0 && i < n) {
      const int t = order_[i];
      if (fresh[i]) {
        candidates[i] = preference(t);
        next[i] = 0;
        conflicts[i].clear();
        fresh[i] = false;
      }
      bool placed = false;
      while (next[i] < candidates[i].size()) {
        const ColorPattern &p = pats[candidates[i][next[i]++]];
        if (auto culprits = clash(t, p)) {
          for (int u : *culprits)
            if (pos_[u] >= 0)
              conflicts[i].insert(pos_[u]);
          continue;
        }
        assign(t, p);
        if (auto bad = table_failure(t)) {
          unassign(t);
          for (int u : fingerprint_tiles(*bad))
            if (u != t && coloring_.sides[u] && pos_[u] >= 0)
              conflicts[i].insert(pos_[u]);
          continue;
        }
        if (auto wiped = wipeout(t, i)) {
          unassign(t);
          for (int u : related_[*wiped])
            if (u != t && coloring_.sides[u] && pos_[u] >= 0)
              conflicts[i].insert(pos_[u]);
          continue;
        }
        placed = true;
        if (stats_)
          ++stats_->assignments;
        break;
      }
      if (placed) {
        ++i;
        continue;
      }
      if (conflicts[i].empty())
        throw std::runtime_error("extend_coloring: dead end at tile " +
                                 describe(coloring_.ball, t));
      const int h = *conflicts[i].rbegin();
      std::set<int> carry = conflicts[i];
      carry.erase(h);
      for (int j = h + 1; j <= i; ++j) {
        fresh[j] = true;
        unassign(order_[j]);
      }
      unassign(order_[h]);
      conflicts[h].insert(carry.begin(), carry.end());
      if (stats_)
        ++stats_->backjumps;
      i = h;
    }
    return std::move(coloring_);
  }

private:
  void assign(int t, const ColorPattern &p) {
    coloring_.sides[t] = p;
    type_[t] = node_type(p);
  }
  void unassign(int t) {
    coloring_.sides[t].reset();
    type_[t] = 0;
  }

  std::vector<int> preference(int t) const {
    int up = coloring_.ball.adjacency[t][0];
    int up_type = up == 0 ? 1 : type_[up];
    static const int after_two[5] = {1, 5, 4, 3, 2};
    static const int otherwise[5] = {1, 2, 5, 4, 3};
    const int *rank_of = up_type == 2 ? after_two : otherwise;
    auto rank = [&](int type) {
      return static_cast<int>(std::find(rank_of, rank_of + 5, type) - rank_of);
    };
    const auto &pats = alpha_patterns();
    std::vector<int> idx(pats.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
      idx[k] = static_cast<int>(k);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
      return rank(node_type(pats[x])) < rank(node_type(pats[y]));
    });
    return idx;
  }

  // coloured tiles involved in one violated side or vertex constraint
  std::optional<std::vector<int>> clash(int t, const ColorPattern &p) const {
    const Ball &b = coloring_.ball;
    for (int k = 0; k < 5; ++k) {
      int u = b.adjacency[t][k];
      if (u != kExterior && coloring_.sides[u] &&
          (*coloring_.sides[u])[b.back_slot[t][k]] != p[k])
        return std::vector<int>{u};
    }
    for (int k = 0; k < 5; ++k) {
      int seen[4] = {-1, -1, -1, -1};
      for (auto [u, j] : corners_[t][k].sides) {
        Color c;
        if (u == t)
          c = p[j];
        else if (coloring_.sides[u])
          c = (*coloring_.sides[u])[j];
        else
          continue;
        int &prior = seen[static_cast<int>(c)];
        if (prior >= 0) {
          std::vector<int> out;
          for (int x : {prior, u})
            if (x != t)
              out.push_back(x);
          return out;
        }
        prior = u;
      }
    }
    return std::nullopt;
  }

  // the uncoloured later tile left without a pattern, if any
  std::optional<int> wipeout(int t, int i) const {
    for (int u : related_[t]) {
      if (coloring_.sides[u] || pos_[u] <= i)
        continue;
      bool any = false;
      for (const auto &q : alpha_patterns())
        if (!clash(u, q)) {
          any = true;
          break;
        }
      if (!any)
        return u;
    }
    return std::nullopt;
  }

  std::vector<int> fingerprint_tiles(int g) const {
    std::vector<int> out{g};
    auto s = tree_->sons(g);
    out.insert(out.end(), s.begin(), s.end());
    out.push_back(tree_->sons(tree_->ring_next(g)).front());
    return out;
  }

  bool fingerprint_fits(int g) const {
    const Ball &b = coloring_.ball;
    if (g == 0 || b.levels[g] >= static_cast<int>(levels_) || !type_[g])
      return true;
    const auto &candidates = entries_[type_[g] - 1][is_black(b.tiles[g].node)];
    if (candidates.empty())
      return false;
    auto tiles = fingerprint_tiles(g);
    std::vector<int> seen;
    for (std::size_t k = 1; k < tiles.size(); ++k)
      seen.push_back(type_[tiles[k]]);
    return std::any_of(candidates.begin(), candidates.end(),
                       [&](const SonEntry *e) { return entry_fits(*e, seen); });
  }

  std::optional<int> table_failure(int t) const {
    std::vector<int> check{t};
    int up = coloring_.ball.adjacency[t][0];
    if (up != 0) {
      check.push_back(up);
      check.push_back(tree_->ring_prev(up));
    }
    for (int g : check)
      if (!fingerprint_fits(g))
        return g;
    return std::nullopt;
  }

  std::size_t levels_;
  ExtendStats *stats_;
  Coloring coloring_;
  std::vector<std::array<Corner, 5>> corners_;
  std::optional<TreeView> tree_;
  std::vector<int> type_;
  std::vector<int> order_, pos_;
  std::vector<std::vector<int>> related_;
  std::array<std::array<std::vector<const SonEntry *>, 2>, 5> entries_;
};

} // namespace

Coloring extend_coloring(std::size_t levels, ExtendStats *stats, std::size_t cap) {
  if (levels > cap)
    throw std::out_of_range("extend_coloring: " + std::to_string(levels) +
                            " levels exceed the cap of " + std::to_string(cap));
  if (levels == 0)
    return initial_coloring();
  return Search(levels, stats).run();
}

ColoringReport verify_coloring(const Coloring &c) {
  ColoringReport r;
  const Ball &b = c.ball;
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (!c.sides[t]) {
      r.uncolored.push_back(static_cast<int>(t));
      continue;
    }
    if (!is_alpha_pattern(*c.sides[t]))
      r.non_alpha.push_back(static_cast<int>(t));
    for (int k = 0; k < 5; ++k) {
      int u = b.adjacency[t][k];
      if (u == kExterior || u < static_cast<int>(t) || !c.sides[u])
        continue;
      int j = b.back_slot[t][k];
      if ((*c.sides[t])[k] != (*c.sides[u])[j])
        r.side_mismatches.push_back({static_cast<int>(t), k, u, j});
    }
  }

  std::set<std::vector<Side>> done;
  for (std::size_t t = 0; t < b.size(); ++t)
    for (int k = 0; k < 5; ++k) {
      Corner cn = corner(b, static_cast<int>(t), k);
      if (!cn.closed)
        continue;
      auto key = cn.sides;
      std::sort(key.begin(), key.end());
      if (!done.insert(key).second)
        continue;
      bool complete = true;
      std::set<Color> colors;
      for (auto [u, j] : cn.sides) {
        if (!c.sides[u]) {
          complete = false;
          break;
        }
        colors.insert((*c.sides[u])[j]);
      }
      if (!complete)
        continue;
      ++r.vertices_checked;
      if (colors.size() != 4)
        r.vertex_defects.push_back({cn.sides});
    }
  return r;
}

TableCheck check_son_table(const Coloring &c) {
  TableCheck out;
  const Ball &b = c.ball;
  TreeView tree(b);
  for (std::size_t g = 1; g < b.size(); ++g) {
    if (b.levels[g] >= static_cast<int>(b.radius) || !c.sides[g])
      continue;
    Fingerprint f;
    f.tile = static_cast<int>(g);
    auto tag = node_type_tag(*c.sides[g], b.tiles[g].node);
    f.type = tag.type;
    f.shade = tag.shade;
    auto sons = tree.sons(static_cast<int>(g));
    sons.push_back(tree.sons(tree.ring_next(static_cast<int>(g))).front());
    for (int u : sons)
      f.sons.push_back(c.sides[u] ? node_type(*c.sides[u]) : 0);
    for (const auto &row : son_table())
      for (const auto &e : row.entries)
        if (e.type == f.type && e.shade == f.shade && entry_fits(e, f.sons)) {
          f.rows.push_back(row.number);
          break;
        }
    if (f.rows.empty())
      out.outside.push_back(f);
    out.rows_seen.insert(f.rows.begin(), f.rows.end());
    out.fingerprints.push_back(std::move(f));
  }
  return out;
}

} // namespace pentagrid
