#include "pentagrid/tilings.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace pentagrid {

namespace {

// Center, then each sector's tree in preorder.
std::vector<int> preorder(const Ball &b) {
  std::vector<int> order{0};
  std::function<void(int)> visit = [&](int t) {
    order.push_back(t);
    if (b.levels[t] >= static_cast<int>(b.radius))
      return;
    for (const auto &n : sons(b.tiles[t].node, TreeFlavor::standard()))
      visit(*b.index_of({b.tiles[t].sector, n}));
  };
  for (int s = 1; s <= 5; ++s)
    visit(*b.index_of({s, 1}));
  return order;
}

} // namespace

Assortment Assortment::parse(std::string_view word) {
  if (word.size() != 5 ||
      !std::all_of(word.begin(), word.end(), [](char c) { return c >= '1' && c <= '5'; }))
    throw std::invalid_argument("assortment: expected 5 labels from 1..5, got \"" +
                                std::string(word) + "\"");
  Assortment a;
  std::copy(word.begin(), word.end(), a.labels.begin());
  return a;
}

std::string Assortment::str() const { return std::string(labels.begin(), labels.end()); }

std::vector<Assortment> Assortment::rotations() const {
  std::vector<Assortment> out;
  for (int i = 0; i < 5; ++i) {
    Assortment r;
    for (int j = 0; j < 5; ++j)
      r.labels[j] = labels[(i + j) % 5];
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Assortment Assortment::canonical() const { return rotations().front(); }

Assortment Assortment::mirror() const {
  Assortment m;
  std::reverse_copy(labels.begin(), labels.end(), m.labels.begin());
  return m;
}

Natural count_extendable(const Assortment &a, std::size_t depth,
                         std::size_t lookahead, bool fix_center) {
  if (lookahead < depth)
    throw std::invalid_argument("count_extendable: lookahead below depth");
  const Ball b = ball(lookahead, TreeFlavor::standard(), lookahead);
  const auto order = preorder(b);
  std::vector<int> pos(b.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    pos[order[i]] = static_cast<int>(i);
  const auto rots = a.rotations();

  // A state is the set of pending-side label strings still consistent
  // with some completion of the tiles already passed; equal sets merge.
  std::vector<std::pair<int, int>> pending; // (tile, slot) awaiting a partner
  std::unordered_map<std::string, Natural> states{{std::string(), Natural(1)}};

  for (std::size_t i = 0; i < order.size(); ++i) {
    const int t = order[i];
    const bool counted = b.levels[t] <= static_cast<int>(depth);
    std::vector<std::pair<int, int>> consume; // (slot, pending index)
    std::vector<int> create;
    for (int k = 0; k < 5; ++k) {
      int u = b.adjacency[t][k];
      if (u == kExterior)
        continue;
      if (pos[u] < static_cast<int>(i)) {
        auto it = std::find(pending.begin(), pending.end(),
                            std::pair<int, int>(u, b.back_slot[t][k]));
        consume.emplace_back(k, static_cast<int>(it - pending.begin()));
      } else {
        create.push_back(k);
      }
    }
    std::vector<int> keep;
    for (int x = 0; x < static_cast<int>(pending.size()); ++x)
      if (std::none_of(consume.begin(), consume.end(),
                       [&](auto &c) { return c.second == x; }))
        keep.push_back(x);
    const std::size_t width = pending.size();
    const std::size_t new_width = keep.size() + create.size();

    auto extend = [&](const std::string &state, const Assortment &r,
                      std::vector<std::string> &into) {
      for (std::size_t off = 0; off < state.size() || (width == 0 && off == 0);
           off += std::max<std::size_t>(width, 1)) {
        const char *sig = state.data() + off;
        bool fits = true;
        for (auto [k, x] : consume)
          if (sig[x] != r.labels[k]) {
            fits = false;
            break;
          }
        if (fits) {
          std::string next;
          next.reserve(new_width);
          for (int x : keep)
            next += sig[x];
          for (int k : create)
            next += r.labels[k];
          into.push_back(std::move(next));
        }
        if (width == 0)
          break;
      }
    };
    auto pack = [](std::vector<std::string> &sigs) {
      std::sort(sigs.begin(), sigs.end());
      sigs.erase(std::unique(sigs.begin(), sigs.end()), sigs.end());
      std::string s;
      for (const auto &x : sigs)
        s += x;
      return s;
    };

    std::unordered_map<std::string, Natural> next_states;
    const bool fixed = fix_center && t == 0;
    for (const auto &[state, count] : states) {
      if (counted) {
        for (const auto &r : rots) {
          if (fixed && !(r == rots.front()))
            continue;
          std::vector<std::string> sigs;
          extend(state, r, sigs);
          if (sigs.empty())
            continue;
          // an empty-width signature still marks a live state
          next_states[new_width ? pack(sigs) : std::string()] += count;
        }
      } else {
        std::vector<std::string> sigs;
        for (const auto &r : rots)
          extend(state, r, sigs);
        if (!sigs.empty())
          next_states[new_width ? pack(sigs) : std::string()] += count;
      }
    }
    states = std::move(next_states);

    std::vector<std::pair<int, int>> next_pending;
    for (int x : keep)
      next_pending.push_back(pending[x]);
    for (int k : create)
      next_pending.emplace_back(t, k);
    pending = std::move(next_pending);
  }

  Natural total = 0;
  for (const auto &[state, count] : states)
    total += count;
  return total;
}

Natural enumerate(const Assortment &a, std::size_t depth, std::size_t cap) {
  if (depth > cap)
    throw std::out_of_range("enumerate: depth " + std::to_string(depth) +
                            " exceeds the cap of " + std::to_string(cap));
  Natural total = count_extendable(a, depth, depth + 1, true);
  Assortment m = a.mirror();
  if (m.canonical() != a.canonical())
    total += count_extendable(m, depth, depth + 1, true);
  return total;
}

std::string to_string(Outcome o) {
  switch (o) {
  case Outcome::no_solution: return "NoSolution";
  case Outcome::finite: return "Finite";
  case Outcome::growing: return "Growing";
  case Outcome::inconclusive: return "Inconclusive";
  }
  return {};
}

EnumerationOutcome classify_assortment(const Assortment &a, std::size_t max_depth,
                                       std::size_t cap) {
  if (max_depth > cap)
    throw std::out_of_range("classify_assortment: depth " +
                            std::to_string(max_depth) + " exceeds the cap of " +
                            std::to_string(cap));
  EnumerationOutcome out;
  for (std::size_t d = 0; d <= max_depth; ++d) {
    out.counts.push_back(enumerate(a, d, cap));
    if (out.counts.back() == 0) {
      out.kind = Outcome::no_solution;
      out.depth = d;
      return out;
    }
  }
  const auto &c = out.counts;
  const std::size_t n = c.size();
  if (n >= 2 && c[n - 1] == c[n - 2]) {
    out.kind = Outcome::finite;
    out.count = c.back();
    out.depth = n - 2;
    while (out.depth > 0 && c[out.depth - 1] == c.back())
      --out.depth;
  } else if (n >= 3 && c[n - 3] < c[n - 2] && c[n - 2] < c[n - 1]) {
    out.kind = Outcome::growing;
  }
  return out;
}

std::optional<std::vector<int>> find_tiling(const Assortment &a, const Ball &b) {
  // ring by ring, with a forward check on the empty neighbours
  std::vector<int> order(b.size());
  for (std::size_t t = 0; t < b.size(); ++t)
    order[t] = static_cast<int>(t);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return b.levels[x] < b.levels[y]; });
  std::vector<int> offset(b.size(), -1);
  auto label = [&](int t, int k) { return a.labels[(k + offset[t]) % 5]; };
  auto fits = [&](int t) {
    for (int k = 0; k < 5; ++k) {
      int u = b.adjacency[t][k];
      if (u != kExterior && offset[u] >= 0 && label(u, b.back_slot[t][k]) != label(t, k))
        return false;
    }
    return true;
  };
  auto open = [&](int t) {
    for (int u : b.adjacency[t]) {
      if (u == kExterior || offset[u] >= 0)
        continue;
      bool any = false;
      for (offset[u] = 0; offset[u] < 5 && !any; ++offset[u])
        any = fits(u);
      offset[u] = -1;
      if (!any)
        return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == order.size())
      return true;
    int t = order[i];
    for (offset[t] = 0; offset[t] < 5; ++offset[t])
      if (fits(t) && open(t) && place(i + 1))
        return true;
    offset[t] = -1;
    return false;
  };
  if (!place(0))
    return std::nullopt;
  return offset;
}

} // namespace pentagrid
