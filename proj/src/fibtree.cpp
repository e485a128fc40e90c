#include "pentagrid/fibtree.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace pentagrid {

namespace {

using Kind = TreeFlavor::Kind;

void require_positive(const Natural &n, const char *what) {
  if (n < 1)
    throw std::invalid_argument(std::string(what) + ": node numbers start at 1");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::vector<NodeKind> son_kinds(const TreeFlavor &flavor, std::uint64_t node,
                                NodeKind kind) {
  constexpr NodeKind two = NodeKind::two, three = NodeKind::three;
  switch (flavor.kind) {
  case Kind::standard:
    return kind == two ? std::vector{two, three} : std::vector{two, three, three};
  case Kind::central:
    return kind == two ? std::vector{two, three} : std::vector{three, two, three};
  case Kind::best:
    if (node == 1)
      return {three, three, two};
    return kind == two ? std::vector{three, two} : std::vector{three, two, three};
  case Kind::random:
    return random_rule(flavor.seed, node, kind);
  }
  return {};
}

// Lazily grown table for the central tree.
class CentralMemo {
public:
  OracleNode lookup(const Natural &n) {
    std::size_t k = level(n);
    if (k >= kOracleCap)
      throw std::out_of_range("central tree lookups stop below level " +
                              std::to_string(kOracleCap));
    std::lock_guard lock(mutex_);
    if (tree_.levels.size() < k + 2)
      tree_ = build_oracle(TreeFlavor::central(), k + 1);
    const OracleNode *node = tree_.find(n.convert_to<std::uint64_t>());
    return *node;
  }

private:
  std::mutex mutex_;
  OracleTree tree_;
};

CentralMemo &central_memo() {
  static CentralMemo memo;
  return memo;
}

void reject_random(const TreeFlavor &flavor, const char *what) {
  if (flavor.kind == Kind::random)
    throw std::invalid_argument(std::string(what) +
                                ": random trees are answered by build_oracle");
}

// best tree, 3-node ending 00
bool stripped_ends_10(const StdRep &rep) {
  std::string_view d = rep.digits;
  while (d.size() >= 2 && d.substr(d.size() - 2) == "00")
    d.remove_suffix(2);
  return d.size() >= 2 && d.substr(d.size() - 2) == "10";
}

} // namespace

std::string TreeFlavor::name() const {
  switch (kind) {
  case Kind::standard: return "standard";
  case Kind::central: return "central";
  case Kind::best: return "best";
  case Kind::random: return "random";
  }
  return {};
}

TreeFlavor TreeFlavor::parse(std::string_view name, std::uint64_t seed) {
  if (name == "standard") return standard();
  if (name == "central") return central();
  if (name == "best") return best();
  if (name == "random") return random(seed);
  throw std::invalid_argument("unknown tree flavor: " + std::string(name));
}

std::size_t level(const Natural &n) {
  require_positive(n, "level");
  return encode(n).size() / 2;
}

Natural level_first(std::size_t k) { return fib(2 * k); }
Natural level_last(std::size_t k) { return fib(2 * k + 2) - 1; }
Natural level_size(std::size_t k) { return fib(2 * k + 1); }

Natural continuator(const Natural &n) {
  require_positive(n, "continuator");
  return decode(encode(n).digits + "00");
}

Natural co_continuator(const Natural &n) {
  require_positive(n, "co_continuator");
  StdRep r = encode(n);
  if (r.size() < 3)
    return 0;
  r.digits.resize(r.size() - 2);
  return decode(r);
}

NodeKind status(const Natural &n, const TreeFlavor &flavor) {
  require_positive(n, "status");
  reject_random(flavor, "status");
  if (n == 1)
    return NodeKind::three;
  if (flavor.kind == Kind::central)
    return central_memo().lookup(n).kind;

  StdRep r = encode(n);
  if (flavor.kind == Kind::best)
    return r.tail2() == "01" ? NodeKind::two : NodeKind::three;

  if (r.tail2() == "10") return NodeKind::two;
  if (r.tail2() == "01") return NodeKind::three;
  return encode(n - 1).tail2() == "10" ? NodeKind::three : NodeKind::two;
}

std::optional<Natural> father(const Natural &n, const TreeFlavor &flavor) {
  require_positive(n, "father");
  reject_random(flavor, "father");
  if (n == 1)
    return std::nullopt;
  if (flavor.kind == Kind::central)
    return Natural(central_memo().lookup(n).father);
  if (flavor.kind == Kind::best)
    return n == 2 ? Natural(1) : co_continuator(n);
  Natural up = co_continuator(n);
  if (encode(n).tail2() == "10")
    up += 1;
  return up;
}

std::vector<Natural> sons(const Natural &n, const TreeFlavor &flavor) {
  require_positive(n, "sons");
  reject_random(flavor, "sons");
  if (flavor.kind == Kind::central) {
    std::vector<Natural> out;
    for (auto s : central_memo().lookup(n).sons)
      out.emplace_back(s);
    return out;
  }
  Natural c = continuator(n);
  bool three = status(n, flavor) == NodeKind::three;
  if (flavor.kind == Kind::best) {
    if (n == 1)
      return {2, 3, 4};
    if (three)
      return {c, c + 1, c + 2};
    return {c, c + 1};
  }
  if (three)
    return {c - 1, c, c + 1};
  return {c, c + 1};
}

std::array<Natural, 5> neighbors(const Natural &n, const TreeFlavor &flavor) {
  require_positive(n, "neighbors");
  if (flavor.kind == Kind::central || flavor.kind == Kind::random)
    throw std::invalid_argument("neighbors: no rule for the " + flavor.name() +
                                " tree");
  if (n == 1)
    return {0, 2, 3, 4, 5};
  const Natural c = continuator(n);
  const Natural up = co_continuator(n);
  const StdRep r = encode(n);
  const bool three = status(n, flavor) == NodeKind::three;

  if (flavor.kind == Kind::standard) {
    if (three)
      return {up, c - 1, c, c + 1, c + 2};
    if (r.tail2() == "00")
      return {up, up - 1, c, c + 1, c + 2};
    return {up + 1, up, c, c + 1, c + 2};
  }

  if (!three)
    return {up, c - 1, c, c + 1, c + 2};
  if (r.tail2() == "10")
    return {up, c, c + 1, c + 2, up + 1};
  if (stripped_ends_10(r))
    return {up, up - 1, c, c + 1, c + 2};
  return {up, c - 1, c, c + 1, c + 2};
}

std::vector<Natural> path_to_root(const Natural &n, const TreeFlavor &flavor) {
  std::vector<Natural> path{n};
  for (auto f = father(n, flavor); f; f = father(*f, flavor))
    path.push_back(*f);
  std::reverse(path.begin(), path.end());
  return path;
}

std::size_t OracleTree::size() const {
  std::size_t total = 0;
  for (const auto &lv : levels)
    total += lv.size();
  return total;
}

const OracleNode *OracleTree::find(std::uint64_t n) const {
  for (const auto &lv : levels) {
    if (lv.empty() || n < lv.front().number)
      return nullptr;
    if (n <= lv.back().number)
      return &lv[n - lv.front().number];
  }
  return nullptr;
}

OracleTree build_oracle(const TreeFlavor &flavor, std::size_t levels,
                        std::size_t cap) {
  if (levels > cap)
    throw std::out_of_range("build_oracle: " + std::to_string(levels) +
                            " levels exceed the cap of " + std::to_string(cap));
  OracleTree tree;
  tree.levels.push_back({OracleNode{1, NodeKind::three, 0, {}}});
  std::uint64_t next = 2;
  for (std::size_t k = 0; k < levels; ++k) {
    std::vector<OracleNode> below;
    for (auto &node : tree.levels.back()) {
      for (NodeKind kind : son_kinds(flavor, node.number, node.kind)) {
        node.sons.push_back(next);
        below.push_back(OracleNode{next++, kind, node.number, {}});
      }
    }
    tree.levels.push_back(std::move(below));
  }
  return tree;
}

std::vector<NodeKind> random_rule(std::uint64_t seed, std::uint64_t node,
                                  NodeKind kind) {
  constexpr NodeKind two = NodeKind::two, three = NodeKind::three;
  const int r = static_cast<int>(
      splitmix64(seed ^ (node * 0xD1B54A32D192ED03ull)) % 6) + 1;
  if (kind == two)
    return r < 4 ? std::vector{two, three} : std::vector{three, two};
  if (r < 3)
    return {two, three, three};
  if (r < 5)
    return {three, two, three};
  return {three, three, two};
}

} // namespace pentagrid
