// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pentagrid/ca.hpp"
#include "pentagrid/cayley.hpp"
#include "pentagrid/geometry.hpp"
#include "pentagrid/paths.hpp"
#include "pentagrid/tilings.hpp"

using namespace pentagrid;
using cd = std::complex<double>;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char *title, double limit_s,
               const std::function<Verdict()> &body) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception &e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = limit_s <= 0 || secs < limit_s;
  bool pass = v.ok && in_time;
  failures += !pass;
  std::printf("%s %2d %s: %s [%.2fs", pass ? "PASS" : "FAIL", number, title,
              v.detail.c_str(), secs);
  if (limit_s > 0)
    std::printf(" / %.0fs%s", limit_s, in_time ? "" : " exceeded");
  std::printf("]\n");
  std::fflush(stdout);
}

Verdict zeckendorf_round_trip() {
  std::size_t bad = 0;
  for (std::uint64_t n = 1; n <= 1000000; ++n) {
    auto rep = encode(n);
    if (decode(rep) != n || rep.digits.find("11") != std::string::npos)
      ++bad;
  }
  return {bad == 0, "n <= 10^6, " + std::to_string(bad) + " failures"};
}

Verdict tree_oracle(const TreeFlavor &flavor, std::size_t levels, std::size_t &nodes) {
  auto tree = build_oracle(flavor, levels);
  std::size_t bad = 0;
  std::vector<std::uint64_t> chain;
  for (const auto &lv : tree.levels)
    for (const auto &node : lv) {
      ++nodes;
      Natural n = node.number;
      if (static_cast<int>(status(n, flavor)) != static_cast<int>(node.kind))
        ++bad;
      auto up = father(n, flavor);
      if (node.father ? (!up || *up != node.father) : up.has_value())
        ++bad;
      if (node.sons.size() && tree.find(node.sons.front())) {
        auto s = sons(n, flavor);
        if (!std::equal(s.begin(), s.end(), node.sons.begin(), node.sons.end()))
          ++bad;
      }
      chain.assign(1, node.number);
      while (auto f = tree.find(chain.back())->father)
        chain.push_back(f);
      std::reverse(chain.begin(), chain.end());
      auto path = path_to_root(n, flavor);
      if (!std::equal(path.begin(), path.end(), chain.begin(), chain.end()))
        ++bad;
    }
  return {bad == 0, std::to_string(bad)};
}

Verdict tree_equivalence() {
  std::size_t nodes = 0;
  auto a = tree_oracle(TreeFlavor::standard(), 12, nodes);
  auto b = tree_oracle(TreeFlavor::best(), 12, nodes);
  bool ok = a.ok && b.ok && nodes > 100000;
  return {ok, "levels 0..12, " + std::to_string(nodes) + " nodes, mismatches standard " +
                  a.detail + " best " + b.detail};
}

std::vector<std::uint64_t> census(const TreeFlavor &flavor, std::size_t levels) {
  auto t = build_oracle(flavor, levels);
  std::vector<std::uint64_t> out;
  for (const auto &lv : t.levels)
    out.push_back(lv.size());
  return out;
}

// level sizes walking the digit-rule son lists
std::vector<std::uint64_t> census_by_sons(const TreeFlavor &flavor, std::size_t levels) {
  std::vector<std::uint64_t> out{1};
  std::vector<Natural> cur{1};
  for (std::size_t k = 1; k <= levels; ++k) {
    std::vector<Natural> next;
    for (const auto &n : cur)
      for (auto &s : sons(n, flavor))
        next.push_back(std::move(s));
    out.push_back(next.size());
    cur = std::move(next);
  }
  return out;
}

Verdict level_census() {
  const std::size_t K = 10;
  std::vector<std::uint64_t> expected;
  for (std::size_t k = 0; k <= K; ++k)
    expected.push_back(oracle::fib64(static_cast<int>(2 * k + 1)));
  std::vector<TreeFlavor> flavors{TreeFlavor::standard(), TreeFlavor::best(),
                                  TreeFlavor::central()};
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    flavors.push_back(TreeFlavor::random(seed));
  std::size_t bad = 0;
  for (const auto &f : flavors) {
    bad += census(f, K) != expected;
    if (f.kind != TreeFlavor::Kind::random)
      bad += census_by_sons(f, K) != expected;
  }
  std::ostringstream s;
  s << flavors.size() << " flavors (20 random seeds), k <= " << K << ", sizes 1, 3, 8, ..., "
    << expected.back() << " = f(2k+1) with f(0)=f(1)=1; " << bad << " mismatches";
  return {bad == 0, s.str()};
}

Verdict reciprocity_and_geometry() {
  std::size_t asym = 0, differ = 0, tiles = 0;
  for (auto flavor : {TreeFlavor::standard(), TreeFlavor::best()}) {
    Ball b = ball(6, flavor);
    tiles += b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (int k = 0; k < 5; ++k) {
        int j = b.adjacency[i][k];
        if (j != kExterior && b.adjacency[j][b.back_slot[i][k]] != static_cast<int>(i))
          ++asym;
      }
    auto drawn = geometric_adjacency(b, layout(b), 1e-9);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (int k = 0; k < 5; ++k)
        differ += drawn[i][k] != b.adjacency[i][k];
  }
  return {asym == 0 && differ == 0,
          "ball(6) standard and best, " + std::to_string(tiles) + " tiles, " +
              std::to_string(asym) + " asymmetric, " + std::to_string(differ) +
              " slots differ from the drawing at 1e-9"};
}

Verdict cayley_coloring() {
  Coloring c = extend_coloring(8);
  auto r = verify_coloring(c);
  auto t = check_son_table(c);
  bool rows_ok = std::all_of(t.rows_seen.begin(), t.rows_seen.end(),
                             [](int x) { return x >= 1 && x <= 15; });
  std::ostringstream s;
  s << "ball(8) " << c.ball.size() << " tiles, " << r.vertices_checked
    << " vertices, defects " << r.vertex_defects.size() + r.side_mismatches.size() +
                                    r.non_alpha.size() + r.uncolored.size()
    << ", " << t.fingerprints.size() << " son patterns, " << t.outside.size()
    << " outside the table, rows seen " << t.rows_seen.size() << "/15";
  return {r.ok() && t.ok() && rows_ok, s.str()};
}

Verdict tiling_table() {
  const std::size_t depth = 4;
  struct Row {
    const char *word;
    Outcome kind;
    int count;
  };
  const Row rows[] = {{"12345", Outcome::no_solution, 0}, {"12134", Outcome::no_solution, 0},
                      {"12312", Outcome::no_solution, 0}, {"12313", Outcome::no_solution, 0},
                      {"11111", Outcome::finite, 1},      {"11234", Outcome::finite, 2},
                      {"11223", Outcome::finite, 4},      {"11123", Outcome::growing, 0},
                      {"11213", Outcome::growing, 0},     {"11232", Outcome::growing, 0},
                      {"11112", Outcome::growing, 0},     {"11122", Outcome::growing, 0},
                      {"11212", Outcome::growing, 0}};
  std::string wrong;
  for (const auto &row : rows) {
    auto o = classify_assortment(Assortment::parse(row.word), depth);
    bool ok = o.kind == row.kind;
    if (row.kind == Outcome::finite)
      ok = ok && o.count == row.count && o.counts.size() == depth + 1 &&
           std::all_of(o.counts.begin(), o.counts.end(),
                       [&](const Natural &x) { return x == row.count; });
    if (row.kind == Outcome::growing) {
      const auto &c = o.counts;
      std::size_t n = c.size();
      ok = ok && n == depth + 1 && c[n - 3] < c[n - 2] && c[n - 2] < c[n - 1];
    }
    if (!ok)
      wrong += std::string(" ") + row.word + "->" + to_string(o.kind);
  }
  return {wrong.empty(), "13 assortments through depth " + std::to_string(depth) +
                             (wrong.empty() ? ", all as tabulated" : ", wrong:" + wrong)};
}

Verdict motion_table() {
  Tolerance tol;
  tol.geometric = 1e-9;
  auto cases = verify_motion_table(tol);
  std::size_t match = 0, angle1 = 0;
  for (const auto &c : cases) {
    match += c.matches() && !c.near_degenerate;
    angle1 += c.angle == 1;
  }
  return {cases.size() == 8 && match == 8 && angle1 == 0,
          std::to_string(match) + "/8 cases match, " + std::to_string(angle1) +
              " reach angle 1"};
}

Verdict pumping() {
  std::size_t closed = 0, open = 0, witnesses = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    closed += is_closed(build_Pn(n));
  for (std::size_t n : {6, 8})
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t m = 1; m <= 4; ++m) {
        auto w = pumping_witness(n, k, m);
        ++witnesses;
        open += is_valid(w.path) && !w.closed;
      }
  return {closed == 8 && open == witnesses,
          "P_1..P_8: " + std::to_string(closed) + " closed; pumped m = 1..4: " +
              std::to_string(open) + "/" + std::to_string(witnesses) + " open"};
}

RuleTable table_over_qx(const std::function<State(const Neighborhood &)> &out) {
  RuleTable r;
  for (int code = 0; code < 64; ++code) {
    Neighborhood key;
    for (int k = 0; k < 6; ++k)
      key[k] = (code >> k) & 1 ? "X" : "Q";
    r.rules[key] = out(key);
  }
  return r;
}

Verdict ca_contract() {
  auto b = std::make_shared<const Ball>(ball(3));
  auto identity = table_over_qx([](const Neighborhood &k) { return k[5]; });
  auto infection = table_over_qx([](const Neighborhood &k) {
    return std::count(k.begin(), k.end(), "X") ? State("X") : State("Q");
  });
  std::mt19937 rng(11);

  Configuration c(b, "Q");
  for (std::size_t i = 1; i < c.states.size(); ++i)
    c.states[i] = rng() % 2 ? "X" : "Q";
  bool fixpoint = step(c, identity) == c;

  auto expected = step(c, infection);
  std::vector<int> order(c.states.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    order[i] = i;
  bool synchronous = true;
  for (int t = 0; t < 10; ++t) {
    std::shuffle(order.begin(), order.end(), rng);
    synchronous = synchronous && step(c, infection, &order) == expected;
  }

  Configuration seed(b, "Q");
  seed.set(TileAddress::center(), "X");
  std::vector<std::size_t> sizes;
  for (const auto &x : run(seed, infection, 3))
    sizes.push_back(std::count(x.states.begin(), x.states.end(), "X"));
  bool front = sizes == std::vector<std::size_t>{1, 6, 21, 61};

  std::ostringstream s;
  s << "fixpoint " << (fixpoint ? "yes" : "no") << ", permuted orders agree "
    << (synchronous ? "yes" : "no") << ", front";
  for (auto x : sizes)
    s << ' ' << x;
  return {fixpoint && synchronous && front, s.str()};
}

cd sample(std::mt19937_64 &rng, double reach) {
  std::uniform_real_distribution<double> u(0, 1);
  return std::polar(reach * std::sqrt(u(rng)), 2 * M_PI * u(rng));
}

Verdict isometry_algebra() {
  const Tolerance tol;
  std::mt19937_64 rng(12);
  std::size_t involution = 0, metric = 0;
  const int samples = 10000;
  for (int t = 0; t < samples; ++t) {
    auto l = HLined::through(sample(rng, 0.95), sample(rng, 0.95));
    auto s = reflect(l);
    cd z = sample(rng, 0.95);
    involution += std::abs(s(s(z)) - z) < tol.geometric;

    auto g = reflect(HLined::through(sample(rng, 0.9), sample(rng, 0.9))) *
             shift_to(sample(rng, 0.6), sample(rng, 0.6));
    cd p = sample(rng, 0.8), q = sample(rng, 0.8);
    double d = hyperbolic_distance(p, q);
    metric += std::abs(hyperbolic_distance(g(p), g(q)) - d) < tol.geometric * std::max(1.0, d);
  }

  std::size_t right = 0, cases = 0;
  std::uniform_real_distribution<double> ang(0.3, 2 * M_PI - 0.3);
  for (int t = 0; t < 45; ++t, ++cases) {
    cd c = sample(rng, 0.7);
    double theta = ang(rng);
    Isometryd r;
    r.m << std::polar(1.0, theta / 2), cd(0), cd(0), std::polar(1.0, -theta / 2);
    auto m = classify(translate_origin(c) * r * translate_origin(-c), tol);
    double a = std::fmod(m.angle + 2 * M_PI, 2 * M_PI);
    right += m.kind == MotionKind::rotation && std::abs(m.center - c) < 1e-6 &&
             std::abs(a - theta) < 1e-6;
  }
  for (int t = 0; t < 45; ++t, ++cases) {
    cd p = sample(rng, 0.7), q = sample(rng, 0.7);
    auto m = classify(shift_to(p, q), tol);
    right += m.kind == MotionKind::shift &&
             std::abs(m.displacement - hyperbolic_distance(p, q)) < 1e-6;
  }
  for (int t = 0; t < 10; ++t, ++cases) {
    auto g = shift_to(sample(rng, 0.7), sample(rng, 0.7));
    right += classify(g * g.inverse(), tol).kind == MotionKind::identity;
  }
  std::ostringstream s;
  s << "involution " << involution << "/" << samples << ", metric " << metric << "/"
    << samples << ", classification " << right << "/" << cases;
  return {involution == samples && metric == samples && right == cases && cases == 100,
          s.str()};
}

} // namespace

int main() {
  criterion(1, "Zeckendorf round trip", 5, zeckendorf_round_trip);
  criterion(2, "tree/oracle equivalence", 30, tree_equivalence);
  criterion(3, "level census", 0, level_census);
  criterion(4, "reciprocity and geometric agreement", 60, reciprocity_and_geometry);
  criterion(5, "Cayley colouring", 60, cayley_coloring);
  criterion(6, "tiling table", 600, tiling_table);
  criterion(7, "motion table", 1, motion_table);
  criterion(8, "pumping", 30, pumping);
  criterion(9, "CA contract", 5, ca_contract);
  criterion(10, "isometry algebra", 10, isometry_algebra);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures ? 1 : 0;
}
