// Command-line front end. Data goes to stdout (JSON, JSON lines or SVG),
// diagnostics to stderr. Exit status: 0 ok, 1 domain error, 2 usage error.
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pentagrid/ca.hpp"
#include "pentagrid/cayley.hpp"
#include "pentagrid/geometry.hpp"
#include "pentagrid/paths.hpp"
#include "pentagrid/tilings.hpp"

using nlohmann::json;
using namespace pentagrid;

namespace {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// bad flag values found after CLI11 parsing; exit 2 like parse errors
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// numbers that fit 64 bits print as JSON numbers, larger ones as strings
json number(const Natural &n) {
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return n.convert_to<std::uint64_t>();
  return n.str();
}

json numbers(const auto &range) {
  json out = json::array();
  for (const auto &n : range)
    out.push_back(number(n));
  return out;
}

// decimal, or a standard representation prefixed "z:"
Natural parse_node(const std::string &text) {
  if (text.rfind("z:", 0) == 0) {
    std::string bits = text.substr(2);
    if (!is_standard(bits))
      throw UsageError("\"" + bits + "\" is not a standard representation");
    return decode(bits);
  }
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("node must be decimal or z:<bits>, got \"" + text + "\"");
  return Natural(text);
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Assortment assortment_arg(const std::string &word) {
  try {
    return Assortment::parse(word);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

json locate(const Natural &n, const TreeFlavor &flavor) {
  json out;
  out["node"] = number(n);
  out["rep"] = encode(n).str();
  out["level"] = level(n);
  out["tree"] = flavor.name();
  if (flavor.kind == TreeFlavor::Kind::random) {
    std::size_t k = level(n);
    auto tree = build_oracle(flavor, k + 1);
    auto id = n.convert_to<std::uint64_t>();
    const OracleNode *node = tree.find(id);
    out["status"] = static_cast<int>(node->kind);
    out["father"] = node->father ? json(node->father) : json(nullptr);
    out["sons"] = tree.find(id)->sons;
    std::vector<std::uint64_t> path{id};
    while (tree.find(path.back())->father)
      path.push_back(tree.find(path.back())->father);
    std::reverse(path.begin(), path.end());
    out["neighbors"] = nullptr;
    out["path"] = path;
    return out;
  }
  out["status"] = static_cast<int>(status(n, flavor));
  auto up = father(n, flavor);
  out["father"] = up ? number(*up) : json(nullptr);
  out["sons"] = numbers(sons(n, flavor));
  if (flavor.kind == TreeFlavor::Kind::central) {
    out["neighbors"] = nullptr;
    std::vector<Natural> path{n};
    while (auto f = father(path.back(), flavor))
      path.push_back(*f);
    std::reverse(path.begin(), path.end());
    out["path"] = numbers(path);
  } else {
    out["neighbors"] = numbers(neighbors(n, flavor));
    out["path"] = numbers(path_to_root(n, flavor));
  }
  return out;
}

json ball_json(const Ball &b) {
  json adj = json::object();
  for (std::size_t i = 0; i < b.size(); ++i) {
    json row = json::array();
    for (int j : b.adjacency[i])
      row.push_back(j == kExterior ? json(nullptr) : json(b.tiles[j].str()));
    adj[b.tiles[i].str()] = row;
  }
  return {{"radius", b.radius}, {"tree", b.flavor.name()}, {"tiles", b.size()},
          {"adjacency", adj}};
}

json coloring_json(const Coloring &c) {
  json out = json::array();
  for (std::size_t i = 0; i < c.ball.size(); ++i) {
    if (!c.sides[i])
      continue;
    json sides = json::array();
    for (Color x : *c.sides[i])
      sides.push_back(std::string(1, to_char(x)));
    out.push_back({{"tile", c.ball.tiles[i].str()}, {"sides", sides}});
  }
  return out;
}

json cayley_report(std::size_t levels) {
  auto c = extend_coloring(levels);
  auto r = verify_coloring(c);
  auto t = check_son_table(c);
  json mismatches = json::array(), defects = json::array(), non_alpha = json::array();
  for (const auto &m : r.side_mismatches)
    mismatches.push_back({{"tile", c.ball.tiles[m.tile].str()}, {"slot", m.slot},
                          {"other", c.ball.tiles[m.other].str()}});
  for (const auto &d : r.vertex_defects) {
    json sides = json::array();
    for (auto [tile, slot] : d.sides)
      sides.push_back({c.ball.tiles[tile].str(), slot});
    defects.push_back(sides);
  }
  for (int tile : r.non_alpha)
    non_alpha.push_back(c.ball.tiles[tile].str());
  json outside = json::array();
  for (const auto &f : t.outside)
    outside.push_back(c.ball.tiles[f.tile].str());
  return {{"levels", levels},
          {"tiles", c.ball.size()},
          {"vertices_checked", r.vertices_checked},
          {"side_mismatches", mismatches},
          {"vertex_defects", defects},
          {"non_alpha", non_alpha},
          {"table", {{"fingerprints", t.fingerprints.size()},
                     {"outside", outside},
                     {"rows_seen", t.rows_seen}}},
          {"ok", r.ok() && t.ok()}};
}

SideColoring side_coloring(const std::string &choice, const Ball &b) {
  SideColoring out;
  if (choice == "cayley") {
    auto c = extend_coloring(b.radius);
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::array<int, 5> sides{};
      for (int k = 0; k < 5; ++k)
        sides[k] = static_cast<int>((*c.sides[i])[k]);
      out[b.tiles[i]] = sides;
    }
    return out;
  }
  const std::string prefix = "assortment:";
  if (choice.rfind(prefix, 0) != 0)
    throw UsageError("--coloring must be none, cayley or assortment:<word>");
  auto a = assortment_arg(choice.substr(prefix.size()));
  auto tiling = find_tiling(a, b);
  if (!tiling)
    throw DomainError("assortment " + a.str() + " does not tile ball(" +
                      std::to_string(b.radius) + ")");
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::array<int, 5> sides{};
    for (int k = 0; k < 5; ++k)
      sides[k] = a.labels[(k + (*tiling)[i]) % 5] - '1';
    out[b.tiles[i]] = sides;
  }
  return out;
}

std::shared_ptr<Configuration> load_init(const std::string &path,
                                         std::shared_ptr<const Ball> b,
                                         const std::string &quiescent) {
  auto c = std::make_shared<Configuration>(std::move(b), quiescent);
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument(path + ": expected an object {address: state}");
  for (const auto &[address, state] : j.items())
    c->set(TileAddress::parse(address), state.get<std::string>());
  return c;
}

json states_json(const Configuration &c) {
  json out = json::object();
  for (std::size_t i = 0; i < c.states.size(); ++i)
    if (c.states[i] != c.quiescent)
      out[c.ball->tiles[i].str()] = c.states[i];
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Fibonacci-tree navigation and experiments on the pentagrid {5,4}"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  double tol = 1e-9;
  app.add_option("--seed", seed, "seed for the random tree flavor");
  app.add_option("--tol", tol, "geometric tolerance")->check(CLI::PositiveNumber);

  std::string tree = "standard";
  auto tree_check = CLI::IsMember({"standard", "central", "best", "random"});

  auto *locate_cmd = app.add_subcommand("locate", "coordinates of one tree node");
  std::string node_text;
  locate_cmd->add_option("n", node_text, "node number, or z:<standard bits>")->required();
  locate_cmd->add_option("--tree", tree)->check(tree_check);

  auto *ball_cmd = app.add_subcommand("ball", "adjacency of ball(L)");
  std::size_t levels = 0;
  ball_cmd->add_option("L", levels)->required();
  ball_cmd->add_option("--tree", tree)->check(CLI::IsMember({"standard", "best"}));

  auto *render_cmd = app.add_subcommand("render", "SVG picture of ball(L)");
  std::string coloring = "none", out_path, palette;
  render_cmd->add_option("--levels", levels)->required();
  render_cmd->add_option("--coloring", coloring, "none, cayley or assortment:<word>");
  render_cmd->add_option("--out", out_path, "output file (default stdout)");
  render_cmd->add_option("--palette", palette, "comma separated colours");

  auto *cayley_cmd = app.add_subcommand("cayley", "four-colouring of the sides");
  cayley_cmd->require_subcommand(1);
  auto *cayley_verify = cayley_cmd->add_subcommand("verify", "build and check ball(L)");
  cayley_verify->add_option("--levels", levels)->required();
  auto *cayley_color = cayley_cmd->add_subcommand("color", "print the colouring of ball(L)");
  cayley_color->add_option("--levels", levels)->required();

  auto *tilings_cmd = app.add_subcommand("tilings", "single-tile tilings");
  tilings_cmd->require_subcommand(1);
  auto *classify_cmd = tilings_cmd->add_subcommand("classify", "counts by depth");
  std::string word;
  std::size_t depth = 3;
  classify_cmd->add_option("word", word, "five labels from 1..5")->required();
  classify_cmd->add_option("--depth", depth);

  auto *paths_cmd = app.add_subcommand("paths", "closed paths and pumping");
  paths_cmd->require_subcommand(1);
  auto *pump_cmd = paths_cmd->add_subcommand("pump", "pump P_n with period k, m times");
  std::size_t n = 6, k = 2, m = 1;
  bool show_path = false;
  pump_cmd->add_option("--n", n);
  pump_cmd->add_option("--k", k);
  pump_cmd->add_option("--m", m);
  pump_cmd->add_flag("--path", show_path, "include the tiles");
  auto *dfa_cmd = paths_cmd->add_subcommand("dfa", "run an automaton along P_n");
  std::string dfa_path;
  dfa_cmd->add_option("--dfa", dfa_path, "JSON automaton")->required();
  dfa_cmd->add_option("--n", n);

  auto *ca_cmd = app.add_subcommand("ca", "cellular automaton");
  ca_cmd->require_subcommand(1);
  auto *ca_run = ca_cmd->add_subcommand("run", "stream a trace as JSON lines");
  std::string rules_path, init_path, quiescent = "Q";
  std::size_t steps = 1;
  levels = 3;
  ca_run->add_option("--rules", rules_path)->required();
  ca_run->add_option("--init", init_path, "JSON {address: state}")->required();
  ca_run->add_option("--steps", steps);
  ca_run->add_option("--levels", levels);
  ca_run->add_option("--quiescent", quiescent);

  auto *verify_cmd = app.add_subcommand("verify", "geometric checks");
  verify_cmd->require_subcommand(1);
  auto *motions_cmd = verify_cmd->add_subcommand("motions", "the eight-case motion table");
  auto *geometry_cmd =
      verify_cmd->add_subcommand("geometry", "tree adjacency against the drawing");
  geometry_cmd->add_option("--levels", levels)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*locate_cmd) {
      auto flavor = TreeFlavor::parse(tree, seed);
      std::cout << locate(parse_node(node_text), flavor).dump() << "\n";
    } else if (*ball_cmd) {
      std::cout << ball_json(ball(levels, TreeFlavor::parse(tree))).dump() << "\n";
    } else if (*render_cmd) {
      Ball b = ball(levels);
      SvgStyle style;
      if (!palette.empty()) {
        style.palette.clear();
        std::stringstream s(palette);
        for (std::string c; std::getline(s, c, ',');)
          style.palette.push_back(c);
      }
      std::optional<SideColoring> sides;
      if (coloring != "none")
        sides = side_coloring(coloring, b);
      std::string svg = render_svg(b, sides, style);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream f(out_path);
        if (!(f << svg))
          throw DomainError("cannot write " + out_path);
      }
    } else if (*cayley_verify) {
      auto report = cayley_report(levels);
      std::cout << report.dump() << "\n";
      return report["ok"].get<bool>() ? 0 : 1;
    } else if (*cayley_color) {
      std::cout << coloring_json(extend_coloring(levels)).dump() << "\n";
    } else if (*classify_cmd) {
      auto a = assortment_arg(word);
      auto o = classify_assortment(a, depth);
      json depths = json::array();
      for (std::size_t d = 0; d < o.counts.size(); ++d)
        depths.push_back(d);
      json out{{"assortment", a.str()},
               {"depths", depths},
               {"counts", numbers(o.counts)},
               {"outcome", to_string(o.kind)}};
      if (o.kind == Outcome::finite)
        out["solutions"] = number(o.count);
      std::cout << out.dump() << "\n";
    } else if (*pump_cmd) {
      auto w = pumping_witness(n, k, m);
      json out{{"n", n}, {"k", k}, {"m", m}, {"start", w.start.str()},
               {"end", w.end.str()}, {"closed", w.closed},
               {"length", w.path.tiles.size() - 1}};
      if (show_path) {
        json tiles = json::array();
        for (const auto &t : w.path.tiles)
          tiles.push_back(t.str());
        out["path"] = tiles;
      }
      std::cout << out.dump() << "\n";
    } else if (*dfa_cmd) {
      auto d = PathDFA::from_json(read_file(dfa_path));
      Path p = build_Pn(n);
      // a tile reads as its node kind
      std::map<TileAddress, std::string> symbols;
      for (const auto &t : p.tiles)
        symbols[t] = std::to_string(static_cast<int>(status(t.node, TreeFlavor::standard())));
      auto r = run_dfa(d, p, symbols);
      json out{{"n", n}, {"tiles", p.tiles.size()}, {"accepted", r.accepted},
               {"final", r.final_state}, {"trace", r.trace}};
      out["repeat"] = r.repeat ? json{r.repeat->first, r.repeat->second} : json(nullptr);
      std::cout << out.dump() << "\n";
    } else if (*ca_run) {
      auto rules = parse_rules(read_file(rules_path));
      auto b = std::make_shared<const Ball>(ball(levels));
      auto c = load_init(init_path, b, quiescent);
      Configuration cur = *c;
      std::cout << json{{"step", 0}, {"states", states_json(cur)}}.dump() << "\n";
      for (std::size_t s = 1; s <= steps; ++s) {
        cur = step(cur, rules);
        std::cout << json{{"step", s}, {"states", states_json(cur)}}.dump() << "\n";
      }
    } else if (*motions_cmd) {
      Tolerance t;
      t.geometric = tol;
      json rows = json::array();
      bool ok = true;
      for (const auto &c : verify_motion_table(t)) {
        rows.push_back({{"sides", c.contiguous ? "contiguous" : "separated"},
                        {"moves", std::string{c.first, c.second}},
                        {"angle", c.angle},
                        {"expected", c.expected},
                        {"near_degenerate", c.near_degenerate}});
        ok = ok && c.matches() && c.angle != 1 && !c.near_degenerate;
      }
      std::cout << json{{"cases", rows}, {"ok", ok}}.dump() << "\n";
      return ok ? 0 : 1;
    } else if (*geometry_cmd) {
      Ball b = ball(levels);
      auto drawn = geometric_adjacency(b, layout(b), tol);
      std::size_t differ = 0;
      for (std::size_t i = 0; i < b.size(); ++i)
        for (int s = 0; s < 5; ++s)
          differ += drawn[i][s] != b.adjacency[i][s];
      std::cout << json{{"levels", levels}, {"tiles", b.size()}, {"tolerance", tol},
                        {"differences", differ}, {"ok", differ == 0}}
                       .dump()
                << "\n";
      return differ == 0 ? 0 : 1;
    }
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
