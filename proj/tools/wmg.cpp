// Copyright 2026 The wmg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Every verb reads the graph text format, prints a
// UTF-8 JSON report on stdout and diagnoses on stderr.  Exit codes:
//   0  success
//   2  operation not applicable to this input (wrong graph class)
//   3  parse or usage errors
//   4  budget or cap exceeded

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmg/generators.hpp"
#include "wmg/report.hpp"

using nlohmann::json;
using namespace wmg;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("bad vertex list: " + s);
    }
  }
  if (out.empty()) throw ParseError("empty vertex list");
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json graph_summary(const Graph& g) {
  return json{{"n", g.n()}, {"m", g.edge_count()}};
}

struct Options {
  std::string graph_path;
  std::string graph2_path;
  std::string out_path;
  std::string instance_path;
  std::string manifest_path;
  std::string mode = "both";
  std::string kind;
  std::string set_list;
  std::string cycle_list;
  std::string interface_a;
  std::string interface_b;
  long long budget = 50'000'000;
  int cap = 64;
  uint64_t seed = 0;
  bool have_seed = false;
  int from = 0, to = 0, base = 0, radius = 0, anchor = 0;
  int iterate = 1, k = -1, n = 0, rows = 0, cols = 0, dim = 0, a = 0, b = 0;
  bool star = false;
  bool check = false;
  bool json_only = false;
};

int run_recognize(const Options& opt) {
  auto report_for = [](const std::string& path) {
    auto g = load_graph_file(path);
    auto d = all_pairs_distances(g);
    return to_json(build_class_report(g, d));
  };
  if (!opt.manifest_path.empty()) {
    std::ifstream in(opt.manifest_path);
    if (!in) throw ParseError("cannot open manifest: " + opt.manifest_path);
    json arr = json::array();
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      arr.push_back(json{{"graph", line}, {"report", report_for(line)}});
    }
    emit(arr);
    return 0;
  }
  emit(report_for(opt.graph_path));
  return 0;
}

int run_hull(const Options& opt) {
  auto g = load_graph_file(opt.graph_path);
  auto d = all_pairs_distances(g);
  auto seed_set = parse_int_list(opt.set_list);
  for (int v : seed_set)
    if (!g.valid_vertex(v)) throw ParseError("vertex out of range in --set");
  auto hull = gated_hull(g, d, seed_set);
  emit(json{{"set", seed_set}, {"hull", hull.members}});
  return 0;
}

int run_gstar(const Options& opt) {
  auto g = load_graph_file(opt.graph_path);
  Graph cur = g;
  BarycentricGraph bary;
  for (int i = 0; i < opt.iterate; ++i) {
    SwmGraph s(cur);
    bary = s.barycentric();
    cur = bary.graph;
  }
  if (!opt.out_path.empty()) save_graph_file(cur, opt.out_path);
  json j = to_json(bary);
  j["iterations"] = opt.iterate;
  j["graph"] = graph_summary(cur);
  if (!opt.out_path.empty()) j["out"] = opt.out_path;
  emit(j);
  return 0;
}

int run_thicken(const Options& opt) {
  SwmGraph s(load_graph_file(opt.graph_path));
  Graph t = opt.k < 0 ? s.thickening() : s.partial_thickening(opt.k);
  if (!opt.out_path.empty()) save_graph_file(t, opt.out_path);
  json j;
  j["graph"] = graph_summary(t);
  j["k"] = opt.k < 0 ? json("infinity") : json(opt.k);
  if (!opt.out_path.empty()) j["out"] = opt.out_path;
  emit(j);
  return 0;
}

int run_normalpath(const Options& opt) {
  SwmGraph s(load_graph_file(opt.graph_path));
  if (!s.graph().valid_vertex(opt.from) || !s.graph().valid_vertex(opt.to))
    throw ParseError("--from/--to out of range");
  auto p = s.normal_bg_path(opt.from, opt.to);
  json j = to_json(p);
  j["thickening-distance"] = s.dist_delta(opt.from, opt.to);
  emit(j);
  return 0;
}

int run_zeroext(const Options& opt) {
  auto g = load_graph_file(opt.graph_path);
  auto d = all_pairs_distances(g);
  std::ifstream in(opt.instance_path);
  if (!in) throw ParseError("cannot open instance: " + opt.instance_path);
  json ij;
  try {
    in >> ij;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad instance JSON: ") + e.what());
  }
  auto inst = zero_ext_instance_from_json(ij);
  inst.validate(g.n());
  json j;
  if (opt.mode == "exact" || opt.mode == "both")
    j["exact"] = to_json(solve_exact(g, d, inst, opt.budget));
  if (opt.mode == "approx" || opt.mode == "both") {
    SwmGraph s(std::move(g));
    j["approx"] = to_json(approx2(s, inst, opt.anchor, opt.budget));
  }
  emit(j);
  return 0;
}

int run_hyperbolicity(const Options& opt) {
  auto g = load_graph_file(opt.graph_path);
  auto d = all_pairs_distances(g);
  auto rep = verify_hyperbolicity_bounds(g, d, opt.cap == 64 ? -1 : opt.cap);
  emit(to_json(rep));
  if (rep.kappa_capped) {
    std::cerr << "grid search reached its cap; kappa is only a lower bound\n";
    return 4;
  }
  return rep.weakly_modular ? 0 : 2;
}

int run_bfs(const Options& opt) {
  auto g = load_graph_file(opt.graph_path);
  auto d = all_pairs_distances(g);
  if (!g.valid_vertex(opt.base)) throw ParseError("--base out of range");
  auto order = bfs_order(g, opt.base, opt.seed);
  json j = to_json(order);
  if (opt.check) {
    auto dp = is_distance_preserving(g, d, order.order);
    j["distance-preserving"] = dp.yes;
    if (!dp.yes) j["violating-pair"] = dp.witness;
  }
  emit(j);
  return 0;
}

int run_fill(const Options& opt) {
  auto g = load_graph_file(opt.graph_path);
  auto d = all_pairs_distances(g);
  auto cycle = parse_int_list(opt.cycle_list);
  auto filling = fill_cycle(g, d, cycle);
  json j = to_json(filling);
  j["replay-ok"] = replay_filling(g, cycle, filling);
  j["length"] = cycle.size();
  emit(j);
  return 0;
}

int run_cover(const Options& opt) {
  auto g = load_graph_file(opt.graph_path);
  auto d = all_pairs_distances(g);
  if (!g.valid_vertex(opt.base)) throw ParseError("--base out of range");
  auto ball = universal_cover_ball(g, d, opt.base, opt.radius,
                                   opt.cap == 64 ? 1'000'000 : static_cast<size_t>(opt.cap));
  if (!opt.out_path.empty()) save_graph_file(ball.graph, opt.out_path);
  json j = to_json(ball);
  j["graph"] = graph_summary(ball.graph);
  if (!opt.out_path.empty()) j["out"] = opt.out_path;
  emit(j);
  return 0;
}

int run_diag(const Options& opt) {
  auto g = load_graph_file(opt.graph_path);
  json j;
  Graph result = g;
  if (opt.star) {
    auto sk = wm_skeleton(g, opt.cap);
    j["rank"] = sk.rank;
    result = sk.dstar;
  } else {
    result = diagonal_extension(g, opt.k < 0 ? 1 : opt.k);
    j["k"] = opt.k < 0 ? 1 : opt.k;
  }
  if (!opt.out_path.empty()) save_graph_file(result, opt.out_path);
  j["graph"] = graph_summary(result);
  if (!opt.out_path.empty()) j["out"] = opt.out_path;
  emit(j);
  return 0;
}

int run_generate(const Options& opt) {
  Graph g = [&]() -> Graph {
    if (opt.kind == "path") return path_graph(opt.n);
    if (opt.kind == "cycle") return cycle_graph(opt.n);
    if (opt.kind == "grid") return grid_graph(opt.rows, opt.cols);
    if (opt.kind == "cube") return cube_graph(opt.dim);
    if (opt.kind == "hyperoctahedron") return hyperoctahedron(opt.k < 0 ? 2 : opt.k);
    if (opt.kind == "complete-bipartite") return complete_bipartite(opt.a, opt.b);
    if (opt.kind == "cartesian-product")
      return cartesian_product(load_graph_file(opt.graph_path), load_graph_file(opt.graph2_path));
    if (opt.kind == "gated-amalgam")
      return gated_amalgam(load_graph_file(opt.graph_path), load_graph_file(opt.graph2_path),
                           parse_int_list(opt.interface_a), parse_int_list(opt.interface_b));
    if (opt.kind == "random-swm") {
      if (!opt.have_seed) throw ParseError("random-swm requires --seed");
      return random_swm(opt.seed, opt.n > 0 ? opt.n : 40);
    }
    throw ParseError("unknown kind: " + opt.kind);
  }();
  if (opt.out_path.empty()) throw ParseError("generate requires --out");
  save_graph_file(g, opt.out_path);
  json j = graph_summary(g);
  j["kind"] = opt.kind;
  j["out"] = opt.out_path;
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algorithms on weakly modular graphs and their relatives"};
  app.require_subcommand(1);
  Options opt;

  auto add_graph = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--graph", opt.graph_path, "graph file (text format)");
    if (required) o->required();
  };

  auto* recognize = app.add_subcommand("recognize", "class membership report");
  recognize->add_option("--graph", opt.graph_path, "graph file");
  recognize->add_option("--manifest", opt.manifest_path, "file listing one graph path per line");
  recognize->add_flag("--json", opt.json_only, "machine output only");

  auto* hull = app.add_subcommand("hull", "gated hull of a vertex set");
  add_graph(hull);
  hull->add_option("--set", opt.set_list, "comma-separated vertex ids")->required();

  auto* gstar = app.add_subcommand("gstar", "barycentric graph of an swm-graph");
  add_graph(gstar);
  gstar->add_option("--iterate", opt.iterate, "number of barycentric iterations");
  gstar->add_option("--out", opt.out_path, "write the resulting graph here");

  auto* thicken = app.add_subcommand("thicken", "thickening of an swm-graph");
  add_graph(thicken);
  thicken->add_option("--k", opt.k, "partial thickening: join Boolean pairs at distance <= k");
  thicken->add_option("--out", opt.out_path, "write the resulting graph here");

  auto* normalpath = app.add_subcommand("normalpath", "normal Boolean-gated path");
  add_graph(normalpath);
  normalpath->add_option("--from", opt.from)->required();
  normalpath->add_option("--to", opt.to)->required();

  auto* zeroext = app.add_subcommand("zeroext", "minimum 0-extension solvers");
  add_graph(zeroext);
  zeroext->add_option("--instance", opt.instance_path, "instance JSON")->required();
  zeroext->add_option("--mode", opt.mode, "exact | approx | both")
      ->check(CLI::IsMember({"exact", "approx", "both"}));
  zeroext->add_option("--anchor", opt.anchor, "rounding anchor vertex");
  zeroext->add_option("--budget", opt.budget, "enumeration budget");

  auto* hyper = app.add_subcommand("hyperbolicity", "hyperbolicity parameter report");
  add_graph(hyper);
  hyper->add_option("--cap", opt.cap, "grid search cap");

  auto* bfs = app.add_subcommand("bfs", "seeded BFS distance-preserving order");
  add_graph(bfs);
  bfs->add_option("--base", opt.base, "base vertex")->required();
  bfs->add_option("--seed", opt.seed, "tie-breaking seed")->required();
  bfs->add_flag("--check", opt.check, "verify all prefixes are isometric");

  auto* fill = app.add_subcommand("fill", "disc filling of a cycle in a meshed graph");
  add_graph(fill);
  fill->add_option("--cycle", opt.cycle_list, "comma-separated closed walk")->required();

  auto* cover = app.add_subcommand("cover", "universal cover ball of the triangle-square complex");
  add_graph(cover);
  cover->add_option("--base", opt.base, "base vertex")->required();
  cover->add_option("--radius", opt.radius, "ball radius")->required();
  cover->add_option("--cap", opt.cap, "layer size cap");
  cover->add_option("--out", opt.out_path, "write the cover graph here");

  auto* diag = app.add_subcommand("diag", "reduced diagonal extensions");
  add_graph(diag);
  diag->add_option("--k", opt.k, "number of extension rounds");
  diag->add_flag("--star", opt.star, "iterate to the fixpoint and report the rank");
  diag->add_option("--cap", opt.cap, "fixpoint iteration cap");
  diag->add_option("--out", opt.out_path, "write the resulting graph here");

  auto* generate = app.add_subcommand("generate", "graph generators");
  generate->add_option("--kind", opt.kind,
                       "path | cycle | grid | cube | hyperoctahedron | complete-bipartite | "
                       "cartesian-product | gated-amalgam | random-swm")
      ->required();
  generate->add_option("--out", opt.out_path, "output graph file")->required();
  generate->add_option("--n", opt.n, "vertex count (path, cycle) or size cap (random-swm)");
  generate->add_option("--rows", opt.rows);
  generate->add_option("--cols", opt.cols);
  generate->add_option("--dim", opt.dim, "cube dimension");
  generate->add_option("--k", opt.k, "hyperoctahedron parameter");
  generate->add_option("--a", opt.a, "complete-bipartite side");
  generate->add_option("--b", opt.b, "complete-bipartite side");
  generate->add_option("--graph", opt.graph_path, "first factor / first summand");
  generate->add_option("--graph2", opt.graph2_path, "second factor / second summand");
  generate->add_option("--interface-a", opt.interface_a, "amalgam interface in --graph");
  generate->add_option("--interface-b", opt.interface_b, "amalgam interface in --graph2");
  auto* seed_opt = generate->add_option("--seed", opt.seed, "seed (required for random-swm)");

  // all verbs emit JSON on stdout; --json is accepted everywhere for
  // symmetry with scripted callers
  for (auto* cmd : app.get_subcommands({}))
    if (cmd->get_option_no_throw("--json") == nullptr)
      cmd->add_flag("--json", opt.json_only, "machine output only");

  try {
    app.parse(argc, argv);
    opt.have_seed = seed_opt->count() > 0;
    if (recognize->parsed()) {
      if (opt.graph_path.empty() && opt.manifest_path.empty())
        throw ParseError("recognize needs --graph or --manifest");
      return run_recognize(opt);
    }
    if (hull->parsed()) return run_hull(opt);
    if (gstar->parsed()) return run_gstar(opt);
    if (thicken->parsed()) return run_thicken(opt);
    if (normalpath->parsed()) return run_normalpath(opt);
    if (zeroext->parsed()) return run_zeroext(opt);
    if (hyper->parsed()) return run_hyperbolicity(opt);
    if (bfs->parsed()) return run_bfs(opt);
    if (fill->parsed()) return run_fill(opt);
    if (cover->parsed()) return run_cover(opt);
    if (diag->parsed()) return run_diag(opt);
    if (generate->parsed()) return run_generate(opt);
    return 3;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  } catch (const NotAClosedWalkError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotApplicableError& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const CapReachedError& e) {
    std::cerr << "cap reached: " << e.what() << "\n";
    return 4;
  } catch (const RadiusTooLargeError& e) {
    std::cerr << "cap reached: " << e.what() << "\n";
    return 4;
  } catch (const RankDivergesError& e) {
    std::cerr << "rank diverges: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
