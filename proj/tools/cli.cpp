#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

#include "rigid/bodybar.hpp"
#include "rigid/decomposition.hpp"
#include "rigid/io.hpp"
#include "rigid/numeric.hpp"
#include "rigid/rigidity2d.hpp"

namespace rigid::cli {

namespace {

using json = nlohmann::ordered_json;

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

std::vector<Edge> to_host(const Relabelled& r, const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  for (const Edge& e : edges) out.emplace_back(r.to_host[static_cast<std::size_t>(e.u)], r.to_host[static_cast<std::size_t>(e.v)]);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet to_host(const Relabelled& r, const VertexSet& vertices) {
  VertexSet out;
  for (Vertex x : vertices) out.push_back(r.to_host[static_cast<std::size_t>(x)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> parse_list(const GraphDocument& doc, const std::string& list) {
  std::vector<Vertex> out;
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(doc.resolve(token));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json framework_json(const Framework& f) {
  json out = json::array();
  for (const auto& p : f.positions) {
    json point = json::array();
    for (const auto& x : p) point.push_back(x.get_str());
    out.push_back(point);
  }
  return out;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    if (v.empty()) return "-";
    std::string s;
    const char* sep = v.front().is_object() ? "; " : " ";
    for (const auto& x : v) s += (s.empty() ? "" : sep) + (x.is_array() ? "(" + scalar_text(x) + ")" : scalar_text(x));
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [key, inner] : v.items()) s += (s.empty() ? "" : ", ") + key + "=" + scalar_text(inner);
    return s;
  }
  return v.dump();
}

// Top-level scalars as "key: value"; arrays of objects as aligned tables.
void render_human(const json& report, std::ostream& out) {
  for (const auto& [key, value] : report.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      std::vector<std::string> columns;
      for (const auto& [col, unused] : value.front().items()) columns.push_back(col);
      std::vector<std::vector<std::string>> rows{columns};
      for (const auto& row : value) {
        std::vector<std::string> cells;
        for (const auto& col : columns) cells.push_back(row.contains(col) ? scalar_text(row[col]) : "-");
        rows.push_back(cells);
      }
      std::vector<std::size_t> width(columns.size(), 0);
      for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      for (const auto& row : rows) {
        out << ' ';
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << ' ' << row[i];
          if (i + 1 < row.size()) out << std::string(width[i] - row[i].size(), ' ');
        }
        out << '\n';
      }
    } else if (value.is_object()) {
      out << key << ":\n";
      for (const auto& [sub, inner] : value.items()) out << "  " << sub << ": " << scalar_text(inner) << '\n';
    } else {
      out << key << ": " << scalar_text(value) << '\n';
    }
  }
}

struct Options {
  std::string file;
  std::string u, v;
  int dim = 2;
  int seeds = 3;
  std::uint64_t seed = kDefaultSeed;
  bool human = false;
  std::string anchors;
  std::string target;
};

json cmd_rank(const GraphDocument& doc) {
  Graph g = doc.to_graph();
  return {{"n", g.n()},
          {"m", g.m()},
          {"rank", r2_rank(g)},
          {"rigid", is_rigid_2d(g)},
          {"redundantly_rigid", is_redundantly_rigid_2d(g)}};
}

json cmd_components(const GraphDocument& doc) {
  Graph g = doc.to_graph();
  auto dec = r2_components(g);
  json comps = json::array();
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const auto& c = dec.components[i];
    comps.push_back({{"id", i}, {"trivial", c.trivial}, {"vertices", c.vertices}, {"edges", edges_json(c.edges)}});
  }
  return {{"components", comps}, {"bridges", edges_json(dec.bridges())}};
}

json cmd_blocks(const GraphDocument& doc) {
  Graph g = doc.to_graph();
  auto dec = r2_components(g);
  json out = json::array();
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const auto& c = dec.components[i];
    if (c.trivial) continue;
    Relabelled sub = edge_subgraph(g.n(), c.edges);
    auto tree = three_blocks(sub.graph);
    json blocks = json::array(), seps = json::array();
    for (const auto& b : tree.blocks)
      blocks.push_back({{"vertices", to_host(sub, b.vertices)},
                        {"edges", edges_json(to_host(sub, b.edges))},
                        {"virtual_edges", edges_json(to_host(sub, b.virtual_edges))}});
    for (const auto& s : tree.separators) {
      const Edge pair(sub.to_host[static_cast<std::size_t>(s.pair.u)], sub.to_host[static_cast<std::size_t>(s.pair.v)]);
      seps.push_back({{"pair", edge_json(pair)}, {"blocks", s.blocks}});
    }
    out.push_back({{"component", i}, {"k", tree.k}, {"blocks", blocks}, {"separators", seps}});
  }
  return {{"components", out}};
}

json cmd_linked(const GraphDocument& doc, const Options& opt) {
  Graph g = doc.to_graph();
  const Vertex u = doc.resolve(opt.u), v = doc.resolve(opt.v);
  if (opt.dim == 1) return {{"u", u}, {"v", v}, {"dim", 1}, {"linked", is_globally_linked_1d(g, u, v)}};
  if (opt.dim != 2) throw PreconditionViolation("linked: dimension must be 1 or 2");
  LinkedPairs pairs(g);
  auto w = pairs.witness(u, v);
  json out{{"u", u}, {"v", v}, {"dim", 2}, {"linked", w.has_value()}};
  if (w) {
    out["witness"] = w->is_edge ? json{{"edge", true}} : json{{"edge", false}, {"component", w->component}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json cmd_linked_all(const GraphDocument& doc) {
  Graph g = doc.to_graph();
  auto additions = linked_closure_additions(g);
  return {{"additions", edges_json(additions)}, {"closure_edges", g.m() + additions.size()}};
}

json cmd_clusters(const GraphDocument& doc) {
  Graph g = doc.to_graph();
  auto cover = globally_linked_clusters(g);
  json clusters = json::array();
  long sum = static_cast<long>(cover.uncovered.size());
  for (std::size_t i = 0; i < cover.clusters.size(); ++i) {
    clusters.push_back({{"id", i}, {"vertices", cover.clusters[i]}, {"component", cover.cluster_component[i]}});
    sum += 2 * static_cast<long>(cover.clusters[i].size()) - 3;
  }
  long correction = 0;
  json mult = json::array();
  for (const auto& s : cover.multiplicities) {
    mult.push_back({{"pair", edge_json(s.pair)}, {"clusters", s.blocks}});
    correction += s.blocks - 1;
  }
  std::ostringstream identity;
  identity << cover.rank << " = " << sum << " - " << correction;
  return {{"clusters", clusters},
          {"uncovered", edges_json(cover.uncovered)},
          {"multiplicities", mult},
          {"rank", cover.rank},
          {"identity", identity.str()},
          {"identity_holds", cover.identity_holds()},
          {"ordering", cover.ordering},
          {"three_shellable", is_m_shellable(cover.clusters, cover.ordering, 3)}};
}

json cmd_globally_rigid(const GraphDocument& doc) {
  Graph g = doc.to_graph();
  auto report = global_rigidity_2d(g);
  json failing = json::array();
  if (!report.globally_rigid) {
    if (!report.three_connected) failing.push_back("3-connectivity");
    if (!report.r2_connected) failing.push_back("R2-connectivity");
  }
  return {{"globally_rigid", report.globally_rigid},
          {"three_connected", report.three_connected},
          {"r2_connected", report.r2_connected},
          {"failing", failing}};
}

json cmd_localizable(const GraphDocument& doc, const Options& opt) {
  Graph g = doc.to_graph();
  const auto anchors = parse_list(doc, opt.anchors);
  const Vertex target = doc.resolve(opt.target);
  return {{"anchors", anchors}, {"target", target}, {"uniquely_localizable", uniquely_localizable(g, anchors, target)}};
}

json cmd_bodybar(const GraphDocument& doc, const Options& opt, const std::string& what) {
  Multigraph h = doc.to_multigraph();
  const int k = bodybar_trees(opt.dim);
  json out{{"dim", opt.dim}, {"trees", k}};
  if (what == "superbricks") {
    auto bricks = superbricks(h, k);
    out["parts"] = bricks.parts.parts;
    out["bridges"] = bricks.bridges;
  } else if (what == "rigid") {
    out["rigid"] = is_rigid_bodybar(h, opt.dim);
  } else if (what == "globally-rigid") {
    out["globally_rigid"] = is_globally_rigid_bodybar(h, opt.dim);
  } else {
    long u = 0, v = 0;
    try {
      u = std::stol(opt.u);
      v = std::stol(opt.v);
    } catch (const std::exception&) {
      throw InvalidArgument("body-bar linked: vertices are body-bar graph ids");
    }
    BodyBarLinkedPairs pairs(h, opt.dim);
    out["u"] = u;
    out["v"] = v;
    out["host_u"] = pairs.body_bar().graph.has_vertex(static_cast<Vertex>(u)) ? json(pairs.body_bar().host(static_cast<Vertex>(u))) : json();
    out["host_v"] = pairs.body_bar().graph.has_vertex(static_cast<Vertex>(v)) ? json(pairs.body_bar().host(static_cast<Vertex>(v))) : json();
    out["linked"] = pairs.linked(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return out;
}

json cmd_verify(const GraphDocument& doc, const Options& opt) {
  if (opt.seeds < 1) throw PreconditionViolation("verify: --seeds must be positive");
  if (opt.dim < 1) throw PreconditionViolation("verify: dimension must be positive");
  json out{{"dim", opt.dim}};
  Graph g;
  long combinatorial = 0;
  if (doc.kind == GraphDocument::Kind::Multigraph) {
    // Bodies contribute their own rank; bars contribute the union rank.
    Multigraph h = doc.to_multigraph();
    g = body_bar_construct(h).graph;
    const long d = opt.dim;
    for (Vertex w = 0; w < h.n(); ++w) {
      const long size = h.degree(w);
      if (size < d) throw PreconditionViolation("verify: every body needs at least d attachment points");
      combinatorial += d * size - d * (d + 1) / 2;
    }
    combinatorial += static_cast<long>(matroid_union_rank(h, bodybar_trees(opt.dim)));
    out["model"] = "body-bar";
  } else {
    g = doc.to_graph();
    if (opt.dim == 1) {
      combinatorial = g.n() - components_without(g, {}).second;
    } else if (opt.dim == 2) {
      combinatorial = r2_rank(g);
    } else {
      throw PreconditionViolation("verify: bar-joint rank is only characterized for d <= 2");
    }
    out["model"] = "bar-joint";
  }
  json samples = json::array();
  bool agree = true;
  for (int i = 0; i < opt.seeds; ++i) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
    const long r = static_cast<long>(numeric_rank(g, opt.dim, seed));
    samples.push_back({{"seed", seed}, {"rank", r}, {"agrees", r == combinatorial}});
    if (r > combinatorial) throw OracleDisagreement("verify: numeric rank " + std::to_string(r) + " exceeds " + std::to_string(combinatorial));
    agree = agree && r == combinatorial;
  }
  out["combinatorial_rank"] = combinatorial;
  out["samples"] = samples;
  out["agree"] = agree;
  if (!agree) throw OracleDisagreement("verify: numeric rank below the combinatorial rank at every seed");
  return out;
}

json cmd_refute(const GraphDocument& doc, const Options& opt) {
  Graph g = doc.to_graph();
  const Vertex u = doc.resolve(opt.u), v = doc.resolve(opt.v);
  if (u == v) throw InvalidArgument("refute: u and v must differ");
  json out{{"u", u}, {"v", v}, {"seed", opt.seed}};
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b) {
      if (a == u || a == v || b == u || b == v) continue;
      const Vertex removed[] = {a, b};
      auto [label, count] = components_without(g, removed);
      if (label[static_cast<std::size_t>(u)] == label[static_cast<std::size_t>(v)]) continue;
      VertexSet side;
      for (Vertex x = 0; x < g.n(); ++x)
        if (label[static_cast<std::size_t>(x)] == label[static_cast<std::size_t>(u)]) side.push_back(x);
      Framework f = realize_random(g, 2, opt.seed);
      auto reflected = reflect_refute(f, Edge(a, b), side, u, v);
      if (!reflected) continue;
      out["witness"] = true;
      out["separator"] = edge_json(Edge(a, b));
      out["side"] = side;
      out["framework"] = framework_json(f);
      out["reflected"] = framework_json(*reflected);
      out["distance"] = f.squared_distance(u, v).get_str();
      out["reflected_distance"] = reflected->squared_distance(u, v).get_str();
      out["equivalent"] = check_equivalent(f, *reflected);
      return out;
    }
  out["witness"] = false;
  out["message"] = "no separator witness";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rigidctl: combinatorial rigidity queries on graph files"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--human", opt.human, "tabular output instead of JSON");
  app.add_option("--seed", opt.seed, "seed for random realizations")->default_val(kDefaultSeed);

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", opt.file, "graph file")->required(); };
  auto pair_args = [&](CLI::App* sub) {
    sub->add_option("u", opt.u, "first vertex")->required();
    sub->add_option("v", opt.v, "second vertex")->required();
  };

  std::function<json(const GraphDocument&)> action;
  auto add = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };

  auto* rank = add("rank", "2D rank, rigidity and redundant rigidity");
  file_arg(rank);
  rank->callback([&] { action = cmd_rank; });

  auto* comps = add("components", "R2-components and bridges");
  file_arg(comps);
  comps->callback([&] { action = cmd_components; });

  auto* blocks = add("blocks", "3-blocks of every non-trivial R2-component");
  file_arg(blocks);
  blocks->callback([&] { action = cmd_blocks; });

  auto* linked = add("linked", "is the pair globally linked");
  file_arg(linked);
  pair_args(linked);
  linked->add_option("-d", opt.dim, "dimension (1 or 2)")->check(CLI::IsMember({1, 2}));
  linked->callback([&] { action = [&](const GraphDocument& d) { return cmd_linked(d, opt); }; });

  auto* all = add("linked-all", "edges added by the globally linked closure");
  file_arg(all);
  all->callback([&] { action = cmd_linked_all; });

  auto* clusters = add("clusters", "globally linked clusters and the cover identity");
  file_arg(clusters);
  clusters->callback([&] { action = cmd_clusters; });

  auto* grigid = add("globally-rigid", "global rigidity in the plane");
  file_arg(grigid);
  grigid->callback([&] { action = cmd_globally_rigid; });

  auto* local = add("localizable", "is the target uniquely localizable from the anchors");
  file_arg(local);
  local->add_option("--anchors", opt.anchors, "comma-separated anchor vertices")->required();
  local->add_option("--target", opt.target, "target vertex")->required();
  local->callback([&] { action = [&](const GraphDocument& d) { return cmd_localizable(d, opt); }; });

  auto* bodybar = add("bodybar", "body-bar queries on a multigraph");
  file_arg(bodybar);
  bodybar->add_option("-d", opt.dim, "dimension")->required();
  bodybar->require_subcommand(1);
  std::string bodybar_query;
  for (const std::string name : {"superbricks", "rigid", "globally-rigid", "linked"}) {
    auto* q = bodybar->add_subcommand(name);
    if (name == "linked") pair_args(q);
    q->callback([&, name] {
      bodybar_query = name;
      action = [&](const GraphDocument& d) { return cmd_bodybar(d, opt, bodybar_query); };
    });
  }

  auto* verify = add("verify", "combinatorial rank against numeric ranks");
  file_arg(verify);
  verify->add_option("-d", opt.dim, "dimension")->required();
  verify->add_option("--seeds", opt.seeds, "number of random realizations")->default_val(3);
  verify->callback([&] { action = [&](const GraphDocument& d) { return cmd_verify(d, opt); }; });

  auto* refute = add("refute", "reflection witness that a pair is not globally linked");
  file_arg(refute);
  pair_args(refute);
  refute->callback([&] { action = [&](const GraphDocument& d) { return cmd_refute(d, opt); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    GraphDocument doc = read_document(opt.file);
    json report{{"command", app.get_subcommands().front()->get_name()}};
    if (!doc.names.empty()) report["names"] = doc.names;
    const json payload = action(doc);
    for (const auto& [key, value] : payload.items()) report[key] = value;
    if (opt.human)
      render_human(report, out);
    else
      out << report.dump(2) << '\n';
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const PreconditionViolation& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvalidArgument& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const OracleDisagreement& e) {
    err << "oracle disagreement: " << e.what() << '\n';
    return kOracleDisagreement;
  }
}

}  // namespace rigid::cli
