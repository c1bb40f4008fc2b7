// topoglyph: command-line front end for the library.
//
// Exit codes: 0 success, 1 domain error (error JSON on stderr), 2 budget
// exhausted.  Worker default comes from TOPOGLYPH_WORKERS.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "topoglyph/chords.hpp"
#include "topoglyph/json_io.hpp"
#include "topoglyph/planar_map.hpp"
#include "topoglyph/rotsys_search.hpp"

using namespace topoglyph;

namespace {

int default_workers() {
  if (const char* env = std::getenv("TOPOGLYPH_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

PerimetricOrder parse_order(const std::string& spec, int cut) {
  return PerimetricOrder::parse(split(spec, ','), cut);
}

std::string alpha_to_string(const AlphaCode& code) {
  std::string out;
  bool first = true;
  for (const auto& [i, bits] : code.bits) {
    if (!first) out.push_back(';');
    first = false;
    for (int b : bits) out.push_back(b ? '1' : '0');
  }
  return out;
}

AlphaCode alpha_from_string(const std::string& s, int n) {
  auto parts = split(s, ';');
  if ((int)parts.size() != n)
    throw std::invalid_argument("alpha needs one ';'-separated field per chord");
  AlphaCode code;
  for (int i = 1; i <= n; ++i) {
    auto& bits = code.bits[i];
    for (char c : parts[i - 1]) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("alpha bits must be 0/1");
      bits.push_back(c - '0');
    }
  }
  return code;
}

void emit(const json& j) {
  json out = j;
  out["schema_version"] = kSchemaVersion;
  std::cout << out.dump(2) << "\n";
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos)
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(BigInt(digits), den);
  }
  return Rational(BigInt(s));
}

// CSV with a "# points" section (x,y per vertex, in label order) followed
// by a "# edges" section (u,v per line).
Drawing drawing_from_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<Point> points;
  std::vector<Edge> edges;
  int section = 0;  // 1 = points, 2 = edges
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.find("point") != std::string::npos)
        section = 1;
      else if (line.find("edge") != std::string::npos)
        section = 2;
      else
        throw std::invalid_argument("unknown section: " + line);
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != 2)
      throw std::invalid_argument("expected two comma-separated fields");
    if (section == 1)
      points.push_back({parse_rational(cells[0]), parse_rational(cells[1])});
    else if (section == 2)
      edges.push_back(make_edge(std::stoi(cells[0]), std::stoi(cells[1])));
    else
      throw std::invalid_argument("data before a '# points'/'# edges' marker");
  }
  return from_straight_line(points, edges);
}

std::vector<std::pair<int, int>> pattern_edges(const std::string& name,
                                               unsigned q) {
  std::vector<std::pair<int, int>> h;
  if (name == "matching") {
    for (unsigned i = 1; i + 1 <= q; i += 2) h.push_back({(int)i, (int)i + 1});
  } else if (name == "path") {
    for (unsigned i = 1; i < q; ++i) h.push_back({(int)i, (int)i + 1});
  } else if (name == "complete") {
    for (unsigned i = 1; i <= q; ++i)
      for (unsigned j = i + 1; j <= q; ++j) h.push_back({(int)i, (int)j});
  } else {
    throw std::invalid_argument("pattern must be matching, path or complete");
  }
  return h;
}

void write_dual_svg(const Arrangement& a, const std::string& path) {
  // best-effort rendering: endpoints on a circle, chords as straight lines
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  int n = a.order.n();
  double r = 180.0, cx = 200.0, cy = 200.0;
  const double pi = 3.14159265358979323846;
  std::map<std::pair<int, bool>, std::pair<double, double>> at;
  const auto& seq = a.order.sequence();
  for (int i = 0; i < 2 * n; ++i) {
    double ang = 2 * pi * i / (2 * n);
    at[{seq[i].label, seq[i].is_b}] = {cx + r * std::cos(ang),
                                        cy + r * std::sin(ang)};
  }
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='400' height='400'>\n"
      << "<circle cx='" << cx << "' cy='" << cy << "' r='" << r
      << "' fill='none' stroke='black'/>\n";
  for (int i = 1; i <= n; ++i) {
    auto [x1, y1] = at[{i, false}];
    auto [x2, y2] = at[{i, true}];
    out << "<line x1='" << x1 << "' y1='" << y1 << "' x2='" << x2 << "' y2='"
        << y2 << "' stroke='steelblue'/>\n";
  }
  out << "</svg>\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Combinatorics of simple topological graphs"};
  app.require_subcommand(1);
  int workers = default_workers();

  // ---- rotsys ----
  auto* rotsys = app.add_subcommand("rotsys", "abstract rotation systems");
  rotsys->require_subcommand(1);
  {
    auto* eg = rotsys->add_subcommand("enumerate-good",
                                      "count good rotation systems on 1..n");
    auto n = std::make_shared<int>(4);
    auto wit = std::make_shared<int>(0);
    auto as_json = std::make_shared<bool>(false);
    auto nodes = std::make_shared<std::uint64_t>(0);
    eg->add_option("--n", *n, "ground set size")->required();
    eg->add_option("--workers", workers, "worker threads");
    eg->add_option("--witnesses", *wit, "number of witnesses to keep");
    eg->add_option("--max-nodes", *nodes, "search node budget (0 = none)");
    eg->add_flag("--json", *as_json, "JSON output");
    eg->callback([=, &workers]() {
      SearchOptions opts;
      opts.workers = workers;
      opts.max_witnesses = (std::size_t)*wit;
      opts.node_budget = *nodes;
      opts.n_limit = std::max(6, *n);
      auto rep = enumerate_good(*n, opts);
      if (*as_json) {
        json wits = json::array();
        for (const auto& r : rep.witnesses) wits.push_back(to_json(r));
        emit({{"n", *n},
              {"count", rep.count.str()},
              {"witnesses", wits},
              {"nodes_explored", rep.nodes_explored}});
      } else {
        std::cout << "good systems on 1.." << *n << ": " << rep.count.str()
                  << "\n";
      }
    });
  }
  {
    auto* ex = rotsys->add_subcommand(
        "extend-good", "allowed rotations of a new largest element");
    auto file = std::make_shared<std::string>();
    auto wit = std::make_shared<int>(0);
    auto nodes = std::make_shared<std::uint64_t>(0);
    auto rot = std::make_shared<std::string>();
    ex->add_option("--input", *file, "rotation system JSON file")->required();
    ex->add_option("--workers", workers, "worker threads");
    ex->add_option("--witnesses", *wit, "number of witnesses to keep");
    ex->add_option("--max-nodes", *nodes, "search node budget (0 = none)");
    ex->add_option("--rotation", *rot,
                   "only test this rotation of the new element (csv labels)");
    ex->callback([=, &workers]() {
      auto r = rotation_system_from_json(load_json(*file));
      if (!rot->empty()) {
        std::vector<int> seq;
        for (const auto& s : split(*rot, ',')) seq.push_back(std::stoi(s));
        bool ok = extension_exists_with_rotation(r, CyclicPerm(seq));
        emit({{"rotation", seq}, {"extends", ok}});
        return;
      }
      SearchOptions opts;
      opts.workers = workers;
      opts.max_witnesses = (std::size_t)*wit;
      opts.node_budget = *nodes;
      opts.n_limit = (int)r.size() + 1;
      auto rep = extend_good(r, opts);
      json allowed = json::array();
      for (const auto& c : rep.allowed_rotations) allowed.push_back(c.elements());
      emit({{"count", rep.count.str()},
            {"allowed_rotations", allowed},
            {"nodes_explored", rep.nodes_explored}});
    });
  }

  // ---- chords ----
  auto* chords = app.add_subcommand("chords", "chord diagrams");
  chords->require_subcommand(1);
  {
    auto* tab = chords->add_subcommand(
        "table", "C(n,k) row as CSV, k ascending from 0");
    auto n = std::make_shared<unsigned>(3);
    tab->add_option("--n", *n, "number of chords")->required();
    tab->callback([=]() {
      unsigned kmax = *n * (*n - 1) / 2;
      auto row = count_diagrams_by_crossings(*n, kmax);
      for (unsigned k = 0; k <= kmax; ++k) {
        if (k) std::cout << ",";
        auto it = row.find((int)k);
        std::cout << (it == row.end() ? "0" : it->second.str());
      }
      std::cout << "\n";
    });
  }

  // ---- arr ----
  auto* arr = app.add_subcommand("arr", "pseudochord arrangements");
  arr->require_subcommand(1);
  {
    auto* en = arr->add_subcommand("enumerate",
                                   "all classes with a perimetric order");
    auto order = std::make_shared<std::string>();
    auto cut = std::make_shared<int>(0);
    en->add_option("--order", *order, "endpoints, e.g. a1,a2,b1,b2")
        ->required();
    en->add_option("--cut", *cut, "cut position");
    en->add_option("--workers", workers, "worker threads");
    en->callback([=, &workers]() {
      auto po = parse_order(*order, *cut);
      auto classes = enumerate_classes(po, workers, std::max(5, po.n()));
      json cj = json::array();
      for (const auto& a : classes) cj.push_back(to_json(a));
      emit({{"count", std::to_string(classes.size())}, {"classes", cj}});
    });
  }
  {
    auto* enc = arr->add_subcommand("encode", "alpha code of an arrangement");
    auto file = std::make_shared<std::string>();
    enc->add_option("--input", *file, "arrangement JSON file")->required();
    enc->callback([=]() {
      auto a = arrangement_from_json(load_json(*file));
      emit({{"alpha", alpha_to_string(encode(a))}});
    });
  }
  {
    auto* dec = arr->add_subcommand("decode", "arrangement from alpha code");
    auto order = std::make_shared<std::string>();
    auto cut = std::make_shared<int>(0);
    auto alpha = std::make_shared<std::string>();
    dec->add_option("--order", *order, "endpoints, e.g. a1,a2,b1,b2")
        ->required();
    dec->add_option("--cut", *cut, "cut position");
    dec->add_option("--alpha", *alpha, "bit fields per chord, e.g. 1;0")
        ->required();
    dec->callback([=]() {
      auto po = parse_order(*order, *cut);
      auto a = decode(po, alpha_from_string(*alpha, po.n()));
      emit(to_json(a));
    });
  }
  {
    auto* du = arr->add_subcommand("dual", "dual quadrangulation");
    auto file = std::make_shared<std::string>();
    auto svg = std::make_shared<std::string>();
    du->add_option("--input", *file, "arrangement JSON file")->required();
    du->add_option("--svg", *svg, "write a best-effort SVG rendering");
    du->callback([=]() {
      auto a = arrangement_from_json(load_json(*file));
      auto d = dual_quadrangulation(a);
      auto ps = primal_stats(a);
      json edges = json::array();
      for (const auto& [u, v] : d.edges) edges.push_back(json::array({u, v}));
      json faces = json::array();
      for (const auto& f : d.inner_faces) faces.push_back(f);
      if (!svg->empty()) write_dual_svg(a, *svg);
      emit({{"n", d.n},
            {"k", d.k},
            {"external_vertices", d.external_count},
            {"internal_vertices", d.internal_count},
            {"edges", edges},
            {"inner_faces", faces},
            {"outer_face", d.outer_face},
            {"primal",
             {{"vertices", ps.vertices},
              {"edges", ps.edges},
              {"faces", ps.faces}}}});
    });
  }

  // ---- draw ----
  auto* draw = app.add_subcommand("draw", "combinatorial drawings");
  draw->require_subcommand(1);
  auto add_one_file = [&](const char* name, const char* desc,
                          auto handler) {
    auto* sub = draw->add_subcommand(name, desc);
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "drawing JSON file")->required();
    sub->callback([=]() { handler(drawing_from_json(load_json(*file))); });
  };
  add_one_file("validate", "check drawing consistency", [](const Drawing& d) {
    auto diag = validate(d);
    emit({{"ok", diag.ok}, {"message", diag.message}});
  });
  add_one_file("at-graph", "crossing pairs of a drawing", [](const Drawing& d) {
    emit(to_json(at_graph(d)));
  });
  add_one_file("spanning-tree", "topological spanning tree",
               [](const Drawing& d) { emit(to_json(spanning_tree(d))); });
  add_one_file("trep", "T-representation", [](const Drawing& d) {
    emit(to_json(t_representation(d)));
  });
  auto add_two_files = [&](const char* name, const char* desc, auto handler) {
    auto* sub = draw->add_subcommand(name, desc);
    auto f1 = std::make_shared<std::string>();
    auto f2 = std::make_shared<std::string>();
    sub->add_option("first", *f1, "drawing JSON file")->required();
    sub->add_option("second", *f2, "drawing JSON file")->required();
    sub->callback([=]() {
      handler(drawing_from_json(load_json(*f1)),
              drawing_from_json(load_json(*f2)));
    });
  };
  add_two_files("weak-iso", "same AT-graph?",
                [](const Drawing& a, const Drawing& b) {
                  emit({{"weak_isomorphic", weak_iso(a, b)}});
                });
  add_two_files("iso", "isomorphic drawings?",
                [](const Drawing& a, const Drawing& b) {
                  emit({{"isomorphic", is_isomorphic(a, b)}});
                });
  {
    auto* fp = draw->add_subcommand("from-points",
                                    "straight-line drawing from CSV");
    auto file = std::make_shared<std::string>();
    fp->add_option("file", *file, "CSV: '# points' x,y rows, '# edges' u,v rows")
        ->required();
    fp->callback([=]() { emit(to_json(drawing_from_points_csv(*file))); });
  }

  // ---- bounds ----
  auto* bounds = app.add_subcommand("bounds", "exact counting formulas");
  bounds->require_subcommand(1);
  {
    auto* ev = bounds->add_subcommand("eval", "evaluate a formula");
    auto formula = std::make_shared<std::string>();
    auto m = std::make_shared<std::uint64_t>(0);
    auto n = std::make_shared<unsigned>(0);
    auto k = std::make_shared<unsigned>(0);
    auto graph = std::make_shared<std::string>();
    auto q = std::make_shared<unsigned>(2);
    ev->add_option("formula", *formula,
                   "tutte|walsh|mullin|arrangement|read|nikiforov|ackermann|"
                   "variance")
        ->required();
    ev->add_option("--m", *m, "edge / size parameter");
    ev->add_option("--n", *n, "second parameter");
    ev->add_option("--k", *k, "crossing parameter");
    ev->add_option("--graph", *graph, "graph JSON file (variance)");
    ev->add_option("--q", *q, "number of clusters (variance)");
    ev->callback([=]() {
      std::string value;
      if (*formula == "tutte")
        value = tutte_maps((unsigned)*m).str();
      else if (*formula == "walsh")
        value = walsh_lehman_loopless((unsigned)*m).str();
      else if (*formula == "mullin")
        value = mullin_schellenberg((unsigned)*m, *n).str();
      else if (*formula == "arrangement")
        value = arrangement_bound(*n, *k).str();
      else if (*formula == "read")
        value = read_bound(*n, *k).str();
      else if (*formula == "nikiforov")
        value = nikiforov_bound(*n, (unsigned)*m).str();
      else if (*formula == "ackermann")
        value = std::to_string(inverse_ackermann(*m));
      else if (*formula == "variance")
        value = cross_variance(graph_from_json(load_json(*graph)), *q).str();
      else
        throw std::invalid_argument("unknown formula: " + *formula);
      emit({{"formula", *formula}, {"value", value}});
    });
  }
  {
    auto* pa = bounds->add_subcommand("partition",
                                      "random partition meeting the threshold");
    auto graph = std::make_shared<std::string>();
    auto q = std::make_shared<unsigned>(2);
    auto r = std::make_shared<unsigned>(1);
    auto pattern = std::make_shared<std::string>("matching");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto attempts = std::make_shared<std::uint64_t>(1000000);
    pa->add_option("--graph", *graph, "graph JSON file")->required();
    pa->add_option("--q", *q, "number of clusters")->required();
    pa->add_option("--r", *r, "Chebyshev parameter")->required();
    pa->add_option("--pattern", *pattern, "matching|path|complete");
    pa->add_option("--seed", *seed, "RNG seed");
    pa->add_option("--max-attempts", *attempts, "sampling budget");
    pa->callback([=]() {
      auto g = graph_from_json(load_json(*graph));
      auto res =
          find_partition(g, *q, *r, pattern_edges(*pattern, *q), *seed,
                         *attempts);
      if (!res) throw BudgetExceeded("partition sampling budget exhausted");
      json cl = json::array();
      for (int v = 1; v <= g.n; ++v) cl.push_back(res->cluster[v]);
      emit({{"attempts", res->attempts}, {"cluster", cl}});
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::stringstream msg;
    msg << e.what();
    std::cerr << json{{"schema_version", kSchemaVersion},
                      {"error", msg.str()}}
                     .dump()
              << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << json{{"schema_version", kSchemaVersion}, {"error", e.what()}}
                     .dump()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"schema_version", kSchemaVersion}, {"error", e.what()}}
                     .dump()
              << "\n";
    return 1;
  }
}
