#include "rdrd/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rdrd/error.hpp"
#include "rdrd/json_io.hpp"

namespace rdrd::cli {

namespace {

struct Globals {
  bool text = false;
  double timeout = 0.0;
  int threads = 1;
  std::uint64_t seed = 1;
};

double default_timeout() {
  if (const char* env = std::getenv("RDRD_TIMEOUT")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      return 0.0;
    }
  }
  return 0.0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

/// A path to an edge-list file, or a family spec such as "cycle:5".
Graph graph_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return load_graph_file(arg);
  if (arg.find(':') != std::string::npos) return build_family(parse_family_spec(arg));
  throw Error("'" + arg + "' is neither a graph file nor a family spec");
}

/// A path to a labeling file, or the labels themselves.
Labeling labels_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return load_labeling_file(arg);
  return parse_labeling(arg);
}

void render_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
  if (!j.is_object()) {
    out << prefix << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      render_text(value, out, prefix + key + ".");
    } else {
      out << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

void emit(const Globals& g, const Json& payload, std::ostream& out) {
  if (g.text) {
    render_text(payload, out);
  } else {
    out << payload.dump() << '\n';
  }
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct ParamOptions {
  int n = 0, m = 0, p = 0, q = 0, rows = 0;
  std::string g, h;
  int factor_value = -1;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "order parameter n");
    app->add_option("--m", m, "column count m");
    app->add_option("--p", p, "first part size p");
    app->add_option("--q", q, "second part size q");
    app->add_option("--rows", rows, "strip rows (2 or 3)");
    app->add_option("--factor-g", g, "factor graph G (file or family spec)");
    app->add_option("--factor-h", h, "factor graph H (file or family spec)");
    app->add_option("--factor-value", factor_value, "known RDRD number of G (p2x_bipartite)");
  }

  [[nodiscard]] CatalogParams build() const {
    CatalogParams cp;
    cp.n = n;
    cp.m = m;
    cp.p = p;
    cp.q = q;
    cp.rows = rows;
    if (!g.empty()) cp.g = graph_arg(g);
    if (!h.empty()) cp.h = graph_arg(h);
    if (factor_value >= 0) cp.factor_value = factor_value;
    return cp;
  }
};

Problem parse_problem(const std::string& name) {
  if (name == "rdrd") return Problem::rdrd_min;
  if (name == "drd") return Problem::drd_min;
  if (name == "dom") return Problem::dom_min;
  if (name == "twopack") return Problem::twopack_max;
  throw CLI::ValidationError("--problem", "unknown problem '" + name + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Globals globals;
  globals.timeout = default_timeout();

  CLI::App app{"Restrained double Roman domination toolkit", "rdrd"};
  app.require_subcommand(1);
  app.add_flag("--json", [&](std::int64_t) { globals.text = false; }, "JSON output (default)");
  app.add_flag("--text", globals.text, "plain key: value output");
  app.add_option("--timeout", globals.timeout, "solver time limit in seconds (0: none; default $RDRD_TIMEOUT)");
  app.add_option("--threads", globals.threads, "solver worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", globals.seed, "seed for random graph generation");
  app.fallthrough();

  // solve
  auto* solve = app.add_subcommand("solve", "exact RDRD / DRD / domination / 2-packing number");
  std::string solve_graph, solve_problem = "rdrd", solve_method;
  bool solve_all = false;
  solve->add_option("--graph", solve_graph, "graph file or family spec")->required();
  solve->add_option("--problem", solve_problem, "rdrd | drd | dom | twopack");
  solve->add_option("--method", solve_method, "brute | bnb (default: bnb for rdrd/drd, else brute)");
  solve->add_flag("--all-optima", solve_all, "enumerate every optimum");

  // verify
  auto* verify = app.add_subcommand("verify", "check a labeling against the defining rules");
  std::string verify_graph, verify_labels, verify_variant = "rdrd";
  verify->add_option("--graph", verify_graph, "graph file or family spec")->required();
  verify->add_option("--labels", verify_labels, "labeling file or inline labels")->required();
  verify->add_option("--variant", verify_variant, "rdrd | drd");

  // construct
  auto* construct = app.add_subcommand("construct", "explicit optimal labeling for a catalog family");
  std::string construct_family, construct_graph_out, construct_labels_out;
  ParamOptions construct_params;
  construct->add_option("--family", construct_family, "catalog family")->required();
  construct_params.attach(construct);
  construct->add_option("--emit-graph", construct_graph_out, "write the graph as an edge list");
  construct->add_option("--emit-labels", construct_labels_out, "write the labeling as JSON");

  // product
  auto* product = app.add_subcommand("product", "strong, cardinal or corona product");
  std::string product_kind, product_left, product_right, product_out, product_map;
  product->add_option("--kind", product_kind, "strong | cardinal | corona")->required();
  product->add_option("--left", product_left, "left factor (file or family spec)")->required();
  product->add_option("--right", product_right, "right factor (file or family spec)")->required();
  product->add_option("--out", product_out, "edge-list output file");
  product->add_option("--map", product_map, "coordinate map JSON (default: OUT.map.json)");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "closed forms, bounds and cross-checks");
  std::string catalog_family, catalog_sweep, catalog_bound, catalog_left, catalog_right;
  ParamOptions catalog_params;
  bool catalog_check = false, catalog_list = false;
  int catalog_random = 0, catalog_max_order = 24;
  catalog->add_option("--family", catalog_family, "catalog family");
  catalog_params.attach(catalog);
  catalog->add_flag("--check", catalog_check, "solve exactly and compare with the closed form");
  catalog->add_option("--sweep", catalog_sweep, "with --check: NAME=LO:HI over one parameter");
  catalog->add_option("--max-order", catalog_max_order, "with --check: skip larger instances");
  catalog->add_option("--bound", catalog_bound, "connected_upper | strong_ob1 | strong_str4 | cardinal | corona_k1");
  catalog->add_option("--left", catalog_left, "with --bound: graph G");
  catalog->add_option("--right", catalog_right, "with --bound: graph H");
  catalog->add_option("--random-graphs", catalog_random, "check the domination chain on K seeded random graphs");
  catalog->add_flag("--list", catalog_list, "list catalog families");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "exact cover by 3-sets to RDRD on chordal graphs");
  std::string reduce_x3c, reduce_graph_out;
  bool reduce_solve = false;
  reduce->add_option("--x3c", reduce_x3c, "X3C instance JSON file")->required();
  reduce->add_option("--emit-graph", reduce_graph_out, "write the reduction graph as an edge list");
  reduce->add_flag("--solve", reduce_solve, "run branch-and-bound on the reduction graph");

  // audit
  auto* audit = app.add_subcommand("audit", "column lemmas and bagging on strip-shaped graphs");
  std::string audit_layout, audit_graph, audit_labels;
  int audit_rows = 2, audit_column_count = 0;
  bool audit_all = false;
  audit->add_option("--layout", audit_layout, "strong_strip | c3xcm | corona_path | corona_cycle")->required();
  audit->add_option("--graph", audit_graph, "graph file or family spec (checked against the layout)");
  audit->add_option("--labels", audit_labels, "labeling file or inline labels");
  audit->add_option("--rows", audit_rows, "strong_strip rows");
  audit->add_option("--columns", audit_column_count, "column count (default: from the graph order)");
  audit->add_flag("--all-optima", audit_all, "audit every optimal labeling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return usage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*solve) {
      const Graph g = graph_arg(solve_graph);
      const Problem problem = parse_problem(solve_problem);
      const bool labeling_problem = problem == Problem::rdrd_min || problem == Problem::drd_min;
      std::string method = solve_method.empty() ? (labeling_problem ? "bnb" : "brute") : solve_method;
      SolveResult r;
      if (method == "brute") {
        BruteForceOptions opts;
        opts.enumerate_all = solve_all;
        r = brute_force(g, problem, opts);
      } else if (method == "bnb") {
        if (!labeling_problem) {
          err << "bnb solves rdrd and drd only\n";
          return usage;
        }
        BnbOptions opts;
        opts.variant = problem == Problem::drd_min ? Variant::drd : Variant::rdrd;
        opts.timeout_seconds = globals.timeout;
        opts.threads = globals.threads;
        opts.enumerate_all = solve_all;
        r = solve_rdrd_bnb(g, opts);
      } else {
        err << "unknown method '" << method << "'\n";
        return usage;
      }
      Json payload = {{"problem", solve_problem}, {"method", method}};
      payload.update(to_json(r));
      if (solve_all && !r.optima.empty()) {
        Json optima = Json::array();
        for (const auto& f : r.optima) optima.push_back(to_json(f));
        payload["optima"] = std::move(optima);
      }
      payload["timing"] = {{"ms", ms_since(start)}};
      emit(globals, payload, out);
      return ok;
    }

    if (*verify) {
      const Graph g = graph_arg(verify_graph);
      const Labeling f = labels_arg(verify_labels);
      Variant variant;
      if (verify_variant == "rdrd") {
        variant = Variant::rdrd;
      } else if (verify_variant == "drd") {
        variant = Variant::drd;
      } else {
        err << "unknown variant '" << verify_variant << "'\n";
        return usage;
      }
      const auto report = validate(g, f, variant);
      Json payload = {{"variant", verify_variant}, {"weight", f.weight()}};
      payload.update(to_json(report));
      emit(globals, payload, out);
      return report.valid ? ok : failed;
    }

    if (*construct) {
      const CatalogFamily family = parse_catalog_family(construct_family);
      const CatalogParams params = construct_params.build();
      const Certificate cert = construct_certificate(family, params);
      const FormulaResult formula = catalog_value(family, params);
      const bool valid = is_valid(cert.graph, cert.labeling);
      const int w = cert.labeling.weight();
      if (!construct_graph_out.empty()) save_graph_file(cert.graph, construct_graph_out);
      if (!construct_labels_out.empty()) {
        write_file(construct_labels_out, Json{{"labels", to_json(cert.labeling)}}.dump() + "\n");
      }
      Json payload = {{"family", construct_family},
                      {"params", formula.params},
                      {"n", cert.graph.order()},
                      {"valid", valid},
                      {"weight", w},
                      {"claimed_weight", cert.claimed_weight},
                      {"catalog_value", formula.value},
                      {"citation", cert.citation},
                      {"labels", to_json(cert.labeling)}};
      emit(globals, payload, out);
      return valid && w == cert.claimed_weight && w == formula.value ? ok : failed;
    }

    if (*product) {
      const Graph left = graph_arg(product_left);
      const Graph right = graph_arg(product_right);
      Product p;
      if (product_kind == "strong") {
        p = strong_product(left, right);
      } else if (product_kind == "cardinal") {
        p = cardinal_product(left, right);
      } else if (product_kind == "corona") {
        p = corona(left, right);
      } else {
        err << "unknown product kind '" << product_kind << "'\n";
        return usage;
      }
      Json payload = {{"kind", product_kind}, {"n", p.graph.order()}, {"m", p.graph.size()}};
      if (!product_out.empty()) {
        const std::string map_path = product_map.empty() ? product_out + ".map.json" : product_map;
        save_graph_file(p.graph, product_out);
        write_file(map_path, to_json(p.map).dump() + "\n");
        payload["graph_file"] = product_out;
        payload["map_file"] = map_path;
      } else {
        payload["graph"] = to_json(p.graph);
        payload["map"] = to_json(p.map);
      }
      emit(globals, payload, out);
      return ok;
    }

    if (*catalog) {
      if (catalog_list) {
        Json names = Json::array();
        for (auto f : all_catalog_families()) names.push_back(catalog_family_name(f));
        emit(globals, {{"families", names}}, out);
        return ok;
      }
      if (catalog_random > 0) {
        Json rows = Json::array();
        bool all_hold = true;
        std::mt19937_64 rng(globals.seed);
        std::uniform_int_distribution<int> order(3, 9);
        for (int i = 0; i < catalog_random; ++i) {
          const int n = order(rng);
          const std::uint64_t graph_seed = rng();
          const Graph g = random_connected_graph(n, 0.3, graph_seed);
          const ChainReport c = domination_chain(g);
          all_hold = all_hold && c.holds;
          rows.push_back({{"n", c.n},
                          {"m", g.size()},
                          {"graph_seed", graph_seed},
                          {"gamma", c.gamma},
                          {"drd", c.drd},
                          {"rdrd", c.rdrd},
                          {"holds", c.holds}});
        }
        emit(globals, {{"seed", globals.seed}, {"graphs", rows}, {"all_hold", all_hold}}, out);
        return all_hold ? ok : failed;
      }
      if (!catalog_bound.empty()) {
        const BoundId id = parse_bound_id(catalog_bound);
        if (catalog_left.empty()) {
          err << "--bound needs --left\n";
          return usage;
        }
        const Graph g = graph_arg(catalog_left);
        std::optional<Graph> h;
        if (!catalog_right.empty()) h = graph_arg(catalog_right);
        emit(globals, to_json(catalog_bounds(id, g, h)), out);
        return ok;
      }
      if (catalog_family.empty()) {
        err << "catalog needs --family, --bound, --random-graphs or --list\n";
        return usage;
      }
      const CatalogFamily family = parse_catalog_family(catalog_family);
      const CatalogParams base = catalog_params.build();
      if (catalog_check) {
        std::vector<CatalogParams> instances;
        if (catalog_sweep.empty()) {
          instances.push_back(base);
        } else {
          const auto eq = catalog_sweep.find('=');
          const auto colon = catalog_sweep.find(':', eq == std::string::npos ? 0 : eq);
          if (eq == std::string::npos || colon == std::string::npos) {
            err << "--sweep expects NAME=LO:HI\n";
            return usage;
          }
          const std::string name = catalog_sweep.substr(0, eq);
          const int lo = std::stoi(catalog_sweep.substr(eq + 1, colon - eq - 1));
          const int hi = std::stoi(catalog_sweep.substr(colon + 1));
          for (int v = lo; v <= hi; ++v) {
            CatalogParams cp = base;
            if (name == "n") {
              cp.n = v;
            } else if (name == "m") {
              cp.m = v;
            } else if (name == "p") {
              cp.p = v;
            } else if (name == "q") {
              cp.q = v;
            } else {
              err << "cannot sweep '" << name << "'\n";
              return usage;
            }
            instances.push_back(cp);
          }
        }
        CrosscheckBudget budget;
        budget.timeout_seconds = globals.timeout > 0 ? globals.timeout : budget.timeout_seconds;
        budget.threads = globals.threads;
        budget.max_order = catalog_max_order;
        const auto report = catalog_crosscheck(family, instances, budget);
        Json payload = to_json(report);
        payload["timing"] = {{"ms", ms_since(start)}};
        emit(globals, payload, out);
        return report.mismatches == 0 ? ok : failed;
      }
      emit(globals, to_json(catalog_value(family, base)), out);
      return ok;
    }

    if (*reduce) {
      const X3CInstance inst = parse_x3c_json(read_file(reduce_x3c));
      const Reduction r = build_reduction(inst);
      if (!reduce_graph_out.empty()) save_graph_file(r.graph, reduce_graph_out);
      Json payload = {{"instance", to_json(inst)},
                      {"n", r.graph.order()},
                      {"m", r.graph.size()},
                      {"k", r.k},
                      {"chordality", to_json(is_chordal(r.graph))}};
      const auto cover = x3c_brute(inst);
      if (cover) {
        const Labeling f = cover_to_labeling(r, *cover);
        payload["cover"] = *cover;
        payload["certificate"] = {{"weight", f.weight()}, {"valid", is_valid(r.graph, f)}, {"labels", to_json(f)}};
      } else {
        payload["cover"] = nullptr;
        payload["certificate"] = nullptr;
      }
      if (reduce_solve) {
        BnbOptions opts;
        opts.timeout_seconds = globals.timeout;
        opts.threads = globals.threads;
        const SolveResult s = solve_rdrd_bnb(r.graph, opts);
        payload["solve"] = to_json(s);
        payload["solve"]["exceeds_k"] = s.lower_bound > r.k;
        if (s.optimal && s.value <= r.k) {
          const auto ex = labeling_to_cover(r, s.certificate);
          payload["extraction"] = {
              {"status", ex.status == CoverExtraction::Status::exact_cover ? "EXACT_COVER" : "NOT_NORMALIZED"},
              {"cover", ex.cover}};
        }
        payload["timing"] = {{"ms", ms_since(start)}};
      }
      emit(globals, payload, out);
      return ok;
    }

    if (*audit) {
      const LayoutKind kind = parse_layout_kind(audit_layout);
      std::optional<Graph> given;
      if (!audit_graph.empty()) given = graph_arg(audit_graph);
      int columns = audit_column_count;
      if (columns == 0) {
        if (!given) {
          err << "audit needs --columns or --graph\n";
          return usage;
        }
        const int per_column = kind == LayoutKind::strong_strip ? audit_rows : kind == LayoutKind::c3xcm ? 3 : 2;
        columns = given->order() / per_column;
      }
      StripLayout layout;
      switch (kind) {
        case LayoutKind::strong_strip: layout = StripLayout::strong_strip(audit_rows, columns); break;
        case LayoutKind::c3xcm: layout = StripLayout::c3xcm(columns); break;
        case LayoutKind::corona_path: layout = StripLayout::corona_path(columns); break;
        case LayoutKind::corona_cycle: layout = StripLayout::corona_cycle(columns); break;
      }
      const Graph lg = layout.graph();
      if (given && !(*given == lg)) throw ValidationError("graph does not match the " + audit_layout + " layout");

      if (audit_all) {
        BnbOptions opts;
        opts.enumerate_all = true;
        opts.timeout_seconds = globals.timeout;
        const SolveResult s = solve_rdrd_bnb(lg, opts);
        if (!s.optimal) throw LimitError("optimum enumeration timed out");
        bool all_pass = true;
        int certified = 0;
        Json failures = Json::array();
        for (const auto& f : s.optima) {
          const auto lemma = audit_columns(layout, f);
          bool this_pass = lemma.pass;
          Json entry = {{"labels", to_json(f)}, {"lemma", to_json(lemma)}};
          if (kind == LayoutKind::c3xcm) {
            const auto bag = bagging_certificate(layout, f);
            if (bag.certified_bound) ++certified;
            this_pass = this_pass && bag.certified_bound.has_value();
            entry["bagging"] = to_json(bag);
          }
          if (!this_pass) failures.push_back(std::move(entry));
          all_pass = all_pass && this_pass;
        }
        Json payload = {{"layout", audit_layout},
                        {"columns", columns},
                        {"optimum", s.value},
                        {"optima", s.optima.size()},
                        {"all_pass", all_pass},
                        {"failures", std::move(failures)}};
        if (kind == LayoutKind::c3xcm) payload["certified"] = certified;
        payload["timing"] = {{"ms", ms_since(start)}};
        emit(globals, payload, out);
        return all_pass ? ok : failed;
      }

      if (audit_labels.empty()) {
        err << "audit needs --labels or --all-optima\n";
        return usage;
      }
      const Labeling f = labels_arg(audit_labels);
      const auto lemma = audit_columns(layout, f);
      Json payload = {{"layout", audit_layout}, {"columns", columns}, {"lemma", to_json(lemma)}};
      bool pass = lemma.pass;
      if (kind == LayoutKind::c3xcm) {
        const auto bag = bagging_certificate(layout, f);
        pass = pass && bag.certified_bound.has_value();
        payload["bagging"] = to_json(bag);
      }
      payload["pass"] = pass;
      emit(globals, payload, out);
      return pass ? ok : failed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const InapplicableError& e) {
    emit(globals, {{"error", "inapplicable"}, {"message", e.what()}}, out);
    err << e.what() << '\n';
    return failed;
  } catch (const ValidationError& e) {
    emit(globals, {{"error", "invalid"}, {"message", e.what()}}, out);
    err << e.what() << '\n';
    return failed;
  } catch (const LimitError& e) {
    emit(globals, {{"error", "limit"}, {"message", e.what()}}, out);
    err << e.what() << '\n';
    return failed;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return usage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "bad number: " << e.what() << '\n';
    return usage;
  }
  err << app.help();
  return usage;
}

}  // namespace rdrd::cli
