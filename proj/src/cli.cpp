#include "bcolor/cli.hpp"

#include "bcolor/error.hpp"
#include "bcolor/fixtures.hpp"
#include "bcolor/homlift.hpp"
#include "bcolor/io.hpp"
#include "bcolor/kneser.hpp"
#include "bcolor/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <ostream>

namespace bcolor::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// Flat key-value report, printed as "key: value" lines or as one JSON object.
class Report {
public:
  template <class T> void add(std::string key, T &&value) { doc_[std::move(key)] = std::forward<T>(value); }

  void print(std::ostream &out, bool as_json) const {
    if (as_json) {
      out << doc_.dump(2) << '\n';
      return;
    }
    for (const auto &[key, value] : doc_.items())
      out << key << ": " << render(value) << '\n';
  }

private:
  static std::string render(const json &value) {
    if (value.is_string())
      return value.get<std::string>();
    if (value.is_array()) {
      std::string s = "{";
      for (std::size_t i = 0; i < value.size(); ++i)
        s += (i ? "," : "") + render(value[i]);
      return s + "}";
    }
    return value.dump();
  }

  json doc_ = json::object();
};

std::string set_text(const std::set<std::size_t> &values) {
  std::string s = "{";
  for (auto it = values.begin(); it != values.end(); ++it)
    s += (it == values.begin() ? "" : ",") + std::to_string(*it);
  return s + "}";
}

std::string tristate(const std::optional<bool> &value) {
  if (!value)
    return "unknown";
  return *value ? "true" : "false";
}

const char *failure_text(SlsFailure failure) {
  switch (failure) {
  case SlsFailure::None:
    return "none";
  case SlsFailure::NotHomomorphism:
    return "not a homomorphism";
  case SlsFailure::NotSurjective:
    return "not surjective";
  case SlsFailure::NoAnchor:
    return "no anchor";
  }
  return "unknown";
}

std::string relative_ref(const fs::path &file, const fs::path &from_dir) {
  const fs::path base = from_dir.empty() ? fs::path(".") : from_dir;
  return fs::relative(fs::absolute(file), fs::absolute(base)).generic_string();
}

struct BudgetFlags {
  std::uint64_t nodes = SearchBudget{}.max_nodes;
  double seconds = std::chrono::duration<double>(SearchBudget{}.max_time).count();
  int workers = 1;

  void attach(CLI::App *cmd) {
    cmd->add_option("--budget", nodes, "search node limit");
    cmd->add_option("--time-limit", seconds, "search wall-clock limit in seconds");
    cmd->add_option("--workers", workers, "search threads (1 = serial)")->check(CLI::NonNegativeNumber);
  }

  SearchOptions options() const {
    SearchOptions o;
    o.budget.max_nodes = nodes;
    o.budget.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000));
    o.workers = workers;
    return o;
  }
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Colorful colorings, b-spectra and semi-locally-surjective homomorphisms", "bcolor"};
  app.require_subcommand(1);

  std::function<int()> action;
  bool as_json = false;
  auto json_flag = [&](CLI::App *cmd) { cmd->add_flag("--json", as_json, "machine-readable report"); };

  // kneser gen
  int n = 0, m = 0;
  std::string out_path;
  auto *kneser = app.add_subcommand("kneser", "Kneser graphs")->require_subcommand(1);
  auto *kneser_gen = kneser->add_subcommand("gen", "write KG(n,m) as .col with a label sidecar");
  kneser_gen->add_option("-n", n, "universe size")->required();
  kneser_gen->add_option("-m", m, "subset size")->required();
  kneser_gen->add_option("-o", out_path, "output .col file")->required();
  kneser_gen->callback([&] {
    action = [&] {
      const KneserGraph kg = kneser_graph(n, m);
      io::save_graph(out_path, kg.graph(), "KG(" + std::to_string(n) + "," + std::to_string(m) + ")");
      Report r;
      r.add("vertices", kg.graph().vertex_count());
      r.add("edges", kg.graph().edge_count());
      r.add("file", out_path);
      r.print(out, false);
      return verified;
    };
  });

  // color ...
  std::string graph_path, coloring_path;
  bool want_colorful = false;
  std::size_t k = 0;
  std::string witness_dir;
  BudgetFlags budget;
  auto *color = app.add_subcommand("color", "colorings")->require_subcommand(1);

  auto *verify = color->add_subcommand("verify", "check a coloring for properness and colorfulness");
  verify->add_option("-g", graph_path, "graph .col file")->required();
  verify->add_option("-c", coloring_path, "coloring file")->required();
  verify->add_flag("--colorful", want_colorful, "also check colorfulness");
  json_flag(verify);
  verify->callback([&] {
    action = [&] {
      const Graph g = io::load_graph(graph_path);
      const Coloring c = io::load_coloring(coloring_path, g);
      const ColorfulVerdict v = check_colorful(g, c);
      Report r;
      r.add("k", c.k());
      r.add("proper", v.proper);
      if (!want_colorful) {
        r.print(out, as_json);
        return v.proper ? verified : refuted;
      }
      r.add("colorful", v.colorful);
      for (std::size_t i = 0; i < v.witnesses.size(); ++i)
        r.add("witness." + std::to_string(i + 1), g.display(v.witnesses[i]));
      if (v.proper && !v.colorful)
        r.add("missing_color", v.missing_color);
      r.print(out, as_json);
      return v.colorful ? verified : refuted;
    };
  });

  auto *chromatic = color->add_subcommand("chromatic", "exact chromatic number with a witness coloring");
  chromatic->add_option("-g", graph_path, "graph .col file")->required();
  chromatic->add_option("-o", out_path, "witness coloring file (default <graph>.chi.coloring)");
  json_flag(chromatic);
  chromatic->callback([&] {
    action = [&] {
      const Graph g = io::load_graph(graph_path);
      const ChromaticResult result = chromatic_number(g);
      const fs::path target = out_path.empty() ? fs::path(graph_path).replace_extension(".chi.coloring")
                                               : fs::path(out_path);
      io::save_coloring(target, g, result.witness);
      Report r;
      r.add("chi", result.chi);
      r.add("witness", target.string());
      r.print(out, as_json);
      return verified;
    };
  });

  auto *find = color->add_subcommand("find", "exact search for a colorful k-coloring");
  find->add_option("-g", graph_path, "graph .col file")->required();
  find->add_option("-k", k, "number of colors")->required();
  find->add_option("-o", out_path, "write the coloring here when found");
  budget.attach(find);
  json_flag(find);
  find->callback([&] {
    action = [&] {
      const Graph g = io::load_graph(graph_path);
      const SearchResult result = find_colorful_coloring(g, k, budget.options());
      Report r;
      r.add("k", k);
      switch (result.status) {
      case SearchStatus::Found:
        r.add("result", "found");
        break;
      case SearchStatus::NotExists:
        r.add("result", "not-exists");
        break;
      case SearchStatus::BudgetExceeded:
        r.add("result", "budget-exceeded");
        break;
      }
      r.add("nodes", result.nodes);
      if (result.coloring && !out_path.empty()) {
        io::save_coloring(out_path, g, *result.coloring);
        r.add("witness", out_path);
      }
      r.print(out, as_json);
      if (result.status == SearchStatus::Found)
        return verified;
      return result.status == SearchStatus::NotExists ? refuted : inconclusive;
    };
  });

  auto *bspectrum = color->add_subcommand("bspectrum", "chi, b, the set of colorful k and b-continuity");
  bspectrum->add_option("-g", graph_path, "graph .col file")->required();
  bspectrum->add_option("--witness-dir", witness_dir, "write one witness coloring per k here");
  budget.attach(bspectrum);
  json_flag(bspectrum);
  bspectrum->callback([&] {
    action = [&] {
      const Graph g = io::load_graph(graph_path);
      const BSpectrumReport report = b_spectrum(g, budget.options());
      Report r;
      r.add("vertices", g.vertex_count());
      r.add("chi", report.chi);
      r.add("b", report.b);
      r.add("upper_bound", report.upper_bound);
      if (as_json) {
        r.add("spectrum", report.spectrum);
        r.add("unknown", report.unknown);
      } else {
        r.add("spectrum", set_text(report.spectrum));
        r.add("unknown", set_text(report.unknown));
      }
      if (as_json && report.continuous)
        r.add("continuous", *report.continuous);
      else
        r.add("continuous", tristate(report.continuous));
      r.add("nodes", report.nodes);
      if (!witness_dir.empty()) {
        fs::create_directories(witness_dir);
        const std::string stem = fs::path(graph_path).stem().string();
        for (const auto &[kk, coloring] : report.witnesses) {
          const fs::path file = fs::path(witness_dir) / (stem + ".k" + std::to_string(kk) + ".coloring");
          io::save_coloring(file, g, coloring);
          r.add("witness." + std::to_string(kk), file.string());
        }
      }
      r.print(out, as_json);
      return report.unknown.empty() ? verified : inconclusive;
    };
  });

  // hom ...
  std::string map_path, map2_path;
  bool full_certificate = false;
  auto *hom = app.add_subcommand("hom", "vertex maps and semi-locally-surjective homomorphisms")
                  ->require_subcommand(1);

  auto *hom_verify = hom->add_subcommand("verify", "homomorphism, surjectivity and SLS verdicts");
  hom_verify->add_option("-f", map_path, "vertex map file")->required();
  hom_verify->add_flag("--certificate", full_certificate, "print every neighbor witness");
  hom_verify->add_option("--workers", budget.workers, "threads for the anchor search (1 = serial)");
  json_flag(hom_verify);
  hom_verify->callback([&] {
    action = [&] {
      const io::MapFile file = io::load_map(map_path);
      const VertexMap &f = file.map;
      const SlsVerdict verdict = is_semi_locally_surjective(f, budget.workers);
      Report r;
      r.add("homomorphism", is_homomorphism(f));
      r.add("surjective", is_surjective(f));
      r.add("sls", verdict ? "yes" : "no");
      if (!verdict) {
        r.add("reason", failure_text(verdict.failure));
        if (verdict.failure == SlsFailure::NotHomomorphism)
          r.add("bad_edge", f.source().display(verdict.bad_edge.u) + "-" + f.source().display(verdict.bad_edge.v));
        else
          r.add("failing_vertex", f.target().display(verdict.failing_vertex));
        r.print(out, as_json);
        return refuted;
      }
      r.add("certificate_verified", verify_certificate(f, *verdict.certificate));
      const auto &cert = *verdict.certificate;
      for (Vertex u = 0; u < cert.per_target.size(); ++u) {
        const std::string key = "anchor." + f.target().display(u);
        r.add(key, f.source().display(cert.per_target[u].anchor));
        if (!full_certificate)
          continue;
        for (const auto &[v, b] : cert.per_target[u].neighbor_witnesses)
          r.add("witness." + f.target().display(u) + "." + f.target().display(v), f.source().display(b));
      }
      r.print(out, as_json);
      return verified;
    };
  });

  auto *step = hom->add_subcommand("kneser-step", "write the step map KG(n+2,m+1) -> KG(n,m)");
  step->add_option("-n", n, "target universe size")->required();
  step->add_option("-m", m, "target subset size")->required();
  step->add_option("-o", out_path, "output map file")->required();
  step->callback([&] {
    action = [&] {
      const KneserStep s = kneser_step_hom(n, m);
      const fs::path dir = fs::path(out_path).parent_path();
      const std::string source_name = "kg" + std::to_string(n + 2) + "_" + std::to_string(m + 1) + ".col";
      const std::string target_name = "kg" + std::to_string(n) + "_" + std::to_string(m) + ".col";
      io::save_graph(dir / source_name, s.source->graph(),
                     "KG(" + std::to_string(n + 2) + "," + std::to_string(m + 1) + ")");
      io::save_graph(dir / target_name, s.target->graph(),
                     "KG(" + std::to_string(n) + "," + std::to_string(m) + ")");
      io::save_map(out_path, s.map, source_name, target_name);
      Report r;
      r.add("source", (dir / source_name).string());
      r.add("target", (dir / target_name).string());
      r.add("map", out_path);
      r.print(out, false);
      return verified;
    };
  });

  auto *hom_compose = hom->add_subcommand("compose", "g o f for f: G3 -> G2 (-f) and g: G2 -> G1 (-g)");
  hom_compose->add_option("-f", map_path, "first map file")->required();
  hom_compose->add_option("-g", map2_path, "second map file")->required();
  hom_compose->add_option("-o", out_path, "output map file")->required();
  hom_compose->callback([&] {
    action = [&] {
      const io::MapFile f = io::load_map(map_path);
      const io::MapFile g = io::load_map(map2_path);
      const VertexMap composite = compose(f.map, g.map);
      const fs::path dir = fs::path(out_path).parent_path();
      io::save_map(out_path, composite, relative_ref(f.source_file, dir), relative_ref(g.target_file, dir));
      Report r;
      r.add("map", out_path);
      r.add("sls", is_semi_locally_surjective(composite) ? "yes" : "no");
      r.print(out, false);
      return verified;
    };
  });

  auto *lift = hom->add_subcommand("lift", "pull a colorful coloring of the target back along an SLS map");
  lift->add_option("-f", map_path, "vertex map file")->required();
  lift->add_option("-c", coloring_path, "colorful coloring of the map's target")->required();
  lift->add_option("-o", out_path, "output coloring of the map's source")->required();
  lift->callback([&] {
    action = [&] {
      const io::MapFile file = io::load_map(map_path);
      const Coloring c = io::load_coloring(coloring_path, file.map.target());
      const LiftResult lifted = lift_coloring(file.map, c);
      io::save_coloring(out_path, file.map.source(), lifted.coloring);
      Report r;
      r.add("k", lifted.coloring.k());
      r.add("colorful", is_colorful(file.map.source(), lifted.coloring));
      for (std::size_t i = 0; i < lifted.witnesses.size(); ++i)
        r.add("witness." + std::to_string(i + 1), file.map.source().display(lifted.witnesses[i]));
      r.add("coloring", out_path);
      r.print(out, false);
      return verified;
    };
  });

  // fixture NAME
  std::string fixture_name;
  auto *fixture = app.add_subcommand("fixture", "export built-in graphs and colorings");
  fixture->add_option("name", fixture_name, "kg73 | petersen | q3 | heawood")
      ->required()
      ->check(CLI::IsMember({"kg73", "petersen", "q3", "heawood"}));
  fixture->add_option("-o", out_path, "output directory")->required();
  fixture->callback([&] {
    action = [&] {
      const fs::path dir(out_path);
      fs::create_directories(dir);
      Report r;
      if (fixture_name == "kg73") {
        const auto fx = fixtures::kg73_colorful_four();
        const Graph &g = fx.graph->graph();
        io::save_graph(dir / "kg73.col", g, "KG(7,3)");
        io::save_coloring(dir / "kg73.coloring", g, fx.coloring);
        io::save_coloring(dir / "kg73_five.coloring", g, fixtures::kg73_colorful_five());
        r.add("graph", (dir / "kg73.col").string());
        r.add("coloring", (dir / "kg73.coloring").string());
        r.add("coloring_five", (dir / "kg73_five.coloring").string());
      } else {
        const Graph g = fixture_name == "petersen" ? fixtures::petersen()
                        : fixture_name == "q3"     ? fixtures::q3()
                                                   : fixtures::heawood();
        const fs::path file = dir / (fixture_name + ".col");
        io::save_graph(file, g, fixture_name);
        r.add("graph", file.string());
      }
      r.print(out, false);
      return verified;
    };
  });

  // graph girth|regularity|bipartite
  auto *graph = app.add_subcommand("graph", "structural predicates")->require_subcommand(1);
  auto *g_girth = graph->add_subcommand("girth", "shortest cycle length");
  auto *g_regular = graph->add_subcommand("regularity", "common degree if regular");
  auto *g_bipartite = graph->add_subcommand("bipartite", "2-colorability with a witness partition");
  for (auto *cmd : {g_girth, g_regular, g_bipartite}) {
    cmd->add_option("-g", graph_path, "graph .col file")->required();
    json_flag(cmd);
  }
  g_girth->callback([&] {
    action = [&] {
      const Girth gi = girth(io::load_graph(graph_path));
      Report r;
      if (gi.infinite())
        r.add("girth", "infinite");
      else
        r.add("girth", *gi.length);
      r.print(out, as_json);
      return verified;
    };
  });
  g_regular->callback([&] {
    action = [&] {
      const auto d = regularity(io::load_graph(graph_path));
      Report r;
      r.add("regular", d.has_value());
      if (d)
        r.add("degree", *d);
      r.print(out, as_json);
      return d ? verified : refuted;
    };
  });
  g_bipartite->callback([&] {
    action = [&] {
      const Graph g = io::load_graph(graph_path);
      const auto sides = bipartition(g);
      Report r;
      r.add("bipartite", sides.has_value());
      if (sides) {
        std::vector<std::string> parts[2];
        for (Vertex v = 0; v < g.vertex_count(); ++v)
          parts[(*sides)[v]].push_back(g.display(v));
        r.add("part0", parts[0]);
        r.add("part1", parts[1]);
      }
      r.print(out, as_json);
      return sides ? verified : refuted;
    };
  });

  std::vector<const char *> argv{"bcolor"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return verified;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return verified;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return input_error;
  }

  try {
    return action ? action() : input_error;
  } catch (const InputError &e) {
    err << "input error: " << e.what() << '\n';
  } catch (const PreconditionError &e) {
    err << "precondition failed: " << e.what() << '\n';
  } catch (const fs::filesystem_error &e) {
    err << "file error: " << e.what() << '\n';
  }
  return input_error;
}

} // namespace bcolor::cli
