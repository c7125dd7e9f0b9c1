// Command-line front end: graph ingestion, invariants, module dossiers,
// deformation-ring classification, component windows, verification suites.
//
// Exit codes: 0 success, 1 domain-level negative (violations, failed suite),
// 2 input error (file/format/word problems).

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "bga/batch.hpp"
#include "bga/graph_io.hpp"
#include "bga/suites.hpp"
#include "bga/udr.hpp"

using namespace bga;
using nlohmann::json;

namespace {

enum class Format { Text, Json, Dot };

Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "json-like" || f == "json") return Format::Json;
  if (f == "dot") return Format::Dot;
  throw std::invalid_argument("--format must be text, json-like, or dot");
}

json graph_invariants(const BrauerGraph& g) {
  json out;
  out["vertices"] = g.vertices.size();
  out["edges"] = g.edge_count();
  auto walks = green_walks(g);
  out["green_walks"] = walks.size();
  json walk_list = json::array();
  for (const auto& w : walks) walk_list.push_back(w.steps);
  out["green_walk_steps"] = walk_list;
  auto dbl = double_stepped_walks(g);
  out["double_stepped_walks"] = dbl.size();
  json ranks = json::array();
  for (const auto& w : dbl) ranks.push_back(w.steps.size());
  out["double_stepped_lengths"] = ranks;
  out["faces"] = face_perimeters(g).size();
  out["perimeters"] = face_perimeters(g);
  std::vector<long> mult;
  for (const auto& v : g.vertices) mult.push_back(v.multiplicity);
  std::sort(mult.begin(), mult.end());
  out["multiplicities"] = mult;
  out["bipartite"] = is_bipartite(g);
  out["tree"] = is_tree(g);
  out["growth"] = to_string(growth_class(g));
  return out;
}

void print_report(const json& doc, Format fmt) {
  if (fmt == Format::Json) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (auto it = doc.begin(); it != doc.end(); ++it)
    std::cout << it.key() << ": " << it.value().dump() << "\n";
}

json classification_json(const Classification& c) {
  json out;
  out["udr"] = c.ring.str();
  json trail = json::array();
  for (const auto& [k, v] : c.trail) trail.push_back(k + " = " + v);
  out["evidence"] = trail;
  return out;
}

int suite_exit(const SuiteResult& res, Format fmt) {
  if (fmt == Format::Json) {
    json doc;
    doc["suite"] = res.suite;
    doc["pass"] = res.pass();
    json rows = json::array();
    for (const auto& r : res.rows)
      rows.push_back({{"name", r.name},
                      {"pass", r.pass},
                      {"expected", r.expected},
                      {"computed", r.computed}});
    doc["rows"] = rows;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : res.rows) {
      std::cout << (r.pass ? "ok   " : "FAIL ") << res.suite << ": " << r.name;
      if (!r.pass) std::cout << "  expected [" << r.expected << "] got [" << r.computed << "]";
      std::cout << "\n";
    }
    std::cout << (res.pass() ? "suite passed" : "suite FAILED") << " (" << res.rows.size()
              << " rows)\n";
  }
  return res.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string-module calculus for Brauer graph algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format: text, json-like, dot");

  auto* cmd_validate = app.add_subcommand("validate", "check the graph axioms");
  std::vector<std::string> validate_files;
  cmd_validate->add_option("files", validate_files)->required();

  auto* cmd_invariants = app.add_subcommand("invariants", "counts, walks, faces, growth");
  std::vector<std::string> invariant_files;
  cmd_invariants->add_option("files", invariant_files)->required();

  auto* cmd_walks = app.add_subcommand("green-walks", "green walks and double-stepped walks");
  std::string walks_file;
  cmd_walks->add_option("file", walks_file)->required();

  auto* cmd_deq = app.add_subcommand("derived-eq", "Opper-Zvonareva criteria for two graphs");
  std::string deq_a, deq_b;
  cmd_deq->add_option("a", deq_a)->required();
  cmd_deq->add_option("b", deq_b)->required();

  auto* cmd_star = app.add_subcommand("star-reduce", "derived-equivalent star normal form");
  std::string star_file, star_out;
  cmd_star->add_option("file", star_file)->required();
  cmd_star->add_option("-o,--out", star_out, "write the star to this file");

  auto* cmd_present = app.add_subcommand("presentation", "bound quiver presentation");
  std::string present_file;
  cmd_present->add_option("file", present_file)->required();

  auto* cmd_module = app.add_subcommand("module", "full dossier of a string module");
  std::string module_file, module_word;
  int module_bound = 0;
  cmd_module->add_option("file", module_file)->required();
  cmd_module->add_option("--string", module_word, "string word")->required();
  cmd_module->add_option("--bound", module_bound, "periodicity bound override");

  auto* cmd_udr = app.add_subcommand("udr", "universal deformation ring classification");
  std::string udr_file, udr_word;
  bool udr_tree = false;
  cmd_udr->add_option("file", udr_file)->required();
  cmd_udr->add_option("--string", udr_word, "string word (over the star when --tree)")
      ->required();
  cmd_udr->add_flag("--tree", udr_tree,
                    "classify over the star reduction and transport the answer");

  auto* cmd_band = app.add_subcommand("band", "band modules are detected and rejected");
  std::string band_file, band_word;
  cmd_band->add_option("file", band_file)->required();
  cmd_band->add_option("--string", band_word)->required();

  auto* cmd_component = app.add_subcommand("component", "stable AR component window");
  std::string comp_file, comp_word;
  int comp_radius = 2;
  cmd_component->add_option("file", comp_file)->required();
  cmd_component->add_option("--string", comp_word)->required();
  cmd_component->add_option("--radius", comp_radius);

  auto* cmd_homs = app.add_subcommand("homs", "canonical homomorphism basis between two words");
  std::string homs_file, homs_from, homs_to;
  cmd_homs->add_option("file", homs_file)->required();
  cmd_homs->add_option("--from", homs_from)->required();
  cmd_homs->add_option("--to", homs_to)->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  SuiteConfig cfg;
  cmd_verify->add_option("suite", suite)->required();
  cmd_verify->add_option("--seed", cfg.seed);
  cmd_verify->add_option("--trees", cfg.tree_count);
  cmd_verify->add_option("--max-len", cfg.max_len);
  cmd_verify->add_option("--probe-depth", cfg.probe_depth);
  cmd_verify->add_option("--bound", cfg.bound);

  auto* cmd_mkstar = app.add_subcommand("make-star", "emit the star W_{n,mbar}");
  int mk_n = 0;
  std::vector<long> mk_m;
  std::string mk_out;
  cmd_mkstar->add_option("n", mk_n)->required();
  cmd_mkstar->add_option("m", mk_m, "non-decreasing multiplicities >= 2")->required();
  cmd_mkstar->add_option("-o,--out", mk_out);

  auto* cmd_mkkoszul = app.add_subcommand("make-koszul", "emit the standard-Koszul line graph");
  int kz_n = 1;
  long kz_l = 2, kz_m = 2;
  std::string kz_out;
  cmd_mkkoszul->add_option("n", kz_n)->required();
  cmd_mkkoszul->add_option("l", kz_l)->required();
  cmd_mkkoszul->add_option("m", kz_m)->required();
  cmd_mkkoszul->add_option("-o,--out", kz_out);

  CLI11_PARSE(app, argc, argv);

  Format fmt;
  try {
    fmt = parse_format(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_validate) {
      int worst = 0;
      for (const auto& f : validate_files) {
        BrauerGraph g = read_graph_file(f);
        ValidationReport rep = validate(g);
        json doc;
        doc["file"] = f;
        doc["ok"] = rep.ok();
        json v = json::array();
        for (const auto& viol : rep.violations) v.push_back(viol.message);
        doc["violations"] = v;
        print_report(doc, fmt);
        if (!rep.ok()) worst = 1;
      }
      return worst;
    }

    if (*cmd_invariants) {
      for (const auto& f : invariant_files) {
        BrauerGraph g = read_graph_file(f);
        require_valid(g);
        json doc = graph_invariants(g);
        doc["file"] = f;
        print_report(doc, fmt);
      }
      return 0;
    }

    if (*cmd_walks) {
      BrauerGraph g = read_graph_file(walks_file);
      require_valid(g);
      json doc;
      json ws = json::array();
      for (const auto& w : green_walks(g)) ws.push_back(w.steps);
      doc["green_walks"] = ws;
      json ds = json::array();
      for (const auto& w : double_stepped_walks(g)) ds.push_back(w.steps);
      doc["double_stepped_walks"] = ds;
      print_report(doc, fmt);
      return 0;
    }

    if (*cmd_deq) {
      BrauerGraph a = read_graph_file(deq_a);
      BrauerGraph b = read_graph_file(deq_b);
      require_valid(a);
      require_valid(b);
      DerivedEqReport r = derived_equivalent(a, b);
      json doc;
      doc["equivalent"] = r.equivalent();
      doc["vertex_count"] = r.vertices_match;
      doc["edge_count"] = r.edges_match;
      doc["face_count"] = r.faces_match;
      doc["multiplicity_multiset"] = r.multiplicities_match;
      doc["perimeter_multiset"] = r.perimeters_match;
      doc["bipartiteness"] = r.bipartite_match;
      print_report(doc, fmt);
      return r.equivalent() ? 0 : 1;
    }

    if (*cmd_star) {
      BrauerGraph g = read_graph_file(star_file);
      require_valid(g);
      BrauerGraph star = star_reduce(g);
      if (!star_out.empty()) {
        write_graph_file(star, star_out);
        std::cout << "wrote " << star_out << "\n";
      } else if (fmt == Format::Json) {
        std::cout << write_graph(star);
      } else {
        json doc = graph_invariants(star);
        doc["derived_equivalent_to_input"] = derived_equivalent(g, star).equivalent();
        print_report(doc, fmt);
      }
      return 0;
    }

    if (*cmd_present) {
      BrauerGraph g = read_graph_file(present_file);
      require_valid(g);
      std::cout << present(g).export_text();
      return 0;
    }

    if (*cmd_module) {
      BrauerGraph g = read_graph_file(module_file);
      require_valid(g);
      AlgebraContext ctx(g);
      const Presentation& p = ctx.pres;
      StringWord w = parse_word(p, module_word);
      json doc;
      doc["word"] = format_word(p, canonical(w));
      doc["dim"] = w.dim();
      json tops = json::array(), socle = json::array();
      for (int pos : top_positions(w)) tops.push_back(p.qvertices[vertex_at(p, w, pos)]);
      for (int pos : socle_positions(w)) socle.push_back(p.qvertices[vertex_at(p, w, pos)]);
      doc["top"] = tops;
      doc["socle"] = socle;
      PeriodicityResult per = is_periodic(ctx, w, module_bound);
      doc["periodic"] = per.periodic;
      if (per.periodic) doc["period"] = per.period;
      if (per.bound_exceeded) doc["bound_exceeded"] = true;
      doc["stable_end_dim"] = stable_end_dim(p, w);
      doc["ext1_dim"] = ext1_dim(ctx, w);
      TubeSystem tubes(ctx);
      ComponentAddress addr = locate(ctx, tubes, w);
      switch (addr.kind) {
        case ComponentAddress::Kind::ExceptionalTube:
          doc["component"] = "exceptional_tube";
          doc["tube"] = addr.tube_id;
          doc["rank"] = addr.rank;
          doc["d"] = addr.d;
          break;
        case ComponentAddress::Kind::ZAInfInf:
          doc["component"] = "ZA_inf_inf";
          doc["simple"] = p.qvertices[addr.simple_t];
          doc["diagonal_index"] = addr.diag_index;
          doc["omega_shift"] = addr.omega_shift;
          break;
        case ComponentAddress::Kind::ZAGeneric:
          doc["component"] = "ZA_inf_inf (generic address)";
          break;
      }
      print_report(doc, fmt);
      return 0;
    }

    if (*cmd_udr) {
      if (udr_tree) {
        BrauerGraph g = read_graph_file(udr_file);
        TreeClassification tc = classify_tree(g, udr_word);
        json doc = classification_json(tc.result);
        doc["transport"] = tc.transport_note;
        print_report(doc, fmt);
        return tc.result.ring.variant == UDRVariant::Unknown ? 1 : 0;
      }
      BrauerGraph g = read_graph_file(udr_file);
      require_valid(g);
      AlgebraContext ctx(g);
      StringWord w = parse_word(ctx.pres, udr_word);
      TubeSystem tubes(ctx);
      Classification c = classify(ctx, tubes, w);
      print_report(classification_json(c), fmt);
      return c.ring.variant == UDRVariant::Unknown ? 1 : 0;
    }

    if (*cmd_band) {
      BrauerGraph g = read_graph_file(band_file);
      require_valid(g);
      AlgebraContext ctx(g);
      StringWord w = parse_word(ctx.pres, band_word);
      if (band_like(ctx.pres, w))
        throw BandModule("band modules are out of scope; the word also spells a band");
      std::cout << "word is a string, not a band; use `module` for its dossier\n";
      return 0;
    }

    if (*cmd_component) {
      BrauerGraph g = read_graph_file(comp_file);
      require_valid(g);
      AlgebraContext ctx(g);
      const Presentation& p = ctx.pres;
      StringWord w = parse_word(p, comp_word);
      TubeSystem tubes(ctx);
      ComponentWindow win = component_window(ctx, tubes, w, comp_radius);
      if (fmt == Format::Json) {
        json doc;
        json nodes = json::array();
        for (size_t k = 0; k < win.nodes.size(); ++k)
          nodes.push_back({{"word", format_word(p, win.nodes[k])},
                           {"note", win.annotations[k]}});
        doc["nodes"] = nodes;
        json arrows = json::array();
        for (auto [a, b] : win.arrows) arrows.push_back({a, b});
        doc["arrows"] = arrows;
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << to_dot(p, win);
      }
      return 0;
    }

    if (*cmd_homs) {
      BrauerGraph g = read_graph_file(homs_file);
      require_valid(g);
      Presentation p = present(g);
      StringWord c = parse_word(p, homs_from);
      StringWord d = parse_word(p, homs_to);
      auto homs = canonical_homs(p, c, d);
      json doc;
      doc["dim_hom"] = homs.size();
      json basis = json::array();
      for (const auto& h : homs) {
        StringWord s = c;
        s.letters.assign(c.letters.begin() + h.ca, c.letters.begin() + h.cb);
        std::string stext = s.letters.empty()
                                ? "e" + p.qvertices[vertex_at(p, c, h.ca)]
                                : format_word(p, s);
        basis.push_back({{"S", stext},
                         {"C_interval", {h.ca, h.cb}},
                         {"D_interval", {h.da, h.db}},
                         {"reversed", h.reversed}});
      }
      doc["basis"] = basis;
      print_report(doc, fmt);
      return 0;
    }

    if (*cmd_verify) return suite_exit(run_suite(suite, cfg), fmt);

    if (*cmd_mkstar) {
      BrauerGraph g = make_star(mk_n, mk_m);
      if (!mk_out.empty()) {
        write_graph_file(g, mk_out);
        std::cout << "wrote " << mk_out << "\n";
      } else {
        std::cout << write_graph(g);
      }
      return 0;
    }

    if (*cmd_mkkoszul) {
      KoszulResult k = make_koszul(kz_n, kz_l, kz_m);
      if (!kz_out.empty()) {
        write_graph_file(k.graph, kz_out);
        std::cout << "wrote " << kz_out << "\n";
      } else {
        std::cout << write_graph(k.graph);
      }
      return 0;
    }
  } catch (const GraphFormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const WordError& e) {
    std::cerr << "word error: " << e.what() << "\n";
    return 2;
  } catch (const BandModule& e) {
    std::cerr << "band module: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
