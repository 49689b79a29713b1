#include "plogroup/cli_app.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "plogroup/enumeration.hpp"
#include "plogroup/induced_map.hpp"
#include "plogroup/normal_form.hpp"
#include "plogroup/orbital_analysis.hpp"
#include "plogroup/representation.hpp"
#include "plogroup/tree_diagram.hpp"
#include "plogroup/verify.hpp"

namespace plogroup {

namespace {

struct Output {
  std::string path;  // empty = stdout
  bool stamp = false;

  void emit(std::ostream& fallback, const std::string& body, const std::string& comment_lead) const {
    std::string text = body;
    if (stamp) {
      auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      char buf[64];
      std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
      text = comment_lead + " generated " + buf + "\n" + body;
    }
    if (path.empty()) {
      fallback << text;
      if (!text.empty() && text.back() != '\n') fallback << '\n';
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw validation_error("cannot open output file " + path);
      f << text;
    }
  }
};

std::vector<Rational> parse_points(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Rational::parse(item));
  }
  if (out.empty()) throw validation_error("no points given");
  return out;
}

std::vector<PLMap> generators_for(int rank, const std::string& points_csv) {
  if (!points_csv.empty()) return wc_generators(parse_points(points_csv)).generators;
  return standard_rep(rank).generators;
}

nlohmann::json config_json(MapRegistry& reg, const PLMap& f, const PLMap& g) {
  nlohmann::json pairs = nlohmann::json::array();
  auto fid = reg.add(f);
  auto gid = reg.add(g);
  for (const auto& A : orbitals(f)) {
    for (const auto& B : orbitals(g)) {
      Configuration c = classify_pair(reg, SignedOrbital{A, fid}, SignedOrbital{B, gid});
      pairs.push_back(nlohmann::json{{"a", {A.left.str(), A.right.str()}},
                                     {"b", {B.left.str(), B.right.str()}},
                                     {"configuration", to_string(c)}});
    }
  }
  return pairs;
}

std::uint64_t seed_from_env_or(std::uint64_t cli_seed, bool seed_given) {
  if (seed_given) return cli_seed;
  if (const char* env = std::getenv("PLOGROUP_SEED")) {
    return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with piecewise-linear homeomorphism groups of [0,1]"};
  app.require_subcommand(1);

  int rank = 2;
  int length_bound = 6;
  long long alpha_bound = 2;
  long long n_max = 8;
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 1;
  bool stamp = false;
  std::string word_text;
  std::string word_text2;
  std::string points_csv;
  std::string family_name = "split";
  std::string at_point;
  int count = 6;
  int mother_depth = 2;
  long long label_range = 1;
  bool mother = false;
  std::vector<std::string> suites;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format");
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    cmd->add_flag("--stamp", stamp, "prepend a generation timestamp");
  };

  auto* c_norm = app.add_subcommand("normalize", "rewrite a word into its normal form");
  c_norm->add_option("--rank", rank, "number of generators")->required();
  c_norm->add_option("word", word_text, "flat word, e.g. \"F2' F1 F2 F1\"");
  add_common(c_norm);

  auto* c_tree = app.add_subcommand("tree", "tree diagram of a word's normal form");
  c_tree->add_option("--rank", rank)->required();
  c_tree->add_option("word", word_text);
  add_common(c_tree);

  auto* c_eval = app.add_subcommand("eval", "evaluate a word as a map");
  c_eval->add_option("--rank", rank)->required();
  c_eval->add_option("word", word_text);
  c_eval->add_option("--points", points_csv, "midpoints defining the representation");
  c_eval->add_option("--at", at_point, "evaluate the map at a rational point");
  add_common(c_eval);

  auto* c_wc = app.add_subcommand("construct-wc", "generators attached to construction midpoints");
  c_wc->add_option("--points", points_csv, "comma-separated midpoints, e.g. 7/8,25/32");
  c_wc->add_option("--count", count, "use the first N construction midpoints");
  add_common(c_wc);

  auto* c_std = app.add_subcommand("standard-rep", "nested one-bump generators f_1..f_n");
  c_std->add_option("--rank", rank)->required();
  add_common(c_std);

  auto* c_cls = app.add_subcommand("classify-config", "orbital configurations of two words");
  c_cls->add_option("--rank", rank)->required();
  c_cls->add_option("word", word_text)->required();
  c_cls->add_option("word2", word_text2)->required();
  c_cls->add_option("--points", points_csv);
  c_cls->add_option("--n-max", n_max, "bounded search for the general table's third row");
  add_common(c_cls);

  auto* c_tc = app.add_subcommand("detect-tc", "search bounded products for a transition chain");
  c_tc->add_option("--rank", rank);
  c_tc->add_option("--points", points_csv);
  c_tc->add_option("--length-bound", length_bound, "maximum product length");
  add_common(c_tc);

  auto* c_ind = app.add_subcommand("induced", "induced tower maps of an example-family isomorphism");
  c_ind->add_option("--family", family_name, "standard|split|full|top|free|free-collapse");
  add_common(c_ind);

  auto* c_ver = app.add_subcommand("verify", "run verification suites");
  c_ver->add_option("--suite", suites, "suite names or indices (default: all)");
  bool seed_given = false;
  c_ver->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });
  c_ver->add_option("--length-bound", length_bound, "depth-suite word length");
  c_ver->add_option("--alpha-bound", alpha_bound, "relator exponent bound");
  c_ver->add_option("--n-max", n_max, "bounded search for the general table's third row");

  auto* c_plot = app.add_subcommand("plot", "SVG graph of maps");
  c_plot->add_option("--rank", rank);
  c_plot->add_option("--points", points_csv);
  c_plot->add_option("--family", family_name);
  c_plot->add_option("word", word_text, "word to plot (default: the generators)");
  add_common(c_plot);

  auto* c_hasse = app.add_subcommand("hasse", "Hasse diagram of an orbital poset");
  c_hasse->add_option("--rank", rank);
  c_hasse->add_option("--points", points_csv);
  c_hasse->add_option("--length-bound", length_bound, "word length for the poset");
  c_hasse->add_flag("--mother", mother, "emit a mother-tree window instead");
  c_hasse->add_option("--depth", mother_depth, "window depth");
  c_hasse->add_option("--label-range", label_range, "edge labels -K..K");
  add_common(c_hasse);

  std::vector<const char*> argv;
  argv.push_back("plogroup");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  Output sink{out_path, stamp};
  try {
    if (c_norm->parsed()) {
      NormalForm nf = normalize(Word::parse(rank, word_text));
      if (format == "json") {
        sink.emit(out, tree_to_json(word_to_tree(nf)), "//");
      } else {
        sink.emit(out, render(nf), "#");
      }
    } else if (c_tree->parsed()) {
      TreeDiagram t = word_to_tree(normalize(Word::parse(rank, word_text)));
      if (format == "dot") {
        sink.emit(out, tree_to_dot(t), "//");
      } else {
        sink.emit(out, tree_to_json(t), "//");
      }
    } else if (c_eval->parsed()) {
      auto gens = generators_for(rank, points_csv);
      PLMap m = evaluate_word(gens, Word::parse(rank, word_text));
      if (!at_point.empty()) {
        sink.emit(out, m(Rational::parse(at_point)).str(), "#");
      } else {
        sink.emit(out, to_json(m), "//");
      }
    } else if (c_wc->parsed()) {
      WCRep rep = points_csv.empty()
                      ? [&] {
                          std::vector<Rational> xs;
                          for (const auto& p : mc_points(count)) xs.push_back(p.x);
                          return wc_generators(xs);
                        }()
                      : wc_generators(parse_points(points_csv));
      sink.emit(out, to_json(rep), "//");
    } else if (c_std->parsed()) {
      StandardRep rep = standard_rep(rank);
      nlohmann::json gens = nlohmann::json::array();
      for (std::size_t i = 0; i < rep.generators.size(); ++i) {
        gens.push_back(nlohmann::json{{"point", rep.points[i].x.str()},
                                      {"map", nlohmann::json::parse(to_json(rep.generators[i]))}});
      }
      sink.emit(out, nlohmann::json{{"rank", rep.rank}, {"generators", gens}}.dump(2), "//");
    } else if (c_cls->parsed()) {
      auto gens = generators_for(rank, points_csv);
      PLMap f = evaluate_word(gens, Word::parse(rank, word_text));
      PLMap g = evaluate_word(gens, Word::parse(rank, word_text2));
      MapRegistry reg;
      nlohmann::json j{{"configurations", config_json(reg, f, g)}};
      bool pure = orbitals(f).size() == 1 && orbitals(g).size() == 1;
      nlohmann::json rows = nlohmann::json::array();
      for (int table : {1, 2}) {
        if (table == 1 && !pure) continue;
        for (int row = 1; row <= 3; ++row) {
          TableRowReport rep = verify_table_row(table, row, f, g, n_max);
          nlohmann::json rj{{"table", rep.table},
                            {"row", rep.row},
                            {"hypothesis_holds", rep.hypothesis_holds},
                            {"prediction_holds", rep.prediction_holds},
                            {"n_max", rep.n_max}};
          if (rep.witness_n) rj["witness_n"] = *rep.witness_n;
          rows.push_back(std::move(rj));
        }
      }
      j["table_rows"] = rows;
      sink.emit(out, j.dump(2), "//");
    } else if (c_tc->parsed()) {
      auto gens = generators_for(rank, points_csv);
      std::vector<PLMap> ball;
      for_each_ball_word(gens, length_bound, [&](const Word&, const PLMap& m) { ball.push_back(m); });
      MapRegistry reg;
      auto witness = has_transition_chain(reg, ball);
      nlohmann::json j;
      if (witness) {
        j = {{"transition_chain", true},
             {"a", {witness->first.orbital.left.str(), witness->first.orbital.right.str()}},
             {"b", {witness->second.orbital.left.str(), witness->second.orbital.right.str()}}};
      } else {
        j = {{"transition_chain", false}};
      }
      sink.emit(out, j.dump(2), "//");
    } else if (c_ind->parsed()) {
      ExampleRep ex = example_rep(family_from_string(family_name));
      StandardRep std3 = standard_rep(3);
      GeneratorHom hom{std3.generators, ex.generators, ex.generators};
      require_homomorphism(hom);
      MapRegistry reg;
      std::vector<std::pair<Word, OpenInterval>> elems;
      for (int i = 1; i <= 3; ++i) {
        Word w = word_power(3, i, 1);
        elems.emplace_back(w, orbitals(evaluate_word(std3.generators, w)).front());
      }
      WordTower T(std3.generators, std::move(elems));
      nlohmann::json result = nlohmann::json::array();
      for (const auto& S : towers_in(reg, image_poset(reg, hom, T))) {
        MapClass cls = classify_maximal(reg, hom, T, S);
        InducedTowerMap m = induced_map(reg, hom, T, S);
        result.push_back(nlohmann::json::parse(classification_json(cls, m, reg)));
      }
      LevelMapReport lvl = level_map(hom);
      nlohmann::json levels = nlohmann::json::array();
      for (std::size_t i = 0; i < lvl.generators.size(); ++i) {
        levels.push_back(nlohmann::json{{"generator", i + 1},
                                        {"level", lvl.generators[i].level},
                                        {"bumps_agree", lvl.generators[i].agreed}});
      }
      sink.emit(out,
                nlohmann::json{{"family", to_string(ex.family)},
                               {"maximal_towers", result},
                               {"level_map", levels},
                               {"level_map_coherent", lvl.coherent}}
                    .dump(2),
                "//");
    } else if (c_ver->parsed()) {
      VerifyOptions opts;
      opts.seed = seed_from_env_or(seed, seed_given);
      opts.depth_word_length = length_bound;
      opts.alpha_bound = alpha_bound;
      opts.n_max = n_max;
      std::vector<int> which;
      for (const auto& s : suites) {
        bool found = false;
        for (const auto& [k, name] : acceptance_suite_names()) {
          if (s == name || s == std::to_string(k)) {
            which.push_back(k);
            found = true;
          }
        }
        if (!found) throw validation_error("unknown suite: " + s);
      }
      auto results = run_acceptance(opts, which, &out);
      bool all = true;
      for (const auto& r : results) all = all && r.pass;
      return all ? 0 : 2;
    } else if (c_plot->parsed()) {
      std::vector<PLMap> maps;
      if (c_plot->count("--family")) {
        maps = example_rep(family_from_string(family_name)).generators;
      } else {
        auto gens = generators_for(rank, points_csv);
        if (word_text.empty()) {
          maps = gens;
        } else {
          maps.push_back(evaluate_word(gens, Word::parse(rank, word_text)));
        }
      }
      sink.emit(out, to_svg(maps), "<!--");
    } else if (c_hasse->parsed()) {
      if (mother) {
        TreeDiagram t = mother_tree_window(rank, mother_depth, -label_range, label_range);
        sink.emit(out, format == "json" ? tree_to_json(t) : tree_to_dot(t), "//");
      } else {
        auto gens = generators_for(rank, points_csv);
        auto orbs = ball_orbitals(gens, length_bound);
        OrbitalPoset poset(std::vector<OpenInterval>(orbs.begin(), orbs.end()));
        sink.emit(out, hasse_dot(poset), "//");
      }
    }
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace plogroup
