#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "doxa/bisim.hpp"
#include "doxa/formula.hpp"
#include "doxa/frames.hpp"
#include "doxa/generator.hpp"
#include "doxa/model.hpp"
#include "doxa/model_io.hpp"
#include "doxa/parser.hpp"
#include "doxa/reproduce.hpp"
#include "doxa/semantics.hpp"
#include "doxa/translate.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DOXA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::runtime_error("DOXA_SEED is not a number: " + std::string(env));
    }
  }
  return 42;
}

// A --world argument names a world, or failing that a named point.
int resolve_world(const doxa::LoadedModel& loaded, const std::string& name) {
  int w = loaded.model.world_index(name);
  if (w >= 0) return w;
  auto it = loaded.points.find(name);
  if (it != loaded.points.end()) return it->second;
  throw std::runtime_error("no world or point named \"" + name + "\"");
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

int run_check(const std::string& model_path, const std::string& world_name,
              const std::string& formula_text, bool valid, bool trace) {
  doxa::LoadedModel loaded = doxa::load_model(model_path);
  doxa::FormulaPtr f = doxa::parse_formula(formula_text);
  if (valid) {
    bool verdict = doxa::valid_in_model(loaded.model, f);
    std::cout << (verdict ? "true" : "false") << "\n";
    return verdict ? kExitTrue : kExitFalse;
  }
  int world = resolve_world(loaded, world_name);
  if (trace) {
    doxa::Trace t = doxa::trace_eval(loaded.model, world, f);
    for (const doxa::TraceLine& line : t.extensions)
      std::cout << "ext   " << line.formula << "  =>  {" << join(line.worlds) << "}\n";
    for (const doxa::GroupTraceLine& line : t.mcs_at_point)
      std::cout << "mcs   " << line.group << " at " << loaded.model.world_name(world)
                << "  =>  " << (line.subgroups.empty() ? "(none)" : join(line.subgroups)) << "\n";
    std::cout << (t.verdict ? "true" : "false") << "\n";
    return t.verdict ? kExitTrue : kExitFalse;
  }
  bool verdict = doxa::eval(loaded.model, world, f);
  std::cout << (verdict ? "true" : "false") << "\n";
  return verdict ? kExitTrue : kExitFalse;
}

std::pair<std::string, std::string> split_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == text.size())
    throw std::runtime_error("--pair wants two comma-separated world names");
  return {text.substr(0, comma), text.substr(comma + 1)};
}

int run_bisim(const std::string& left_path, const std::string& right_path,
              const std::string& kind_name, const std::string& pair_text,
              const std::string& distinguish_lang) {
  doxa::LoadedModel left = doxa::load_model(left_path);
  doxa::LoadedModel right = doxa::load_model(right_path);

  doxa::BisimKind kind;
  doxa::Lang lang;
  if (kind_name == "collective") {
    kind = doxa::BisimKind::Collective;
    lang = doxa::Lang::D;
  } else if (kind_name == "cautious") {
    kind = doxa::BisimKind::Cautious;
    lang = doxa::Lang::DCaut;
  } else if (kind_name == "bold") {
    kind = doxa::BisimKind::BoldV2;
    lang = doxa::Lang::DBold;
  } else {
    throw std::runtime_error("--kind must be collective, cautious or bold");
  }
  if (!distinguish_lang.empty()) {
    doxa::Lang asked;
    if (!doxa::lang_from_name(distinguish_lang, asked))
      throw std::runtime_error("--distinguish wants L_D, L_DCaut or L_DBold");
    if (asked != lang)
      throw std::runtime_error("--distinguish " + distinguish_lang +
                               " does not match --kind " + kind_name);
    if (pair_text.empty())
      throw std::runtime_error("--distinguish needs --pair to know which worlds to separate");
  }

  if (pair_text.empty()) {
    doxa::GreatestBisim gb = doxa::greatest_bisim(left.model, right.model, kind);
    for (const auto& [w, w2] : gb.pairs)
      std::cout << "(" << left.model.world_name(w) << "," << right.model.world_name(w2) << ")\n";
    return kExitTrue;
  }

  auto [lname, rname] = split_pair(pair_text);
  int lw = resolve_world(left, lname);
  int rw = resolve_world(right, rname);

  if (!distinguish_lang.empty()) {
    std::optional<doxa::FormulaPtr> d =
        doxa::distinguishing_formula(left.model, lw, right.model, rw, lang);
    if (!d) {
      std::cout << "none\n";
      return kExitFalse;
    }
    std::cout << doxa::print(*d) << "\n";
    return kExitTrue;
  }

  doxa::GreatestBisim gb = doxa::greatest_bisim(left.model, right.model, kind);
  bool related = gb.contains(lw, rw);
  std::cout << (related ? "related" : "not related") << "\n";
  return related ? kExitTrue : kExitFalse;
}

int run_translate(const std::string& formula_text, const std::string& target) {
  doxa::FormulaPtr f = doxa::parse_formula(formula_text);
  doxa::FormulaPtr out;
  if (target == "D") {
    // Auto-detect which elimination applies.
    switch (doxa::language_of(f)) {
      case doxa::Lang::D: out = f; break;
      case doxa::Lang::DCaut: out = doxa::cautious_to_d(f); break;
      case doxa::Lang::DBold: out = doxa::bold_to_d(f); break;
      default:
        throw doxa::TranslateError("formula mixes modalities; no single elimination applies");
    }
  } else if (target == "DfromDCaut") {
    out = doxa::cautious_to_d(f);
  } else if (target == "DfromDBold") {
    out = doxa::bold_to_d(f);
  } else if (target == "DCautInc") {
    out = doxa::d_to_cautious_inc(f);
  } else if (target == "DBoldInc") {
    out = doxa::d_to_bold_inc(f);
  } else if (target == "DCaut") {
    out = doxa::bold_to_cautious(f);
  } else {
    throw std::runtime_error(
        "--to must be one of D, DCautInc, DBoldInc, DCaut, DfromDCaut, DfromDBold");
  }
  std::cout << doxa::print(out) << "\n";
  return kExitTrue;
}

int run_reproduce(const std::string& filter, int samples, std::uint64_t seed) {
  doxa::SuiteOptions options;
  options.seed = seed;
  options.samples = samples;
  std::vector<doxa::SuiteResult> results = doxa::run_suites(filter, options);
  if (results.empty()) throw std::runtime_error("no suite matches filter \"" + filter + "\"");
  bool all = true;
  for (const doxa::SuiteResult& r : results) {
    all = all && r.passed;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds;
    std::cout << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << " — "
              << r.detail << " (" << secs.str() << " s)\n";
  }
  std::cout << (all ? "all suites passed" : "some suites FAILED") << "\n";
  return all ? kExitTrue : kExitFalse;
}

int run_gen(int worlds, int agents, const std::string& class_text, double density,
            std::uint64_t seed, const std::string& out_path) {
  doxa::GeneratorConfig cfg;
  cfg.worlds = worlds;
  cfg.agents = agents;
  cfg.density = density;
  cfg.seed = seed;
  if (!class_text.empty()) cfg.conditions = doxa::parse_frame_class(class_text);
  doxa::BeliefModel m = doxa::generate_model(cfg);
  if (out_path.empty()) std::cout << doxa::model_to_text(m);
  else doxa::save_model(m, out_path);
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checking, bisimulation, and translation for multi-agent belief models"};
  app.require_subcommand(1);

  std::string model_path, world_name, formula_text;
  bool valid = false, trace = false;
  CLI::App* check = app.add_subcommand("check", "evaluate a formula in a model");
  check->add_option("--model", model_path, "model file (JSON)")->required();
  check->add_option("--world", world_name, "world or point to evaluate at");
  check->add_option("--formula", formula_text, "formula text")->required();
  check->add_flag("--valid", valid, "check truth in every world instead of one");
  check->add_flag("--trace", trace, "print subformula extensions and the point's MCS families");

  std::string left_path, right_path, kind_name = "collective", pair_text, distinguish_lang;
  CLI::App* bisim = app.add_subcommand("bisim", "compare two models by bisimulation");
  bisim->add_option("--left", left_path, "left model file")->required();
  bisim->add_option("--right", right_path, "right model file")->required();
  bisim->add_option("--kind", kind_name, "collective | cautious | bold")->required();
  bisim->add_option("--pair", pair_text, "world pair \"w,w'\" to test");
  bisim->add_option("--distinguish", distinguish_lang,
                    "emit a distinguishing formula in this language (L_D, L_DCaut, L_DBold)");

  std::string translate_formula, translate_target;
  CLI::App* translate = app.add_subcommand("translate", "rewrite a formula into another language");
  translate->add_option("--formula", translate_formula, "formula text")->required();
  translate
      ->add_option("--to", translate_target,
                   "D | DCautInc | DBoldInc | DCaut | DfromDCaut | DfromDBold")
      ->required();

  std::string filter;
  int samples = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  CLI::App* reproduce = app.add_subcommand("reproduce", "run the documented result suites");
  reproduce->add_option("--filter", filter, "run only suites whose id or title contains this");
  reproduce->add_option("--samples", samples, "override per-suite sample counts (0 = defaults)");
  CLI::Option* reproduce_seed = reproduce->add_option("--seed", seed, "random seed (default 42)");

  int gen_worlds = 4, gen_agents = 2;
  double gen_density = 0.25;
  std::string gen_class, gen_out;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate a random model file");
  gen->add_option("--worlds", gen_worlds, "number of worlds (default 4)");
  gen->add_option("--agents", gen_agents, "number of agents (default 2)");
  gen->add_option("--class", gen_class, "frame class name (S5) or condition letters (re)");
  gen->add_option("--density", gen_density, "edge probability (default 0.25)");
  CLI::Option* gen_seed_opt = gen->add_option("--seed", gen_seed, "random seed (default 42)");
  gen->add_option("--out", gen_out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (app.got_subcommand(check)) {
      if (!valid && world_name.empty())
        throw std::runtime_error("check needs --world unless --valid is given");
      if (trace && world_name.empty())
        throw std::runtime_error("--trace needs --world");
      return run_check(model_path, world_name, formula_text, valid, trace);
    }
    if (app.got_subcommand(bisim))
      return run_bisim(left_path, right_path, kind_name, pair_text, distinguish_lang);
    if (app.got_subcommand(translate)) return run_translate(translate_formula, translate_target);
    if (app.got_subcommand(reproduce)) {
      seed_given = reproduce_seed->count() > 0;
      return run_reproduce(filter, samples, seed_given ? seed : default_seed());
    }
    if (app.got_subcommand(gen))
      return run_gen(gen_worlds, gen_agents, gen_class, gen_density,
                     gen_seed_opt->count() > 0 ? gen_seed : default_seed(), gen_out);
    throw std::runtime_error("no subcommand given");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
