#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doxa/formula.hpp"
#include "doxa/frames.hpp"
#include "doxa/model.hpp"

namespace doxa {

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic random source.  Only raw mt19937_64 draws are used (the
// standard pins that engine's exact output, while the std distribution
// templates may differ between library implementations), so a seed
// reproduces the same models and formulas on any platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n);  // uniform draw from [0, n); n > 0
  bool chance(double p);                 // true with probability p

private:
  std::mt19937_64 engine_;
};

struct GeneratorConfig {
  int worlds = 4;
  int agents = 2;
  double density = 0.25;         // independent edge probability before closure
  std::set<RelCond> conditions;  // enforced on every agent's relation
  std::uint64_t seed = 42;
  std::vector<std::string> atoms = {"p", "q", "r"};
  double atom_density = 0.5;
};

// Random model (agents "a", "b", ...; worlds "w1".."wN") whose relations all
// satisfy cfg.conditions: sample edges independently, then close — reflexive
// diagonal, symmetrize, transitive/euclidean joint fixpoint — then repair
// dead ends for seriality with one random edge each and re-close until
// stable.  Closure only ever adds edges, so this terminates; the result is
// re-checked against every requested condition and a GenerationError
// reports any miss.
BeliefModel generate_model(const GeneratorConfig& cfg);

// Random formula of the given language with modal depth at most
// max_modal_depth, drawing from the given atom and agent pools.
FormulaPtr random_formula(Rng& rng, Lang lang, int max_modal_depth,
                          const std::vector<std::string>& atoms,
                          const std::vector<std::string>& agents);

}  // namespace doxa
