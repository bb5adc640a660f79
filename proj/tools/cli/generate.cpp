#include "cli/generate.hpp"

#include <random>

#include "cannonball/errors.hpp"

namespace cannonball::cli {

namespace {

std::string random_letters(int layers, std::mt19937_64& rng) {
  static constexpr char kLetters[] = {'A', 'B', 'C'};
  std::string out;
  std::uniform_int_distribution<int> first(0, 2), step(1, 2);
  int cur = first(rng);
  out.push_back(kLetters[cur]);
  for (int i = 1; i < layers; ++i) {
    cur = (cur + step(rng)) % 3;
    out.push_back(kLetters[cur]);
  }
  return out;
}

}  // namespace

StackingSequence resolve_stacking(const std::string& name, std::optional<int> layers,
                                  std::uint64_t seed) {
  if (name == "fcc" || name == "hcp" || name == "random") {
    if (!layers) throw InputError("stacking '" + name + "' needs --layers");
    if (*layers < 1) throw InputError("--layers must be at least 1");
    if (name == "fcc") return StackingSequence::fcc(*layers);
    if (name == "hcp") return StackingSequence::hcp(*layers);
    // Separate stream so the stacking does not shift the demand draws.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    return StackingSequence(random_letters(*layers, rng));
  }
  StackingSequence s(name);
  if (layers && *layers != s.size()) {
    throw InputError("--layers " + std::to_string(*layers) + " does not match stacking '" +
                     name + "'");
  }
  return s;
}

InstanceFile generate(const GenerateParams& p) {
  if (p.width < 0 || p.height < 0) throw InputError("window size must be nonnegative");
  if (!(p.density >= 0.0 && p.density <= 1.0)) throw InputError("density must lie in [0, 1]");
  if (p.max_demand < 1) throw InputError("max demand must be at least 1");

  InstanceFile out;
  out.stacking = resolve_stacking(p.stacking, p.layers, p.seed);

  std::mt19937_64 rng(p.seed);
  std::bernoulli_distribution present(p.density);
  std::uniform_int_distribution<int> demand(1, p.max_demand);
  for (int layer = 0; layer < out.stacking.size(); ++layer) {
    for (int u = 0; u < p.width; ++u) {
      for (int v = 0; v < p.height; ++v) {
        int d = present(rng) ? demand(rng) : 0;
        out.vertices.push_back({layer, u, v, d});
      }
    }
  }
  return out;
}

}  // namespace cannonball::cli
