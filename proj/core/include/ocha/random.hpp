#pragma once

#include "ocha/cochain.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace ocha {

/// Deterministic generator: mt19937_64 with our own bounded draws, so
/// results do not depend on the standard library's distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(std::uint64_t(hi - lo + 1))); }
  bool coin() { return (engine_() & 1) != 0; }
  /// One of -2, -1, 1, 2.
  Scalar coefficient();

private:
  std::mt19937_64 engine_;
};

struct SupportSpec {
  int max_l = 3;
  int max_k = 3;
  int entries = 10;
};

/// Random homogeneous space: dimension in [1, max_dim], degrees in [lo, hi].
SpacePtr random_space(Rng& rng, const std::string& name, int max_dim, int shift, int lo = 0,
                      int hi = 3);

struct RandomCochain {
  OCCochain cochain;
  std::string warning;  // nonempty when no admissible entry exists
};

/// Random cochain of the requested shifted degree with up to spec.entries
/// structure constants drawn from {-2, -1, 1, 2}.
RandomCochain random_cochain(const SpacePtr& closed, const SpacePtr& open, const SpacePtr& target,
                             int degree, const SupportSpec& spec, Rng& rng);
/// Same, with the degree taken from a uniformly chosen admissible key, so
/// the result is nonzero whenever any key exists.
RandomCochain random_cochain(const SpacePtr& closed, const SpacePtr& open, const SpacePtr& target,
                             const SupportSpec& spec, Rng& rng);

struct RandomSymCochain {
  SymCochain cochain;
  std::string warning;
};
RandomSymCochain random_sym_cochain(const SpacePtr& source, const SpacePtr& target, int degree,
                                    const SupportSpec& spec, Rng& rng);
RandomSymCochain random_sym_cochain(const SpacePtr& source, const SpacePtr& target,
                                    const SupportSpec& spec, Rng& rng);

}  // namespace ocha
