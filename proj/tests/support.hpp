#pragma once

#include "ocha/random.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace test_support {

struct Spaces {
  ocha::SpacePtr b;
  ocha::SpacePtr a;
};

inline Spaces random_spaces(ocha::Rng& rng, int max_dim = 3) {
  return {ocha::random_space(rng, "B", max_dim, 2), ocha::random_space(rng, "A", max_dim, 1)};
}

inline ocha::OCCochain random_oc(ocha::Rng& rng, const Spaces& s, int max_l = 2, int max_k = 2,
                                 int entries = 5) {
  return ocha::random_cochain(s.b, s.a, s.a, ocha::SupportSpec{max_l, max_k, entries}, rng)
      .cochain;
}

/// Arity window that contains every output of a brace D{E_1..E_m}.
inline std::pair<int, int> brace_window(const ocha::OCCochain& d,
                                        const std::vector<ocha::OCCochain>& es) {
  int l = d.max_l(), k = d.max_k();
  for (const auto& e : es) {
    l += e.max_l();
    k += std::max(e.max_k(), 0);
  }
  return {l, k};
}

}  // namespace test_support
