#include "ocha/random.hpp"

#include <map>

namespace ocha {

Scalar Rng::coefficient() {
  static const long values[] = {-2, -1, 1, 2};
  return Scalar(values[below(4)]);
}

SpacePtr random_space(Rng& rng, const std::string& name, int max_dim, int shift, int lo, int hi) {
  const int dim = rng.range(1, std::max(1, max_dim));
  std::vector<BasisElement> basis;
  for (int i = 0; i < dim; ++i)
    basis.push_back({name + std::to_string(i), rng.range(lo, hi)});
  return make_space(name, std::move(basis), shift);
}

namespace {

int word_degree(const GradedSpace& s, const std::vector<int>& w) {
  int d = 0;
  for (int i : w) d += s.shifted_degree(i);
  return d;
}

// All canonical keys within the support window, grouped by shifted degree.
std::map<int, std::vector<OCKey>> admissible_keys(const SpacePtr& closed, const SpacePtr& open,
                                                  const SpacePtr& target, const SupportSpec& spec) {
  std::map<int, std::vector<OCKey>> keys;
  for (int l = 0; l <= spec.max_l; ++l) {
    if (l > 0 && closed->dim() == 0) break;
    for (int k = 0; k <= spec.max_k; ++k) {
      if (l == 0 && k == 0) continue;
      for_each_canonical_word(*closed, l, [&](const std::vector<int>& w) {
        for_each_tuple(open->dim(), k, [&](const std::vector<int>& t) {
          for (int out = 0; out < target->dim(); ++out) {
            const int deg = target->shifted_degree(out) - word_degree(*closed, w) -
                            word_degree(*open, t);
            keys[deg].push_back(OCKey{w, t, out});
          }
        });
      });
    }
  }
  return keys;
}

std::map<int, std::vector<SymKey>> admissible_sym_keys(const SpacePtr& source,
                                                       const SpacePtr& target,
                                                       const SupportSpec& spec) {
  std::map<int, std::vector<SymKey>> keys;
  for (int l = 1; l <= spec.max_l; ++l)
    for_each_canonical_word(*source, l, [&](const std::vector<int>& w) {
      for (int out = 0; out < target->dim(); ++out)
        keys[target->shifted_degree(out) - word_degree(*source, w)].push_back(SymKey{w, out});
    });
  return keys;
}

template <class Key, class C>
void fill(C& c, const std::vector<Key>& pool, const SupportSpec& spec, Rng& rng) {
  for (int i = 0; i < spec.entries; ++i) c.add_canonical(pool[rng.below(pool.size())], rng.coefficient());
}

template <class Key>
int pick_degree(const std::map<int, std::vector<Key>>& keys, Rng& rng) {
  std::size_t total = 0;
  for (const auto& [d, v] : keys) total += v.size();
  std::uint64_t r = rng.below(total);
  for (const auto& [d, v] : keys) {
    if (r < v.size()) return d;
    r -= v.size();
  }
  return keys.begin()->first;
}

std::string no_entries(int degree) {
  return "no admissible entries of shifted degree " + std::to_string(degree) +
         "; returning the zero cochain";
}

}  // namespace

RandomCochain random_cochain(const SpacePtr& closed, const SpacePtr& open, const SpacePtr& target,
                             int degree, const SupportSpec& spec, Rng& rng) {
  RandomCochain r{OCCochain(closed, open, target), {}};
  auto keys = admissible_keys(closed, open, target, spec);
  auto it = keys.find(degree);
  if (it == keys.end()) {
    r.warning = no_entries(degree);
    return r;
  }
  fill(r.cochain, it->second, spec, rng);
  return r;
}

RandomCochain random_cochain(const SpacePtr& closed, const SpacePtr& open, const SpacePtr& target,
                             const SupportSpec& spec, Rng& rng) {
  auto keys = admissible_keys(closed, open, target, spec);
  RandomCochain r{OCCochain(closed, open, target), {}};
  if (keys.empty()) {
    r.warning = "no admissible entries; returning the zero cochain";
    return r;
  }
  fill(r.cochain, keys.at(pick_degree(keys, rng)), spec, rng);
  return r;
}

RandomSymCochain random_sym_cochain(const SpacePtr& source, const SpacePtr& target, int degree,
                                    const SupportSpec& spec, Rng& rng) {
  RandomSymCochain r{SymCochain(source, target), {}};
  auto keys = admissible_sym_keys(source, target, spec);
  auto it = keys.find(degree);
  if (it == keys.end()) {
    r.warning = no_entries(degree);
    return r;
  }
  fill(r.cochain, it->second, spec, rng);
  return r;
}

RandomSymCochain random_sym_cochain(const SpacePtr& source, const SpacePtr& target,
                                    const SupportSpec& spec, Rng& rng) {
  auto keys = admissible_sym_keys(source, target, spec);
  RandomSymCochain r{SymCochain(source, target), {}};
  if (keys.empty()) {
    r.warning = "no admissible entries; returning the zero cochain";
    return r;
  }
  fill(r.cochain, keys.at(pick_degree(keys, rng)), spec, rng);
  return r;
}

}  // namespace ocha
