#include "ocha/brace.hpp"

#include "ocha/partitions.hpp"

#include <algorithm>
#include <functional>

namespace ocha {

namespace {

struct OCTerm {
  const OCKey* key;
  const Scalar* coef;
  int degree;       // shifted degree of the entry
  int closed_deg;   // |y| of its closed word
  int open_deg;     // |x| of its open tuple
};

struct SymTerm {
  const SymKey* key;
  const Scalar* coef;
  int degree;
  int closed_deg;
};

int word_degree(const GradedSpace& s, const std::vector<int>& w) {
  int d = 0;
  for (int i : w) d += s.shifted_degree(i);
  return d;
}

std::vector<std::vector<OCTerm>> index_by_output(const OCCochain& e) {
  std::vector<std::vector<OCTerm>> by_out(e.target_space()->dim());
  for (const auto& [k, v] : e.entries())
    by_out[k.out].push_back(OCTerm{&k, &v, e.entry_degree(k), word_degree(*e.closed_space(), k.closed),
                                   word_degree(*e.open_space(), k.open)});
  return by_out;
}

std::vector<std::vector<SymTerm>> index_by_output(const SymCochain& e) {
  std::vector<std::vector<SymTerm>> by_out(e.target_space()->dim());
  for (const auto& [k, v] : e.entries())
    by_out[k.out].push_back(
        SymTerm{&k, &v, e.entry_degree(k), word_degree(*e.source_space(), k.closed)});
  return by_out;
}

Scalar signed_times(Scalar c, long long parity, long multiplicity) {
  if (multiplicity != 1) c *= Scalar(multiplicity);
  return (parity & 1) ? -c : c;
}

}  // namespace

OCCochain hat_action(const SymCochain& l, const OCCochain& d, const ArityCap& cap) {
  if (!same_space(l.source_space(), d.closed_space()) ||
      !same_space(l.target_space(), d.closed_space()))
    throw AlgebraError("hat_action: space mismatch");
  const GradedSpace& b = *d.closed_space();
  auto l_by_out = index_by_output(l);
  OCCochain result = d.zero_like();
  std::vector<int> front_and_rest;
  for (const auto& [key, c] : d.entries()) {
    for (std::size_t i = 0; i < key.closed.size(); ++i) {
      if (i > 0 && key.closed[i] == key.closed[i - 1]) continue;
      const int slot = key.closed[i];
      if (l_by_out[slot].empty()) continue;
      std::vector<int> rest = key.closed;
      rest.erase(rest.begin() + static_cast<long>(i));
      // D(b ^ y_rest) in terms of the stored canonical value.
      front_and_rest.assign(1, slot);
      front_and_rest.insert(front_and_rest.end(), rest.begin(), rest.end());
      const Sign to_canonical = normalize_wedge(b, front_and_rest)->normalization_sign;
      for (const SymTerm& t : l_by_out[slot]) {
        const std::vector<int>* blocks[] = {&t.key->closed, &rest};
        auto merged = merge_words(b, blocks);
        if (!merged) continue;
        const int out_l = static_cast<int>(merged->merged.size());
        if (!cap.admits(out_l, key.k())) continue;
        long long parity = (to_canonical.negative() ? 1 : 0) + (merged->sign.negative() ? 1 : 0);
        result.add_canonical(OCKey{merged->merged, key.open, key.out},
                             signed_times(c * *t.coef, parity, merged->multiplicity));
      }
    }
  }
  return result;
}

OCCochain brace(const OCCochain& d, std::span<const OCCochain> es, const BraceOptions& opts) {
  for (const auto& e : es) {
    if (!same_space(e.closed_space(), d.closed_space()) ||
        !same_space(e.open_space(), d.open_space()) ||
        !same_space(e.target_space(), d.open_space()))
      throw AlgebraError("brace: space mismatch (inserted cochains must target the open space)");
  }
  if (es.empty()) return d.restricted(opts.cap);

  const std::size_t m = es.size();
  const GradedSpace& bs = *d.closed_space();
  const GradedSpace& as = *d.open_space();
  std::vector<std::vector<std::vector<OCTerm>>> by_out;
  by_out.reserve(m);
  for (const auto& e : es) by_out.push_back(index_by_output(e));

  OCCochain result = d.zero_like();
  std::vector<int> pos(m);
  std::vector<const OCTerm*> chosen(m);
  std::vector<const std::vector<int>*> blocks(m + 1);

  for (const auto& [key, c] : d.entries()) {
    const int kd = key.k();
    if (kd < static_cast<int>(m)) continue;
    std::vector<int> slot_prefix(kd + 1, 0);
    for (int s = 0; s < kd; ++s) slot_prefix[s + 1] = slot_prefix[s] + as.shifted_degree(key.open[s]);
    const int d_closed_deg = word_degree(bs, key.closed);
    blocks[0] = &key.closed;

    std::function<void(std::size_t, int)> choose_term;
    auto leaf = [&]() {
      int out_k = kd - static_cast<int>(m);
      int out_l = key.l();
      for (std::size_t j = 0; j < m; ++j) {
        out_k += chosen[j]->key->k();
        out_l += chosen[j]->key->l();
      }
      if (!opts.cap.admits(out_l, out_k)) return;
      for (std::size_t j = 0; j < m; ++j) blocks[j + 1] = &chosen[j]->key->closed;
      auto merged = merge_words(bs, blocks);
      if (!merged) return;

      long long parity = merged->sign.negative() ? 1 : 0;
      int inserted_open = 0;   // open degree of E_1..E_{j-1} outputs' inputs
      int removed_slots = 0;   // degrees of D's slots already replaced
      int closed_before = d_closed_deg;
      for (std::size_t j = 0; j < m; ++j) {
        const OCTerm& t = *chosen[j];
        const long long prefix = slot_prefix[pos[j]] - removed_slots + inserted_open;
        if (opts.mutation == Mutation::gerstenhaber_prefix_sign && m == 1)
          parity += prefix * t.degree;
        else
          parity += prefix * (t.degree + t.closed_deg);
        parity += static_cast<long long>(closed_before) * t.degree;
        inserted_open += t.open_deg;
        removed_slots += as.shifted_degree(key.open[pos[j]]);
        closed_before += t.closed_deg;
      }

      std::vector<int> open;
      open.reserve(out_k);
      int cursor = 0;
      for (std::size_t j = 0; j < m; ++j) {
        open.insert(open.end(), key.open.begin() + cursor, key.open.begin() + pos[j]);
        open.insert(open.end(), chosen[j]->key->open.begin(), chosen[j]->key->open.end());
        cursor = pos[j] + 1;
      }
      open.insert(open.end(), key.open.begin() + cursor, key.open.end());

      Scalar coef = c;
      for (std::size_t j = 0; j < m; ++j) coef *= *chosen[j]->coef;
      result.add_canonical(OCKey{std::move(merged->merged), std::move(open), key.out},
                           signed_times(std::move(coef), parity, merged->multiplicity));
    };
    choose_term = [&](std::size_t j, int) {
      if (j == m) {
        leaf();
        return;
      }
      for (const OCTerm& t : by_out[j][key.open[pos[j]]]) {
        chosen[j] = &t;
        choose_term(j + 1, 0);
      }
    };
    std::function<void(std::size_t, int)> choose_slot = [&](std::size_t j, int from) {
      if (j == m) {
        choose_term(0, 0);
        return;
      }
      for (int s = from; s <= kd - static_cast<int>(m - j); ++s) {
        if (by_out[j][key.open[s]].empty()) continue;
        pos[j] = s;
        choose_slot(j + 1, s + 1);
      }
    };
    choose_slot(0, 0);
  }
  return result;
}

OCCochain gerstenhaber_product(const OCCochain& d, const OCCochain& e, const BraceOptions& opts) {
  return brace(d, std::span<const OCCochain>(&e, 1), opts);
}

namespace {

// Shared core of sym_brace and sym_compose: for each entry of `outer`,
// distributes its input word into outputs of `inner[i]` (i < n) and a
// remainder of untouched inputs, calling `emit` with the assembled term.
struct SymInsertion {
  const SymCochain& outer;
  std::vector<std::vector<std::vector<SymTerm>>> inner_by_out;
  bool keep_remainder;  // false: every outer input must be fed by an inner map
  bool dagger_sign;     // include sum_{j<i} |k_i||y_Jj|
  int max_l;

  void run(SymCochain& result, const Scalar& weight_factor, std::size_t n) {
    const GradedSpace& src_outer = *outer.source_space();
    const GradedSpace& src_inner =
        inner_by_out.empty() ? src_outer : *result.source_space();
    std::vector<int> values(n);
    std::vector<const SymTerm*> chosen(n);
    std::vector<const std::vector<int>*> blocks(n + 1);
    for (const auto& [key, c] : outer.entries()) {
      if (key.l() < static_cast<int>(n)) continue;
      if (!keep_remainder && key.l() != static_cast<int>(n)) continue;
      // Remaining multiplicities of the outer word.
      std::vector<std::pair<int, int>> counts;
      for (int v : key.closed) {
        if (!counts.empty() && counts.back().first == v) ++counts.back().second;
        else counts.emplace_back(v, 1);
      }
      std::function<void(std::size_t)> pick_terms;
      std::vector<int> remainder;
      Sign outer_sign;
      auto leaf = [&]() {
        int out_l = static_cast<int>(remainder.size());
        for (std::size_t i = 0; i < n; ++i) out_l += chosen[i]->key->l();
        if (out_l > max_l) return;
        for (std::size_t i = 0; i < n; ++i) blocks[i] = &chosen[i]->key->closed;
        blocks[n] = &remainder;
        auto merged = merge_words(src_inner, blocks);
        if (!merged) return;
        long long parity = (merged->sign.negative() ? 1 : 0) + (outer_sign.negative() ? 1 : 0);
        if (dagger_sign)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
              parity += static_cast<long long>(chosen[i]->degree) * chosen[j]->closed_deg;
        Scalar coef = c * weight_factor;
        for (std::size_t i = 0; i < n; ++i) coef *= *chosen[i]->coef;
        result.add_canonical(SymKey{std::move(merged->merged), key.out},
                             signed_times(std::move(coef), parity, merged->multiplicity));
      };
      pick_terms = [&](std::size_t i) {
        if (i == n) {
          leaf();
          return;
        }
        for (const SymTerm& t : inner_by_out[i][values[i]]) {
          chosen[i] = &t;
          pick_terms(i + 1);
        }
      };
      std::function<void(std::size_t)> pick_values = [&](std::size_t i) {
        if (i == n) {
          remainder.clear();
          for (const auto& [v, cnt] : counts)
            for (int r = 0; r < cnt; ++r) remainder.push_back(v);
          std::vector<int> word(values.begin(), values.end());
          word.insert(word.end(), remainder.begin(), remainder.end());
          outer_sign = normalize_wedge(src_outer, word)->normalization_sign;
          pick_terms(0);
          return;
        }
        for (auto& [v, cnt] : counts) {
          if (cnt == 0 || inner_by_out[i][v].empty()) continue;
          --cnt;
          values[i] = v;
          pick_values(i + 1);
          ++cnt;
        }
      };
      pick_values(0);
    }
  }
};

}  // namespace

SymCochain sym_brace(const SymCochain& l, std::span<const SymCochain> ks, int max_l) {
  for (const auto& k : ks)
    if (!same_space(k.source_space(), l.source_space()) ||
        !same_space(k.target_space(), l.source_space()))
      throw AlgebraError("sym_brace: space mismatch");
  if (ks.empty()) return l.restricted(max_l);
  SymInsertion ins{l, {}, true, true, max_l};
  for (const auto& k : ks) ins.inner_by_out.push_back(index_by_output(k));
  SymCochain result(l.source_space(), l.target_space());
  ins.run(result, Scalar(1), ks.size());
  return result;
}

SymCochain sym_compose(const SymCochain& k2, const SymCochain& k1, int max_l) {
  if (!same_space(k2.source_space(), k1.target_space()))
    throw AlgebraError("sym_compose: space mismatch");
  SymCochain result(k1.source_space(), k2.target_space());
  auto by_out = index_by_output(k1);
  // Ordered block sums weighted by 1/s!, split by the outer arity s.
  for (int s = 1; s <= k2.max_l(); ++s) {
    SymCochain outer = k2.component(s);
    if (outer.is_zero()) continue;
    SymInsertion ins{outer, std::vector<std::vector<std::vector<SymTerm>>>(s, by_out), false,
                     false, max_l};
    ins.run(result, Scalar(1, static_cast<long>(factorial(s))), static_cast<std::size_t>(s));
  }
  return result;
}

OCCochain a_infinity_compose(const OCCochain& m_target, const OCCochain& f) {
  if (!same_space(m_target.open_space(), f.target_space()))
    throw AlgebraError("a_infinity_compose: space mismatch");
  if (f.max_l() > 0 || m_target.max_l() > 0)
    throw AlgebraError("a_infinity_compose: closed-string components are not allowed");
  OCCochain result(f.closed_space(), f.open_space(), m_target.target_space());
  auto by_out = index_by_output(f);
  for (const auto& [key, c] : m_target.entries()) {
    const std::size_t r = key.open.size();
    std::vector<const OCTerm*> chosen(r);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == r) {
        std::vector<int> open;
        Scalar coef = c;
        for (const auto* t : chosen) {
          open.insert(open.end(), t->key->open.begin(), t->key->open.end());
          coef *= *t->coef;
        }
        result.add_canonical(OCKey{{}, std::move(open), key.out}, coef);
        return;
      }
      for (const OCTerm& t : by_out[key.open[i]]) {
        chosen[i] = &t;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return result;
}

}  // namespace ocha
