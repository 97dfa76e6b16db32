#pragma once

// Literal evaluation of the defining sums on basis inputs, by brute-force
// enumeration of partitions. Slow and independent of the library's
// entry-driven assembly; used only as a test oracle.

#include "ocha/cochain.hpp"

#include <map>
#include <vector>

namespace ref {

using ocha::OCCochain;
using ocha::Scalar;
using ocha::SymCochain;

/// Linear combination of target basis elements.
using Vec = std::map<int, Scalar>;

/// D(y_1 ^ ... ^ y_l; x_1, ..., x_k) for basis indices in any order.
Vec eval(const OCCochain& d, const std::vector<int>& ys, const std::vector<int>& xs);
Vec eval(const SymCochain& l, const std::vector<int>& ys);

/// D{E_1, ..., E_m} on one input; homogeneous E_j.
Vec brace(const OCCochain& d, const std::vector<OCCochain>& es, const std::vector<int>& ys,
          const std::vector<int>& xs);
/// l^(D) on one input.
Vec hat(const SymCochain& l, const OCCochain& d, const std::vector<int>& ys,
        const std::vector<int>& xs);
/// sum over J1 u J2 of (-1)^eps l(l(y_J1) ^ y_J2).
Vec l_infinity_residual(const SymCochain& l, const std::vector<int>& ys);
/// sum (-1)^{|x_1|+..+|x_{i-1}|} m(x_1, .., m(x_i, ..), .., x_k).
Vec a_infinity_residual(const OCCochain& m, const std::vector<int>& xs);

/// Tabulates a per-input evaluator over every canonical key with
/// l <= max_l, k <= max_k, (l, k) != (0, 0).
template <class F>
OCCochain tabulate(const OCCochain& like, int max_l, int max_k, F&& f) {
  OCCochain out = like.zero_like();
  for (int l = 0; l <= max_l; ++l)
    for (int k = 0; k <= max_k; ++k) {
      if (l == 0 && k == 0) continue;
      ocha::for_each_canonical_word(*like.closed_space(), l, [&](const std::vector<int>& ys) {
        ocha::for_each_tuple(like.open_space()->dim(), k, [&](const std::vector<int>& xs) {
          for (const auto& [o, c] : f(ys, xs))
            if (!c.is_zero()) out.add_canonical(ocha::OCKey{ys, xs, o}, c);
        });
      });
    }
  return out;
}

OCCochain brace_cochain(const OCCochain& d, const std::vector<OCCochain>& es, int max_l,
                        int max_k);
OCCochain hat_cochain(const SymCochain& l, const OCCochain& d, int max_l, int max_k);

}  // namespace ref
