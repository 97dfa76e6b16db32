#include "reference.hpp"

#include <algorithm>
#include <functional>

namespace ref {

namespace {

bool odd(long long v) { return (v & 1) != 0; }

int shifted(const ocha::GradedSpace& s, int i) { return s.degree(i) - s.shift(); }

// Sign of y_{[l]} = (-1)^eps y_{G_0} ^ y_{G_1} ^ ... where group[i] is the
// block of position i; blocks keep the original relative order.
bool block_sign(const ocha::GradedSpace& b, const std::vector<int>& ys,
                const std::vector<int>& group) {
  long long eps = 0;
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j)
      if (group[i] > group[j]) eps += shifted(b, ys[i]) * shifted(b, ys[j]);
  return odd(eps);
}

// Sorts a wedge word; false when it vanishes.
bool canonical(const ocha::GradedSpace& b, std::vector<int>& ys, bool& negative) {
  negative = false;
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      if (ys[i] == ys[j] && odd(shifted(b, ys[i]))) return false;
      if (ys[i] > ys[j] && odd(shifted(b, ys[i]) * shifted(b, ys[j]))) negative = !negative;
    }
  std::sort(ys.begin(), ys.end());
  return true;
}

void accumulate(Vec& into, const Vec& v, const Scalar& c) {
  for (const auto& [o, x] : v) into[o] += c * x;
}

// Calls visit(assignment) for every map [n] -> [0, blocks).
void for_each_assignment(int n, int blocks,
                         const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> g(n, 0);
  while (true) {
    visit(g);
    int i = 0;
    while (i < n && ++g[i] == blocks) g[i++] = 0;
    if (i == n) return;
  }
}

// Calls visit(cuts) for every 0 <= c_1 <= ... <= c_r <= k.
void for_each_cut(int k, int r, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> c(r, 0);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == r) {
      visit(c);
      return;
    }
    for (int v = lo; v <= k; ++v) {
      c[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
}

int open_degree_sum(const ocha::GradedSpace& a, const std::vector<int>& xs, int from, int to) {
  int s = 0;
  for (int i = from; i < to; ++i) s += shifted(a, xs[i]);
  return s;
}

}  // namespace

Vec eval(const OCCochain& d, const std::vector<int>& ys, const std::vector<int>& xs) {
  Vec out;
  if (ys.empty() && xs.empty()) return out;
  std::vector<int> w = ys;
  bool negative = false;
  if (!canonical(*d.closed_space(), w, negative)) return out;
  for (int o = 0; o < d.target_space()->dim(); ++o) {
    Scalar c = d.coefficient(ocha::OCKey{w, xs, o});
    if (c.is_zero()) continue;
    out[o] = negative ? -c : c;
  }
  return out;
}

Vec eval(const SymCochain& l, const std::vector<int>& ys) {
  Vec out;
  if (ys.empty()) return out;
  std::vector<int> w = ys;
  bool negative = false;
  if (!canonical(*l.source_space(), w, negative)) return out;
  for (int o = 0; o < l.target_space()->dim(); ++o) {
    Scalar c = l.coefficient(ocha::SymKey{w, o});
    if (c.is_zero()) continue;
    out[o] = negative ? -c : c;
  }
  return out;
}

Vec brace(const OCCochain& d, const std::vector<OCCochain>& es, const std::vector<int>& ys,
          const std::vector<int>& xs) {
  const auto& b = *d.closed_space();
  const auto& a = *d.open_space();
  const int m = static_cast<int>(es.size());
  const int l = static_cast<int>(ys.size());
  const int k = static_cast<int>(xs.size());
  if (m == 0) return eval(d, ys, xs);
  std::vector<int> edeg(m);
  for (int j = 0; j < m; ++j) edeg[j] = es[j].is_zero() ? 0 : es[j].degree();

  Vec out;
  for_each_assignment(l, m + 1, [&](const std::vector<int>& g) {
    // Block 0 is J, block j is L_j.
    std::vector<std::vector<int>> blocks(m + 1);
    std::vector<int> bdeg(m + 1, 0);
    for (int i = 0; i < l; ++i) {
      blocks[g[i]].push_back(ys[i]);
      bdeg[g[i]] += shifted(b, ys[i]);
    }
    const bool eps = block_sign(b, ys, g);
    // cuts: I_0 = [0,c1), K_1 = [c1,c2), I_1 = [c2,c3), ..., I_m = [c_2m, k)
    for_each_cut(k, 2 * m, [&](const std::vector<int>& c) {
      long long sign = eps ? 1 : 0;
      long long closed_before = bdeg[0];
      std::vector<Vec> inserted(m);
      for (int j = 1; j <= m; ++j) {
        const int ks = c[2 * j - 2], ke = c[2 * j - 1];
        if (blocks[j].empty() && ks == ke) return;  // no (0,0) component
        sign += static_cast<long long>(open_degree_sum(a, xs, 0, ks)) * (edeg[j - 1] + bdeg[j]);
        sign += closed_before * edeg[j - 1];
        closed_before += bdeg[j];
        inserted[j - 1] =
            eval(es[j - 1], blocks[j], std::vector<int>(xs.begin() + ks, xs.begin() + ke));
        if (inserted[j - 1].empty()) return;
      }
      // Expand D(y_J; x_I0, E_1(..), x_I1, ..., E_m(..), x_Im) multilinearly.
      std::vector<int> args;
      std::function<void(int, Scalar)> rec = [&](int j, Scalar coeff) {
        const int is = j == 0 ? 0 : c[2 * j - 1];
        const int ie = j == m ? k : c[2 * j];
        const std::size_t mark = args.size();
        for (int i = is; i < ie; ++i) args.push_back(xs[i]);
        if (j == m) {
          accumulate(out, eval(d, blocks[0], args), coeff);
        } else {
          for (const auto& [o, v] : inserted[j]) {
            args.push_back(o);
            rec(j + 1, coeff * v);
            args.pop_back();
          }
        }
        args.resize(mark);
      };
      rec(0, odd(sign) ? Scalar(-1) : Scalar(1));
    });
  });
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : ++it;
  return out;
}

Vec hat(const SymCochain& l, const OCCochain& d, const std::vector<int>& ys,
        const std::vector<int>& xs) {
  const auto& b = *d.closed_space();
  Vec out;
  for_each_assignment(static_cast<int>(ys.size()), 2, [&](const std::vector<int>& g) {
    std::vector<int> j1, j2;
    for (std::size_t i = 0; i < ys.size(); ++i) (g[i] == 0 ? j1 : j2).push_back(ys[i]);
    if (j1.empty()) return;
    const Scalar s = block_sign(b, ys, g) ? Scalar(-1) : Scalar(1);
    for (const auto& [o, v] : eval(l, j1)) {
      std::vector<int> w{o};
      w.insert(w.end(), j2.begin(), j2.end());
      accumulate(out, eval(d, w, xs), s * v);
    }
  });
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : ++it;
  return out;
}

Vec l_infinity_residual(const SymCochain& l, const std::vector<int>& ys) {
  const auto& b = *l.source_space();
  Vec out;
  for_each_assignment(static_cast<int>(ys.size()), 2, [&](const std::vector<int>& g) {
    std::vector<int> j1, j2;
    for (std::size_t i = 0; i < ys.size(); ++i) (g[i] == 0 ? j1 : j2).push_back(ys[i]);
    if (j1.empty()) return;
    const Scalar s = block_sign(b, ys, g) ? Scalar(-1) : Scalar(1);
    for (const auto& [o, v] : eval(l, j1)) {
      std::vector<int> w{o};
      w.insert(w.end(), j2.begin(), j2.end());
      accumulate(out, eval(l, w), s * v);
    }
  });
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : ++it;
  return out;
}

Vec a_infinity_residual(const OCCochain& m, const std::vector<int>& xs) {
  const auto& a = *m.open_space();
  const int k = static_cast<int>(xs.size());
  Vec out;
  for (int i = 0; i < k; ++i)
    for (int k2 = 1; i + k2 <= k; ++k2) {
      const Scalar s = odd(open_degree_sum(a, xs, 0, i)) ? Scalar(-1) : Scalar(1);
      const Vec inner = eval(m, {}, std::vector<int>(xs.begin() + i, xs.begin() + i + k2));
      for (const auto& [o, v] : inner) {
        std::vector<int> w(xs.begin(), xs.begin() + i);
        w.push_back(o);
        w.insert(w.end(), xs.begin() + i + k2, xs.end());
        accumulate(out, eval(m, {}, w), s * v);
      }
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : ++it;
  return out;
}

OCCochain brace_cochain(const OCCochain& d, const std::vector<OCCochain>& es, int max_l,
                        int max_k) {
  return tabulate(d, max_l, max_k, [&](const std::vector<int>& ys, const std::vector<int>& xs) {
    return brace(d, es, ys, xs);
  });
}

OCCochain hat_cochain(const SymCochain& l, const OCCochain& d, int max_l, int max_k) {
  return tabulate(d, max_l, max_k, [&](const std::vector<int>& ys, const std::vector<int>& xs) {
    return hat(l, d, ys, xs);
  });
}

}  // namespace ref
