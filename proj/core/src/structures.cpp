#include "ocha/structures.hpp"

#include <sstream>

namespace ocha {

namespace {

std::vector<std::string> labels_of(const GradedSpace& s, const std::vector<int>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(s.label(i));
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string r;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) r += ",";
    r += xs[i];
  }
  return r;
}

bool odd(long long x) { return (x & 1) != 0; }

Scalar parity_sign(long long e) { return odd(e) ? Scalar(-1) : Scalar(1); }

// Degree of a homogeneous cochain; 0 for the zero cochain (whose sign never
// matters). Throws for inhomogeneous input.
template <class C>
int homogeneous_degree(const C& c, const char* what) {
  if (c.is_zero()) return 0;
  if (!c.is_homogeneous()) throw AlgebraError(std::string(what) + ": inhomogeneous argument");
  return c.degree();
}

void require_degree(Report& r, const std::set<int>& degrees, int expected, const char* name) {
  for (int d : degrees)
    if (d != expected)
      r.fail(std::string(name) + " has a component of shifted degree " + std::to_string(d) +
             " (expected " + std::to_string(expected) + ")");
}

}  // namespace

std::string Witness::describe() const {
  std::ostringstream os;
  os << "(" << l << "," << k << ") [" << join(closed) << "; " << join(open) << "] -> " << out
     << " : " << value;
  return os.str();
}

void Report::fail(std::string message) {
  passed = false;
  errors.push_back(std::move(message));
}

void Report::absorb(const Report& other) {
  if (!other.passed) passed = false;
  for (const auto& e : other.errors) errors.push_back(other.check + ": " + e);
  for (const auto& w : other.witnesses) witnesses.push_back(w);
  residual_terms += other.residual_terms;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << check << ": " << (passed ? "pass" : "FAIL");
  for (const auto& e : errors) os << "\n  error: " << e;
  if (residual_terms > 0) os << "\n  residual terms: " << residual_terms;
  for (const auto& w : witnesses) os << "\n  witness " << w.describe();
  return os.str();
}

Witness make_witness(const OCCochain& d, const OCKey& key, const Scalar& value) {
  return Witness{key.l(), key.k(), labels_of(*d.closed_space(), key.closed),
                 labels_of(*d.open_space(), key.open), d.target_space()->label(key.out), value};
}

Witness make_witness(const SymCochain& d, const SymKey& key, const Scalar& value) {
  return Witness{key.l(), 0, labels_of(*d.source_space(), key.closed), {},
                 d.target_space()->label(key.out), value};
}

Report residual_report(std::string check, const OCCochain& residual, std::size_t max_witnesses) {
  Report r;
  r.check = std::move(check);
  r.residual_terms = residual.size();
  r.passed = residual.is_zero();
  for (const auto& [k, v] : residual.entries()) {
    if (r.witnesses.size() >= max_witnesses) break;
    r.witnesses.push_back(make_witness(residual, k, v));
  }
  return r;
}

Report residual_report(std::string check, const SymCochain& residual, std::size_t max_witnesses) {
  Report r;
  r.check = std::move(check);
  r.residual_terms = residual.size();
  r.passed = residual.is_zero();
  for (const auto& [k, v] : residual.entries()) {
    if (r.witnesses.size() >= max_witnesses) break;
    r.witnesses.push_back(make_witness(residual, k, v));
  }
  return r;
}

Report check_a_infinity(const OCCochain& m) {
  Report r;
  r.check = "a-infinity";
  if (m.max_l() > 0) {
    r.fail("closed-string components present");
    return r;
  }
  if (!same_space(m.open_space(), m.target_space())) {
    r.fail("structure maps must be endomorphisms of the open space");
    return r;
  }
  require_degree(r, m.degrees(), 1, "m");
  if (!r.passed) return r;
  Report res = residual_report("m{m}", gerstenhaber_product(m, m));
  r.absorb(res);
  r.window = ArityCap{0, m.is_zero() ? 0 : 2 * m.max_k() - 1};
  return r;
}

Report check_l_infinity(const SymCochain& l) {
  Report r;
  r.check = "l-infinity";
  if (!same_space(l.source_space(), l.target_space())) {
    r.fail("structure maps must be endomorphisms");
    return r;
  }
  require_degree(r, l.degrees(), 1, "l");
  if (!r.passed) return r;
  r.absorb(residual_report("l<l>", sym_brace(l, std::span<const SymCochain>(&l, 1))));
  r.window = ArityCap{l.is_zero() ? 0 : 2 * l.max_l() - 1, 0};
  return r;
}

Report check_a_infinity_morphism(const OCCochain& m_source, const OCCochain& m_target,
                                 const OCCochain& f) {
  Report r;
  r.check = "a-infinity-morphism";
  if (f.max_l() > 0 || m_source.max_l() > 0 || m_target.max_l() > 0) {
    r.fail("closed-string components present");
    return r;
  }
  if (!same_space(f.open_space(), m_source.open_space()) ||
      !same_space(f.target_space(), m_target.open_space())) {
    r.fail("space mismatch");
    return r;
  }
  require_degree(r, f.degrees(), 0, "f");
  if (!r.passed) return r;
  OCCochain residual = a_infinity_compose(m_target, f) - gerstenhaber_product(f, m_source);
  r.absorb(residual_report("m'(f..) - f{m}", residual));
  return r;
}

Report check_l_infinity_morphism(const SymCochain& l_source, const SymCochain& l_target,
                                 const SymCochain& k) {
  Report r;
  r.check = "l-infinity-morphism";
  if (!same_space(k.source_space(), l_source.source_space()) ||
      !same_space(k.target_space(), l_target.source_space())) {
    r.fail("space mismatch");
    return r;
  }
  require_degree(r, k.degrees(), 0, "k");
  if (!r.passed) return r;
  SymCochain residual =
      sym_compose(l_target, k) - sym_brace(k, std::span<const SymCochain>(&l_source, 1));
  r.absorb(residual_report("l'.k - k<l>", residual));
  return r;
}

Report check_ocha(const SymCochain& l, const OCCochain& q) {
  Report r;
  r.check = "ocha";
  if (!same_space(q.open_space(), q.target_space()) ||
      !same_space(l.source_space(), q.closed_space())) {
    r.fail("space mismatch between l and q");
    return r;
  }
  Report lr = check_l_infinity(l);
  if (!lr.passed) {
    r.absorb(lr);
    return r;
  }
  require_degree(r, q.degrees(), 1, "q");
  if (!r.passed) return r;
  OCCochain residual = gerstenhaber_product(q, q) - hat_action(l, q);
  r.absorb(residual_report("q{q} - l^(q)", residual));
  if (!q.is_zero()) {
    const int lq = q.max_l();
    const int ll = l.is_zero() ? 0 : l.max_l();
    r.window = ArityCap{std::max(2 * lq, lq + ll - 1), 2 * q.max_k()};
  }
  return r;
}

std::optional<OchaStructure> make_ocha(const SymCochain& l, const OCCochain& q, Report* report) {
  Report r = check_ocha(l, q);
  if (report) *report = r;
  if (!r.passed) return std::nullopt;
  return OchaStructure(l, q, r.window);
}

OCCochain hochschild_differential(const OchaStructure& s, const OCCochain& d,
                                  DeltaMutation mutation) {
  OCCochain result = d.zero_like();
  for (const auto& [deg, part] : d.homogeneous_parts()) {
    const Scalar sg = parity_sign(deg);
    result += gerstenhaber_product(s.q(), part);
    OCCochain right = gerstenhaber_product(part, s.q());
    right *= (mutation == DeltaMutation::flip_right_brace) ? sg : -sg;
    result += right;
    OCCochain hat = hat_action(s.l(), part);
    hat *= (mutation == DeltaMutation::flip_hat) ? -sg : sg;
    result += hat;
  }
  return result;
}

OCCochain gerstenhaber_bracket(const OCCochain& d1, const OCCochain& d2) {
  OCCochain result = d1.zero_like();
  for (const auto& [a, p1] : d1.homogeneous_parts())
    for (const auto& [b, p2] : d2.homogeneous_parts()) {
      result += gerstenhaber_product(p1, p2);
      OCCochain back = gerstenhaber_product(p2, p1);
      back *= -parity_sign(static_cast<long long>(a) * b);
      result += back;
    }
  return result;
}

OCCochain cup(const OchaStructure& s, const OCCochain& d1, const OCCochain& d2) {
  OCCochain result = d1.zero_like();
  for (const auto& [a, p1] : d1.homogeneous_parts()) {
    const OCCochain args[] = {p1, d2};
    OCCochain t = brace(s.q(), args);
    t *= parity_sign(a + 1);
    result += t;
  }
  return result;
}

OCCochain m_structure(const OchaStructure& s, std::span<const OCCochain> ds) {
  if (ds.empty()) throw AlgebraError("m_structure: empty argument list");
  if (ds.size() == 1) return hochschild_differential(s, ds[0]);
  return brace(s.q(), ds);
}

OCCochain m_a_infinity_residual(const OchaStructure& s, std::span<const OCCochain> ds) {
  const std::size_t k = ds.size();
  if (k == 0) throw AlgebraError("m_a_infinity_residual: empty argument list");
  std::vector<int> deg(k);
  for (std::size_t i = 0; i < k; ++i) deg[i] = homogeneous_degree(ds[i], "m_a_infinity_residual");
  OCCochain result = s.q().zero_like();
  for (std::size_t k2 = 1; k2 <= k; ++k2) {
    for (std::size_t i = 0; i + k2 <= k; ++i) {
      OCCochain inner = m_structure(s, ds.subspan(i, k2));
      std::vector<OCCochain> args(ds.begin(), ds.begin() + static_cast<long>(i));
      args.push_back(std::move(inner));
      args.insert(args.end(), ds.begin() + static_cast<long>(i + k2), ds.end());
      long long prefix = 0;
      for (std::size_t j = 0; j < i; ++j) prefix += deg[j];
      OCCochain term = m_structure(s, args);
      term *= parity_sign(prefix);
      result += term;
    }
  }
  return result;
}

SymCochain l_structure(const SymCochain& l, std::span<const SymCochain> ks) {
  if (ks.empty()) throw AlgebraError("l_structure: empty argument list");
  if (ks.size() > 1) return sym_brace(l, ks);
  SymCochain result = l.zero_like();
  for (const auto& [deg, part] : ks[0].homogeneous_parts()) {
    result += sym_brace(l, std::span<const SymCochain>(&part, 1));
    SymCochain back = sym_brace(part, std::span<const SymCochain>(&l, 1));
    back *= -parity_sign(deg);
    result += back;
  }
  return result;
}

IotaResult iota(const OchaStructure& s) {
  OCCochain map = s.q().component(1, 0);
  // (1,0) component of q{q} = l^(q):  d_A(iota(y)) = iota(l_1(y)).
  OCCochain lhs = gerstenhaber_product(s.d_a(), map);
  OCCochain rhs = hat_action(s.l().component(1), map);
  return IotaResult{std::move(map), residual_report("d_A iota - iota l_1", lhs - rhs)};
}

OCCochain brace_relation_rhs(const OCCochain& d, std::span<const OCCochain> es,
                             std::span<const OCCochain> fs, const BraceOptions& opts) {
  const std::size_t m = es.size();
  const std::size_t n = fs.size();
  std::vector<int> edeg(m), fdeg(n);
  for (std::size_t i = 0; i < m; ++i) edeg[i] = homogeneous_degree(es[i], "brace_relation_rhs");
  for (std::size_t i = 0; i < n; ++i) fdeg[i] = homogeneous_degree(fs[i], "brace_relation_rhs");
  std::vector<long long> fprefix(n + 1, 0);
  for (std::size_t a = 0; a < n; ++a) fprefix[a + 1] = fprefix[a] + fdeg[a];

  OCCochain result = d.zero_like();
  // cuts[2j], cuts[2j+1] = i_{j+1}, j_{j+1}: F's strictly inside E_{j+1} are
  // F_{i+1..j}.
  std::vector<std::size_t> cuts(2 * m, 0);
  auto emit = [&]() {
    std::vector<OCCochain> args;
    long long sign = 0;
    std::size_t next_f = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t i0 = cuts[2 * j], j0 = cuts[2 * j + 1];
      for (; next_f < i0; ++next_f) args.push_back(fs[next_f]);
      args.push_back(brace(es[j], fs.subspan(i0, j0 - i0), opts));
      next_f = j0;
      sign += static_cast<long long>(edeg[j]) * fprefix[i0];
    }
    for (; next_f < n; ++next_f) args.push_back(fs[next_f]);
    OCCochain t = brace(d, args, opts);
    t *= parity_sign(sign);
    result += t;
  };
  auto rec = [&](auto&& self, std::size_t pos, std::size_t lo) -> void {
    if (pos == 2 * m) {
      emit();
      return;
    }
    for (std::size_t v = lo; v <= n; ++v) {
      cuts[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return result;
}

OCCochain hat_brace_rhs(const SymCochain& l, const OCCochain& d, std::span<const OCCochain> es) {
  const int ldeg = homogeneous_degree(l, "hat_brace_rhs");
  const std::size_t m = es.size();
  std::vector<long long> edeg(m);
  for (std::size_t i = 0; i < m; ++i) edeg[i] = homogeneous_degree(es[i], "hat_brace_rhs");
  long long total = 0;
  for (auto e : edeg) total += e;

  OCCochain result = brace(hat_action(l, d), es);
  result *= parity_sign(ldeg * total);
  long long after = total;
  for (std::size_t i = 0; i < m; ++i) {
    after -= edeg[i];
    std::vector<OCCochain> args(es.begin(), es.end());
    args[i] = hat_action(l, es[i]);
    OCCochain t = brace(d, args);
    t *= parity_sign(ldeg * after);
    result += t;
  }
  return result;
}

}  // namespace ocha
