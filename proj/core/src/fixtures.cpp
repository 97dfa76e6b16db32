#include "ocha/fixtures.hpp"

#include <stdexcept>

namespace ocha {

int twist_sign(int code, int degree_a, int degree_b) {
  const int p = degree_a & 1, q = degree_b & 1;
  const int c0 = code & 1, c1 = (code >> 1) & 1, c2 = (code >> 2) & 1, c3 = (code >> 3) & 1;
  return ((c0 + c1 * p + c2 * q + c3 * p * q) & 1) ? -1 : 1;
}

std::string describe_twist(int code) {
  return "sigma(p,q) = " + std::to_string(code & 1) + " + " + std::to_string((code >> 1) & 1) +
         "p + " + std::to_string((code >> 2) & 1) + "q + " + std::to_string((code >> 3) & 1) +
         "pq";
}

namespace {

SpacePtr open_one() { return make_space("A", {{"one_N", 0}}, 1); }

void add_product(OCCochain& q, const std::string& a, const std::string& b, const std::string& out,
                 int twist) {
  const auto& s = *q.open_space();
  const int sg = twist_sign(twist, s.degree(s.index_of(a)), s.degree(s.index_of(b)));
  q.add({}, {a, b}, out, Scalar(sg));
}

}  // namespace

OchaData cdga_circle(int twist) {
  auto b = make_space("B", {{"one_M", 0}, {"theta", 1}}, 2);
  auto a = open_one();
  OchaData d{"cdga-circle", SymCochain(b, b), OCCochain(b, a, a), {}};
  add_product(d.q, "one_N", "one_N", "one_N", twist);
  d.q.add({"one_M"}, {}, "one_N", Scalar(1));
  return d;
}

OchaData cdga_acyclic(int twist) {
  auto b = make_space("B", {{"u", 0}, {"v", 1}}, 2);
  auto a = open_one();
  OchaData d{"cdga-acyclic", SymCochain(b, b), OCCochain(b, a, a), {}};
  d.l.add({"u"}, "v", Scalar(1));
  add_product(d.q, "one_N", "one_N", "one_N", twist);
  d.q.add({"u"}, {}, "one_N", Scalar(1));
  return d;
}

OchaData trivial_b0() {
  auto b = make_space("B", {}, 2);
  auto a = open_one();
  return OchaData{"trivial-b0", SymCochain(b, b), OCCochain(b, a, a), {}};
}

OchaData dual_numbers(int twist) {
  auto b = make_space("B", {}, 2);
  auto a = make_space("A", {{"one", 0}, {"x", 0}}, 1);
  OchaData d{"dual-numbers", SymCochain(b, b), OCCochain(b, a, a), {}};
  add_product(d.q, "one", "one", "one", twist);
  add_product(d.q, "one", "x", "x", twist);
  add_product(d.q, "x", "one", "x", twist);
  return d;
}

TwistCalibration calibrate_twists(const std::string& fixture, OchaData (*builder)(int)) {
  TwistCalibration cal;
  cal.fixture = fixture;
  for (int code = 0; code < 16; ++code) {
    OchaData d = builder(code);
    Report r = check_ocha(d.l, d.q);
    if (r.passed) cal.passing.push_back(code);
    cal.reports.emplace(code, std::move(r));
  }
  return cal;
}

CdgaExample build_cdga_pullback_example() {
  CdgaExample ex{cdga_circle(0), calibrate_twists("cdga-circle", &cdga_circle)};
  if (ex.calibration.passing.empty())
    throw std::logic_error("cdga-circle: no admissible product twist");
  ex.data = cdga_circle(ex.calibration.passing.front());
  return ex;
}

OchaStructure build_trivial_ocha(const OCCochain& m, const SymCochain& l) {
  Report ra = check_a_infinity(m);
  if (!ra.passed) throw AlgebraError("build_trivial_ocha: " + ra.summary());
  Report rl = check_l_infinity(l);
  if (!rl.passed) throw AlgebraError("build_trivial_ocha: " + rl.summary());
  Report r;
  auto s = make_ocha(l, embed_a_infinity(m, l.source_space()), &r);
  if (!s) throw AlgebraError("build_trivial_ocha: " + r.summary());
  return *s;
}

std::vector<std::string> fixture_names() {
  return {"cdga-circle", "cdga-acyclic", "trivial-b0", "dual-numbers"};
}

OchaData build_fixture(const std::string& name) {
  auto calibrated = [&](OchaData (*builder)(int)) {
    TwistCalibration cal = calibrate_twists(name, builder);
    if (cal.passing.empty()) throw std::logic_error(name + ": no admissible product twist");
    return builder(cal.passing.front());
  };
  if (name == "cdga-circle") return calibrated(&cdga_circle);
  if (name == "cdga-acyclic") return calibrated(&cdga_acyclic);
  if (name == "trivial-b0") return trivial_b0();
  if (name == "dual-numbers") return calibrated(&dual_numbers);
  throw AlgebraError("unknown fixture '" + name + "'");
}

// ---- building blocks ----------------------------------------------------------

SymCochain abelian_l_infinity() {
  auto b = make_space("B", {{"u", 0}, {"v", 1}}, 2);
  SymCochain l(b, b);
  l.add({"u"}, "v", Scalar(1));
  return l;
}

SymCochain lie2_l_infinity() {
  auto b = make_space("B", {{"e", 1}, {"f", 1}}, 2);
  SymCochain l(b, b);
  l.add({"e", "f"}, "e", Scalar(1));
  return l;
}

SymCochain dg_lie_l_infinity() {
  // Lie degree of x (x) r is deg r; the stored degree is one higher so that
  // the shifted degree is (Lie degree - 1).
  const std::vector<std::string> g = {"e", "f"};
  const std::vector<std::string> r = {"1", "s", "t"};
  const std::vector<int> rdeg = {0, 0, 1};
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) basis.push_back({g[i] + r[j], rdeg[j] + 1});
  auto b = make_space("B", basis, 2);
  SymCochain l(b, b);
  // l_1(x (x) s) = x (x) t.
  for (const auto& x : g) l.add({x + "s"}, x + "t", Scalar(1));
  // l_2(a, b) = (-1)^{Lie degree of a} [a, b] with [e r, f r'] = e (r r').
  auto product = [&](std::size_t i, std::size_t j) -> int {
    if (i == 0) return static_cast<int>(j);
    if (j == 0) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      const int k = product(i, j);
      if (k < 0) continue;
      // [e r_i, f r_j] = (-1)^{deg r_i deg f} e r_k = e r_k  (f has Lie degree 0)
      const Scalar sign((rdeg[i] & 1) ? -1 : 1);
      l.add({"e" + r[i], "f" + r[j]}, "e" + r[k], sign);
    }
  return l;
}

std::vector<std::pair<std::string, SymCochain>> l_infinity_fixtures() {
  return {{"abelian", abelian_l_infinity()},
          {"lie2", lie2_l_infinity()},
          {"dg-lie", dg_lie_l_infinity()}};
}

OCCochain dual_numbers_a_infinity() { return project_open(dual_numbers(0).q); }

OCCochain assoc2_a_infinity() {
  auto a = make_space("A", {{"p", 0}, {"n", 0}}, 1);
  OCCochain m(zero_space(), a, a);
  m.add({}, {"p", "p"}, "p", Scalar(1));
  m.add({}, {"p", "n"}, "n", Scalar(1));
  return m;
}

}  // namespace ocha
