#pragma once

#include "ocha/structures.hpp"

#include <map>
#include <string>
#include <vector>

namespace ocha {

/// A named (l, q) pair over (B; A, A), plus optional named test inputs.
struct OchaData {
  std::string name;
  SymCochain l;
  OCCochain q;
  std::map<std::string, OCCochain> inputs;
};

/// Product sign twists (-1)^{sigma(p, q)} with p, q the degree parities of
/// the two factors and sigma(p, q) = c0 + c1 p + c2 q + c3 p q (mod 2).
/// The code is c0 + 2 c1 + 4 c2 + 8 c3, in [0, 16).
int twist_sign(int code, int degree_a, int degree_b);
std::string describe_twist(int code);

/// Circle model: B = {1_M (0), theta (1)}, l = 0; A = {1_N (0)};
/// q_{0,2}(1_N, 1_N) = twisted product, q_{1,0}(1_M) = 1_N.
OchaData cdga_circle(int twist = 0);
/// Acyclic model: B = {u (0), v (1)}, l_1(u) = v; A = {1_N (0)};
/// q_{1,0}(u) = 1_N.
OchaData cdga_acyclic(int twist = 0);
/// B = 0, A = k.1 in degree 0, q = 0.
OchaData trivial_b0();
/// B = 0, A = k[x]/(x^2) in degree 0 with the (twisted) product as q_{0,2}.
OchaData dual_numbers(int twist = 0);

struct TwistCalibration {
  std::string fixture;
  std::vector<int> passing;  // twist codes for which check_ocha passes
  std::map<int, Report> reports;
};

/// Runs check_ocha on builder(code) for all 16 twist codes.
TwistCalibration calibrate_twists(const std::string& fixture,
                                  OchaData (*builder)(int));

struct CdgaExample {
  OchaData data;  // built with the first passing twist
  TwistCalibration calibration;
};
/// The circle surrogate with calibrated twist. Throws when no twist passes.
CdgaExample build_cdga_pullback_example();

/// q = embed(m) over the L-infinity algebra l. Throws AlgebraError when m or
/// l fails its own check.
OchaStructure build_trivial_ocha(const OCCochain& m, const SymCochain& l);

/// Built-in fixture names, in a fixed order.
std::vector<std::string> fixture_names();
/// Builds a fixture by name (calibrated twist for the CDGA models).
OchaData build_fixture(const std::string& name);

// ---- L-infinity and A-infinity building blocks -----------------------------

/// B = {u (0), v (1)} with l_1(u) = v and nothing else.
SymCochain abelian_l_infinity();
/// B = {e, f} in degree 1 (odd shifted degree) with l_2(e, f) = e.
SymCochain lie2_l_infinity();
/// dg Lie algebra g (x) R with g = span{e, f}, [e, f] = e, and
/// R = span{1, s, t}, d s = t, st = 0: a 6-dimensional L-infinity algebra
/// with nonzero l_1 and l_2.
SymCochain dg_lie_l_infinity();
std::vector<std::pair<std::string, SymCochain>> l_infinity_fixtures();

/// Open-only product on A given as m_2 constants, |m| = 1.
OCCochain dual_numbers_a_infinity();
/// A = span{p, n} in degree 0 with p*p = p, p*n = n, n*p = 0, n*n = 0.
OCCochain assoc2_a_infinity();

}  // namespace ocha
