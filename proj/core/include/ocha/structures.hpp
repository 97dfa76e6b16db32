#pragma once

#include "ocha/brace.hpp"
#include "ocha/cochain.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ocha {

/// One nonzero structure constant of a residual that should vanish.
struct Witness {
  int l = 0;
  int k = 0;
  std::vector<std::string> closed;
  std::vector<std::string> open;
  std::string out;
  Scalar value;
  std::string describe() const;
};

struct Report {
  std::string check;
  bool passed = true;
  /// Structural problems (wrong degree, forbidden components, ...).
  std::vector<std::string> errors;
  /// Nonzero residual entries, in key order (lowest arity first).
  std::vector<Witness> witnesses;
  std::size_t residual_terms = 0;
  /// Largest (l, k) appearing in the inputs; every output arity reachable
  /// from them was assembled.
  ArityCap window{0, 0};

  void fail(std::string message);
  void absorb(const Report& other);
  std::string summary() const;
};

Witness make_witness(const OCCochain& d, const OCKey& key, const Scalar& value);
Witness make_witness(const SymCochain& d, const SymKey& key, const Scalar& value);

/// Report listing the nonzero entries of `residual` (up to max_witnesses).
Report residual_report(std::string check, const OCCochain& residual, std::size_t max_witnesses = 8);
Report residual_report(std::string check, const SymCochain& residual,
                       std::size_t max_witnesses = 8);

/// m{m} = 0 with |m| = 1; m must have l = 0 components only.
Report check_a_infinity(const OCCochain& m);
/// l<l> = 0 with |l| = 1.
Report check_l_infinity(const SymCochain& l);
/// sum m'(f(..), ..., f(..)) = f{m} with |f| = 0.
Report check_a_infinity_morphism(const OCCochain& m_source, const OCCochain& m_target,
                                 const OCCochain& f);
/// l' . k = k<l> with |k| = 0.
Report check_l_infinity_morphism(const SymCochain& l_source, const SymCochain& l_target,
                                 const SymCochain& k);

/// A validated pair (l, q). Only obtainable through make_ocha.
class OchaStructure {
public:
  const SymCochain& l() const { return l_; }
  const OCCochain& q() const { return q_; }
  const SpacePtr& closed_space() const { return q_.closed_space(); }
  const SpacePtr& open_space() const { return q_.open_space(); }
  /// Arities enumerated while checking q{q} = l^(q).
  const ArityCap& checked_window() const { return window_; }
  /// The component q_{0,1} = d_A.
  OCCochain d_a() const { return q_.component(0, 1); }

private:
  friend std::optional<OchaStructure> make_ocha(const SymCochain&, const OCCochain&, Report*);
  OchaStructure(SymCochain l, OCCochain q, ArityCap w)
      : l_(std::move(l)), q_(std::move(q)), window_(w) {}
  SymCochain l_;
  OCCochain q_;
  ArityCap window_;
};

/// Checks |q| = 1, that l is L-infinity, and q{q} = l^(q).
Report check_ocha(const SymCochain& l, const OCCochain& q);
/// Runs check_ocha; returns the structure on success. The report is copied
/// to `report` when given.
std::optional<OchaStructure> make_ocha(const SymCochain& l, const OCCochain& q,
                                       Report* report = nullptr);

/// Sign corruptions of the differential, for mutation tests.
enum class DeltaMutation {
  none,
  flip_hat,          // the l^ term enters with the opposite sign
  flip_right_brace,  // D{q} enters with the opposite sign
};

/// delta(D) = q{D} - (-1)^|D| D{q} + (-1)^|D| l^(D), extended additively
/// over homogeneous parts.
OCCochain hochschild_differential(const OchaStructure& s, const OCCochain& d,
                                  DeltaMutation mutation = DeltaMutation::none);

/// [D1, D2] = D1{D2} - (-1)^{|D1||D2|} D2{D1}, bilinear over homogeneous parts.
OCCochain gerstenhaber_bracket(const OCCochain& d1, const OCCochain& d2);

/// D1 cup D2 = (-1)^{|D1|+1} q{D1, D2}, bilinear over homogeneous parts.
OCCochain cup(const OchaStructure& s, const OCCochain& d1, const OCCochain& d2);

/// M(D) = delta(D); M(D_1, ..., D_k) = q{D_1, ..., D_k} for k > 1.
OCCochain m_structure(const OchaStructure& s, std::span<const OCCochain> ds);

/// Left side of the A-infinity relation of M on (D_1, ..., D_k):
///   sum (-1)^{|D_1|+...+|D_{i-1}|} M(D_1, ..., M(D_i, ...), ..., D_k).
/// Requires homogeneous arguments.
OCCochain m_a_infinity_residual(const OchaStructure& s, std::span<const OCCochain> ds);

/// L(k) = l<k> - (-1)^|k| k<l>; L(k_1, ..., k_n) = l<k_1, ..., k_n> for n > 1.
SymCochain l_structure(const SymCochain& l, std::span<const SymCochain> ks);

/// The component q_{1,0} : B -> A, with the check d_A iota = iota l_1.
struct IotaResult {
  OCCochain map;
  Report chain_map;
};
IotaResult iota(const OchaStructure& s);

/// Right side of the brace relation
///   D{E_1..E_m}{F_1..F_n} = sum (-1)^* D{F.., E_1{F..}, F.., E_m{F..}, F..}
/// with * = sum_k |E_k| (|F_1| + ... + |F_{i_k}|). Homogeneous E, F.
OCCochain brace_relation_rhs(const OCCochain& d, std::span<const OCCochain> es,
                             std::span<const OCCochain> fs, const BraceOptions& opts = {});

/// Right side of the closed-string/brace interaction
///   l^(D{E_1..E_m}) = (-1)^{|l| sum|E_i|} l^(D){E..}
///                     + sum_i (-1)^{|l| sum_{j>i}|E_j|} D{.., l^(E_i), ..}.
/// Homogeneous l and E_i.
OCCochain hat_brace_rhs(const SymCochain& l, const OCCochain& d, std::span<const OCCochain> es);

}  // namespace ocha
