#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocha {

/// Error raised for malformed inputs: unknown labels, space mismatches,
/// forbidden arities, degree violations.
class AlgebraError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An element of {+1, -1}. Parities are only used inside sign computations.
class Sign {
public:
  constexpr Sign() = default;
  static constexpr Sign plus() { return Sign(false); }
  static constexpr Sign minus() { return Sign(true); }
  /// (-1)^exponent
  static constexpr Sign of_parity(long long exponent) { return Sign((exponent & 1) != 0); }

  constexpr bool negative() const { return neg_; }
  constexpr int value() const { return neg_ ? -1 : 1; }

  constexpr Sign operator*(Sign o) const { return Sign(neg_ != o.neg_); }
  constexpr Sign& operator*=(Sign o) { neg_ = neg_ != o.neg_; return *this; }
  constexpr Sign operator-() const { return Sign(!neg_); }
  friend constexpr bool operator==(Sign, Sign) = default;

private:
  constexpr explicit Sign(bool neg) : neg_(neg) {}
  bool neg_ = false;
};

struct BasisElement {
  std::string label;
  int degree = 0;
};

/// Finite-dimensional graded vector space with a fixed degree shift j.
/// The shifted degree of a basis element is degree - j; every sign in the
/// library is computed from shifted degrees.
class GradedSpace {
public:
  GradedSpace(std::string name, std::vector<BasisElement> basis, int shift);

  const std::string& name() const { return name_; }
  int shift() const { return shift_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& label(int i) const { return basis_.at(i).label; }
  int degree(int i) const { return basis_.at(i).degree; }
  int shifted_degree(int i) const { return shifted_[i]; }
  /// Throws AlgebraError for an unknown label.
  int index_of(const std::string& label) const;
  bool contains(const std::string& label) const { return index_.count(label) != 0; }

  friend bool operator==(const GradedSpace& a, const GradedSpace& b);

private:
  std::string name_;
  std::vector<BasisElement> basis_;
  std::vector<int> shifted_;
  int shift_;
  std::map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(std::string name, std::vector<BasisElement> basis, int shift);

/// True when both pointers name the same space (by identity or by content).
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Koszul sign of a rearrangement. `perm[i]` is the (0-based) position the
/// i-th element is moved to; the exponent sums |y_i||y_j| over pairs i < j
/// with perm[i] > perm[j].
Sign koszul_sign(std::span<const int> shifted_degrees, std::span<const int> perm);

/// Shifted degree of an open-closed map B^l (x) A^k -> A' of raw degree
/// `raw_degree`: raw + l*jB + k*jA - jA'. Rejects (l,k) = (0,0).
int shifted_map_degree(int l, int k, int raw_degree, int shift_closed, int shift_open,
                       int shift_target);

/// Closed-only variant for graded symmetric maps B^l -> B'; requires l >= 1.
int shifted_sym_degree(int l, int raw_degree, int shift_source, int shift_target);

}  // namespace ocha
