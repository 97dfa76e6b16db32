#pragma once

#include "ocha/graded.hpp"
#include "ocha/scalar.hpp"

#include <climits>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ocha {

/// Coordinates of a vector with respect to a space's basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(const GradedSpace& space);
Vector basis_vector(const GradedSpace& space, int index);

/// Canonical basis element of the graded symmetric power B^{^l}: basis
/// indices sorted ascending, together with the Koszul sign picked up while
/// sorting (input word = normalization_sign * canonical word).
struct WedgeWord {
  std::vector<int> factors;
  Sign normalization_sign;
};

/// Sorts `factors` into canonical order. Returns nullopt (the zero vector)
/// when a basis element of odd shifted degree repeats.
std::optional<WedgeWord> normalize_wedge(const GradedSpace& space, std::span<const int> factors);
std::optional<WedgeWord> normalize_wedge(const GradedSpace& space,
                                         const std::vector<std::string>& labels);

/// Visits every canonical word of length l (nondecreasing indices, odd
/// elements not repeated).
void for_each_canonical_word(const GradedSpace& space, int l,
                             const std::function<void(const std::vector<int>&)>& visit);
/// Visits every tuple in {0..dim-1}^k in lexicographic order.
void for_each_tuple(int dim, int k, const std::function<void(const std::vector<int>&)>& visit);

/// Result of concatenating several canonical words into one wedge product.
/// `sign` satisfies  w_1 ^ ... ^ w_r = sign * merged  and `multiplicity`
/// counts the position splittings of `merged` that realize the blocks
/// (only repeated even factors contribute).
struct MergedWord {
  std::vector<int> merged;
  Sign sign;
  long multiplicity = 1;
};
std::optional<MergedWord> merge_words(const GradedSpace& space,
                                      std::span<const std::vector<int>* const> blocks);

/// Output-arity window for operations that assemble components.
struct ArityCap {
  int max_l = INT_MAX;
  int max_k = INT_MAX;
  bool admits(int l, int k) const { return l <= max_l && k <= max_k; }
};

/// Key of one structure constant: canonical closed word, open tuple, output
/// basis index. Ordered by (l, k, closed, open, out).
struct OCKey {
  std::vector<int> closed;
  std::vector<int> open;
  int out = 0;
  int l() const { return static_cast<int>(closed.size()); }
  int k() const { return static_cast<int>(open.size()); }
  int weight() const { return 2 * l() + k(); }
  friend bool operator==(const OCKey&, const OCKey&) = default;
  friend std::strong_ordering operator<=>(const OCKey& a, const OCKey& b);
};

/// Finitely supported element of C^{*,*}(B; A, A'): a family of maps
/// B^{^l} (x) A^{(x)k} -> A' stored as nonzero structure constants on
/// canonical inputs. Components with (l, k) = (0, 0) are rejected.
class OCCochain {
public:
  /// The zero cochain over zero-dimensional spaces.
  OCCochain();
  OCCochain(SpacePtr closed, SpacePtr open, SpacePtr target);

  const SpacePtr& closed_space() const { return closed_; }
  const SpacePtr& open_space() const { return open_; }
  const SpacePtr& target_space() const { return target_; }

  /// Adds c * D(y_1 ^ ... ^ y_l; x_1, ..., x_k) = out. Closed factors may be
  /// given in any order; the Koszul sign of sorting is absorbed.
  void add(std::span<const int> closed, std::span<const int> open, int out, const Scalar& c);
  void add(const std::vector<std::string>& closed, const std::vector<std::string>& open,
           const std::string& out, const Scalar& c);
  /// Adds an already canonical key (no sorting); used by the assembly code.
  void add_canonical(const OCKey& key, const Scalar& c);

  Scalar coefficient(const OCKey& key) const;
  const std::map<OCKey, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// |out| - sum |b_i| - sum |a_j| for a stored key.
  int entry_degree(const OCKey& key) const;
  std::set<int> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  /// Shifted degree of a nonzero homogeneous cochain; throws otherwise.
  int degree() const;
  std::map<int, OCCochain> homogeneous_parts() const;

  std::set<std::pair<int, int>> support() const;
  int max_l() const;
  int max_k() const;
  int max_weight() const;
  OCCochain component(int l, int k) const;
  OCCochain truncated(int max_weight) const;
  OCCochain restricted(const ArityCap& cap) const;

  /// Multilinear evaluation; graded symmetric in the closed slots.
  Vector evaluate(const std::vector<Vector>& closed_inputs,
                  const std::vector<Vector>& open_inputs) const;

  OCCochain& operator+=(const OCCochain& o);
  OCCochain& operator-=(const OCCochain& o);
  OCCochain& operator*=(const Scalar& c);
  friend OCCochain operator+(OCCochain a, const OCCochain& b) { return a += b; }
  friend OCCochain operator-(OCCochain a, const OCCochain& b) { return a -= b; }
  friend OCCochain operator*(const Scalar& c, OCCochain a) { return a *= c; }
  friend OCCochain operator-(OCCochain a) { return a *= Scalar(-1); }
  friend bool operator==(const OCCochain& a, const OCCochain& b);

  OCCochain zero_like() const { return OCCochain(closed_, open_, target_); }
  bool same_spaces(const OCCochain& o) const;

private:
  void require_compatible(const OCCochain& o, const char* op) const;

  SpacePtr closed_, open_, target_;
  std::map<OCKey, Scalar> entries_;
};

OCCochain add(const OCCochain& d, const OCCochain& e);
OCCochain scale(const Scalar& c, const OCCochain& d);

/// Key of a graded symmetric map: canonical word and output basis index.
struct SymKey {
  std::vector<int> closed;
  int out = 0;
  int l() const { return static_cast<int>(closed.size()); }
  friend bool operator==(const SymKey&, const SymKey&) = default;
  friend std::strong_ordering operator<=>(const SymKey& a, const SymKey& b);
};

/// Finitely supported element of C~(B, B'): graded symmetric maps
/// B^{^l} -> B' for l >= 1.
class SymCochain {
public:
  SymCochain(SpacePtr source, SpacePtr target);

  const SpacePtr& source_space() const { return source_; }
  const SpacePtr& target_space() const { return target_; }

  void add(std::span<const int> closed, int out, const Scalar& c);
  void add(const std::vector<std::string>& closed, const std::string& out, const Scalar& c);
  void add_canonical(const SymKey& key, const Scalar& c);

  Scalar coefficient(const SymKey& key) const;
  const std::map<SymKey, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  int entry_degree(const SymKey& key) const;
  std::set<int> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  int degree() const;
  std::map<int, SymCochain> homogeneous_parts() const;
  int max_l() const;
  SymCochain component(int l) const;
  SymCochain restricted(int max_l) const;

  Vector evaluate(const std::vector<Vector>& inputs) const;

  SymCochain& operator+=(const SymCochain& o);
  SymCochain& operator-=(const SymCochain& o);
  SymCochain& operator*=(const Scalar& c);
  friend SymCochain operator+(SymCochain a, const SymCochain& b) { return a += b; }
  friend SymCochain operator-(SymCochain a, const SymCochain& b) { return a -= b; }
  friend SymCochain operator*(const Scalar& c, SymCochain a) { return a *= c; }
  friend bool operator==(const SymCochain& a, const SymCochain& b);

  SymCochain zero_like() const { return SymCochain(source_, target_); }

private:
  void require_compatible(const SymCochain& o, const char* op) const;

  SpacePtr source_, target_;
  std::map<SymKey, Scalar> entries_;
};

/// The arity-1 identity map of a space.
SymCochain identity_map(const SpacePtr& space);

/// The zero-dimensional space, used as the closed space of open-only data.
SpacePtr zero_space(int shift = 2);

/// Places an open-only cochain m (all components at l = 0) into
/// C^{*,*}(B; A, A) at components (0, k).
OCCochain embed_a_infinity(const OCCochain& m, const SpacePtr& closed);
/// Inverse of embed_a_infinity: keeps the l = 0 components over the zero space.
OCCochain project_open(const OCCochain& d);

}  // namespace ocha
