#include "ocha/graded.hpp"

#include "ocha/partitions.hpp"

#include <numeric>

namespace ocha {

GradedSpace::GradedSpace(std::string name, std::vector<BasisElement> basis, int shift)
    : name_(std::move(name)), basis_(std::move(basis)), shift_(shift) {
  shifted_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    if (b.label.empty()) throw AlgebraError("space '" + name_ + "': empty basis label");
    if (!index_.emplace(b.label, static_cast<int>(i)).second)
      throw AlgebraError("space '" + name_ + "': duplicate basis label '" + b.label + "'");
    shifted_.push_back(b.degree - shift_);
  }
}

int GradedSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw AlgebraError("space '" + name_ + "': unknown basis label '" + label + "'");
  return it->second;
}

bool operator==(const GradedSpace& a, const GradedSpace& b) {
  if (a.name_ != b.name_ || a.shift_ != b.shift_ || a.basis_.size() != b.basis_.size())
    return false;
  for (std::size_t i = 0; i < a.basis_.size(); ++i)
    if (a.basis_[i].label != b.basis_[i].label || a.basis_[i].degree != b.basis_[i].degree)
      return false;
  return true;
}

SpacePtr make_space(std::string name, std::vector<BasisElement> basis, int shift) {
  return std::make_shared<const GradedSpace>(std::move(name), std::move(basis), shift);
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Sign koszul_sign(std::span<const int> shifted_degrees, std::span<const int> perm) {
  const std::size_t n = perm.size();
  if (shifted_degrees.size() != n)
    throw AlgebraError("koszul_sign: permutation and degree list differ in length");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[p])
      throw AlgebraError("koszul_sign: not a permutation");
    seen[p] = 1;
  }
  long long exponent = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[i] > perm[j])
        exponent += static_cast<long long>(shifted_degrees[i] & 1) * (shifted_degrees[j] & 1);
  return Sign::of_parity(exponent);
}

int shifted_map_degree(int l, int k, int raw_degree, int shift_closed, int shift_open,
                       int shift_target) {
  if (l < 0 || k < 0 || (l == 0 && k == 0))
    throw AlgebraError("shifted_map_degree: forbidden arity (" + std::to_string(l) + "," +
                       std::to_string(k) + ")");
  return raw_degree + l * shift_closed + k * shift_open - shift_target;
}

int shifted_sym_degree(int l, int raw_degree, int shift_source, int shift_target) {
  if (l < 1) throw AlgebraError("shifted_sym_degree: arity must be at least 1");
  return raw_degree + l * shift_source - shift_target;
}

// ---- partitions -------------------------------------------------------------

void for_each_partition(int n, int r, const std::function<void(const OrderedPartition&)>& visit) {
  if (n < 0 || r < 1) return;
  std::vector<int> assign(n, 0);
  OrderedPartition p;
  p.ground = n;
  while (true) {
    p.blocks.assign(r, {});
    for (int i = 0; i < n; ++i) p.blocks[assign[i]].push_back(i + 1);
    visit(p);
    int pos = n - 1;
    while (pos >= 0 && assign[pos] == r - 1) assign[pos--] = 0;
    if (pos < 0) break;
    ++assign[pos];
  }
}

std::vector<OrderedPartition> enumerate_partitions(int n, int r) {
  std::vector<OrderedPartition> out;
  for_each_partition(n, r, [&](const OrderedPartition& p) { out.push_back(p); });
  return out;
}

void for_each_dotted_partition(int n, int r,
                               const std::function<void(const DottedPartition&)>& visit) {
  if (n < 0 || r < 1) return;
  // Cut points 0 <= c_1 <= ... <= c_{r-1} <= n.
  std::vector<int> cuts(r - 1, 0);
  DottedPartition p;
  p.ground = n;
  while (true) {
    p.blocks.assign(r, {});
    int start = 1;
    for (int b = 0; b < r; ++b) {
      const int end = b < r - 1 ? cuts[b] : n;
      for (int x = start; x <= end; ++x) p.blocks[b].push_back(x);
      start = end + 1;
    }
    visit(p);
    int pos = r - 2;
    while (pos >= 0 && cuts[pos] == n) --pos;
    if (pos < 0) break;
    ++cuts[pos];
    for (int q = pos + 1; q < r - 1; ++q) cuts[q] = cuts[pos];
  }
}

std::vector<DottedPartition> enumerate_dotted_partitions(int n, int r) {
  std::vector<DottedPartition> out;
  for_each_dotted_partition(n, r, [&](const DottedPartition& p) { out.push_back(p); });
  return out;
}

namespace {
void set_partitions_rec(int next, int n, OrderedPartition& p,
                        const std::function<void(const OrderedPartition&)>& visit) {
  if (next > n) {
    visit(p);
    return;
  }
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    p.blocks[b].push_back(next);
    set_partitions_rec(next + 1, n, p, visit);
    p.blocks[b].pop_back();
  }
  p.blocks.push_back({next});
  set_partitions_rec(next + 1, n, p, visit);
  p.blocks.pop_back();
}
}  // namespace

void for_each_set_partition(int n, const std::function<void(const OrderedPartition&)>& visit) {
  if (n < 1) return;
  OrderedPartition p;
  p.ground = n;
  set_partitions_rec(1, n, p, visit);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace ocha
