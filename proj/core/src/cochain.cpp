#include "ocha/cochain.hpp"

#include "ocha/partitions.hpp"

#include <algorithm>

namespace ocha {

Vector zero_vector(const GradedSpace& space) { return Vector(space.dim()); }

Vector basis_vector(const GradedSpace& space, int index) {
  Vector v(space.dim());
  v.at(index) = Scalar(1);
  return v;
}

void for_each_canonical_word(const GradedSpace& space, int l,
                             const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> w;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(w.size()) == l) {
      visit(w);
      return;
    }
    for (int i = from; i < space.dim(); ++i) {
      w.push_back(i);
      rec((space.shifted_degree(i) & 1) ? i + 1 : i);
      w.pop_back();
    }
  };
  rec(0);
}

void for_each_tuple(int dim, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k > 0 && dim == 0) return;
  std::vector<int> t(k, 0);
  while (true) {
    visit(t);
    int p = k - 1;
    while (p >= 0 && t[p] == dim - 1) t[p--] = 0;
    if (p < 0) return;
    ++t[p];
  }
}

namespace {

// Parity of the Koszul sign of stably sorting `word`.
long long sorting_parity(const GradedSpace& space, std::span<const int> word) {
  long long e = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if ((space.shifted_degree(word[i]) & 1) == 0) continue;
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j] && (space.shifted_degree(word[j]) & 1)) ++e;
  }
  return e;
}

bool has_repeated_odd(const GradedSpace& space, const std::vector<int>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1] && (space.shifted_degree(sorted[i]) & 1)) return true;
  return false;
}

void check_index(const GradedSpace& space, int i) {
  if (i < 0 || i >= space.dim())
    throw AlgebraError("basis index " + std::to_string(i) + " out of range for space '" +
                       space.name() + "'");
}

}  // namespace

std::optional<WedgeWord> normalize_wedge(const GradedSpace& space, std::span<const int> factors) {
  for (int f : factors) check_index(space, f);
  WedgeWord w;
  w.factors.assign(factors.begin(), factors.end());
  w.normalization_sign = Sign::of_parity(sorting_parity(space, factors));
  std::sort(w.factors.begin(), w.factors.end());
  if (has_repeated_odd(space, w.factors)) return std::nullopt;
  return w;
}

std::optional<WedgeWord> normalize_wedge(const GradedSpace& space,
                                         const std::vector<std::string>& labels) {
  std::vector<int> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) idx.push_back(space.index_of(l));
  return normalize_wedge(space, idx);
}

std::optional<MergedWord> merge_words(const GradedSpace& space,
                                      std::span<const std::vector<int>* const> blocks) {
  MergedWord m;
  for (const auto* b : blocks) m.merged.insert(m.merged.end(), b->begin(), b->end());
  m.sign = Sign::of_parity(sorting_parity(space, m.merged));
  std::sort(m.merged.begin(), m.merged.end());
  if (has_repeated_odd(space, m.merged)) return std::nullopt;
  // Multinomial over repeated (necessarily even) factors.
  for (std::size_t i = 0; i < m.merged.size();) {
    std::size_t j = i;
    while (j < m.merged.size() && m.merged[j] == m.merged[i]) ++j;
    if (j - i > 1) {
      long num = static_cast<long>(factorial(static_cast<int>(j - i)));
      long den = 1;
      for (const auto* b : blocks)
        den *= static_cast<long>(factorial(
            static_cast<int>(std::count(b->begin(), b->end(), m.merged[i]))));
      m.multiplicity *= num / den;
    }
    i = j;
  }
  return m;
}

std::strong_ordering operator<=>(const OCKey& a, const OCKey& b) {
  if (auto c = a.l() <=> b.l(); c != 0) return c;
  if (auto c = a.k() <=> b.k(); c != 0) return c;
  if (auto c = a.closed <=> b.closed; c != 0) return c;
  if (auto c = a.open <=> b.open; c != 0) return c;
  return a.out <=> b.out;
}

std::strong_ordering operator<=>(const SymKey& a, const SymKey& b) {
  if (auto c = a.l() <=> b.l(); c != 0) return c;
  if (auto c = a.closed <=> b.closed; c != 0) return c;
  return a.out <=> b.out;
}

// ---- OCCochain --------------------------------------------------------------

OCCochain::OCCochain() : OCCochain(zero_space(), zero_space(1), zero_space(1)) {}

OCCochain::OCCochain(SpacePtr closed, SpacePtr open, SpacePtr target)
    : closed_(std::move(closed)), open_(std::move(open)), target_(std::move(target)) {
  if (!closed_ || !open_ || !target_) throw AlgebraError("OCCochain: null space");
}

void OCCochain::add(std::span<const int> closed, std::span<const int> open, int out,
                    const Scalar& c) {
  if (closed.empty() && open.empty())
    throw AlgebraError("component (0,0) is curved and not supported");
  for (int a : open) check_index(*open_, a);
  check_index(*target_, out);
  auto w = normalize_wedge(*closed_, closed);
  if (!w || c.is_zero()) return;
  OCKey key{std::move(w->factors), std::vector<int>(open.begin(), open.end()), out};
  add_canonical(key, w->normalization_sign.negative() ? -c : c);
}

void OCCochain::add(const std::vector<std::string>& closed, const std::vector<std::string>& open,
                    const std::string& out, const Scalar& c) {
  std::vector<int> ci, oi;
  for (const auto& s : closed) ci.push_back(closed_->index_of(s));
  for (const auto& s : open) oi.push_back(open_->index_of(s));
  add(ci, oi, target_->index_of(out), c);
}

void OCCochain::add_canonical(const OCKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  if (key.closed.empty() && key.open.empty())
    throw AlgebraError("component (0,0) is curved and not supported");
  auto [it, inserted] = entries_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Scalar OCCochain::coefficient(const OCKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Scalar(0) : it->second;
}

int OCCochain::entry_degree(const OCKey& key) const {
  int d = target_->shifted_degree(key.out);
  for (int b : key.closed) d -= closed_->shifted_degree(b);
  for (int a : key.open) d -= open_->shifted_degree(a);
  return d;
}

std::set<int> OCCochain::degrees() const {
  std::set<int> s;
  for (const auto& [k, v] : entries_) s.insert(entry_degree(k));
  return s;
}

int OCCochain::degree() const {
  auto s = degrees();
  if (s.size() != 1)
    throw AlgebraError(s.empty() ? "degree of the zero cochain is undefined"
                                 : "cochain is not homogeneous");
  return *s.begin();
}

std::map<int, OCCochain> OCCochain::homogeneous_parts() const {
  std::map<int, OCCochain> parts;
  for (const auto& [k, v] : entries_) {
    auto it = parts.try_emplace(entry_degree(k), zero_like()).first;
    it->second.entries_.emplace(k, v);
  }
  return parts;
}

std::set<std::pair<int, int>> OCCochain::support() const {
  std::set<std::pair<int, int>> s;
  for (const auto& [k, v] : entries_) s.emplace(k.l(), k.k());
  return s;
}

int OCCochain::max_l() const {
  int m = 0;
  for (const auto& [k, v] : entries_) m = std::max(m, k.l());
  return m;
}

int OCCochain::max_k() const {
  int m = 0;
  for (const auto& [k, v] : entries_) m = std::max(m, k.k());
  return m;
}

int OCCochain::max_weight() const {
  int m = 0;
  for (const auto& [k, v] : entries_) m = std::max(m, k.weight());
  return m;
}

OCCochain OCCochain::component(int l, int k) const {
  OCCochain r = zero_like();
  for (const auto& [key, v] : entries_)
    if (key.l() == l && key.k() == k) r.entries_.emplace(key, v);
  return r;
}

OCCochain OCCochain::truncated(int max_weight) const {
  OCCochain r = zero_like();
  for (const auto& [key, v] : entries_)
    if (key.weight() <= max_weight) r.entries_.emplace(key, v);
  return r;
}

OCCochain OCCochain::restricted(const ArityCap& cap) const {
  OCCochain r = zero_like();
  for (const auto& [key, v] : entries_)
    if (cap.admits(key.l(), key.k())) r.entries_.emplace(key, v);
  return r;
}

Vector OCCochain::evaluate(const std::vector<Vector>& closed_inputs,
                           const std::vector<Vector>& open_inputs) const {
  for (const auto& v : closed_inputs)
    if (static_cast<int>(v.size()) != closed_->dim())
      throw AlgebraError("evaluate: closed input is not a vector of '" + closed_->name() + "'");
  for (const auto& v : open_inputs)
    if (static_cast<int>(v.size()) != open_->dim())
      throw AlgebraError("evaluate: open input is not a vector of '" + open_->name() + "'");
  Vector result = zero_vector(*target_);
  const std::size_t l = closed_inputs.size(), k = open_inputs.size();
  if (l == 0 && k == 0) return result;
  std::vector<int> ci(l, 0), oi(k, 0);
  // Odometer over basis choices with nonzero coordinates.
  auto next_nonzero = [](const Vector& v, int from) {
    for (int i = from; i < static_cast<int>(v.size()); ++i)
      if (!v[i].is_zero()) return i;
    return static_cast<int>(v.size());
  };
  std::vector<const Vector*> slots;
  for (const auto& v : closed_inputs) slots.push_back(&v);
  for (const auto& v : open_inputs) slots.push_back(&v);
  std::vector<int> choice(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    choice[s] = next_nonzero(*slots[s], 0);
    if (choice[s] == static_cast<int>(slots[s]->size())) return result;
  }
  while (true) {
    Scalar coef(1);
    for (std::size_t s = 0; s < slots.size(); ++s) coef *= (*slots[s])[choice[s]];
    std::copy(choice.begin(), choice.begin() + l, ci.begin());
    std::copy(choice.begin() + l, choice.end(), oi.begin());
    if (auto w = normalize_wedge(*closed_, ci)) {
      OCKey probe{w->factors, oi, -1};
      for (auto it = entries_.lower_bound(probe);
           it != entries_.end() && it->first.closed == probe.closed && it->first.open == oi;
           ++it) {
        Scalar term = coef * it->second;
        if (w->normalization_sign.negative()) term = -term;
        result[it->first.out] += term;
      }
    }
    std::size_t pos = slots.size();
    while (pos > 0) {
      --pos;
      int nxt = next_nonzero(*slots[pos], choice[pos] + 1);
      if (nxt < static_cast<int>(slots[pos]->size())) {
        choice[pos] = nxt;
        for (std::size_t q = pos + 1; q < slots.size(); ++q) choice[q] = next_nonzero(*slots[q], 0);
        break;
      }
      if (pos == 0) return result;
    }
  }
}

bool OCCochain::same_spaces(const OCCochain& o) const {
  return same_space(closed_, o.closed_) && same_space(open_, o.open_) &&
         same_space(target_, o.target_);
}

void OCCochain::require_compatible(const OCCochain& o, const char* op) const {
  if (!same_spaces(o)) throw AlgebraError(std::string(op) + ": space mismatch");
}

OCCochain& OCCochain::operator+=(const OCCochain& o) {
  require_compatible(o, "add");
  for (const auto& [k, v] : o.entries_) add_canonical(k, v);
  return *this;
}

OCCochain& OCCochain::operator-=(const OCCochain& o) {
  require_compatible(o, "subtract");
  for (const auto& [k, v] : o.entries_) add_canonical(k, -v);
  return *this;
}

OCCochain& OCCochain::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

bool operator==(const OCCochain& a, const OCCochain& b) {
  return a.same_spaces(b) && a.entries_ == b.entries_;
}

OCCochain add(const OCCochain& d, const OCCochain& e) { return d + e; }
OCCochain scale(const Scalar& c, const OCCochain& d) { return c * d; }

// ---- SymCochain -------------------------------------------------------------

SymCochain::SymCochain(SpacePtr source, SpacePtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_) throw AlgebraError("SymCochain: null space");
}

void SymCochain::add(std::span<const int> closed, int out, const Scalar& c) {
  if (closed.empty()) throw AlgebraError("graded symmetric maps need arity >= 1");
  check_index(*target_, out);
  auto w = normalize_wedge(*source_, closed);
  if (!w || c.is_zero()) return;
  add_canonical(SymKey{std::move(w->factors), out}, w->normalization_sign.negative() ? -c : c);
}

void SymCochain::add(const std::vector<std::string>& closed, const std::string& out,
                     const Scalar& c) {
  std::vector<int> ci;
  for (const auto& s : closed) ci.push_back(source_->index_of(s));
  add(ci, target_->index_of(out), c);
}

void SymCochain::add_canonical(const SymKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  if (key.closed.empty()) throw AlgebraError("graded symmetric maps need arity >= 1");
  auto [it, inserted] = entries_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Scalar SymCochain::coefficient(const SymKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Scalar(0) : it->second;
}

int SymCochain::entry_degree(const SymKey& key) const {
  int d = target_->shifted_degree(key.out);
  for (int b : key.closed) d -= source_->shifted_degree(b);
  return d;
}

std::set<int> SymCochain::degrees() const {
  std::set<int> s;
  for (const auto& [k, v] : entries_) s.insert(entry_degree(k));
  return s;
}

int SymCochain::degree() const {
  auto s = degrees();
  if (s.size() != 1)
    throw AlgebraError(s.empty() ? "degree of the zero cochain is undefined"
                                 : "cochain is not homogeneous");
  return *s.begin();
}

std::map<int, SymCochain> SymCochain::homogeneous_parts() const {
  std::map<int, SymCochain> parts;
  for (const auto& [k, v] : entries_) {
    auto it = parts.try_emplace(entry_degree(k), zero_like()).first;
    it->second.entries_.emplace(k, v);
  }
  return parts;
}

int SymCochain::max_l() const {
  int m = 0;
  for (const auto& [k, v] : entries_) m = std::max(m, k.l());
  return m;
}

SymCochain SymCochain::component(int l) const {
  SymCochain r = zero_like();
  for (const auto& [k, v] : entries_)
    if (k.l() == l) r.entries_.emplace(k, v);
  return r;
}

SymCochain SymCochain::restricted(int max_l) const {
  SymCochain r = zero_like();
  for (const auto& [k, v] : entries_)
    if (k.l() <= max_l) r.entries_.emplace(k, v);
  return r;
}

Vector SymCochain::evaluate(const std::vector<Vector>& inputs) const {
  OCCochain as_oc(source_, zero_space(), target_);
  for (const auto& [k, v] : entries_) as_oc.add_canonical(OCKey{k.closed, {}, k.out}, v);
  return as_oc.evaluate(inputs, {});
}

void SymCochain::require_compatible(const SymCochain& o, const char* op) const {
  if (!same_space(source_, o.source_) || !same_space(target_, o.target_))
    throw AlgebraError(std::string(op) + ": space mismatch");
}

SymCochain& SymCochain::operator+=(const SymCochain& o) {
  require_compatible(o, "add");
  for (const auto& [k, v] : o.entries_) add_canonical(k, v);
  return *this;
}

SymCochain& SymCochain::operator-=(const SymCochain& o) {
  require_compatible(o, "subtract");
  for (const auto& [k, v] : o.entries_) add_canonical(k, -v);
  return *this;
}

SymCochain& SymCochain::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

bool operator==(const SymCochain& a, const SymCochain& b) {
  return same_space(a.source_, b.source_) && same_space(a.target_, b.target_) &&
         a.entries_ == b.entries_;
}

SymCochain identity_map(const SpacePtr& space) {
  SymCochain id(space, space);
  for (int i = 0; i < space->dim(); ++i) id.add_canonical(SymKey{{i}, i}, Scalar(1));
  return id;
}

SpacePtr zero_space(int shift) {
  return make_space("0", {}, shift);
}

OCCochain embed_a_infinity(const OCCochain& m, const SpacePtr& closed) {
  OCCochain r(closed, m.open_space(), m.target_space());
  for (const auto& [k, v] : m.entries()) {
    if (k.l() != 0)
      throw AlgebraError("embed_a_infinity: input has closed-string components");
    r.add_canonical(k, v);
  }
  return r;
}

OCCochain project_open(const OCCochain& d) {
  OCCochain r(zero_space(d.closed_space()->shift()), d.open_space(), d.target_space());
  for (const auto& [k, v] : d.entries())
    if (k.l() == 0) r.add_canonical(k, v);
  return r;
}

}  // namespace ocha
