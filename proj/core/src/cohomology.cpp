#include "ocha/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ocha {

namespace {

Scalar parity_sign(long long e) { return (e & 1) ? Scalar(-1) : Scalar(1); }

void require_in_window(const TruncatedComplex& c, const OCCochain& d, const char* what) {
  if (!d.is_zero() && d.max_weight() > c.weight_cap())
    throw WeightOverflow(std::string(what) + " has components of weight " +
                         std::to_string(d.max_weight()) + " > " + std::to_string(c.weight_cap()));
}

}  // namespace

bool CohomologyClass::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

int TruncatedComplex::index_of(const OCKey& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> TruncatedComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [d, v] : by_degree_) out.push_back(d);
  return out;
}

const std::vector<int>& TruncatedComplex::cells_in_degree(int degree) const {
  static const std::vector<int> empty;
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? empty : it->second;
}

Matrix TruncatedComplex::block(int degree) const {
  const auto& src = cells_in_degree(degree);
  const auto& dst = cells_in_degree(degree + 1);
  std::map<int, int> row_of;
  for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = static_cast<int>(r);
  Matrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c)
    for (const auto& [i, v] : columns_[src[c]]) m.at(row_of.at(i), static_cast<int>(c)) = v;
  return m;
}

Matrix TruncatedComplex::full_matrix() const {
  const int n = static_cast<int>(cells_.size());
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (const auto& [i, v] : columns_[j]) m.at(i, j) = v;
  return m;
}

std::size_t TruncatedComplex::weight_violations() const {
  std::size_t bad = 0;
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, v] : columns_[j])
      if (cells_[i].weight < cells_[j].weight) ++bad;
  return bad;
}

std::vector<int> TruncatedComplex::square_defects() const {
  std::vector<int> bad;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    std::map<int, Scalar> acc;
    for (const auto& [i, v] : columns_[j])
      for (const auto& [r, w] : columns_[i]) acc[r] += v * w;
    for (const auto& [r, s] : acc)
      if (!s.is_zero()) {
        bad.push_back(static_cast<int>(j));
        break;
      }
  }
  return bad;
}

bool TruncatedComplex::squares_to_zero() const { return square_defects().empty(); }

std::vector<Scalar> TruncatedComplex::coordinates(const OCCochain& d) const {
  require_in_window(*this, d, "cochain");
  std::vector<Scalar> v(cells_.size());
  for (const auto& [k, c] : d.entries()) {
    const int i = index_of(k);
    if (i < 0) throw AlgebraError("coordinates: cochain is not over the complex's spaces");
    v[i] = c;
  }
  return v;
}

OCCochain TruncatedComplex::cochain(const std::vector<Scalar>& coords) const {
  OCCochain d = ocha_->q().zero_like();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) d.add_canonical(cells_[i].key, coords[i]);
  return d;
}

OCCochain TruncatedComplex::truncated_delta(const OCCochain& d) const {
  return hochschild_differential(*ocha_, d, mutation_).truncated(cap_);
}

TruncatedComplex assemble_complex(const OchaStructure& s, int max_weight,
                                  const AssembleOptions& options) {
  if (max_weight < 1) throw AlgebraError("assemble_complex: weight cap must be at least 1");
  TruncatedComplex c;
  c.ocha_ = std::make_shared<const OchaStructure>(s);
  c.cap_ = max_weight;
  c.mutation_ = options.mutation;
  const GradedSpace& b = *s.closed_space();
  const GradedSpace& a = *s.open_space();

  for (int l = 0; 2 * l <= max_weight; ++l) {
    if (l > 0 && b.dim() == 0) break;
    for (int k = 0; 2 * l + k <= max_weight; ++k) {
      if (l == 0 && k == 0) continue;
      for_each_canonical_word(b, l, [&](const std::vector<int>& w) {
        for_each_tuple(a.dim(), k, [&](const std::vector<int>& t) {
          for (int out = 0; out < a.dim(); ++out) {
            if (c.cells_.size() >= options.max_cells)
              throw ResourceError("assemble_complex: more than " +
                                  std::to_string(options.max_cells) + " cells");
            Cell cell{OCKey{w, t, out}, 0, 2 * l + k};
            int deg = a.shifted_degree(out);
            for (int x : w) deg -= b.shifted_degree(x);
            for (int x : t) deg -= a.shifted_degree(x);
            cell.degree = deg;
            c.cells_.push_back(std::move(cell));
          }
        });
      });
    }
  }
  std::stable_sort(c.cells_.begin(), c.cells_.end(), [&](const Cell& x, const Cell& y) {
    if (x.weight != y.weight)
      return options.reverse_order ? x.weight > y.weight : x.weight < y.weight;
    return x.key < y.key;
  });
  for (std::size_t i = 0; i < c.cells_.size(); ++i) {
    c.index_[c.cells_[i].key] = static_cast<int>(i);
    c.by_degree_[c.cells_[i].degree].push_back(static_cast<int>(i));
  }
  c.columns_.resize(c.cells_.size());
  for (std::size_t j = 0; j < c.cells_.size(); ++j) {
    OCCochain dual = s.q().zero_like();
    dual.add_canonical(c.cells_[j].key, Scalar(1));
    OCCochain image = c.truncated_delta(dual);
    for (const auto& [k, v] : image.entries()) c.columns_[j][c.index_.at(k)] = v;
  }
  return c;
}

// ---- cohomology ---------------------------------------------------------------

Cohomology::Cohomology(const TruncatedComplex& c)
    : complex_(std::make_shared<const TruncatedComplex>(c)) {
  for (int deg : c.degrees()) {
    DegreeCohomology dc;
    dc.degree = deg;
    const auto& cells = c.cells_in_degree(deg);
    const int n = static_cast<int>(cells.size());
    dc.cells = n;
    Matrix out = c.block(deg);
    Matrix in = c.block(deg - 1);
    auto kernel = kernel_basis(out);
    dc.cycles = static_cast<int>(kernel.size());
    dc.rank_out = n - dc.cycles;

    std::vector<std::vector<Scalar>> span_rows;
    for (int j = 0; j < in.cols(); ++j) span_rows.push_back(in.column(j));
    Echelon e = row_reduce(span_rows, n);
    dc.boundaries = e.rank();

    std::vector<std::vector<Scalar>> reps;
    for (auto& v : kernel) {
      auto rem = reduce_against(e, v);
      if (std::all_of(rem.begin(), rem.end(), [](const Scalar& s) { return s.is_zero(); }))
        continue;
      span_rows.push_back(v);
      e = row_reduce(span_rows, n);
      reps.push_back(std::move(v));
    }
    // Solve system: columns = reps followed by boundary generators.
    Matrix sys(n, static_cast<int>(reps.size()) + in.cols());
    for (std::size_t r = 0; r < reps.size(); ++r)
      for (int i = 0; i < n; ++i) sys.at(i, static_cast<int>(r)) = reps[r][i];
    for (int j = 0; j < in.cols(); ++j)
      for (int i = 0; i < n; ++i) sys.at(i, static_cast<int>(reps.size()) + j) = in.at(i, j);
    solve_systems_.emplace(deg, std::move(sys));

    for (std::size_t r = 0; r < reps.size(); ++r) {
      std::vector<Scalar> global(c.size());
      for (int i = 0; i < n; ++i) global[cells[i]] = reps[r][i];
      CohomologyClass cls;
      cls.degree = deg;
      cls.id = static_cast<int>(r);
      cls.coordinates.assign(reps.size(), Scalar(0));
      cls.coordinates[r] = Scalar(1);
      cls.representative = c.cochain(global);
      dc.classes.push_back(std::move(cls));
    }
    degrees_.emplace(deg, std::move(dc));
  }
}

int Cohomology::dimension(int degree) const {
  auto it = degrees_.find(degree);
  return it == degrees_.end() ? 0 : it->second.dimension();
}

std::vector<CohomologyClass> Cohomology::classes() const {
  std::vector<CohomologyClass> out;
  for (const auto& [d, dc] : degrees_)
    for (const auto& c : dc.classes) out.push_back(c);
  return out;
}

bool Cohomology::is_cycle(const OCCochain& d) const {
  require_in_window(*complex_, d, "cochain");
  return complex_->truncated_delta(d).is_zero();
}

std::vector<Scalar> Cohomology::local_coordinates(const OCCochain& d, int degree) const {
  auto global = complex_->coordinates(d);
  const auto& cells = complex_->cells_in_degree(degree);
  std::vector<Scalar> local(cells.size());
  std::vector<char> in_degree(global.size(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    local[i] = global[cells[i]];
    in_degree[cells[i]] = 1;
  }
  for (std::size_t i = 0; i < global.size(); ++i)
    if (!in_degree[i] && !global[i].is_zero())
      throw AlgebraError("cochain is not homogeneous of degree " + std::to_string(degree));
  return local;
}

std::vector<Scalar> Cohomology::class_coordinates(const OCCochain& cycle, int degree) const {
  const int dim = dimension(degree);
  if (cycle.is_zero()) return std::vector<Scalar>(dim);
  auto local = local_coordinates(cycle, degree);
  if (!is_cycle(cycle)) throw AlgebraError("class_coordinates: not a cycle");
  auto x = solve(solve_systems_.at(degree), local);
  if (!x) throw AlgebraError("class_coordinates: cycle outside the computed span");
  return std::vector<Scalar>(x->begin(), x->begin() + dim);
}

bool Cohomology::is_exact(const OCCochain& cycle) const {
  if (cycle.is_zero()) return true;
  if (!cycle.is_homogeneous()) throw AlgebraError("is_exact: inhomogeneous cochain");
  auto coords = class_coordinates(cycle, cycle.degree());
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); });
}

CohomologyClass Cohomology::reduce(const OCCochain& cycle, int degree) const {
  CohomologyClass c;
  c.degree = degree;
  c.coordinates = class_coordinates(cycle, degree);
  c.representative = complex_->structure().q().zero_like();
  int nonzero = 0;
  auto it = degrees_.find(degree);
  for (std::size_t i = 0; i < c.coordinates.size(); ++i) {
    if (c.coordinates[i].is_zero()) continue;
    ++nonzero;
    if (c.coordinates[i] == Scalar(1)) c.id = static_cast<int>(i);
    c.representative += c.coordinates[i] * it->second.classes[i].representative;
  }
  if (nonzero != 1) c.id = -1;
  return c;
}

OCCochain checked_bracket(const Cohomology& h, const OCCochain& a, const OCCochain& b) {
  OCCochain r = gerstenhaber_bracket(a, b);
  require_in_window(h.complex(), r, "bracket");
  return r;
}

OCCochain checked_cup(const Cohomology& h, const OCCochain& a, const OCCochain& b) {
  OCCochain r = cup(h.complex().structure(), a, b);
  require_in_window(h.complex(), r, "cup product");
  return r;
}

CohomologyClass induced_bracket(const Cohomology& h, const CohomologyClass& c1,
                                const CohomologyClass& c2) {
  return h.reduce(checked_bracket(h, c1.representative, c2.representative),
                  c1.degree + c2.degree);
}

CohomologyClass induced_cup(const Cohomology& h, const CohomologyClass& c1,
                            const CohomologyClass& c2) {
  return h.reduce(checked_cup(h, c1.representative, c2.representative),
                  c1.degree + c2.degree + 1);
}

// ---- Gerstenhaber axioms ----------------------------------------------------

bool GerstenhaberReport::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomTally& t) { return t.failed == 0; });
}

std::string GerstenhaberReport::summary() const {
  std::ostringstream os;
  for (const auto& t : axioms) {
    os << t.axiom << ": " << (t.failed ? "FAIL" : "pass") << " (passed " << t.passed
       << ", failed " << t.failed << ", skipped " << t.skipped << ")\n";
    for (const auto& w : t.witnesses) os << "  " << w << "\n";
  }
  return os.str();
}

GerstenhaberReport verify_gerstenhaber(const Cohomology& h,
                                       const std::vector<CohomologyClass>& sample) {
  const std::vector<CohomologyClass> cls = sample.empty() ? h.classes() : sample;
  const std::size_t n = cls.size();
  GerstenhaberReport rep;
  rep.axioms.reserve(7);  // tallies are held by reference below
  auto tally = [&](const char* name) -> AxiomTally& {
    rep.axioms.push_back(AxiomTally{name, 0, 0, 0, {}});
    return rep.axioms.back();
  };
  auto name_of = [](const CohomologyClass& c) {
    return "H" + std::to_string(c.degree) + "#" + std::to_string(c.id);
  };
  // Runs one check; `body` returns the cochain that must be exact.
  auto run = [&](AxiomTally& t, const std::string& where, const std::function<OCCochain()>& body) {
    try {
      OCCochain z = body();
      bool ok = z.is_zero() || (h.is_cycle(z) && h.is_exact(z));
      if (ok) {
        ++t.passed;
      } else {
        ++t.failed;
        if (t.witnesses.size() < 5) t.witnesses.push_back(where);
      }
    } catch (const WeightOverflow&) {
      ++t.skipped;
    } catch (const AlgebraError& e) {
      ++t.failed;
      if (t.witnesses.size() < 5) t.witnesses.push_back(where + ": " + e.what());
    }
  };
  auto br = [&](const OCCochain& a, const OCCochain& b) { return checked_bracket(h, a, b); };
  auto cp = [&](const OCCochain& a, const OCCochain& b) { return checked_cup(h, a, b); };

  // Everything below presupposes a complex; a defect here means delta is broken.
  AxiomTally& diff = tally("differential");
  const auto defects = h.complex().square_defects();
  diff.passed = h.complex().size() - defects.size();
  diff.failed = defects.size();
  for (std::size_t i = 0; i < defects.size() && i < 5; ++i)
    diff.witnesses.push_back("delta^2 nonzero on cell " + std::to_string(defects[i]));

  AxiomTally& closure = tally("closure");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto where = name_of(cls[i]) + "," + name_of(cls[j]);
      for (int op = 0; op < 2; ++op) {
        try {
          OCCochain z = op == 0 ? br(cls[i].representative, cls[j].representative)
                                : cp(cls[i].representative, cls[j].representative);
          if (h.is_cycle(z)) {
            ++closure.passed;
          } else {
            ++closure.failed;
            if (closure.witnesses.size() < 5)
              closure.witnesses.push_back((op == 0 ? "bracket " : "cup ") + where);
          }
        } catch (const WeightOverflow&) {
          ++closure.skipped;
        } catch (const AlgebraError& e) {
          ++closure.failed;
          if (closure.witnesses.size() < 5) closure.witnesses.push_back(where + ": " + e.what());
        }
      }
    }

  AxiomTally& anti = tally("antisymmetry");
  AxiomTally& comm = tally("cup-commutativity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = cls[i];
      const auto& b = cls[j];
      const auto where = name_of(a) + "," + name_of(b);
      run(anti, where, [&] {
        return br(a.representative, b.representative) +
               parity_sign(static_cast<long long>(a.degree) * b.degree) *
                   br(b.representative, a.representative);
      });
      run(comm, where, [&] {
        return cp(a.representative, b.representative) -
               parity_sign(static_cast<long long>(a.degree + 1) * (b.degree + 1)) *
                   cp(b.representative, a.representative);
      });
    }

  AxiomTally& jac = tally("jacobi");
  AxiomTally& assoc = tally("cup-associativity");
  AxiomTally& leib = tally("leibniz");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& x = cls[i].representative;
        const auto& y = cls[j].representative;
        const auto& z = cls[k].representative;
        const long long dx = cls[i].degree, dy = cls[j].degree;
        const auto where = name_of(cls[i]) + "," + name_of(cls[j]) + "," + name_of(cls[k]);
        run(jac, where, [&] {
          return br(x, br(y, z)) - br(br(x, y), z) - parity_sign(dx * dy) * br(y, br(x, z));
        });
        run(assoc, where, [&] { return cp(cp(x, y), z) - cp(x, cp(y, z)); });
        run(leib, where, [&] {
          return br(x, cp(y, z)) - cp(br(x, y), z) - parity_sign(dx * (dy + 1)) * cp(y, br(x, z));
        });
      }
  return rep;
}

}  // namespace ocha
