#include "ocha/linalg.hpp"

#include "ocha/graded.hpp"

#include <algorithm>

namespace ocha {

std::vector<Scalar> Matrix::row(int r) const {
  return std::vector<Scalar>(data_.begin() + std::ptrdiff_t(r) * cols_,
                             data_.begin() + std::ptrdiff_t(r + 1) * cols_);
}

std::vector<Scalar> Matrix::column(int c) const {
  std::vector<Scalar> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw AlgebraError("matrix product: dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

namespace {

using IntRow = std::vector<mpz_class>;

IntRow to_primitive(const std::vector<Scalar>& v) {
  mpz_class den = 1;
  for (const auto& s : v)
    if (!s.is_zero()) den = lcm(den, s.denominator());
  IntRow r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = v[i].numerator() * (den / v[i].denominator());
  return r;
}

void make_primitive(IntRow& r) {
  mpz_class g = 0;
  for (const auto& x : r)
    if (x != 0) {
      g = gcd(g, x);
      if (g == 1) return;
    }
  if (g > 1)
    for (auto& x : r)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

bool is_zero_row(const IntRow& r) {
  return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return x == 0; });
}

// target := p * target - t * pivot_row, where p is the pivot entry and t the
// target's entry in the pivot column; then divided by the row gcd.
void eliminate(IntRow& target, const IntRow& pivot_row, int col) {
  if (target[col] == 0) return;
  const mpz_class p = pivot_row[col];
  const mpz_class t = target[col];
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (pivot_row[j] == 0) {
      if (target[j] != 0) target[j] *= p;
    } else {
      target[j] = p * target[j] - t * pivot_row[j];
    }
  }
  make_primitive(target);
}

}  // namespace

Echelon row_reduce(const std::vector<std::vector<Scalar>>& rows, int cols) {
  std::vector<IntRow> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw AlgebraError("row_reduce: ragged rows");
    IntRow ir = to_primitive(r);
    if (!is_zero_row(ir)) {
      make_primitive(ir);
      work.push_back(std::move(ir));
    }
  }
  std::vector<IntRow> done;
  std::vector<int> pivots;
  for (int c = 0; c < cols && !work.empty(); ++c) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(work.size()); ++i) {
      if (work[i][c] == 0) continue;
      if (best < 0 || mpz_cmpabs(work[i][c].get_mpz_t(), work[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best < 0) continue;
    IntRow piv = std::move(work[best]);
    work.erase(work.begin() + best);
    for (auto& r : work) eliminate(r, piv, c);
    std::erase_if(work, is_zero_row);
    for (auto& r : done) eliminate(r, piv, c);
    if (piv[c] < 0)
      for (auto& x : piv) x = -x;
    done.push_back(std::move(piv));
    pivots.push_back(c);
  }
  Echelon e;
  e.cols = cols;
  e.pivots = pivots;
  e.rows.reserve(done.size());
  for (std::size_t i = 0; i < done.size(); ++i) {
    const mpz_class& p = done[i][pivots[i]];
    std::vector<Scalar> r(cols);
    for (int j = 0; j < cols; ++j)
      if (done[i][j] != 0) r[j] = Scalar(mpq_class(done[i][j], p));
    e.rows.push_back(std::move(r));
  }
  return e;
}

int rank(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return row_reduce(rows, m.cols()).rank();
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  Echelon e = row_reduce(rows, m.cols());
  std::vector<char> is_pivot(m.cols(), 0);
  for (int p : e.pivots) is_pivot[p] = 1;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      if (!e.rows[i][f].is_zero()) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw AlgebraError("solve: dimension mismatch");
  // Row-reduce the augmented matrix [m | b].
  std::vector<std::vector<Scalar>> rows;
  for (int r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  Echelon e = row_reduce(rows, m.cols() + 1);
  std::vector<Scalar> x(m.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][m.cols()];
  }
  return x;
}

std::vector<Scalar> reduce_against(const Echelon& e, std::vector<Scalar> v) {
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const Scalar t = v[e.pivots[i]];
    if (t.is_zero()) continue;
    for (int j = 0; j < e.cols; ++j)
      if (!e.rows[i][j].is_zero()) v[j] -= t * e.rows[i][j];
  }
  return v;
}

}  // namespace ocha
