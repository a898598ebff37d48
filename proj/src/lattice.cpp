#include "gkm/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gkm/errors.hpp"

namespace gkm {

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long x : entries) entries_.emplace_back(x);
}

Weight Weight::zero(std::size_t rank) { return Weight(std::vector<Integer>(rank, 0)); }

Weight Weight::unit(std::size_t rank, std::size_t index) {
  Weight w = zero(rank);
  w[index] = 1;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return x == 0; });
}

bool Weight::is_lex_positive() const {
  for (const Integer& x : entries_) {
    if (x != 0) return x > 0;
  }
  return false;
}

Weight Weight::canonical_sign() const {
  for (const Integer& x : entries_) {
    if (x != 0) return x > 0 ? *this : -*this;
  }
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (Integer& x : w.entries_) x = -x;
  return w;
}

Weight Weight::operator+(const Weight& other) const {
  Weight w = *this;
  for (std::size_t i = 0; i < size(); ++i) w[i] += other[i];
  return w;
}

Weight Weight::operator-(const Weight& other) const {
  Weight w = *this;
  for (std::size_t i = 0; i < size(); ++i) w[i] -= other[i];
  return w;
}

Weight Weight::scaled(const Integer& factor) const {
  Weight w = *this;
  for (Integer& x : w.entries_) x *= factor;
  return w;
}

Integer Weight::dot(const Weight& other) const {
  Integer s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += entries_[i] * other[i];
  return s;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += entries_[i].get_str();
  }
  return s + ")";
}

bool linearly_independent(const Weight& a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] - a[j] * b[i] != 0) return true;
    }
  }
  // All 2x2 minors vanish; a zero vector is dependent on anything.
  return false;
}

bool integer_multiple_of(const Weight& v, const Weight& w, Integer* c) {
  std::size_t k = 0;
  while (k < w.size() && w[k] == 0) ++k;
  if (k == w.size()) return false;
  if (v[k] % w[k] != 0) return false;
  Integer q = v[k] / w[k];
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (v[i] != q * w[i]) return false;
  }
  if (c) *c = q;
  return true;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Weight>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length does not match column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Weight>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

Weight IntMatrix::row(std::size_t i) const {
  return Weight(std::vector<Integer>(data_.begin() + static_cast<long>(i * cols_),
                                     data_.begin() + static_cast<long>((i + 1) * cols_)));
}

Weight IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return Weight(std::move(c));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

Weight IntMatrix::apply(const Weight& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  std::vector<Integer> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return Weight(std::move(out));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << row(i).to_string();
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.data_ < b.data_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += factor * (*this)(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += factor * (*this)(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

// ---------------------------------------------------------------------------
// Bareiss elimination

namespace {

// Returns rank; `sign` tracks row swaps, `last_pivot` the final leading minor.
std::size_t bareiss(IntMatrix m, int* sign, Integer* last_pivot) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  int s = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.swap_rows(p, r);
      s = -s;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  if (sign) *sign = s;
  if (last_pivot) *last_pivot = prev;
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& a) { return bareiss(a, nullptr, nullptr); }

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  int s = 1;
  Integer last;
  std::size_t r = bareiss(a, &s, &last);
  if (r < a.rows()) return 0;
  return s * last;
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n), IntMatrix::identity(n), {}};
  IntMatrix& D = f.D;

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    f.V.swap_cols(i, j);
    f.V_inverse.swap_rows(i, j);
  };
  // col i += q * col j, mirrored on V and its inverse.
  auto add_col = [&](std::size_t i, std::size_t j, const Integer& q) {
    D.add_col_multiple(i, j, q);
    f.V.add_col_multiple(i, j, q);
    f.V_inverse.add_row_multiple(j, i, -q);
  };
  auto add_row = [&](std::size_t i, std::size_t j, const Integer& q) {
    D.add_row_multiple(i, j, q);
    f.U.add_row_multiple(i, j, q);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (bi == m || abs(D(i, j)) < abs(D(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      D.swap_rows(t, bi);
      f.U.swap_rows(t, bi);
      swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain on the trailing block.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      f.U.negate_row(t);
    }
  }
  f.diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) f.diagonal.push_back(D(t, t));
  return f;
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteForm hermite_normal_form(const IntMatrix& a) {
  HermiteForm f{a, IntMatrix::identity(a.rows()), 0};
  IntMatrix& H = f.H;
  const std::size_t m = a.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
    bool has_pivot = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (best == m || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == m) break;
      has_pivot = true;
      H.swap_rows(r, best);
      f.U.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
        H.add_row_multiple(i, r, -q);
        f.U.add_row_multiple(i, r, -q);
        if (H(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      f.U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      H.add_row_multiple(i, r, -q);
      f.U.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  f.rank = r;
  return f;
}

std::vector<Weight> hermite_basis(const std::vector<Weight>& rows, std::size_t cols) {
  if (rows.empty()) return {};
  HermiteForm f = hermite_normal_form(IntMatrix::from_rows(rows, cols));
  std::vector<Weight> basis;
  basis.reserve(f.rank);
  for (std::size_t i = 0; i < f.rank; ++i) basis.push_back(f.H.row(i));
  return basis;
}

bool in_hermite_lattice(const std::vector<Weight>& basis, const Weight& w) {
  Weight rest = w;
  std::size_t col = 0;
  for (const Weight& row : basis) {
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    for (; col < pivot; ++col)
      if (rest[col] != 0) return false;
    if (!mpz_divisible_p(rest[pivot].get_mpz_t(), row[pivot].get_mpz_t())) return false;
    const Integer q = rest[pivot] / row[pivot];
    rest = rest - row.scaled(q);
    col = pivot + 1;
  }
  for (; col < rest.size(); ++col)
    if (rest[col] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// TorusSubgroup

TorusSubgroup::TorusSubgroup(std::size_t rank, std::vector<Weight> rows)
    : rank_(rank), rows_(hermite_basis(rows, rank)) {
  if (!rows_.empty()) {
    SmithForm s = smith_normal_form(IntMatrix::from_rows(rows_, rank_));
    for (const Integer& d : s.diagonal)
      if (d > 1) torsion_.push_back(d);
  }
}

TorusSubgroup TorusSubgroup::full(std::size_t rank) { return TorusSubgroup(rank, {}); }

TorusSubgroup TorusSubgroup::trivial(std::size_t rank) {
  std::vector<Weight> rows;
  for (std::size_t i = 0; i < rank; ++i) rows.push_back(Weight::unit(rank, i));
  return TorusSubgroup(rank, std::move(rows));
}

TorusSubgroup TorusSubgroup::from_characters(std::size_t rank, const std::vector<Weight>& chars) {
  for (const Weight& w : chars)
    if (w.size() != rank)
      throw InputError("weight " + w.to_string() + " does not have length " +
                       std::to_string(rank));
  return TorusSubgroup(rank, chars);
}

bool TorusSubgroup::is_trivial() const { return rows_.size() == rank_ && torsion_.empty(); }

std::string TorusSubgroup::to_string() const {
  std::string s = "ker[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += rows_[i].to_string();
  }
  s += "] dim=" + std::to_string(dim_identity_component()) + " torsion=[";
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (i) s += ',';
    s += torsion_[i].get_str();
  }
  return s + "]";
}

bool operator<(const TorusSubgroup& a, const TorusSubgroup& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  return a.rows_ < b.rows_;
}

TorusSubgroup kernel_of_weights(const std::vector<Weight>& weights, std::size_t rank) {
  return TorusSubgroup::from_characters(rank, weights);
}

TorusSubgroup intersect(const TorusSubgroup& h1, const TorusSubgroup& h2) {
  if (h1.rank() != h2.rank()) throw InputError("intersect: torus rank mismatch");
  std::vector<Weight> rows = h1.char_matrix();
  rows.insert(rows.end(), h2.char_matrix().begin(), h2.char_matrix().end());
  return TorusSubgroup::from_characters(h1.rank(), rows);
}

bool vanishes_on(const Weight& w, const TorusSubgroup& h) {
  if (w.size() != h.rank()) throw InputError("vanishes_on: weight length does not match torus rank");
  return in_hermite_lattice(h.char_matrix(), w);
}

TorusSubgroup identity_component(const TorusSubgroup& h) {
  if (h.is_connected()) return h;
  // Row lattice of D * V^{-1}; its saturation is spanned by the rows of
  // V^{-1} that carry a nonzero invariant factor.
  SmithForm s = smith_normal_form(IntMatrix::from_rows(h.char_matrix(), h.rank()));
  std::vector<Weight> rows;
  for (std::size_t i = 0; i < s.diagonal.size(); ++i)
    if (s.diagonal[i] != 0) rows.push_back(s.V_inverse.row(i));
  return TorusSubgroup::from_characters(h.rank(), rows);
}

bool subgroup_contains(const TorusSubgroup& h1, const TorusSubgroup& h2) {
  if (h1.rank() != h2.rank()) throw InputError("subgroup_contains: torus rank mismatch");
  return std::all_of(h1.char_matrix().begin(), h1.char_matrix().end(),
                     [&](const Weight& w) { return vanishes_on(w, h2); });
}

}  // namespace gkm
