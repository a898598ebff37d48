#pragma once

// Integer lattice algebra: weights, integer matrices with Smith and Hermite
// normal forms, and closed subgroups of a torus T^r described by the
// lattice of characters that vanish on them.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gkm/numeric.hpp"

namespace gkm {

/// An element of the weight lattice Z^r.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  Weight(std::initializer_list<long> entries);

  static Weight zero(std::size_t rank);
  static Weight unit(std::size_t rank, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;
  // First nonzero entry is positive.
  bool is_lex_positive() const;
  // The representative of {w, -w} that is lexicographically positive.
  Weight canonical_sign() const;

  Weight operator-() const;
  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight scaled(const Integer& factor) const;
  Integer dot(const Weight& other) const;

  // "(1,-1,-1)"
  std::string to_string() const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<Integer> entries_;
};

// Linear independence over Q of two vectors of the same length.
bool linearly_independent(const Weight& a, const Weight& b);

// If v = c * w for an integer c, returns true and sets c. w must be nonzero.
bool integer_multiple_of(const Weight& v, const Weight& w, Integer* c = nullptr);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Weight>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<Weight>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Weight row(std::size_t i) const;
  Weight column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_diagonal() const;
  Weight apply(const Weight& v) const;  // M * v

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += factor * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& factor);
  // col i += factor * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& factor);
  void negate_row(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Fraction-free (Bareiss) elimination; exact.
std::size_t rank(const IntMatrix& a);
Integer determinant(const IntMatrix& a);

/// D = U * A * V with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inverse;
  // Diagonal of D, length min(rows, cols).
  std::vector<Integer> diagonal;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form: H = U * A, U unimodular. Nonzero rows come
/// first with strictly increasing pivot columns, positive pivots, and entries
/// above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

// Nonzero HNF rows of the lattice generated by `rows` (all of length `cols`).
std::vector<Weight> hermite_basis(const std::vector<Weight>& rows, std::size_t cols);

// Membership of w in the lattice spanned by a basis in Hermite form, by
// back substitution along the pivots.
bool in_hermite_lattice(const std::vector<Weight>& basis, const Weight& w);

/// A closed subgroup H of T^r, stored as the canonical basis of its
/// annihilator {w in Z^r : chi_w(H) = 1}. Equal values define equal subgroups.
class TorusSubgroup {
 public:
  static TorusSubgroup full(std::size_t rank);
  static TorusSubgroup trivial(std::size_t rank);
  // The subgroup on which every listed character is trivial.
  static TorusSubgroup from_characters(std::size_t rank, const std::vector<Weight>& chars);

  std::size_t rank() const { return rank_; }
  const std::vector<Weight>& char_matrix() const { return rows_; }
  std::size_t dim_identity_component() const { return rank_ - rows_.size(); }
  const std::vector<Integer>& torsion_invariants() const { return torsion_; }
  bool is_connected() const { return torsion_.empty(); }
  bool is_full() const { return rows_.empty(); }
  bool is_trivial() const;

  // e.g. "ker[(1,0,0),(0,1,1)] dim=1 torsion=[]"
  std::string to_string() const;

  friend bool operator==(const TorusSubgroup& a, const TorusSubgroup& b) {
    return a.rank_ == b.rank_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const TorusSubgroup& a, const TorusSubgroup& b) { return !(a == b); }
  friend bool operator<(const TorusSubgroup& a, const TorusSubgroup& b);

 private:
  TorusSubgroup(std::size_t rank, std::vector<Weight> rows);

  std::size_t rank_ = 0;
  std::vector<Weight> rows_;
  std::vector<Integer> torsion_;
};

// Intersection of the kernels of the given characters; empty set -> T^r.
TorusSubgroup kernel_of_weights(const std::vector<Weight>& weights, std::size_t rank);
TorusSubgroup intersect(const TorusSubgroup& h1, const TorusSubgroup& h2);
// chi_w restricted to H is trivial.
bool vanishes_on(const Weight& w, const TorusSubgroup& h);
TorusSubgroup identity_component(const TorusSubgroup& h);
// h2 is a subgroup of h1.
bool subgroup_contains(const TorusSubgroup& h1, const TorusSubgroup& h2);

}  // namespace gkm
