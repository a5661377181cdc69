#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hyperlat/integer.hpp"

namespace hyperlat {

// Integer coordinate vector. Which lattice it belongs to is carried by the
// caller; every operation that pairs vectors takes the Lattice explicitly.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Int> coords) : coords_(coords) {}

  static LatticeVector zero(std::size_t rank) {
    return LatticeVector(std::vector<Int>(rank, 0));
  }
  static LatticeVector unit(std::size_t rank, std::size_t i) {
    auto v = zero(rank);
    v.coords_.at(i) = 1;
    return v;
  }

  std::size_t rank() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Int> coords() const noexcept { return coords_; }
  const std::vector<Int>& values() const noexcept { return coords_; }

  bool is_zero() const;
  // gcd of the coordinates.
  Int content() const { return hyperlat::content(coords_); }

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(Int s, const LatticeVector& v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  std::string str() const;

 private:
  std::vector<Int> coords_;
};

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  LatticeVector column(std::size_t c) const;
  std::vector<std::vector<Int>> to_rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend LatticeVector operator*(const IntMatrix& a, const LatticeVector& v);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t rank() const noexcept { return positive + negative + zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Inertia of a symmetric integer matrix, computed exactly by symmetric
// elimination (1x1 pivots, 2x2 hyperbolic pivots when the diagonal vanishes).
Signature signature(const IntMatrix& symmetric);

// A free Z-module with a symmetric bilinear form. Diagonal mode is the
// odd lattice of type (1,n) with Gram matrix diag(1, -1, ..., -1); gram mode
// stores an arbitrary symmetric matrix.
class Lattice {
 public:
  static Lattice diagonal(std::size_t n);
  static Lattice from_gram(IntMatrix gram);

  bool is_diagonal() const noexcept { return diagonal_; }
  std::size_t rank() const noexcept { return rank_; }
  // n for a diagonal lattice of type (1,n); rank-1 otherwise.
  std::size_t negative_rank() const noexcept { return rank_ - 1; }

  Int gram(std::size_t i, std::size_t j) const;
  IntMatrix gram_matrix() const;
  LatticeVector basis(std::size_t i) const { return LatticeVector::unit(rank_, i); }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice() = default;
  bool diagonal_ = true;
  std::size_t rank_ = 1;
  IntMatrix gram_;
};

Signature signature(const Lattice& lattice);

// u^T G v. Throws DomainError("dimension-mismatch") on rank mismatch.
Int inner_product(const Lattice& lattice, const LatticeVector& u, const LatticeVector& v);
inline Int square(const Lattice& lattice, const LatticeVector& v) {
  return inner_product(lattice, v, v);
}

// k.x == q(x) mod 2 for every x; checked on the basis.
bool is_characteristic(const Lattice& lattice, const LatticeVector& k);

// Reflection x - 2 (x.v)/q(v) v in a vector of square -1 or -2.
LatticeVector reflect(const Lattice& lattice, const LatticeVector& v, const LatticeVector& x);

namespace detail {
// Reflection in any anisotropic v; throws when the result is not integral.
LatticeVector reflect_general(const Lattice& lattice, const LatticeVector& v,
                              const LatticeVector& x);
}  // namespace detail

// Generators for isometry words.
class Generator {
 public:
  enum class Kind { negate, flip, swap, reflect };

  static Generator negate() { return Generator(Kind::negate, 0, 0, {}); }
  static Generator flip(std::size_t i) { return Generator(Kind::flip, i, 0, {}); }
  static Generator swap(std::size_t i, std::size_t j) { return Generator(Kind::swap, i, j, {}); }
  static Generator reflect(LatticeVector v) { return Generator(Kind::reflect, 0, 0, std::move(v)); }

  Kind kind() const noexcept { return kind_; }
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }
  const LatticeVector& vector() const noexcept { return v_; }

  LatticeVector apply(const Lattice& lattice, const LatticeVector& x) const;
  // m <- g * m.
  void apply_left(const Lattice& lattice, IntMatrix& m) const;

  // "negate", "flip(i)", "swap(i,j)", "reflect(v0,v1,...)".
  std::string str() const;
  static Generator parse(const std::string& token);

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  Generator(Kind kind, std::size_t i, std::size_t j, LatticeVector v)
      : kind_(kind), i_(i), j_(j), v_(std::move(v)) {}

  Kind kind_;
  std::size_t i_;
  std::size_t j_;
  LatticeVector v_;
};

// An integer matrix together with a generator word that produces it. The word
// is in application order: word = [g1, g2, ...] means matrix = ... g2 g1.
class Isometry {
 public:
  static Isometry identity(std::size_t rank) { return Isometry(IntMatrix::identity(rank), {}); }
  Isometry(IntMatrix matrix, std::vector<Generator> word)
      : matrix_(std::move(matrix)), word_(std::move(word)) {}

  const IntMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<Generator>& word() const noexcept { return word_; }

  // Post-compose with g (apply g after the current map).
  void append(const Lattice& lattice, Generator g);
  // Post-compose with another isometry.
  void append(const Isometry& after);

  LatticeVector apply(const LatticeVector& x) const { return matrix_ * x; }

  friend bool operator==(const Isometry&, const Isometry&) = default;

 private:
  IntMatrix matrix_;
  std::vector<Generator> word_;
};

IntMatrix evaluate_word(const Lattice& lattice, std::span<const Generator> word);

// phi^T G phi == G.
bool preserves_form(const IntMatrix& phi, const Lattice& lattice);

// Form preserved and the word re-evaluates to the matrix.
bool verify_isometry(const Isometry& phi, const Lattice& lattice);

}  // namespace hyperlat
