#include "hyperlat/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace hyperlat {

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; });
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (auto& x : r.coords_) x = checked::neg(x);
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.rank() != rank()) throw DomainError("dimension-mismatch", "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::add(coords_[i], other[i]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.rank() != rank()) throw DomainError("dimension-mismatch", "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::sub(coords_[i], other[i]);
  return *this;
}

LatticeVector operator*(Int s, const LatticeVector& v) {
  LatticeVector r = v;
  for (auto& x : r.coords_) x = checked::mul(s, x);
  return r;
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged-matrix", "rows of unequal length");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LatticeVector IntMatrix::column(std::size_t c) const {
  std::vector<Int> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return LatticeVector(std::move(v));
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_, std::vector<Int>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("dimension-mismatch", "matrix product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = checked::add(c(i, j), checked::mul(aik, b(k, j)));
    }
  return c;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.rank()) throw DomainError("dimension-mismatch", "matrix-vector product");
  std::vector<Int> r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] = checked::add(r[i], checked::mul(a(i, j), v[j]));
  return LatticeVector(std::move(r));
}

// ---------------------------------------------------------------------------
// Signature

namespace {

inline Int mul(Int a, Int b) { return checked::mul(a, b); }
inline Int sub(Int a, Int b) { return checked::sub(a, b); }
inline Int add(Int a, Int b) { return checked::add(a, b); }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline Int magnitude(Int a) { return a < 0 ? -a : a; }
inline BigInt magnitude(const BigInt& a) { return abs(a); }
inline Int gcd_of(Int a, Int b) { return std::gcd(a, b); }
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return gcd(a, b); }

template <class T>
using Dense = std::vector<std::vector<T>>;

template <class T>
void divide_content(Dense<T>& m) {
  T g = 0;
  for (const auto& row : m)
    for (const auto& x : row) g = gcd_of(g, x);
  if (g > 1)
    for (auto& row : m)
      for (auto& x : row) x /= g;
}

template <class T>
Signature inertia(Dense<T> a) {
  Signature s;
  while (!a.empty()) {
    const std::size_t n = a.size();
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i][i] != 0 && (pivot == n || magnitude(a[i][i]) < magnitude(a[pivot][pivot]))) pivot = i;

    if (pivot < n) {
      const T piv = a[pivot][pivot];
      (piv > 0 ? s.positive : s.negative) += 1;
      const bool flip = piv < 0;
      Dense<T> b;
      b.reserve(n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == pivot) continue;
        std::vector<T> row;
        row.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
          if (j == pivot) continue;
          T v = sub(mul(piv, a[i][j]), mul(a[i][pivot], a[pivot][j]));
          row.push_back(flip ? T(0) - v : v);
        }
        b.push_back(std::move(row));
      }
      a = std::move(b);
      divide_content(a);
      continue;
    }

    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) {
      s.zero += n;
      break;
    }
    // [[0,b],[b,0]] has inertia (1,1); the Schur complement is scaled by b^2.
    const T b = a[pi][pj];
    s.positive += 1;
    s.negative += 1;
    const T b2 = mul(b, b);
    Dense<T> c;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == pi || k == pj) continue;
      std::vector<T> row;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == pi || l == pj) continue;
        T cross = add(mul(a[k][pi], a[pj][l]), mul(a[k][pj], a[pi][l]));
        row.push_back(sub(mul(b2, a[k][l]), mul(b, cross)));
      }
      c.push_back(std::move(row));
    }
    a = std::move(c);
    divide_content(a);
  }
  return s;
}

}  // namespace

Signature signature(const IntMatrix& m) {
  if (!m.is_symmetric()) throw DomainError("not-symmetric", "signature needs a symmetric matrix");
  Dense<Int> a = m.to_rows();
  try {
    return inertia<Int>(a);
  } catch (const OverflowError&) {
    Dense<BigInt> big(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (Int x : a[i]) big[i].emplace_back(x);
    return inertia<BigInt>(std::move(big));
  }
}

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::diagonal(std::size_t n) {
  Lattice l;
  l.diagonal_ = true;
  l.rank_ = n + 1;
  return l;
}

Lattice Lattice::from_gram(IntMatrix gram) {
  if (!gram.is_square() || gram.rows() == 0)
    throw InputError("bad-gram", "Gram matrix must be square and nonempty");
  if (!gram.is_symmetric()) throw InputError("bad-gram", "Gram matrix must be symmetric");
  Lattice l;
  l.diagonal_ = false;
  l.rank_ = gram.rows();
  l.gram_ = std::move(gram);
  return l;
}

Int Lattice::gram(std::size_t i, std::size_t j) const {
  if (diagonal_) return i != j ? 0 : (i == 0 ? 1 : -1);
  return gram_(i, j);
}

IntMatrix Lattice::gram_matrix() const {
  if (!diagonal_) return gram_;
  IntMatrix g(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i) g(i, i) = i == 0 ? 1 : -1;
  return g;
}

Signature signature(const Lattice& lattice) {
  if (lattice.is_diagonal()) return {1, lattice.rank() - 1, 0};
  return signature(lattice.gram_matrix());
}

Int inner_product(const Lattice& lattice, const LatticeVector& u, const LatticeVector& v) {
  const std::size_t r = lattice.rank();
  if (u.rank() != r || v.rank() != r)
    throw DomainError("dimension-mismatch", "vector rank differs from lattice rank");
  Int acc = 0;
  if (lattice.is_diagonal()) {
    acc = checked::mul(u[0], v[0]);
    for (std::size_t i = 1; i < r; ++i) acc = checked::sub(acc, checked::mul(u[i], v[i]));
    return acc;
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (u[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < r; ++j) row = checked::add(row, checked::mul(lattice.gram(i, j), v[j]));
    acc = checked::add(acc, checked::mul(u[i], row));
  }
  return acc;
}

bool is_characteristic(const Lattice& lattice, const LatticeVector& k) {
  if (k.rank() != lattice.rank())
    throw DomainError("dimension-mismatch", "vector rank differs from lattice rank");
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    const Int kx = inner_product(lattice, k, lattice.basis(i));
    if ((kx - lattice.gram(i, i)) % 2 != 0) return false;
  }
  return true;
}

namespace detail {

LatticeVector reflect_general(const Lattice& lattice, const LatticeVector& v, const LatticeVector& x) {
  const Int qv = square(lattice, v);
  if (qv == 0) throw DomainError("isotropic-reflection", "cannot reflect in a vector of square 0");
  const Int twice = checked::mul(2, inner_product(lattice, x, v));
  if (twice % qv != 0)
    throw DomainError("non-integral-reflection", "2(x.v) is not divisible by q(v)");
  return x - (twice / qv) * v;
}

}  // namespace detail

LatticeVector reflect(const Lattice& lattice, const LatticeVector& v, const LatticeVector& x) {
  const Int qv = square(lattice, v);
  if (qv != -1 && qv != -2)
    throw DomainError("non-integral-reflection",
                      "public reflections need q(v) in {-1,-2}; got " + std::to_string(qv));
  return detail::reflect_general(lattice, v, x);
}

// ---------------------------------------------------------------------------
// Generators and isometries

LatticeVector Generator::apply(const Lattice& lattice, const LatticeVector& x) const {
  switch (kind_) {
    case Kind::negate:
      return -x;
    case Kind::flip: {
      if (i_ >= x.rank()) throw DomainError("dimension-mismatch", "flip index out of range");
      LatticeVector r = x;
      r[i_] = checked::neg(r[i_]);
      return r;
    }
    case Kind::swap: {
      if (i_ >= x.rank() || j_ >= x.rank()) throw DomainError("dimension-mismatch", "swap index out of range");
      LatticeVector r = x;
      std::swap(r[i_], r[j_]);
      return r;
    }
    case Kind::reflect:
      return hyperlat::reflect(lattice, v_, x);
  }
  return x;
}

void Generator::apply_left(const Lattice& lattice, IntMatrix& m) const {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  switch (kind_) {
    case Kind::negate:
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = checked::neg(m(i, j));
      return;
    case Kind::flip:
      if (i_ >= r) throw DomainError("dimension-mismatch", "flip index out of range");
      for (std::size_t j = 0; j < c; ++j) m(i_, j) = checked::neg(m(i_, j));
      return;
    case Kind::swap:
      if (i_ >= r || j_ >= r) throw DomainError("dimension-mismatch", "swap index out of range");
      for (std::size_t j = 0; j < c; ++j) std::swap(m(i_, j), m(j_, j));
      return;
    case Kind::reflect: {
      // R = I - (2/q) v (Gv)^T, applied to every column at once.
      const Int qv = square(lattice, v_);
      if (qv != -1 && qv != -2)
        throw DomainError("non-integral-reflection", "word reflections need q(v) in {-1,-2}");
      const Int scale = -2 / qv;  // 2 for q=-1, 1 for q=-2
      std::vector<Int> gv(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) gv[i] = checked::add(gv[i], checked::mul(lattice.gram(i, k), v_[k]));
      for (std::size_t j = 0; j < c; ++j) {
        Int w = 0;
        for (std::size_t i = 0; i < r; ++i) w = checked::add(w, checked::mul(gv[i], m(i, j)));
        if (w == 0) continue;
        const Int f = checked::mul(scale, w);
        for (std::size_t i = 0; i < r; ++i) m(i, j) = checked::add(m(i, j), checked::mul(f, v_[i]));
      }
      return;
    }
  }
}

std::string Generator::str() const {
  switch (kind_) {
    case Kind::negate:
      return "negate";
    case Kind::flip:
      return "flip(" + std::to_string(i_) + ")";
    case Kind::swap:
      return "swap(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
    case Kind::reflect: {
      std::string s = "reflect";
      return s + v_.str();
    }
  }
  return {};
}

namespace {

std::vector<Int> parse_int_list(const std::string& body, const std::string& token) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad-generator", "cannot parse generator token '" + token + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Generator Generator::parse(const std::string& token) {
  if (token == "negate") return negate();
  const auto open = token.find('(');
  if (open == std::string::npos || token.back() != ')')
    throw InputError("bad-generator", "cannot parse generator token '" + token + "'");
  const std::string name = token.substr(0, open);
  const auto args = parse_int_list(token.substr(open + 1, token.size() - open - 2), token);
  auto index = [&](Int v) {
    if (v < 0) throw InputError("bad-generator", "negative index in '" + token + "'");
    return static_cast<std::size_t>(v);
  };
  if (name == "flip" && args.size() == 1) return flip(index(args[0]));
  if (name == "swap" && args.size() == 2) return swap(index(args[0]), index(args[1]));
  if (name == "reflect" && !args.empty()) return reflect(LatticeVector(args));
  throw InputError("bad-generator", "cannot parse generator token '" + token + "'");
}

void Isometry::append(const Lattice& lattice, Generator g) {
  g.apply_left(lattice, matrix_);
  word_.push_back(std::move(g));
}

void Isometry::append(const Isometry& after) {
  matrix_ = after.matrix_ * matrix_;
  word_.insert(word_.end(), after.word_.begin(), after.word_.end());
}

IntMatrix evaluate_word(const Lattice& lattice, std::span<const Generator> word) {
  IntMatrix m = IntMatrix::identity(lattice.rank());
  for (const auto& g : word) g.apply_left(lattice, m);
  return m;
}

bool preserves_form(const IntMatrix& phi, const Lattice& lattice) {
  if (phi.rows() != lattice.rank() || phi.cols() != lattice.rank()) return false;
  const IntMatrix g = lattice.gram_matrix();
  return phi.transpose() * g * phi == g;
}

bool verify_isometry(const Isometry& phi, const Lattice& lattice) {
  if (!preserves_form(phi.matrix(), lattice)) return false;
  try {
    return evaluate_word(lattice, phi.word()) == phi.matrix();
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace hyperlat
