#pragma once

// Exact arithmetic over prime fields GF(q), q <= 2^8, with vectors, matrices,
// uniform random generation and rank/intersection computations.  Everything is
// immutable after construction and safe to share across threads.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlc/errors.hpp"
#include "qlc/rng.hpp"

namespace qlc {

inline constexpr unsigned kMaxModulus = 256;

inline bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline void check_modulus(unsigned q) {
  if (q < 2 || q > kMaxModulus || !is_prime(q))
    throw std::invalid_argument("modulus must be a prime <= 256, got " +
                                std::to_string(q));
}

namespace detail {

inline unsigned mod_pow(unsigned base, unsigned exp, unsigned q) {
  std::uint64_t acc = 1, b = base % q;
  while (exp > 0) {
    if (exp & 1u) acc = acc * b % q;
    b = b * b % q;
    exp >>= 1;
  }
  return static_cast<unsigned>(acc);
}

// Multiplicative inverse in GF(q), q prime.
inline unsigned mod_inv(unsigned a, unsigned q) {
  if (a % q == 0) throw std::domain_error("inverse of zero in GF(q)");
  return mod_pow(a % q, q - 2, q);
}

}  // namespace detail

/// A single element of GF(q).  Carries its modulus; mixed-modulus arithmetic
/// is rejected.
class FieldElem {
 public:
  FieldElem(unsigned value, unsigned q) : v_(0), q_(0) {
    check_modulus(q);
    if (value >= q)
      throw std::invalid_argument("field element value out of range");
    v_ = static_cast<std::uint16_t>(value);
    q_ = static_cast<std::uint16_t>(q);
  }

  unsigned value() const { return v_; }
  unsigned modulus() const { return q_; }

  friend FieldElem operator+(FieldElem a, FieldElem b) {
    a.require_same(b);
    return FieldElem((a.v_ + b.v_) % a.q_, a.q_);
  }
  friend FieldElem operator-(FieldElem a, FieldElem b) {
    a.require_same(b);
    return FieldElem((a.v_ + a.q_ - b.v_) % a.q_, a.q_);
  }
  friend FieldElem operator*(FieldElem a, FieldElem b) {
    a.require_same(b);
    return FieldElem(static_cast<unsigned>(a.v_) * b.v_ % a.q_, a.q_);
  }
  FieldElem operator-() const { return FieldElem((q_ - v_) % q_, q_); }
  FieldElem inverse() const { return FieldElem(detail::mod_inv(v_, q_), q_); }
  friend FieldElem operator/(FieldElem a, FieldElem b) {
    return a * b.inverse();
  }

  friend bool operator==(FieldElem a, FieldElem b) {
    return a.v_ == b.v_ && a.q_ == b.q_;
  }
  friend bool operator!=(FieldElem a, FieldElem b) { return !(a == b); }

 private:
  void require_same(FieldElem other) const {
    if (q_ != other.q_)
      throw std::invalid_argument("modulus mismatch in field operation");
  }
  std::uint16_t v_, q_;
};

inline FieldElem field_add(FieldElem a, FieldElem b) { return a + b; }

/// Vector over GF(q); all entries share one modulus.
class FieldVec {
 public:
  FieldVec(std::vector<std::uint16_t> values, unsigned q)
      : v_(std::move(values)), q_(static_cast<std::uint16_t>(q)) {
    check_modulus(q);
    for (auto x : v_)
      if (x >= q) throw std::invalid_argument("vector entry out of range");
  }
  FieldVec(std::initializer_list<unsigned> values, unsigned q)
      : FieldVec(std::vector<std::uint16_t>(values.begin(), values.end()), q) {}

  static FieldVec zeros(std::size_t n, unsigned q) {
    return FieldVec(std::vector<std::uint16_t>(n, 0), q);
  }

  std::size_t size() const { return v_.size(); }
  unsigned modulus() const { return q_; }
  std::uint16_t operator[](std::size_t i) const { return v_[i]; }
  FieldElem at(std::size_t i) const { return FieldElem(v_[i], q_); }
  std::span<const std::uint16_t> raw() const { return v_; }

  friend FieldVec operator+(const FieldVec& a, const FieldVec& b) {
    a.require_compatible(b);
    std::vector<std::uint16_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      out[i] = static_cast<std::uint16_t>((a.v_[i] + b.v_[i]) % a.q_);
    return FieldVec(std::move(out), a.q_);
  }
  friend FieldVec operator-(const FieldVec& a, const FieldVec& b) {
    a.require_compatible(b);
    std::vector<std::uint16_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      out[i] = static_cast<std::uint16_t>((a.v_[i] + a.q_ - b.v_[i]) % a.q_);
    return FieldVec(std::move(out), a.q_);
  }

  friend bool operator==(const FieldVec& a, const FieldVec& b) {
    return a.q_ == b.q_ && a.v_ == b.v_;
  }
  friend bool operator!=(const FieldVec& a, const FieldVec& b) {
    return !(a == b);
  }

 private:
  void require_compatible(const FieldVec& other) const {
    if (q_ != other.q_)
      throw std::invalid_argument("modulus mismatch between vectors");
    if (v_.size() != other.v_.size())
      throw std::invalid_argument("vector length mismatch");
  }
  std::vector<std::uint16_t> v_;
  std::uint16_t q_;
};

inline FieldVec field_scale_mul(FieldElem alpha, const FieldVec& v) {
  if (alpha.modulus() != v.modulus())
    throw std::invalid_argument("modulus mismatch in scalar multiply");
  std::vector<std::uint16_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = static_cast<std::uint16_t>(alpha.value() * v[i] % v.modulus());
  return FieldVec(std::move(out), v.modulus());
}

/// Dense row-major matrix over GF(q).
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols, unsigned q)
      : rows_(rows), cols_(cols), q_(static_cast<std::uint16_t>(q)),
        a_(rows * cols, 0) {
    check_modulus(q);
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("matrix dimensions must be positive");
  }
  FieldMatrix(std::size_t rows, std::size_t cols,
              std::vector<std::uint16_t> entries, unsigned q)
      : rows_(rows), cols_(cols), q_(static_cast<std::uint16_t>(q)),
        a_(std::move(entries)) {
    check_modulus(q);
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("matrix dimensions must be positive");
    if (a_.size() != rows * cols)
      throw std::invalid_argument("entry count does not match dimensions");
    for (auto x : a_)
      if (x >= q) throw std::invalid_argument("matrix entry out of range");
  }
  FieldMatrix(std::initializer_list<std::initializer_list<unsigned>> rows,
              unsigned q)
      : rows_(rows.size()), cols_(rows.begin()->size()),
        q_(static_cast<std::uint16_t>(q)) {
    check_modulus(q);
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw std::invalid_argument("ragged initializer");
      for (unsigned x : r) {
        if (x >= q) throw std::invalid_argument("matrix entry out of range");
        a_.push_back(static_cast<std::uint16_t>(x));
      }
    }
  }

  static FieldMatrix identity(std::size_t n, unsigned q) {
    FieldMatrix m(n, n, q);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned modulus() const { return q_; }
  std::uint16_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, unsigned v) {
    if (v >= q_) throw std::invalid_argument("matrix entry out of range");
    a_[r * cols_ + c] = static_cast<std::uint16_t>(v);
  }
  std::span<const std::uint16_t> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.q_ == b.q_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.a_ == b.a_;
  }

  /// Vertical concatenation; operands must agree on cols and modulus.
  friend FieldMatrix vstack(const FieldMatrix& top, const FieldMatrix& bot) {
    if (top.q_ != bot.q_ || top.cols_ != bot.cols_)
      throw std::invalid_argument("vstack shape or modulus mismatch");
    std::vector<std::uint16_t> entries = top.a_;
    entries.insert(entries.end(), bot.a_.begin(), bot.a_.end());
    return FieldMatrix(top.rows_ + bot.rows_, top.cols_, std::move(entries),
                       top.q_);
  }

 private:
  std::size_t rows_, cols_;
  std::uint16_t q_;
  std::vector<std::uint16_t> a_;
};

/// uG + b over GF(q); u has length G.rows(), b length G.cols().
inline FieldVec encode_affine(const FieldVec& u, const FieldMatrix& G,
                              const FieldVec& b) {
  const unsigned q = G.modulus();
  if (u.modulus() != q || b.modulus() != q)
    throw std::invalid_argument("modulus mismatch in encode");
  if (u.size() != G.rows() || b.size() != G.cols())
    throw std::invalid_argument("dimension mismatch in encode");
  std::vector<std::uint32_t> acc(G.cols(), 0);
  for (std::size_t i = 0; i < G.rows(); ++i) {
    const unsigned ui = u[i];
    if (ui == 0) continue;
    auto row = G.row(i);
    for (std::size_t j = 0; j < G.cols(); ++j) acc[j] += ui * row[j];
  }
  std::vector<std::uint16_t> out(G.cols());
  for (std::size_t j = 0; j < G.cols(); ++j)
    out[j] = static_cast<std::uint16_t>((acc[j] + b[j]) % q);
  return FieldVec(std::move(out), q);
}

/// Entries i.i.d. uniform on [0, q-1]; deterministic for a fixed generator
/// state.
inline FieldMatrix random_matrix(std::size_t k, std::size_t n, unsigned q,
                                 Rng& rng) {
  check_modulus(q);
  std::vector<std::uint16_t> entries(k * n);
  for (auto& e : entries)
    e = static_cast<std::uint16_t>(uniform_below(rng, q));
  return FieldMatrix(k, n, std::move(entries), q);
}

inline FieldVec random_vec(std::size_t n, unsigned q, Rng& rng) {
  check_modulus(q);
  std::vector<std::uint16_t> v(n);
  for (auto& e : v) e = static_cast<std::uint16_t>(uniform_below(rng, q));
  return FieldVec(std::move(v), q);
}

namespace detail {

// In-place Gaussian elimination to reduced row echelon form.
// Returns pivot column indices.
inline std::vector<std::size_t> rref_inplace(
    std::vector<std::vector<std::uint16_t>>& m, unsigned q) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const unsigned inv = mod_inv(m[r][c], q);
    for (std::size_t j = c; j < cols; ++j)
      m[r][j] = static_cast<std::uint16_t>(m[r][j] * inv % q);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const unsigned f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = static_cast<std::uint16_t>(
            (m[i][j] + (q - f) * static_cast<unsigned>(m[r][j])) % q);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::vector<std::vector<std::uint16_t>> to_rows(const FieldMatrix& m) {
  std::vector<std::vector<std::uint16_t>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows[i].assign(m.row(i).begin(), m.row(i).end());
  return rows;
}

}  // namespace detail

inline std::size_t rank(const FieldMatrix& m) {
  auto rows = detail::to_rows(m);
  return detail::rref_inplace(rows, m.modulus()).size();
}

/// Basis of {x : M x^T = 0}, returned as rows of a matrix.  Returns nullopt
/// when the kernel is trivial.
inline std::optional<FieldMatrix> null_space(const FieldMatrix& m) {
  const unsigned q = m.modulus();
  const std::size_t n = m.cols();
  auto rows = detail::to_rows(m);
  const auto pivots = detail::rref_inplace(rows, q);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::uint16_t> basis;
  std::size_t count = 0;
  for (std::size_t free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<std::uint16_t> x(n, 0);
    x[free_c] = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
      // pivot row pi has leading 1 at pivots[pi]
      const unsigned coeff = rows[pi][free_c];
      x[pivots[pi]] = static_cast<std::uint16_t>((q - coeff) % q);
    }
    basis.insert(basis.end(), x.begin(), x.end());
    ++count;
  }
  if (count == 0) return std::nullopt;
  return FieldMatrix(count, n, std::move(basis), q);
}

/// One solution x of A x^T = rhs, or nullopt when inconsistent.
inline std::optional<FieldVec> solve_linear(const FieldMatrix& A,
                                            const FieldVec& rhs) {
  const unsigned q = A.modulus();
  if (rhs.modulus() != q || rhs.size() != A.rows())
    throw std::invalid_argument("solve_linear shape mismatch");
  const std::size_t n = A.cols();
  // augmented system
  std::vector<std::vector<std::uint16_t>> rows(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    rows[i].assign(A.row(i).begin(), A.row(i).end());
    rows[i].push_back(rhs[i]);
  }
  const auto pivots = detail::rref_inplace(rows, q);
  // inconsistent iff a pivot lands in the augmented column
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<std::uint16_t> x(n, 0);
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = rows[pi][n];
  return FieldVec(std::move(x), q);
}

/// Dimension of rowspace(G1) ∩ rowspace(G2), from the kernel of the stacked
/// matrix: dim = rank(G1) + rank(G2) - rank([G1; G2]).  Exact arithmetic only.
inline std::size_t row_space_intersection_dim(const FieldMatrix& g1,
                                              const FieldMatrix& g2) {
  if (g1.modulus() != g2.modulus() || g1.cols() != g2.cols())
    throw std::invalid_argument("intersection operands must share n and q");
  const std::size_t r1 = rank(g1);
  const std::size_t r2 = rank(g2);
  const std::size_t rs = rank(vstack(g1, g2));
  return r1 + r2 - rs;
}

}  // namespace qlc
