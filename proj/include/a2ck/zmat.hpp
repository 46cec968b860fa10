#ifndef A2CK_ZMAT_HPP
#define A2CK_ZMAT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "a2ck/errors.hpp"

namespace a2ck {

using Int = mpz_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int cmpabs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

struct NoIntegerSolution : Error {
  explicit NoIntegerSolution(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

// Dense matrix over Z, row-major. Value type; all operations are pure.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.e(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw UsageError("ragged row list");
      std::size_t j = 0;
      for (long v : row) m.e(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& operator()(std::size_t i, std::size_t j) const {
    check(i, j);
    return e_[i * cols_ + j];
  }
  Int& operator()(std::size_t i, std::size_t j) {
    check(i, j);
    return e_[i * cols_ + j];
  }

  // Unchecked access for hot paths.
  const Int& e(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Int& e(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  bool is_zero() const {
    for (const Int& x : e_)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool is_zero_one() const {
    for (const Int& x : e_)
      if (sgn(x) != 0 && x != 1) return false;
    return true;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

inline IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.e(j, i) = a.e(i, j);
  return t;
}

inline IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.e(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Int& bkj = b.e(k, j);
        if (sgn(bkj) == 0) continue;
        mpz_addmul(c.e(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  return c;
}

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  return mul(a, b);
}

inline IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw UsageError("matrix sum shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.e(i, j) = a.e(i, j) + b.e(i, j);
  return c;
}

inline IntMatrix sub(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw UsageError("matrix difference shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.e(i, j) = a.e(i, j) - b.e(i, j);
  return c;
}

inline IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw UsageError("hconcat row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.e(i, j) = a.e(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.e(i, a.cols() + j) = b.e(i, j);
  }
  return c;
}

inline IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw UsageError("vconcat column mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.e(i, j) = a.e(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.e(a.rows() + i, j) = b.e(i, j);
  return c;
}

inline IntMatrix id_minus(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("id_minus needs a square matrix");
  return sub(IntMatrix::identity(m.rows()), m);
}

inline std::vector<Int> row_sums(const IntMatrix& m) {
  std::vector<Int> s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s[i] += m.e(i, j);
  return s;
}

inline std::vector<Int> col_sums(const IntMatrix& m) {
  std::vector<Int> s(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s[j] += m.e(i, j);
  return s;
}

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b,
                      std::size_t from_col) {
  if (a == b) return;
  for (std::size_t j = from_col; j < m.cols(); ++j)
    mpz_swap(m.e(a, j).get_mpz_t(), m.e(b, j).get_mpz_t());
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b,
                      std::size_t from_row) {
  if (a == b) return;
  for (std::size_t i = from_row; i < m.rows(); ++i)
    mpz_swap(m.e(i, a).get_mpz_t(), m.e(i, b).get_mpz_t());
}

// row a -= q * row b
inline void row_submul(IntMatrix& m, std::size_t a, std::size_t b,
                       const Int& q, std::size_t from_col) {
  for (std::size_t j = from_col; j < m.cols(); ++j)
    mpz_submul(m.e(a, j).get_mpz_t(), q.get_mpz_t(), m.e(b, j).get_mpz_t());
}

// col a -= q * col b
inline void col_submul(IntMatrix& m, std::size_t a, std::size_t b,
                       const Int& q, std::size_t from_row) {
  for (std::size_t i = from_row; i < m.rows(); ++i)
    mpz_submul(m.e(i, a).get_mpz_t(), q.get_mpz_t(), m.e(i, b).get_mpz_t());
}

// row a += row b
inline void row_add(IntMatrix& m, std::size_t a, std::size_t b,
                    std::size_t from_col) {
  for (std::size_t j = from_col; j < m.cols(); ++j)
    m.e(a, j) += m.e(b, j);
}

inline void row_neg(IntMatrix& m, std::size_t a, std::size_t from_col) {
  for (std::size_t j = from_col; j < m.cols(); ++j)
    mpz_neg(m.e(a, j).get_mpz_t(), m.e(a, j).get_mpz_t());
}

// Smallest |entry| in the submatrix [t..)x[t..), ties to lowest row then
// lowest column. Returns false if the submatrix is zero.
inline bool min_abs_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi,
                          std::size_t& pj) {
  bool found = false;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const Int& x = m.e(i, j);
      if (sgn(x) == 0) continue;
      if (!found || cmpabs(x, m.e(pi, pj)) < 0) {
        pi = i;
        pj = j;
        found = true;
        if (mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0) return true;
      }
    }
  return found;
}

}  // namespace detail

enum class Transforms { none, left, right, both };

struct SmithForm {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> factors;  // invariant chain d1 | d2 | ..., each >= 1
  std::optional<IntMatrix> left;   // U, rows x rows, det +-1
  std::optional<IntMatrix> right;  // V, cols x cols, det +-1

  std::size_t rank() const { return factors.size(); }

  IntMatrix diagonal() const {
    IntMatrix d(rows, cols);
    for (std::size_t k = 0; k < factors.size(); ++k) d.e(k, k) = factors[k];
    return d;
  }
};

namespace detail {

// Elimination invariant shared by both engines: once pivot t is finalized,
// rows/cols < t are zero off the diagonal and every remaining entry is
// divisible by the pivot, so invariant factors appear in chain order.

inline bool snf_trace_enabled() {
  static const bool on = std::getenv("A2CK_SNF_TRACE") != nullptr;
  return on;
}

inline SmithForm snf_mpz(const IntMatrix& a, Transforms want) {
  const std::size_t m = a.rows(), n = a.cols();
  const auto trace_t0 = std::chrono::steady_clock::now();
  const bool wu = want == Transforms::left || want == Transforms::both;
  const bool wv = want == Transforms::right || want == Transforms::both;
  IntMatrix d = a;
  IntMatrix u, v;
  if (wu) u = IntMatrix::identity(m);
  if (wv) v = IntMatrix::identity(n);

  Int q, r;
  std::size_t t = 0;
  const std::size_t tmax = std::min(m, n);
  for (; t < tmax; ++t) {
    std::size_t pi, pj;
    if (!min_abs_pivot(d, t, pi, pj)) break;
    swap_rows(d, t, pi, t);
    if (wu) swap_rows(u, t, pi, 0);
    swap_cols(d, t, pj, t);
    if (wv) swap_cols(v, t, pj, 0);

    for (;;) {
      // clear column t below the pivot with row operations
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d.e(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d.e(i, t).get_mpz_t(), d.e(t, t).get_mpz_t());
        if (sgn(q) != 0) {
          row_submul(d, i, t, q, t);
          if (wu) row_submul(u, i, t, q, 0);
        }
        if (sgn(d.e(i, t)) != 0) dirty = true;
      }
      if (dirty) {
        // A division left a remainder: a strictly smaller pivot exists.
        min_abs_pivot(d, t, pi, pj);
        swap_rows(d, t, pi, t);
        if (wu) swap_rows(u, t, pi, 0);
        swap_cols(d, t, pj, t);
        if (wv) swap_cols(v, t, pj, 0);
        continue;
      }
      // column t is (p,0,...,0) now, so the column operation clearing
      // d(t,j) changes row t alone
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d.e(t, j)) == 0) continue;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d.e(t, j).get_mpz_t(),
                    d.e(t, t).get_mpz_t());
        if (wv && sgn(q) != 0) col_submul(v, j, t, q, 0);
        d.e(t, j) = r;
        if (sgn(r) != 0) dirty = true;
      }
      if (dirty) {
        min_abs_pivot(d, t, pi, pj);
        swap_rows(d, t, pi, t);
        if (wu) swap_rows(u, t, pi, 0);
        swap_cols(d, t, pj, t);
        if (wv) swap_cols(v, t, pj, 0);
        continue;
      }
      if (mpz_cmpabs_ui(d.e(t, t).get_mpz_t(), 1) != 0) {
        // Pivot must divide the remaining submatrix; fold one offending
        // row into row t and keep reducing.
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
          for (std::size_t j = t + 1; j < n && !fixed; ++j)
            if (!mpz_divisible_p(d.e(i, j).get_mpz_t(),
                                 d.e(t, t).get_mpz_t())) {
              row_add(d, t, i, t);
              if (wu) row_add(u, t, i, 0);
              fixed = true;
            }
        if (fixed) continue;
      }
      break;
    }
    if (sgn(d.e(t, t)) < 0) {
      row_neg(d, t, t);
      if (wu) row_neg(u, t, 0);
    }
    if (snf_trace_enabled() && (t % 25 == 0 || t + 1 == tmax)) {
      double el = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - trace_t0)
                      .count();
      std::size_t maxbits = 0;
      for (std::size_t i = t + 1; i < m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d.e(i, j)) != 0)
            maxbits = std::max(
                maxbits, mpz_sizeinbase(d.e(i, j).get_mpz_t(), 2));
      std::fprintf(stderr, "[snf mpz] t=%zu/%zu %.1fs maxbits=%zu\n", t,
                   tmax, el, maxbits);
    }
  }

  SmithForm s;
  s.rows = m;
  s.cols = n;
  s.factors.reserve(t);
  for (std::size_t k = 0; k < t; ++k) s.factors.push_back(d.e(k, k));
  if (wu) s.left = std::move(u);
  if (wv) s.right = std::move(v);
  return s;
}

// Factors-only engine in machine words.  Every arithmetic step is
// overflow-checked; on the first hit the finalized factors are kept and
// the trailing submatrix (always in a consistent state, thanks to the
// scratch row) is handed to the bignum engine.  Returns false on
// escalation.
inline bool snf_factors_int64(const IntMatrix& a, std::vector<Int>& done,
                              IntMatrix& rest) {
  using ll = long;  // 64-bit on this platform; gmpxx interoperates with long
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<ll> w(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int& x = a.e(i, j);
      if (!x.fits_slong_p()) {
        rest = a;
        return false;
      }
      w[i * n + j] = x.get_si();
    }

  auto at = [&](std::size_t i, std::size_t j) -> ll& { return w[i * n + j]; };
  auto uabs = [](ll x) -> unsigned long long {
    return x < 0 ? 0ULL - static_cast<unsigned long long>(x)
                 : static_cast<unsigned long long>(x);
  };
  auto escalate = [&](std::size_t t) {
    if (snf_trace_enabled())
      std::fprintf(stderr, "[snf i64] escalation at t=%zu of %zu\n", t,
                   std::min(m, n));
    rest = IntMatrix(m - t, n - t);
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) rest.e(i - t, j - t) = at(i, j);
  };
  auto place_pivot = [&](std::size_t t) {
    std::size_t pi = m, pj = n;
    unsigned long long best = 0;
    for (std::size_t i = t; i < m && best != 1; ++i)
      for (std::size_t j = t; j < n; ++j) {
        ll x = at(i, j);
        if (x == 0) continue;
        unsigned long long ax = uabs(x);
        if (pi == m || ax < best) {
          pi = i;
          pj = j;
          best = ax;
          if (ax == 1) break;
        }
      }
    if (pi == m) return false;
    if (pi != t)
      for (std::size_t j = t; j < n; ++j) std::swap(at(t, j), at(pi, j));
    if (pj != t)
      for (std::size_t i = t; i < m; ++i) std::swap(at(i, t), at(i, pj));
    return true;
  };

  std::vector<ll> scratch(n);
  const std::size_t tmax = std::min(m, n);
  const auto trace_t0 = std::chrono::steady_clock::now();
  std::size_t t = 0;
  for (; t < tmax; ++t) {
    if (snf_trace_enabled() && t % 100 == 0) {
      double el = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - trace_t0)
                      .count();
      ll big = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (at(i, j) != LONG_MIN && std::abs(at(i, j)) > big)
            big = std::abs(at(i, j));
      std::fprintf(stderr, "[snf i64] t=%zu/%zu %.1fs maxabs=%ld\n", t, tmax,
                   el, big);
    }
    if (!place_pivot(t)) break;
    for (;;) {
      const ll p = at(t, t);
      if (p == LONG_MIN) {
        escalate(t);
        return false;
      }
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        ll x = at(i, t);
        if (x == 0) continue;
        if (x == LONG_MIN) {
          escalate(t);
          return false;
        }
        ll q = x / p;
        if (q != 0) {
          bool ovf = false;
          for (std::size_t j = t; j < n; ++j) {
            ll prod, res;
            if (__builtin_mul_overflow(q, at(t, j), &prod) ||
                __builtin_sub_overflow(at(i, j), prod, &res)) {
              ovf = true;
              break;
            }
            scratch[j] = res;
          }
          if (ovf) {
            escalate(t);
            return false;
          }
          std::copy(scratch.begin() + t, scratch.end(), &at(i, t));
        }
        if (at(i, t) != 0) dirty = true;
      }
      if (dirty) {
        place_pivot(t);
        continue;
      }
      // column t is clear below the pivot: reducing row t mod p is the
      // whole column operation
      for (std::size_t j = t + 1; j < n; ++j) {
        ll x = at(t, j);
        if (x == 0) continue;
        if (x == LONG_MIN) {
          escalate(t);
          return false;
        }
        ll r = x % p;
        at(t, j) = r;
        if (r != 0) dirty = true;
      }
      if (dirty) {
        place_pivot(t);
        continue;
      }
      const ll ap = p < 0 ? -p : p;
      if (ap != 1) {
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
          for (std::size_t j = t + 1; j < n && !fixed; ++j) {
            if (at(i, j) % ap == 0) continue;
            bool ovf = false;
            for (std::size_t k = t; k < n; ++k) {
              ll res;
              if (__builtin_add_overflow(at(t, k), at(i, k), &res)) {
                ovf = true;
                break;
              }
              scratch[k] = res;
            }
            if (ovf) {
              escalate(t);
              return false;
            }
            std::copy(scratch.begin() + t, scratch.end(), &at(t, t));
            fixed = true;
          }
        if (fixed) continue;
      }
      break;
    }
    const ll p = at(t, t);
    done.push_back(Int(p < 0 ? -p : p));
  }
  return true;
}

}  // namespace detail

// U * A * V = D diagonal with the divisibility chain.  Deterministic:
// pivot = minimal |entry| of the working submatrix, ties broken by lowest
// row then lowest column.  Factors-only requests run in machine words
// until an overflow check trips, then finish in bignum arithmetic.
inline SmithForm snf(const IntMatrix& a, Transforms want) {
  if (want == Transforms::none) {
    std::vector<Int> done;
    IntMatrix rest;
    if (detail::snf_factors_int64(a, done, rest)) {
      SmithForm s;
      s.rows = a.rows();
      s.cols = a.cols();
      s.factors = std::move(done);
      return s;
    }
    SmithForm tail = detail::snf_mpz(rest, Transforms::none);
    SmithForm s;
    s.rows = a.rows();
    s.cols = a.cols();
    s.factors = std::move(done);
    s.factors.insert(s.factors.end(), tail.factors.begin(),
                     tail.factors.end());
    return s;
  }
  return detail::snf_mpz(a, want);
}

inline SmithForm snf(const IntMatrix& a, bool want_transforms = false) {
  return snf(a, want_transforms ? Transforms::both : Transforms::none);
}

namespace detail {

// Deterministic factorization into prime powers.  Trial division, then
// Pollard-Brent rho for whatever survives.
inline void factor_into(const Int& n, std::vector<std::pair<Int, unsigned>>& out);

inline Int pollard_rho(const Int& n) {
  // n odd composite, no small factors
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1, diff;
    while (d == 1) {
      // x -> x^2 + c mod n
      mpz_mul(x.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
      x += c;
      mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
      mpz_mul(y.get_mpz_t(), y.get_mpz_t(), y.get_mpz_t());
      y += c;
      mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
      mpz_mul(y.get_mpz_t(), y.get_mpz_t(), y.get_mpz_t());
      y += c;
      mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
      diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

inline void factor_into(const Int& n_in,
                        std::vector<std::pair<Int, unsigned>>& out) {
  Int n = n_in;
  for (unsigned long p = 2; p < 100000 && n > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned k = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++k;
      }
      out.emplace_back(Int(p), k);
    }
    Int pp(p);
    if (n < pp * pp) break;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
      out.emplace_back(n, 1u);
    } else {
      Int f = pollard_rho(n);
      std::vector<std::pair<Int, unsigned>> sub;
      factor_into(f, sub);
      factor_into(n / f, sub);
      for (auto& [p, k] : sub) {
        bool merged = false;
        for (auto& [p2, k2] : out)
          if (p2 == p) {
            k2 += k;
            merged = true;
            break;
          }
        if (!merged) out.emplace_back(p, k);
      }
    }
  }
}

}  // namespace detail

// Finitely generated abelian group Z^free_rank + Z/t1 + Z/t2 + ... with
// t1 | t2 | ... and every ti >= 2.
struct FinAbGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const FinAbGroup&) const = default;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }

  Int torsion_order() const {
    Int p = 1;
    for (const Int& t : torsion) p *= t;
    return p;
  }

  // Multiset of prime powers p^k equivalent to the torsion chain, sorted
  // by prime then exponent.
  std::vector<Int> primary_factors() const {
    std::vector<std::pair<Int, unsigned>> pf;
    std::vector<Int> out;
    for (const Int& t : torsion) {
      pf.clear();
      detail::factor_into(t, pf);
      for (const auto& [p, k] : pf) {
        Int ppow;
        mpz_pow_ui(ppow.get_mpz_t(), p.get_mpz_t(), k);
        out.push_back(ppow);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string invariant_string() const {
    if (trivial()) return "0";
    std::string s = free_part();
    for (const Int& t : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + t.get_str();
    }
    return s;
  }

  std::string primary_string() const {
    if (trivial()) return "0";
    std::string s = free_part();
    std::vector<Int> pf = primary_factors();
    for (std::size_t i = 0; i < pf.size();) {
      std::size_t j = i;
      while (j < pf.size() && pf[j] == pf[i]) ++j;
      if (!s.empty()) s += " + ";
      if (j - i == 1)
        s += "Z/" + pf[i].get_str();
      else
        s += "(Z/" + pf[i].get_str() + ")^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }

 private:
  std::string free_part() const {
    if (free_rank == 0) return "";
    if (free_rank == 1) return "Z";
    return "Z^" + std::to_string(free_rank);
  }
};

inline FinAbGroup coker_from_snf(const SmithForm& s) {
  FinAbGroup g;
  g.free_rank = s.rows - s.rank();
  for (const Int& d : s.factors)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

// Structure of Z^rows(A) / (A * Z^cols(A)).
inline FinAbGroup coker_structure(const IntMatrix& a) {
  return coker_from_snf(snf(a, Transforms::none));
}

namespace detail {

// Canonical row Hermite form: staircase, positive pivots, entries above a
// pivot reduced into [0, pivot).  Input rows must be linearly independent.
inline IntMatrix hermite_rows(IntMatrix h) {
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  Int q;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (sgn(h.e(i, j)) == 0) continue;
        if (best == m || cmpabs(h.e(i, j), h.e(best, j)) < 0) best = i;
      }
      if (best == m) break;
      swap_rows(h, r, best, j);
      bool others = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h.e(i, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), h.e(i, j).get_mpz_t(), h.e(r, j).get_mpz_t());
        if (sgn(q) != 0) row_submul(h, i, r, q, j);
        if (sgn(h.e(i, j)) != 0) others = true;
      }
      if (!others) break;
    }
    if (r < m && sgn(h.e(r, j)) != 0) {
      if (sgn(h.e(r, j)) < 0) row_neg(h, r, j);
      for (std::size_t i = 0; i < r; ++i) {
        mpz_fdiv_q(q.get_mpz_t(), h.e(i, j).get_mpz_t(), h.e(r, j).get_mpz_t());
        if (sgn(q) != 0) row_submul(h, i, r, q, j);
      }
      ++r;
    }
  }
  return h;
}

}  // namespace detail

// Basis of { x : A x = 0 } as matrix columns, canonicalized by the column
// Hermite form, so equal kernels give identical output.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm s = snf(a, Transforms::right);
  const std::size_t n = a.cols(), r = s.rank();
  IntMatrix k(n, n - r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n - r; ++j) k.e(i, j) = s.right->e(i, r + j);
  return transpose(detail::hermite_rows(transpose(k)));
}

// Solve A X = B over Z (columnwise).  Throws NoIntegerSolution when some
// column of B lies outside the lattice A Z^n.
inline IntMatrix solve_in_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw UsageError("solve_in_lattice row mismatch");
  SmithForm s = snf(a, Transforms::both);
  const std::size_t m = a.rows(), n = a.cols(), p = b.cols(), r = s.rank();
  IntMatrix c = mul(*s.left, b);
  IntMatrix y(n, p);
  Int q, rem;
  for (std::size_t col = 0; col < p; ++col) {
    for (std::size_t i = 0; i < r; ++i) {
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.e(i, col).get_mpz_t(),
                  s.factors[i].get_mpz_t());
      if (sgn(rem) != 0)
        throw NoIntegerSolution("no integral solution in column " +
                                std::to_string(col));
      y.e(i, col) = q;
    }
    for (std::size_t i = r; i < m; ++i)
      if (sgn(c.e(i, col)) != 0)
        throw NoIntegerSolution("no integral solution in column " +
                                std::to_string(col));
  }
  return mul(*s.right, y);
}

// Order of v + im(A) in Z^rows(A) / im(A), where s = snf(A, left transform).
// nullopt means infinite order.
inline std::optional<Int> element_order_from_snf(const SmithForm& s,
                                                 const IntMatrix& v) {
  if (v.cols() != 1 || v.rows() != s.rows)
    throw UsageError("element order needs a column vector of matching height");
  IntMatrix y = mul(*s.left, v);
  for (std::size_t i = s.rank(); i < s.rows; ++i)
    if (sgn(y.e(i, 0)) != 0) return std::nullopt;
  Int ord = 1, g, q;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    mpz_gcd(g.get_mpz_t(), s.factors[i].get_mpz_t(), y.e(i, 0).get_mpz_t());
    q = s.factors[i] / g;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), q.get_mpz_t());
  }
  return ord;
}

inline std::optional<Int> element_order_in_coker(const IntMatrix& a,
                                                 const IntMatrix& v) {
  return element_order_from_snf(snf(a, Transforms::left), v);
}

// Text format: optional '#' comment lines, then "rows cols", then one
// "i j value" line per nonzero entry (0-based); unlisted entries are zero.
inline void write_matrix_text(std::ostream& os, const IntMatrix& m,
                              const std::vector<std::string>& comments = {}) {
  for (const std::string& c : comments) os << "# " << c << "\n";
  os << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m.e(i, j)) != 0)
        os << i << " " << j << " " << m.e(i, j).get_str() << "\n";
}

inline IntMatrix read_matrix_text(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(is, line)) {
      ++lineno;
      std::size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  auto parse_index = [&](const std::string& tok) -> std::size_t {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(tok, &pos);
      if (pos != tok.size() || tok[0] == '-')
        throw std::invalid_argument(tok);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw SyntaxError(lineno, "expected a nonnegative integer, got '" + tok +
                                    "'");
    }
  };

  std::string data;
  if (!next_data_line(data)) throw SyntaxError(lineno, "missing size header");
  std::istringstream hs(data);
  std::string t1, t2, extra;
  if (!(hs >> t1 >> t2) || (hs >> extra))
    throw SyntaxError(lineno, "size header must be 'rows cols'");
  IntMatrix m(parse_index(t1), parse_index(t2));

  while (next_data_line(data)) {
    std::istringstream es(data);
    std::string ti, tj, tv;
    if (!(es >> ti >> tj >> tv) || (es >> extra))
      throw SyntaxError(lineno, "entry line must be 'i j value'");
    std::size_t i = parse_index(ti), j = parse_index(tj);
    if (i >= m.rows() || j >= m.cols())
      throw SyntaxError(lineno, "entry index out of range");
    try {
      m.e(i, j) = Int(tv);
    } catch (const std::invalid_argument&) {
      throw SyntaxError(lineno, "bad integer literal '" + tv + "'");
    }
  }
  return m;
}

}  // namespace a2ck

#endif
