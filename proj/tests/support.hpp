#ifndef A2CK_TESTS_SUPPORT_HPP
#define A2CK_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <vector>

#include "a2ck/zmat.hpp"

// Oracles used by the tests. Everything here is deliberately naive and
// independent of the Smith-form code path it is checking.
namespace testsup {

using a2ck::Int;
using a2ck::IntMatrix;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t m,
                               std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a.e(i, j) = dist(rng);
  return a;
}

inline IntMatrix random_zero_one(std::mt19937_64& rng, std::size_t n,
                                 double density) {
  std::bernoulli_distribution bit(density);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.e(i, j) = bit(rng) ? 1 : 0;
  return a;
}

inline IntMatrix random_permutation_matrix(std::mt19937_64& rng,
                                           std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a.e(p[i], i) = 1;
  return a;
}

// Product of random elementary matrices; det is +-1 by construction.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n,
                                   int steps = 14) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    switch (kind(rng)) {
      case 0:
      case 1: {
        if (i == j) break;
        long c = coef(rng);
        for (std::size_t k = 0; k < n; ++k) u.e(i, k) += c * u.e(j, k);
        break;
      }
      case 2:
        a2ck::detail::swap_rows(u, i, j, 0);
        break;
      case 3:
        a2ck::detail::row_neg(u, i, 0);
        break;
    }
  }
  return u;
}

inline Int det_cofactor(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw a2ck::UsageError("det of non-square matrix");
  if (n == 0) return 1;
  if (n == 1) return a.e(0, 0);
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a2ck::sgn(a.e(0, j)) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.e(r - 1, cc++) = a.e(r, c);
      }
    }
    Int term = a.e(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Membership x in A*Z^n for square nonsingular A, decided by Cramer's rule.
inline bool in_column_lattice(const IntMatrix& a, const std::vector<Int>& x,
                              const Int& det) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    IntMatrix ai = a;
    for (std::size_t r = 0; r < n; ++r) ai.e(r, col) = x[r];
    if (!mpz_divisible_p(det_cofactor(ai).get_mpz_t(), det.get_mpz_t()))
      return false;
  }
  return true;
}

// Brute-force model of Z^n / A*Z^n for square A with small |det|: coset
// representatives found by breadth-first search over unit steps, element
// orders by repeated addition. No Smith form involved.
struct CosetOracle {
  IntMatrix a;
  Int det;
  std::size_t n;
  std::vector<std::vector<Int>> reps;

  explicit CosetOracle(const IntMatrix& a_in)
      : a(a_in), det(det_cofactor(a_in)), n(a_in.rows()) {
    if (a2ck::sgn(det) == 0) throw a2ck::UsageError("oracle needs det != 0");
    Int size_z = abs(det);
    const std::size_t size = size_z.get_ui();
    reps.push_back(std::vector<Int>(n, 0));
    std::deque<std::vector<Int>> queue;
    queue.push_back(reps.front());
    while (!queue.empty() && reps.size() < size) {
      std::vector<Int> v = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < n && reps.size() < size; ++k) {
        for (int s : {1, -1}) {
          std::vector<Int> w = v;
          w[k] += s;
          if (!known(w)) {
            reps.push_back(w);
            queue.push_back(w);
          }
        }
      }
    }
  }

  bool same_class(const std::vector<Int>& v, const std::vector<Int>& w) const {
    std::vector<Int> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = v[i] - w[i];
    return in_column_lattice(a, diff, det);
  }

  bool known(const std::vector<Int>& v) const {
    for (const auto& r : reps)
      if (same_class(r, v)) return true;
    return false;
  }

  Int element_order(const std::vector<Int>& v) const {
    std::vector<Int> acc(n, 0);
    for (Int t = 1;; ++t) {
      for (std::size_t i = 0; i < n; ++i) acc[i] += v[i];
      if (in_column_lattice(a, acc, det)) return t;
    }
  }

  // Sorted multiset of the orders of all elements.
  std::vector<Int> order_multiset() const {
    std::vector<Int> out;
    out.reserve(reps.size());
    for (const auto& r : reps) out.push_back(element_order(r));
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Sorted multiset of element orders of Z/d1 + Z/d2 + ..., enumerated
// directly from the factor list.
inline std::vector<Int> order_multiset_from_factors(
    const std::vector<Int>& factors) {
  std::vector<Int> out;
  std::vector<Int> c(factors.size(), 0);
  for (;;) {
    Int ord = 1, g, q;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      mpz_gcd(g.get_mpz_t(), factors[i].get_mpz_t(), c[i].get_mpz_t());
      q = factors[i] / g;
      mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), q.get_mpz_t());
    }
    out.push_back(ord);
    std::size_t k = 0;
    for (; k < factors.size(); ++k) {
      c[k] += 1;
      if (c[k] < factors[k]) break;
      c[k] = 0;
    }
    if (k == factors.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testsup

#endif
