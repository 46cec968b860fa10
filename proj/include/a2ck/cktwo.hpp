#ifndef A2CK_CKTWO_HPP
#define A2CK_CKTWO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "a2ck/errors.hpp"
#include "a2ck/presentation.hpp"
#include "a2ck/transition.hpp"
#include "a2ck/zmat.hpp"

namespace a2ck {

struct NotCommuting : Error {
  explicit NotCommuting(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

struct ConditionsNotMet : Error {
  explicit ConditionsNotMet(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

struct NotZeroOne : Error {
  explicit NotZeroOne(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

struct InfiniteOrder : Error {
  explicit InfiniteOrder(const std::string& what)
      : Error(ErrorKind::consistency, what) {}
};

enum class CheckStatus { pass, fail, inconclusive };

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "inconclusive";
  }
}

struct ConditionCheck {
  CheckStatus status = CheckStatus::pass;
  std::string witness;
};

struct ConditionReport {
  ConditionCheck h0;   // both matrices nonzero
  ConditionCheck h1a;  // products commute
  ConditionCheck h1b;  // product has {0,1} entries
  ConditionCheck h2;   // union digraph strongly connected
  ConditionCheck h3;   // aperiodicity witnesses within the window
  int h3_window = 0;
};

namespace detail {

inline void require_pair(const IntMatrix& m1, const IntMatrix& m2,
                         const char* who) {
  if (m1.rows() != m1.cols() || m2.rows() != m2.cols() ||
      m1.rows() != m2.rows())
    throw UsageError(std::string(who) +
                     " needs two square matrices of one size");
  if (!m1.is_zero_one() || !m2.is_zero_one())
    throw NotZeroOne(std::string(who) + " needs {0,1} matrices");
}

// True iff some word of shape (p1, |p2|) takes different letters at the two
// cells separated by the period (p1, p2). Witnesses of larger shapes restrict
// to this shape, so the exact-shape search loses nothing. Cells are filled in
// raster order; the branch is cut as soon as the later of the two compared
// cells is assigned the same letter as the earlier one.
inline bool h3_witness_exists(const IntMatrix& m1, const IntMatrix& m2,
                              int p1, int p2) {
  const int w = p1 + 1;
  const int h = (p2 < 0 ? -p2 : p2) + 1;
  const int total = w * h;
  const int n = static_cast<int>(m1.rows());

  int first, second;  // raster indices of the compared cells
  if (p2 >= 0) {
    first = 0;
    second = total - 1;
  } else {
    first = w - 1;          // cell (p1, 0)
    second = (h - 1) * w;   // cell (0, |p2|)
  }

  std::vector<int> cell(static_cast<std::size_t>(total), -1);
  auto fits = [&](int t, int x) {
    int i = t % w;
    int j = t / w;
    if (i > 0 && m1.e(static_cast<std::size_t>(x),
                      static_cast<std::size_t>(cell[static_cast<std::size_t>(t - 1)])) == 0)
      return false;
    if (j > 0 && m2.e(static_cast<std::size_t>(x),
                      static_cast<std::size_t>(cell[static_cast<std::size_t>(t - w)])) == 0)
      return false;
    if (t == second && x == cell[static_cast<std::size_t>(first)]) return false;
    return true;
  };

  auto rec = [&](auto&& self, int t) -> bool {
    if (t == total) return true;
    for (int x = 0; x < n; ++x) {
      if (!fits(t, x)) continue;
      cell[static_cast<std::size_t>(t)] = x;
      if (self(self, t + 1)) return true;
    }
    cell[static_cast<std::size_t>(t)] = -1;
    return false;
  };
  return rec(rec, 0);
}

inline IntMatrix matrix_power(const IntMatrix& m, std::size_t e) {
  IntMatrix acc = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

}  // namespace detail

// Evaluates the subshift conditions on a pair of {0,1} matrices. The first
// four are decided exactly. The aperiodicity search is bounded: it looks for
// a separating word for every nonzero period with both components in
// [-window, window], and reports inconclusive rather than fail when some
// period has no witness, since shapes beyond the window are never examined.
inline ConditionReport check_conditions(const IntMatrix& m1,
                                        const IntMatrix& m2,
                                        int h3_window = 4) {
  detail::require_pair(m1, m2, "condition check");
  if (h3_window < 1) throw UsageError("h3 window must be positive");

  ConditionReport rep;
  rep.h3_window = h3_window;

  if (m1.is_zero())
    rep.h0 = {CheckStatus::fail, "matrix 1 is zero"};
  else if (m2.is_zero())
    rep.h0 = {CheckStatus::fail, "matrix 2 is zero"};

  const IntMatrix p12 = mul(m1, m2);
  const IntMatrix p21 = mul(m2, m1);
  if (p12 != p21) {
    for (std::size_t i = 0; i < p12.rows() && rep.h1a.status == CheckStatus::pass; ++i)
      for (std::size_t j = 0; j < p12.cols(); ++j)
        if (p12.e(i, j) != p21.e(i, j)) {
          rep.h1a = {CheckStatus::fail,
                     "products differ at (" + std::to_string(i) + ", " +
                         std::to_string(j) + "): " + p12.e(i, j).get_str() +
                         " vs " + p21.e(i, j).get_str()};
          break;
        }
  }

  for (std::size_t i = 0; i < p12.rows() && rep.h1b.status == CheckStatus::pass; ++i)
    for (std::size_t j = 0; j < p12.cols(); ++j)
      if (p12.e(i, j) > 1) {
        rep.h1b = {CheckStatus::fail,
                   "product entry (" + std::to_string(i) + ", " +
                       std::to_string(j) + ") is " + p12.e(i, j).get_str()};
        break;
      }

  if (!union_strongly_connected(m1, m2))
    rep.h2 = {CheckStatus::fail, "union digraph is not strongly connected"};

  // Periods come in +/- pairs with identical witnesses, so only p1 >= 0 and,
  // for p1 = 0, p2 > 0 are searched.
  for (int p1 = 0; p1 <= h3_window && rep.h3.status == CheckStatus::pass; ++p1)
    for (int p2 = p1 == 0 ? 1 : -h3_window; p2 <= h3_window; ++p2) {
      if (p1 == 0 && p2 == 0) continue;
      if (!detail::h3_witness_exists(m1, m2, p1, p2)) {
        rep.h3 = {CheckStatus::inconclusive,
                  "no word separates the period (" + std::to_string(p1) +
                      ", " + std::to_string(p2) + ") within window " +
                      std::to_string(h3_window)};
        break;
      }
    }

  return rep;
}

// Number of words of the given shape, as the total entry sum of
// M1^e1 * M2^e2. The product formula counts words only when the pair
// commutes and one-step products are unique, so both are demanded.
inline Int count_words(const IntMatrix& m1, const IntMatrix& m2,
                       std::size_t e1, std::size_t e2) {
  detail::require_pair(m1, m2, "word counting");
  const IntMatrix p12 = mul(m1, m2);
  if (p12 != mul(m2, m1))
    throw ConditionsNotMet("word counting needs commuting matrices");
  if (!p12.is_zero_one())
    throw ConditionsNotMet("word counting needs a {0,1} product");

  IntMatrix acc = mul(detail::matrix_power(m1, e1), detail::matrix_power(m2, e2));
  Int total = 0;
  for (std::size_t i = 0; i < acc.rows(); ++i)
    for (std::size_t j = 0; j < acc.cols(); ++j) total += acc.e(i, j);
  return total;
}

struct HomologyReport {
  FinAbGroup h0;
  FinAbGroup h1;
  FinAbGroup h2;  // always torsion free
};

// Homology of the length-two complex built from a commuting pair:
// Z^n --d2--> Z^2n --d1--> Z^n with d1 = (I-M2 | M1-I) and d2 stacking
// I-M1 over I-M2.
inline HomologyReport homology_complex(const IntMatrix& m1,
                                       const IntMatrix& m2) {
  if (m1.rows() != m1.cols() || m2.rows() != m2.cols() ||
      m1.rows() != m2.rows())
    throw UsageError("homology needs two square matrices of one size");
  if (mul(m1, m2) != mul(m2, m1))
    throw NotCommuting("chain complex needs M1 M2 = M2 M1");

  const std::size_t n = m1.rows();
  const IntMatrix eye = IntMatrix::identity(n);
  const IntMatrix d1 = hconcat(id_minus(m2), sub(m1, eye));
  const IntMatrix d2 = vconcat(id_minus(m1), id_minus(m2));
  if (!mul(d1, d2).is_zero())
    throw ConsistencyFailure("boundary maps do not compose to zero");

  HomologyReport rep;
  rep.h0 = coker_structure(d1);

  const IntMatrix k2 = kernel_basis(d2);
  rep.h2 = FinAbGroup{k2.cols(), {}};

  const IntMatrix k1 = kernel_basis(d1);
  IntMatrix y;
  try {
    y = solve_in_lattice(k1, d2);
  } catch (const NoIntegerSolution&) {
    throw ConsistencyFailure("interior image escapes the kernel lattice");
  }
  rep.h1 = coker_structure(y);
  return rep;
}

struct KGroups {
  FinAbGroup k0;
  FinAbGroup k1;
};

// K-groups of the rank-2 algebra of a commuting {0,1} pair: common free rank
// from the two joined cokernels, torsion split between them. Always
// recomputed through the chain complex; the two routes must agree.
inline KGroups k_theory_general(const IntMatrix& m1, const IntMatrix& m2) {
  detail::require_pair(m1, m2, "k-theory");
  if (mul(m1, m2) != mul(m2, m1))
    throw NotCommuting("k-theory needs M1 M2 = M2 M1");

  const FinAbGroup ck = coker_structure(hconcat(id_minus(m1), id_minus(m2)));
  const FinAbGroup ckt = coker_structure(
      hconcat(id_minus(transpose(m1)), id_minus(transpose(m2))));
  const std::size_t rank = ck.free_rank + ckt.free_rank;
  KGroups out{FinAbGroup{rank, ck.torsion}, FinAbGroup{rank, ckt.torsion}};

  const HomologyReport hom = homology_complex(m1, m2);
  if (!hom.h2.torsion.empty())
    throw ConsistencyFailure("second homology has torsion: " +
                             hom.h2.invariant_string());
  const FinAbGroup k0_hom{hom.h0.free_rank + hom.h2.free_rank, hom.h0.torsion};
  if (!(out.k0 == k0_hom))
    throw ConsistencyFailure("K0 routes disagree: cokernels give " +
                             out.k0.invariant_string() + ", homology gives " +
                             k0_hom.invariant_string());
  if (!(out.k1 == hom.h1))
    throw ConsistencyFailure("K1 routes disagree: cokernels give " +
                             out.k1.invariant_string() + ", homology gives " +
                             hom.h1.invariant_string());
  return out;
}

struct BoundReport {
  Int upper = 0;   // q^2 - 1
  Int lower = 0;   // (q-1)/gcd(q-1, 3)
  Int psi = 0;     // additive order of 3(q+1) mod q^2-1
  bool divides_upper = false;
  bool lower_divides = false;
  bool psi_divides = false;
  bool all_pass() const { return divides_upper && lower_divides && psi_divides; }
};

// Divisibility facts the identity class order must satisfy. Returns the
// report; callers abort on failure.
inline BoundReport identity_bounds_check(int q, const Int& order) {
  if (q < 2) throw UsageError("order bound check needs q >= 2");
  if (order <= 0) throw UsageError("order bound check needs a positive order");
  BoundReport b;
  b.upper = Int(q) * q - 1;
  b.lower = Int(q - 1) / gcd(Int(q - 1), Int(3));
  b.psi = b.upper / gcd(b.upper, Int(3) * (q + 1));
  b.divides_upper = b.upper % order == 0;
  b.lower_divides = order % b.lower == 0;
  b.psi_divides = order % b.psi == 0;
  return b;
}

// Order of q times the all-ones class in the joined cokernel, from an SNF
// that carries the left transform.
inline Int identity_class_order(int q, int n, const SmithForm& joined_snf) {
  IntMatrix v(static_cast<std::size_t>(n), 1);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    v.e(i, 0) = q;
  std::optional<Int> ord = element_order_from_snf(joined_snf, v);
  if (!ord)
    throw InfiniteOrder("identity class has infinite order in the cokernel");
  return *ord;
}

struct KTheoryReport {
  std::string source;
  int q = 0;
  int n = 0;  // alphabet size
  FinAbGroup coker;  // joined-matrix cokernel: Z^r + T
  FinAbGroup k0;
  FinAbGroup k1;
  Int identity_order = 0;
  Int conjectured_order = 0;
  bool conjecture_agreement = false;
  bool rank_one_ck = false;
  bool hat_check_agreement = false;
  StructuralChecks hat_checks;
  StructuralChecks check_checks;
  BoundReport bounds;
};

// Full pipeline for a validated presentation: build both transition pairs,
// take the joined cokernel both ways and demand agreement, assemble the
// K-groups, and attach the identity class order with its bound checks.
inline KTheoryReport k_theory_a2(const ValidatedPresentation& vp,
                                 std::string source = "") {
  KTheoryReport rep;
  rep.source = std::move(source);
  rep.q = vp.q();
  rep.n = vp.alphabet_size();

  const TransitionPair hat = build_hat(vp);
  const TransitionPair chk = build_check(vp);
  rep.hat_checks = structural_report(hat, vp);
  rep.check_checks = structural_report(chk, vp);

  const IntMatrix jh = hconcat(id_minus(hat.m1), id_minus(hat.m2));
  const SmithForm sh = snf(jh, Transforms::left);
  rep.coker = coker_from_snf(sh);

  const FinAbGroup down =
      coker_structure(hconcat(id_minus(chk.m1), id_minus(chk.m2)));
  if (!(down == rep.coker))
    throw ConsistencyFailure("joined cokernels disagree: upward " +
                             rep.coker.invariant_string() + ", downward " +
                             down.invariant_string());
  rep.hat_check_agreement = true;

  rep.k0 = FinAbGroup{2 * rep.coker.free_rank, rep.coker.torsion};
  rep.k1 = rep.k0;
  rep.rank_one_ck = rep.coker.torsion.empty();

  rep.identity_order = identity_class_order(rep.q, rep.n, sh);
  rep.bounds = identity_bounds_check(rep.q, rep.identity_order);
  if (!rep.bounds.all_pass())
    throw ConsistencyFailure("identity class order " +
                             rep.identity_order.get_str() +
                             " violates its divisibility bounds");

  rep.conjectured_order =
      rep.q % 3 == 1 ? Int((rep.q - 1) / 3) : Int(rep.q - 1);
  rep.conjecture_agreement = rep.identity_order == rep.conjectured_order;
  return rep;
}

}  // namespace a2ck

#endif
