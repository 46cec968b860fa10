#ifndef A2CK_TRANSITION_HPP
#define A2CK_TRANSITION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "a2ck/errors.hpp"
#include "a2ck/presentation.hpp"
#include "a2ck/zmat.hpp"

namespace a2ck {

enum class PairKind { hat, check };

inline const char* pair_kind_name(PairKind k) {
  return k == PairKind::hat ? "hat" : "check";
}

// One-step transition matrices over a triangle alphabet, indexed by the
// lexicographic order of ValidatedPresentation::alphabet(). Column a, row b:
// entry 1 means triangle b can follow triangle a in direction 1 resp. 2.
struct TransitionPair {
  PairKind kind = PairKind::hat;
  int n = 0;
  IntMatrix m1;
  IntMatrix m2;
};

namespace detail {

// The rule preconditions below hold for every validated presentation,
// so a failure is a bug in this file or in validation, never a data problem.
inline void rule_fact(bool fact, const char* what) {
  if (!fact)
    throw ConsistencyFailure(std::string("transition rule precondition '") +
                             what + "' failed on a validated presentation");
}

}  // namespace detail

inline TransitionPair build_hat(const ValidatedPresentation& vp) {
  const auto& hat = vp.alphabet();
  const auto& pl = vp.plane();
  const std::size_t n = hat.size();
  TransitionPair tp{PairKind::hat, static_cast<int>(n), IntMatrix(n, n),
                    IntMatrix(n, n)};
  for (std::size_t a = 0; a < n; ++a) {
    const Triple& ta = hat[a];
    for (std::size_t b = 0; b < n; ++b) {
      const Triple& tb = hat[b];
      // Direction 1: b sits on the line joining b1 to a2, off the line a1.
      if (!pl.incident(tb.a1, ta.a1)) {
        detail::rule_fact(tb.a1 != ta.a2, "b1 != a2");
        if (pl.join_points(tb.a1, ta.a2) == tb.a0) tp.m1.e(b, a) = 1;
      }
      // Direction 2: b starts where the lines a1 and b2 meet, a2 off line b2.
      if (!pl.incident(ta.a2, tb.a2)) {
        detail::rule_fact(ta.a1 != tb.a2, "a1 != b2");
        if (pl.meet_lines(ta.a1, tb.a2) == tb.a0) tp.m2.e(b, a) = 1;
      }
    }
  }
  return tp;
}

inline TransitionPair build_check(const ValidatedPresentation& vp) {
  const auto& hat = vp.alphabet();
  const auto& pl = vp.plane();
  const std::size_t n = hat.size();
  TransitionPair tp{PairKind::check, static_cast<int>(n), IntMatrix(n, n),
                    IntMatrix(n, n)};
  for (std::size_t a = 0; a < n; ++a) {
    const Triple& ta = hat[a];
    for (std::size_t b = 0; b < n; ++b) {
      const Triple& tb = hat[b];
      if (!pl.incident(tb.a2, ta.a2)) {
        detail::rule_fact(tb.a1 != ta.a2, "b1 != a2");
        if (pl.meet_lines(tb.a1, ta.a2) == ta.a0) tp.m1.e(b, a) = 1;
      }
      if (!pl.incident(ta.a1, tb.a1)) {
        detail::rule_fact(ta.a1 != tb.a2, "a1 != b2");
        if (pl.join_points(ta.a1, tb.a2) == ta.a0) tp.m2.e(b, a) = 1;
      }
    }
  }
  return tp;
}

// True iff the digraph with an edge a -> b whenever m1(b,a)=1 or m2(b,a)=1
// is strongly connected. Reachability both ways from node 0 suffices.
inline bool union_strongly_connected(const IntMatrix& m1, const IntMatrix& m2) {
  const std::size_t n = m1.rows();
  if (m1.cols() != n || m2.rows() != n || m2.cols() != n)
    throw UsageError("connectivity check needs two square matrices of one size");
  if (n == 0) return true;

  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (seen[w]) continue;
        // Forward edge v -> w is entry (w, v); backward scans the transpose.
        bool edge = forward ? (m1.e(w, v) != 0 || m2.e(w, v) != 0)
                            : (m1.e(v, w) != 0 || m2.e(v, w) != 0);
        if (!edge) continue;
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
    return count == n;
  };
  return reach(true) && reach(false);
}

struct CheckResult {
  bool pass = true;
  std::string detail;
};

struct StructuralChecks {
  CheckResult entries01;
  CheckResult row_col_sums;
  CheckResult transpose_identity;
  CheckResult union_connected;
  bool all_pass() const {
    return entries01.pass && row_col_sums.pass && transpose_identity.pass &&
           union_connected.pass;
  }
};

namespace detail {

inline CheckResult check_entries01(const TransitionPair& tp) {
  for (const IntMatrix* m : {&tp.m1, &tp.m2}) {
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j) {
        const Int& v = m->e(i, j);
        if (v != 0 && v != 1)
          return {false, std::string("matrix ") +
                             (m == &tp.m1 ? "1" : "2") + " entry (" +
                             std::to_string(i) + ", " + std::to_string(j) +
                             ") is " + v.get_str()};
      }
  }
  return {};
}

inline CheckResult check_sums(const TransitionPair& tp, int q) {
  const Int want = Int(q) * q;
  int which = 0;
  for (const IntMatrix* m : {&tp.m1, &tp.m2}) {
    ++which;
    auto rs = row_sums(*m);
    auto cs = col_sums(*m);
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (rs[i] != want)
        return {false, "row " + std::to_string(i) + " of matrix " +
                           std::to_string(which) + " sums to " +
                           rs[i].get_str() + ", expected " + want.get_str()};
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (cs[j] != want)
        return {false, "column " + std::to_string(j) + " of matrix " +
                           std::to_string(which) + " sums to " +
                           cs[j].get_str() + ", expected " + want.get_str()};
  }
  return {};
}

}  // namespace detail

// Structural facts about a built pair: {0,1} entries, q^2 row and column
// sums, agreement with the opposite-orientation pair via transposes, and
// strong connectivity of the union digraph. Failures are reported with a
// witness, never thrown.
inline StructuralChecks structural_report(const TransitionPair& tp,
                                          const ValidatedPresentation& vp) {
  if (tp.m1.rows() != tp.m1.cols() || tp.m2.rows() != tp.m2.cols() ||
      tp.m1.rows() != tp.m2.rows())
    throw UsageError("transition pair matrices must be square and same size");

  StructuralChecks out;
  out.entries01 = detail::check_entries01(tp);
  out.row_col_sums = detail::check_sums(tp, vp.q());

  TransitionPair other =
      tp.kind == PairKind::hat ? build_check(vp) : build_hat(vp);
  const TransitionPair& h = tp.kind == PairKind::hat ? tp : other;
  const TransitionPair& c = tp.kind == PairKind::hat ? other : tp;
  if (c.m1 != transpose(h.m2))
    out.transpose_identity = {
        false, "check matrix 1 differs from the transpose of hat matrix 2"};
  else if (c.m2 != transpose(h.m1))
    out.transpose_identity = {
        false, "check matrix 2 differs from the transpose of hat matrix 1"};

  if (!union_strongly_connected(tp.m1, tp.m2))
    out.union_connected = {false, "union digraph is not strongly connected"};
  return out;
}

}  // namespace a2ck

#endif
