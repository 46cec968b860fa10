#ifndef A2CK_PLANE_HPP
#define A2CK_PLANE_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "a2ck/errors.hpp"

namespace a2ck {

struct PlaneAxiomViolation : Error {
  explicit PlaneAxiomViolation(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

struct EqualPoints : Error {
  explicit EqualPoints(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

struct EqualLines : Error {
  explicit EqualLines(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

// Finite projective plane of order q whose points and lines share the label
// set {0, .., q^2+q}. Line x is the point set line_of[x]. Construction
// validates every plane axiom exhaustively; afterwards incidence, join and
// meet are table lookups on an immutable value.
class CombinatorialPlane {
public:
  static CombinatorialPlane from_lambda(int q,
                                        std::vector<std::vector<int>> line_of);

  int order() const { return q_; }
  int point_count() const { return n_; }

  // Points on the line labeled x, sorted ascending.
  const std::vector<int>& line(int x) const {
    check_index(x);
    return line_of_[static_cast<std::size_t>(x)];
  }

  // True iff point y lies on the line labeled x.
  bool incident(int y, int x) const {
    check_index(y);
    check_index(x);
    return inc_[idx(x, y)] != 0;
  }

  // Label of the unique line through two distinct points.
  int join_points(int p, int pp) const {
    check_index(p);
    check_index(pp);
    if (p == pp)
      throw EqualPoints("join of point " + std::to_string(p) +
                        " with itself is undefined");
    return join_[idx(p, pp)];
  }

  // The unique point common to two distinct lines.
  int meet_lines(int x, int xp) const {
    check_index(x);
    check_index(xp);
    if (x == xp)
      throw EqualLines("meet of line " + std::to_string(x) +
                       " with itself is undefined");
    return meet_[idx(x, xp)];
  }

private:
  CombinatorialPlane(int q, std::vector<std::vector<int>> line_of)
      : q_(q), n_(q * q + q + 1), line_of_(std::move(line_of)) {}

  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  void check_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("point index");
  }

  int q_;
  int n_;
  std::vector<std::vector<int>> line_of_;
  std::vector<char> inc_;   // inc_[x*n+y]: y on line x
  std::vector<int> join_;   // join_[p*n+p']: line through p, p' (diag -1)
  std::vector<int> meet_;   // meet_[x*n+x']: point on lines x, x' (diag -1)
};

inline CombinatorialPlane CombinatorialPlane::from_lambda(
    int q, std::vector<std::vector<int>> line_of) {
  if (q < 2)
    throw PlaneAxiomViolation("plane order must be at least 2, got " +
                              std::to_string(q));
  const int n = q * q + q + 1;
  if (line_of.size() != static_cast<std::size_t>(n))
    throw PlaneAxiomViolation("expected " + std::to_string(n) +
                              " line sets, got " +
                              std::to_string(line_of.size()));

  for (int x = 0; x < n; ++x) {
    auto& pts = line_of[static_cast<std::size_t>(x)];
    for (int p : pts)
      if (p < 0 || p >= n)
        throw PlaneAxiomViolation("line " + std::to_string(x) +
                                  " contains out-of-range point " +
                                  std::to_string(p));
    std::sort(pts.begin(), pts.end());
    auto dup = std::adjacent_find(pts.begin(), pts.end());
    if (dup != pts.end())
      throw PlaneAxiomViolation("line " + std::to_string(x) +
                                " repeats point " + std::to_string(*dup));
    if (pts.size() != static_cast<std::size_t>(q + 1))
      throw PlaneAxiomViolation("line " + std::to_string(x) + " has " +
                                std::to_string(pts.size()) +
                                " points, expected " + std::to_string(q + 1));
  }

  CombinatorialPlane pl(q, std::move(line_of));
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  pl.inc_.assign(nn, 0);
  for (int x = 0; x < n; ++x)
    for (int p : pl.line_of_[static_cast<std::size_t>(x)]) pl.inc_[pl.idx(x, p)] = 1;

  // Two distinct lines meet in exactly one point. Checked first so that a
  // non-injective lambda is reported as the pair of equal lines.
  pl.meet_.assign(nn, -1);
  for (int x = 0; x < n; ++x)
    for (int xp = x + 1; xp < n; ++xp) {
      int found = -1;
      for (int p : pl.line_of_[static_cast<std::size_t>(x)]) {
        if (!pl.inc_[pl.idx(xp, p)]) continue;
        if (found >= 0)
          throw PlaneAxiomViolation(
              "lines " + std::to_string(x) + " and " + std::to_string(xp) +
              " share two points, " + std::to_string(found) + " and " +
              std::to_string(p));
        found = p;
      }
      if (found < 0)
        throw PlaneAxiomViolation("lines " + std::to_string(x) + " and " +
                                  std::to_string(xp) + " share no point");
      pl.meet_[pl.idx(x, xp)] = found;
      pl.meet_[pl.idx(xp, x)] = found;
    }

  // Two distinct points determine exactly one line.
  pl.join_.assign(nn, -1);
  for (int p = 0; p < n; ++p)
    for (int pp = p + 1; pp < n; ++pp) {
      int found = -1;
      for (int x = 0; x < n; ++x) {
        if (!pl.inc_[pl.idx(x, p)] || !pl.inc_[pl.idx(x, pp)]) continue;
        if (found >= 0)
          throw PlaneAxiomViolation(
              "points " + std::to_string(p) + " and " + std::to_string(pp) +
              " lie on two common lines, " + std::to_string(found) + " and " +
              std::to_string(x));
        found = x;
      }
      if (found < 0)
        throw PlaneAxiomViolation("points " + std::to_string(p) + " and " +
                                  std::to_string(pp) +
                                  " lie on no common line");
      pl.join_[pl.idx(p, pp)] = found;
      pl.join_[pl.idx(pp, p)] = found;
    }

  // Each point lies on exactly q+1 lines. Implied by the pair axioms and the
  // counting identity, but cheap to confirm directly.
  for (int p = 0; p < n; ++p) {
    int deg = 0;
    for (int x = 0; x < n; ++x) deg += pl.inc_[pl.idx(x, p)];
    if (deg != q + 1)
      throw PlaneAxiomViolation("point " + std::to_string(p) + " lies on " +
                                std::to_string(deg) + " lines, expected " +
                                std::to_string(q + 1));
  }

  return pl;
}

}  // namespace a2ck

#endif
