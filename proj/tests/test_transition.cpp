#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "a2ck/presentation.hpp"
#include "a2ck/transition.hpp"
#include "a2ck/zmat.hpp"
#include "catch_printers.hpp"

using a2ck::build_check;
using a2ck::build_hat;
using a2ck::builtin;
using a2ck::IntMatrix;
using a2ck::PairKind;
using a2ck::structural_report;
using a2ck::TransitionPair;
using a2ck::transpose;
using a2ck::Triple;
using a2ck::union_strongly_connected;
using a2ck::validate;
using a2ck::ValidatedPresentation;

TEST_CASE("built pairs have unit entries and square q sums") {
  for (const char* name : {"B.2", "C.1"}) {
    auto vp = validate(builtin(name));
    for (auto kind : {PairKind::hat, PairKind::check}) {
      auto tp = kind == PairKind::hat ? build_hat(vp) : build_check(vp);
      REQUIRE(tp.n == 21);
      REQUIRE(tp.m1.rows() == 21);
      REQUIRE(tp.m1.cols() == 21);
      CHECK(tp.m1.is_zero_one());
      CHECK(tp.m2.is_zero_one());
      for (const auto* m : {&tp.m1, &tp.m2}) {
        for (const auto& s : a2ck::row_sums(*m)) CHECK(s == 4);
        for (const auto& s : a2ck::col_sums(*m)) CHECK(s == 4);
      }
    }
  }
}

TEST_CASE("hat columns match the completion-map construction") {
  // Each column of the first matrix must consist of exactly the triples
  // (join(b1,a2), b1, completion(join(b1,a2), b1)) for the q^2 points b1 off
  // the line a1; similarly for the second matrix with lines through a2.
  // This rebuilds every column without evaluating the incidence rules.
  for (const char* name : {"B.2", "C.1"}) {
    auto vp = validate(builtin(name));
    auto tp = build_hat(vp);
    const auto& pl = vp.plane();
    const auto& hat = vp.alphabet();
    const int n = vp.alphabet_size();

    for (int a = 0; a < n; ++a) {
      const Triple& ta = hat[static_cast<std::size_t>(a)];

      std::set<int> col1;
      for (int b1 = 0; b1 < pl.point_count(); ++b1) {
        if (pl.incident(b1, ta.a1)) continue;
        int b0 = pl.join_points(b1, ta.a2);
        int b2 = vp.completion(b0, b1);
        REQUIRE(b2 >= 0);
        int row = vp.index_of({b0, b1, b2});
        REQUIRE(row >= 0);
        col1.insert(row);
      }
      REQUIRE(col1.size() == 4);
      for (int b = 0; b < n; ++b)
        CHECK(tp.m1.e(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) ==
              (col1.count(b) ? 1 : 0));

      std::set<int> col2;
      for (int b2 = 0; b2 < pl.point_count(); ++b2) {
        if (pl.incident(ta.a2, b2)) continue;
        int b0 = pl.meet_lines(ta.a1, b2);
        int b1 = vp.completion(b2, b0);
        REQUIRE(b1 >= 0);
        int row = vp.index_of({b0, b1, b2});
        REQUIRE(row >= 0);
        col2.insert(row);
      }
      REQUIRE(col2.size() == 4);
      for (int b = 0; b < n; ++b)
        CHECK(tp.m2.e(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) ==
              (col2.count(b) ? 1 : 0));
    }
  }
}

TEST_CASE("named column of the first builtin") {
  auto vp = validate(builtin("B.2"));
  auto tp = build_hat(vp);
  int a = vp.index_of({0, 1, 4});
  REQUIRE(a >= 0);
  int ones = 0;
  for (int b = 0; b < tp.n; ++b)
    if (tp.m1.e(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) == 1)
      ++ones;
  CHECK(ones == 4);
}

TEST_CASE("check pair is the swapped transpose of the hat pair") {
  for (const char* name : {"B.2", "C.1"}) {
    auto vp = validate(builtin(name));
    auto h = build_hat(vp);
    auto c = build_check(vp);
    CHECK(c.m1 == transpose(h.m2));
    CHECK(c.m2 == transpose(h.m1));
  }
}

TEST_CASE("construction is deterministic") {
  auto vp = validate(builtin("B.2"));
  auto t1 = build_hat(vp);
  auto t2 = build_hat(vp);
  CHECK(t1.m1 == t2.m1);
  CHECK(t1.m2 == t2.m2);
}

TEST_CASE("structural report passes on built pairs") {
  for (const char* name : {"B.2", "C.1"}) {
    auto vp = validate(builtin(name));
    for (auto kind : {PairKind::hat, PairKind::check}) {
      auto tp = kind == PairKind::hat ? build_hat(vp) : build_check(vp);
      auto rep = structural_report(tp, vp);
      CHECK(rep.entries01.pass);
      CHECK(rep.row_col_sums.pass);
      CHECK(rep.transpose_identity.pass);
      CHECK(rep.union_connected.pass);
      CHECK(rep.all_pass());
    }
  }
}

TEST_CASE("structural report flags corrupted pairs with a witness") {
  auto vp = validate(builtin("B.2"));

  SECTION("zeroed row") {
    auto tp = build_hat(vp);
    for (std::size_t j = 0; j < 21; ++j) tp.m1.e(5, j) = 0;
    auto rep = structural_report(tp, vp);
    CHECK_FALSE(rep.row_col_sums.pass);
    CHECK_THAT(rep.row_col_sums.detail,
               Catch::Matchers::ContainsSubstring("row 5"));
    CHECK_FALSE(rep.transpose_identity.pass);
  }
  SECTION("entry outside zero and one") {
    auto tp = build_hat(vp);
    tp.m2.e(3, 7) = 2;
    auto rep = structural_report(tp, vp);
    CHECK_FALSE(rep.entries01.pass);
    CHECK_THAT(rep.entries01.detail,
               Catch::Matchers::ContainsSubstring("(3, 7)"));
  }
  SECTION("report on a check pair compares against hat") {
    auto tp = build_check(vp);
    tp.m1.e(0, 0) = tp.m1.e(0, 0) == 0 ? 1 : 0;
    auto rep = structural_report(tp, vp);
    CHECK_FALSE(rep.transpose_identity.pass);
  }
}

TEST_CASE("union digraph connectivity") {
  auto cyc = IntMatrix::from_rows({{0, 1}, {1, 0}});
  auto zero2 = IntMatrix(2, 2);
  auto id2 = IntMatrix::identity(2);
  CHECK(union_strongly_connected(cyc, zero2));
  CHECK(union_strongly_connected(cyc, id2));
  CHECK_FALSE(union_strongly_connected(id2, id2));
  CHECK_FALSE(union_strongly_connected(zero2, zero2));
  CHECK(union_strongly_connected(IntMatrix(1, 1), IntMatrix(1, 1)));

  // One-way edge chain is connected only with the return edge.
  auto up = IntMatrix::from_rows({{0, 0}, {1, 0}});
  CHECK_FALSE(union_strongly_connected(up, up));
  auto down = IntMatrix::from_rows({{0, 1}, {0, 0}});
  CHECK(union_strongly_connected(up, down));

  CHECK_THROWS_AS(union_strongly_connected(IntMatrix(2, 3), IntMatrix(2, 3)),
                  a2ck::UsageError);
}
