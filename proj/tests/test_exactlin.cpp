#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "propact/exactlin.hpp"

using namespace propact;

namespace {

Subspace random_subspace(std::mt19937& rng, int n, int max_vectors) {
  std::uniform_int_distribution<int> count(0, max_vectors);
  std::vector<RatVec> v;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) v.push_back(oracle::random_vector(rng, n, 2));
  return subspace_from_spanning(std::span<const RatVec>(v), n);
}

}  // namespace

TEST_CASE("rationals print in lowest terms and parse back") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("span of a single vector") {
  const Subspace s = span({vec({1, 0, -1})});
  CHECK(s.dim() == 1);
  CHECK(s.basis_vector(0) == vec({1, 0, -1}));
}

TEST_CASE("span of a, b, c is the hyperplane 2x4 = x1 + x2") {
  const Subspace s = span({vec({3, 1, 0, 2}), vec({2, 0, 0, 1}), vec({0, 0, 1, 0})});
  CHECK(s.dim() == 3);
  // Echelon form by hand: x4 = (x1 + x2)/2 with x1, x2, x3 free.
  RatMat expected(3, 4);
  expected << 1, 0, 0, Rational(1, 2), 0, 1, 0, Rational(1, 2), 0, 0, 1, 0;
  CHECK(s.basis() == expected);
  CHECK(s.contains(vec({6, 2, 0, 4})));
  CHECK_FALSE(s.contains(vec({1, 0, 0, 0})));
}

TEST_CASE("empty spanning set gives the zero subspace") {
  const std::vector<RatVec> none;
  const Subspace s = subspace_from_spanning(std::span<const RatVec>(none), 4);
  CHECK(s.is_zero());
  CHECK(s.ambient_dim() == 4);
  CHECK(s == Subspace::zero(4));
}

TEST_CASE("mixed lengths are rejected") {
  const std::vector<RatVec> v = {vec({1, 0}), vec({1, 0, 0})};
  CHECK_THROWS_AS(subspace_from_spanning(std::span<const RatVec>(v)), DimensionMismatch);
  CHECK_THROWS_AS(subspace_contains(Subspace::full(2), Subspace::full(3)), DimensionMismatch);
  CHECK_THROWS_AS(subspace_intersection(Subspace::full(2), Subspace::full(3)), DimensionMismatch);
}

TEST_CASE("containment") {
  CHECK(subspace_contains(span({vec({1, 0, -1})}), span({vec({2, 0, -2})})));
  CHECK_FALSE(subspace_contains(span({vec({1, -1, 0})}), span({vec({1, 0, -1})})));
  CHECK(subspace_contains(Subspace::zero(3), Subspace::zero(3)));
}

TEST_CASE("intersection") {
  const Subspace l = span({vec({1, -1, 0})});
  CHECK(subspace_intersection(l, l) == l);
  CHECK(subspace_intersection(l, span({vec({1, 1, -2})})).is_zero());
  const Subspace p = span({vec({1, 0, 0, 0}), vec({0, 1, 0, 0})});
  const Subspace q = span({vec({0, 1, 0, 0}), vec({0, 0, 1, 0})});
  CHECK(subspace_intersection(p, q) == span({vec({0, 1, 0, 0})}));
}

TEST_CASE("covering member") {
  const Subspace b = span({vec({1, 0, -1})});
  std::vector<Subspace> parts = {span({vec({1, -1, 0})}), span({vec({1, 0, -1})})};
  CHECK(covering_member(b, std::span<const Subspace>(parts)) == 1);

  CHECK(covering_member(Subspace::zero(3), std::span<const Subspace>(parts)) == 0);

  std::vector<Subspace> miss = {span({vec({1, -1, 0})}), span({vec({0, 1, -1})})};
  try {
    covering_member(b, std::span<const Subspace>(miss));
    FAIL("expected a not-covered error");
  } catch (const NotCovered& e) {
    CHECK(b.contains(e.certificate()));
    for (const auto& p : miss) CHECK_FALSE(p.contains(e.certificate()));
  }
}

TEST_CASE("least index wins on ties") {
  const Subspace b = span({vec({1, 0, 0})});
  std::vector<Subspace> parts = {span({vec({0, 1, 0})}), Subspace::full(3), span({vec({1, 0, 0}), vec({0, 0, 1})})};
  CHECK(covering_member(b, std::span<const Subspace>(parts)) == 1);
}

TEST_CASE("kernel and solve") {
  RatMat m(2, 3);
  m << 1, 1, 1, 0, 1, -1;
  const RatMat k = kernel(m);
  REQUIRE(k.rows() == 1);
  CHECK(is_zero(RatVec(m * k.row(0).transpose())));
  const auto x = solve(m, vec({3, 0}));
  REQUIRE(x);
  CHECK(m * *x == vec({3, 0}));
  RatMat singular(2, 2);
  singular << 1, 1, 1, 1;
  CHECK_FALSE(solve(singular, vec({1, 2})));
}

TEST_CASE("image under a matrix") {
  RatMat swap(3, 3);
  swap << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  CHECK(image(swap, span({vec({1, -1, 0})})) == span({vec({1, -1, 0})}));
  CHECK(image(swap, span({vec({1, 0, -1})})) == span({vec({0, 1, -1})}));
}

TEST_CASE("property: canonical form does not depend on the spanning set") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<RatVec> v;
    for (int i = 0; i < 1 + trial % 4; ++i) v.push_back(oracle::random_vector(rng, n));
    const Subspace s = subspace_from_spanning(std::span<const RatVec>(v), n);
    CHECK(s.dim() == oracle::rank_of(v));

    // Fresh spanning set from random combinations, plus the originals shuffled.
    std::vector<RatVec> w;
    for (std::size_t i = 0; i < v.size() + 2; ++i) {
      RatVec c = RatVec::Zero(n);
      for (const auto& x : v) c += Rational(coef(rng)) * x;
      w.push_back(c);
    }
    std::shuffle(v.begin(), v.end(), rng);
    w.insert(w.end(), v.begin(), v.end());
    const Subspace t = subspace_from_spanning(std::span<const RatVec>(w), n);
    CHECK(s == t);
    CHECK(s.basis() == t.basis());

    // Echelon shape: pivots strictly increase and are 1 with zeros above and below.
    for (Index r = 0; r < s.dim(); ++r) {
      const Index p = s.pivots()[static_cast<std::size_t>(r)];
      if (r > 0) CHECK(p > s.pivots()[static_cast<std::size_t>(r - 1)]);
      for (Index q = 0; q < s.dim(); ++q) CHECK(s.basis()(q, p) == (q == r ? Rational(1) : Rational(0)));
    }
  }
}

TEST_CASE("property: dim(u ∩ v) + dim(u + v) = dim u + dim v") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    const Subspace u = random_subspace(rng, n, n);
    const Subspace v = random_subspace(rng, n, n);
    const Subspace meet = subspace_intersection(u, v);
    const Subspace sum = subspace_sum(u, v);
    CHECK(meet.dim() + sum.dim() == u.dim() + v.dim());
    CHECK(subspace_contains(u, meet));
    CHECK(subspace_contains(v, meet));
    CHECK(subspace_contains(sum, u));
    CHECK(subspace_contains(sum, v));
    // Containment agrees with an independent rank test.
    CHECK(subspace_contains(u, v) == oracle::spans_contain(oracle::rows_of(u.basis()), oracle::rows_of(v.basis())));
  }
}

TEST_CASE("property: covering member succeeds exactly when some part contains b") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 3;
    const Subspace b = random_subspace(rng, n, 2);
    std::vector<Subspace> parts;
    for (int k = 0; k < 1 + trial % 4; ++k) parts.push_back(random_subspace(rng, n, n - 1));
    std::optional<std::size_t> expected;
    for (std::size_t j = 0; j < parts.size() && !expected; ++j)
      if (oracle::spans_contain(oracle::rows_of(parts[j].basis()), oracle::rows_of(b.basis()))) expected = j;
    if (expected) {
      CHECK(covering_member(b, std::span<const Subspace>(parts)) == *expected);
    } else {
      try {
        covering_member(b, std::span<const Subspace>(parts));
        FAIL("expected a not-covered error");
      } catch (const NotCovered& e) {
        CHECK(b.contains(e.certificate()));
        for (const auto& p : parts) CHECK_FALSE(p.contains(e.certificate()));
      }
    }
  }
}
