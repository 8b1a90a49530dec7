#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "propact/weyl.hpp"

using namespace propact;

namespace {

WeylGroup group_of(const char* name) { return WeylGroup(RootSystem(parse_root_system_type(name))); }

bool is_dominant(const WeylGroup& w, const RatVec& x) {
  for (const auto& a : w.simple_roots())
    if (dot(a, x) < 0) return false;
  return true;
}

RatMat word_matrix(const WeylGroup& w, const std::vector<int>& word) {
  RatMat m = RatMat::Identity(w.ambient_dim(), w.ambient_dim());
  for (int g : word) m = (m * w.generators()[static_cast<std::size_t>(g)].matrix()).eval();
  return m;
}

RatVec random_in_span(std::mt19937& rng, const WeylGroup& w, int bound = 4) {
  std::uniform_int_distribution<int> d(-bound, bound);
  RatVec x = RatVec::Zero(w.ambient_dim());
  for (const auto& a : w.simple_roots()) x += Rational(d(rng)) * a;
  return x;
}

}  // namespace

TEST_CASE("reflections") {
  const RootSystem a2(parse_root_system_type("A2"));
  const auto s = reflection_matrix(a2, vec({1, -1, 0}));
  CHECK(s(vec({5, 7, 9})) == vec({7, 5, 9}));

  const RootSystem d4(parse_root_system_type("D4"));
  CHECK(reflection_matrix(d4, vec({1, 1, 0, 0}))(vec({1, 2, 3, 4})) == vec({-2, -1, 3, 4}));

  const RootSystem b2(parse_root_system_type("B2"));
  CHECK(reflection_matrix(b2, vec({0, 1}))(vec({3, 5})) == vec({3, -5}));

  CHECK_THROWS_AS(reflection_matrix(b2, vec({0, 2})), NotARoot);
  CHECK_THROWS_AS(reflection(vec({0, 0})), ZeroVector);
}

TEST_CASE("reflections are involutive isometries preserving the roots") {
  for (const char* n : {"A3", "B3", "C3", "D4", "G2", "F4", "BC2", "E6"}) {
    const RootSystem rs(parse_root_system_type(n));
    std::set<RatVec, LexLess> roots(rs.roots().begin(), rs.roots().end());
    for (const auto& a : rs.roots()) {
      const auto s = reflection_matrix(rs, a);
      const Index d = rs.ambient_dim();
      CHECK(s.matrix() * s.matrix() == RatMat::Identity(d, d));
      CHECK(s.matrix().transpose() * s.matrix() == RatMat::Identity(d, d));
      CHECK(s(a) == RatVec(-a));
      for (const auto& b : rs.roots()) CHECK(roots.count(s(b)) == 1);
    }
  }
}

TEST_CASE("longest element examples") {
  const WeylGroup a1 = group_of("A1");
  const auto w0a1 = longest_element(a1);
  CHECK(w0a1(vec({1, -1})) == vec({-1, 1}));

  // On A2 the longest element reverses coordinates; -w0 then fixes (1,0,-1).
  const WeylGroup a2 = group_of("A2");
  const auto w0 = longest_element(a2);
  CHECK(w0(vec({1, 2, 3})) == vec({3, 2, 1}));
  REQUIRE(w0.word());
  CHECK(w0.word()->size() == 3);

  const WeylGroup d4 = group_of("D4");
  CHECK(longest_element(d4).matrix() == RatMat(-RatMat::Identity(4, 4)));
}

TEST_CASE("longest element: involution, sends simple roots to negatives, length |Σ⁺|") {
  for (const char* n : {"A1", "A2", "A3", "A5", "B2", "B4", "C3", "D3", "D4", "D5", "G2", "F4", "BC3", "E6", "E7",
                        "E8"}) {
    const auto t = parse_root_system_type(n);
    const WeylGroup w(RootSystem{t});
    const auto w0 = longest_element(w);
    CAPTURE(n);
    const Index d = w.ambient_dim();
    CHECK(w0.matrix() * w0.matrix() == RatMat::Identity(d, d));
    std::set<RatVec, LexLess> neg;
    for (const auto& a : w.simple_roots()) neg.insert(RatVec(-a));
    for (const auto& a : w.simple_roots()) CHECK(neg.count(w0(a)) == 1);
    REQUIRE(w0.word());
    CHECK(static_cast<int>(w0.word()->size()) == oracle::longest_length(t));
    CHECK(word_matrix(w, *w0.word()) == w0.matrix());
    if (t.family != Family::E && t.family != Family::F && t.family != Family::G) {
      const RatVec x = oracle::to_vec(oracle::principal_h_a(static_cast<int>(d) - 1));
      CHECK(w0(x) == oracle::to_vec(oracle::classical_w0(t.family == Family::BC ? Family::B : t.family,
                                                         oracle::coords(x))));
    }
  }
}

TEST_CASE("minus w0 fixed space") {
  CHECK(minus_w0_fixed_space(group_of("A2")) == span({vec({1, 0, -1})}));
  CHECK(minus_w0_fixed_space(group_of("D4")) == Subspace::full(4));
  CHECK(minus_w0_fixed_space(group_of("A3")) == span({vec({1, 0, 0, -1}), vec({0, 1, -1, 0})}));
  for (const char* n : {"A1", "A4", "A7", "B3", "C4", "D5", "D6", "G2", "F4", "E6", "E7", "E8", "BC2"}) {
    const auto t = parse_root_system_type(n);
    CAPTURE(n);
    CHECK(minus_w0_fixed_space(WeylGroup(RootSystem{t})).dim() == oracle::ahyp(t));
  }
}

TEST_CASE("dominant representatives") {
  const WeylGroup a2 = group_of("A2");
  auto [p, u] = dominant_representative(a2, vec({-1, 0, 1}));
  CHECK(p == vec({1, 0, -1}));
  CHECK(u(vec({-1, 0, 1})) == p);

  const WeylGroup d4 = group_of("D4");
  auto [q, v] = dominant_representative(d4, vec({6, 2, 0, 4}));
  CHECK(q == vec({6, 4, 2, 0}));
  CHECK(v(vec({6, 2, 0, 4})) == q);

  auto [z, id] = dominant_representative(d4, RatVec::Zero(4));
  CHECK(is_zero(z));
  CHECK(id.is_identity());
}

TEST_CASE("property: dominant representative matches sorting") {
  std::mt19937 rng(31337);
  for (const char* n : {"A3", "B3", "C2", "D4", "D5", "BC2"}) {
    const auto t = parse_root_system_type(n);
    const WeylGroup w(RootSystem{t});
    const Family f = t.family == Family::BC ? Family::B : t.family;
    for (int trial = 0; trial < 60; ++trial) {
      const RatVec x = random_in_span(rng, w);
      const auto [p, u] = dominant_representative(w, x);
      CHECK(is_dominant(w, p));
      CHECK(u(x) == p);
      CHECK(p == oracle::to_vec(oracle::classical_dominant(f, oracle::coords(x))));
      REQUIRE(u.word());
      CHECK(word_matrix(w, *u.word()) == u.matrix());
    }
  }
}

TEST_CASE("vector orbits") {
  const WeylGroup a2 = group_of("A2");
  CHECK(orbit_of_vector(a2, vec({1, 0, -1})).size() == 6);
  CHECK(orbit_of_vector(a2, vec({1, 1, -2})).size() == 3);
  CHECK(orbit_of_vector(group_of("D4"), vec({6, 4, 2, 0})).size() == 192);
  CHECK_THROWS_AS(orbit_of_vector(group_of("D4").with_cap(100), vec({6, 4, 2, 0})), EnumerationCapExceeded);
}

TEST_CASE("property: orbits agree with signed permutations") {
  std::mt19937 rng(4242);
  for (const char* n : {"A2", "A3", "B2", "B3", "C3", "D4", "BC2"}) {
    const auto t = parse_root_system_type(n);
    const WeylGroup w(RootSystem{t});
    const Family f = t.family == Family::BC ? Family::B : t.family;
    for (int trial = 0; trial < 25; ++trial) {
      const RatVec x = random_in_span(rng, w, 2);
      const VectorSet got = orbit_of_vector(w, x);
      const auto want = oracle::classical_orbit(f, oracle::coords(x));
      CHECK(got.size() == want.size());
      for (const auto& y : got) CHECK(want.count(oracle::coords(y)) == 1);
      CHECK(w.order() % got.size() == 0);
      // Every orbit member reduces to the same dominant point, and exactly one is dominant.
      const RatVec p = dominant_representative(w, x).first;
      int dominant_count = 0;
      for (const auto& y : got) {
        CHECK(dominant_representative(w, y).first == p);
        dominant_count += is_dominant(w, y);
      }
      CHECK(dominant_count == 1);
    }
  }
}

TEST_CASE("regular dominant vectors have trivial stabilizer") {
  for (const char* n : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    const WeylGroup w = group_of(n);
    RatVec rho = solve_in_span(w.simple_roots(), RatVec::Constant(w.rank(), Rational(1)), w.ambient_dim());
    CAPTURE(n);
    CHECK(orbit_of_vector(w, rho).size() == w.order());
    int fixing = 0;
    for (const auto& g : enumerate_group(w)) fixing += g(rho) == rho;
    CHECK(fixing == 1);
  }
}

TEST_CASE("orbit meets subspace") {
  const WeylGroup d4 = group_of("D4");
  const Subspace u1 = span({vec({3, 1, 0, 2}), vec({2, 0, 0, 1}), vec({0, 0, 1, 0})});
  const auto w = orbit_meets_subspace(d4, vec({6, 4, 2, 0}), u1);
  REQUIRE(w);
  CHECK(u1.contains((*w)(vec({6, 4, 2, 0}))));
  CHECK((*w)(vec({6, 4, 2, 0})) == vec({6, 2, 0, 4}));

  const WeylGroup a2 = group_of("A2");
  const auto v = orbit_meets_subspace(a2, vec({2, 0, -2}), span({vec({1, -1, 0})}));
  REQUIRE(v);
  CHECK((*v)(vec({2, 0, -2})) == vec({2, -2, 0}));

  CHECK_FALSE(orbit_meets_subspace(group_of("A3"), vec({3, 1, -1, -3}), span({vec({1, -1, 0, 0})})));
}

TEST_CASE("subspace orbits") {
  const WeylGroup a2 = group_of("A2");
  const auto lines = orbit_of_subspace(a2, span({vec({1, -1, 0})}));
  CHECK(lines.size() == 3);
  for (const auto& l : lines) CHECK(l.dim() == 1);
  const WeylGroup d4 = group_of("D4");
  CHECK(orbit_of_subspace(d4, Subspace::full(4)).size() == 1);
  const auto zero = orbit_of_subspace(d4, Subspace::zero(4));
  REQUIRE(zero.size() == 1);
  CHECK(zero.begin()->is_zero());
  CHECK_THROWS_AS(orbit_of_subspace(d4.with_cap(10), Subspace::full(4)), EnumerationCapExceeded);
}

TEST_CASE("walls containing fixed sets") {
  const RootSystem a2rs(parse_root_system_type("A2"));
  const WeylGroup a2(a2rs);
  CHECK(wall_containing_fixed_set(a2, reflection_matrix(a2rs, vec({1, -1, 0}))) == vec({1, -1, 0}));

  const WeylGroup b2 = group_of("B2");
  const auto rot = b2.generators()[0] * b2.generators()[1];
  // Zero fixed space: every root qualifies, the first positive one in lexicographic order is returned.
  CHECK(wall_containing_fixed_set(b2, rot) == vec({0, 1}));

  CHECK_THROWS_AS(wall_containing_fixed_set(b2, WeylElement::identity(2)), NoWall);

  // D4 with h = A1 + A1 on {±(e1-e2), ±(e1+e2)}: u = w0 w0^h.
  const RootSystem d4rs(parse_root_system_type("D4"));
  const WeylGroup d4(d4rs);
  const auto w0h = reflection_matrix(d4rs, vec({1, -1, 0, 0})) * reflection_matrix(d4rs, vec({1, 1, 0, 0}));
  const auto u = longest_element(d4) * w0h;
  const RatVec alpha = wall_containing_fixed_set(d4, u);
  const Subspace fixed = Subspace::from_rows(kernel(RatMat(u.matrix() - RatMat::Identity(4, 4))));
  CHECK(fixed == span({vec({1, 0, 0, 0}), vec({0, 1, 0, 0})}));
  for (Index i = 0; i < fixed.dim(); ++i) CHECK(dot(alpha, fixed.basis_vector(i)) == 0);
  CHECK(d4rs.contains(alpha));
}

TEST_CASE("group orders by word BFS") {
  for (const char* n : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "D4", "BC2", "F4"}) {
    const auto t = parse_root_system_type(n);
    const WeylGroup w(RootSystem{t});
    const auto all = enumerate_group(w);
    CAPTURE(n);
    CHECK(all.size() == oracle::weyl_order(t));
    for (std::size_t i = 0; i < all.size(); i += 1 + all.size() / 50) {
      REQUIRE(all[i].word());
      CHECK(word_matrix(w, *all[i].word()) == all[i].matrix());
    }
  }
  CHECK_THROWS_AS(enumerate_group(group_of("E8")), EnumerationCapExceeded);
}

TEST_CASE("element algebra") {
  const WeylGroup a3 = group_of("A3");
  const auto& g = a3.generators();
  const auto x = g[0] * g[1] * g[2];
  REQUIRE(x.word());
  CHECK(*x.word() == std::vector<int>{0, 1, 2});
  CHECK((x * x.inverse()).is_identity());
  REQUIRE(x.inverse().word());
  CHECK(*x.inverse().word() == std::vector<int>{2, 1, 0});
  CHECK(a3.reflect(1, vec({1, 2, 3, 4})) == g[1](vec({1, 2, 3, 4})));
}
