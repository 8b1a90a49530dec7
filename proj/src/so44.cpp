#include "propact/so44.hpp"

#include <set>

#include "propact/criteria.hpp"
#include "propact/errors.hpp"

namespace propact::so44 {

RatVec vector_a() { return vec({3, 1, 0, 2}); }
RatVec vector_b() { return vec({2, 0, 0, 1}); }
RatVec vector_c() { return vec({0, 0, 1, 0}); }
Subspace u1() { return span({vector_a(), vector_b(), vector_c()}); }

const std::vector<Sl2SemisimpleRow>& table2() {
  static const std::vector<Sl2SemisimpleRow> rows = {
      {vec({6, 4, 2, 0}), vec({6, 2, 0, 4}), {2, 0, 0}},
      {vec({4, 2, 2, 0}), vec({4, 0, 2, 2}), {0, 2, 2}},
      {vec({3, 3, 1, 1}), vec({-3, 1, 3, -1}), {1, -3, 3}},
      {vec({3, 3, 1, -1}), vec({-3, 1, -3, -1}), {1, -3, -3}},
      {vec({4, 2, 0, 0}), vec({4, 0, 0, 2}), {0, 2, 0}},
      {vec({2, 1, 1, 0}), vec({2, 0, 1, 1}), {0, 1, 1}},
      {vec({1, 1, 1, 1}), vec({1, 1, 1, 1}), {1, -1, 1}},
      {vec({1, 1, 1, -1}), vec({1, 1, -1, 1}), {1, -1, -1}},
      {vec({2, 0, 0, 0}), vec({0, 0, 2, 0}), {0, 0, 2}},
      {vec({1, 1, 0, 0}), vec({-1, 1, 0, 0}), {1, -2, 0}},
      {vec({0, 0, 0, 0}), vec({0, 0, 0, 0}), {0, 0, 0}},
  };
  return rows;
}

const WeylGroup& d4_group() {
  static const WeylGroup w(*ambient_root_system(lookup_real_form("so(4,4)")));
  return w;
}

Table2Report verify_table2() {
  const WeylGroup& w = d4_group();
  const Subspace u = u1();
  Table2Report report;
  std::set<RatVec, LexLess> dominant;
  const auto& rows = table2();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    Table2RowCheck c;
    c.row = i + 1;
    const auto [h_plus, uh] = dominant_representative(w, row.h);
    const auto [wh_plus, uwh] = dominant_representative(w, row.wh);
    c.h_dominant = h_plus == row.h;
    c.same_orbit = h_plus == wh_plus;
    if (c.same_orbit) {
      // uwh wh = h⁺ = uh h, so (uwh⁻¹ uh) h = wh.
      WeylElement e = uwh.inverse() * uh;
      if (e(row.h) != row.wh) throw ConsistencyViolation("verify_table2: reconstructed element misses wh");
      c.u = std::move(e);
    }
    const RatVec combo = Rational(row.combo[0]) * vector_a() + Rational(row.combo[1]) * vector_b() +
                         Rational(row.combo[2]) * vector_c();
    c.combination = combo == row.wh;
    c.in_u1 = u.contains(row.wh);
    dominant.insert(h_plus);
    if (!c.ok()) {
      std::string what;
      if (!c.h_dominant) what += " h not dominant;";
      if (!c.same_orbit) what += " wh not in the orbit of h;";
      if (!c.combination) what += " combination mismatch;";
      if (!c.in_u1) what += " wh outside u1;";
      report.failures.push_back("row " + std::to_string(c.row) + " " + format_vector(row.h) + ":" + what);
    }
    report.rows.push_back(std::move(c));
  }
  report.distinct_orbits = dominant.size() == rows.size();
  if (!report.distinct_orbits) report.failures.push_back("dominant elements are not pairwise distinct");
  return report;
}

EmbeddingSpec u_spec() {
  EmbeddingSpec s;
  s.ambient = lookup_real_form("so(4,4)");
  s.subsystem_generators = {vec({-1, 1, 0, 0})};
  s.extra_abelian_vectors = {vector_b(), vector_c()};
  return s;
}

DerivedEmbedding build_u() {
  DerivedEmbedding e = derive_embedding(u_spec());
  const RatVec alpha_vee = coroot(*e.ambient_roots, vec({-1, 1, 0, 0}));
  if (alpha_vee != vec({-1, 1, 0, 0}) || !u1().contains(alpha_vee))
    throw ConsistencyViolation("build_u: coroot of -e1+e2 is not (-1,1,0,0) in u1");
  if (!(e.a_h == u1())) throw ConsistencyViolation("build_u: a_h differs from u1");
  if (!(e.h_profile == RankProfile{3, 1, false})) throw ConsistencyViolation("build_u: unexpected rank profile");
  return e;
}

NoProperSl2Report verify_no_proper_sl2() {
  const WeylGroup& w = d4_group();
  const DerivedEmbedding u = build_u();
  NoProperSl2Report report;
  const auto& rows = table2();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (is_zero(rows[i].h)) continue;
    NoProperSl2Row r;
    r.row = i + 1;
    r.h = rows[i].h;
    r.witness = sl2_obstruction(r.h, u.a_h, w);
    if (r.witness) {
      r.image = (*r.witness)(r.h);
      if (!u.a_h.contains(*r.image)) throw ConsistencyViolation("verify_no_proper_sl2: witness image escapes u1");
    }
    const auto orbit = orbit_of_vector(w, r.h);
    r.table_image_in_orbit = orbit.count(rows[i].wh) == 1 && u.a_h.contains(rows[i].wh);
    if (!r.ok()) report.failures.push_back("row " + std::to_string(r.row) + " " + format_vector(r.h) +
                                           (r.witness ? ": listed image is not a witness" : ": orbit misses u1"));
    report.rows.push_back(std::move(r));
  }
  report.dim_b = minus_w0_fixed_space(w).dim();
  report.dim_a_h = u.a_h.dim();
  report.c2_fast_path = report.dim_b > report.dim_a_h;
  if (!report.c2_fast_path) report.failures.push_back("dim b does not exceed dim a_h");
  return report;
}

}  // namespace propact::so44
