#include "propact/criteria.hpp"

#include "propact/errors.hpp"

namespace propact {

bool decide_c1(const RankProfile& g, const RankProfile& h) { return g.real_rank > h.real_rank; }

std::string to_string(C2Method m) {
  return m == C2Method::RankFastPath ? "rank_fast_path" : "benoist_bruteforce";
}

C2Result decide_c2(const DerivedEmbedding& emb, const WeylGroup& w, bool force_bruteforce) {
  const Subspace b = minus_w0_fixed_space(w);
  if (!force_bruteforce && b.dim() > emb.a_h.dim()) return {true, C2Method::RankFastPath, std::nullopt};

  C2Result r{true, C2Method::BenoistBruteForce, std::nullopt};
  const auto orbit = subspace_orbit(w, emb.a_h);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (subspace_contains(orbit.point(i), b)) {
      r.holds = false;
      r.witness = orbit.witness(i);
      break;
    }
  }
  return r;
}

bool kobayashi_proper(const Subspace& a_h, const Subspace& a_l, const WeylGroup& w) {
  if (a_h.is_zero() || a_l.is_zero()) return true;
  const auto orbit = subspace_orbit(w, a_l);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    if (!subspace_intersection(a_h, orbit.point(i)).is_zero()) return false;
  return true;
}

std::optional<WeylElement> sl2_obstruction(const RatVec& h, const Subspace& a_h, const WeylGroup& w) {
  if (is_zero(h)) throw ZeroVector("the semisimple element of an sl2 triple is nonzero");
  return orbit_meets_subspace(w, h, a_h);
}

bool sl2_acts_properly(const RatVec& h, const Subspace& a_h, const WeylGroup& w) {
  return !sl2_obstruction(h, a_h, w).has_value();
}

RatVec principal_sl2_h(const WeylGroup& w) {
  const auto& simple = w.simple_roots();
  const RatVec h =
      solve_in_span(simple, RatVec::Constant(static_cast<Index>(simple.size()), Rational(2)), w.ambient_dim());
  for (const auto& a : simple)
    if (dot(a, h) != 2) throw ConsistencyViolation("principal_sl2_h: H is not regular dominant");
  return h;
}

RatVec principal_sl2_h(const RootSystem& rs) { return principal_sl2_h(WeylGroup(rs)); }

bool is_antipodal(const RatVec& x, const WeylGroup& w) {
  const RatVec plus = dominant_representative(w, x).first;
  return longest_element(w)(plus) == RatVec(-plus);
}

C3Result decide_c3(const DerivedEmbedding& emb, const RealFormDescriptor& g, const WeylGroup& w) {
  if (!check_strong_regularity(emb.spec)) throw HypothesesNotMet("the space is not strongly regular");
  if (!emb.h_profile.inner)
    throw HypothesesNotMet("h is not of inner type: ahyp " + std::to_string(emb.h_profile.ahyp_rank) +
                           " < real rank " + std::to_string(emb.h_profile.real_rank));

  C3Result r;
  r.holds = rank_profile(g).ahyp_rank > emb.h_profile.ahyp_rank;
  if (!r.holds || w.order() > w.enumeration_cap()) return r;

  // With 𝔞_h = 𝔟_h ⊆ 𝔟, w0 w0^h fixes 𝔞_h pointwise and is not the
  // identity, so its fixed set lies on a wall; H then cannot be moved into
  // 𝔞_h because it is regular and every point of 𝔞_h is singular.
  const DerivedEmbedding normal = normalize_bh_into_b(emb, w).second;
  const WeylElement u = longest_element(w) * normal.w0_h;
  const RatVec alpha = wall_containing_fixed_set(w, u);
  for (Index i = 0; i < normal.a_h.dim(); ++i)
    if (dot(alpha, normal.a_h.basis_vector(i)) != 0)
      throw ConsistencyViolation("decide_c3: wall root does not vanish on a_h");
  r.wall_root = alpha;

  const RatVec h = principal_sl2_h(w);
  if (!sl2_acts_properly(h, normal.a_h, w))
    throw ConsistencyViolation("decide_c3: principal sl2 does not act properly despite the rank inequality");
  r.witness = h;
  r.verified = true;
  return r;
}

}  // namespace propact
