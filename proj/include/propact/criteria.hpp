#pragma once

#include <optional>
#include <string>

#include "propact/homspace.hpp"
#include "propact/realform.hpp"
#include "propact/weyl.hpp"

namespace propact {

/// Calabi-Markus: real_rank(g) > real_rank(h).
bool decide_c1(const RankProfile& g, const RankProfile& h);

enum class C2Method { RankFastPath, BenoistBruteForce };
std::string to_string(C2Method m);

struct C2Result {
  bool holds = false;
  C2Method method = C2Method::RankFastPath;
  std::optional<WeylElement> witness;  // w with 𝔟 ⊆ w 𝔞_h, when C2 fails
};

/// Benoist's criterion: C2 holds iff no translate w 𝔞_h contains 𝔟. The
/// dimension test dim 𝔟 > dim 𝔞_h settles it without enumeration unless
/// brute force is forced. Throws EnumerationCapExceeded on the brute path.
C2Result decide_c2(const DerivedEmbedding& emb, const WeylGroup& w, bool force_bruteforce = false);

/// 𝔞_h ∩ w 𝔞_l = 0 for every w ∈ W. Throws EnumerationCapExceeded.
bool kobayashi_proper(const Subspace& a_h, const Subspace& a_l, const WeylGroup& w);

/// An sl(2,R) with semisimple element H acts properly iff W H misses 𝔞_h.
/// Throws ZeroVector.
bool sl2_acts_properly(const RatVec& h, const Subspace& a_h, const WeylGroup& w);
/// The element carrying H into 𝔞_h, if any (same tie-break as
/// orbit_meets_subspace).
std::optional<WeylElement> sl2_obstruction(const RatVec& h, const Subspace& a_h, const WeylGroup& w);

/// H in the root span with α(H) = 2 for every simple root α; regular dominant.
RatVec principal_sl2_h(const RootSystem& rs);
RatVec principal_sl2_h(const WeylGroup& w);

/// Does the orbit of x contain -x? Decided as w0 x⁺ = -x⁺.
bool is_antipodal(const RatVec& x, const WeylGroup& w);

struct C3Result {
  bool holds = false;
  std::optional<RatVec> witness;    // principal H, checked against 𝔞_h
  std::optional<RatVec> wall_root;  // a root vanishing on 𝔞_h
  bool verified = false;            // witness checked by orbit enumeration
};

/// Under strong regularity and inner h: C3 iff ahyp(g) > ahyp(h). When it
/// holds and |W| is within the cap, the principal H is checked to act
/// properly. Throws HypothesesNotMet outside those hypotheses.
C3Result decide_c3(const DerivedEmbedding& emb, const RealFormDescriptor& g, const WeylGroup& w);

}  // namespace propact
