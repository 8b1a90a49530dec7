#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "propact/homspace.hpp"
#include "propact/weyl.hpp"

namespace propact::so44 {

/// a = (3,1,0,2), b = (2,0,0,1), c = (0,0,1,0); 𝔲₁ = span(a, b, c).
RatVec vector_a();
RatVec vector_b();
RatVec vector_c();
Subspace u1();

/// One conjugacy class of sl2 triples in so(4,4): its dominant semisimple
/// element h, a Weyl translate wh, and wh as a combination of (a, b, c).
struct Sl2SemisimpleRow {
  RatVec h;
  RatVec wh;
  std::array<int, 3> combo;
};

/// The eleven classes, zero included. Completeness of the list is taken from
/// the nilpotent orbit classification and is not re-derived here.
const std::vector<Sl2SemisimpleRow>& table2();

struct Table2RowCheck {
  std::size_t row = 0;
  bool h_dominant = false;
  bool same_orbit = false;   // wh and h share a dominant representative
  bool combination = false;  // wh = combo · (a, b, c)
  bool in_u1 = false;
  std::optional<WeylElement> u;  // u h = wh, read off the two dominant reductions
  bool ok() const { return h_dominant && same_orbit && combination && in_u1; }
};

struct Table2Report {
  std::vector<Table2RowCheck> rows;
  bool distinct_orbits = false;  // the dominant h are pairwise distinct
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

Table2Report verify_table2();

/// 𝔲 = 𝔲₁ + 𝔲⁺ + 𝔲⁻ inside so(4,4): Σ_u = {±(-e1+e2)}, abelian part
/// spanned by b and c on top of the coroot (-1,1,0,0).
EmbeddingSpec u_spec();
DerivedEmbedding build_u();

struct NoProperSl2Row {
  std::size_t row = 0;
  RatVec h;
  std::optional<WeylElement> witness;  // carries h into 𝔲₁
  std::optional<RatVec> image;
  bool table_image_in_orbit = false;  // the listed wh is also a valid witness
  bool ok() const { return witness.has_value() && table_image_in_orbit; }
};

struct NoProperSl2Report {
  std::vector<NoProperSl2Row> rows;  // nonzero rows only
  Index dim_b = 0;
  Index dim_a_h = 0;
  bool c2_fast_path = false;  // dim 𝔟 > dim 𝔞_h
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

NoProperSl2Report verify_no_proper_sl2();

/// The so(4,4) Weyl group.
const WeylGroup& d4_group();

}  // namespace propact::so44
