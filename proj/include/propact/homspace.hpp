#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "propact/realform.hpp"
#include "propact/rootsys.hpp"
#include "propact/weyl.hpp"

namespace propact {

/// G/H given by the ambient real form, roots of Σ_g generating Σ_h, and
/// extra vectors of 𝔞 spanning the abelian part of 𝔥 outside the coroots.
///
/// With `explicit_members` the generators are taken as the complete member
/// list of Σ_h instead of being closed up; this is how a candidate subset is
/// tested for being a closed symmetric subsystem.
struct EmbeddingSpec {
  RealFormDescriptor ambient;
  std::vector<RatVec> subsystem_generators;
  std::vector<RatVec> extra_abelian_vectors;
  bool explicit_members = false;
};

struct DerivedEmbedding {
  EmbeddingSpec spec;
  std::shared_ptr<const RootSystem> ambient_roots;
  Subsystem sigma_h;
  SubsystemStructure structure;
  Subspace coroot_span;  // span of the coroots of Σ_h
  Subspace a_h;          // coroot span + extra vectors
  Subspace b_h;          // (-1)-eigenspace of w0^h on the coroot span
  std::vector<RootSystemType> h_components;
  RankProfile h_profile;
  WeylElement w0_h;

  /// Reflection group of Σ_h acting on the ambient 𝔞.
  WeylGroup h_group(std::uint64_t cap = kDefaultEnumerationCap) const;
};

/// Restricted root system of a simple ambient form. Throws InvalidType for
/// descriptors without one.
std::shared_ptr<const RootSystem> ambient_root_system(const RealFormDescriptor& g);

/// Throws NotARoot, InvalidSubsystem (explicit members not closed and
/// symmetric, extra vector outside 𝔞) or RedundantAbelianVector.
DerivedEmbedding derive_embedding(const EmbeddingSpec& spec);

/// Σ_h closed and symmetric in Σ_g, and the extra vectors inside 𝔞.
bool check_strong_regularity(const EmbeddingSpec& spec);

/// w1 with b_h ⊆ w1 𝔟, together with the embedding conjugated by w1⁻¹ (whose
/// b_h then lies in 𝔟). Returns the identity when b_h ⊆ 𝔟 already.
/// Throws EnumerationCapExceeded, or a covering error on a modeling bug.
std::pair<WeylElement, DerivedEmbedding> normalize_bh_into_b(const DerivedEmbedding& emb, const WeylGroup& w);

/// One member of the families of strongly regular spaces listed for small
/// parameters, encoded as an explicit subsystem.
struct StronglyRegularInstance {
  std::string label;   // e.g. "SO(4,4)/SL(2,R)"
  std::string family;  // e.g. "SO(b,b)/SL(a,R)"
  std::string g_form;
  std::string h_form;  // catalog name of 𝔥's simple factor, "" if trivial
  EmbeddingSpec spec;
  std::vector<RootSystemType> expected_components;
};

/// Every family at its three smallest parameter triples (c, a, b) with
/// 0 < c < a < b, plus the exceptional spaces once each.
std::vector<StronglyRegularInstance> strongly_regular_instances();

}  // namespace propact
