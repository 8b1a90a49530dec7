#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "propact/exactlin.hpp"

namespace propact {

enum class Family { A, B, C, D, E, F, G, BC };

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // "A2", "BC3", "E8", ...
  friend auto operator<=>(const RootSystemType&, const RootSystemType&) = default;
};

bool is_valid(const RootSystemType& t);
/// Inverse of RootSystemType::name(); throws InvalidType.
RootSystemType parse_root_system_type(std::string_view name);
/// Family from its letter(s) "A".."G" or "BC"; throws InvalidType.
Family parse_family(std::string_view letters);
/// |W| from the classification. Saturates at UINT64_MAX never; E8 fits.
std::uint64_t weyl_group_order(const RootSystemType& t);

/// A (possibly non-reduced) root system in its standard rational
/// realization. Roots are stored in lexicographic order.
///
///   A_n        e_i - e_j in the sum-zero hyperplane of Q^{n+1}
///   B_n        ±e_i ± e_j, ±e_i
///   C_n        ±e_i ± e_j, ±2e_i
///   D_n        ±e_i ± e_j
///   BC_n       ±e_i ± e_j, ±e_i, ±2e_i
///   G2         inside the sum-zero hyperplane of Q^3
///   F4         Q^4, E6/E7/E8 inside Q^8 (E6, E7 as parabolic subsystems of E8)
///
/// Simple roots follow Bourbaki numbering.
class RootSystem {
 public:
  explicit RootSystem(const RootSystemType& type);

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }
  Index ambient_dim() const { return ambient_; }
  const std::vector<RatVec>& roots() const { return roots_; }
  const std::vector<RatVec>& simple_roots() const { return simple_; }
  const std::vector<RatVec>& positive_roots() const { return positive_; }
  const Subspace& root_span() const { return span_; }

  bool contains(const RatVec& v) const;
  bool is_reduced() const { return type_.family != Family::BC; }
  /// Coefficients of v in the simple-root basis; v must lie in the root span.
  RatVec simple_coefficients(const RatVec& v) const;

 private:
  RootSystemType type_;
  Index ambient_;
  std::vector<RatVec> roots_;
  std::vector<RatVec> simple_;
  std::vector<RatVec> positive_;
  Subspace span_;
  RatMat gram_inverse_;
};

RootSystem build_root_system(const RootSystemType& t);

struct Subsystem {
  std::shared_ptr<const RootSystem> parent;
  std::vector<RatVec> members;
};

struct SubsystemFlags {
  bool closed = false;
  bool symmetric = false;
};

/// closed: β₁ + β₂ ∈ members whenever β₁, β₂ ∈ members (β₁ = β₂ allowed)
/// and the sum is a parent root. symmetric: members = -members.
SubsystemFlags check_subsystem(const Subsystem& s);

/// Smallest closed symmetric subset of the parent roots containing
/// ±generators. Throws NotARoot.
Subsystem closed_symmetric_closure(std::shared_ptr<const RootSystem> parent,
                                   const std::vector<RatVec>& generators);

/// 2α/(α,α), after checking that α is a root.
RatVec coroot(const RootSystem& rs, const RatVec& alpha);
/// 2α/(α,α) for any nonzero α.
RatVec coroot(const RatVec& alpha);

/// Positive system, simple roots and irreducible components of a closed
/// symmetric subsystem.
struct SubsystemStructure {
  std::vector<RatVec> positive;
  std::vector<RatVec> simple;
  std::vector<std::vector<std::size_t>> components;  // indices into simple
  std::vector<RootSystemType> types;                 // one per component
};

/// Positivity comes from the functional (N^{n-1}, ..., N, 1) with N one more
/// than the largest coordinate magnitude after clearing denominators, which
/// vanishes on no nonzero member. Throws InvalidSubsystem when s is not
/// closed and symmetric.
SubsystemStructure analyze_subsystem(const Subsystem& s);

/// Component types sorted by (family, rank). Isomorphic types get one name:
/// D3 is reported as A3 and the rank-2 double bond as B2. Throws
/// InvalidSubsystem.
std::vector<RootSystemType> classify_components(const Subsystem& s);

/// Type of an irreducible reduced root system from its Cartan matrix
/// C(i,j) = 2(α_i, α_j)/(α_i, α_i); B2 for either rank-2 double bond.
/// Throws InvalidSubsystem on a matrix of
/// no finite type.
RootSystemType identify_cartan_matrix(const Mat<int>& cartan);

/// The unique vector v in the span of the given (linearly independent)
/// simple roots with (α_i, v) = values[i] for every i.
RatVec solve_in_span(const std::vector<RatVec>& simple_roots, const RatVec& values, Index ambient_dim);

}  // namespace propact
