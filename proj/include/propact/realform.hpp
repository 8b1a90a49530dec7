#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "propact/rootsys.hpp"

namespace propact {

/// A named real reductive Lie algebra. Either `restricted` is set and
/// `simple_factors` is empty (a simple algebra), or the algebra is the sum of
/// its factors; both may carry an abelian summand.
struct RealFormDescriptor {
  std::string name;
  std::optional<RootSystemType> restricted;
  int abelian_summand_dim = 0;
  std::vector<RealFormDescriptor> simple_factors;
  bool complex = false;                      // a complex algebra viewed as real
  std::optional<std::string> isomorphic_to;  // low-rank coincidences
  std::string source;
};

struct RankProfile {
  int real_rank = 0;
  int ahyp_rank = 0;
  bool inner = true;  // ahyp_rank == real_rank

  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/// Immutable list of descriptors, loaded from JSON.
///
///   {"entries": [{"name": ..., "family": "A", "rank": 2},
///                {"name": ..., "abelian_summand_dim": 2, "factors": ["sl(2,R)"]}, ...]}
///
/// Factors refer to earlier entries by name. Optional keys: "complex",
/// "isomorphic_to", "source".
class Catalog {
 public:
  /// Throws ParseError on malformed text, duplicate names or unknown factors.
  static Catalog from_json(std::string_view text);
  /// The catalog compiled into the library.
  static const Catalog& builtin();

  const std::vector<RealFormDescriptor>& entries() const { return entries_; }
  bool contains(std::string_view name) const;
  /// Throws UnknownRealForm.
  const RealFormDescriptor& lookup(std::string_view name) const;

 private:
  std::vector<RealFormDescriptor> entries_;
};

/// Lookup in the built-in catalog.
const RealFormDescriptor& lookup_real_form(std::string_view name);

/// An anonymous simple algebra with the given restricted system.
RealFormDescriptor descriptor_for_type(const RootSystemType& t);

/// dim ker(w₀ + 1) on the span of a root system of this type. Memoized.
int ahyp_rank(const RootSystemType& t);

/// Real rank adds abelian summands, the a-hyperbolic rank ignores them, and
/// both are additive over simple factors.
RankProfile rank_profile(const RealFormDescriptor& d);

/// Same accounting for a list of irreducible restricted systems plus an
/// abelian part.
RankProfile rank_profile(const std::vector<RootSystemType>& components, int abelian_dim = 0);

/// (ahyp, real) as listed for the families with unequal ranks, or nullopt
/// when the name (or the name it is isomorphic to) belongs to none of them.
std::optional<std::pair<int, int>> table1_prediction(const RealFormDescriptor& d);

struct Table1Row {
  std::string family;  // e.g. "sl(2k,R)"
  int k = 0;           // 0 for the exceptional rows
  std::string form;
  RankProfile computed;
  int expected_ahyp = 0;
  int expected_real = 0;
  bool ok = false;
};

struct CompletenessRow {
  std::string form;
  RankProfile computed;
  bool ok = false;  // ahyp == real required
};

struct Table1Report {
  std::vector<Table1Row> rows;                // the families at k = 1, 2, 3 where defined
  std::vector<CompletenessRow> completeness;  // every entry not covered by a family
  std::vector<std::string> failures;
  bool table_ok() const;
  bool completeness_ok() const;
  bool ok() const { return failures.empty(); }
};

/// Never throws on a mismatch; every failure is named in the report.
Table1Report validate_against_table1(const Catalog& catalog = Catalog::builtin());

}  // namespace propact
