#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

#include "propact/exactlin.hpp"
#include "propact/rootsys.hpp"

namespace propact {

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// An element of a reflection group as an orthogonal rational matrix on the
/// realization space. When a word [i1, ..., ik] is present the matrix equals
/// s_{i1} s_{i2} ... s_{ik} in the owning group's simple reflections.
class WeylElement {
 public:
  explicit WeylElement(RatMat matrix, std::optional<std::vector<int>> word = std::nullopt)
      : matrix_(std::move(matrix)), word_(std::move(word)) {}

  static WeylElement identity(Index n) { return WeylElement(RatMat::Identity(n, n), std::vector<int>{}); }

  const RatMat& matrix() const { return matrix_; }
  const std::optional<std::vector<int>>& word() const { return word_; }
  Index dim() const { return matrix_.rows(); }
  bool is_identity() const { return matrix_ == RatMat::Identity(dim(), dim()); }

  RatVec operator()(const RatVec& x) const { return matrix_ * x; }
  Subspace operator()(const Subspace& s) const { return image(matrix_, s); }

  WeylElement operator*(const WeylElement& other) const;
  /// Transpose; the matrix is orthogonal.
  WeylElement inverse() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

 private:
  RatMat matrix_;
  std::optional<std::vector<int>> word_;
};

/// s_α: x -> x - 2(x,α)/(α,α) α. Throws NotARoot.
WeylElement reflection_matrix(const RootSystem& rs, const RatVec& alpha);
/// Same map for an arbitrary nonzero vector.
WeylElement reflection(const RatVec& alpha);

/// A finite reflection group given by its simple roots, over the full
/// realization space. Cheap to copy.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, std::uint64_t enumeration_cap = kDefaultEnumerationCap);
  /// Group of a subsystem: simple roots, all of its roots, and |W|.
  WeylGroup(Index ambient_dim, std::vector<RatVec> simple_roots, std::vector<RatVec> roots, std::uint64_t order,
            std::uint64_t enumeration_cap = kDefaultEnumerationCap);

  Index ambient_dim() const { return ambient_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  const std::vector<RatVec>& simple_roots() const { return simple_; }
  const std::vector<RatVec>& roots() const { return roots_; }
  const std::vector<WeylElement>& generators() const { return generators_; }
  const Subspace& root_span() const { return span_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t enumeration_cap() const { return cap_; }
  WeylGroup with_cap(std::uint64_t cap) const;

  /// s_i applied without forming a matrix product.
  RatVec reflect(int i, const RatVec& x) const;
  /// s_i M, column by column.
  RatMat reflect(int i, const RatMat& m) const;

  /// Throws EnumerationCapExceeded when |W| exceeds the cap.
  void require_enumerable() const;

 private:
  Index ambient_;
  std::vector<RatVec> simple_;
  std::vector<RatVec> roots_;  // lexicographic order
  std::vector<WeylElement> generators_;
  std::vector<RatVec> coroots_;
  Subspace span_;
  std::uint64_t order_;
  std::uint64_t cap_;
};

/// Breadth-first closure of one point under the simple reflections, with
/// enough bookkeeping to rebuild a group element reaching each point.
template <typename Point>
class Orbit {
 public:
  const Point& origin() const { return nodes_.front().point; }
  std::size_t size() const { return nodes_.size(); }
  const Point& point(std::size_t i) const { return nodes_[i].point; }
  std::optional<std::size_t> find(const Point& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  /// u with u(origin) = point(i); its word is reduced along the BFS tree.
  WeylElement witness(std::size_t i) const;
  std::vector<int> witness_word(std::size_t i) const;
  /// All points in canonical (sorted) order.
  std::vector<Point> sorted_points() const;

  /// act(i, p) applies the simple reflection s_i to p. Throws
  /// EnumerationCapExceeded once the orbit grows past the group's cap.
  template <typename Act>
  static Orbit build(const WeylGroup& w, const Point& origin, Act act);

 private:

  struct Node {
    Point point;
    std::size_t parent;
    int generator;  // -1 for the origin
  };
  using Less = std::conditional_t<std::is_same_v<Point, Subspace>, std::less<Point>, LexLess>;

  std::vector<Node> nodes_;
  std::map<Point, std::size_t, Less> index_;
  std::vector<WeylElement> generators_;
};

using VectorSet = std::set<RatVec, LexLess>;

Orbit<RatVec> vector_orbit(const WeylGroup& w, const RatVec& x);
Orbit<Subspace> subspace_orbit(const WeylGroup& w, const Subspace& s);

/// Longest element by greedy descent from a regular dominant vector; the
/// result carries a reduced word of length |Σ⁺| (indivisible roots).
/// Asserts w₀² = id and w₀(Π) = -Π.
WeylElement longest_element(const WeylGroup& w);

/// 𝔟 = {X in the root span : -w₀ X = X}.
Subspace minus_w0_fixed_space(const WeylGroup& w);

/// (x⁺, u) with u x = x⁺ dominant.
std::pair<RatVec, WeylElement> dominant_representative(const WeylGroup& w, const RatVec& x);

/// Throws EnumerationCapExceeded once the orbit outgrows the cap.
VectorSet orbit_of_vector(const WeylGroup& w, const RatVec& x);

/// Some u with u x ∈ s; among all orbit points in s the witness targets the
/// lexicographically greatest one. nullopt when the orbit misses s.
std::optional<WeylElement> orbit_meets_subspace(const WeylGroup& w, const RatVec& x, const Subspace& s);

/// {w s : w ∈ W}. Requires |W| ≤ cap.
std::set<Subspace> orbit_of_subspace(const WeylGroup& w, const Subspace& s);

/// A root α whose wall contains the fixed space of u within the root span:
/// the lexicographically least one among roots whose first nonzero entry is
/// positive. Throws NoWall for the identity.
RatVec wall_containing_fixed_set(const WeylGroup& w, const WeylElement& u);

/// Every group element with a word, found by word BFS. Requires |W| ≤ cap.
std::vector<WeylElement> enumerate_group(const WeylGroup& w);

// ---- Orbit implementation --------------------------------------------------

template <typename Point>
std::vector<int> Orbit<Point>::witness_word(std::size_t i) const {
  // Walking up the tree meets the last-applied reflection first, which is
  // exactly the word order.
  std::vector<int> word;
  for (std::size_t cur = i; nodes_[cur].generator >= 0; cur = nodes_[cur].parent)
    word.push_back(nodes_[cur].generator);
  return word;
}

template <typename Point>
WeylElement Orbit<Point>::witness(std::size_t i) const {
  std::vector<int> applied = witness_word(i);
  const Index n = generators_.empty() ? 0 : generators_.front().dim();
  RatMat m = RatMat::Identity(n, n);
  for (int g : applied) m = (m * generators_[static_cast<std::size_t>(g)].matrix()).eval();
  return WeylElement(std::move(m), std::move(applied));
}

template <typename Point>
template <typename Act>
Orbit<Point> Orbit<Point>::build(const WeylGroup& w, const Point& origin, Act act) {
  Orbit o;
  o.generators_ = w.generators();
  o.nodes_.push_back({origin, 0, -1});
  o.index_.emplace(origin, 0);
  for (std::size_t head = 0; head < o.nodes_.size(); ++head) {
    for (int g = 0; g < w.rank(); ++g) {
      Point next = act(g, o.nodes_[head].point);
      if (o.index_.count(next)) continue;
      if (o.nodes_.size() >= w.enumeration_cap()) throw EnumerationCapExceeded(w.enumeration_cap(), w.order());
      o.index_.emplace(next, o.nodes_.size());
      o.nodes_.push_back({std::move(next), head, g});
    }
  }
  return o;
}

template <typename Point>
std::vector<Point> Orbit<Point>::sorted_points() const {
  std::vector<Point> out;
  out.reserve(index_.size());
  for (const auto& [p, _] : index_) out.push_back(p);
  return out;
}

}  // namespace propact
