#include "propact/weyl.hpp"

#include <algorithm>
#include <string>

#include "propact/errors.hpp"

namespace propact {

namespace {

Subspace span_of(const std::vector<RatVec>& vs, Index ambient) {
  return subspace_from_spanning(std::span<const RatVec>(vs), ambient);
}

WeylElement word_to_element(const std::vector<WeylElement>& gens, Index n, std::vector<int> word) {
  RatMat m = RatMat::Identity(n, n);
  for (int g : word) m = (m * gens[static_cast<std::size_t>(g)].matrix()).eval();
  return WeylElement(std::move(m), std::move(word));
}

}  // namespace

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("WeylElement product: dimension mismatch");
  std::optional<std::vector<int>> w;
  if (word_ && other.word_) {
    w = *word_;
    w->insert(w->end(), other.word_->begin(), other.word_->end());
  }
  return WeylElement(matrix_ * other.matrix_, std::move(w));
}

WeylElement WeylElement::inverse() const {
  std::optional<std::vector<int>> w;
  if (word_) w = std::vector<int>(word_->rbegin(), word_->rend());
  return WeylElement(matrix_.transpose(), std::move(w));
}

WeylElement reflection(const RatVec& alpha) {
  if (is_zero(alpha)) throw ZeroVector("reflection in the zero vector");
  const Index n = alpha.size();
  const Rational scale = Rational(2) / dot(alpha, alpha);
  RatMat m = RatMat::Identity(n, n);
  m -= scale * (alpha * alpha.transpose());
  return WeylElement(std::move(m));
}

WeylElement reflection_matrix(const RootSystem& rs, const RatVec& alpha) {
  if (!rs.contains(alpha)) throw NotARoot(format_vector(alpha) + " is not a root of " + rs.type().name());
  return reflection(alpha);
}

WeylGroup::WeylGroup(const RootSystem& rs, std::uint64_t enumeration_cap)
    : WeylGroup(rs.ambient_dim(), rs.simple_roots(), rs.roots(), weyl_group_order(rs.type()), enumeration_cap) {}

WeylGroup::WeylGroup(Index ambient_dim, std::vector<RatVec> simple_roots, std::vector<RatVec> roots,
                     std::uint64_t order, std::uint64_t enumeration_cap)
    : ambient_(ambient_dim),
      simple_(std::move(simple_roots)),
      roots_(std::move(roots)),
      span_(ambient_dim),
      order_(order),
      cap_(enumeration_cap) {
  for (const auto& a : simple_)
    if (a.size() != ambient_) throw DimensionMismatch("WeylGroup: simple root of wrong length");
  for (const auto& a : roots_)
    if (a.size() != ambient_) throw DimensionMismatch("WeylGroup: root of wrong length");
  std::sort(roots_.begin(), roots_.end(), LexLess{});
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    generators_.emplace_back(reflection(simple_[i]).matrix(), std::vector<int>{static_cast<int>(i)});
    coroots_.push_back(coroot(simple_[i]));
  }
  span_ = span_of(simple_, ambient_);
  if (span_.dim() != static_cast<Index>(simple_.size()))
    throw InvalidSubsystem("WeylGroup: simple roots are linearly dependent");
}

WeylGroup WeylGroup::with_cap(std::uint64_t cap) const {
  WeylGroup copy = *this;
  copy.cap_ = cap;
  return copy;
}

RatVec WeylGroup::reflect(int i, const RatVec& x) const {
  const auto k = static_cast<std::size_t>(i);
  return x - dot(x, coroots_[k]) * simple_[k];
}

RatMat WeylGroup::reflect(int i, const RatMat& m) const {
  const auto k = static_cast<std::size_t>(i);
  const RatMat row = coroots_[k].transpose() * m;
  return m - simple_[k] * row;
}

void WeylGroup::require_enumerable() const {
  if (order_ > cap_) throw EnumerationCapExceeded(cap_, order_);
}

Orbit<RatVec> vector_orbit(const WeylGroup& w, const RatVec& x) {
  if (x.size() != w.ambient_dim()) throw DimensionMismatch("vector_orbit: vector has wrong length");
  return Orbit<RatVec>::build(w, x, [&w](int i, const RatVec& p) { return w.reflect(i, p); });
}

Orbit<Subspace> subspace_orbit(const WeylGroup& w, const Subspace& s) {
  if (s.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("subspace_orbit: wrong ambient dimension");
  w.require_enumerable();
  return Orbit<Subspace>::build(w, s, [&w](int i, const Subspace& p) {
    // Reflect the basis rows and re-canonicalize.
    RatMat rows = p.basis().transpose();
    return Subspace::from_rows(w.reflect(i, rows).transpose());
  });
}

WeylElement longest_element(const WeylGroup& w) {
  const Index n = w.ambient_dim();
  const auto& simple = w.simple_roots();
  if (simple.empty()) return WeylElement::identity(n);

  // A vector with every α_i(v) = 2 is regular dominant; walking it to the
  // antidominant chamber crosses each positive-root wall exactly once.
  RatVec cur = solve_in_span(simple, RatVec::Constant(static_cast<Index>(simple.size()), Rational(2)), n);
  std::vector<int> applied;
  for (;;) {
    int found = -1;
    for (std::size_t i = 0; i < simple.size(); ++i) {
      if (dot(simple[i], cur) > 0) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) break;
    cur = w.reflect(found, cur);
    applied.push_back(found);
  }
  WeylElement w0 = word_to_element(w.generators(), n, std::vector<int>(applied.rbegin(), applied.rend()));

  if (!(w0 * w0).is_identity()) throw ConsistencyViolation("longest_element: w0 is not an involution");
  std::vector<RatVec> image, negated;
  for (const auto& a : simple) {
    image.push_back(w0(a));
    negated.push_back(-a);
  }
  std::sort(image.begin(), image.end(), LexLess{});
  std::sort(negated.begin(), negated.end(), LexLess{});
  if (image != negated) throw ConsistencyViolation("longest_element: w0 does not send the simple roots to their negatives");
  return w0;
}

Subspace minus_w0_fixed_space(const WeylGroup& w) {
  const Index n = w.ambient_dim();
  const WeylElement w0 = longest_element(w);
  const RatMat m = w0.matrix() + RatMat::Identity(n, n);
  Subspace fixed = Subspace::from_rows(kernel(m));
  return subspace_intersection(fixed, w.root_span());
}

std::pair<RatVec, WeylElement> dominant_representative(const WeylGroup& w, const RatVec& x) {
  if (x.size() != w.ambient_dim()) throw DimensionMismatch("dominant_representative: vector has wrong length");
  const auto& simple = w.simple_roots();
  RatVec cur = x;
  std::vector<int> applied;
  for (;;) {
    int found = -1;
    for (std::size_t i = 0; i < simple.size(); ++i) {
      if (dot(simple[i], cur) < 0) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) break;
    cur = w.reflect(found, cur);
    applied.push_back(found);
  }
  WeylElement u =
      word_to_element(w.generators(), w.ambient_dim(), std::vector<int>(applied.rbegin(), applied.rend()));
  return {std::move(cur), std::move(u)};
}

VectorSet orbit_of_vector(const WeylGroup& w, const RatVec& x) {
  const auto orbit = vector_orbit(w, x);
  VectorSet out;
  for (std::size_t i = 0; i < orbit.size(); ++i) out.insert(orbit.point(i));
  return out;
}

std::optional<WeylElement> orbit_meets_subspace(const WeylGroup& w, const RatVec& x, const Subspace& s) {
  if (s.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("orbit_meets_subspace: wrong ambient dimension");
  const auto orbit = vector_orbit(w, x);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (!s.contains(orbit.point(i))) continue;
    if (!best || lex_compare(orbit.point(*best), orbit.point(i)) < 0) best = i;
  }
  if (!best) return std::nullopt;
  return orbit.witness(*best);
}

std::set<Subspace> orbit_of_subspace(const WeylGroup& w, const Subspace& s) {
  const auto orbit = subspace_orbit(w, s);
  std::set<Subspace> out;
  for (std::size_t i = 0; i < orbit.size(); ++i) out.insert(orbit.point(i));
  return out;
}

RatVec wall_containing_fixed_set(const WeylGroup& w, const WeylElement& u) {
  if (u.dim() != w.ambient_dim()) throw DimensionMismatch("wall_containing_fixed_set: wrong dimension");
  if (u.is_identity()) throw NoWall("the identity fixes the whole space, which lies on no wall");
  const Index n = w.ambient_dim();
  const Subspace fixed =
      subspace_intersection(Subspace::from_rows(kernel(RatMat(u.matrix() - RatMat::Identity(n, n)))), w.root_span());
  for (const auto& alpha : w.roots()) {
    if (lex_compare(alpha, RatVec(-alpha)) < 0) continue;  // one root per wall: first nonzero entry positive
    bool on_wall = true;
    for (Index i = 0; i < fixed.dim() && on_wall; ++i) on_wall = dot(alpha, fixed.basis_vector(i)) == 0;
    if (on_wall) return alpha;
  }
  throw ConsistencyViolation("wall_containing_fixed_set: nontrivial group element with a regular fixed vector");
}

std::vector<WeylElement> enumerate_group(const WeylGroup& w) {
  w.require_enumerable();
  const Index n = w.ambient_dim();
  const auto orbit = Orbit<RatMat>::build(
      w, RatMat::Identity(n, n), [&w](int i, const RatMat& m) { return w.reflect(i, m); });
  std::vector<WeylElement> out;
  out.reserve(orbit.size());
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    out.emplace_back(orbit.point(i), orbit.witness_word(i));
  }
  if (out.size() != w.order())
    throw ConsistencyViolation("enumerate_group: found " + std::to_string(out.size()) + " elements, expected " +
                               std::to_string(w.order()));
  return out;
}

}  // namespace propact
