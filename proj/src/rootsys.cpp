#include "propact/rootsys.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>

namespace propact {

namespace {

using RootSet = std::set<RatVec, LexLess>;

RatVec unit(Index n, Index i, long c = 1) {
  RatVec v = RatVec::Zero(n);
  v(i) = Rational(c);
  return v;
}

RatVec e_pm_e(Index n, Index i, Index j, long si, long sj) {
  RatVec v = RatVec::Zero(n);
  v(i) = Rational(si);
  v(j) = Rational(sj);
  return v;
}

void add_pm_ei_pm_ej(RootSet& roots, Index n, Index dim) {
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (long si : {1L, -1L})
        for (long sj : {1L, -1L}) roots.insert(e_pm_e(dim, i, j, si, sj));
}

void add_pm_ei(RootSet& roots, Index n, long scale) {
  for (Index i = 0; i < n; ++i) {
    roots.insert(unit(n, i, scale));
    roots.insert(unit(n, i, -scale));
  }
}

RatVec half_signs(Index n, unsigned mask) {
  RatVec v(n);
  for (Index i = 0; i < n; ++i) v(i) = Rational((mask >> i) & 1U ? -1 : 1, 2);
  return v;
}

std::vector<RatVec> e8_simple_roots() {
  std::vector<RatVec> s;
  RatVec a1(8);
  a1 << Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2),
      Rational(-1, 2), Rational(-1, 2), Rational(1, 2);
  s.push_back(a1);
  s.push_back(e_pm_e(8, 0, 1, 1, 1));
  for (Index i = 0; i + 1 < 7; ++i) s.push_back(e_pm_e(8, i, i + 1, -1, 1));
  return s;
}

RootSet e8_roots() {
  RootSet roots;
  add_pm_ei_pm_ej(roots, 8, 8);
  for (unsigned mask = 0; mask < 256; ++mask)
    if (std::popcount(mask) % 2 == 0) roots.insert(half_signs(8, mask));
  return roots;
}

RatMat gram(const std::vector<RatVec>& vs) {
  const auto n = static_cast<Index>(vs.size());
  RatMat g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = dot(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]);
  return g;
}

RatMat invert(const RatMat& m) {
  const Index n = m.rows();
  RatMat aug(n, 2 * n);
  aug << m, RatMat::Identity(n, n);
  const auto ech = reduced_row_echelon(aug);
  if (static_cast<Index>(ech.pivots.size()) != n || ech.pivots.back() >= n)
    throw ConsistencyViolation("invert: singular Gram matrix");
  return ech.rows.rightCols(n);
}

bool is_member(const std::vector<RatVec>& sorted, const RatVec& v) {
  return std::binary_search(sorted.begin(), sorted.end(), v, LexLess{});
}

std::vector<RatVec> sorted_unique(std::vector<RatVec> v) {
  std::sort(v.begin(), v.end(), LexLess{});
  v.erase(std::unique(v.begin(), v.end(), [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) == 0; }),
          v.end());
  return v;
}

}  // namespace

// ---- RootSystemType -------------------------------------------------------

std::string RootSystemType::name() const {
  static constexpr std::array<const char*, 8> letters = {"A", "B", "C", "D", "E", "F", "G", "BC"};
  return std::string(letters[static_cast<std::size_t>(family)]) + std::to_string(rank);
}

bool is_valid(const RootSystemType& t) {
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::BC:
      return t.rank >= 1;
    case Family::D:
      return t.rank >= 2;
    case Family::E:
      return t.rank >= 6 && t.rank <= 8;
    case Family::F:
      return t.rank == 4;
    case Family::G:
      return t.rank == 2;
  }
  return false;
}

Family parse_family(std::string_view letters) {
  static constexpr std::array<std::pair<std::string_view, Family>, 8> table = {{
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D},
      {"E", Family::E}, {"F", Family::F}, {"G", Family::G}, {"BC", Family::BC},
  }};
  for (auto [name, f] : table)
    if (name == letters) return f;
  throw InvalidType("unknown root system family '" + std::string(letters) + "'");
}

RootSystemType parse_root_system_type(std::string_view name) {
  std::size_t split = 0;
  while (split < name.size() && std::isalpha(static_cast<unsigned char>(name[split]))) ++split;
  const auto digits = name.substr(split);
  if (split == 0 || digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      digits.size() > 3)
    throw InvalidType("malformed root system type '" + std::string(name) + "'");
  RootSystemType t{parse_family(name.substr(0, split)), std::stoi(std::string(digits))};
  if (!is_valid(t)) throw InvalidType("invalid root system type '" + std::string(name) + "'");
  return t;
}

std::uint64_t weyl_group_order(const RootSystemType& t) {
  if (!is_valid(t)) throw InvalidType("invalid root system type " + t.name());
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      return factorial(n + 1);
    case Family::B:
    case Family::C:
    case Family::BC:
      return (std::uint64_t{1} << n) * factorial(n);
    case Family::D:
      return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E:
      return n == 6 ? 51840u : n == 7 ? 2903040u : 696729600u;
    case Family::F:
      return 1152;
    case Family::G:
      return 12;
  }
  return 0;
}

// ---- RootSystem -----------------------------------------------------------

RootSystem::RootSystem(const RootSystemType& type) : type_(type) {
  if (!is_valid(type)) throw InvalidType("invalid root system type " + type.name());
  const Index n = type.rank;
  RootSet roots;
  switch (type.family) {
    case Family::A:
      ambient_ = n + 1;
      for (Index i = 0; i <= n; ++i)
        for (Index j = 0; j <= n; ++j)
          if (i != j) roots.insert(e_pm_e(ambient_, i, j, 1, -1));
      for (Index i = 0; i < n; ++i) simple_.push_back(e_pm_e(ambient_, i, i + 1, 1, -1));
      break;
    case Family::B:
    case Family::C:
    case Family::BC:
    case Family::D:
      ambient_ = n;
      add_pm_ei_pm_ej(roots, n, n);
      if (type.family == Family::B || type.family == Family::BC) add_pm_ei(roots, n, 1);
      if (type.family == Family::C || type.family == Family::BC) add_pm_ei(roots, n, 2);
      for (Index i = 0; i + 1 < n; ++i) simple_.push_back(e_pm_e(n, i, i + 1, 1, -1));
      if (type.family == Family::D)
        simple_.push_back(e_pm_e(n, n - 2, n - 1, 1, 1));
      else
        simple_.push_back(unit(n, n - 1, type.family == Family::C ? 2 : 1));
      break;
    case Family::G:
      ambient_ = 3;
      for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) {
          if (i == j) continue;
          roots.insert(e_pm_e(3, i, j, 1, -1));
          RatVec l = RatVec::Constant(3, Rational(-1));
          l(i) = Rational(2);
          roots.insert(l);
          roots.insert(RatVec(-l));
        }
      simple_.push_back(vec({1, -1, 0}));
      simple_.push_back(vec({-2, 1, 1}));
      break;
    case Family::F: {
      ambient_ = 4;
      add_pm_ei_pm_ej(roots, 4, 4);
      add_pm_ei(roots, 4, 1);
      for (unsigned mask = 0; mask < 16; ++mask) roots.insert(half_signs(4, mask));
      simple_.push_back(vec({0, 1, -1, 0}));
      simple_.push_back(vec({0, 0, 1, -1}));
      simple_.push_back(vec({0, 0, 0, 1}));
      RatVec a4(4);
      a4 << Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2);
      simple_.push_back(a4);
      break;
    }
    case Family::E: {
      ambient_ = 8;
      auto all = e8_simple_roots();
      simple_.assign(all.begin(), all.begin() + n);
      const Subspace parabolic = subspace_from_spanning(std::span<const RatVec>(simple_), ambient_);
      for (const auto& r : e8_roots())
        if (parabolic.contains(r)) roots.insert(r);
      break;
    }
  }
  roots_.assign(roots.begin(), roots.end());
  span_ = subspace_from_spanning(std::span<const RatVec>(simple_), ambient_);
  gram_inverse_ = invert(gram(simple_));
  for (const auto& r : roots_) {
    const RatVec c = simple_coefficients(r);
    if ((c.array() >= Rational(0)).all()) positive_.push_back(r);
  }
}

bool RootSystem::contains(const RatVec& v) const {
  return v.size() == ambient_ && is_member(roots_, v);
}

RatVec RootSystem::simple_coefficients(const RatVec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("simple_coefficients: wrong length");
  RatVec pairings(static_cast<Index>(simple_.size()));
  for (std::size_t i = 0; i < simple_.size(); ++i) pairings(static_cast<Index>(i)) = dot(simple_[i], v);
  return gram_inverse_ * pairings;
}

RootSystem build_root_system(const RootSystemType& t) { return RootSystem(t); }

// ---- subsystems -----------------------------------------------------------

SubsystemFlags check_subsystem(const Subsystem& s) {
  if (!s.parent) throw InvalidSubsystem("subsystem has no parent root system");
  const auto members = sorted_unique(s.members);
  for (const auto& m : members)
    if (!s.parent->contains(m)) throw NotARoot("subsystem member " + format_vector(m) + " is not a parent root");
  SubsystemFlags flags{true, true};
  for (const auto& m : members)
    if (!is_member(members, RatVec(-m))) flags.symmetric = false;
  for (std::size_t i = 0; i < members.size() && flags.closed; ++i)
    for (std::size_t j = i; j < members.size(); ++j) {
      const RatVec sum = members[i] + members[j];
      if (s.parent->contains(sum) && !is_member(members, sum)) {
        flags.closed = false;
        break;
      }
    }
  return flags;
}

Subsystem closed_symmetric_closure(std::shared_ptr<const RootSystem> parent, const std::vector<RatVec>& generators) {
  RootSet set;
  for (const auto& g : generators) {
    if (!parent->contains(g)) throw NotARoot(format_vector(g) + " is not a root of " + parent->type().name());
    set.insert(g);
    set.insert(RatVec(-g));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<RatVec> current(set.begin(), set.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i; j < current.size(); ++j) {
        RatVec sum = current[i] + current[j];
        if (parent->contains(sum) && !set.contains(sum)) {
          set.insert(RatVec(-sum));
          set.insert(std::move(sum));
          grew = true;
        }
      }
  }
  return Subsystem{std::move(parent), std::vector<RatVec>(set.begin(), set.end())};
}

RatVec coroot(const RatVec& alpha) {
  const Rational n2 = dot(alpha, alpha);
  if (n2 == 0) throw ZeroVector("coroot of the zero vector");
  return (Rational(2) / n2) * alpha;
}

RatVec coroot(const RootSystem& rs, const RatVec& alpha) {
  if (!rs.contains(alpha)) throw NotARoot(format_vector(alpha) + " is not a root of " + rs.type().name());
  return coroot(alpha);
}

RatVec solve_in_span(const std::vector<RatVec>& simple_roots, const RatVec& values, Index ambient_dim) {
  if (static_cast<Index>(simple_roots.size()) != values.size())
    throw DimensionMismatch("solve_in_span: one value per simple root is required");
  if (simple_roots.empty()) return RatVec::Zero(ambient_dim);
  const auto x = solve(gram(simple_roots), values);
  if (!x) throw ConsistencyViolation("solve_in_span: simple roots are dependent");
  RatVec v = RatVec::Zero(ambient_dim);
  for (std::size_t j = 0; j < simple_roots.size(); ++j) v += (*x)(static_cast<Index>(j)) * simple_roots[j];
  return v;
}

RootSystemType identify_cartan_matrix(const Mat<int>& c) {
  const auto n = static_cast<int>(c.rows());
  const auto fail = [&] { return InvalidSubsystem("Cartan matrix of rank " + std::to_string(n) + " has no finite type"); };
  if (n == 1) return {Family::A, 1};

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  int edges = 0;
  int double_i = -1, double_j = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int bond = c(i, j) * c(j, i);
      if (bond == 0) continue;
      if (bond > 3) throw fail();
      if (bond == 3) {
        if (n != 2) throw fail();
        return {Family::G, 2};
      }
      if (bond == 2) {
        if (double_i >= 0) throw fail();
        double_i = i;
        double_j = j;
      }
      adj[static_cast<std::size_t>(i)].push_back(j);
      adj[static_cast<std::size_t>(j)].push_back(i);
      ++edges;
    }
  if (edges != n - 1) throw fail();
  const auto degree = [&](int i) { return static_cast<int>(adj[static_cast<std::size_t>(i)].size()); };
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (degree(i) > 3) throw fail();
    if (degree(i) == 3) {
      if (branch >= 0) throw fail();
      branch = i;
    }
  }

  if (double_i >= 0) {
    if (branch >= 0) throw fail();
    if (n == 2) return {Family::B, 2};
    if (degree(double_i) == 2 && degree(double_j) == 2) {
      if (n != 4) throw fail();
      return {Family::F, 4};
    }
    const int leaf = degree(double_i) == 1 ? double_i : double_j;
    const int other = leaf == double_i ? double_j : double_i;
    // |C(leaf, other)| = 2 exactly when the leaf root is the short one.
    return {std::abs(c(leaf, other)) == 2 ? Family::B : Family::C, n};
  }
  if (branch < 0) return {Family::A, n};

  std::vector<int> arms;
  for (int start : adj[static_cast<std::size_t>(branch)]) {
    int prev = branch, cur = start, len = 1;
    while (degree(cur) == 2) {
      const auto& nb = adj[static_cast<std::size_t>(cur)];
      const int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n};
  throw fail();
}

SubsystemStructure analyze_subsystem(const Subsystem& s) {
  const auto flags = check_subsystem(s);
  if (!flags.closed || !flags.symmetric)
    throw InvalidSubsystem(std::string("subsystem is not ") + (flags.closed ? "symmetric" : "closed"));
  const auto members = sorted_unique(s.members);
  SubsystemStructure out;
  if (members.empty()) return out;
  const Index n = s.parent->ambient_dim();

  Integer lcm_den(1);
  for (const auto& m : members)
    for (Index i = 0; i < n; ++i) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(m(i))));
  Rational max_mag(0);
  for (const auto& m : members)
    for (Index i = 0; i < n; ++i) max_mag = std::max(max_mag, Rational(abs(m(i)) * lcm_den));
  const Rational base = max_mag + 1;
  RatVec functional(n);
  Rational power(1);
  for (Index i = n - 1; i >= 0; --i) {
    functional(i) = power;
    power *= base;
  }

  for (const auto& m : members)
    if (dot(functional, m) > 0) out.positive.push_back(m);
  for (const auto& a : out.positive) {
    if (is_member(members, RatVec(a / Rational(2)))) continue;
    bool decomposable = false;
    for (std::size_t i = 0; i < out.positive.size() && !decomposable; ++i)
      if (is_member(members, RatVec(a - out.positive[i])) && dot(functional, RatVec(a - out.positive[i])) > 0)
        decomposable = true;
    if (!decomposable) out.simple.push_back(a);
  }

  const std::size_t k = out.simple.size();
  std::vector<int> label(k, -1);
  for (std::size_t start = 0; start < k; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(out.components.size());
    out.components.emplace_back();
    std::vector<std::size_t> stack{start};
    label[start] = id;
    while (!stack.empty()) {
      const auto cur = stack.back();
      stack.pop_back();
      out.components.back().push_back(cur);
      for (std::size_t j = 0; j < k; ++j)
        if (label[j] < 0 && dot(out.simple[cur], out.simple[j]) != 0) {
          label[j] = id;
          stack.push_back(j);
        }
    }
    std::sort(out.components.back().begin(), out.components.back().end());
  }

  for (const auto& comp : out.components) {
    const auto m = static_cast<Index>(comp.size());
    Mat<int> cartan(m, m);
    std::vector<RatVec> comp_simple;
    for (Index i = 0; i < m; ++i) {
      const auto& ai = out.simple[comp[static_cast<std::size_t>(i)]];
      comp_simple.push_back(ai);
      for (Index j = 0; j < m; ++j) {
        const Rational v = Rational(2) * dot(ai, out.simple[comp[static_cast<std::size_t>(j)]]) / dot(ai, ai);
        if (denominator(v) != 1) throw InvalidSubsystem("non-integral Cartan entry");
        cartan(i, j) = static_cast<int>(numerator(v));
      }
    }
    RootSystemType t = identify_cartan_matrix(cartan);
    const Subspace comp_span = subspace_from_spanning(std::span<const RatVec>(comp_simple), n);
    for (const auto& mbr : members)
      if (comp_span.contains(mbr) && is_member(members, RatVec(mbr / Rational(2)))) {
        t = {Family::BC, static_cast<int>(m)};
        break;
      }
    out.types.push_back(t);
  }
  return out;
}

std::vector<RootSystemType> classify_components(const Subsystem& s) {
  auto types = analyze_subsystem(s).types;
  std::sort(types.begin(), types.end());
  return types;
}

}  // namespace propact
