#include "propact/homspace.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "propact/errors.hpp"

namespace propact {

namespace {

Subspace span_in(const std::vector<RatVec>& vs, Index n) {
  return subspace_from_spanning(std::span<const RatVec>(vs), n);
}

std::vector<RatVec> sorted_unique(std::vector<RatVec> v) {
  std::sort(v.begin(), v.end(), LexLess{});
  v.erase(std::unique(v.begin(), v.end(), [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) == 0; }),
          v.end());
  return v;
}

std::uint64_t product_of_orders(const std::vector<RootSystemType>& types) {
  std::uint64_t order = 1;
  for (const auto& t : types) order *= weyl_group_order(t);
  return order;
}

}  // namespace

std::shared_ptr<const RootSystem> ambient_root_system(const RealFormDescriptor& g) {
  if (!g.restricted) throw InvalidType(g.name + " is not simple; an ambient needs one restricted root system");
  static std::mutex mutex;
  static std::map<RootSystemType, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[*g.restricted];
  if (!slot) slot = std::make_shared<const RootSystem>(*g.restricted);
  return slot;
}

WeylGroup DerivedEmbedding::h_group(std::uint64_t cap) const {
  return WeylGroup(ambient_roots->ambient_dim(), structure.simple, sigma_h.members, product_of_orders(h_components),
                   cap);
}

DerivedEmbedding derive_embedding(const EmbeddingSpec& spec) {
  auto rs = ambient_root_system(spec.ambient);
  const Index n = rs->ambient_dim();

  Subsystem sigma;
  if (spec.explicit_members) {
    for (const auto& m : spec.subsystem_generators)
      if (!rs->contains(m)) throw NotARoot(format_vector(m) + " is not a root of " + rs->type().name());
    sigma = Subsystem{rs, sorted_unique(spec.subsystem_generators)};
    const auto flags = check_subsystem(sigma);
    if (!flags.closed) throw InvalidSubsystem("listed members are not closed under root sums");
    if (!flags.symmetric) throw InvalidSubsystem("listed members are not closed under negation");
  } else {
    sigma = closed_symmetric_closure(rs, spec.subsystem_generators);
  }

  DerivedEmbedding e{spec,
                     rs,
                     sigma,
                     analyze_subsystem(sigma),
                     Subspace(n),
                     Subspace(n),
                     Subspace(n),
                     {},
                     {},
                     WeylElement::identity(n)};

  std::vector<RatVec> coroots;
  for (const auto& m : sigma.members) coroots.push_back(coroot(m));
  e.coroot_span = span_in(coroots, n);

  for (const auto& x : spec.extra_abelian_vectors) {
    if (x.size() != n) throw DimensionMismatch("extra abelian vector has wrong length");
    if (!rs->root_span().contains(x)) throw InvalidSubsystem("extra abelian vector " + format_vector(x) + " is not in a");
  }
  std::vector<RatVec> all = coroots;
  all.insert(all.end(), spec.extra_abelian_vectors.begin(), spec.extra_abelian_vectors.end());
  e.a_h = span_in(all, n);
  if (e.a_h.dim() != e.coroot_span.dim() + static_cast<Index>(spec.extra_abelian_vectors.size()))
    throw RedundantAbelianVector("extra abelian vectors are dependent on each other or on the coroots of the subsystem");

  e.h_components = e.structure.types;
  std::sort(e.h_components.begin(), e.h_components.end());
  e.h_profile = rank_profile(e.h_components, static_cast<int>(spec.extra_abelian_vectors.size()));

  const WeylGroup wh = e.h_group();
  e.w0_h = longest_element(wh);
  e.b_h = minus_w0_fixed_space(wh);
  if (e.b_h.dim() != e.h_profile.ahyp_rank)
    throw ConsistencyViolation("b_h has dimension " + std::to_string(e.b_h.dim()) + " but the components of h give " +
                               std::to_string(e.h_profile.ahyp_rank));
  if (e.coroot_span.dim() != e.h_profile.real_rank - static_cast<int>(spec.extra_abelian_vectors.size()))
    throw ConsistencyViolation("coroot span dimension disagrees with the rank of h");
  return e;
}

bool check_strong_regularity(const EmbeddingSpec& spec) {
  std::shared_ptr<const RootSystem> rs;
  try {
    rs = ambient_root_system(spec.ambient);
  } catch (const InvalidType&) {
    return false;
  }
  for (const auto& m : spec.subsystem_generators)
    if (m.size() != rs->ambient_dim() || !rs->contains(m)) return false;
  for (const auto& x : spec.extra_abelian_vectors)
    if (x.size() != rs->ambient_dim() || !rs->root_span().contains(x)) return false;
  if (!spec.explicit_members) return true;  // a closure is closed and symmetric by construction
  const auto flags = check_subsystem(Subsystem{rs, spec.subsystem_generators});
  return flags.closed && flags.symmetric;
}

std::pair<WeylElement, DerivedEmbedding> normalize_bh_into_b(const DerivedEmbedding& emb, const WeylGroup& w) {
  const Index n = w.ambient_dim();
  const Subspace b = minus_w0_fixed_space(w);
  if (subspace_contains(b, emb.b_h)) return {WeylElement::identity(n), emb};

  const auto orbit = subspace_orbit(w, b);
  const auto parts = orbit.sorted_points();
  const std::size_t j = covering_member(emb.b_h, std::span<const Subspace>(parts));
  const WeylElement w1 = orbit.witness(*orbit.find(parts[j]));
  const WeylElement back = w1.inverse();

  // Transport everything, the positive system of h included: re-deriving
  // from the conjugated spec could pick another chamber and so another b_h.
  const auto move_space = [&back](const Subspace& s) {
    return Subspace::from_rows(RatMat(s.basis() * back.matrix().transpose()));
  };
  DerivedEmbedding out = emb;
  for (auto& g : out.spec.subsystem_generators) g = back(g);
  for (auto& x : out.spec.extra_abelian_vectors) x = back(x);
  for (auto& m : out.sigma_h.members) m = back(m);
  for (auto& r : out.structure.positive) r = back(r);
  for (auto& r : out.structure.simple) r = back(r);
  out.coroot_span = move_space(emb.coroot_span);
  out.a_h = move_space(emb.a_h);
  out.b_h = move_space(emb.b_h);
  out.w0_h = WeylElement(RatMat(back.matrix() * emb.w0_h.matrix() * w1.matrix()));
  if (!subspace_contains(b, out.b_h)) throw ConsistencyViolation("normalize_bh_into_b: conjugated b_h escapes b");
  return {w1, std::move(out)};
}

// ---- example spaces ---------------------------------------------------------

namespace {

RatVec unit(Index n, Index i, long scale = 1) {
  RatVec v = RatVec::Zero(n);
  v(i) = Rational(scale);
  return v;
}

// Root sets of classical subsystems on the first k coordinates of Q^n,
// written out directly rather than generated.
std::vector<RatVec> type_a_block(Index n, Index k) {
  std::vector<RatVec> out;
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      if (i != j) out.push_back(RatVec(unit(n, i) - unit(n, j)));
  return out;
}

std::vector<RatVec> type_d_block(Index n, Index k) {
  std::vector<RatVec> out;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j)
      for (long si : {1, -1})
        for (long sj : {1, -1}) out.push_back(RatVec(unit(n, i, si) + unit(n, j, sj)));
  return out;
}

std::vector<RatVec> with_multiples_of_units(std::vector<RatVec> base, Index n, Index k, std::vector<long> scales) {
  for (Index i = 0; i < k; ++i)
    for (long s : scales) {
      base.push_back(unit(n, i, s));
      base.push_back(unit(n, i, -s));
    }
  return base;
}

std::vector<RatVec> type_b_block(Index n, Index k) { return with_multiples_of_units(type_d_block(n, k), n, k, {1}); }
std::vector<RatVec> type_c_block(Index n, Index k) { return with_multiples_of_units(type_d_block(n, k), n, k, {2}); }
std::vector<RatVec> type_bc_block(Index n, Index k) {
  return with_multiples_of_units(type_d_block(n, k), n, k, {1, 2});
}

// The components a classical block of the given type splits into.
std::vector<RootSystemType> expected_types(Family f, int k) {
  if (k == 0) return {};
  if (f == Family::D && k == 2) return {{Family::A, 1}, {Family::A, 1}};
  if (f == Family::D && k == 3) return {{Family::A, 3}};
  if ((f == Family::B || f == Family::C) && k == 1) return {{Family::A, 1}};
  if (f == Family::C && k == 2) return {{Family::B, 2}};
  return {{f, k}};
}

// Roots of the ambient system lying in the span of the chosen simple roots
// (1-based indices).
std::vector<RatVec> parabolic_block(const RootSystem& rs, std::vector<int> simple_indices) {
  std::vector<RatVec> gens;
  for (int i : simple_indices) gens.push_back(rs.simple_roots()[static_cast<std::size_t>(i - 1)]);
  const Subspace s = span_in(gens, rs.ambient_dim());
  std::vector<RatVec> out;
  for (const auto& r : rs.roots())
    if (s.contains(r)) out.push_back(r);
  return out;
}

std::string str(int v) { return std::to_string(v); }

}  // namespace

std::vector<StronglyRegularInstance> strongly_regular_instances() {
  const Catalog& cat = Catalog::builtin();
  std::vector<StronglyRegularInstance> out;

  const auto add = [&](std::string label, std::string family, std::string g, std::string h, std::vector<RatVec> members,
                       std::vector<RootSystemType> expected) {
    StronglyRegularInstance inst;
    inst.label = std::move(label);
    inst.family = std::move(family);
    inst.g_form = g;
    inst.h_form = std::move(h);
    inst.spec.ambient = cat.lookup(g);
    // so(3,3) is catalogued through sl(4,R); its D3 realization keeps the
    // orthogonal blocks ±e_i ± e_j available.
    if (g == "so(3,3)") inst.spec.ambient.restricted = RootSystemType{Family::D, 3};
    inst.spec.subsystem_generators = std::move(members);
    inst.spec.explicit_members = true;
    std::sort(expected.begin(), expected.end());
    inst.expected_components = std::move(expected);
    out.push_back(std::move(inst));
  };
  const auto dim_of = [&](const std::string& g) {
    return g == "so(3,3)" ? Index{3} : ambient_root_system(cat.lookup(g))->ambient_dim();
  };
  const auto sl_name = [](int k) { return k >= 2 ? "sl(" + str(k) + ",R)" : std::string(); };

  struct Triple {
    int c, a, b;
  };
  const std::vector<Triple> triples = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}};
  for (const auto& [c, a, b] : triples) {
    std::string g, h;

    g = "sl(" + str(b) + ",R)";
    add("SL(" + str(b) + ",R)/SL(" + str(a) + ",R)", "SL(b,R)/SL(a,R)", g, sl_name(a), type_a_block(dim_of(g), a),
        {{Family::A, a - 1}});

    g = "sp(" + str(b) + ",R)";
    add("Sp(" + str(b) + ",R)/Sp(" + str(a) + ",R)", "Sp(b,R)/Sp(a,R)", g, "sp(" + str(a) + ",R)",
        type_c_block(dim_of(g), a), expected_types(Family::C, a));

    g = "so(" + str(b) + "," + str(b) + ")";
    if (b == 3) g = "so(3,3)";
    add("SO(" + str(b) + "," + str(b) + ")/SO(" + str(a) + "," + str(a) + ")", "SO(b,b)/SO(a,a)", g,
        "so(" + str(a) + "," + str(a) + ")", type_d_block(dim_of(g), a), expected_types(Family::D, a));

    g = "so(" + str(b) + "," + str(b + 1) + ")";
    add("SO(" + str(b) + "," + str(b + 1) + ")/SO(" + str(a) + "," + str(a + 1) + ")", "SO(b,b+1)/SO(a,a+1)", g,
        "so(" + str(a) + "," + str(a + 1) + ")", type_b_block(dim_of(g), a), expected_types(Family::B, a));

    g = b == 3 ? "so(3,3)" : "so(" + str(b) + "," + str(b) + ")";
    add("SO(" + str(b) + "," + str(b) + ")/SL(" + str(a) + ",R)", "SO(b,b)/SL(a,R)", g, sl_name(a),
        type_a_block(dim_of(g), a), {{Family::A, a - 1}});

    g = "so(" + str(b) + "," + str(b + 1) + ")";
    add("SO(" + str(b) + "," + str(b + 1) + ")/SL(" + str(a) + ",R)", "SO(b,b+1)/SL(a,R)", g, sl_name(a),
        type_a_block(dim_of(g), a), {{Family::A, a - 1}});

    g = "so(" + str(a) + "," + str(b) + ")";
    add("SO(" + str(a) + "," + str(b) + ")/SL(" + str(c) + ",R)", "SO(a,b)/SL(c,R)", g, sl_name(c),
        type_a_block(dim_of(g), c), expected_types(Family::A, c - 1));

    g = "so(" + str(2 * a) + "," + str(2 * b) + ")";
    add("SO(" + str(2 * a) + "," + str(2 * b) + ")/SO(" + str(2 * c) + "," + str(2 * b) + ")", "SO(2a,2b)/SO(2c,2b)",
        g, "so(" + str(2 * c) + "," + str(2 * b) + ")", type_b_block(dim_of(g), 2 * c), {{Family::B, 2 * c}});

    g = "so(" + str(2 * a) + "," + str(2 * b + 1) + ")";
    add("SO(" + str(2 * a) + "," + str(2 * b + 1) + ")/SO(" + str(2 * c) + "," + str(2 * b + 1) + ")",
        "SO(2a,2b+1)/SO(2c,2b+1)", g, "so(" + str(2 * c) + "," + str(2 * b + 1) + ")",
        type_b_block(dim_of(g), 2 * c), {{Family::B, 2 * c}});

    g = "su(" + str(a) + "," + str(b) + ")";
    add("SU(" + str(a) + "," + str(b) + ")/SU(" + str(c) + "," + str(b) + ")", "SU(a,b)/SU(c,b)", g,
        "su(" + str(c) + "," + str(b) + ")", type_bc_block(dim_of(g), c), {{Family::BC, c}});

    add("SU(" + str(a) + "," + str(b) + ")/SL(" + str(c) + ",C)", "SU(a,b)/SL(c,C)", g,
        c >= 2 ? "sl(" + str(c) + ",C)" : "", type_a_block(dim_of(g), c), expected_types(Family::A, c - 1));

    g = "su*(" + str(2 * b + 2) + ")";
    add("SU*(" + str(2 * b + 2) + ")/SU*(" + str(2 * a + 2) + ")", "SU*(2b+2)/SU*(2a+2)", g,
        "su*(" + str(2 * a + 2) + ")", type_a_block(dim_of(g), a + 1), {{Family::A, a}});

    g = "sp(" + str(a) + "," + str(b) + ")";
    add("Sp(" + str(a) + "," + str(b) + ")/SU*(" + str(2 * c + 2) + ")", "Sp(a,b)/SU*(2c+2)", g,
        "su*(" + str(2 * c + 2) + ")", type_a_block(dim_of(g), c + 1), {{Family::A, c}});
  }

  const auto exceptional = [&](std::string label, std::string g, std::string h, std::vector<int> simple,
                               RootSystemType expected) {
    const auto rs = ambient_root_system(cat.lookup(g));
    add(label, label, g, std::move(h), parabolic_block(*rs, std::move(simple)), {expected});
  };
  exceptional("E8_VIII/SO(6,6)", "e8_VIII", "so(6,6)", {2, 3, 4, 5, 6, 7}, {Family::D, 6});
  exceptional("E8_IX/E7_VII", "e8_IX", "e7_VII", {2, 3, 4}, {Family::C, 3});
  {
    // The short root e1 of BC2 together with its double.
    const std::string g = "e6_III";
    const Index n = dim_of(g);
    add("E6_III/SU(1,6)", "E6_III/SU(1,6)", g, "su(1,6)", with_multiples_of_units({}, n, 1, {1, 2}),
        {{Family::BC, 1}});
  }
  exceptional("F4_I/Sp(3,R)", "f4_I", "sp(3,R)", {2, 3, 4}, {Family::C, 3});
  exceptional("F4_I/SL(3,R)", "f4_I", "sl(3,R)", {1, 2}, {Family::A, 2});
  return out;
}

}  // namespace propact
