#include "propact/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "propact/criteria.hpp"
#include "propact/errors.hpp"
#include "propact/so44.hpp"

namespace propact {

// ---- serialization ------------------------------------------------------------

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

Json to_json(const RatMat& m) {
  Json a = Json::array();
  for (Index i = 0; i < m.rows(); ++i) a.push_back(to_json(RatVec(m.row(i).transpose())));
  return a;
}

Json to_json(const Subspace& s) { return to_json(s.basis()); }

Json to_json(const WeylElement& w) {
  Json j = {{"matrix", to_json(w.matrix())}};
  if (w.word()) {
    Json word = Json::array();
    for (int g : *w.word()) word.push_back(g + 1);  // simple reflections numbered from 1
    j["word"] = word;
  }
  return j;
}

Json to_json(const RankProfile& p) {
  return {{"real_rank", p.real_rank}, {"ahyp_rank", p.ahyp_rank}, {"inner", p.inner}};
}

RatVec vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of coordinates");
  RatVec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& c = j[i];
    if (c.is_number_integer())
      v(static_cast<Index>(i)) = Rational(c.get<long long>());
    else if (c.is_string())
      v(static_cast<Index>(i)) = parse_rational(c.get<std::string>());
    else
      throw ParseError("coordinate must be an integer or a \"p/q\" string");
  }
  return v;
}

// ---- spec files ---------------------------------------------------------------

namespace {

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError("unknown key '" + key + "' in " + where);
  }
}

std::vector<RatVec> vectors_from_json(const Json& j, Index n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be a list of vectors");
  std::vector<RatVec> out;
  for (const auto& v : j) {
    out.push_back(vector_from_json(v));
    if (out.back().size() != n)
      throw ParseError(where + ": vector of length " + std::to_string(out.back().size()) + ", ambient has " +
                       std::to_string(n));
  }
  return out;
}

template <typename F>
auto as_parse_error(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("spec: ") + e.what());
  } catch (const UnknownRealForm& e) {
    throw ParseError(e.what());
  } catch (const InvalidType& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

SpaceSpec parse_space_spec(const Json& doc) {
  return as_parse_error([&] {
    reject_unknown_keys(doc, {"g", "h", "options"}, "spec");
    SpaceSpec s;
    s.echo = doc;

    const Json& g = doc.at("g");
    reject_unknown_keys(g, {"name", "family", "rank"}, "g");
    if (g.contains("name")) {
      if (g.contains("family") || g.contains("rank")) throw ParseError("g: give either a name or a family and rank");
      s.embedding.ambient = lookup_real_form(g.at("name").get<std::string>());
    } else {
      RootSystemType t{parse_family(g.at("family").get<std::string>()), g.at("rank").get<int>()};
      s.embedding.ambient = descriptor_for_type(t);
    }
    const Index n = ambient_root_system(s.embedding.ambient)->ambient_dim();

    const Json h = doc.value("h", Json::object());
    reject_unknown_keys(h, {"subsystem_generators", "extra_abelian_vectors", "named_form", "explicit_members"}, "h");
    s.embedding.subsystem_generators =
        vectors_from_json(h.value("subsystem_generators", Json::array()), n, "h.subsystem_generators");
    s.embedding.extra_abelian_vectors =
        vectors_from_json(h.value("extra_abelian_vectors", Json::array()), n, "h.extra_abelian_vectors");
    s.embedding.explicit_members = h.value("explicit_members", false);
    if (h.contains("named_form")) s.named_form = h.at("named_form").get<std::string>();

    const Json opts = doc.value("options", Json::object());
    reject_unknown_keys(opts, {"force_bruteforce", "enumeration_cap"}, "options");
    s.force_bruteforce = opts.value("force_bruteforce", false);
    if (opts.contains("enumeration_cap")) {
      const auto cap = opts.at("enumeration_cap").get<long long>();
      if (cap <= 0) throw ParseError("options.enumeration_cap must be positive");
      s.enumeration_cap = static_cast<std::uint64_t>(cap);
    }
    return s;
  });
}

SpaceSpec parse_space_spec_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("spec is not valid JSON: ") + e.what());
  }
  return parse_space_spec(doc);
}

SpaceSpec load_space_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read spec file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_space_spec_text(buf.str());
}

// ---- documents ----------------------------------------------------------------

namespace {

Json type_list(const std::vector<RootSystemType>& types) {
  Json a = Json::array();
  for (const auto& t : types) a.push_back(t.name());
  return a;
}

Json vector_list(const std::vector<RatVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

bool is_so44(const RealFormDescriptor& g) {
  return g.name == "so(4,4)" && g.restricted && *g.restricted == RootSystemType{Family::D, 4};
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

Json run_report(const SpaceSpec& spec, const RunOptions& options) {
  const auto t0 = Clock::now();
  const bool force = options.force_bruteforce.value_or(spec.force_bruteforce);
  const std::uint64_t cap = options.enumeration_cap.value_or(spec.enumeration_cap);
  const RealFormDescriptor& g = spec.embedding.ambient;
  const auto rs = ambient_root_system(g);
  const WeylGroup w(*rs, cap);

  const RankProfile g_profile = rank_profile(g);
  const DerivedEmbedding emb = derive_embedding(spec.embedding);
  if (spec.named_form) {
    const RankProfile named = rank_profile(lookup_real_form(*spec.named_form));
    if (!(named == emb.h_profile))
      throw ConsistencyViolation("h.named_form " + *spec.named_form + " has ranks (" +
                                 std::to_string(named.real_rank) + ", " + std::to_string(named.ahyp_rank) +
                                 ") but the subsystem gives (" + std::to_string(emb.h_profile.real_rank) + ", " +
                                 std::to_string(emb.h_profile.ahyp_rank) + ")");
  }
  const bool strongly_regular = check_strong_regularity(spec.embedding);
  const auto [w1, normal] = normalize_bh_into_b(emb, w);
  const Subspace b = minus_w0_fixed_space(w);

  Json doc;
  doc["kind"] = "report";
  doc["input"] = spec.echo;
  doc["g"] = {{"name", g.name}, {"restricted", rs->type().name()}, {"b", to_json(b)}};
  doc["h"] = {{"components", type_list(emb.h_components)},
              {"sigma_h", vector_list(emb.sigma_h.members)},
              {"abelian_dim", static_cast<int>(spec.embedding.extra_abelian_vectors.size())},
              {"a_h", to_json(emb.a_h)},
              {"b_h", to_json(emb.b_h)}};
  doc["ranks"] = {{"real_g", g_profile.real_rank},
                  {"real_h", emb.h_profile.real_rank},
                  {"ahyp_g", g_profile.ahyp_rank},
                  {"ahyp_h", emb.h_profile.ahyp_rank}};
  doc["hypotheses"] = {{"strongly_regular", strongly_regular}, {"h_inner", emb.h_profile.inner}};
  doc["normalization"] = {{"w1", to_json(w1)}, {"b_h", to_json(normal.b_h)}};

  const bool c1 = decide_c1(g_profile, emb.h_profile);
  doc["c1"] = {{"holds", c1}, {"method", "real_rank_comparison"}};

  const C2Result c2 = decide_c2(normal, w, force);
  Json c2j = {{"holds", c2.holds}, {"method", to_string(c2.method)}};
  if (c2.witness) {
    // Express the witness for the embedding as given: 𝔟 ⊆ w 𝔞_h.
    const WeylElement orig = (*c2.witness) * w1.inverse();
    if (!subspace_contains(orig(emb.a_h), b)) throw ConsistencyViolation("C2 witness does not carry a_h over b");
    c2j["witness"] = to_json(orig);
    c2j["witness_image"] = to_json(orig(emb.a_h));
  }
  doc["c2"] = c2j;

  std::optional<bool> c3;
  Json c3j;
  if (strongly_regular && emb.h_profile.inner) {
    const C3Result r = decide_c3(normal, g, w);
    c3 = r.holds;
    c3j = {{"status", r.holds ? "true" : "false"}, {"method", "ahyp_rank_comparison"}};
    if (r.witness) {
      c3j["witness"] = to_json(*r.witness);
      c3j["wall_root"] = to_json(*r.wall_root);
      c3j["witness_verified"] = r.verified;
    }
  } else if (is_so44(g)) {
    // Every sl2 in so(4,4) is conjugate to one in the classification list, so
    // C3 holds iff one of its semisimple elements misses W-translates of 𝔞_h.
    const WeylGroup& d4 = so44::d4_group();
    Json refuted = Json::array();
    std::optional<RatVec> proper;
    for (const auto& row : so44::table2()) {
      if (is_zero(row.h)) continue;
      const auto ob = sl2_obstruction(row.h, emb.a_h, d4);
      if (!ob) {
        proper = row.h;
        break;
      }
      refuted.push_back({{"h", to_json(row.h)}, {"image", to_json((*ob)(row.h))}});
    }
    c3 = proper.has_value();
    c3j = {{"status", *c3 ? "true" : "false"}, {"method", "sl2_classification"}};
    if (proper)
      c3j["witness"] = to_json(*proper);
    else
      c3j["refuted"] = refuted;
  } else {
    c3j = {{"status", "not_decidable"},
           {"method", "hypotheses"},
           {"reason", strongly_regular ? "h is not of inner type" : "the space is not strongly regular"}};
  }
  doc["c3"] = c3j;

  if ((c3.value_or(false) && !c2.holds) || (c2.holds && !c1))
    throw ConsistencyViolation("verdicts violate C3 => C2 => C1");
  if (options.timing) doc["timing_ms"] = ms_since(t0);
  return doc;
}

Json ranks_document(std::string_view form) {
  const RealFormDescriptor& d = lookup_real_form(form);
  Json doc;
  doc["kind"] = "ranks";
  doc["name"] = d.name;
  if (d.restricted) doc["restricted"] = d.restricted->name();
  if (!d.simple_factors.empty()) {
    Json f = Json::array();
    for (const auto& s : d.simple_factors) f.push_back(s.name);
    doc["factors"] = f;
  }
  doc["abelian_summand_dim"] = d.abelian_summand_dim;
  if (d.isomorphic_to) doc["isomorphic_to"] = *d.isomorphic_to;
  if (d.complex) doc["complex"] = true;
  doc["profile"] = to_json(rank_profile(d));
  if (!d.source.empty()) doc["source"] = d.source;
  return doc;
}

Json table1_document() {
  const Table1Report r = validate_against_table1();
  Json doc;
  doc["kind"] = "table1";
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"family", row.family},
                    {"k", row.k},
                    {"form", row.form},
                    {"expected", {row.expected_ahyp, row.expected_real}},
                    {"computed", {row.computed.ahyp_rank, row.computed.real_rank}},
                    {"ok", row.ok}});
  doc["rows"] = rows;
  Json mismatches = Json::array();
  for (const auto& c : r.completeness)
    if (!c.ok) mismatches.push_back({{"form", c.form}, {"computed", {c.computed.ahyp_rank, c.computed.real_rank}}});
  doc["completeness_checked"] = r.completeness.size();
  doc["completeness_mismatches"] = mismatches;
  doc["table_ok"] = r.table_ok();
  doc["completeness_ok"] = r.completeness_ok();
  return doc;
}

Json appendix_so44_document() {
  Json doc;
  doc["kind"] = "appendix-so44";
  doc["a"] = to_json(so44::vector_a());
  doc["b"] = to_json(so44::vector_b());
  doc["c"] = to_json(so44::vector_c());
  doc["u1"] = to_json(so44::u1());

  const auto t2 = so44::verify_table2();
  Json rows = Json::array();
  for (std::size_t i = 0; i < t2.rows.size(); ++i) {
    const auto& c = t2.rows[i];
    const auto& row = so44::table2()[i];
    rows.push_back({{"row", c.row},
                    {"h", to_json(row.h)},
                    {"wh", to_json(row.wh)},
                    {"combo", {row.combo[0], row.combo[1], row.combo[2]}},
                    {"same_orbit", c.same_orbit},
                    {"combination", c.combination},
                    {"in_u1", c.in_u1},
                    {"ok", c.ok()}});
  }
  doc["table2"] = {{"rows", rows}, {"distinct_orbits", t2.distinct_orbits}, {"ok", t2.ok()}};

  const DerivedEmbedding u = so44::build_u();
  const RankProfile g = rank_profile(lookup_real_form("so(4,4)"));
  doc["u"] = {{"strongly_regular", check_strong_regularity(u.spec)},
              {"profile", to_json(u.h_profile)},
              {"a_h", to_json(u.a_h)},
              {"b_h", to_json(u.b_h)}};
  doc["so44"] = {{"profile", to_json(g)}};

  const auto c2 = decide_c2(u, so44::d4_group());
  doc["c1"] = decide_c1(g, u.h_profile);
  doc["c2"] = {{"holds", c2.holds}, {"method", to_string(c2.method)}};

  const auto np = so44::verify_no_proper_sl2();
  Json refuted = Json::array();
  bool some_proper = false;
  for (const auto& r : np.rows) {
    some_proper = some_proper || !r.witness;
    Json j = {{"row", r.row}, {"h", to_json(r.h)}, {"listed_image_valid", r.table_image_in_orbit}};
    if (r.image) j["image"] = to_json(*r.image);
    refuted.push_back(j);
  }
  doc["c3"] = {{"holds", some_proper}, {"refuted", refuted}, {"all_refuted", np.ok()}};
  std::string theorem;
  try {
    decide_c3(u, lookup_real_form("so(4,4)"), so44::d4_group());
    theorem = "applies";
  } catch (const HypothesesNotMet& e) {
    theorem = e.what();
  }
  doc["rank_criterion"] = theorem;
  doc["ok"] = t2.ok() && np.ok() && c2.holds && check_strong_regularity(u.spec);
  return doc;
}

Json catalog_verify_document() {
  Json doc;
  doc["kind"] = "catalog-verify";
  Json rows = Json::array();
  bool all = true;
  for (const auto& inst : strongly_regular_instances()) {
    const bool sr = check_strong_regularity(inst.spec);
    Json j = {{"space", inst.label}, {"family", inst.family}, {"strongly_regular", sr}};
    bool ok = sr;
    if (sr) {
      const auto e = derive_embedding(inst.spec);
      const bool types_ok = e.h_components == inst.expected_components;
      j["components"] = type_list(e.h_components);
      j["components_ok"] = types_ok;
      ok = ok && types_ok;
      if (!inst.h_form.empty()) {
        const bool ranks_ok = rank_profile(lookup_real_form(inst.h_form)) == e.h_profile;
        j["h_form"] = inst.h_form;
        j["h_ranks_ok"] = ranks_ok;
        ok = ok && ranks_ok;
      }
    }
    j["ok"] = ok;
    all = all && ok;
    rows.push_back(j);
  }
  doc["instances"] = rows;
  doc["ok"] = all;
  return doc;
}

// ---- text rendering -------------------------------------------------------------

namespace {

std::string vec_text(const Json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get<std::string>();
  return s + ")";
}

std::string rows_text(const Json& rows) {
  if (rows.empty()) return "0";
  std::string s = "span{";
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? ", " : "") + vec_text(rows[i]);
  return s + "}";
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string word_text(const Json& w) {
  if (!w.contains("word")) return "";
  if (w["word"].empty()) return "id";
  std::string s;
  for (const auto& g : w["word"]) s += (s.empty() ? "s" : " s") + std::to_string(g.get<int>());
  return s;
}

std::string matrix_text(const Json& w, const std::string& indent) {
  std::string s;
  for (const auto& row : w["matrix"]) s += indent + vec_text(row) + "\n";
  return s;
}

std::string render_report(const Json& d) {
  std::ostringstream o;
  o << "g = " << d["g"]["name"].get<std::string>() << "  (restricted " << d["g"]["restricted"].get<std::string>()
    << ")\n";
  std::string comps;
  for (const auto& c : d["h"]["components"]) comps += (comps.empty() ? "" : " + ") + c.get<std::string>();
  if (comps.empty()) comps = "none";
  o << "h components: " << comps;
  if (d["h"]["abelian_dim"].get<int>() > 0) o << "  + abelian part of dim " << d["h"]["abelian_dim"].get<int>();
  o << "\n";
  o << "a_h = " << rows_text(d["h"]["a_h"]) << "\n";
  o << "b_h = " << rows_text(d["h"]["b_h"]) << "\n";
  o << "b   = " << rows_text(d["g"]["b"]) << "\n";
  const auto& r = d["ranks"];
  o << "ranks: real(g) = " << r["real_g"] << ", real(h) = " << r["real_h"] << ", ahyp(g) = " << r["ahyp_g"]
    << ", ahyp(h) = " << r["ahyp_h"] << "\n";
  o << "strongly regular: " << yes(d["hypotheses"]["strongly_regular"]) << ", h inner: "
    << yes(d["hypotheses"]["h_inner"]) << "\n";
  o << "normalizing element w1: " << word_text(d["normalization"]["w1"]) << "\n";
  o << "C1: " << yes(d["c1"]["holds"]) << "\n";
  o << "C2: " << yes(d["c2"]["holds"]) << "  [" << d["c2"]["method"].get<std::string>() << "]\n";
  if (d["c2"].contains("witness")) {
    o << "  witness w = " << word_text(d["c2"]["witness"]) << ", b contained in w a_h = "
      << rows_text(d["c2"]["witness_image"]) << "\n";
    o << matrix_text(d["c2"]["witness"], "    ");
  }
  const auto& c3 = d["c3"];
  o << "C3: " << c3["status"].get<std::string>() << "  [" << c3["method"].get<std::string>() << "]\n";
  if (c3.contains("reason")) o << "  " << c3["reason"].get<std::string>() << "\n";
  if (c3.contains("witness")) o << "  witness H = " << vec_text(c3["witness"]) << "\n";
  if (c3.contains("wall_root")) o << "  root vanishing on a_h: " << vec_text(c3["wall_root"]) << "\n";
  if (c3.contains("refuted"))
    for (const auto& x : c3["refuted"])
      o << "  H = " << vec_text(x["h"]) << " meets a_h at " << vec_text(x["image"]) << "\n";
  if (d.contains("timing_ms")) o << "time: " << d["timing_ms"].get<double>() << " ms\n";
  return o.str();
}

std::string render_ranks(const Json& d) {
  std::ostringstream o;
  o << d["name"].get<std::string>();
  if (d.contains("restricted")) o << "  restricted " << d["restricted"].get<std::string>();
  if (d.contains("factors")) {
    o << "  factors";
    for (const auto& f : d["factors"]) o << " " << f.get<std::string>();
  }
  if (d["abelian_summand_dim"].get<int>() > 0) o << "  abelian " << d["abelian_summand_dim"];
  if (d.contains("isomorphic_to")) o << "  (isomorphic to " << d["isomorphic_to"].get<std::string>() << ")";
  o << "\n";
  const auto& p = d["profile"];
  o << "real rank " << p["real_rank"] << ", a-hyperbolic rank " << p["ahyp_rank"] << ", inner "
    << yes(p["inner"]) << "\n";
  return o.str();
}

std::string render_table1(const Json& d) {
  std::ostringstream o;
  o << "family          k  form          expected  computed\n";
  for (const auto& r : d["rows"]) {
    std::string fam = r["family"].get<std::string>();
    std::string form = r["form"].get<std::string>();
    fam.resize(std::max<std::size_t>(fam.size(), 15), ' ');
    form.resize(std::max<std::size_t>(form.size(), 13), ' ');
    o << fam << " " << (r["k"].get<int>() ? std::to_string(r["k"].get<int>()) : "-") << "  " << form << " ("
      << r["expected"][0] << "," << r["expected"][1] << ")     (" << r["computed"][0] << "," << r["computed"][1]
      << ")  " << (r["ok"].get<bool>() ? "ok" : "MISMATCH") << "\n";
  }
  o << "table rows: " << (d["table_ok"].get<bool>() ? "all match" : "MISMATCH") << "\n";
  o << "other catalog entries checked for equal ranks: " << d["completeness_checked"] << "\n";
  for (const auto& m : d["completeness_mismatches"])
    o << "  " << m["form"].get<std::string>() << ": ahyp " << m["computed"][0] << " != real " << m["computed"][1]
      << "\n";
  o << "completeness: " << (d["completeness_ok"].get<bool>() ? "holds" : "FAILS") << "\n";
  return o.str();
}

std::string render_so44(const Json& d) {
  std::ostringstream o;
  o << "a = " << vec_text(d["a"]) << ", b = " << vec_text(d["b"]) << ", c = " << vec_text(d["c"]) << "\n";
  o << "u1 = " << rows_text(d["u1"]) << "\n";
  o << "semisimple elements:\n";
  for (const auto& r : d["table2"]["rows"]) {
    const auto& c = r["combo"];
    o << "  " << r["row"] << ". " << vec_text(r["h"]) << " -> " << vec_text(r["wh"]) << " = " << c[0] << "a + " << c[1]
      << "b + " << c[2] << "c  " << (r["ok"].get<bool>() ? "ok" : "FAIL") << "\n";
  }
  o << "rows verified: " << yes(d["table2"]["ok"]) << ", distinct orbits: " << yes(d["table2"]["distinct_orbits"])
    << "\n";
  const auto& u = d["u"];
  o << "u: strongly regular " << yes(u["strongly_regular"]) << ", real rank " << u["profile"]["real_rank"]
    << ", ahyp rank " << u["profile"]["ahyp_rank"] << ", inner " << yes(u["profile"]["inner"]) << "\n";
  o << "so(4,4): real rank " << d["so44"]["profile"]["real_rank"] << ", ahyp rank "
    << d["so44"]["profile"]["ahyp_rank"] << "\n";
  o << "C1: " << yes(d["c1"]) << "\n";
  o << "C2: " << yes(d["c2"]["holds"]) << "  [" << d["c2"]["method"].get<std::string>() << "]\n";
  o << "C3: " << yes(d["c3"]["holds"]) << "  (every nonzero H meets u1 under W)\n";
  for (const auto& r : d["c3"]["refuted"])
    o << "  H = " << vec_text(r["h"]) << " -> " << (r.contains("image") ? vec_text(r["image"]) : "none") << "\n";
  o << "rank criterion for C3: " << d["rank_criterion"].get<std::string>() << "\n";
  o << "appendix verified: " << yes(d["ok"]) << "\n";
  return o.str();
}

std::string render_catalog(const Json& d) {
  std::ostringstream o;
  for (const auto& r : d["instances"]) {
    std::string label = r["space"].get<std::string>();
    label.resize(std::max<std::size_t>(label.size(), 26), ' ');
    o << label << " strongly regular " << yes(r["strongly_regular"]);
    if (r.contains("components")) {
      std::string comps;
      for (const auto& c : r["components"]) comps += (comps.empty() ? "" : "+") + c.get<std::string>();
      o << "  h: " << (comps.empty() ? "0" : comps);
    }
    o << "  " << (r["ok"].get<bool>() ? "ok" : "FAIL") << "\n";
  }
  o << "all instances: " << (d["ok"].get<bool>() ? "ok" : "FAIL") << "\n";
  return o.str();
}

}  // namespace

std::string render_text(const Json& doc) {
  const auto kind = doc.value("kind", std::string());
  if (kind == "report") return render_report(doc);
  if (kind == "ranks") return render_ranks(doc);
  if (kind == "table1") return render_table1(doc);
  if (kind == "appendix-so44") return render_so44(doc);
  if (kind == "catalog-verify") return render_catalog(doc);
  return doc.dump(2) + "\n";
}

}  // namespace propact
