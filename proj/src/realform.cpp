#include "propact/realform.hpp"

#include <map>
#include <mutex>
#include <regex>

#include "json.hpp"

#include "propact/errors.hpp"
#include "propact/weyl.hpp"

namespace propact {

namespace detail {
extern const std::string_view kBuiltinCatalogJson;
}

namespace {

using nlohmann::json;

RealFormDescriptor parse_entry(const json& e, const std::map<std::string, RealFormDescriptor>& known) {
  if (!e.is_object()) throw ParseError("catalog entry is not an object");
  RealFormDescriptor d;
  d.name = e.at("name").get<std::string>();
  if (e.contains("family")) {
    RootSystemType t{parse_family(e.at("family").get<std::string>()), e.at("rank").get<int>()};
    if (!is_valid(t)) throw ParseError("catalog entry " + d.name + ": invalid type " + t.name());
    d.restricted = t;
  }
  d.abelian_summand_dim = e.value("abelian_summand_dim", 0);
  if (d.abelian_summand_dim < 0) throw ParseError("catalog entry " + d.name + ": negative abelian dimension");
  for (const auto& f : e.value("factors", json::array())) {
    const auto name = f.get<std::string>();
    auto it = known.find(name);
    if (it == known.end()) throw ParseError("catalog entry " + d.name + ": unknown factor " + name);
    d.simple_factors.push_back(it->second);
  }
  if (d.restricted.has_value() == !d.simple_factors.empty())
    throw ParseError("catalog entry " + d.name + ": give either a family and rank or a list of factors");
  d.complex = e.value("complex", false);
  if (e.contains("isomorphic_to")) d.isomorphic_to = e.at("isomorphic_to").get<std::string>();
  d.source = e.value("source", "");
  return d;
}

}  // namespace

Catalog Catalog::from_json(std::string_view text) {
  Catalog c;
  try {
    const json doc = json::parse(text);
    std::map<std::string, RealFormDescriptor> known;
    for (const auto& e : doc.at("entries")) {
      auto d = parse_entry(e, known);
      if (!known.emplace(d.name, d).second) throw ParseError("duplicate catalog entry " + d.name);
      c.entries_.push_back(std::move(d));
    }
    for (const auto& d : c.entries_)
      if (d.isomorphic_to && !known.count(*d.isomorphic_to))
        throw ParseError("catalog entry " + d.name + ": isomorphic_to names an unknown entry");
  } catch (const json::exception& ex) {
    throw ParseError(std::string("catalog: ") + ex.what());
  } catch (const InvalidType& ex) {
    throw ParseError(std::string("catalog: ") + ex.what());
  }
  return c;
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = from_json(detail::kBuiltinCatalogJson);
  return catalog;
}

bool Catalog::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& d) { return d.name == name; });
}

const RealFormDescriptor& Catalog::lookup(std::string_view name) const {
  for (const auto& d : entries_)
    if (d.name == name) return d;
  throw UnknownRealForm("unknown real form '" + std::string(name) + "'");
}

const RealFormDescriptor& lookup_real_form(std::string_view name) { return Catalog::builtin().lookup(name); }

RealFormDescriptor descriptor_for_type(const RootSystemType& t) {
  if (!is_valid(t)) throw InvalidType("invalid root system type " + t.name());
  RealFormDescriptor d;
  d.name = t.name();
  d.restricted = t;
  return d;
}

int ahyp_rank(const RootSystemType& t) {
  static std::mutex mutex;
  static std::map<RootSystemType, int> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  const RootSystem rs(t);
  const int value = static_cast<int>(minus_w0_fixed_space(WeylGroup(rs)).dim());
  std::lock_guard lock(mutex);
  cache.emplace(t, value);
  return value;
}

RankProfile rank_profile(const std::vector<RootSystemType>& components, int abelian_dim) {
  RankProfile p;
  for (const auto& t : components) {
    p.real_rank += t.rank;
    p.ahyp_rank += ahyp_rank(t);
  }
  p.real_rank += abelian_dim;
  p.inner = p.ahyp_rank == p.real_rank;
  return p;
}

RankProfile rank_profile(const RealFormDescriptor& d) {
  RankProfile p;
  if (d.restricted) {
    p.real_rank = d.restricted->rank;
    p.ahyp_rank = ahyp_rank(*d.restricted);
  }
  for (const auto& f : d.simple_factors) {
    const auto fp = rank_profile(f);
    p.real_rank += fp.real_rank;
    p.ahyp_rank += fp.ahyp_rank;
  }
  p.real_rank += d.abelian_summand_dim;
  p.inner = p.ahyp_rank == p.real_rank;
  return p;
}

namespace {

std::optional<std::pair<int, int>> prediction_for_name(const std::string& name) {
  static const std::regex sl_r(R"(sl\((\d+),R\))");
  static const std::regex su_star(R"(su\*\((\d+)\))");
  static const std::regex so_pp(R"(so\((\d+),(\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, sl_r)) {
    const int n = std::stoi(m[1]);
    if (n % 2 == 0 && n >= 4) return std::pair{n / 2, n - 1};
    if (n % 2 == 1 && n >= 3) return std::pair{(n - 1) / 2, n - 1};
  } else if (std::regex_match(name, m, su_star)) {
    const int n = std::stoi(m[1]);
    if (n % 4 == 0 && n >= 8) return std::pair{n / 4, n / 2 - 1};
    if (n % 4 == 2 && n >= 6) return std::pair{(n - 2) / 4, n / 2 - 1};
  } else if (std::regex_match(name, m, so_pp)) {
    const int p = std::stoi(m[1]);
    const int q = std::stoi(m[2]);
    if (p == q && p % 2 == 1 && p >= 5) return std::pair{p - 1, p};
  } else if (name == "e6_I") {
    return std::pair{4, 6};
  } else if (name == "e6_IV") {
    return std::pair{1, 2};
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<int, int>> table1_prediction(const RealFormDescriptor& d) {
  if (auto p = prediction_for_name(d.name)) return p;
  if (d.isomorphic_to) return prediction_for_name(*d.isomorphic_to);
  return std::nullopt;
}

bool Table1Report::table_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok; });
}

bool Table1Report::completeness_ok() const {
  return std::all_of(completeness.begin(), completeness.end(), [](const auto& r) { return r.ok; });
}

Table1Report validate_against_table1(const Catalog& catalog) {
  struct Family {
    std::string label;
    int k_min;
    std::string (*form)(int);
    int (*ahyp)(int);
    int (*real)(int);
  };
  static const std::vector<Family> families = {
      {"sl(2k,R)", 2, [](int k) { return "sl(" + std::to_string(2 * k) + ",R)"; }, [](int k) { return k; },
       [](int k) { return 2 * k - 1; }},
      {"sl(2k+1,R)", 1, [](int k) { return "sl(" + std::to_string(2 * k + 1) + ",R)"; }, [](int k) { return k; },
       [](int k) { return 2 * k; }},
      {"su*(4k)", 2, [](int k) { return "su*(" + std::to_string(4 * k) + ")"; }, [](int k) { return k; },
       [](int k) { return 2 * k - 1; }},
      {"su*(4k+2)", 1, [](int k) { return "su*(" + std::to_string(4 * k + 2) + ")"; }, [](int k) { return k; },
       [](int k) { return 2 * k; }},
      {"so(2k+1,2k+1)", 2,
       [](int k) { return "so(" + std::to_string(2 * k + 1) + "," + std::to_string(2 * k + 1) + ")"; },
       [](int k) { return 2 * k; }, [](int k) { return 2 * k + 1; }},
  };

  Table1Report report;
  const auto check_row = [&](std::string label, int k, const std::string& form, int ahyp, int real) {
    Table1Row row{std::move(label), k, form, {}, ahyp, real, false};
    if (!catalog.contains(form)) {
      report.failures.push_back(form + ": missing from the catalog");
    } else {
      row.computed = rank_profile(catalog.lookup(form));
      row.ok = row.computed.ahyp_rank == ahyp && row.computed.real_rank == real;
      if (!row.ok)
        report.failures.push_back(form + ": computed (" + std::to_string(row.computed.ahyp_rank) + ", " +
                                  std::to_string(row.computed.real_rank) + "), table gives (" +
                                  std::to_string(ahyp) + ", " + std::to_string(real) + ")");
    }
    report.rows.push_back(std::move(row));
  };
  for (const auto& f : families)
    for (int k = f.k_min; k <= 3; ++k) check_row(f.label, k, f.form(k), f.ahyp(k), f.real(k));
  check_row("e6_I", 0, "e6_I", 4, 6);
  check_row("e6_IV", 0, "e6_IV", 1, 2);

  for (const auto& d : catalog.entries()) {
    if (!d.restricted || d.abelian_summand_dim != 0) continue;  // simple algebras only
    if (d.restricted->rank > 8 || table1_prediction(d)) continue;
    CompletenessRow row{d.name, rank_profile(d), false};
    row.ok = row.computed.ahyp_rank == row.computed.real_rank;
    if (!row.ok)
      report.failures.push_back(d.name + ": not listed, yet ahyp " + std::to_string(row.computed.ahyp_rank) +
                                " differs from real rank " + std::to_string(row.computed.real_rank));
    report.completeness.push_back(std::move(row));
  }
  return report;
}

}  // namespace propact
