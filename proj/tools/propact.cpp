// propact: proper actions on strongly regular homogeneous spaces.
//
//   propact report SPEC.json [--format text|json] [--cap N] [--bruteforce] [--timing]
//   propact ranks FORM
//   propact table1
//   propact appendix-so44
//   propact catalog-verify
//
// Exit codes: 0 done, 1 usage, 2 bad input, 3 enumeration cap exceeded,
// 4 internal consistency violation.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "propact/errors.hpp"
#include "propact/exactlin.hpp"
#include "propact/report.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kBadInput = 2, kCap = 3, kConsistency = 4 };

int emit(const propact::Json& doc, const std::string& format) {
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << propact::render_text(doc);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide proper-action criteria C1, C2, C3 for homogeneous spaces G/H"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* report = app.add_subcommand("report", "Evaluate C1, C2, C3 for a space specification file");
  std::string spec_path;
  std::optional<std::uint64_t> cap;
  bool bruteforce = false;
  bool timing = false;
  report->add_option("spec", spec_path, "Space specification (JSON)")->required();
  report->add_option("--cap", cap, "Largest Weyl group or orbit to enumerate");
  report->add_flag("--bruteforce", bruteforce, "Decide C2 by enumerating the orbit of a_h");
  report->add_flag("--timing", timing, "Include elapsed time in the output");
  report->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* ranks = app.add_subcommand("ranks", "Real and a-hyperbolic rank of a catalogued real form");
  std::string form;
  ranks->add_option("form", form, "Catalog name, e.g. sl(4,R)")->required();
  ranks->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* table1 = app.add_subcommand("table1", "Recompute the forms whose two ranks differ");
  table1->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* so44 = app.add_subcommand("appendix-so44", "Verify the SO(4,4)/U counterexample");
  so44->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* catalog = app.add_subcommand("catalog-verify", "Check strong regularity of the built-in example spaces");
  catalog->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (report->parsed()) {
      const auto spec = propact::load_space_spec(spec_path);
      propact::RunOptions opts;
      if (bruteforce) opts.force_bruteforce = true;
      opts.enumeration_cap = cap;
      opts.timing = timing;
      return emit(propact::run_report(spec, opts), format);
    }
    if (ranks->parsed()) return emit(propact::ranks_document(form), format);
    if (table1->parsed()) return emit(propact::table1_document(), format);
    if (so44->parsed()) return emit(propact::appendix_so44_document(), format);
    if (catalog->parsed()) return emit(propact::catalog_verify_document(), format);
  } catch (const propact::EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const propact::NotCovered& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return kConsistency;
  } catch (const propact::ConsistencyViolation& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return kConsistency;
  } catch (const propact::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kUsage;
}
