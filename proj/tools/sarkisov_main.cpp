// Command-line front end: catalog, enumerate, verify, classify, explain.
//
// Exit statuses: 0 success, 1 verification mismatch, 2 usage, 3 data integrity.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sarkisov/annotator.hpp"
#include "sarkisov/classify.hpp"
#include "sarkisov/enumerator.hpp"
#include "sarkisov/reference.hpp"
#include "sarkisov/render.hpp"

namespace {

using namespace sarkisov;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kIntegrity = 3;
constexpr int kMaxTableGenus = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int genus = 0;
  bool all = false;
  std::string bounds = "paper";
  std::string format = "text-table";
  std::string facts_path;
  std::string reference_dir;
  std::string row_like;
  std::string key;
  unsigned jobs = 1;
};

BoundsMode bounds_of(const Options& o) {
  if (auto m = parse_bounds_mode(o.bounds)) return *m;
  throw UsageError("unknown bounds mode '" + o.bounds + "'");
}

OutputFormat format_of(const Options& o) {
  if (auto f = parse_output_format(o.format)) return *f;
  throw UsageError("unknown format '" + o.format + "'");
}

FactBase facts_of(const Options& o) {
  return o.facts_path.empty() ? default_fact_base() : load_fact_base(o.facts_path);
}

std::vector<ReferenceRow> reference_of(const Options& o) {
  return o.reference_dir.empty() ? load_reference() : load_reference(o.reference_dir);
}

std::vector<ReferenceRow> rows_for_genus(const std::vector<ReferenceRow>& rows, int genus) {
  std::vector<ReferenceRow> out;
  for (const ReferenceRow& r : rows)
    if (r.genus == genus) out.push_back(r);
  return out;
}

std::vector<NumericalLink> annotated_links(int genus, const Options& o, const FactBase& facts) {
  std::vector<NumericalLink> links = enumerate_links(genus, bounds_of(o), o.jobs);
  for (NumericalLink& l : links) l = annotate(std::move(l), facts);
  return links;
}

int cmd_catalog(const Options& o) {
  std::cout << render_catalog(format_of(o));
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const OutputFormat format = format_of(o);
  std::vector<NumericalLink> links = annotated_links(o.genus, o, facts_of(o));
  const DiffReport report = diff(rows_for_genus(reference_of(o), o.genus), links);
  for (NumericalLink& l : links)
    for (const NumericalLink& u : report.unlisted)
      if (same_numerics(l, u)) l.annotations.flags.insert(Flag::unlisted);
  std::cout << render_links(links, format);
  return kOk;
}

int cmd_verify(const Options& o) {
  if (!o.all && o.genus == 0) throw UsageError("verify needs --genus or --all");
  const std::vector<ReferenceRow> rows = reference_of(o);
  const FactBase facts = facts_of(o);
  std::vector<int> genera;
  if (o.all)
    for (int g = kMinGenus; g <= kMaxTableGenus; ++g) genera.push_back(g);
  else
    genera.push_back(o.genus);

  bool ok = true;
  for (int g : genera) {
    const DiffReport report = diff(rows_for_genus(rows, g), annotated_links(g, o, facts));
    std::cout << "== genus " << g << "\n" << render_diff(report);
    ok = ok && report.success();
  }
  std::cout << (ok ? "verify: ok\n" : "verify: MISMATCH\n");
  return ok ? kOk : kMismatch;
}

int cmd_classify(const Options& o) {
  std::cout << render_classification(classify(o.genus, bounds_of(o)));
  return kOk;
}

/// "T1:37" -> the reference row of that genus.
ReferenceRow row_from_selector(const std::vector<ReferenceRow>& rows, int genus,
                               const std::string& selector) {
  const auto colon = selector.find(':');
  if (colon == std::string::npos) throw UsageError("--row-like expects TABLE:ROW, e.g. T1:37");
  const std::string table = selector.substr(0, colon);
  int row_id = 0;
  try {
    row_id = std::stoi(selector.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad row number in '" + selector + "'");
  }
  for (const ReferenceRow& r : rows)
    if (to_string(r.table) == table && r.genus == genus && r.row_id == row_id) return r;
  throw UsageError("no reference row " + selector + " at genus " + std::to_string(genus));
}

int cmd_explain(const Options& o) {
  if (o.row_like.empty() == o.key.empty()) throw UsageError("explain needs --row-like or --key");
  const std::vector<NumericalLink> links = enumerate_links(o.genus, bounds_of(o), o.jobs);

  std::vector<NumericalLink> hits;
  if (!o.key.empty()) {
    for (const NumericalLink& l : links)
      if (l.key() == o.key) hits.push_back(l);
  } else {
    const ReferenceRow row = row_from_selector(reference_of(o), o.genus, o.row_like);
    DiffReport report = diff({row}, links);
    for (auto* bucket : {&report.matched, &report.matched_with_erratum})
      for (const RowMatch& m : *bucket) hits.insert(hits.end(), m.links.begin(), m.links.end());
  }
  if (hits.size() != 1)
    throw UsageError(hits.empty() ? "selector matches no link"
                                  : "selector matches " + std::to_string(hits.size()) + " links");
  std::cout << render_explanation(explain_link(hits.front()));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical Sarkisov links centred on index-1 Fano 3-folds"};
  app.require_subcommand(1);
  Options o;

  auto add_genus = [&o](CLI::App* sub, int lo, int hi, bool required) {
    auto* opt = sub->add_option("--genus,-g", o.genus, "genus of the midpoint")
                    ->check(CLI::Range(lo, hi));
    if (required) opt->required();
    return opt;
  };
  auto add_bounds = [&o](CLI::App* sub) {
    sub->add_option("--bounds", o.bounds, "left centre bounds: paper or relaxed")
        ->check(CLI::IsMember({"paper", "relaxed"}));
  };
  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format,-f", o.format, "text-table, json or csv")
        ->check(CLI::IsMember({"text-table", "json", "csv"}));
  };
  auto add_reference = [&o](CLI::App* sub) {
    sub->add_option("--reference", o.reference_dir, "directory of reference tables");
  };
  auto add_facts = [&o](CLI::App* sub) {
    sub->add_option("--facts", o.facts_path, "fact base file")->check(CLI::ExistingFile);
  };
  auto add_jobs = [&o](CLI::App* sub) {
    sub->add_option("--jobs,-j", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* catalog = app.add_subcommand("catalog", "list the Fano families");
  add_format(catalog);

  auto* enumerate = app.add_subcommand("enumerate", "list all numerical links of a genus");
  add_genus(enumerate, kMinGenus, kMaxGenus, true);
  add_bounds(enumerate);
  add_format(enumerate);
  add_facts(enumerate);
  add_reference(enumerate);
  add_jobs(enumerate);

  auto* verify = app.add_subcommand("verify", "diff enumeration against the reference tables");
  auto* verify_genus = add_genus(verify, kMinGenus, kMaxTableGenus, false);
  verify->add_flag("--all", o.all, "every tabulated genus")->excludes(verify_genus);
  add_bounds(verify);
  add_facts(verify);
  add_reference(verify);
  add_jobs(verify);

  auto* classify_cmd = app.add_subcommand("classify", "case list for a genus");
  add_genus(classify_cmd, kMinGenus, kMaxTableGenus, true);
  add_bounds(classify_cmd);

  auto* explain = app.add_subcommand("explain", "intersection ledger of one link");
  add_genus(explain, kMinGenus, kMaxGenus, true);
  explain->add_option("--row-like", o.row_like, "reference row, e.g. T1:37");
  explain->add_option("--key", o.key, "link key as printed in notes and diffs");
  add_bounds(explain);
  add_reference(explain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(o);
    if (enumerate->parsed()) return cmd_enumerate(o);
    if (verify->parsed()) return cmd_verify(o);
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (explain->parsed()) return cmd_explain(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ReferenceIntegrityError& e) {
    std::cerr << "reference integrity: " << e.what() << "\n";
    return kIntegrity;
  } catch (const ReferenceParseError& e) {
    std::cerr << "reference integrity: " << e.what() << "\n";
    return kIntegrity;
  } catch (const FactBaseError& e) {
    std::cerr << "fact base: " << e.what() << "\n";
    return kIntegrity;
  } catch (const UnverifiableLink& e) {
    std::cerr << "unverifiable link: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
