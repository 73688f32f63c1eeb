// ccig: build groups, compute character tables and Cayley colour graph
// spectra, classify groups and run the hierarchy audit.
//
// Exit codes: spectrum 0 integral / 1 not integral; classify and audit
// 0 clean / 3 discrepancies; 2 on any usage or input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccig/ccig.hpp"

namespace {

using namespace ccig;

constexpr int kExitError = 2;
constexpr int kExitDiscrepancy = 3;

struct GroupSource {
  std::vector<std::string> catalog;
  std::string file;
};

struct Caps {
  std::size_t element_cap = 5040;
  std::size_t chartable_cap = 2000;
  std::size_t nci_cap = 24;
  std::size_t fcci_cap = 120;
  std::size_t ci_exhaustive_cap = 12;
  std::size_t ci_sampled_cap = 24;
  std::size_t witness_budget = 500;
  std::uint64_t seed = 0;
};

struct Config {
  GroupSource source;
  std::string format = "text";
  std::string output;
  Caps caps;
  // spectrum
  std::string set_list, set_file, function_file, fixture;
  // audit
  std::string suite;
  std::vector<std::string> group_exprs;
  std::vector<std::string> group_files;
  // chartable
  std::string dump, load;
  // group
  std::string save;
};

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

CatalogOptions catalog_options(const Caps& c) {
  CatalogOptions o;
  o.element_cap = c.element_cap;
  return o;
}

ClassifyOptions classify_options(const Caps& c) {
  ClassifyOptions o;
  o.chartable.order_cap = c.chartable_cap;
  o.nci_spectral_cap = c.nci_cap;
  o.fcci_spectral_cap = c.fcci_cap;
  o.ci_exhaustive_cap = c.ci_exhaustive_cap;
  o.ci_sampled_cap = c.ci_sampled_cap;
  o.cci_witness_budget = c.witness_budget;
  o.seed = c.seed;
  return o;
}

FiniteGroup resolve_group(const Config& cfg) {
  const bool has_catalog = !cfg.source.catalog.empty(), has_file = !cfg.source.file.empty();
  if (has_catalog == has_file) throw Error("exactly one of --catalog or --file is required");
  if (has_file) return load_group_file(cfg.source.file, catalog_options(cfg.caps));
  return catalog_expression(join(cfg.source.catalog), catalog_options(cfg.caps));
}

std::vector<Element> parse_set_list(const std::string& s) {
  std::vector<Element> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
    }
    if (v < 0 || used != tok.size()) throw Error("--set: '" + tok + "' is not an element index");
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

/// Output sink: stdout or the --output file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("cannot write '" + path + "'");
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

const char* yn(bool b) { return b ? "yes" : "no"; }
std::string yn(const std::optional<bool>& b) { return b ? yn(*b) : "-"; }

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum(const Config& cfg) {
  const FiniteGroup G = resolve_group(cfg);
  const ConjugacyPartition P = conjugacy_classes(G);
  const int inputs = !cfg.set_list.empty() + !cfg.set_file.empty() + !cfg.function_file.empty() + !cfg.fixture.empty();
  if (inputs != 1) throw Error("exactly one of --set, --set-file, --function or --fixture is required");

  std::string source;
  ConnectionFunction f;
  std::optional<ConnectionSet> cs;
  if (!cfg.fixture.empty()) {
    const Fixture fx = named_fixture(cfg.fixture, G);
    f = fx.function;
    source = "fixture " + fx.name;
  } else if (!cfg.function_file.empty()) {
    f = load_function_file(G, cfg.function_file);
    source = "function " + cfg.function_file;
  } else {
    std::vector<Element> S;
    if (!cfg.set_list.empty()) {
      S = parse_set_list(cfg.set_list);
    } else {
      std::ifstream in(cfg.set_file);
      if (!in) throw Error("cannot open '" + cfg.set_file + "'");
      S = load_set(in);
    }
    cs = connection_set(G, P, S);
    f = indicator(G, P, cs->elements);
    source = "set " + describe_set(G, cs->elements);
  }

  std::optional<CharacterTable> T;
  if (f.class_function() && G.order() <= cfg.caps.chartable_cap) T = character_table(G, P);
  const SpectrumAnalysis an = analyze_spectrum(G, P, f, T ? &*T : nullptr);
  std::optional<EulerianResult> eu;
  if (cs) eu = eulerian_check(G, *cs);

  Sink sink(cfg.output);
  auto& os = sink.os();
  if (cfg.format == "json") {
    Json j;
    j["schema"] = "ccig.spectrum/1";
    j["group"] = G.name();
    j["order"] = G.order();
    j["source"] = source;
    j["function"] = f.values();
    j["flags"] = Json{{"symmetric", f.symmetric()},
                      {"class_function", f.class_function()},
                      {"zero_at_identity", f.zero_at_identity()},
                      {"in_F", f.in_F()}};
    j["routes_run"] = an.routes_run;
    j["matrix"] = to_json(an.matrix);
    if (an.criterion) {
      Json c{{"integral", an.criterion->integral}};
      if (an.criterion->witness)
        c["witness"] = Json{{"element", an.criterion->witness->first}, {"unit", an.criterion->witness->second}};
      j["criterion"] = c;
    }
    if (an.characters) {
      Json arr = Json::array();
      for (const auto& e : *an.characters)
        arr.push_back(Json{{"character", e.character}, {"value", e.value.to_string()}, {"multiplicity", e.multiplicity}});
      j["characters"] = arr;
      j["routes_agree"] = an.routes->agree;
    }
    if (cs) {
      j["set"] = Json{{"elements", cs->elements}, {"normal", cs->normal}, {"eulerian", eu->eulerian}};
      if (eu->offending) j["set"]["offending_atom"] = eu->offending->members;
    }
    os << j.dump(2) << "\n";
  } else {
    os << "group        " << G.name() << " (order " << G.order() << ")\n";
    os << "input        " << source << "\n";
    os << "flags        symmetric " << yn(f.symmetric()) << ", class function " << yn(f.class_function())
       << ", f(1) = 0 " << yn(f.zero_at_identity()) << "\n";
    if (cs)
      os << "set          normal " << yn(cs->normal) << ", eulerian " << yn(eu->eulerian)
         << (eu->offending ? ", offending atom " + describe_set(G, eu->offending->members) : std::string()) << "\n";
    os << "charpoly     " << an.matrix.charpoly.to_string() << "\n";
    os << "\n  eigenvalue  multiplicity\n";
    for (const auto& [v, m] : an.matrix.integer_eigenvalues)
      os << "  " << std::setw(10) << v.str() << "  " << std::setw(12) << m << "\n";
    os << "\nresidual     " << factored_string(an.matrix.residual) << "\n";
    os << "integral     " << yn(an.matrix.is_integral) << "\n";
    if (an.criterion) {
      os << "criterion    " << yn(an.criterion->integral);
      if (an.criterion->witness)
        os << " (f(g^h) != f(g) for g = " << describe(G, an.criterion->witness->first)
           << ", h = " << an.criterion->witness->second << ")";
      os << "\n";
    }
    if (an.characters) {
      os << "\n  character  degree^2  eigenvalue\n";
      for (const auto& e : *an.characters)
        os << "  " << std::setw(9) << e.character << "  " << std::setw(8) << e.multiplicity << "  " << e.value.to_string()
           << "\n";
      os << "\nroutes agree " << yn(an.routes->agree) << "\n";
    }
    std::string routes;
    for (const auto& r : an.routes_run) routes += (routes.empty() ? "" : ", ") + r;
    os << "routes       " << routes << "\n";
  }
  if (an.routes && !an.routes->agree) {
    std::cerr << "ccig: character and matrix routes disagree; the spectrum above is unverified\n";
    return kExitError;
  }
  return an.matrix.is_integral ? 0 : 1;
}

// ---------------------------------------------------------------------------
// classify

void print_verdict(std::ostream& os, const Verdict& v) {
  os << "  " << std::left << std::setw(22) << v.property << std::setw(5) << yn(v.value)
     << (v.routes_agree() ? "" : "  ROUTES DISAGREE") << "\n";
  for (const auto& r : v.routes) {
    os << "      " << std::setw(24) << r.name << std::setw(4) << yn(r.verdict) << r.detail << "\n";
    for (const auto& [k, val] : r.evidence) os << "      " << std::setw(24) << "" << "  " << k << ": " << val << "\n";
  }
  os << std::right;
}

void print_report(std::ostream& os, const ClassificationReport& r) {
  os << "group " << r.group << "  order " << r.order << "  exponent " << r.exponent << "  classes " << r.class_count
     << "  real classes " << r.real_class_count << "\n";
  os << "element orders";
  for (auto o : r.element_orders) os << " " << o;
  os << "   abelian " << yn(r.abelian) << "   nilpotent " << yn(r.nilpotent) << "   seed " << r.seed << "\n\n";
  for (const Verdict* v : {&r.rational, &r.semi_rational, &r.inverse_semi_rational, &r.nci, &r.fcci, &r.cci, &r.ci})
    print_verdict(os, *v);
  if (!r.gamma.empty()) {
    os << "\n  Cay(G, chi + conj chi)\n";
    for (const auto& g : r.gamma)
      os << "      chi_" << std::left << std::setw(4) << g.character << std::setw(5) << yn(g.integral) << g.colour << "  "
         << g.note << std::right << "\n";
  }
  if (!r.caps_hit.empty()) {
    os << "\ncaps hit:";
    for (const auto& c : r.caps_hit) os << " " << c;
    os << "\n";
  }
  os << "\ndiscrepancies: " << (r.discrepancies.empty() ? "none" : std::to_string(r.discrepancies.size())) << "\n";
  for (const auto& d : r.discrepancies) os << "  " << d.property << ": " << d.detail << "\n";
}

int cmd_classify(const Config& cfg) {
  const FiniteGroup G = resolve_group(cfg);
  const ClassificationReport r = classify(G, classify_options(cfg.caps));
  Sink sink(cfg.output);
  if (cfg.format == "json") {
    sink.os() << classification_document(r).dump(2) << "\n";
  } else {
    print_report(sink.os(), r);
  }
  return r.discrepancies.empty() ? 0 : kExitDiscrepancy;
}

// ---------------------------------------------------------------------------
// audit

int cmd_audit(const Config& cfg) {
  AuditOptions opts;
  opts.classify = classify_options(cfg.caps);
  std::vector<FiniteGroup> groups;
  std::string suite = cfg.suite;
  if (suite.empty() && cfg.group_exprs.empty() && cfg.group_files.empty()) suite = "standard";
  if (!suite.empty())
    for (const auto& e : suite_by_name(suite)) groups.push_back(catalog_expression(e, catalog_options(cfg.caps)));
  for (const auto& e : cfg.group_exprs) groups.push_back(catalog_expression(e, catalog_options(cfg.caps)));
  for (const auto& f : cfg.group_files) groups.push_back(load_group_file(f, catalog_options(cfg.caps)));
  const AuditReport a = hierarchy_audit(groups, opts, suite.empty() ? "custom" : suite);

  Sink sink(cfg.output);
  auto& os = sink.os();
  if (cfg.format == "json") {
    os << to_json(a).dump(2) << "\n";
  } else {
    os << "suite " << a.suite << "  seed " << a.seed << "  groups " << a.groups.size() << "\n\n";
    os << std::left << std::setw(16) << "group" << std::right << std::setw(6) << "order" << std::setw(6) << "rat"
       << std::setw(6) << "semi" << std::setw(6) << "isr" << std::setw(6) << "nci" << std::setw(6) << "fcci"
       << std::setw(6) << "cci" << std::setw(6) << "ci" << std::setw(7) << "disc" << "\n";
    for (const auto& r : a.groups) {
      auto cell = [](const Verdict& v) { return std::string(v.value ? "yes" : "no") + (v.routes_agree() ? "" : "*"); };
      os << std::left << std::setw(16) << r.group << std::right << std::setw(6) << r.order << std::setw(6)
         << cell(r.rational) << std::setw(6) << cell(r.semi_rational) << std::setw(6) << cell(r.inverse_semi_rational)
         << std::setw(6) << cell(r.nci) << std::setw(6) << cell(r.fcci) << std::setw(6) << cell(r.cci) << std::setw(6)
         << cell(r.ci) << std::setw(7) << r.discrepancies.size() << "\n";
    }
    os << "(* = routes disagree)\n\nchecks\n";
    std::vector<std::string> kinds;
    for (const auto& c : a.checks)
      if (std::find(kinds.begin(), kinds.end(), c.check) == kinds.end()) kinds.push_back(c.check);
    for (const auto& k : kinds) {
      std::size_t total = 0;
      for (const auto& c : a.checks) total += c.check == k;
      os << "  " << std::left << std::setw(26) << k << std::right << std::setw(5) << total << " checked"
         << std::setw(5) << a.violations(k) << " violated\n";
    }
    for (const auto& an : a.annotations) {
      os << "\n" << an.topic << "\n";
      for (const auto& [k, v] : an.fields) os << "  " << std::left << std::setw(36) << k << std::right << v << "\n";
    }
    os << "\ndiscrepancies: " << (a.discrepancies.empty() ? "none" : std::to_string(a.discrepancies.size())) << "\n";
    for (const auto& d : a.discrepancies) os << "  " << d.group << " | " << d.property << " | " << d.detail << "\n";
  }
  return a.discrepancies.empty() ? 0 : kExitDiscrepancy;
}

// ---------------------------------------------------------------------------
// chartable

int cmd_chartable(const Config& cfg) {
  CharacterTable T;
  if (!cfg.load.empty()) {
    if (!cfg.source.catalog.empty() || !cfg.source.file.empty())
      throw Error("--load replaces the group source; drop --catalog/--file");
    std::ifstream in(cfg.load);
    if (!in) throw Error("cannot open '" + cfg.load + "'");
    T = load_character_table(in);
  } else {
    const FiniteGroup G = resolve_group(cfg);
    CharTableOptions o;
    o.order_cap = cfg.caps.chartable_cap;
    T = character_table(G, o);
  }
  if (!cfg.dump.empty()) {
    std::ofstream out(cfg.dump);
    if (!out) throw Error("cannot write '" + cfg.dump + "'");
    save_character_table(T, out);
  }
  Sink sink(cfg.output);
  auto& os = sink.os();
  if (cfg.format == "json") {
    os << to_json(T).dump(2) << "\n";
    return 0;
  }
  const std::size_t k = T.class_count();
  std::vector<std::size_t> width(k + 1, 0);
  std::vector<std::vector<std::string>> cells(k + 3, std::vector<std::string>(k + 1));
  cells[0][0] = "class";
  cells[1][0] = "size";
  cells[2][0] = "order";
  for (std::size_t j = 0; j < k; ++j) {
    cells[0][j + 1] = std::to_string(j);
    cells[1][j + 1] = std::to_string(T.class_sizes[j]);
    cells[2][j + 1] = std::to_string(T.class_element_orders[j]);
  }
  for (std::size_t r = 0; r < k; ++r) {
    cells[r + 3][0] = "chi_" + std::to_string(r);
    for (std::size_t j = 0; j < k; ++j) cells[r + 3][j + 1] = T.values[r][j].to_string();
  }
  for (const auto& row : cells)
    for (std::size_t j = 0; j <= k; ++j) width[j] = std::max(width[j], row[j].size());
  os << T.group_name << "  order " << T.group_order << "  classes " << k << "  conductor " << T.conductor
     << "  prime " << T.prime << "  (z<e> = exp(2 pi i / e))\n\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j <= k; ++j)
      os << (j ? "  " : "") << (j ? std::right : std::left) << std::setw(static_cast<int>(width[j])) << cells[i][j];
    os << std::right << "\n";
    if (i == 2) os << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// group

int cmd_group(const Config& cfg) {
  const FiniteGroup G = resolve_group(cfg);
  if (!cfg.save.empty()) save_group_file(G, cfg.save);
  const ConjugacyPartition P = conjugacy_classes(G);
  Sink sink(cfg.output);
  auto& os = sink.os();
  if (cfg.format == "json") {
    Json j;
    j["schema"] = "ccig.group/1";
    j["group"] = G.name();
    j["order"] = G.order();
    j["exponent"] = G.exponent();
    j["abelian"] = G.is_abelian();
    j["associativity_check"] = G.associativity_check() == AssociativityCheck::kFull ? "full" : "sampled";
    j["labels"] = G.labels();
    j["element_orders"] = G.orders();
    j["classes"] = P.classes;
    j["real_classes"] = P.real_classes;
    os << j.dump(2) << "\n";
    return 0;
  }
  os << "group " << G.name() << "  order " << G.order() << "  exponent " << G.exponent() << "  abelian "
     << yn(G.is_abelian()) << "  associativity "
     << (G.associativity_check() == AssociativityCheck::kFull ? "full" : "sampled") << "\n\n";
  os << "  class  size  order  elements\n";
  for (std::size_t c = 0; c < P.count(); ++c)
    os << "  " << std::setw(5) << c << "  " << std::setw(4) << P.size(c) << "  " << std::setw(5)
       << G.elem_order(P.representative(c)) << "  " << describe_set(G, P.classes[c]) << "\n";
  return 0;
}

void add_common(CLI::App* sub, Config& cfg, bool needs_group) {
  if (needs_group) {
    sub->add_option("--catalog", cfg.source.catalog, "catalog expression, e.g. 's3' or 'q8 x cyclic 3'")
        ->expected(1, -1);
    sub->add_option("--file", cfg.source.file, "group file (table or permutation generators)");
  }
  sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("-o,--output", cfg.output, "write the report to this file instead of stdout");
  sub->add_option("--element-cap", cfg.caps.element_cap, "largest group a constructor may build")
      ->envname("CCIG_ELEMENT_CAP");
  sub->add_option("--chartable-cap", cfg.caps.chartable_cap, "largest group for character tables")
      ->envname("CCIG_CHARTABLE_CAP");
  sub->add_option("--seed", cfg.caps.seed, "seed for randomized routes")->envname("CCIG_SEED");
}

void add_classify_caps(CLI::App* sub, Config& cfg) {
  sub->add_option("--nci-cap", cfg.caps.nci_cap, "largest group for exhaustive normal-set spectra")
      ->envname("CCIG_NCI_CAP");
  sub->add_option("--fcci-cap", cfg.caps.fcci_cap, "largest group for spectral F-CCI sampling")
      ->envname("CCIG_FCCI_CAP");
  sub->add_option("--ci-exhaustive-cap", cfg.caps.ci_exhaustive_cap, "largest group for exhaustive CI search")
      ->envname("CCIG_CI_EXHAUSTIVE_CAP");
  sub->add_option("--ci-sampled-cap", cfg.caps.ci_sampled_cap, "largest group for sampled CI search")
      ->envname("CCIG_CI_SAMPLED_CAP");
  sub->add_option("--witness-budget", cfg.caps.witness_budget, "candidates tried by the colour-function witness search")
      ->envname("CCIG_WITNESS_BUDGET");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley colour graph integrality toolkit"};
  app.require_subcommand(1);
  Config cfg;

  auto* spectrum = app.add_subcommand("spectrum", "spectrum of Cay(G, f) for a set, function file or fixture");
  add_common(spectrum, cfg, true);
  spectrum->add_option("--set", cfg.set_list, "connection set as comma-separated element indices");
  spectrum->add_option("--set-file", cfg.set_file, "connection set file ('set <k>' + indices)");
  spectrum->add_option("--function", cfg.function_file, "colour function file ('f <n>' + values)");
  spectrum->add_option("--fixture", cfg.fixture, "built-in colour function: alpha (S3) or beta (Dic12)")
      ->check(CLI::IsMember({"alpha", "beta"}));

  auto* classify_cmd = app.add_subcommand("classify", "classify one group");
  add_common(classify_cmd, cfg, true);
  add_classify_caps(classify_cmd, cfg);

  auto* audit = app.add_subcommand("audit", "classify a suite of groups and check the implication chain");
  add_common(audit, cfg, false);
  add_classify_caps(audit, cfg);
  audit->add_option("--suite", cfg.suite, "standard or small");
  audit->add_option("--group", cfg.group_exprs, "additional catalog expression (repeatable)");
  audit->add_option("--group-file", cfg.group_files, "additional group file (repeatable)");

  auto* chartable = app.add_subcommand("chartable", "irreducible character table");
  add_common(chartable, cfg, true);
  chartable->add_option("--dump", cfg.dump, "also write the table in the text dump format");
  chartable->add_option("--load", cfg.load, "read and verify a dumped table instead of computing one");

  auto* group = app.add_subcommand("group", "describe a group; optionally save it as a group file");
  add_common(group, cfg, true);
  group->add_option("--save", cfg.save, "write the multiplication table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (classify_cmd->parsed()) return cmd_classify(cfg);
    if (audit->parsed()) return cmd_audit(cfg);
    if (chartable->parsed()) return cmd_chartable(cfg);
    if (group->parsed()) return cmd_group(cfg);
  } catch (const ccig::ParseError& e) {
    std::cerr << "ccig: parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "ccig: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
