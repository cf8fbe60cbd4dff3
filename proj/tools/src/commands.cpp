#include "commands.hpp"

#include "flagforge/constructions.hpp"
#include "flagforge/extremal.hpp"
#include "flagforge/mink_flag.hpp"

#include "document.hpp"
#include "family_spec.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace flagforge::cli {

namespace {

constexpr const char* kBudgetEnvVar = "FLAGFORGE_BUDGET";

EnumOptions options_from_env() {
  EnumOptions opts;
  if (const char* raw = std::getenv(kBudgetEnvVar)) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(raw, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(kBudgetEnvVar) +
                                  " must be a positive integer");
    }
    if (pos != std::string(raw).size() || value == 0) {
      throw std::invalid_argument(std::string(kBudgetEnvVar) +
                                  " must be a positive integer");
    }
    opts.budget = value;
  }
  return opts;
}

Json profile_json(const K2Profile& p) {
  return Json::array({p.r1, p.r2, p.r3});
}

void emit(const Json& doc, const std::string& csv, const std::string& format,
          std::ostream& out) {
  if (format == "csv") {
    out << csv;
  } else {
    out << doc.dump(2) << "\n";
  }
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream os;
  os << "field,value\n";
  for (const auto& [k, v] : rows) os << k << "," << v << "\n";
  return os.str();
}

struct VerifyCase {
  std::string family;
  int ell;
};

// The built-in corpus: every two-set family on up to six elements (one
// per type-count profile) and a handful of three-set families, small
// enough to re-check from scratch on every run.
std::vector<VerifyCase> builtin_corpus() {
  std::vector<VerifyCase> cases;
  for (int r = 1; r <= 6; ++r) {
    for (int r1 = 0; r1 <= r; ++r1) {
      for (int r2 = 0; r1 + r2 <= r; ++r2) {
        K2Profile p{r1, r2, r - r1 - r2};
        if (p.r1 + p.r2 == 0 || p.r1 + p.r3 == 0) continue;
        if (p.r2 == 0 && p.r3 == 0) continue;
        std::string spec = format_family(family_from_profile(p));
        for (int ell = 1; ell <= 3; ++ell) cases.push_back({spec, ell});
      }
    }
  }
  std::vector<std::string> k3 = {
      "1,2,3,4;1,2,5,6;1,3,5,7",  // the third master family
      "1,2;1,3;1,4",
      "1,2,3;1,2,4;3,4",
      "1,2,3,4;2,3,5;1,4,5",
      "1,2;2,3;3,4",
  };
  for (const std::string& spec : k3) {
    for (int ell = 1; ell <= 2; ++ell) cases.push_back({spec, ell});
  }
  return cases;
}

int cmd_flag(const std::string& family_spec, int ell, bool phi, bool strict,
             const std::string& format, const EnumOptions& opts,
             std::ostream& out) {
  SetFamily family = parse_family(family_spec);
  Polynomial poly;
  if (strict) {
    std::vector<Polynomial> orders;
    for (int j = 1; j <= ell; ++j) orders.push_back(flag_minkowski(family, j, opts));
    poly = strict_chain_poly(FlagFamily(std::move(orders)), ell);
  } else {
    poly = flag_minkowski(family, ell, opts);
  }
  std::string prefix = "x";
  if (phi) {
    poly = phi_transform(poly);
    prefix = "y";
  }
  Json doc;
  doc["command"] = "flag";
  doc["family"] = format_family(family);
  doc["ell"] = ell;
  doc["phi"] = phi;
  doc["strict"] = strict;
  doc["polynomial"] = polynomial_document(poly, prefix);
  emit(doc, polynomial_csv(poly, prefix), format, out);
  return 0;
}

int cmd_fpoly(const std::string& family_spec, const std::string& format,
              const EnumOptions& opts, std::ostream& out) {
  SetFamily family = parse_family(family_spec);
  Polynomial poly = f_poly_minkowski(family, opts);
  Json doc;
  doc["command"] = "fpoly";
  doc["family"] = format_family(family);
  doc["polynomial"] = polynomial_document(poly, "x");
  emit(doc, polynomial_csv(poly, "x"), format, out);
  return 0;
}

int cmd_master(int k, int ell, const std::string& format,
               const EnumOptions& opts, std::ostream& out) {
  MasterFamily mf = master_family(k);
  auto faces = enumerate_faces(mf.family, opts);
  auto fv = f_vector(faces);
  const MasterChainData& chains = master_chains(k, ell, opts);
  Json doc;
  doc["command"] = "master";
  doc["k"] = k;
  doc["family"] = format_family(mf.family);
  doc["r"] = mf.family.r();
  doc["dim"] = faces.back().dim;
  doc["num_faces"] = faces.size();
  Json fvj = Json::array();
  for (const Int& x : fv) fvj.push_back(x.get_str());
  doc["f_vector"] = std::move(fvj);
  doc["ell"] = ell;
  doc["num_chains"] = chains.chains.entries.size();

  std::vector<std::pair<std::string, std::string>> rows = {
      {"k", std::to_string(k)},
      {"family", format_family(mf.family)},
      {"r", std::to_string(mf.family.r())},
      {"dim", std::to_string(faces.back().dim)},
      {"num_faces", std::to_string(faces.size())},
      {"ell", std::to_string(ell)},
      {"num_chains", std::to_string(chains.chains.entries.size())},
  };
  for (std::size_t d = 0; d < fv.size(); ++d) {
    rows.emplace_back("f_" + std::to_string(d), fv[d].get_str());
  }
  emit(doc, kv_csv(rows), format, out);
  return 0;
}

int cmd_construct(const std::string& op, std::vector<int> rs, int d, int ell,
                  const std::string& format, std::ostream& out) {
  Polynomial poly(ell);
  if (op == "prism") {
    if (rs.size() != 1) throw std::invalid_argument("prism takes one --r value");
    poly = flag_prism({ell, flag_simplex(rs[0], {ell, 1})}).poly;
  } else if (op == "pyramid") {
    if (rs.size() != 1) throw std::invalid_argument("pyramid takes one --r value");
    poly = flag_pyramid(simplex_family(rs[0], ell), ell).poly;
  } else if (op == "product") {
    if (rs.empty()) throw std::invalid_argument("product needs --r values");
    AbstractFlag acc{ell, Polynomial::constant(ell, 1)};
    for (int r : rs) acc = flag_product(acc, {ell, flag_simplex(r, {ell, 1})});
    poly = acc.poly;
  } else if (op == "join") {
    if (rs.empty()) throw std::invalid_argument("join needs --r values");
    FlagFamily acc = simplex_family(rs[0], ell);
    for (std::size_t i = 1; i < rs.size(); ++i) {
      acc = join_family(acc, simplex_family(rs[i], ell));
    }
    poly = acc.order(ell);
  } else if (op == "hypercube") {
    if (d < 0) throw std::invalid_argument("hypercube needs --d >= 0");
    poly = flag_hypercube(d, ell).poly;
  } else {
    throw std::invalid_argument("unknown construction '" + op + "'");
  }
  Json doc;
  doc["command"] = "construct";
  doc["op"] = op;
  if (op == "hypercube") {
    doc["d"] = d;
  } else {
    doc["r"] = rs;
  }
  doc["ell"] = ell;
  doc["polynomial"] = polynomial_document(poly, "x");
  emit(doc, polynomial_csv(poly, "x"), format, out);
  return 0;
}

int cmd_max_faces(int r, int d, bool with_argmax, const std::string& format,
                  std::ostream& out) {
  ExtremalResult res = max_faces(r, d);
  Int closed = closed_max_faces(r, d);
  Json doc;
  doc["command"] = "extremal.max-faces";
  doc["r"] = r;
  doc["d"] = d;
  doc["value"] = res.value.get_str();
  doc["closed_form"] = closed.get_str();
  doc["closed_form_matches"] = (closed == res.value);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"r", std::to_string(r)},
      {"d", std::to_string(d)},
      {"value", res.value.get_str()},
      {"closed_form", closed.get_str()},
      {"closed_form_matches", closed == res.value ? "true" : "false"},
  };
  if (with_argmax) {
    Json arg = Json::array();
    for (const K2Profile& p : res.argmaxes) arg.push_back(profile_json(p));
    doc["argmax"] = std::move(arg);
    for (const K2Profile& p : res.argmaxes) {
      rows.emplace_back("argmax", std::to_string(p.r1) + ";" +
                                      std::to_string(p.r2) + ";" +
                                      std::to_string(p.r3));
    }
  }
  emit(doc, kv_csv(rows), format, out);
  return 0;
}

int cmd_discrepancy(int r, int d, bool with_window, const std::string& format,
                    std::ostream& out) {
  ExtremalResult res = max_discrepancy(r, d);
  Json doc;
  doc["command"] = "extremal.discrepancy";
  doc["r"] = r;
  doc["d"] = d;
  doc["value"] = res.value.get_str();
  Json arg = Json::array();
  for (const K2Profile& p : res.argmaxes) arg.push_back(profile_json(p));
  doc["argmax"] = std::move(arg);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"r", std::to_string(r)},
      {"d", std::to_string(d)},
      {"value", res.value.get_str()},
  };
  for (const K2Profile& p : res.argmaxes) {
    rows.emplace_back("argmax", std::to_string(p.r1) + ";" +
                                    std::to_string(p.r2) + ";" +
                                    std::to_string(p.r3));
  }
  if (with_window) {
    DiscrepancyWindow w = discrep_window(d, r);
    Json wj;
    wj["L"] = w.lower;
    wj["slack"] = w.upper_slack;
    wj["ints"] = w.ints();
    doc["window"] = std::move(wj);
    rows.emplace_back("window_L", std::to_string(w.lower));
    for (int s : w.ints()) rows.emplace_back("window_int", std::to_string(s));
  }
  emit(doc, kv_csv(rows), format, out);
  return 0;
}

int cmd_verify(const std::string& family_spec, int ell, bool corpus,
               const std::string& format, const EnumOptions& opts,
               std::ostream& out) {
  std::vector<VerifyCase> cases;
  if (corpus) {
    cases = builtin_corpus();
  } else {
    cases.push_back({family_spec, ell});
  }
  bool all_equal = true;
  std::uint64_t dedup_total = 0;
  Json results = Json::array();
  std::ostringstream csv;
  csv << "family,ell,chains,equal\n";
  for (const VerifyCase& c : cases) {
    SetFamily family = parse_family(c.family);
    Polynomial theorem = flag_minkowski(family, c.ell, opts);
    EnumStats stats;
    auto faces = enumerate_faces(family, opts, &stats);
    dedup_total += stats.dedup_merges;
    Polynomial oracle(c.ell);
    for (const FaceChain& chain : enumerate_chains(faces, c.ell)) {
      oracle.add_term(chain.deltadims, 1);
    }
    bool equal = theorem == oracle;
    all_equal = all_equal && equal;
    Json entry;
    entry["family"] = c.family;
    entry["ell"] = c.ell;
    entry["chain_count"] = oracle.coeff_sum().get_str();
    entry["equal"] = equal;
    if (!corpus) {
      entry["theorem"] = polynomial_document(theorem, "x");
      entry["oracle"] = polynomial_document(oracle, "x");
    }
    csv << c.family << "," << c.ell << "," << oracle.coeff_sum().get_str()
        << "," << (equal ? "true" : "false") << "\n";
    results.push_back(std::move(entry));
  }
  Json doc;
  doc["command"] = "verify";
  doc["cases"] = cases.size();
  doc["all_equal"] = all_equal;
  doc["dedup_merges"] = dedup_total;
  doc["results"] = std::move(results);
  emit(doc, csv.str(), format, out);
  return all_equal ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact flag polynomials and face statistics of Minkowski "
               "sums of standard simplices"};
  app.require_subcommand(1);

  std::string family_spec;
  std::string format = "json";
  std::string op;
  std::vector<int> rs;
  int ell = 1, k = 1, r = 1, d = 0, hyper_d = -1;
  bool phi = false, strict = false, with_argmax = false, with_window = false;
  bool corpus = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* flag_cmd =
      app.add_subcommand("flag", "Flag polynomial of a Minkowski sum");
  flag_cmd->add_option("--family", family_spec, "Family, e.g. \"1,2,3;1,2,4\"")
      ->required();
  flag_cmd->add_option("--ell", ell, "Chain length")->required()
      ->check(CLI::PositiveNumber);
  flag_cmd->add_flag("--phi", phi, "Chain-dimension coordinates (y variables)");
  flag_cmd->add_flag("--strict", strict, "Strict-chain polynomial");
  add_format(flag_cmd);

  CLI::App* fpoly_cmd =
      app.add_subcommand("fpoly", "f-polynomial of a Minkowski sum");
  fpoly_cmd->add_option("--family", family_spec)->required();
  add_format(fpoly_cmd);

  CLI::App* master_cmd =
      app.add_subcommand("master", "Master family, faces and chain counts");
  master_cmd->add_option("--k", k, "Number of summands")->required()
      ->check(CLI::PositiveNumber);
  master_cmd->add_option("--ell", ell, "Chain length");
  add_format(master_cmd);

  CLI::App* construct_cmd =
      app.add_subcommand("construct", "Flag polynomials of derived polytopes");
  construct_cmd->add_option("--op", op, "prism|pyramid|product|join|hypercube")
      ->required();
  construct_cmd->add_option("--r", rs, "Vertex counts of the simplex inputs")
      ->delimiter(',');
  construct_cmd->add_option("--d", hyper_d, "Hypercube dimension");
  construct_cmd->add_option("--ell", ell, "Chain length")->required()
      ->check(CLI::PositiveNumber);
  add_format(construct_cmd);

  CLI::App* extremal_cmd = app.add_subcommand("extremal", "Extremal statistics");
  extremal_cmd->require_subcommand(1);
  CLI::App* maxfaces_cmd = extremal_cmd->add_subcommand(
      "max-faces", "Maximum d-face count over two-simplex sums");
  maxfaces_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  maxfaces_cmd->add_option("--d", d)->required()
      ->check(CLI::NonNegativeNumber);
  maxfaces_cmd->add_flag("--argmax", with_argmax, "List attaining profiles");
  add_format(maxfaces_cmd);
  CLI::App* discrep_cmd = extremal_cmd->add_subcommand(
      "discrepancy", "Maximum (0,d)-chain discrepancy over two-simplex sums");
  discrep_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  discrep_cmd->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);
  discrep_cmd->add_flag("--window", with_window, "Localization window");
  add_format(discrep_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Chain formula against the brute-force face lattice");
  verify_cmd->add_option("--family", family_spec);
  verify_cmd->add_option("--ell", ell)->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--corpus", corpus, "Run the built-in corpus");
  add_format(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    EnumOptions opts = options_from_env();
    if (flag_cmd->parsed()) {
      return cmd_flag(family_spec, ell, phi, strict, format, opts, out);
    }
    if (fpoly_cmd->parsed()) return cmd_fpoly(family_spec, format, opts, out);
    if (master_cmd->parsed()) return cmd_master(k, ell, format, opts, out);
    if (construct_cmd->parsed()) {
      return cmd_construct(op, rs, hyper_d, ell, format, out);
    }
    if (extremal_cmd->parsed()) {
      if (maxfaces_cmd->parsed()) {
        return cmd_max_faces(r, d, with_argmax, format, out);
      }
      return cmd_discrepancy(r, d, with_window, format, out);
    }
    if (verify_cmd->parsed()) {
      if (!corpus && family_spec.empty()) {
        err << "verify needs --family or --corpus\n";
        return 2;
      }
      return cmd_verify(family_spec, ell, corpus, format, opts, out);
    }
    err << "no command\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << e.what() << " (raise " << kBudgetEnvVar << " to override)\n";
    return 3;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace flagforge::cli
