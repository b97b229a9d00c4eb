#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "horn/counter.hpp"
#include "horn/encoder.hpp"
#include "horn/error.hpp"
#include "horn/external.hpp"
#include "horn/families.hpp"
#include "horn/identities.hpp"
#include "horn/oracle.hpp"
#include "horn/report.hpp"
#include "horn/theory.hpp"

namespace horn::cli {

namespace {

using json = nlohmann::ordered_json;

/// Thrown for flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A comparison failed (verify, translate --verify).
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CounterFlags {
  unsigned threads = 1;
  double budget_seconds = 600.0;
  bool components = false;
  bool no_cache = false;
  std::string branching = "most-frequent";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--threads", threads, "Worker threads (1 = single-threaded)")
        ->check(CLI::Range(1U, 1024U));
    cmd.add_option("--budget-seconds", budget_seconds, "Wall-clock budget, 0 = unlimited")
        ->check(CLI::NonNegativeNumber);
    cmd.add_flag("--components", components, "Component decomposition with caching");
    cmd.add_flag("--no-cache", no_cache, "Disable the component cache");
    cmd.add_option("--branching", branching, "most-frequent | lowest | highest")
        ->check(CLI::IsMember({"most-frequent", "lowest", "highest"}));
  }

  CounterOptions options() const {
    CounterOptions o;
    o.threads = threads;
    o.components = components;
    o.cache = !no_cache;
    if (budget_seconds > 0) {
      o.budget = std::chrono::duration<double>(budget_seconds);
    } else {
      o.budget = std::nullopt;
    }
    if (branching == "lowest") o.branching = Branching::LowestId;
    if (branching == "highest") o.branching = Branching::HighestId;
    return o;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostringstream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw InputError("cannot write " + path);
}

Variant variant_arg(const std::string& text) {
  auto v = parse_variant(text);
  if (!v) throw UsageError("unknown variant '" + text + "' (expected h, h0, h1, h01)");
  return *v;
}

json stats_json(const CounterStats& s) {
  return {{"decisions", s.decisions},   {"propagations", s.propagations},
          {"conflicts", s.conflicts},   {"components", s.components},
          {"cache_hits", s.cache_hits}};
}

json report_json(const CountReport& r) {
  return {{"n", r.n},
          {"variant", std::string(variant_name(r.variant))},
          {"method", std::string(method_name(r.method))},
          {"count", to_string(r.count)},
          {"elapsed_seconds", r.elapsed.count()},
          {"stats", stats_json(r.stats)}};
}

std::string family_lines(const VectorFamily& f) {
  std::string text = format_family(f);
  return text.empty() ? "(empty)\n" : text;
}

// ---- count ---------------------------------------------------------------

struct CountCmd {
  unsigned n = 0;
  std::string variant;
  std::string method = "dpll";
  CounterFlags counter;
  std::string external_cmd;
  std::string external_pattern = kDefaultCountPattern;
  bool json_out = false;

  void run(std::ostringstream& out) const {
    const auto m = parse_method(method);
    if (!m) throw UsageError("unknown method '" + method + "'");
    CountOptions options;
    options.counter = counter.options();
    if (*m == Method::External) {
      std::string command = external_cmd;
      if (command.empty()) command = external_command_from_env().value_or("");
      if (command.empty()) {
        throw UsageError("method external needs --external-cmd or " +
                         std::string(kExternalCommandEnv));
      }
      options.external = ExternalCounterConfig{command, external_pattern};
    }
    const CountReport r = count_variant(n, variant_arg(variant), *m, options);
    if (json_out) {
      json j = {{"command", "count"}};
      j.update(report_json(r));
      out << j.dump(2) << '\n';
      return;
    }
    out << to_string(r.count) << '\n';
    out << "# " << variant_label(r.variant) << "(" << r.n << ") = " << with_separators(r.count)
        << "  method=" << method_name(r.method) << "  elapsed=" << std::fixed
        << std::setprecision(3) << r.elapsed.count() << "s  decisions=" << r.stats.decisions
        << "  propagations=" << r.stats.propagations << "  components=" << r.stats.components
        << "  cache_hits=" << r.stats.cache_hits << '\n';
  }
};

// ---- count-dimacs ----------------------------------------------------------

struct CountDimacsCmd {
  std::string path;
  CounterFlags counter;
  bool json_out = false;

  void run(std::ostringstream& out) const {
    const Cnf formula = parse_dimacs(read_file(path));
    const auto start = std::chrono::steady_clock::now();
    const CountResult r = count_models_with_stats(formula, counter.options());
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (json_out) {
      out << json{{"command", "count-dimacs"},
                  {"file", path},
                  {"variables", formula.var_count},
                  {"clauses", formula.clauses.size()},
                  {"count", to_string(r.count)},
                  {"elapsed_seconds", elapsed.count()},
                  {"stats", stats_json(r.stats)}}
                 .dump(2)
          << '\n';
      return;
    }
    out << "s mc " << to_string(r.count) << '\n';
  }
};

// ---- encode ----------------------------------------------------------------

struct EncodeCmd {
  unsigned n = 0;
  std::string variant;
  std::string out_path;
  bool json_out = false;

  void run(std::ostringstream& out) const {
    const CnfInstance instance = encode(n, variant_arg(variant));
    const std::string dimacs = emit_dimacs(instance);
    if (json_out) {
      if (!out_path.empty()) write_output(out_path, dimacs, out);
      json j = {{"command", "encode"},
                {"n", n},
                {"variant", std::string(variant_name(instance.variant))},
                {"predicates", instance.predicate_count()},
                {"unit_clauses", instance.units().size()},
                {"ternary_clauses", instance.ternary().size()},
                {"out", out_path.empty() ? json(nullptr) : json(out_path)}};
      if (out_path.empty()) j["dimacs"] = dimacs;
      out << j.dump(2) << '\n';
      return;
    }
    write_output(out_path, dimacs, out);
  }
};

// ---- translate -------------------------------------------------------------

struct TranslateCmd {
  std::string direction;
  std::string in_path;
  std::string out_path;
  bool verify = false;
  std::optional<unsigned> n;
  bool json_out = false;

  void run(std::ostringstream& out) const {
    if (verify && !n) throw UsageError("--verify requires --n");
    if (n && *n > kOracleCap) throw ResourceError("--verify is limited to n <= 4");
    const std::string text = read_file(in_path);
    std::string translated;
    std::optional<bool> match;
    if (direction == "to-clauses") {
      const EquationSet eqs = parse_equations(text);
      const ClauseSet clauses = equations_to_horn(eqs);
      translated = format_clauses(clauses);
      if (verify) match = models(eqs, *n) == models(clauses, *n);
    } else {
      const ClauseSet clauses = parse_clauses(text);
      const EquationSet eqs = horn_to_equations(clauses);
      translated = format_equations(eqs);
      if (verify) match = models(clauses, *n) == models(eqs, *n);
    }
    if (json_out) {
      if (!out_path.empty()) write_output(out_path, translated, out);
      json j = {{"command", "translate"}, {"direction", direction}};
      j["output"] = out_path.empty() ? json(translated) : json(nullptr);
      j["out"] = out_path.empty() ? json(nullptr) : json(out_path);
      j["models_match"] = match ? json(*match) : json(nullptr);
      out << j.dump(2) << '\n';
    } else {
      write_output(out_path, translated, out);
      if (match) out << "# models match: " << (*match ? "yes" : "no") << '\n';
    }
    if (match && !*match) throw CheckFailed("model sets differ after translation");
  }
};

// ---- check -----------------------------------------------------------------

struct CheckCmd {
  std::string path;
  std::optional<unsigned> width;
  bool json_out = false;

  void run(std::ostringstream& out) const {
    const VectorFamily family = parse_family(read_file(path), width);
    const bool closed = is_meet_closed(family);
    const VectorFamily closure = closed ? family : meet_closure(family);
    if (json_out) {
      json members = json::object();
      for (Variant v : kAllVariants) {
        members[std::string(variant_name(v))] = variant_member(family, v);
      }
      json j = {{"command", "check"},
                {"width", family.width()},
                {"size", family.size()},
                {"meet_closed", closed},
                {"variants", members}};
      j["closure"] = closed ? json(nullptr) : json(format_family(closure));
      out << j.dump(2) << '\n';
      return;
    }
    out << "width: " << family.width() << "\nsize: " << family.size()
        << "\nmeet-closed: " << (closed ? "yes" : "no") << '\n';
    for (Variant v : kAllVariants) {
      out << "member of " << variant_label(v) << ": " << (variant_member(family, v) ? "yes" : "no")
          << '\n';
    }
    if (!closed) out << "closure (" << closure.size() << " vectors):\n" << family_lines(closure);
  }
};

// ---- orbits ----------------------------------------------------------------

struct OrbitsCmd {
  unsigned n = 0;
  std::string variant;
  std::vector<std::string> reference;
  bool json_out = false;

  void run(std::ostringstream& out, std::ostream& err) const {
    const Variant v = variant_arg(variant);
    const OrbitSummary s = orbit_summary(n, v);
    std::optional<std::string> expected;
    if (n < reference.size()) expected = reference[n];
    const bool agrees = !expected || *expected == std::to_string(s.orbits);
    if (!agrees) {
      err << "warning: nonisomorphic count " << s.orbits << " differs from reference value "
          << *expected << '\n';
    }
    if (json_out) {
      json hist = json::array();
      for (const auto& [size, k] : s.size_histogram) hist.push_back({{"size", size}, {"orbits", k}});
      json j = {{"command", "orbits"},
                {"n", n},
                {"variant", std::string(variant_name(v))},
                {"labeled", s.labeled},
                {"nonisomorphic", s.orbits},
                {"orbit_sizes", hist}};
      j["reference"] = expected ? json(*expected) : json(nullptr);
      j["reference_agrees"] = expected ? json(agrees) : json(nullptr);
      out << j.dump(2) << '\n';
      return;
    }
    out << s.orbits << '\n';
    out << "# " << variant_label(v) << "(" << n << "): " << s.labeled << " labeled, " << s.orbits
        << " up to variable permutation; orbit sizes:";
    for (const auto& [size, k] : s.size_histogram) out << ' ' << size << "x" << k;
    out << '\n';
  }
};

// ---- verify ----------------------------------------------------------------

struct VerifyCmd {
  unsigned n_max = 4;
  CounterFlags counter;
  bool json_out = false;

  struct Check {
    std::string name;
    unsigned n;
    Count expected;
    Count actual;
    bool passed() const { return expected == actual; }
  };

  void run(std::ostringstream& out) const {
    if (n_max > kKnownCountMaxN) throw ResourceError("verify is limited to --n-max <= 6");
    CountOptions options;
    options.counter = counter.options();
    if (n_max == kKnownCountMaxN) options.counter.components = true;

    std::vector<Check> checks;
    // dpll[v][n]
    std::map<Variant, std::vector<Count>> dpll;
    for (unsigned n = 0; n <= n_max; ++n) {
      for (Variant v : kAllVariants) {
        dpll[v].push_back(count_variant(n, v, Method::Dpll, options).count);
      }
    }
    const auto at = [&](Variant v, unsigned n) -> const Count& { return dpll[v][n]; };
    for (unsigned n = 0; n <= n_max; ++n) {
      for (Variant v : {Variant::H, Variant::H1}) {
        if (auto known = known_count(v, n)) {
          checks.push_back({"published " + std::string(variant_label(v)), n, *known, at(v, n)});
        }
      }
      if (n <= kOracleCap) {
        for (Variant v : kAllVariants) {
          checks.push_back({"bruteforce = dpll " + std::string(variant_label(v)), n,
                            brute_count(n, v, counter.threads), at(v, n)});
        }
      }
      checks.push_back({"H0 = 2H", n, doubling(at(Variant::H, n)), at(Variant::H0, n)});
      checks.push_back({"H01 = 2H1", n, doubling(at(Variant::H1, n)), at(Variant::H01, n)});
      const std::span h(dpll[Variant::H].data(), n + 1);
      const std::span h0(dpll[Variant::H0].data(), n + 1);
      checks.push_back({"H1 = sum C(n,k) H(k)", n, binomial_sum(h), at(Variant::H1, n)});
      checks.push_back({"H01 = sum C(n,k) H0(k)", n, binomial_sum(h0), at(Variant::H01, n)});
    }
    const auto rows = asymptotic_report(dpll[Variant::H1]);

    bool all = true;
    for (const auto& c : checks) all = all && c.passed();

    if (json_out) {
      json j = {{"command", "verify"}, {"n_max", n_max}, {"passed", all}};
      json counts = json::object();
      for (Variant v : kAllVariants) {
        json seq = json::array();
        for (const auto& c : dpll[v]) seq.push_back(to_string(c));
        counts[std::string(variant_name(v))] = seq;
      }
      j["counts"] = counts;
      json list = json::array();
      for (const auto& c : checks) {
        list.push_back({{"check", c.name},
                        {"n", c.n},
                        {"expected", to_string(c.expected)},
                        {"actual", to_string(c.actual)},
                        {"passed", c.passed()}});
      }
      j["checks"] = list;
      json asym = json::array();
      for (const auto& r : rows) {
        asym.push_back({{"n", r.n},
                        {"h1", to_string(r.count)},
                        {"log2", r.log2_count},
                        {"central_binomial", to_string(r.central_binomial)},
                        {"ratio", r.ratio}});
      }
      j["asymptotic_h1"] = asym;
      out << j.dump(2) << '\n';
    } else {
      out << std::left;
      for (const auto& c : checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << "n=" << c.n << "  " << std::setw(26) << c.name
            << "  expected " << with_separators(c.expected) << ", got "
            << with_separators(c.actual) << '\n';
      }
      out << "# log2 H1(n) / C(n, floor(n/2)):\n";
      for (const auto& r : rows) {
        out << "#   n=" << r.n << "  log2=" << std::fixed << std::setprecision(3) << r.log2_count
            << "  C=" << r.central_binomial << "  ratio=" << r.ratio << '\n';
      }
      out << (all ? "verify: all " : "verify: FAILED, ") << checks.size() << " checks"
          << (all ? " passed" : "") << '\n';
    }
    if (!all) throw CheckFailed("verification mismatch");
  }
};

void emit_error(bool json_out, std::string_view kind, const std::string& message,
                std::ostream& out, std::ostream& err) {
  err << "error: " << message << '\n';
  if (json_out) {
    out << json{{"error", {{"kind", std::string(kind)}, {"message", message}}}}.dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of Horn functions and meet-closed families", "horncount"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "horncount 1.0");

  CountCmd count;
  auto* count_cmd = app.add_subcommand("count", "Count one variant at one n");
  count_cmd->add_option("--n", count.n, "Number of variables")->required();
  count_cmd->add_option("--variant", count.variant, "h | h0 | h1 | h01")->required();
  count_cmd->add_option("--method", count.method, "dpll | bruteforce | identity | external");
  count.counter.add_to(*count_cmd);
  count_cmd->add_option("--external-cmd", count.external_cmd,
                        "External counter command template ({} = DIMACS path)");
  count_cmd->add_option("--external-pattern", count.external_pattern,
                        "Regex whose first group is the count");
  count_cmd->add_flag("--json", count.json_out);

  CountDimacsCmd count_dimacs;
  auto* dimacs_cmd = app.add_subcommand("count-dimacs", "Count the models of a DIMACS CNF file");
  dimacs_cmd->add_option("file", count_dimacs.path)->required();
  count_dimacs.counter.add_to(*dimacs_cmd);
  dimacs_cmd->add_flag("--json", count_dimacs.json_out);

  EncodeCmd encode_args;
  auto* encode_cmd = app.add_subcommand("encode", "Emit the meet-closure CNF as DIMACS");
  encode_cmd->add_option("--n", encode_args.n)->required();
  encode_cmd->add_option("--variant", encode_args.variant)->required();
  encode_cmd->add_option("--out", encode_args.out_path, "Output path (default stdout)");
  encode_cmd->add_flag("--json", encode_args.json_out);

  TranslateCmd translate;
  auto* translate_cmd =
      app.add_subcommand("translate", "Convert between binomial equations and Horn clauses");
  translate_cmd->add_option("--direction", translate.direction, "to-clauses | to-equations")
      ->required()
      ->check(CLI::IsMember({"to-clauses", "to-equations"}));
  translate_cmd->add_option("--in", translate.in_path)->required();
  translate_cmd->add_option("--out", translate.out_path);
  translate_cmd->add_flag("--verify", translate.verify, "Compare model sets (needs --n)");
  translate_cmd->add_option("--n", translate.n);
  translate_cmd->add_flag("--json", translate.json_out);

  CheckCmd check;
  auto* check_cmd = app.add_subcommand("check", "Test a vector family for meet closure");
  check_cmd->add_option("file", check.path)->required();
  check_cmd->add_option("--n", check.width, "Vector width (needed for an empty file)");
  check_cmd->add_flag("--json", check.json_out);

  OrbitsCmd orbits;
  auto* orbits_cmd =
      app.add_subcommand("orbits", "Count families up to permutation of the variables");
  orbits_cmd->add_option("--n", orbits.n)->required();
  orbits_cmd->add_option("--variant", orbits.variant)->required();
  orbits_cmd->add_option("--reference", orbits.reference,
                         "Reference sequence a(0),a(1),... for a warning-level comparison")
      ->delimiter(',');
  orbits_cmd->add_flag("--json", orbits.json_out);

  VerifyCmd verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-validation matrix");
  verify_cmd->add_option("--n-max", verify.n_max)->required();
  verify.counter.add_to(*verify_cmd);
  verify_cmd->add_flag("--json", verify.json_out);

  const bool json_out = std::find(args.begin(), args.end(), "--json") != args.end();
  std::vector<const char*> argv{"horncount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::ostringstream buffer;
  try {
    if (*count_cmd) count.run(buffer);
    if (*dimacs_cmd) count_dimacs.run(buffer);
    if (*encode_cmd) encode_args.run(buffer);
    if (*translate_cmd) translate.run(buffer);
    if (*check_cmd) check.run(buffer);
    if (*orbits_cmd) orbits.run(buffer, err);
    if (*verify_cmd) verify.run(buffer);
  } catch (const CheckFailed& e) {
    // The report itself is the useful output here.
    out << buffer.str();
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const UsageError& e) {
    emit_error(json_out, "usage", e.what(), out, err);
    return kUsage;
  } catch (const InputError& e) {
    emit_error(json_out, "input", e.what(), out, err);
    return kUsage;
  } catch (const ResourceError& e) {
    emit_error(json_out, "resource", e.what(), out, err);
    return kResource;
  } catch (const ExternalError& e) {
    emit_error(json_out, "external", e.what(), out, err);
    if (!e.captured_output().empty()) err << "captured output:\n" << e.captured_output();
    return kExternal;
  }
  out << buffer.str();
  return kOk;
}

}  // namespace horn::cli
