// Command line front end: parse direct-sum-of-chains expressions, decide
// embeddability and equimorphy, classify sibling numbers with certificates,
// generate sibling families and run the verification suites.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dscsib/classify.hpp"
#include "dscsib/embed.hpp"
#include "dscsib/error.hpp"
#include "dscsib/parser.hpp"
#include "dscsib/report.hpp"
#include "dscsib/verify.hpp"
#include "dscsib/witness.hpp"

namespace {

using dscsib::Cardinal;
using dscsib::DscDescription;
using dscsib::SibAtom;
using dscsib::SibCount;

struct Output {
  std::string format = "text";

  void emit(const nlohmann::json& report, const std::string& text) const {
    if (format == "structured") {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }
};

int exit_code_of(const SibCount& count) { return count.is_range() ? 2 : 0; }

std::vector<Cardinal> parse_cardinal_list(const std::string& text) {
  std::vector<Cardinal> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(dscsib::parse_cardinal(item));
  return out;
}

std::vector<std::uint64_t> parse_size_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
  return out;
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_classify(const Output& out, const dscsib::Declarations& decls,
                 const std::string& expr, const std::string& mode) {
  Timer timer;
  const DscDescription d = dscsib::parse_dsc(expr, decls);
  const dscsib::SibResult result = mode == "countable"
                                       ? dscsib::classify_countable(d)
                                       : dscsib::classify_general(d);
  nlohmann::json report = dscsib::report_skeleton("classify", {dscsib::to_string(d)});
  report["mode"] = mode;
  report["result"] = {{"kind", "sibling_count"},
                      {"count", dscsib::to_json(result.count)}};
  report["certificate"] = dscsib::to_json(result.certificate);
  report["timing_ms"] = timer.ms();
  report["exit_code"] = exit_code_of(result.count);

  std::ostringstream text;
  text << "input:  " << dscsib::to_string(d) << "\n"
       << "mode:   " << mode << "\n"
       << "result: Sib = " << result.count.to_string() << "\n"
       << "rule:   " << dscsib::rule_name(result.certificate.rule) << "\n";
  const nlohmann::json witness = dscsib::to_json(result.certificate.witness);
  if (!witness.empty()) text << "witness: " << witness.dump() << "\n";
  out.emit(report, text.str());
  return exit_code_of(result.count);
}

int run_embeds(const Output& out, const dscsib::Declarations& decls,
               const std::string& lhs, const std::string& rhs, bool mutual) {
  Timer timer;
  const DscDescription a = dscsib::parse_dsc(lhs, decls);
  const DscDescription b = dscsib::parse_dsc(rhs, decls);
  const char* command = mutual ? "equimorphic" : "embeds";
  nlohmann::json report =
      dscsib::report_skeleton(command, {dscsib::to_string(a), dscsib::to_string(b)});

  std::ostringstream text;
  if (mutual) {
    const bool yes = dscsib::equimorphic(a, b);
    report["result"] = {{"kind", "boolean"}, {"value", yes}};
    text << dscsib::to_string(a) << (yes ? "  ~  " : "  !~  ")
         << dscsib::to_string(b) << "\n";
  } else {
    const dscsib::EmbedResult r = dscsib::dsc_embeds(a, b);
    report["result"] = {{"kind", "boolean"}, {"value", r.embeds}};
    if (r.assignment) report["result"]["assignment"] = dscsib::to_json(*r.assignment);
    text << dscsib::to_string(a) << (r.embeds ? "  ->  " : "  !->  ")
         << dscsib::to_string(b) << "\n";
    if (r.assignment) {
      for (const dscsib::Transfer& t : r.assignment->transfers) {
        text << "  " << dscsib::to_string(t.source) << " -> "
             << dscsib::to_string(t.target) << "  x " << t.amount.to_string()
             << "\n";
      }
    }
  }
  report["timing_ms"] = timer.ms();
  out.emit(report, text.str());
  return 0;
}

int run_witnesses(const Output& out, const dscsib::Declarations& decls,
                  const std::string& expr, const std::string& kind,
                  std::uint64_t count, const std::string& t_list,
                  const std::string& j_set, const std::string& target_text) {
  Timer timer;
  const DscDescription d = dscsib::parse_dsc(expr, decls);
  std::vector<DscDescription> family;
  if (kind == "padding") {
    family = dscsib::padding_family(d, count);
  } else if (kind == "bounded") {
    family = {dscsib::bounded_family(d, parse_cardinal_list(t_list))};
  } else if (kind == "qj") {
    family = {dscsib::qj_family(d, dscsib::PeriodicSet::parse(j_set))};
  } else if (kind == "swap") {
    family = dscsib::component_swap_family(
        d, dscsib::parse_chain(target_text, decls), count);
  } else {
    dscsib::fail("InvalidArgument", "unknown witness kind: " + kind);
  }

  nlohmann::json members = nlohmann::json::array();
  std::ostringstream text;
  text << "input: " << dscsib::to_string(d) << "\n"
       << "siblings (" << kind << "):\n";
  for (const DscDescription& member : family) {
    members.push_back(dscsib::to_string(member));
    text << "  " << dscsib::to_string(member) << "\n";
  }
  nlohmann::json report = dscsib::report_skeleton("witnesses", {dscsib::to_string(d)});
  report["result"] = {{"kind", "sibling_family"}, {"members", members}};
  report["timing_ms"] = timer.ms();
  out.emit(report, text.str());
  return 0;
}

int run_verify(const Output& out, const std::string& suite, std::uint64_t cap,
               std::uint64_t cases) {
  Timer timer;
  std::vector<dscsib::SuiteResult> results;
  if (suite == "all") {
    for (const std::string& name : dscsib::suite_names()) {
      results.push_back(dscsib::run_suite(name, cap, cases));
    }
  } else {
    results.push_back(dscsib::run_suite(suite, cap, cases));
  }

  nlohmann::json suites = nlohmann::json::array();
  std::ostringstream text;
  bool all_passed = true;
  for (const dscsib::SuiteResult& r : results) {
    suites.push_back(dscsib::to_json(r));
    all_passed = all_passed && r.passed();
    text << (r.passed() ? "pass" : "FAIL") << "  " << r.name << ": " << r.cases
         << " cases, " << r.failures << " failures\n";
    for (const std::string& note : r.notes) text << "      " << note << "\n";
  }
  nlohmann::json report = dscsib::report_skeleton("verify", {suite});
  report["result"] = {{"kind", "verification"}, {"suites", suites}};
  report["timing_ms"] = timer.ms();
  report["exit_code"] = all_passed ? 0 : 1;
  out.emit(report, text.str());
  return all_passed ? 0 : 1;
}

int run_oracle(const Output& out, const std::string& sub, const std::string& lhs,
               const std::string& rhs, std::uint64_t cap) {
  Timer timer;
  nlohmann::json report = dscsib::report_skeleton("oracle", {lhs, rhs});
  std::ostringstream text;
  int code = 0;
  if (sub == "sweep") {
    const dscsib::MutualEmbedSweep sweep = dscsib::check_mutual_embed_implies_iso(cap);
    report["result"] = {{"kind", "sweep"},
                        {"pairs_checked", sweep.pairs_checked},
                        {"mutual_pairs", sweep.mutual_pairs},
                        {"counterexamples", sweep.counterexamples.size()}};
    text << "pairs checked:   " << sweep.pairs_checked << "\n"
         << "mutual pairs:    " << sweep.mutual_pairs << "\n"
         << "counterexamples: " << sweep.counterexamples.size() << "\n";
    code = sweep.counterexamples.empty() ? 0 : 1;
    report["exit_code"] = code;
  } else {
    const dscsib::FinitePoset p(parse_size_list(lhs), cap);
    const dscsib::FinitePoset q(parse_size_list(rhs), cap);
    bool value = false;
    if (sub == "embeds") {
      value = dscsib::brute_embeds(p, q).embeds;
    } else if (sub == "iso") {
      value = dscsib::brute_iso(p, q);
    } else if (sub == "inject") {
      value = dscsib::induced_injection_check(p, q);
    } else {
      dscsib::fail("InvalidArgument", "unknown oracle subcommand: " + sub);
    }
    report["result"] = {{"kind", "boolean"}, {"value", value}};
    text << sub << "(" << lhs << "; " << rhs << ") = " << (value ? "true" : "false")
         << "\n";
  }
  report["timing_ms"] = timer.ms();
  out.emit(report, text.str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"siblings of direct sums of chains"};
  app.require_subcommand(1);
  // let --decls/--format appear after the subcommand as well
  app.fallthrough();

  Output out;
  std::string decls_path;
  app.add_option("--decls", decls_path, "declarations file for X(name) chains");
  app.add_option("--format", out.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string expr, expr2, mode = "general";
  std::uint64_t count = 3;
  std::string t_list, j_set = "evens", target_text = "eta", kind = "padding";
  std::string suite = "all";
  std::uint64_t cap = 7, cases = 250;
  std::string oracle_sub, oracle_lhs, oracle_rhs;

  CLI::App* classify = app.add_subcommand("classify", "sibling number with certificate");
  classify->add_option("expr", expr, "description")->required();
  classify->add_option("--mode", mode, "countable or general")
      ->check(CLI::IsMember({"countable", "general"}));

  CLI::App* embeds = app.add_subcommand("embeds", "decide embeddability");
  embeds->add_option("lhs", expr, "source description")->required();
  embeds->add_option("rhs", expr2, "target description")->required();

  CLI::App* equi = app.add_subcommand("equimorphic", "decide mutual embeddability");
  equi->add_option("lhs", expr, "first description")->required();
  equi->add_option("rhs", expr2, "second description")->required();

  CLI::App* witnesses = app.add_subcommand("witnesses", "generate sibling families");
  witnesses->add_option("expr", expr, "description")->required();
  witnesses->add_option("--kind", kind, "padding, bounded, qj or swap")
      ->check(CLI::IsMember({"padding", "bounded", "qj", "swap"}));
  witnesses->add_option("--count", count, "family size for padding/swap");
  witnesses->add_option("--t", t_list, "comma list of multiplicities for bounded");
  witnesses->add_option("--j", j_set, "kept index set for qj: all, evens, odds, r%q");
  witnesses->add_option("--target", target_text, "swapped chain for swap");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or 'all'");
  verify->add_option("--cap", cap, "exhaustive sweep size cap");
  verify->add_option("--cases", cases, "randomized suite case count");

  CLI::App* oracle = app.add_subcommand("oracle", "finite brute-force checks");
  oracle->add_option("sub", oracle_sub, "embeds, iso, inject or sweep")->required();
  oracle->add_option("lhs", oracle_lhs, "chain sizes, e.g. 2,2");
  oracle->add_option("rhs", oracle_rhs, "chain sizes, e.g. 3,2");
  oracle->add_option("--cap", cap, "size cap");

  CLI11_PARSE(app, argc, argv);

  std::string command = "unknown";
  try {
    dscsib::Declarations decls;
    if (!decls_path.empty()) decls = dscsib::Declarations::load_file(decls_path);
    if (classify->parsed()) {
      command = "classify";
      return run_classify(out, decls, expr, mode);
    }
    if (embeds->parsed()) {
      command = "embeds";
      return run_embeds(out, decls, expr, expr2, false);
    }
    if (equi->parsed()) {
      command = "equimorphic";
      return run_embeds(out, decls, expr, expr2, true);
    }
    if (witnesses->parsed()) {
      command = "witnesses";
      return run_witnesses(out, decls, expr, kind, count, t_list, j_set, target_text);
    }
    if (verify->parsed()) {
      command = "verify";
      return run_verify(out, suite, cap, cases);
    }
    if (oracle->parsed()) {
      command = "oracle";
      return run_oracle(out, oracle_sub, oracle_lhs, oracle_rhs, cap);
    }
  } catch (const dscsib::Error& e) {
    out.emit(dscsib::error_report(command, e.code(), e.what()),
             "error [" + e.code() + "]: " + e.what() + "\n");
    return 1;
  } catch (const std::exception& e) {
    out.emit(dscsib::error_report(command, "InternalError", e.what()),
             std::string("error [InternalError]: ") + e.what() + "\n");
    return 1;
  }
  return 1;
}
