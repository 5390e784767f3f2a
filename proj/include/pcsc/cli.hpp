#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pcsc/axioms.hpp"
#include "pcsc/efficiency.hpp"
#include "pcsc/faults.hpp"
#include "pcsc/io.hpp"
#include "pcsc/paperlab.hpp"
#include "pcsc/rules.hpp"

namespace pcsc::cli {

inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

inline constexpr const char* kReportFormat = "pcsc-report/1";

// FNV-1a over the canonical profile document.
inline std::string profile_digest(const Profile& p) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : format_profile(p)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream s;
  s << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

// A readable file, or else the name of a built-in fixture.
inline Profile load_profile(const std::string& source) {
  std::ifstream in(source);
  if (in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
  }
  for (const auto& name : fixture_names())
    if (name == source) return parse_profile(fixture_text(name));
  throw DomainError("no profile file or fixture named '" + source + "'");
}

struct ScanSpec {
  std::size_t m = 3;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
};

// "m=3,n<=4" or "m=3,n=4".
inline ScanSpec parse_scan(const std::string& text) {
  ScanSpec s;
  bool have_m = false, have_n = false;
  auto number = [&](const std::string& v) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 6)
      throw DomainError("bad number '" + v + "' in scan spec");
    return static_cast<std::size_t>(std::stoul(v));
  };
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    part = std::string(detail::trim(part));
    if (part.rfind("m=", 0) == 0) {
      s.m = number(part.substr(2));
      have_m = true;
    } else if (part.rfind("n<=", 0) == 0) {
      s.n_max = number(part.substr(3));
      have_n = true;
    } else if (part.rfind("n=", 0) == 0) {
      s.n_min = s.n_max = number(part.substr(2));
      have_n = true;
    } else {
      throw DomainError("bad scan spec '" + text + "', expected m=M,n<=N");
    }
  }
  if (!have_m || !have_n) throw DomainError("scan spec needs both m and n");
  if (s.n_max < 1) throw DomainError("scan needs at least one voter");
  return s;
}

inline nlohmann::json witness_json(const Witness& w) {
  nlohmann::json j;
  j["axiom"] = w.axiom.name();
  j["description"] = w.description;
  j["profile"] = format_profile(w.profile);
  j["profile_digest"] = profile_digest(w.profile);
  j["outcome"] = w.outcome.to_string();
  if (w.other) j["other_profile"] = format_profile(*w.other);
  if (w.other_outcome) j["other_outcome"] = w.other_outcome->to_string();
  if (w.voter) j["voter"] = *w.voter;
  if (w.permutation) j["permutation"] = *w.permutation;
  return j;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact randomized social choice workbench", "pcsc"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Print a machine-readable report");

    std::string rule_name, profile_src, ext_name, lottery_spec, start_spec, axiom_name, scan_text, fault, fixture_name;
    std::size_t remove = 0, max_steps = 50;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    bool anonymous = false, collect_all = false;

    auto* compute = app.add_subcommand("compute", "Evaluate a rule on a profile");
    compute->add_option("--rule", rule_name, "rd | ml | f1 | f2 | condorcet-uniform")->required();
    compute->add_option("--profile", profile_src, "Profile file or fixture name")->required();
    compute->add_option("--remove-voter", remove, "Drop voter i (1-based) first");

    auto* dominate = app.add_subcommand("dominate", "Search for a lottery that dominates the given one");
    dominate->add_option("--ext", ext_name, "pc | pc1 | sd")->required();
    dominate->add_option("--profile", profile_src, "Profile file or fixture name")->required();
    dominate->add_option("--lottery", lottery_spec, "e.g. a:1/2,b:1/2")->required();

    auto* efficient = app.add_subcommand("efficient", "Decide efficiency of a lottery");
    efficient->add_option("--ext", ext_name, "pc | pc1 | sd | ex-post")->required();
    efficient->add_option("--profile", profile_src, "Profile file or fixture name")->required();
    efficient->add_option("--lottery", lottery_spec, "e.g. a:1/2,b:1/2")->required();

    auto* path = app.add_subcommand("path", "Follow PC-improvements from a lottery");
    path->add_option("--profile", profile_src, "Profile file or fixture name")->required();
    path->add_option("--start", start_spec, "Starting lottery")->required();
    path->add_option("--max-steps", max_steps, "Step budget")->check(CLI::PositiveNumber);
    auto* seed_opt = path->add_option("--seed", seed, "Randomize the choice of improvement");

    auto* check = app.add_subcommand("check", "Check an axiom for a rule");
    check->add_option("--axiom", axiom_name, "e.g. pc-strategyproofness, strict-sd-participation")->required();
    check->add_option("--rule", rule_name, "Rule name")->required();
    auto* prof_opt = check->add_option("--profile", profile_src, "Profile file or fixture name");
    auto* scan_opt = check->add_option("--scan", scan_text, "Exhaustive scan, e.g. m=3,n<=3");
    prof_opt->excludes(scan_opt);
    check->add_flag("--anonymous", anonymous, "Scan profiles up to voter renaming");
    check->add_flag("--all", collect_all, "Report every witness of a scan");
    check->add_option("--workers", workers, "Scan threads (0: all cores)");

    auto* suite = app.add_subcommand("paper-suite", "Verify every fixture fact");
    suite->add_option("--inject-fault", fault, "flip-pc-sign | degenerate-ml-tiebreak")
        ->check(CLI::IsMember({"flip-pc-sign", "degenerate-ml-tiebreak"}));

    auto* show = app.add_subcommand("fixture", "Print a fixture profile, or list fixtures");
    show->add_option("name", fixture_name, "Fixture name");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }

    report_ = nlohmann::json::object();
    report_["format"] = kReportFormat;
    report_["command"] = args;
    int status = kOk;
    try {
      if (*compute) {
        Profile p = load_profile(profile_src);
        digest(p);
        if (remove) p = remove_voter(p, remove);
        const Lottery out = rule_by_name(rule_name)(p);
        report_["result"] = {{"rule", rule_name}, {"lottery", out.to_string()}};
        text_ << rule_name << " = " << out.to_string() << "\n";
      } else if (*dominate) {
        const Profile p = load_profile(profile_src);
        digest(p);
        const Lottery lot = parse_lottery(lottery_spec, p.alternatives());
        const auto cert = find_dominator(p, lot, parse_extension(ext_name));
        report_["result"] = {{"extension", ext_name}, {"lottery", lot.to_string()}, {"dominated", cert.has_value()}};
        if (cert) {
          report_["result"]["dominator"] = cert->dominator.to_string();
          std::vector<std::string> outcomes;
          for (auto c : cert->outcomes) outcomes.emplace_back(to_string(c));
          report_["result"]["voter_outcomes"] = outcomes;
          text_ << "dominated by " << cert->dominator.to_string() << "\n";
          status = kViolation;
        } else {
          text_ << "not dominated\n";
        }
      } else if (*efficient) {
        const Profile p = load_profile(profile_src);
        digest(p);
        const Lottery lot = parse_lottery(lottery_spec, p.alternatives());
        const bool eff = is_efficient(p, lot, parse_efficiency_notion(ext_name));
        report_["result"] = {{"notion", ext_name}, {"lottery", lot.to_string()}, {"efficient", eff}};
        text_ << (eff ? "efficient" : "not efficient") << "\n";
        if (!eff) status = kViolation;
      } else if (*path) {
        const Profile p = load_profile(profile_src);
        digest(p);
        const Lottery start = parse_lottery(start_spec, p.alternatives());
        const auto result = improvement_path(p, start, max_steps, *seed_opt ? std::optional(seed) : std::nullopt);
        std::vector<std::string> lots;
        for (const auto& l : result.lotteries) lots.push_back(l.to_string());
        report_["result"] = {{"termination", to_string(result.termination)}, {"lotteries", lots}, {"steps", result.steps}};
        for (const auto& s : result.steps) text_ << s << "\n";
        text_ << "termination: " << to_string(result.termination) << "\n";
        if (result.termination != PathTermination::ReachedEfficient) status = kViolation;
      } else if (*check) {
        const AxiomSpec spec = parse_axiom(axiom_name);
        const Rule rule = rule_by_name(rule_name);
        AxiomReport rep;
        if (*scan_opt) {
          const ScanSpec s = parse_scan(scan_text);
          ScanOptions opt;
          opt.up_to_anonymity = anonymous;
          opt.n_min = s.n_min;
          opt.workers = workers;
          opt.collect_all = collect_all;
          rep = exhaustive_scan(rule, s.m, s.n_max, spec, opt);
          report_["inputs"]["scan"] = scan_text;
        } else if (*prof_opt) {
          const Profile p = load_profile(profile_src);
          digest(p);
          rep = {spec.name(), rule.name, Verdict::Holds, {}, 1};
          if (auto w = check_axiom(rule, p, spec)) {
            rep.verdict = Verdict::Violated;
            rep.witnesses.push_back(std::move(*w));
          }
        } else {
          throw CLI::ValidationError("check needs --profile or --scan");
        }
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& w : rep.witnesses) ws.push_back(witness_json(w));
        report_["result"] = {{"axiom", rep.axiom},
                             {"rule", rep.rule},
                             {"verdict", to_string(rep.verdict)},
                             {"profiles_checked", rep.profiles_checked},
                             {"witnesses", ws}};
        text_ << rep.axiom << " for " << rep.rule << ": " << to_string(rep.verdict) << " (" << rep.profiles_checked
              << " profile" << (rep.profiles_checked == 1 ? "" : "s") << ")\n";
        for (const auto& w : rep.witnesses) text_ << "  " << w.description << "\n" << indent(format_profile(w.profile));
        if (rep.verdict == Verdict::Violated) status = kViolation;
      } else if (*suite) {
        std::optional<ScopedFault> injected;
        if (fault == "flip-pc-sign") injected.emplace(Fault::FlipPcSign);
        if (fault == "degenerate-ml-tiebreak") injected.emplace(Fault::DegenerateMlTiebreak);
        const PaperSuiteReport rep = verify_paper_suite();
        nlohmann::json rs = nlohmann::json::array();
        for (const auto& r : rep.results) {
          rs.push_back({{"fixture", r.fixture}, {"claim", r.claim}, {"expected", r.expected}, {"observed", r.observed},
                        {"passed", r.passed}});
          if (!r.passed)
            text_ << "FAIL " << r.fixture << ": " << r.claim << "\n  expected " << r.expected << "\n  observed "
                  << r.observed << "\n";
        }
        report_["result"] = {{"passed", rep.passed}, {"failed", rep.failed}, {"facts", rs}};
        if (!fault.empty()) report_["inputs"]["fault"] = fault;
        text_ << rep.passed << " facts passed, " << rep.failed << " failed\n";
        if (!rep.ok()) status = kViolation;
      } else if (*show) {
        if (fixture_name.empty()) {
          for (const auto& n : fixture_names()) text_ << n << "\n";
        } else {
          text_ << fixture_text(fixture_name);
        }
        report_["result"] = fixture_name.empty() ? nlohmann::json(fixture_names()) : nlohmann::json(fixture_text(fixture_name));
      }
    } catch (const ParseError& e) {
      err_ << "parse error: " << e.what() << "\n";
      return kUsage;
    } catch (const CLI::Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const ApplicabilityError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const BudgetError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
    report_["exit_status"] = status;
    if (json)
      out_ << report_.dump(2) << "\n";
    else
      out_ << text_.str();
    return status;
  }

 private:
  void digest(const Profile& p) { report_["inputs"]["profile_digest"] = profile_digest(p); }

  static std::string indent(const std::string& s) {
    std::string out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out += "    " + line + "\n";
    return out;
  }

  std::ostream& out_;
  std::ostream& err_;
  std::ostringstream text_;
  nlohmann::json report_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace pcsc::cli
