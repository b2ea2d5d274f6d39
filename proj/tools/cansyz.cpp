// cansyz: canonical curves over F_p, their Betti tables and the RGC battery.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cansyz/analysis.hpp"
#include "cansyz/budget.hpp"
#include "cansyz/curve.hpp"
#include "cansyz/experiment.hpp"
#include "cansyz/koszul.hpp"
#include "json.hpp"

using namespace cansyz;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerification = 2, kResource = 3 };

std::optional<std::chrono::duration<double>> limit(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return std::chrono::duration<double>(seconds);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

int cmd_gen(int g, int p, std::uint64_t seed, std::optional<int> k, int cap, double budget_s, const std::string& out) {
  budget::Scope scope(limit(budget_s));
  CurveOptions o;
  o.gonality = k;
  o.attempt_cap = cap;
  const CurveRecord c = random_canonical_curve(g, static_cast<std::uint32_t>(p), seed, o);
  if (out.empty() || out == "-") write_curve(std::cout, c);
  else write_curve_file(out, c);
  std::cerr << "genus " << g << " over F_" << p << ": " << c.attempts << " attempt(s)\n";
  return kOk;
}

int cmd_betti(const std::string& file, bool json, double budget_s) {
  budget::Scope scope(limit(budget_s));
  const CurveRecord c = ingest(file);
  const BettiTable b = betti_table(canonical_resolution(c.ideal));
  if (json) std::cout << b.to_json(c.genus, c.characteristic).dump() << '\n';
  else std::cout << b.to_text();
  return kOk;
}

int cmd_analyze(const std::string& file, double budget_s) {
  budget::Scope scope(limit(budget_s));
  const CurveRecord c = ingest(file);
  const RGCReport r = analyze(canonical_resolution(c.ideal), c.ideal);
  std::cout << r.to_json().dump(2) << '\n';
  return r.complete ? kOk : kResource;
}

int cmd_oracle(const std::string& file, std::size_t cap, double budget_s) {
  budget::Scope scope(limit(budget_s));
  const CurveRecord c = ingest(file);
  const BettiTable b = betti_table(canonical_resolution(c.ideal));
  KoszulOracle K(c.ideal, cap);
  int checked = 0, skipped = 0, bad = 0;
  for (int i = 0; i <= c.genus - 2; ++i)
    for (int j = i; j <= i + 3; ++j) {
      const auto v = K.betti(i, j);
      if (!v) {
        ++skipped;
        continue;
      }
      ++checked;
      if (*v != b.at(i, j)) {
        ++bad;
        std::cout << "mismatch beta_{" << i << "," << j << "}: resolution " << b.at(i, j) << ", koszul " << *v << '\n';
      }
    }
  std::cout << "checked " << checked << ", skipped " << skipped << ", mismatches " << bad << '\n';
  return bad ? kVerification : kOk;
}

void print_summary(const Summary& s, int resumed) {
  std::cout << render(s).markdown;
  std::cout << "\ntrials " << s.trials << ", classified " << s.successes;
  for (const auto& [st, n] : s.failures) std::cout << ", " << st << ' ' << n;
  if (resumed) std::cout << ", resumed " << resumed;
  std::cout << "\nmean attempts " << s.mean_attempts << ", max " << s.max_attempts << ", compute " << s.wall_seconds
            << " s\n";
  if (s.oracle_checked)
    std::cout << "oracle: " << s.oracle_checked << " trial(s), " << s.oracle_disagreements << " disagreement(s)\n";
  std::cout << "smoke: " << s.smoke << '\n';
}

void write_renderings(const Summary& s, const std::string& md, const std::string& csv) {
  const Rendered r = render(s);
  if (!md.empty()) write_text(md, r.markdown);
  if (!csv.empty()) write_text(csv, r.csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cansyz: syzygies of canonical curves over prime fields"};
  app.require_subcommand(1);

  int genus = 7, characteristic = 2, trials = 1, jobs = 1, cap = 0, oracle = 0;
  std::uint64_t seed = 0;
  std::optional<int> gonality;
  double time_budget = 0;
  std::string out, file, md, csv;
  bool resume = false, json = false;
  std::size_t oracle_cap = 400000;

  auto* gen = app.add_subcommand("gen", "construct one canonical curve and write its ideal");
  gen->add_option("--genus", genus, "genus, 4..10")->required();
  gen->add_option("--char", characteristic, "prime characteristic")->required();
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--gonality", gonality, "build a k-gonal curve");
  gen->add_option("--attempt-cap", cap, "attempt cap (default 10 p^2)");
  gen->add_option("--time-budget", time_budget, "seconds");
  gen->add_option("--out", out, "output file (default stdout)");

  auto* betti = app.add_subcommand("betti", "minimal resolution and Betti table of a curve file");
  betti->add_option("file", file, "curve ideal file")->required();
  betti->add_flag("--json", json, "JSON output");
  betti->add_option("--time-budget", time_budget, "seconds");

  auto* an = app.add_subcommand("analyze", "full RGC report of a curve file (JSON)");
  an->add_option("file", file, "curve ideal file")->required();
  an->add_option("--time-budget", time_budget, "seconds");

  auto* orc = app.add_subcommand("oracle", "compare the resolution with Koszul cohomology");
  orc->add_option("file", file, "curve ideal file")->required();
  orc->add_option("--cap", oracle_cap, "largest Koszul middle space");
  orc->add_option("--time-budget", time_budget, "seconds");

  auto* ex = app.add_subcommand("experiment", "batch of random curves into a JSON-lines ledger");
  ex->add_option("--genus", genus, "genus, 4..10")->required();
  ex->add_option("--char", characteristic, "prime characteristic")->required();
  ex->add_option("--trials", trials, "number of trials")->required();
  ex->add_option("--seed", seed, "base seed");
  ex->add_option("--gonality", gonality, "k-gonal curves");
  ex->add_option("--attempt-cap", cap, "attempt cap per trial (default 10 p^2)");
  ex->add_option("--out", out, "ledger path");
  ex->add_flag("--resume", resume, "keep completed trials of an existing ledger");
  ex->add_option("--jobs", jobs, "worker threads");
  ex->add_option("--time-budget", time_budget, "seconds per trial");
  ex->add_option("--oracle", oracle, "Koszul cross-check on the first N trials");
  ex->add_option("--markdown", md, "write the class table as markdown");
  ex->add_option("--csv", csv, "write the class table as CSV");

  auto* rd = app.add_subcommand("render", "class tables from a ledger");
  rd->add_option("file", file, "ledger")->required();
  rd->add_option("--markdown", md, "markdown output (default stdout)");
  rd->add_option("--csv", csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(genus, characteristic, seed, gonality, cap, time_budget, out);
    if (*betti) return cmd_betti(file, json, time_budget);
    if (*an) return cmd_analyze(file, time_budget);
    if (*orc) return cmd_oracle(file, oracle_cap, time_budget);
    if (*ex) {
      ExperimentConfig cfg;
      cfg.genus = genus;
      cfg.characteristic = characteristic;
      cfg.trials = trials;
      cfg.base_seed = seed;
      cfg.gonality = gonality;
      cfg.attempt_cap = cap;
      if (time_budget > 0) cfg.time_budget = time_budget;
      cfg.oracle_trials = oracle;
      cfg.jobs = jobs;
      cfg.ledger_path = out;
      cfg.resume = resume;
      // fail fast on unsupported parameters instead of once per trial
      if (gonality) gonal_model_params(genus, *gonality);
      else plane_model_params(genus);
      PrimeField check(static_cast<std::uint32_t>(characteristic));
      const ExperimentResult r = run_experiment(cfg, [](const TrialRecord& t) {
        std::cerr << "trial " << t.trial << ": " << t.status;
        if (t.report) std::cerr << ' ' << classify(*t.report).to_string();
        std::cerr << '\n';
      });
      print_summary(r.summary, r.resumed);
      write_renderings(r.summary, md, csv);
      return r.summary.oracle_disagreements ? kVerification : kOk;
    }
    if (*rd) {
      const auto records = read_ledger(file);
      if (records.empty()) {
        const Rendered r = render(Summary{});
        if (md.empty()) std::cout << r.markdown;
        else write_text(md, r.markdown);
        if (!csv.empty()) write_text(csv, r.csv);
        return kOk;
      }
      const Summary s = summarize(records, records.front().genus, records.front().characteristic);
      const Rendered r = render(s);
      if (md.empty()) std::cout << r.markdown;
      else write_text(md, r.markdown);
      if (!csv.empty()) write_text(csv, r.csv);
      return kOk;
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerification;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kVerification;
  } catch (const ResourceExhausted& e) {
    std::cerr << "resource exhausted: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
