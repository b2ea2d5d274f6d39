#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cansyz/analysis.hpp"
#include "cansyz/curve.hpp"
#include "json.hpp"

namespace cansyz {

struct ExperimentConfig {
  int genus = 7;
  int characteristic = 2;
  int trials = 1;
  std::uint64_t base_seed = 0;
  std::optional<int> gonality;
  /// 0: the constructor's default 10 p^2.
  int attempt_cap = 0;
  /// Seconds per trial (construction, resolution and analysis together).
  std::optional<double> time_budget;
  /// Koszul cross-check on trials [0, oracle_trials).
  int oracle_trials = 0;
  std::size_t oracle_cap = 400000;
  int jobs = 1;
  /// JSON-lines ledger; empty keeps records in memory only.
  std::string ledger_path;
  bool resume = false;

  /// Throws DomainError on nonsensical values.
  void validate() const;
};

/// Trial status values written to the ledger.
namespace status {
inline constexpr const char* ok = "ok";
inline constexpr const char* exhausted = "construction-exhausted";
inline constexpr const char* timeout = "timeout";
inline constexpr const char* incomplete = "incomplete";
inline constexpr const char* error = "error";
}  // namespace status

struct OracleResult {
  int checked = 0;
  /// Entries the oracle declined (middle space above its cap).
  int skipped = 0;
  std::vector<std::string> mismatches;
  bool agrees() const { return mismatches.empty(); }
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  int genus = 0;
  int characteristic = 0;
  std::optional<int> gonality;
  std::string status;
  int attempts = 0;
  std::optional<RGCReport> report;
  std::optional<OracleResult> oracle;
  std::string message;
  /// Construction metadata (node orbits, failure counts per clause).
  nlohmann::json construction = nlohmann::json::object();
  /// Seconds per stage; the only machine-dependent field.
  std::map<std::string, double> timings;

  nlohmann::json to_json() const;
  static TrialRecord from_json(const nlohmann::json& j);
};

/// Betti table, RGC pair and finite-length flag; incomplete reports share
/// one quarantine class.
struct ClassKey {
  std::string betti;
  std::optional<std::pair<long long, int>> rgc;
  bool finite_length = false;
  bool incomplete = false;

  std::string rgc_text() const;
  std::string to_string() const;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

ClassKey classify(const RGCReport& r);

struct ClassRow {
  ClassKey key;
  BettiTable betti;
  long long count = 0;
};

struct Summary {
  int genus = 0;
  int characteristic = 0;
  int trials = 0;
  /// Sorted by count (descending), then key.
  std::vector<ClassRow> classes;
  std::map<std::string, long long> failures;
  long long successes = 0;
  double mean_attempts = 0;
  int max_attempts = 0;
  double wall_seconds = 0;
  int oracle_checked = 0;
  int oracle_disagreements = 0;
  /// Soft check: share of trials outside the dominant class against 1/p.
  std::string smoke;

  const ClassRow* dominant() const { return classes.empty() ? nullptr : &classes.front(); }
  nlohmann::json to_json() const;
};

Summary summarize(const std::vector<TrialRecord>& records, int genus, int characteristic);

/// One trial, fully determined by (cfg, index) apart from timings.
TrialRecord run_trial(const ExperimentConfig& cfg, int index);

struct ExperimentResult {
  std::vector<TrialRecord> records;
  Summary summary;
  /// Trials taken from an existing ledger instead of recomputed.
  int resumed = 0;
};

/// Runs trials [0, cfg.trials) on cfg.jobs threads. Records reach the ledger
/// in trial order through a single writer; with cfg.resume, completed trials
/// already in the ledger are kept byte for byte and skipped.
ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                const std::function<void(const TrialRecord&)>& progress = {});

/// Parses a ledger. A truncated final line is dropped; any other malformed
/// line throws ParseError with its line number.
std::vector<TrialRecord> read_ledger(const std::string& path);

struct Rendered {
  std::string markdown;
  std::string csv;
};

/// Columns genus, char, #, RGC, Betti table (dot layout, rows joined by <br>).
Rendered render(const Summary& s);

/// Reads a curve file and runs verify_canonical with the header's genus.
/// Throws VerificationError naming the failed clauses.
CurveRecord ingest(const std::string& path);

}  // namespace cansyz
