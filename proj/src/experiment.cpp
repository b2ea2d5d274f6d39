#include "cansyz/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "cansyz/budget.hpp"
#include "cansyz/koszul.hpp"
#include "cansyz/rng.hpp"

namespace cansyz {

void ExperimentConfig::validate() const {
  if (trials < 1) throw DomainError("trials must be at least 1");
  if (jobs < 1) throw DomainError("jobs must be at least 1");
  if (attempt_cap < 0) throw DomainError("attempt cap must be nonnegative");
  if (time_budget && !(*time_budget > 0)) throw DomainError("time budget must be positive");
  if (oracle_trials < 0) throw DomainError("oracle trial count must be nonnegative");
  if (resume && ledger_path.empty()) throw DomainError("resume needs a ledger path");
}

// ------------------------------------------------------------ records

namespace {

nlohmann::json rgc_json(const RGCReport& r) {
  nlohmann::json j = {{"finite_length", r.finite_length}};
  j["ann_deg"] = r.ann_deg ? nlohmann::json(*r.ann_deg) : nlohmann::json();
  j["ann_dim"] = r.ann_dim ? nlohmann::json(*r.ann_dim) : nlohmann::json();
  j["scroll"] = r.scroll ? nlohmann::json(r.scroll->is_scroll) : nlohmann::json();
  return j;
}

}  // namespace

nlohmann::json TrialRecord::to_json() const {
  nlohmann::json j;
  j["trial"] = trial;
  j["seed"] = seed;
  j["genus"] = genus;
  j["char"] = characteristic;
  j["gonality"] = gonality ? nlohmann::json(*gonality) : nlohmann::json();
  j["status"] = status;
  j["attempts"] = attempts;
  if (report) {
    j["betti"] = report->betti.to_json(genus, characteristic).at("betti");
    j["rgc"] = rgc_json(*report);
    j["report"] = report->to_json();
  }
  if (oracle) {
    j["oracle"] = {{"checked", oracle->checked}, {"skipped", oracle->skipped}, {"mismatches", oracle->mismatches}};
  }
  if (!message.empty()) j["message"] = message;
  j["construction"] = construction;
  j["timings"] = timings;
  return j;
}

TrialRecord TrialRecord::from_json(const nlohmann::json& j) {
  TrialRecord t;
  t.trial = j.at("trial");
  t.seed = j.at("seed");
  t.genus = j.at("genus");
  t.characteristic = j.at("char");
  if (const auto& k = j.at("gonality"); !k.is_null()) t.gonality = k.get<int>();
  t.status = j.at("status");
  t.attempts = j.at("attempts");
  if (j.contains("report")) t.report = RGCReport::from_json(j.at("report"));
  if (j.contains("oracle")) {
    const auto& o = j.at("oracle");
    t.oracle = OracleResult{o.at("checked"), o.at("skipped"), o.at("mismatches").get<std::vector<std::string>>()};
  }
  t.message = j.value("message", "");
  t.construction = j.value("construction", nlohmann::json::object());
  t.timings = j.value("timings", std::map<std::string, double>{});
  return t;
}

// ------------------------------------------------------------ classes

std::string ClassKey::rgc_text() const {
  if (incomplete) return "incomplete";
  if (!rgc) return "-";
  return "(" + std::to_string(rgc->first) + "," + std::to_string(rgc->second) + ")";
}

std::string ClassKey::to_string() const {
  return betti + " " + rgc_text() + (finite_length ? " finite" : "");
}

ClassKey classify(const RGCReport& r) {
  ClassKey k;
  k.betti = r.betti.key();
  if (!r.complete) {
    k.incomplete = true;
    return k;
  }
  k.rgc = r.rgc_pair();
  k.finite_length = r.finite_length;
  return k;
}

nlohmann::json Summary::to_json() const {
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& c : classes)
    cls.push_back({{"betti", c.key.betti},
                   {"rgc", c.key.rgc_text()},
                   {"finite_length", c.key.finite_length},
                   {"count", c.count}});
  return {{"genus", genus},
          {"char", characteristic},
          {"trials", trials},
          {"successes", successes},
          {"classes", cls},
          {"failures", failures},
          {"mean_attempts", mean_attempts},
          {"max_attempts", max_attempts},
          {"wall_seconds", wall_seconds},
          {"oracle_checked", oracle_checked},
          {"oracle_disagreements", oracle_disagreements},
          {"smoke", smoke}};
}

Summary summarize(const std::vector<TrialRecord>& records, int genus, int characteristic) {
  Summary s;
  s.genus = genus;
  s.characteristic = characteristic;
  s.trials = static_cast<int>(records.size());
  std::map<ClassKey, ClassRow> rows;
  long long attempts = 0;
  for (const auto& t : records) {
    s.max_attempts = std::max(s.max_attempts, t.attempts);
    for (const auto& [stage, sec] : t.timings) s.wall_seconds += sec;
    if (t.oracle) {
      ++s.oracle_checked;
      if (!t.oracle->agrees()) ++s.oracle_disagreements;
    }
    if (!t.report) {
      ++s.failures[t.status];
      continue;
    }
    ++s.successes;
    attempts += t.attempts;
    const ClassKey k = classify(*t.report);
    auto& row = rows[k];
    row.key = k;
    row.betti = t.report->betti;
    ++row.count;
  }
  if (s.successes) s.mean_attempts = static_cast<double>(attempts) / static_cast<double>(s.successes);
  for (auto& [k, row] : rows) s.classes.push_back(std::move(row));
  std::stable_sort(s.classes.begin(), s.classes.end(),
                   [](const ClassRow& a, const ClassRow& b) { return a.count > b.count; });

  const double p = characteristic > 0 ? 1.0 / characteristic : 0;
  if (genus % 2 == 1 && s.successes > 0 && s.successes >= 20LL * characteristic) {
    const double n = static_cast<double>(s.successes);
    const double off = static_cast<double>(s.successes - s.classes.front().count) / n;
    const double band = 3 * std::sqrt(p * (1 - p) / n);
    std::ostringstream os;
    os << "non-dominant share " << off << " vs 1/p = " << p << " +- " << band
       << (std::abs(off - p) <= band ? " (within 3 sigma)" : " (outside 3 sigma)");
    s.smoke = os.str();
  } else {
    s.smoke = "not applicable (needs odd genus and at least 20p successful trials)";
  }
  return s;
}

// ------------------------------------------------------------ trials

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

OracleResult oracle_check(const Ideal& I, const BettiTable& b, std::size_t cap) {
  OracleResult o;
  KoszulOracle K(I, cap);
  const int g = I.ring()->nvars();
  for (int i = 0; i <= g - 2; ++i)
    for (int j = i; j <= i + 3; ++j) {
      const auto v = K.betti(i, j);
      if (!v) {
        ++o.skipped;
        continue;
      }
      ++o.checked;
      if (*v != b.at(i, j))
        o.mismatches.push_back("beta_{" + std::to_string(i) + "," + std::to_string(j) + "}: resolution " +
                               std::to_string(b.at(i, j)) + ", koszul " + std::to_string(*v));
    }
  return o;
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& cfg, int index) {
  TrialRecord t;
  t.trial = index;
  t.seed = derive_seed(cfg.base_seed, static_cast<std::uint64_t>(index));
  t.genus = cfg.genus;
  t.characteristic = cfg.characteristic;
  t.gonality = cfg.gonality;
  std::optional<std::chrono::duration<double>> limit;
  if (cfg.time_budget) limit = std::chrono::duration<double>(*cfg.time_budget);
  budget::Scope scope(limit);
  auto stage = Clock::now();
  try {
    CurveOptions o;
    o.gonality = cfg.gonality;
    o.attempt_cap = cfg.attempt_cap;
    const CurveRecord c = random_canonical_curve(cfg.genus, static_cast<std::uint32_t>(cfg.characteristic), t.seed, o);
    t.timings["construct"] = seconds_since(stage);
    t.attempts = c.attempts;
    t.construction = c.meta;
    stage = Clock::now();
    const FreeResolution res = canonical_resolution(c.ideal);
    t.timings["resolve"] = seconds_since(stage);
    stage = Clock::now();
    t.report = analyze(res, c.ideal);
    t.timings["analyze"] = seconds_since(stage);
    t.status = t.report->complete ? status::ok : status::incomplete;
    if (!t.report->complete) t.message = t.report->note;
    if (index < cfg.oracle_trials) {
      stage = Clock::now();
      t.oracle = oracle_check(c.ideal, t.report->betti, cfg.oracle_cap);
      t.timings["oracle"] = seconds_since(stage);
    }
  } catch (const AttemptsExhausted& e) {
    t.status = status::exhausted;
    t.attempts = e.attempts();
    t.construction = {{"failures", e.failures()}};
    t.message = e.what();
  } catch (const ResourceExhausted& e) {
    // a report that is already complete survives an oracle timeout
    if (t.report && t.report->complete) {
      t.oracle.reset();
      t.message = std::string("oracle skipped: ") + e.what();
    } else {
      t.report.reset();
      t.status = status::timeout;
      t.message = e.what();
    }
  } catch (const std::exception& e) {
    t.report.reset();
    t.status = status::error;
    t.message = e.what();
  }
  return t;
}

// ------------------------------------------------------------ ledger

std::vector<TrialRecord> read_ledger(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open ledger " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  std::vector<TrialRecord> out;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    ++lineno;
    if (nl == std::string::npos) break;  // unterminated tail: an interrupted write
    const std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    try {
      out.push_back(TrialRecord::from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed ledger record: ") + e.what(), lineno);
    }
  }
  return out;
}

namespace {

/// Byte length of the complete lines of the file.
std::uintmax_t complete_prefix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const std::size_t nl = text.rfind('\n');
  return nl == std::string::npos ? 0 : nl + 1;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::function<void(const TrialRecord&)>& progress) {
  cfg.validate();
  const std::size_t n = static_cast<std::size_t>(cfg.trials);
  std::vector<std::optional<TrialRecord>> slots(n);
  ExperimentResult result;

  std::ofstream out;
  if (!cfg.ledger_path.empty()) {
    namespace fs = std::filesystem;
    const bool existing = cfg.resume && fs::exists(cfg.ledger_path);
    if (existing) {
      fs::resize_file(cfg.ledger_path, complete_prefix(cfg.ledger_path));
      for (auto& t : read_ledger(cfg.ledger_path)) {
        if (t.genus != cfg.genus || t.characteristic != cfg.characteristic || t.gonality != cfg.gonality ||
            t.seed != derive_seed(cfg.base_seed, static_cast<std::uint64_t>(t.trial)))
          throw Error("ledger " + cfg.ledger_path + " belongs to a different experiment (trial " +
                      std::to_string(t.trial) + ")");
        if (t.trial < 0) throw ParseError("negative trial index in ledger");
        const auto i = static_cast<std::size_t>(t.trial);
        if (i >= n) continue;
        if (slots[i]) throw ParseError("trial " + std::to_string(i) + " appears twice in the ledger");
        slots[i] = std::move(t);
        ++result.resumed;
      }
    }
    out.open(cfg.ledger_path, existing ? std::ios::binary | std::ios::app : std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open ledger " + cfg.ledger_path + " for writing");
  }

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < n; ++i)
    if (!slots[i]) todo.push_back(i);

  std::mutex mu;
  std::size_t next_write = 0;  // position in todo
  std::atomic<std::size_t> next_job{0};
  std::string write_error;
  auto flush_ready = [&] {
    // caller holds mu
    while (next_write < todo.size() && slots[todo[next_write]]) {
      const TrialRecord& t = *slots[todo[next_write]];
      if (out.is_open() && write_error.empty()) {
        out << t.to_json().dump() << '\n';
        out.flush();
        if (!out) write_error = "ledger write failed: " + cfg.ledger_path;
      }
      if (progress) progress(t);
      ++next_write;
    }
  };
  auto worker = [&] {
    while (true) {
      const std::size_t k = next_job.fetch_add(1);
      if (k >= todo.size()) return;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (!write_error.empty()) return;
      }
      TrialRecord t = run_trial(cfg, static_cast<int>(todo[k]));
      std::lock_guard<std::mutex> lock(mu);
      slots[todo[k]] = std::move(t);
      flush_ready();
    }
  };
  const int threads = std::min<int>(cfg.jobs, static_cast<int>(std::max<std::size_t>(todo.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (!write_error.empty()) throw Error(write_error + " (rerun with --resume to continue)");

  for (auto& s : slots) result.records.push_back(std::move(*s));
  result.summary = summarize(result.records, cfg.genus, cfg.characteristic);
  return result;
}

// ------------------------------------------------------------ render

Rendered render(const Summary& s) {
  Rendered r;
  std::ostringstream md, csv;
  md << "| genus | char | # | RGC | Betti table |\n";
  md << "|---|---|---|---|---|\n";
  csv << "genus,char,count,rgc_deg,rgc_dim,finite_length,incomplete,betti\n";
  for (const auto& c : s.classes) {
    const auto rows = c.betti.dotted_rows();
    std::string cell, flat;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      cell += (i ? "<br>" : "") + rows[i];
      flat += (i ? " / " : "") + rows[i];
    }
    md << "| " << s.genus << " | " << s.characteristic << " | " << c.count << " | " << c.key.rgc_text() << " | "
       << cell << " |\n";
    csv << s.genus << ',' << s.characteristic << ',' << c.count << ',';
    if (c.key.rgc) csv << c.key.rgc->first << ',' << c.key.rgc->second;
    else csv << ',';
    csv << ',' << (c.key.finite_length ? "true" : "false") << ',' << (c.key.incomplete ? "true" : "false") << ','
        << flat << '\n';
  }
  r.markdown = md.str();
  r.csv = csv.str();
  return r;
}

CurveRecord ingest(const std::string& path) {
  CurveRecord c = read_curve_file(path);
  const Diagnostics d = verify_canonical(c.ideal, c.genus);
  if (!d.ok()) {
    std::string why;
    for (const auto& f : d.failures) why += (why.empty() ? "" : ", ") + f;
    throw VerificationError("ingested curve " + path + " fails verify_canonical: " + why);
  }
  c.meta["provenance"] = "ingested";
  return c;
}

}  // namespace cansyz
