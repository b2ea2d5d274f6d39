#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cansyz/experiment.hpp"

using namespace cansyz;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cansyz_test_experiment";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

// the record without its machine-dependent timings
nlohmann::json stable(const TrialRecord& t) {
  nlohmann::json j = t.to_json();
  j.erase("timings");
  return j;
}

ExperimentConfig small(int trials) {
  ExperimentConfig c;
  c.genus = 6;
  c.characteristic = 3;
  c.trials = trials;
  c.base_seed = 11;
  return c;
}

RGCReport fake_report(const BettiTable& b, std::optional<int> dim, std::optional<long long> deg, bool finite) {
  RGCReport r;
  r.genus = 11;
  r.characteristic = 2;
  r.betti = b;
  r.finite_length = finite;
  r.ann_dim = dim;
  r.ann_deg = deg;
  return r;
}

}  // namespace

TEST(Experiment, ConfigValidation) {
  ExperimentConfig c = small(0);
  EXPECT_THROW(c.validate(), DomainError);
  c = small(2);
  c.jobs = 0;
  EXPECT_THROW(c.validate(), DomainError);
  c = small(2);
  c.time_budget = 0.0;
  EXPECT_THROW(c.validate(), DomainError);
  c = small(2);
  c.resume = true;
  EXPECT_THROW(c.validate(), DomainError);
  EXPECT_NO_THROW(small(2).validate());
}

TEST(Experiment, DeterministicAcrossJobs) {
  ExperimentConfig a = small(6);
  ExperimentConfig b = small(6);
  b.jobs = 3;
  const auto ra = run_experiment(a), rb = run_experiment(b);
  ASSERT_EQ(ra.records.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(ra.records[i].trial, static_cast<int>(i));
    EXPECT_EQ(stable(ra.records[i]), stable(rb.records[i]));
  }
  ASSERT_EQ(ra.summary.classes.size(), rb.summary.classes.size());
  for (std::size_t i = 0; i < ra.summary.classes.size(); ++i) {
    EXPECT_EQ(ra.summary.classes[i].key, rb.summary.classes[i].key);
    EXPECT_EQ(ra.summary.classes[i].count, rb.summary.classes[i].count);
  }
  // per-trial seeds are the public hash of (base seed, index)
  EXPECT_EQ(ra.records[4].seed, derive_seed(11, 4));
  EXPECT_EQ(run_trial(a, 4).to_json().at("report"), ra.records[4].to_json().at("report"));
}

TEST(Experiment, LedgerIsWrittenInTrialOrder) {
  const fs::path p = scratch("order.jsonl");
  ExperimentConfig c = small(5);
  c.jobs = 4;
  c.ledger_path = p.string();
  run_experiment(c);
  const auto recs = read_ledger(p.string());
  ASSERT_EQ(recs.size(), 5u);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(recs[i].trial, i);
  for (const auto& line : lines_of(slurp(p))) {
    const auto j = nlohmann::json::parse(line);
    for (const char* key : {"trial", "seed", "status", "attempts", "betti", "rgc", "timings"}) EXPECT_TRUE(j.contains(key)) << key;
    for (const char* key : {"finite_length", "ann_deg", "ann_dim", "scroll"}) EXPECT_TRUE(j.at("rgc").contains(key)) << key;
  }
}

TEST(Experiment, ResumeKeepsPrefixAndSkipsWork) {
  const fs::path p = scratch("resume.jsonl");
  ExperimentConfig c = small(3);
  c.ledger_path = p.string();
  run_experiment(c);
  const std::string first = slurp(p);

  // an interrupted write leaves an unterminated tail
  {
    std::ofstream out(p, std::ios::binary | std::ios::app);
    out << "{\"trial\":3,\"se";
  }
  c.trials = 7;
  c.jobs = 2;
  c.resume = true;
  const auto r = run_experiment(c);
  EXPECT_EQ(r.resumed, 3);
  const std::string second = slurp(p);
  ASSERT_GE(second.size(), first.size());
  EXPECT_EQ(second.substr(0, first.size()), first);
  EXPECT_EQ(lines_of(second).size(), 7u);

  // nothing left to do: the file is untouched
  const auto again = run_experiment(c);
  EXPECT_EQ(again.resumed, 7);
  EXPECT_EQ(slurp(p), second);

  // a fresh run gives the same records
  ExperimentConfig fresh = small(7);
  const auto f = run_experiment(fresh);
  for (int i = 0; i < 7; ++i) EXPECT_EQ(stable(f.records[i]), stable(r.records[i]));
}

TEST(Experiment, ResumeRejectsForeignLedger) {
  const fs::path p = scratch("foreign.jsonl");
  ExperimentConfig c = small(2);
  c.ledger_path = p.string();
  run_experiment(c);
  c.resume = true;
  c.base_seed = 12;
  EXPECT_THROW(run_experiment(c), Error);
  c.base_seed = 11;
  c.characteristic = 5;
  EXPECT_THROW(run_experiment(c), Error);
}

TEST(Experiment, MalformedLedgerLineNamesTheLine) {
  const fs::path p = scratch("bad.jsonl");
  ExperimentConfig c = small(2);
  c.ledger_path = p.string();
  run_experiment(c);
  auto ls = lines_of(slurp(p));
  {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << ls[0] << "\nnot json\n" << ls[1] << '\n';
  }
  try {
    read_ledger(p.string());
    FAIL() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Experiment, FailuresAreRecordedAndCountsConserved) {
  // one attempt per trial over F_2 fails often
  ExperimentConfig c;
  c.genus = 7;
  c.characteristic = 2;
  c.trials = 12;
  c.attempt_cap = 1;
  const auto r = run_experiment(c);
  long long classified = 0, failed = 0;
  for (const auto& row : r.summary.classes) classified += row.count;
  for (const auto& [st, n] : r.summary.failures) failed += n;
  EXPECT_EQ(classified + failed, 12);
  EXPECT_EQ(classified, r.summary.successes);
  ASSERT_GT(r.summary.failures.count(status::exhausted), 0u);
  for (const auto& t : r.records)
    if (t.status == status::exhausted) {
      EXPECT_EQ(t.attempts, 1);
      EXPECT_FALSE(t.report);
      EXPECT_TRUE(t.construction.contains("failures"));
      EXPECT_EQ(TrialRecord::from_json(t.to_json()).to_json(), t.to_json());
    }
}

TEST(Experiment, TimeBudgetGivesTimeoutStatus) {
  ExperimentConfig c = small(2);
  c.genus = 9;
  c.time_budget = 1e-6;
  const auto r = run_experiment(c);
  for (const auto& t : r.records) {
    EXPECT_EQ(t.status, status::timeout);
    EXPECT_FALSE(t.report);
  }
  EXPECT_EQ(r.summary.failures.at(status::timeout), 2);
}

TEST(Experiment, OracleRunsOnRequestedTrials) {
  ExperimentConfig c = small(3);
  c.oracle_trials = 2;
  const auto r = run_experiment(c);
  ASSERT_TRUE(r.records[0].oracle);
  ASSERT_TRUE(r.records[1].oracle);
  EXPECT_FALSE(r.records[2].oracle);
  EXPECT_TRUE(r.records[0].oracle->agrees());
  EXPECT_GT(r.records[0].oracle->checked, 0);
  EXPECT_EQ(r.summary.oracle_checked, 2);
  EXPECT_EQ(r.summary.oracle_disagreements, 0);
}

TEST(Classify, KeysSeparateRgcPairs) {
  const BettiTable b = BettiTable::from_rows({{1}, {0, 36, 160, 315, 288, 30}, {0, 0, 0, 0, 30, 288, 315, 160, 36}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}});
  const ClassKey a = classify(fake_report(b, 5, 6, false));
  const ClassKey c = classify(fake_report(b, 5, 12, false));
  EXPECT_NE(a, c);
  EXPECT_EQ(a, classify(fake_report(b, 5, 6, false)));
  EXPECT_EQ(a.rgc_text(), "(6,5)");
  // finite length shows dimension 0
  const ClassKey f = classify(fake_report(b, -1, 60, true));
  EXPECT_EQ(f.rgc_text(), "(60,0)");
  EXPECT_TRUE(f.finite_length);
  RGCReport inc = fake_report(b, 5, 6, false);
  inc.complete = false;
  const ClassKey q = classify(inc);
  EXPECT_TRUE(q.incomplete);
  EXPECT_EQ(q.rgc_text(), "incomplete");
  EXPECT_NE(q, a);
}

TEST(Render, GoldenFirstRowOfGenusElevenTable) {
  Summary s;
  s.genus = 11;
  s.characteristic = 2;
  const BettiTable b = BettiTable::from_rows(
      {{1}, {0, 36, 160, 315, 288, 28}, {0, 0, 0, 0, 28, 288, 315, 160, 36}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}});
  s.classes.push_back({classify(fake_report(b, -1, 60, true)), b, 230});
  EXPECT_EQ(render(s).markdown, slurp(fs::path(CANSYZ_TEST_DATA) / "table2_first_row.md"));
  EXPECT_EQ(render(s).csv, "genus,char,count,rgc_deg,rgc_dim,finite_length,incomplete,betti\n"
                           "11,2,230,60,0,true,false,1 . . . . . . . . . / . 36 160 315 288 28 . . . . / "
                           ". . . . 28 288 315 160 36 . / . . . . . . . . . 1\n");
}

TEST(Render, EmptySummaryIsHeaderOnly) {
  const Rendered r = render(Summary{});
  EXPECT_EQ(r.markdown, "| genus | char | # | RGC | Betti table |\n|---|---|---|---|---|\n");
  EXPECT_EQ(r.csv, "genus,char,count,rgc_deg,rgc_dim,finite_length,incomplete,betti\n");
}

TEST(Summary, SmokeCheckOnlyWhenSampleIsLarge) {
  std::vector<TrialRecord> recs;
  const BettiTable gen = BettiTable::from_rows({{1}, {0, 10, 16}, {0, 0, 0, 16, 10}, {0, 0, 0, 0, 0, 1}});
  const BettiTable tet = BettiTable::from_rows({{1}, {0, 10, 16, 3}, {0, 0, 3, 16, 10}, {0, 0, 0, 0, 0, 1}});
  for (int i = 0; i < 60; ++i) {
    TrialRecord t;
    t.trial = i;
    t.status = status::ok;
    t.attempts = 1;
    t.report = fake_report(i % 3 == 0 ? tet : gen, 3, 4, false);
    recs.push_back(t);
  }
  const Summary s = summarize(recs, 7, 3);
  EXPECT_EQ(s.classes.front().count, 40);
  EXPECT_NE(s.smoke.find("within 3 sigma"), std::string::npos) << s.smoke;
  recs.resize(20);
  EXPECT_NE(summarize(recs, 7, 3).smoke.find("not applicable"), std::string::npos);
}

TEST(Ingest, RoundTripAndErrors) {
  CurveOptions o;
  const CurveRecord c = random_canonical_curve(7, 3, 5, o);
  const fs::path p = scratch("c7.ideal");
  write_curve_file(p.string(), c);
  const CurveRecord back = ingest(p.string());
  EXPECT_EQ(back.meta.at("provenance"), "ingested");
  const GroebnerBasis G(c.ideal);
  for (const auto& f : back.ideal.gens()) EXPECT_TRUE(G.contains(f));
  const GroebnerBasis H(back.ideal);
  for (const auto& f : c.ideal.gens()) EXPECT_TRUE(H.contains(f));

  // header genus disagreeing with the variable count
  std::string text = slurp(p);
  const auto at = text.find("genus 7");
  const fs::path q = scratch("wrong.ideal");
  {
    std::ofstream out(q, std::ios::binary);
    out << text.substr(0, at) << "genus 8" << text.substr(at + 7);
  }
  try {
    ingest(q.string());
    FAIL() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find('8'), std::string::npos) << e.what();
    EXPECT_GT(e.line(), 0);
  }

  // drop all cubics and half the quadrics: not a canonical curve
  const fs::path r = scratch("partial.ideal");
  {
    std::ofstream out(r, std::ios::binary);
    out << "field 3\nring w0 w1 w2 w3 w4 w5 w6\ngenus 7\n";
    for (std::size_t i = 0; i < 5; ++i) out << c.ideal.gens()[i].to_string() << '\n';
  }
  EXPECT_THROW(ingest(r.string()), VerificationError);
}
