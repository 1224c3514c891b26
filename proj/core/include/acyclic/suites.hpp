#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace acyclic {

enum class Verdict { pass, fail, skipped };

struct CaseResult {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::string detail;  // serialized counterexample on fail, reason on skip
    double millis = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    double total_millis = 0;

    bool all_ok() const;  // no failures; skipped cases do not fail a suite
    int failed() const;
    int skipped() const;
};

struct SuiteBudget {
    std::chrono::milliseconds per_case{60'000};
    int workers = 0;  // 0 = hardware concurrency
};

/// lower-bounds, gd-family, chain-lemma, c1..c6, universal, verifier-oracle.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

/// Replays one verification campaign. Every case is deterministic; budget
/// misses are marked skipped, not failed.
SuiteReport run_suite(const std::string& name, const SuiteBudget& budget = {});

}  // namespace acyclic
