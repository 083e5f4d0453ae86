#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graded/exec.hpp"
#include "graded/module.hpp"

namespace graded {

enum class FailReason {
    none,             // verdict true
    s_in_colon,       // s lies in (N :_R M), so the s-prime premise fails
    mcs_meets_colon,  // (N :_R M) meets S
    counterexample,   // a homogeneous pair defeats both disjuncts
};

const char* to_string(FailReason r);

struct SPrimeReport {
    bool verdict = false;
    FailReason reason = FailReason::none;
    std::optional<ElemId> witness;                            // s that settles an existential
    std::optional<std::pair<ElemId, ElemId>> counterexample;  // (r, m)
    std::optional<std::pair<ElemSet, ElemSet>> counterexample_pair;  // (I, K) in the pair oracle
};

/// rm in N forces r in (N:M) or m in N, over homogeneous r, m.
/// N must be a proper graded submodule.
SPrimeReport is_graded_prime(const GradedModule& M, ElemSet N, Exec exec = Exec::parallel);

/// rm in N forces sr in (N:M) or sm in N. s must be nonzero homogeneous;
/// s in (N:M) yields a distinctly flagged false (this covers N = M).
SPrimeReport is_graded_s_prime(const GradedModule& M, ElemSet N, ElemId s,
                               Exec exec = Exec::parallel);

/// Existential form over a multiplicatively closed S: disjoint from (N:M)
/// and some s in S works. Reports the smallest such s.
SPrimeReport is_graded_S_prime(const GradedModule& M, ElemSet N, ElemSet S,
                               Exec exec = Exec::parallel);

/// {s in h*(R) : N is s-prime}.
ElemSet sprime_witnesses(const GradedModule& M, ElemSet N, Exec exec = Exec::parallel);

/// Same predicate decided through graded ideal/submodule pairs:
/// IK <= N forces sI <= (N:M) or sK <= N. Bounded to |M| <= 16.
SPrimeReport is_s_prime_via_ideal_pairs(const GradedModule& M, ElemSet N, ElemId s,
                                        Exec exec = Exec::parallel);

struct ColonFamilyEntry {
    ElemId t;
    ElemSet colon;  // (N :_M t), proper because t escapes (N:M)
};

struct ColonFamily {
    ElemSet base = 0;
    std::vector<ColonFamilyEntry> entries;  // ascending t over h*(R) \ (N:M)
    std::vector<int> maximal_indices;       // all inclusion-maximal entries
};

ColonFamily colon_family(const GradedModule& M, ElemSet N);

struct WitnessResult {
    ElemId s;
    ElemSet colon;  // (N :_M s), graded prime by the maximal-colon argument
};

/// Picks the smallest t whose colon is inclusion-maximal in the family and
/// verifies both halves of the maximal-colon theorem on the way out.
WitnessResult find_sprime_witness(const GradedModule& M, ElemSet N,
                                  Exec exec = Exec::parallel);

struct TheoremCheck {
    std::string name;
    bool passed = true;
    long instances = 0;
    std::string failure;  // reproduction detail for the first violation
};

struct TheoremSuiteReport {
    std::vector<TheoremCheck> checks;
    bool all_passed() const;
    std::string bundle_json() const;
};

struct TheoremSuiteOptions {
    bool ideal_pair_oracle = true;  // skipped automatically above |M| = 16
    Exec exec = Exec::parallel;
};

/// Runs every transfer identity over all enumerated instances in M. A failed
/// check is an engine defect; callers usually escalate via bundle_json().
TheoremSuiteReport verify_module_theorems(const GradedModule& M,
                                          TheoremSuiteOptions options = {});

}  // namespace graded
