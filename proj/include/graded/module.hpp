#pragma once

#include <vector>

#include "graded/grading.hpp"

namespace graded {

/// Additive carrier of a module: abelian group on ids 0..order-1.
struct ModuleCarrier {
    int order = 0;
    std::vector<ElemId> add;
    ElemId zero = 0;
    std::vector<ElemId> neg;

    ElemId plus(ElemId a, ElemId b) const {
        return add[static_cast<std::size_t>(a) * order + b];
    }
    ElemId minus(ElemId a) const { return neg[a]; }
};

/// Validated graded module over a validated graded ring. Construct via
/// make_graded_module or ring_as_module.
struct GradedModule {
    GradedRing ring;
    ModuleCarrier carrier;
    std::vector<ElemId> action;  // ring.order x carrier.order, row-major by ring element
    std::vector<ElemSet> components;

    ElemSet homogeneous = 0;  // h(M), zero included
    std::vector<std::vector<ElemId>> decomp;
    std::vector<int> degree;  // unique degree of nonzero homogeneous m, else -1

    int order() const { return carrier.order; }
    ElemId act(ElemId r, ElemId m) const {
        return action[static_cast<std::size_t>(r) * carrier.order + m];
    }
    ElemId madd(ElemId a, ElemId b) const { return carrier.plus(a, b); }
    ElemSet full() const { return set_full(carrier.order); }
    bool is_homogeneous(ElemId m) const { return set_contains(homogeneous, m); }
};

ValidationReport validate_graded_module(const GradedRing& ring, const ModuleCarrier& carrier,
                                        const std::vector<ElemId>& action,
                                        const std::vector<ElemSet>& components);

GradedModule make_graded_module(GradedRing ring, ModuleCarrier carrier,
                                std::vector<ElemId> action, std::vector<ElemSet> components);

/// The ring viewed as a module over itself; graded ideals become graded submodules.
GradedModule ring_as_module(const GradedRing& R);

const std::vector<ElemId>& decompose(const GradedModule& M, ElemId m);

CheckResult is_submodule(const GradedModule& M, ElemSet N);
CheckResult is_graded_submodule(const GradedModule& M, ElemSet N);

// Smallest submodule containing the seed elements.
ElemSet submodule_closure(const GradedModule& M, ElemSet seed);

// (N :_R M) = {r : rM <= N}. Checked to be a graded ideal whenever N is graded.
ElemSet colon_ideal(const GradedModule& M, ElemSet N);

// Ann_R(N) = {r : rN = 0}.
ElemSet annihilator(const GradedModule& M, ElemSet N);

// (N :_M r) = {m : rm in N}.
ElemSet colon_submodule(const GradedModule& M, ElemSet N, ElemId r);

// Homogeneous zero divisors: {r in h(R) : rm = 0 for some nonzero m in h(M)}.
ElemSet hz_set(const GradedModule& M);

// I*N: submodule generated by products of ideal and submodule elements.
ElemSet ideal_mult_submodule(const GradedModule& M, ElemSet I, ElemSet N);

struct MultiplicationCheck {
    bool ok = true;
    ElemSet witness = 0;  // a graded submodule N with N != (N:M)M
};
MultiplicationCheck is_multiplication_module(const GradedModule& M);

struct SimpleCheck {
    bool simple = false;
    bool degenerate = false;  // zero module
};
SimpleCheck is_graded_simple(const GradedModule& M);

// NK = (N:M)(K:M)M; only defined over multiplication modules.
ElemSet submodule_product(const GradedModule& M, ElemSet N, ElemSet K);

// All graded submodules, ordered by cardinality then lexicographic ids.
std::vector<ElemSet> enumerate_graded_submodules(const GradedModule& M);

}  // namespace graded
