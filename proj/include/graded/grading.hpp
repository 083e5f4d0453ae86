#pragma once

#include <map>
#include <optional>
#include <vector>

#include "graded/elemset.hpp"
#include "graded/fingroup.hpp"
#include "graded/finring.hpp"
#include "graded/validation.hpp"

namespace graded {

/// Direct-sum decomposition of a ring carrier over a finite group.
struct Grading {
    FiniteGroup group;
    std::vector<ElemSet> components;  // indexed by group element id
};

Grading trivial_grading(const FiniteGroup& g, int carrier_order, ElemId zero = 0);

/// Validated graded commutative ring. Construct via make_graded_ring; all
/// queries assume the invariants hold and never re-check them.
struct GradedRing {
    FiniteRing ring;
    Grading grading;

    // Filled during construction.
    ElemSet homogeneous = 0;                  // h(R), zero included
    ElemSet homogeneous_nonzero = 0;          // h*(R)
    ElemSet hom_units = 0;                    // HU(R)
    ElemSet unit_set = 0;                     // all units of the carrier
    ElemSet support = 0;                      // {g : R_g != {0}} as a set of group ids
    std::vector<std::vector<ElemId>> decomp;  // decomp[x][g] = component of x in R_g
    std::vector<int> degree;                  // unique degree of nonzero homogeneous x, else -1

    int order() const { return ring.order; }
    int group_order() const { return grading.group.order; }
    ElemSet component(int g) const { return grading.components[g]; }
    bool is_homogeneous(ElemId x) const { return set_contains(homogeneous, x); }
};

bool operator==(const GradedRing& a, const GradedRing& b);

// Checks additive subgroups, unique direct-sum decomposition, the
// component product rule R_g R_h <= R_{gh}, and 1 in R_e. Lists one
// witnessed violation per failed axiom. Ill-sized tables throw before
// any axiom runs.
ValidationReport validate_graded_ring(const FiniteRing& ring, const Grading& grading);

GradedRing make_graded_ring(FiniteRing ring, Grading grading);  // throws ValidationError

// Component map of x: result[g] is the R_g part, summing to x.
const std::vector<ElemId>& decompose(const GradedRing& R, ElemId x);

ElemSet h_star(const GradedRing& R);
ElemSet homogeneous_units(const GradedRing& R);

CheckResult is_graded_ideal(const GradedRing& R, ElemSet I);
bool is_graded_field(const GradedRing& R);
bool is_crossed_product(const GradedRing& R);
bool is_strongly_graded(const GradedRing& R);

// Multiplicatively closed subset of h(R): contains 1, avoids 0, closed
// under products.
CheckResult is_mcs(const GradedRing& R, ElemSet S);

// All multiplicatively closed subsets of h(R), ascending by set_less.
std::vector<ElemSet> enumerate_mcs(const GradedRing& R);

// Smallest additive-and-multiplicative-closed superset containing seed and 0.
ElemSet ideal_closure(const GradedRing& R, ElemSet seed);

// Embeds integer-degree components into a cyclic group wide enough that no
// pairwise degree sum wraps. Rejects component data whose nonzero products
// escape the declared support.
Grading embed_integer_grading(const FiniteRing& ring,
                              const std::map<int, ElemSet>& by_degree);

}  // namespace graded
