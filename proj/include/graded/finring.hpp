#pragma once

#include <vector>

#include "graded/elemset.hpp"
#include "graded/validation.hpp"

namespace graded {

/// Finite commutative ring with unity on element ids 0..order-1.
struct FiniteRing {
    int order = 0;
    std::vector<ElemId> add;  // row-major order*order
    std::vector<ElemId> mul;
    ElemId zero = 0;
    ElemId one = 0;
    std::vector<ElemId> neg;

    ElemId plus(ElemId a, ElemId b) const {
        return add[static_cast<std::size_t>(a) * order + b];
    }
    ElemId times(ElemId a, ElemId b) const {
        return mul[static_cast<std::size_t>(a) * order + b];
    }
    ElemId minus(ElemId a) const { return neg[a]; }
};

bool operator==(const FiniteRing& a, const FiniteRing& b);

// Abelian additive group, associative commutative multiplication,
// distributivity, nonzero two-sided unity.
ValidationReport validate_ring(const FiniteRing& r);

ElemSet units(const FiniteRing& r);
bool is_unit(const FiniteRing& r, ElemId x);

FiniteRing zn_ring(int n);

// Z_n[u]/(u^2 - c): element a + b*u has id a + n*b.
FiniteRing quad_ring(int n, int c);

// Derives zero, one and negation from the tables, then validates.
FiniteRing ring_from_tables(int order, std::vector<ElemId> add, std::vector<ElemId> mul);

}  // namespace graded
