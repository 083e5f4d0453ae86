#pragma once

#include <vector>

#include "graded/elemset.hpp"
#include "graded/validation.hpp"

namespace graded {

/// Finite group on element ids 0..order-1 with a dense operation table.
struct FiniteGroup {
    int order = 0;
    std::vector<ElemId> op;  // row-major order*order
    ElemId identity = 0;
    std::vector<ElemId> inverse;

    ElemId mul(ElemId a, ElemId b) const {
        return op[static_cast<std::size_t>(a) * order + b];
    }
    ElemId inv(ElemId a) const { return inverse[a]; }
    bool is_abelian() const;
};

bool operator==(const FiniteGroup& a, const FiniteGroup& b);

// Associativity, two-sided identity, inverses, Latin-square property.
// Throws std::invalid_argument on ill-sized tables before any axiom check.
ValidationReport validate_group(const FiniteGroup& g);

FiniteGroup cyclic_group(int n);
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);

// Derives identity and inverses from the table, then validates.
FiniteGroup group_from_table(int order, std::vector<ElemId> op);

}  // namespace graded
