#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graded/module.hpp"
#include "graded/sprime.hpp"

namespace graded {

// ---------------------------------------------------------------------------
// quotients

struct QuotientRing {
    GradedRing ring;
    std::vector<ElemId> proj;  // old id -> coset id
};
QuotientRing quotient_graded(const GradedRing& R, ElemSet I);

struct QuotientModule {
    GradedModule module;  // over the unchanged ring
    std::vector<ElemId> proj;
};
QuotientModule quotient_module(const GradedModule& M, ElemSet L);

/// Decides s-primality of N and of N/L independently, insists the verdicts
/// agree, and returns the shared one. Needs L <= N, both graded.
bool quotient_sprime_transfer(const GradedModule& M, ElemSet N, ElemSet L, ElemId s,
                              Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------
// restriction and homomorphisms

struct SubmoduleView {
    GradedModule module;
    std::vector<ElemId> embed;     // view id -> parent id
    std::vector<ElemId> index_of;  // parent id -> view id, -1 outside
};
SubmoduleView submodule_as_module(const GradedModule& M, ElemSet L);

/// K s-prime in M restricts to K ∩ L s-prime in L, provided s escapes (K : L).
SPrimeReport restrict_sprime(const GradedModule& M, ElemSet K, ElemSet L, ElemId s,
                             Exec exec = Exec::parallel);

struct GradedHom {
    GradedModule source;
    GradedModule target;
    std::vector<ElemId> map;  // source carrier id -> target carrier id

    ElemId operator()(ElemId m) const { return map[m]; }
};
// Additive, R-linear, degree-preserving; both modules over the same ring.
GradedHom make_graded_hom(GradedModule source, GradedModule target,
                          std::vector<ElemId> map);

enum class HomDirection { preimage, image };

struct HomTransferResult {
    ElemSet carried;  // f^{-1}(K) or f(N)
    SPrimeReport report;
};
HomTransferResult hom_transfer(const GradedHom& f, ElemSet X, ElemId s, HomDirection dir,
                               Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------
// finite products (n-ary, mixed-radix element ids)

GradedRing product_rings(const std::vector<GradedRing>& factors);

struct ProductStructure {
    GradedModule module;
    std::vector<GradedModule> factors;
    std::vector<int> ring_orders;
    std::vector<int> module_orders;

    ElemId mix_ring(const std::vector<ElemId>& xs) const;
    ElemId mix_module(const std::vector<ElemId>& xs) const;
    std::vector<ElemId> split_ring(ElemId x) const;
    std::vector<ElemId> split_module(ElemId x) const;
};
ProductStructure product_modules(std::vector<GradedModule> factors);

/// Factorwise projections when L is exactly their product, otherwise nullopt.
std::optional<std::vector<ElemSet>> product_form(const ProductStructure& P, ElemSet L);

/// Componentwise criterion (one factor s_i-prime, every other s_j already in
/// its colon) checked against the direct predicate on the product.
bool product_sprime_decision(const ProductStructure& P, ElemSet L, ElemId s,
                             Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------
// idealization R(+)M

struct IdealizedRing {
    GradedRing ring;
    int base_order = 0;
    int module_order = 0;

    ElemId mix(ElemId r, ElemId m) const { return r * module_order + m; }
    std::pair<ElemId, ElemId> split(ElemId x) const {
        return {x / module_order, x % module_order};
    }
};
// Needs an abelian grading group.
IdealizedRing idealization(const GradedRing& R, const GradedModule& M);

/// P s-prime in R, P(+)M (s,m)-prime, and P(+)M (s,0)-prime are decided
/// independently and must agree; returns the shared verdict. m must sit in
/// the degree component of s.
bool idealization_sprime_equiv(const GradedRing& R, const GradedModule& M, ElemSet P,
                               ElemId s, ElemId m, Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------
// localization at a multiplicatively closed subset

struct LocalizedRing {
    GradedRing ring;
    ElemSet mcs = 0;
    std::vector<ElemId> s_list;      // sorted members of S
    std::vector<ElemId> pair_class;  // (r * |S| + si) -> class id
    std::vector<ElemId> canonical;   // r -> class of r/1

    ElemId cls(ElemId r, int si) const {
        return pair_class[static_cast<std::size_t>(r) * s_list.size() + si];
    }
};
LocalizedRing localize(const GradedRing& R, ElemSet S);

struct LocalizedModule {
    GradedModule module;  // over the localized ring
    std::vector<ElemId> pair_class;
    std::vector<ElemId> canonical;
};
LocalizedModule localize_module(const GradedModule& M, const LocalizedRing& LR);

ElemSet localize_submodule(const GradedModule& M, const LocalizedRing& LR,
                           const LocalizedModule& LM, ElemSet N);

// S* = {x in h(R) : x/1 is a homogeneous unit of S^{-1}R}; always contains S.
ElemSet saturation(const GradedRing& R, ElemSet S);

struct LocalizationTransfer {
    bool sprime = false;           // N s-prime in M
    bool localized_prime = false;  // S^{-1}N graded prime in S^{-1}M
    bool colon_condition = false;  // (N:_M t) <= (N:_M s) for all t in S
};
/// Requires (N:M) disjoint from S and s in S; insists sprime equals the
/// conjunction of the other two.
LocalizationTransfer localization_prime_transfer(const GradedModule& M, ElemSet N,
                                                 ElemSet S, ElemId s,
                                                 Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------
// group rings and crossed products

/// T[G]: functions G -> T under convolution, graded by support.
GradedRing group_ring(const FiniteRing& base, const FiniteGroup& G);

struct SubringView {
    FiniteRing ring;
    std::vector<ElemId> embed;     // subring id -> parent id
    std::vector<ElemId> index_of;  // parent id -> subring id, -1 outside
};
SubringView identity_component_ring(const GradedRing& R);

struct CrossedProductVerdict {
    bool graded_side = false;      // I s-prime in R for some homogeneous s
    std::optional<ElemId> s;       // smallest such s
    bool base_side = false;        // I_e t-prime in R_e for some nonzero t
    std::optional<ElemId> t;       // smallest such t, reported in R's ids
};
/// Both existentials are evaluated independently and required to agree;
/// needs a crossed product grading and a proper graded ideal.
CrossedProductVerdict crossed_product_equiv(const GradedRing& R, ElemSet I,
                                            Exec exec = Exec::parallel);

}  // namespace graded
