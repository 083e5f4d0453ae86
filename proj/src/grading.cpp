#include "graded/grading.hpp"

#include <algorithm>
#include <stdexcept>

namespace graded {

Grading trivial_grading(const FiniteGroup& g, int carrier_order, ElemId zero) {
    Grading gr;
    gr.group = g;
    gr.components.assign(g.order, set_single(zero));
    gr.components[g.identity] = set_full(carrier_order);
    return gr;
}

bool operator==(const GradedRing& a, const GradedRing& b) {
    return a.ring == b.ring && a.grading.group == b.grading.group &&
           a.grading.components == b.grading.components;
}

namespace {

bool is_additive_subgroup(const FiniteRing& r, ElemSet s, std::vector<int>* witness) {
    if (!set_contains(s, r.zero)) {
        if (witness) *witness = {r.zero};
        return false;
    }
    bool ok = true;
    set_for_each(s, [&](ElemId a) {
        if (!ok) return;
        if (!set_contains(s, r.minus(a))) {
            if (witness) *witness = {a};
            ok = false;
            return;
        }
        set_for_each(s, [&](ElemId b) {
            if (!ok) return;
            if (!set_contains(s, r.plus(a, b))) {
                if (witness) *witness = {a, b};
                ok = false;
            }
        });
    });
    return ok;
}

// Enumerates one element per component and records the decomposition of each
// sum. Returns false (with a witness element) when two tuples collide, which
// under the size product check is the same as the sum map not being bijective.
bool build_decompositions(const FiniteRing& r, const Grading& g,
                          std::vector<std::vector<ElemId>>& decomp, ElemId* collision) {
    const int ng = g.group.order;
    decomp.assign(r.order, {});
    std::vector<ElemId> current(ng, r.zero);
    // iterative product enumeration over component member lists
    std::vector<std::vector<ElemId>> members(ng);
    for (int gid = 0; gid < ng; ++gid) members[gid] = set_elements(g.components[gid]);
    std::vector<std::size_t> idx(ng, 0);
    while (true) {
        ElemId sum = r.zero;
        for (int gid = 0; gid < ng; ++gid) {
            current[gid] = members[gid][idx[gid]];
            sum = r.plus(sum, current[gid]);
        }
        if (!decomp[sum].empty()) {
            if (collision) *collision = sum;
            return false;
        }
        decomp[sum] = current;
        int pos = ng - 1;
        while (pos >= 0) {
            if (++idx[pos] < members[pos].size()) break;
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return true;
}

}  // namespace

ValidationReport validate_graded_ring(const FiniteRing& ring, const Grading& grading) {
    ValidationReport rep = validate_ring(ring);
    ValidationReport grp = validate_group(grading.group);
    for (auto& v : grp.violations) rep.add("grading." + v.axiom, v.witness);
    if (grading.components.size() != static_cast<std::size_t>(grading.group.order))
        throw std::invalid_argument("grading must assign one component per group element");
    const ElemSet carrier = set_full(ring.order);
    for (const ElemSet c : grading.components)
        if (c & ~carrier) throw std::invalid_argument("component element out of range");
    if (!rep.ok()) return rep;

    const int ng = grading.group.order;
    for (int g = 0; g < ng; ++g) {
        std::vector<int> w;
        if (!is_additive_subgroup(ring, grading.components[g], &w)) {
            w.insert(w.begin(), g);
            rep.add("grading.component_subgroup", w);
        }
    }
    if (!rep.ok()) return rep;

    // direct sum: sizes multiply to the order and sums are pairwise distinct
    long long prod = 1;
    for (int g = 0; g < ng; ++g) {
        prod *= set_size(grading.components[g]);
        if (prod > ring.order) break;
    }
    if (prod != ring.order) {
        rep.add("grading.direct_sum_size", {},
                "component sizes multiply to " + std::to_string(prod) + ", carrier has " +
                    std::to_string(ring.order));
        return rep;
    }
    std::vector<std::vector<ElemId>> decomp;
    ElemId collision = 0;
    if (!build_decompositions(ring, grading, decomp, &collision)) {
        rep.add("grading.direct_sum_unique", {collision},
                "element decomposes in more than one way");
        return rep;
    }

    for (int g = 0; g < ng && rep.ok(); ++g)
        for (int h = 0; h < ng && rep.ok(); ++h) {
            const ElemSet target = grading.components[grading.group.mul(g, h)];
            set_for_each(grading.components[g], [&](ElemId a) {
                set_for_each(grading.components[h], [&](ElemId b) {
                    if (!rep.ok()) return;
                    ElemId p = ring.times(a, b);
                    if (!set_contains(target, p))
                        rep.add("grading.component_product", {g, h, a, b, p});
                });
            });
        }
    if (!rep.ok()) return rep;

    if (!set_contains(grading.components[grading.group.identity], ring.one))
        rep.add("grading.unity_in_identity_component", {ring.one});
    return rep;
}

GradedRing make_graded_ring(FiniteRing ring, Grading grading) {
    ValidationReport rep = validate_graded_ring(ring, grading);
    if (!rep.ok()) throw ValidationError(std::move(rep));

    GradedRing R;
    R.ring = std::move(ring);
    R.grading = std::move(grading);
    const int ng = R.grading.group.order;

    ElemId collision;
    build_decompositions(R.ring, R.grading, R.decomp, &collision);

    R.degree.assign(R.ring.order, -1);
    for (int g = 0; g < ng; ++g) {
        R.homogeneous |= R.grading.components[g];
        if (R.grading.components[g] != set_single(R.ring.zero)) R.support |= set_single(g);
        set_for_each(R.grading.components[g], [&](ElemId x) {
            if (x != R.ring.zero) R.degree[x] = g;
        });
    }
    R.homogeneous_nonzero = R.homogeneous & ~set_single(R.ring.zero);
    R.unit_set = units(R.ring);
    R.hom_units = R.homogeneous & R.unit_set;
    return R;
}

const std::vector<ElemId>& decompose(const GradedRing& R, ElemId x) {
    return R.decomp[x];
}

ElemSet h_star(const GradedRing& R) { return R.homogeneous_nonzero; }

ElemSet homogeneous_units(const GradedRing& R) { return R.hom_units; }

CheckResult is_graded_ideal(const GradedRing& R, ElemSet I) {
    const FiniteRing& r = R.ring;
    if (!set_contains(I, r.zero)) return {false, "ideal.zero_missing", {r.zero}};
    CheckResult res{true, "", {}};
    set_for_each(I, [&](ElemId a) {
        if (!res.ok) return;
        set_for_each(I, [&](ElemId b) {
            if (res.ok && !set_contains(I, r.plus(a, b)))
                res = {false, "ideal.not_additively_closed", {a, b}};
        });
        if (!res.ok) return;
        for (ElemId x = 0; x < r.order; ++x)
            if (!set_contains(I, r.times(x, a))) {
                res = {false, "ideal.not_absorbing", {x, a}};
                return;
            }
    });
    if (!res.ok) return res;
    set_for_each(I, [&](ElemId x) {
        if (!res.ok) return;
        const auto& parts = decompose(R, x);
        for (int g = 0; g < R.group_order(); ++g)
            if (!set_contains(I, parts[g])) {
                res = {false, "ideal.component_escapes", {x, g, parts[g]}};
                return;
            }
    });
    return res;
}

bool is_graded_field(const GradedRing& R) {
    return (R.homogeneous_nonzero & ~R.hom_units) == 0;
}

bool is_crossed_product(const GradedRing& R) {
    bool ok = true;
    set_for_each(R.support, [&](int g) {
        if ((R.grading.components[g] & R.unit_set) == 0) ok = false;
    });
    return ok;
}

ElemSet ideal_closure(const GradedRing& R, ElemSet seed) {
    const FiniteRing& r = R.ring;
    ElemSet cur = seed | set_single(r.zero);
    for (;;) {
        ElemSet next = cur;
        set_for_each(cur, [&](ElemId a) {
            set_for_each(cur, [&](ElemId b) { next |= set_single(r.plus(a, b)); });
            for (ElemId x = 0; x < r.order; ++x) next |= set_single(r.times(x, a));
        });
        if (next == cur) return cur;
        cur = next;
    }
}

bool is_strongly_graded(const GradedRing& R) {
    const FiniteRing& r = R.ring;
    for (int g = 0; g < R.group_order(); ++g) {
        const ElemSet a_set = R.grading.components[g];
        const ElemSet b_set = R.grading.components[R.grading.group.inv(g)];
        // additive span of the pairwise products
        ElemSet span = set_single(r.zero);
        ElemSet products = 0;
        set_for_each(a_set, [&](ElemId a) {
            set_for_each(b_set, [&](ElemId b) { products |= set_single(r.times(a, b)); });
        });
        for (;;) {
            ElemSet next = span;
            set_for_each(span, [&](ElemId x) {
                set_for_each(products, [&](ElemId p) { next |= set_single(r.plus(x, p)); });
            });
            if (next == span) break;
            span = next;
        }
        if (!set_contains(span, r.one)) return false;
    }
    return true;
}

CheckResult is_mcs(const GradedRing& R, ElemSet S) {
    if (S & ~R.homogeneous) {
        ElemId bad = set_elements(S & ~R.homogeneous).front();
        return {false, "mcs.not_homogeneous", {bad}};
    }
    if (!set_contains(S, R.ring.one)) return {false, "mcs.one_missing", {R.ring.one}};
    if (set_contains(S, R.ring.zero)) return {false, "mcs.contains_zero", {R.ring.zero}};
    CheckResult res{true, "", {}};
    set_for_each(S, [&](ElemId a) {
        set_for_each(S, [&](ElemId b) {
            if (res.ok && !set_contains(S, R.ring.times(a, b)))
                res = {false, "mcs.not_closed", {a, b, R.ring.times(a, b)}};
        });
    });
    return res;
}

std::vector<ElemSet> enumerate_mcs(const GradedRing& R) {
    std::vector<ElemId> candidates =
        set_elements(R.homogeneous_nonzero & ~set_single(R.ring.one));
    std::vector<ElemSet> out;
    const std::size_t n = candidates.size();
    if (n > 20)
        throw std::invalid_argument("too many homogeneous elements to enumerate m.c.s. sets");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ElemSet S = set_single(R.ring.one);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) S |= set_single(candidates[i]);
        if (is_mcs(R, S).ok) out.push_back(S);
    }
    std::sort(out.begin(), out.end(), set_less);
    return out;
}

Grading embed_integer_grading(const FiniteRing& ring,
                              const std::map<int, ElemSet>& by_degree) {
    if (by_degree.empty()) throw std::invalid_argument("no components given");
    int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;
    // reject data whose nonzero products land outside the declared support
    for (const auto& [da, ca] : by_degree)
        for (const auto& [db, cb] : by_degree) {
            bool vanishes = true;
            set_for_each(ca, [&](ElemId a) {
                set_for_each(cb, [&](ElemId b) {
                    if (ring.times(a, b) != ring.zero) vanishes = false;
                });
            });
            if (!vanishes && !by_degree.count(da + db))
                throw std::invalid_argument(
                    "integer grading support is not product-closed at degrees " +
                    std::to_string(da) + "+" + std::to_string(db));
        }
    const int spread = hi - lo;
    const int n = 2 * spread + 1;
    if (n > kMaxOrder) throw std::invalid_argument("integer grading spread too wide");
    Grading gr;
    gr.group = cyclic_group(n);
    gr.components.assign(n, ElemSet{1} << ring.zero);
    for (const auto& [d, c] : by_degree) gr.components[d - lo] = c;
    return gr;
}

}  // namespace graded
