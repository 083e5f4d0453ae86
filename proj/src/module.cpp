#include "graded/module.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace graded {

namespace {

void check_module_shape(const GradedRing& ring, const ModuleCarrier& carrier,
                        const std::vector<ElemId>& action,
                        const std::vector<ElemSet>& components) {
    if (carrier.order < 1 || carrier.order > kMaxOrder)
        throw std::invalid_argument("module order must be in 1.." + std::to_string(kMaxOrder));
    const auto nm = static_cast<std::size_t>(carrier.order);
    const auto nr = static_cast<std::size_t>(ring.order());
    if (carrier.add.size() != nm * nm || carrier.neg.size() != nm)
        throw std::invalid_argument("module carrier tables do not match declared order");
    if (action.size() != nr * nm)
        throw std::invalid_argument("action table must be |R| x |M|");
    if (components.size() != static_cast<std::size_t>(ring.group_order()))
        throw std::invalid_argument("module grading must assign one component per group element");
    auto mrange = [&](ElemId x) { return x >= 0 && x < carrier.order; };
    for (ElemId x : carrier.add)
        if (!mrange(x)) throw std::invalid_argument("carrier add entry out of range");
    for (ElemId x : carrier.neg)
        if (!mrange(x)) throw std::invalid_argument("carrier neg entry out of range");
    for (ElemId x : action)
        if (!mrange(x)) throw std::invalid_argument("action entry out of range");
    for (ElemSet c : components)
        if (c & ~set_full(carrier.order))
            throw std::invalid_argument("module component element out of range");
}

bool carrier_subgroup(const ModuleCarrier& c, ElemSet s, std::vector<int>* w) {
    if (!set_contains(s, c.zero)) {
        if (w) *w = {c.zero};
        return false;
    }
    bool ok = true;
    set_for_each(s, [&](ElemId a) {
        if (!ok) return;
        if (!set_contains(s, c.minus(a))) {
            if (w) *w = {a};
            ok = false;
            return;
        }
        set_for_each(s, [&](ElemId b) {
            if (ok && !set_contains(s, c.plus(a, b))) {
                if (w) *w = {a, b};
                ok = false;
            }
        });
    });
    return ok;
}

bool build_module_decomp(const ModuleCarrier& carrier, const std::vector<ElemSet>& comps,
                         std::vector<std::vector<ElemId>>& decomp, ElemId* collision) {
    const int ng = static_cast<int>(comps.size());
    decomp.assign(carrier.order, {});
    std::vector<std::vector<ElemId>> members(ng);
    for (int g = 0; g < ng; ++g) members[g] = set_elements(comps[g]);
    std::vector<std::size_t> idx(ng, 0);
    std::vector<ElemId> current(ng, carrier.zero);
    while (true) {
        ElemId sum = carrier.zero;
        for (int g = 0; g < ng; ++g) {
            current[g] = members[g][idx[g]];
            sum = carrier.plus(sum, current[g]);
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

ValidationReport validate_graded_module(const GradedRing& ring, const ModuleCarrier& carrier,
                                        const std::vector<ElemId>& action,
                                        const std::vector<ElemSet>& components) {
    check_module_shape(ring, carrier, action, components);
    ValidationReport rep;

    FiniteGroup additive;
    additive.order = carrier.order;
    additive.op = carrier.add;
    additive.identity = carrier.zero;
    additive.inverse = carrier.neg;
    ValidationReport grp = validate_group(additive);
    for (auto& v : grp.violations) rep.add("module.add_" + v.axiom.substr(6), v.witness);
    for (ElemId a = 0; a < carrier.order; ++a) {
        bool bad = false;
        for (ElemId b = a + 1; b < carrier.order && !bad; ++b)
            if (carrier.plus(a, b) != carrier.plus(b, a)) {
                rep.add("module.add_commutative", {a, b});
                bad = true;
            }
        if (bad) break;
    }
    if (!rep.ok()) return rep;

    const FiniteRing& r = ring.ring;
    auto act = [&](ElemId x, ElemId m) {
        return action[static_cast<std::size_t>(x) * carrier.order + m];
    };
    for (ElemId m = 0; m < carrier.order; ++m)
        if (act(r.one, m) != m) {
            rep.add("module.unital", {m});
            break;
        }
    bool bad = false;
    for (ElemId x = 0; x < r.order && !bad; ++x)
        for (ElemId m = 0; m < carrier.order && !bad; ++m)
            for (ElemId n = 0; n < carrier.order && !bad; ++n)
                if (act(x, carrier.plus(m, n)) != carrier.plus(act(x, m), act(x, n))) {
                    rep.add("module.distributes_over_madd", {x, m, n});
                    bad = true;
                }
    bad = false;
    for (ElemId x = 0; x < r.order && !bad; ++x)
        for (ElemId y = 0; y < r.order && !bad; ++y)
            for (ElemId m = 0; m < carrier.order && !bad; ++m) {
                if (act(r.plus(x, y), m) != carrier.plus(act(x, m), act(y, m))) {
                    rep.add("module.distributes_over_radd", {x, y, m});
                    bad = true;
                } else if (act(r.times(x, y), m) != act(x, act(y, m))) {
                    rep.add("module.action_associative", {x, y, m});
                    bad = true;
                }
            }
    if (!rep.ok()) return rep;

    const int ng = ring.group_order();
    for (int g = 0; g < ng; ++g) {
        std::vector<int> w;
        if (!carrier_subgroup(carrier, components[g], &w)) {
            w.insert(w.begin(), g);
            rep.add("module.component_subgroup", w);
        }
    }
    if (!rep.ok()) return rep;

    long long prod = 1;
    for (int g = 0; g < ng; ++g) {
        prod *= set_size(components[g]);
        if (prod > carrier.order) break;
    }
    if (prod != carrier.order) {
        rep.add("module.direct_sum_size", {},
                "component sizes multiply to " + std::to_string(prod) + ", carrier has " +
                    std::to_string(carrier.order));
        return rep;
    }
    std::vector<std::vector<ElemId>> decomp;
    ElemId collision = 0;
    if (!build_module_decomp(carrier, components, decomp, &collision)) {
        rep.add("module.direct_sum_unique", {collision});
        return rep;
    }

    for (int g = 0; g < ng && rep.ok(); ++g)
        for (int h = 0; h < ng && rep.ok(); ++h) {
            const ElemSet target = components[ring.grading.group.mul(g, h)];
            set_for_each(ring.component(g), [&](ElemId x) {
                set_for_each(components[h], [&](ElemId m) {
                    if (rep.ok() && !set_contains(target, act(x, m)))
                        rep.add("module.component_action", {g, h, x, m, act(x, m)});
                });
            });
        }
    return rep;
}

GradedModule make_graded_module(GradedRing ring, ModuleCarrier carrier,
                                std::vector<ElemId> action, std::vector<ElemSet> components) {
    ValidationReport rep = validate_graded_module(ring, carrier, action, components);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    GradedModule M;
    M.ring = std::move(ring);
    M.carrier = std::move(carrier);
    M.action = std::move(action);
    M.components = std::move(components);
    ElemId collision;
    build_module_decomp(M.carrier, M.components, M.decomp, &collision);
    M.degree.assign(M.carrier.order, -1);
    for (int g = 0; g < M.ring.group_order(); ++g) {
        M.homogeneous |= M.components[g];
        set_for_each(M.components[g], [&](ElemId m) {
            if (m != M.carrier.zero) M.degree[m] = g;
        });
    }
    return M;
}

GradedModule ring_as_module(const GradedRing& R) {
    ModuleCarrier c;
    c.order = R.order();
    c.add = R.ring.add;
    c.zero = R.ring.zero;
    c.neg = R.ring.neg;
    return make_graded_module(R, std::move(c), R.ring.mul, R.grading.components);
}

const std::vector<ElemId>& decompose(const GradedModule& M, ElemId m) { return M.decomp[m]; }

CheckResult is_submodule(const GradedModule& M, ElemSet N) {
    if (!set_contains(N, M.carrier.zero)) return {false, "submodule.zero_missing", {}};
    CheckResult res{true, "", {}};
    set_for_each(N, [&](ElemId a) {
        if (!res.ok) return;
        set_for_each(N, [&](ElemId b) {
            if (res.ok && !set_contains(N, M.madd(a, b)))
                res = {false, "submodule.not_additively_closed", {a, b}};
        });
        if (!res.ok) return;
        for (ElemId r = 0; r < M.ring.order(); ++r)
            if (!set_contains(N, M.act(r, a))) {
                res = {false, "submodule.not_action_closed", {r, a}};
                return;
            }
    });
    return res;
}

CheckResult is_graded_submodule(const GradedModule& M, ElemSet N) {
    CheckResult res = is_submodule(M, N);
    if (!res.ok) return res;
    set_for_each(N, [&](ElemId x) {
        if (!res.ok) return;
        const auto& parts = decompose(M, x);
        for (int g = 0; g < M.ring.group_order(); ++g)
            if (!set_contains(N, parts[g])) {
                res = {false, "submodule.component_escapes", {x, g, parts[g]}};
                return;
            }
    });
    return res;
}

ElemSet submodule_closure(const GradedModule& M, ElemSet seed) {
    ElemSet cur = seed | set_single(M.carrier.zero);
    for (;;) {
        ElemSet next = cur;
        set_for_each(cur, [&](ElemId a) {
            set_for_each(cur, [&](ElemId b) { next |= set_single(M.madd(a, b)); });
            for (ElemId r = 0; r < M.ring.order(); ++r) next |= set_single(M.act(r, a));
        });
        if (next == cur) return cur;
        cur = next;
    }
}

namespace {

void assert_graded_result(const GradedRing& R, ElemSet I, const char* what) {
    if (!is_graded_ideal(R, I).ok)
        throw TheoremFailure(std::string(what) + " produced a non-graded ideal", "{}");
}

}  // namespace

ElemSet colon_ideal(const GradedModule& M, ElemSet N) {
    ElemSet out = 0;
    for (ElemId r = 0; r < M.ring.order(); ++r) {
        bool in = true;
        for (ElemId m = 0; m < M.order() && in; ++m) in = set_contains(N, M.act(r, m));
        if (in) out |= set_single(r);
    }
    if (is_graded_submodule(M, N).ok) assert_graded_result(M.ring, out, "colon_ideal");
    return out;
}

ElemSet annihilator(const GradedModule& M, ElemSet N) {
    ElemSet out = 0;
    for (ElemId r = 0; r < M.ring.order(); ++r) {
        bool in = true;
        set_for_each(N, [&](ElemId n) {
            if (in && M.act(r, n) != M.carrier.zero) in = false;
        });
        if (in) out |= set_single(r);
    }
    if (is_graded_submodule(M, N).ok) assert_graded_result(M.ring, out, "annihilator");
    return out;
}

ElemSet colon_submodule(const GradedModule& M, ElemSet N, ElemId r) {
    ElemSet out = 0;
    for (ElemId m = 0; m < M.order(); ++m)
        if (set_contains(N, M.act(r, m))) out |= set_single(m);
    if (M.ring.is_homogeneous(r) && is_graded_submodule(M, N).ok &&
        !is_graded_submodule(M, out).ok)
        throw TheoremFailure("colon_submodule produced a non-graded submodule", "{}");
    return out;
}

ElemSet hz_set(const GradedModule& M) {
    ElemSet out = 0;
    set_for_each(M.ring.homogeneous, [&](ElemId r) {
        bool kills = false;
        set_for_each(M.homogeneous, [&](ElemId m) {
            if (m != M.carrier.zero && M.act(r, m) == M.carrier.zero) kills = true;
        });
        if (kills) out |= set_single(r);
    });
    return out;
}

ElemSet ideal_mult_submodule(const GradedModule& M, ElemSet I, ElemSet N) {
    ElemSet prods = 0;
    set_for_each(I, [&](ElemId r) {
        set_for_each(N, [&](ElemId n) { prods |= set_single(M.act(r, n)); });
    });
    // products are already action-absorbing; close under addition
    ElemSet cur = prods | set_single(M.carrier.zero);
    for (;;) {
        ElemSet next = cur;
        set_for_each(cur, [&](ElemId a) {
            set_for_each(cur, [&](ElemId b) { next |= set_single(M.madd(a, b)); });
        });
        if (next == cur) return cur;
        cur = next;
    }
}

MultiplicationCheck is_multiplication_module(const GradedModule& M) {
    for (ElemSet N : enumerate_graded_submodules(M)) {
        ElemSet rebuilt = ideal_mult_submodule(M, colon_ideal(M, N), M.full());
        if (rebuilt != N) return {false, N};
    }
    return {true, 0};
}

SimpleCheck is_graded_simple(const GradedModule& M) {
    if (M.order() == 1) return {true, true};
    return {enumerate_graded_submodules(M).size() == 2, false};
}

ElemSet submodule_product(const GradedModule& M, ElemSet N, ElemSet K) {
    MultiplicationCheck mc = is_multiplication_module(M);
    if (!mc.ok)
        throw std::invalid_argument("submodule product needs a multiplication module");
    ElemSet cn = colon_ideal(M, N), ck = colon_ideal(M, K);
    ElemSet prod_ideal = 0;
    set_for_each(cn, [&](ElemId a) {
        set_for_each(ck, [&](ElemId b) { prod_ideal |= set_single(M.ring.ring.times(a, b)); });
    });
    prod_ideal = ideal_closure(M.ring, prod_ideal);
    return ideal_mult_submodule(M, prod_ideal, M.full());
}

std::vector<ElemSet> enumerate_graded_submodules(const GradedModule& M) {
    // Every graded submodule is the closure of a set of homogeneous elements,
    // so breadth-first extension by single homogeneous generators finds all.
    std::set<ElemSet> seen;
    std::vector<ElemSet> frontier{submodule_closure(M, 0)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<ElemSet> next;
        for (ElemSet cur : frontier) {
            set_for_each(M.homogeneous & ~cur, [&](ElemId h) {
                ElemSet grown = submodule_closure(M, cur | set_single(h));
                if (seen.insert(grown).second) next.push_back(grown);
            });
        }
        frontier = std::move(next);
    }
    std::vector<ElemSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), set_less);
    return out;
}

}  // namespace graded
