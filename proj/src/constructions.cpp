#include "graded/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace graded {

namespace {

GradedRing expect_ring(FiniteRing r, Grading g, const char* what) {
    try {
        return make_graded_ring(std::move(r), std::move(g));
    } catch (const ValidationError& e) {
        throw TheoremFailure(std::string(what) + " produced an invalid graded ring: " +
                                 e.what(),
                             "{}");
    }
}

GradedModule expect_module(GradedRing R, ModuleCarrier c, std::vector<ElemId> action,
                           std::vector<ElemSet> comps, const char* what) {
    try {
        return make_graded_module(std::move(R), std::move(c), std::move(action),
                                  std::move(comps));
    } catch (const ValidationError& e) {
        throw TheoremFailure(std::string(what) + " produced an invalid graded module: " +
                                 e.what(),
                             "{}");
    }
}

void require_graded_ideal(const GradedRing& R, ElemSet I, const char* who) {
    CheckResult c = is_graded_ideal(R, I);
    if (!c.ok)
        throw std::invalid_argument(std::string(who) + ": not a graded ideal (" + c.reason +
                                    ")");
}

void require_graded_sub(const GradedModule& M, ElemSet N, const char* who) {
    CheckResult c = is_graded_submodule(M, N);
    if (!c.ok)
        throw std::invalid_argument(std::string(who) + ": not a graded submodule (" +
                                    c.reason + ")");
}

bool subset(ElemSet a, ElemSet b) { return (a & ~b) == 0; }

}  // namespace

// ---------------------------------------------------------------------------
// quotients

QuotientRing quotient_graded(const GradedRing& R, ElemSet I) {
    require_graded_ideal(R, I, "quotient_graded");
    const FiniteRing& r = R.ring;
    std::vector<ElemId> rep(r.order);
    for (ElemId x = 0; x < r.order; ++x) {
        ElemId best = x;
        set_for_each(I, [&](ElemId i) { best = std::min(best, r.plus(x, i)); });
        rep[x] = best;
    }
    std::vector<ElemId> reps;
    for (ElemId x = 0; x < r.order; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<ElemId> newid(r.order, -1);
    for (std::size_t i = 0; i < reps.size(); ++i) newid[reps[i]] = static_cast<ElemId>(i);
    std::vector<ElemId> proj(r.order);
    for (ElemId x = 0; x < r.order; ++x) proj[x] = newid[rep[x]];

    const int n = static_cast<int>(reps.size());
    FiniteRing q;
    q.order = n;
    q.zero = proj[r.zero];
    q.one = proj[r.one];
    q.add.resize(static_cast<std::size_t>(n) * n);
    q.mul.resize(static_cast<std::size_t>(n) * n);
    q.neg.resize(n);
    for (int a = 0; a < n; ++a) {
        q.neg[a] = proj[r.minus(reps[a])];
        for (int b = 0; b < n; ++b) {
            q.add[static_cast<std::size_t>(a) * n + b] = proj[r.plus(reps[a], reps[b])];
            q.mul[static_cast<std::size_t>(a) * n + b] = proj[r.times(reps[a], reps[b])];
        }
    }
    Grading g;
    g.group = R.grading.group;
    g.components.assign(R.group_order(), 0);
    for (int gi = 0; gi < R.group_order(); ++gi)
        set_for_each(R.component(gi),
                     [&](ElemId x) { g.components[gi] |= set_single(proj[x]); });
    return {expect_ring(std::move(q), std::move(g), "quotient_graded"), std::move(proj)};
}

QuotientModule quotient_module(const GradedModule& M, ElemSet L) {
    require_graded_sub(M, L, "quotient_module");
    const ModuleCarrier& c = M.carrier;
    std::vector<ElemId> rep(c.order);
    for (ElemId x = 0; x < c.order; ++x) {
        ElemId best = x;
        set_for_each(L, [&](ElemId l) { best = std::min(best, c.plus(x, l)); });
        rep[x] = best;
    }
    std::vector<ElemId> reps;
    for (ElemId x = 0; x < c.order; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<ElemId> newid(c.order, -1);
    for (std::size_t i = 0; i < reps.size(); ++i) newid[reps[i]] = static_cast<ElemId>(i);
    std::vector<ElemId> proj(c.order);
    for (ElemId x = 0; x < c.order; ++x) proj[x] = newid[rep[x]];

    const int n = static_cast<int>(reps.size());
    ModuleCarrier qc;
    qc.order = n;
    qc.zero = proj[c.zero];
    qc.add.resize(static_cast<std::size_t>(n) * n);
    qc.neg.resize(n);
    for (int a = 0; a < n; ++a) {
        qc.neg[a] = proj[c.minus(reps[a])];
        for (int b = 0; b < n; ++b)
            qc.add[static_cast<std::size_t>(a) * n + b] = proj[c.plus(reps[a], reps[b])];
    }
    std::vector<ElemId> action(static_cast<std::size_t>(M.ring.order()) * n);
    for (ElemId r = 0; r < M.ring.order(); ++r)
        for (int a = 0; a < n; ++a)
            action[static_cast<std::size_t>(r) * n + a] = proj[M.act(r, reps[a])];
    std::vector<ElemSet> comps(M.ring.group_order(), 0);
    for (int gi = 0; gi < M.ring.group_order(); ++gi)
        set_for_each(M.components[gi], [&](ElemId x) { comps[gi] |= set_single(proj[x]); });
    return {expect_module(M.ring, std::move(qc), std::move(action), std::move(comps),
                          "quotient_module"),
            std::move(proj)};
}

bool quotient_sprime_transfer(const GradedModule& M, ElemSet N, ElemSet L, ElemId s,
                              Exec exec) {
    require_graded_sub(M, N, "quotient_sprime_transfer");
    require_graded_sub(M, L, "quotient_sprime_transfer");
    if (!subset(L, N))
        throw std::invalid_argument("quotient_sprime_transfer: L must be contained in N");
    bool direct = is_graded_s_prime(M, N, s, exec).verdict;
    QuotientModule Q = quotient_module(M, L);
    ElemSet NL = 0;
    set_for_each(N, [&](ElemId x) { NL |= set_single(Q.proj[x]); });
    bool quotiented = is_graded_s_prime(Q.module, NL, s, exec).verdict;
    if (direct != quotiented)
        throw TheoremFailure("quotient transfer verdicts disagree", "{}");
    return direct;
}

// ---------------------------------------------------------------------------
// restriction and homomorphisms

SubmoduleView submodule_as_module(const GradedModule& M, ElemSet L) {
    require_graded_sub(M, L, "submodule_as_module");
    std::vector<ElemId> embed = set_elements(L);
    std::vector<ElemId> index_of(M.order(), -1);
    for (std::size_t i = 0; i < embed.size(); ++i)
        index_of[embed[i]] = static_cast<ElemId>(i);
    const int n = static_cast<int>(embed.size());
    ModuleCarrier c;
    c.order = n;
    c.zero = index_of[M.carrier.zero];
    c.add.resize(static_cast<std::size_t>(n) * n);
    c.neg.resize(n);
    for (int a = 0; a < n; ++a) {
        c.neg[a] = index_of[M.carrier.minus(embed[a])];
        for (int b = 0; b < n; ++b)
            c.add[static_cast<std::size_t>(a) * n + b] =
                index_of[M.madd(embed[a], embed[b])];
    }
    std::vector<ElemId> action(static_cast<std::size_t>(M.ring.order()) * n);
    for (ElemId r = 0; r < M.ring.order(); ++r)
        for (int a = 0; a < n; ++a)
            action[static_cast<std::size_t>(r) * n + a] = index_of[M.act(r, embed[a])];
    std::vector<ElemSet> comps(M.ring.group_order(), 0);
    for (int gi = 0; gi < M.ring.group_order(); ++gi)
        set_for_each(M.components[gi] & L,
                     [&](ElemId x) { comps[gi] |= set_single(index_of[x]); });
    return {expect_module(M.ring, std::move(c), std::move(action), std::move(comps),
                          "submodule_as_module"),
            std::move(embed), std::move(index_of)};
}

SPrimeReport restrict_sprime(const GradedModule& M, ElemSet K, ElemSet L, ElemId s,
                             Exec exec) {
    require_graded_sub(M, K, "restrict_sprime");
    require_graded_sub(M, L, "restrict_sprime");
    // (K :_R L)
    ElemSet colonKL = 0;
    for (ElemId r = 0; r < M.ring.order(); ++r) {
        bool in = true;
        set_for_each(L, [&](ElemId l) {
            if (in && !set_contains(K, M.act(r, l))) in = false;
        });
        if (in) colonKL |= set_single(r);
    }
    if (set_contains(colonKL, s))
        throw std::invalid_argument("restrict_sprime: hypothesis failed, s lies in (K : L)");
    if (!is_graded_s_prime(M, K, s, exec).verdict)
        throw std::invalid_argument("restrict_sprime: hypothesis failed, K is not s-prime");
    SubmoduleView V = submodule_as_module(M, L);
    ElemSet KL = 0;
    set_for_each(K & L, [&](ElemId x) { KL |= set_single(V.index_of[x]); });
    SPrimeReport rep = is_graded_s_prime(V.module, KL, s, exec);
    if (!rep.verdict)
        throw TheoremFailure("restriction of an s-prime submodule failed to be s-prime",
                             "{}");
    return rep;
}

GradedHom make_graded_hom(GradedModule source, GradedModule target,
                          std::vector<ElemId> map) {
    if (!(source.ring == target.ring))
        throw std::invalid_argument("graded hom needs both modules over the same ring");
    if (map.size() != static_cast<std::size_t>(source.order()))
        throw std::invalid_argument("hom map must be total on the source carrier");
    for (ElemId y : map)
        if (y < 0 || y >= target.order())
            throw std::invalid_argument("hom map entry out of range");
    ValidationReport rep;
    for (ElemId a = 0; a < source.order(); ++a)
        for (ElemId b = 0; b < source.order(); ++b)
            if (map[source.madd(a, b)] != target.madd(map[a], map[b])) {
                rep.add("hom.additive", {a, b});
                break;
            }
    for (ElemId r = 0; r < source.ring.order() && rep.ok(); ++r)
        for (ElemId a = 0; a < source.order(); ++a)
            if (map[source.act(r, a)] != target.act(r, map[a])) {
                rep.add("hom.linear", {r, a});
                break;
            }
    for (int g = 0; g < source.ring.group_order() && rep.ok(); ++g)
        set_for_each(source.components[g], [&](ElemId m) {
            if (rep.ok() && !set_contains(target.components[g], map[m]))
                rep.add("hom.degree_preserving", {g, m, map[m]});
        });
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return {std::move(source), std::move(target), std::move(map)};
}

HomTransferResult hom_transfer(const GradedHom& f, ElemSet X, ElemId s, HomDirection dir,
                               Exec exec) {
    if (dir == HomDirection::preimage) {
        require_graded_sub(f.target, X, "hom_transfer");
        if (!is_graded_s_prime(f.target, X, s, exec).verdict)
            throw std::invalid_argument("hom_transfer: hypothesis failed, K is not s-prime");
        ElemSet pre = 0;
        for (ElemId m = 0; m < f.source.order(); ++m)
            if (set_contains(X, f.map[m])) pre |= set_single(m);
        if (set_contains(colon_ideal(f.source, pre), s))
            throw std::invalid_argument(
                "hom_transfer: hypothesis failed, s lies in (f^{-1}(K) :_R M)");
        SPrimeReport rep = is_graded_s_prime(f.source, pre, s, exec);
        if (!rep.verdict)
            throw TheoremFailure("preimage of an s-prime submodule failed to be s-prime",
                                 "{}");
        return {pre, rep};
    }
    // image direction
    require_graded_sub(f.source, X, "hom_transfer");
    ElemSet image_all = 0;
    for (ElemId m = 0; m < f.source.order(); ++m) image_all |= set_single(f.map[m]);
    if (image_all != f.target.full())
        throw std::invalid_argument("hom_transfer: hypothesis failed, f is not surjective");
    ElemSet ker = 0;
    for (ElemId m = 0; m < f.source.order(); ++m)
        if (f.map[m] == f.target.carrier.zero) ker |= set_single(m);
    if (!subset(ker, X))
        throw std::invalid_argument("hom_transfer: hypothesis failed, Ker(f) not inside N");
    if (!is_graded_s_prime(f.source, X, s, exec).verdict)
        throw std::invalid_argument("hom_transfer: hypothesis failed, N is not s-prime");
    ElemSet img = 0;
    set_for_each(X, [&](ElemId m) { img |= set_single(f.map[m]); });
    SPrimeReport rep = is_graded_s_prime(f.target, img, s, exec);
    if (!rep.verdict)
        throw TheoremFailure("image of an s-prime submodule failed to be s-prime", "{}");
    return {img, rep};
}

// ---------------------------------------------------------------------------
// products

namespace {

ElemId mix_ids(const std::vector<ElemId>& xs, const std::vector<int>& orders) {
    ElemId out = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) out = out * orders[i] + xs[i];
    return out;
}

std::vector<ElemId> split_id(ElemId x, const std::vector<int>& orders) {
    std::vector<ElemId> out(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
        out[i] = x % orders[i];
        x /= orders[i];
    }
    return out;
}

}  // namespace

ElemId ProductStructure::mix_ring(const std::vector<ElemId>& xs) const {
    return mix_ids(xs, ring_orders);
}
ElemId ProductStructure::mix_module(const std::vector<ElemId>& xs) const {
    return mix_ids(xs, module_orders);
}
std::vector<ElemId> ProductStructure::split_ring(ElemId x) const {
    return split_id(x, ring_orders);
}
std::vector<ElemId> ProductStructure::split_module(ElemId x) const {
    return split_id(x, module_orders);
}

GradedRing product_rings(const std::vector<GradedRing>& factors) {
    if (factors.size() < 2)
        throw std::invalid_argument("product needs at least two factors");
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (!(factors[i].grading.group == factors[0].grading.group))
            throw std::invalid_argument("product factors must share the grading group");
    std::vector<int> orders;
    long long total = 1;
    for (const auto& f : factors) {
        orders.push_back(f.order());
        total *= f.order();
        if (total > kMaxOrder)
            throw std::invalid_argument("product ring exceeds size bound");
    }
    const int n = static_cast<int>(total);
    FiniteRing r;
    r.order = n;
    r.add.resize(static_cast<std::size_t>(n) * n);
    r.mul.resize(static_cast<std::size_t>(n) * n);
    r.neg.resize(n);
    for (ElemId x = 0; x < n; ++x) {
        auto xs = split_id(x, orders);
        std::vector<ElemId> negs(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) negs[i] = factors[i].ring.minus(xs[i]);
        r.neg[x] = mix_ids(negs, orders);
        for (ElemId y = 0; y < n; ++y) {
            auto ys = split_id(y, orders);
            std::vector<ElemId> add(xs.size()), mul(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) {
                add[i] = factors[i].ring.plus(xs[i], ys[i]);
                mul[i] = factors[i].ring.times(xs[i], ys[i]);
            }
            r.add[static_cast<std::size_t>(x) * n + y] = mix_ids(add, orders);
            r.mul[static_cast<std::size_t>(x) * n + y] = mix_ids(mul, orders);
        }
    }
    std::vector<ElemId> zeros(factors.size()), ones(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        zeros[i] = factors[i].ring.zero;
        ones[i] = factors[i].ring.one;
    }
    r.zero = mix_ids(zeros, orders);
    r.one = mix_ids(ones, orders);

    Grading g;
    g.group = factors[0].grading.group;
    g.components.assign(g.group.order, 0);
    for (int gi = 0; gi < g.group.order; ++gi) {
        // product of the factor components
        std::vector<std::vector<ElemId>> members;
        for (const auto& f : factors) members.push_back(set_elements(f.component(gi)));
        std::vector<std::size_t> idx(factors.size(), 0);
        while (true) {
            std::vector<ElemId> xs(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i) xs[i] = members[i][idx[i]];
            g.components[gi] |= set_single(mix_ids(xs, orders));
            std::size_t pos = factors.size();
            while (pos-- > 0) {
                if (++idx[pos] < members[pos].size()) break;
                idx[pos] = 0;
                if (pos == 0) goto done;
            }
            if (idx == std::vector<std::size_t>(factors.size(), 0)) break;
        }
    done:;
    }
    return expect_ring(std::move(r), std::move(g), "product_rings");
}

ProductStructure product_modules(std::vector<GradedModule> factors) {
    if (factors.size() < 2)
        throw std::invalid_argument("product needs at least two factors");
    std::vector<GradedRing> rings;
    for (const auto& f : factors) rings.push_back(f.ring);
    GradedRing R = product_rings(rings);

    std::vector<int> rorders, morders;
    long long total = 1;
    for (const auto& f : factors) {
        rorders.push_back(f.ring.order());
        morders.push_back(f.order());
        total *= f.order();
        if (total > kMaxOrder)
            throw std::invalid_argument("product module exceeds size bound");
    }
    const int n = static_cast<int>(total);
    ModuleCarrier c;
    c.order = n;
    c.add.resize(static_cast<std::size_t>(n) * n);
    c.neg.resize(n);
    std::vector<ElemId> zeros(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) zeros[i] = factors[i].carrier.zero;
    c.zero = mix_ids(zeros, morders);
    for (ElemId x = 0; x < n; ++x) {
        auto xs = split_id(x, morders);
        std::vector<ElemId> negs(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) negs[i] = factors[i].carrier.minus(xs[i]);
        c.neg[x] = mix_ids(negs, morders);
        for (ElemId y = 0; y < n; ++y) {
            auto ys = split_id(y, morders);
            std::vector<ElemId> add(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
                add[i] = factors[i].carrier.plus(xs[i], ys[i]);
            c.add[static_cast<std::size_t>(x) * n + y] = mix_ids(add, morders);
        }
    }
    std::vector<ElemId> action(static_cast<std::size_t>(R.order()) * n);
    for (ElemId r = 0; r < R.order(); ++r) {
        auto rs = split_id(r, rorders);
        for (ElemId x = 0; x < n; ++x) {
            auto xs = split_id(x, morders);
            std::vector<ElemId> out(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) out[i] = factors[i].act(rs[i], xs[i]);
            action[static_cast<std::size_t>(r) * n + x] = mix_ids(out, morders);
        }
    }
    std::vector<ElemSet> comps(R.group_order(), 0);
    for (int gi = 0; gi < R.group_order(); ++gi) {
        std::vector<std::vector<ElemId>> members;
        for (const auto& f : factors) members.push_back(set_elements(f.components[gi]));
        std::vector<std::size_t> idx(factors.size(), 0);
        bool more = true;
        while (more) {
            std::vector<ElemId> xs(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i) xs[i] = members[i][idx[i]];
            comps[gi] |= set_single(mix_ids(xs, morders));
            std::size_t pos = factors.size();
            more = false;
            while (pos-- > 0) {
                if (++idx[pos] < members[pos].size()) {
                    more = true;
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    ProductStructure P;
    P.module = expect_module(std::move(R), std::move(c), std::move(action), std::move(comps),
                             "product_modules");
    P.factors = std::move(factors);
    P.ring_orders = std::move(rorders);
    P.module_orders = std::move(morders);
    return P;
}

std::optional<std::vector<ElemSet>> product_form(const ProductStructure& P, ElemSet L) {
    std::vector<ElemSet> projs(P.factors.size(), 0);
    set_for_each(L, [&](ElemId x) {
        auto xs = P.split_module(x);
        for (std::size_t i = 0; i < xs.size(); ++i) projs[i] |= set_single(xs[i]);
    });
    // rebuild the product of the projections and compare
    ElemSet rebuilt = 0;
    std::vector<std::vector<ElemId>> members;
    for (ElemSet p : projs) members.push_back(set_elements(p));
    std::vector<std::size_t> idx(projs.size(), 0);
    bool more = true;
    while (more) {
        std::vector<ElemId> xs(projs.size());
        for (std::size_t i = 0; i < projs.size(); ++i) xs[i] = members[i][idx[i]];
        rebuilt |= set_single(P.mix_module(xs));
        std::size_t pos = projs.size();
        more = false;
        while (pos-- > 0) {
            if (++idx[pos] < members[pos].size()) {
                more = true;
                break;
            }
            idx[pos] = 0;
        }
    }
    if (rebuilt != L) return std::nullopt;
    return projs;
}

bool product_sprime_decision(const ProductStructure& P, ElemSet L, ElemId s, Exec exec) {
    require_graded_sub(P.module, L, "product_sprime_decision");
    auto form = product_form(P, L);
    if (!form)
        throw std::invalid_argument("product_sprime_decision: L is not of product form");
    const auto ss = P.split_ring(s);

    bool criterion = false;
    for (std::size_t i = 0; i < P.factors.size() && !criterion; ++i) {
        const GradedModule& Mi = P.factors[i];
        if (ss[i] == Mi.ring.ring.zero || !Mi.ring.is_homogeneous(ss[i])) continue;
        if (!is_graded_s_prime(Mi, (*form)[i], ss[i], exec).verdict) continue;
        bool others = true;
        for (std::size_t j = 0; j < P.factors.size() && others; ++j) {
            if (j == i) continue;
            others = set_contains(colon_ideal(P.factors[j], (*form)[j]), ss[j]);
        }
        criterion = others;
    }
    bool direct = is_graded_s_prime(P.module, L, s, exec).verdict;
    if (criterion != direct)
        throw TheoremFailure("componentwise criterion disagrees with direct predicate", "{}");
    return direct;
}

// ---------------------------------------------------------------------------
// idealization

IdealizedRing idealization(const GradedRing& R, const GradedModule& M) {
    if (!(M.ring == R))
        throw std::invalid_argument("idealization: module must live over the given ring");
    if (!R.grading.group.is_abelian())
        throw std::invalid_argument("idealization needs an abelian grading group");
    long long total = static_cast<long long>(R.order()) * M.order();
    if (total > kMaxOrder) throw std::invalid_argument("idealization exceeds size bound");
    const int n = static_cast<int>(total);
    const int mo = M.order();
    auto mix = [&](ElemId r, ElemId m) { return r * mo + m; };

    FiniteRing x;
    x.order = n;
    x.zero = mix(R.ring.zero, M.carrier.zero);
    x.one = mix(R.ring.one, M.carrier.zero);
    x.add.resize(static_cast<std::size_t>(n) * n);
    x.mul.resize(static_cast<std::size_t>(n) * n);
    x.neg.resize(n);
    for (ElemId r1 = 0; r1 < R.order(); ++r1)
        for (ElemId m1 = 0; m1 < mo; ++m1) {
            ElemId a = mix(r1, m1);
            x.neg[a] = mix(R.ring.minus(r1), M.carrier.minus(m1));
            for (ElemId r2 = 0; r2 < R.order(); ++r2)
                for (ElemId m2 = 0; m2 < mo; ++m2) {
                    ElemId b = mix(r2, m2);
                    x.add[static_cast<std::size_t>(a) * n + b] =
                        mix(R.ring.plus(r1, r2), M.madd(m1, m2));
                    // (r1, m1)(r2, m2) = (r1 r2, r1 m2 + r2 m1)
                    x.mul[static_cast<std::size_t>(a) * n + b] =
                        mix(R.ring.times(r1, r2), M.madd(M.act(r1, m2), M.act(r2, m1)));
                }
        }
    Grading g;
    g.group = R.grading.group;
    g.components.assign(R.group_order(), 0);
    for (int gi = 0; gi < R.group_order(); ++gi)
        set_for_each(R.component(gi), [&](ElemId r) {
            set_for_each(M.components[gi],
                         [&](ElemId m) { g.components[gi] |= set_single(mix(r, m)); });
        });
    IdealizedRing out;
    out.ring = expect_ring(std::move(x), std::move(g), "idealization");
    out.base_order = R.order();
    out.module_order = mo;
    return out;
}

bool idealization_sprime_equiv(const GradedRing& R, const GradedModule& M, ElemSet P,
                               ElemId s, ElemId m, Exec exec) {
    require_graded_ideal(R, P, "idealization_sprime_equiv");
    if (set_contains(P, s))
        throw std::invalid_argument("idealization_sprime_equiv: hypothesis failed, s in P");
    if (s == R.ring.zero || !R.is_homogeneous(s))
        throw std::invalid_argument("idealization_sprime_equiv: s must be in h*(R)");
    const int degree = R.degree[s];
    if (!set_contains(M.components[degree], m))
        throw std::invalid_argument(
            "idealization_sprime_equiv: m must be homogeneous of the degree of s");

    IdealizedRing X = idealization(R, M);
    GradedModule RM = ring_as_module(R);
    GradedModule XM = ring_as_module(X.ring);
    ElemSet PM = 0;
    set_for_each(P, [&](ElemId p) {
        for (ElemId mm = 0; mm < M.order(); ++mm) PM |= set_single(X.mix(p, mm));
    });
    bool base = is_graded_s_prime(RM, P, s, exec).verdict;
    bool with_m = is_graded_s_prime(XM, PM, X.mix(s, m), exec).verdict;
    bool with_zero = is_graded_s_prime(XM, PM, X.mix(s, M.carrier.zero), exec).verdict;
    if (base != with_m || base != with_zero)
        throw TheoremFailure("idealization equivalence broke", "{}");
    return base;
}

// ---------------------------------------------------------------------------
// localization

namespace {

struct PairQuotient {
    std::vector<ElemId> s_list;
    std::vector<ElemId> pair_class;  // pid -> class id (ordered by smallest pid)
    std::vector<ElemId> class_rep;   // class id -> representative pid
};

// Partition of (carrier x S) under (a,s) ~ (a',s') iff u(a s' - a' s) = 0 for
// some u in S. `scale` multiplies a ring element into the carrier.
template <typename Scale, typename Sub>
PairQuotient pair_quotient(int carrier_order, const std::vector<ElemId>& s_list,
                           ElemId carrier_zero, Scale&& scale, Sub&& sub) {
    const int ns = static_cast<int>(s_list.size());
    const long p = static_cast<long>(carrier_order) * ns;
    if (p > 1024) throw std::invalid_argument("localization carrier too large");
    auto related = [&](long p1, long p2) {
        ElemId a = static_cast<ElemId>(p1 / ns), s = s_list[p1 % ns];
        ElemId b = static_cast<ElemId>(p2 / ns), t = s_list[p2 % ns];
        ElemId diff = sub(scale(t, a), scale(s, b));  // a t - b s
        for (ElemId u : s_list)
            if (scale(u, diff) == carrier_zero) return true;
        return false;
    };
    // union-find over directly related pairs
    std::vector<long> parent(p);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long(long)> find = [&](long x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (long i = 0; i < p; ++i)
        for (long j = i + 1; j < p; ++j)
            if (related(i, j)) {
                long ri = find(i), rj = find(j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }
    // classes keyed by smallest pid; sanity-check transitivity inside classes
    PairQuotient q;
    q.s_list = s_list;
    q.pair_class.assign(p, -1);
    for (long i = 0; i < p; ++i) {
        long root = find(i);
        if (q.pair_class[root] < 0) {
            q.pair_class[root] = static_cast<ElemId>(q.class_rep.size());
            q.class_rep.push_back(static_cast<ElemId>(root));
        }
        q.pair_class[i] = q.pair_class[root];
        if (i != root && !related(i, root))
            throw TheoremFailure("localization relation is not transitive", "{}");
    }
    return q;
}

}  // namespace

LocalizedRing localize(const GradedRing& R, ElemSet S) {
    CheckResult mcs = is_mcs(R, S);
    if (!mcs.ok)
        throw std::invalid_argument("localize: S is not a valid m.c.s. (" + mcs.reason + ")");
    const FiniteRing& r = R.ring;
    std::vector<ElemId> s_list = set_elements(S);
    const int ns = static_cast<int>(s_list.size());
    PairQuotient q = pair_quotient(
        r.order, s_list, r.zero, [&](ElemId u, ElemId a) { return r.times(u, a); },
        [&](ElemId a, ElemId b) { return r.plus(a, r.minus(b)); });

    const int n = static_cast<int>(q.class_rep.size());
    auto rep_of = [&](int cls) {
        ElemId pid = q.class_rep[cls];
        return std::pair<ElemId, ElemId>{pid / ns, s_list[pid % ns]};
    };
    auto class_of = [&](ElemId a, ElemId s) {
        int si = static_cast<int>(std::lower_bound(s_list.begin(), s_list.end(), s) -
                                  s_list.begin());
        return q.pair_class[static_cast<std::size_t>(a) * ns + si];
    };

    FiniteRing lr;
    lr.order = n;
    lr.add.resize(static_cast<std::size_t>(n) * n);
    lr.mul.resize(static_cast<std::size_t>(n) * n);
    lr.neg.resize(n);
    lr.zero = class_of(r.zero, r.one);
    lr.one = class_of(r.one, r.one);
    for (int a = 0; a < n; ++a) {
        auto [ra, sa] = rep_of(a);
        lr.neg[a] = class_of(r.minus(ra), sa);
        for (int b = 0; b < n; ++b) {
            auto [rb, sb] = rep_of(b);
            lr.add[static_cast<std::size_t>(a) * n + b] =
                class_of(r.plus(r.times(ra, sb), r.times(rb, sa)), r.times(sa, sb));
            lr.mul[static_cast<std::size_t>(a) * n + b] =
                class_of(r.times(ra, rb), r.times(sa, sb));
        }
    }
    // operations must not depend on the representative choice
    for (ElemId a = 0; a < r.order; ++a)
        for (int si = 0; si < ns; ++si) {
            int cls = q.pair_class[static_cast<std::size_t>(a) * ns + si];
            auto [rc, sc] = rep_of(cls);
            for (ElemId b = 0; b < r.order; ++b)
                for (int ti = 0; ti < ns; ++ti) {
                    int cls2 = q.pair_class[static_cast<std::size_t>(b) * ns + ti];
                    ElemId sum_direct = class_of(
                        r.plus(r.times(a, s_list[ti]), r.times(b, s_list[si])),
                        r.times(s_list[si], s_list[ti]));
                    if (sum_direct != lr.add[static_cast<std::size_t>(cls) * n + cls2])
                        throw TheoremFailure("localization addition is not well-defined",
                                             "{}");
                    ElemId mul_direct =
                        class_of(r.times(a, b), r.times(s_list[si], s_list[ti]));
                    if (mul_direct != lr.mul[static_cast<std::size_t>(cls) * n + cls2])
                        throw TheoremFailure(
                            "localization multiplication is not well-defined", "{}");
                }
            (void)rc;
            (void)sc;
        }

    // (S^-1 R)_g = { a/s : a in R_h, s in S ∩ R_{h g^-1} }
    Grading g;
    g.group = R.grading.group;
    g.components.assign(R.group_order(), set_single(lr.zero));
    for (int gi = 0; gi < R.group_order(); ++gi)
        for (int h = 0; h < R.group_order(); ++h) {
            const int want = R.grading.group.mul(h, R.grading.group.inv(gi));
            set_for_each(R.component(h), [&](ElemId a) {
                for (ElemId s : s_list) {
                    if (s != r.zero && R.degree[s] == want)
                        g.components[gi] |= set_single(class_of(a, s));
                }
            });
        }

    LocalizedRing out;
    out.ring = expect_ring(std::move(lr), std::move(g), "localize");
    out.mcs = S;
    out.s_list = s_list;
    out.pair_class = q.pair_class;
    out.canonical.resize(r.order);
    for (ElemId a = 0; a < r.order; ++a) out.canonical[a] = class_of(a, r.one);
    for (ElemId s : s_list)
        if (!set_contains(out.ring.unit_set, out.canonical[s]))
            throw TheoremFailure("member of S failed to become a unit", "{}");
    return out;
}

LocalizedModule localize_module(const GradedModule& M, const LocalizedRing& LR) {
    const GradedRing& R = M.ring;
    const FiniteRing& r = R.ring;
    const std::vector<ElemId>& s_list = LR.s_list;
    const int ns = static_cast<int>(s_list.size());
    PairQuotient q = pair_quotient(
        M.order(), s_list, M.carrier.zero,
        [&](ElemId u, ElemId m) { return M.act(u, m); },
        [&](ElemId a, ElemId b) { return M.madd(a, M.carrier.minus(b)); });

    const int n = static_cast<int>(q.class_rep.size());
    auto rep_of = [&](int cls) {
        ElemId pid = q.class_rep[cls];
        return std::pair<ElemId, ElemId>{pid / ns, s_list[pid % ns]};
    };
    auto class_of = [&](ElemId m, ElemId s) {
        int si = static_cast<int>(std::lower_bound(s_list.begin(), s_list.end(), s) -
                                  s_list.begin());
        return q.pair_class[static_cast<std::size_t>(m) * ns + si];
    };

    ModuleCarrier c;
    c.order = n;
    c.zero = class_of(M.carrier.zero, r.one);
    c.add.resize(static_cast<std::size_t>(n) * n);
    c.neg.resize(n);
    for (int a = 0; a < n; ++a) {
        auto [ma, sa] = rep_of(a);
        c.neg[a] = class_of(M.carrier.minus(ma), sa);
        for (int b = 0; b < n; ++b) {
            auto [mb, sb] = rep_of(b);
            c.add[static_cast<std::size_t>(a) * n + b] =
                class_of(M.madd(M.act(sb, ma), M.act(sa, mb)), r.times(sa, sb));
        }
    }
    // action of r/a on m/b is rm/ab
    std::vector<ElemId> action(static_cast<std::size_t>(LR.ring.order()) * n);
    const int nrs = static_cast<int>(LR.s_list.size());
    std::vector<std::pair<ElemId, ElemId>> ring_rep(LR.ring.order(), {-1, -1});
    for (ElemId a = 0; a < R.order(); ++a)
        for (int si = 0; si < nrs; ++si) {
            ElemId cls = LR.pair_class[static_cast<std::size_t>(a) * nrs + si];
            if (ring_rep[cls].first < 0) ring_rep[cls] = {a, LR.s_list[si]};
        }
    for (ElemId rc = 0; rc < LR.ring.order(); ++rc) {
        auto [ra, sa] = ring_rep[rc];
        for (int b = 0; b < n; ++b) {
            auto [mb, sb] = rep_of(b);
            action[static_cast<std::size_t>(rc) * n + b] =
                class_of(M.act(ra, mb), r.times(sa, sb));
        }
    }
    // well-definedness of the action across representatives
    for (ElemId a = 0; a < R.order(); ++a)
        for (int si = 0; si < nrs; ++si) {
            ElemId rc = LR.pair_class[static_cast<std::size_t>(a) * nrs + si];
            for (ElemId m = 0; m < M.order(); ++m)
                for (int ti = 0; ti < ns; ++ti) {
                    ElemId mc = q.pair_class[static_cast<std::size_t>(m) * ns + ti];
                    ElemId direct =
                        class_of(M.act(a, m), r.times(LR.s_list[si], s_list[ti]));
                    if (direct != action[static_cast<std::size_t>(rc) * n + mc])
                        throw TheoremFailure("localized action is not well-defined", "{}");
                }
        }

    std::vector<ElemSet> comps(R.group_order(), set_single(c.zero));
    for (int gi = 0; gi < R.group_order(); ++gi)
        for (int h = 0; h < R.group_order(); ++h) {
            const int want = R.grading.group.mul(h, R.grading.group.inv(gi));
            set_for_each(M.components[h], [&](ElemId m) {
                for (ElemId s : s_list)
                    if (s != r.zero && R.degree[s] == want)
                        comps[gi] |= set_single(class_of(m, s));
            });
        }

    LocalizedModule out;
    out.module = expect_module(LR.ring, std::move(c), std::move(action), std::move(comps),
                               "localize_module");
    out.pair_class = q.pair_class;
    out.canonical.resize(M.order());
    for (ElemId m = 0; m < M.order(); ++m) out.canonical[m] = class_of(m, r.one);
    return out;
}

ElemSet localize_submodule(const GradedModule& M, const LocalizedRing& LR,
                           const LocalizedModule& LM, ElemSet N) {
    (void)LR;
    ElemSet out = 0;
    set_for_each(N, [&](ElemId n) { out |= set_single(LM.canonical[n]); });
    // n/s = (1/s) * (n/1) stays in the span; the canonical images generate
    return submodule_closure(LM.module, out);
}

ElemSet saturation(const GradedRing& R, ElemSet S) {
    LocalizedRing LR = localize(R, S);
    ElemSet out = 0;
    set_for_each(R.homogeneous, [&](ElemId x) {
        if (set_contains(LR.ring.hom_units, LR.canonical[x])) out |= set_single(x);
    });
    if (!subset(S, out)) throw TheoremFailure("saturation does not contain S", "{}");
    return out;
}

LocalizationTransfer localization_prime_transfer(const GradedModule& M, ElemSet N,
                                                 ElemSet S, ElemId s, Exec exec) {
    require_graded_sub(M, N, "localization_prime_transfer");
    CheckResult mcs = is_mcs(M.ring, S);
    if (!mcs.ok)
        throw std::invalid_argument("localization_prime_transfer: invalid m.c.s. (" +
                                    mcs.reason + ")");
    if (!set_contains(S, s))
        throw std::invalid_argument("localization_prime_transfer: s must lie in S");
    ElemSet colon = colon_ideal(M, N);
    if (colon & S)
        throw std::invalid_argument(
            "localization_prime_transfer: hypothesis failed, (N:M) meets S");

    LocalizationTransfer out;
    out.sprime = is_graded_s_prime(M, N, s, exec).verdict;

    LocalizedRing LR = localize(M.ring, S);
    LocalizedModule LM = localize_module(M, LR);
    ElemSet SN = localize_submodule(M, LR, LM, N);
    if (SN == LM.module.full())
        throw TheoremFailure("localized submodule is improper though (N:M) misses S", "{}");
    out.localized_prime = is_graded_prime(LM.module, SN, exec).verdict;

    out.colon_condition = true;
    set_for_each(S, [&](ElemId t) {
        if (out.colon_condition &&
            !subset(colon_submodule(M, N, t), colon_submodule(M, N, s)))
            out.colon_condition = false;
    });

    if (out.sprime != (out.localized_prime && out.colon_condition))
        throw TheoremFailure("localization transfer biconditional broke", "{}");
    return out;
}

// ---------------------------------------------------------------------------
// group rings and crossed products

GradedRing group_ring(const FiniteRing& base, const FiniteGroup& G) {
    ValidationReport vb = validate_ring(base);
    if (!vb.ok()) throw ValidationError(std::move(vb));
    ValidationReport vg = validate_group(G);
    if (!vg.ok()) throw ValidationError(std::move(vg));
    long long total = 1;
    for (int i = 0; i < G.order; ++i) {
        total *= base.order;
        if (total > kMaxOrder)
            throw std::invalid_argument("group ring exceeds size bound");
    }
    const int n = static_cast<int>(total);

    // element id = sum of f(g_i) * |T|^i; coefficient extraction below
    auto coeff = [&](ElemId f, int gi) {
        for (int i = 0; i < gi; ++i) f /= base.order;
        return f % base.order;
    };
    auto build = [&](const std::vector<ElemId>& cs) {
        ElemId f = 0;
        for (int i = G.order; i-- > 0;) f = f * base.order + cs[i];
        return f;
    };

    FiniteRing r;
    r.order = n;
    r.add.resize(static_cast<std::size_t>(n) * n);
    r.mul.resize(static_cast<std::size_t>(n) * n);
    r.neg.resize(n);
    {
        std::vector<ElemId> cs(G.order, base.zero);
        r.zero = build(cs);
        cs[G.identity] = base.one;
        r.one = build(cs);
    }
    for (ElemId f = 0; f < n; ++f) {
        std::vector<ElemId> negc(G.order);
        for (int i = 0; i < G.order; ++i) negc[i] = base.minus(coeff(f, i));
        r.neg[f] = build(negc);
        for (ElemId h = 0; h < n; ++h) {
            std::vector<ElemId> sum(G.order), conv(G.order, base.zero);
            for (int i = 0; i < G.order; ++i) sum[i] = base.plus(coeff(f, i), coeff(h, i));
            for (int i = 0; i < G.order; ++i)
                for (int j = 0; j < G.order; ++j) {
                    int k = G.mul(i, j);
                    conv[k] = base.plus(conv[k], base.times(coeff(f, i), coeff(h, j)));
                }
            r.add[static_cast<std::size_t>(f) * n + h] = build(sum);
            r.mul[static_cast<std::size_t>(f) * n + h] = build(conv);
        }
    }
    Grading g;
    g.group = G;
    g.components.assign(G.order, 0);
    for (int gi = 0; gi < G.order; ++gi) {
        std::vector<ElemId> cs(G.order, base.zero);
        for (ElemId t = 0; t < base.order; ++t) {
            cs[gi] = t;
            g.components[gi] |= set_single(build(cs));
        }
    }
    GradedRing out = make_graded_ring(std::move(r), std::move(g));
    if (!is_crossed_product(out) || !is_strongly_graded(out))
        throw TheoremFailure("group ring is not a strongly graded crossed product", "{}");
    return out;
}

SubringView identity_component_ring(const GradedRing& R) {
    ElemSet comp = R.component(R.grading.group.identity);
    std::vector<ElemId> embed = set_elements(comp);
    std::vector<ElemId> index_of(R.order(), -1);
    for (std::size_t i = 0; i < embed.size(); ++i)
        index_of[embed[i]] = static_cast<ElemId>(i);
    const int n = static_cast<int>(embed.size());
    FiniteRing r;
    r.order = n;
    r.zero = index_of[R.ring.zero];
    r.one = index_of[R.ring.one];
    r.add.resize(static_cast<std::size_t>(n) * n);
    r.mul.resize(static_cast<std::size_t>(n) * n);
    r.neg.resize(n);
    for (int a = 0; a < n; ++a) {
        r.neg[a] = index_of[R.ring.minus(embed[a])];
        for (int b = 0; b < n; ++b) {
            r.add[static_cast<std::size_t>(a) * n + b] =
                index_of[R.ring.plus(embed[a], embed[b])];
            r.mul[static_cast<std::size_t>(a) * n + b] =
                index_of[R.ring.times(embed[a], embed[b])];
        }
    }
    ValidationReport rep = validate_ring(r);
    if (!rep.ok())
        throw TheoremFailure("identity component failed to be a subring", "{}");
    return {std::move(r), std::move(embed), std::move(index_of)};
}

CrossedProductVerdict crossed_product_equiv(const GradedRing& R, ElemSet I, Exec exec) {
    if (!is_crossed_product(R))
        throw std::invalid_argument("crossed_product_equiv needs a crossed product grading");
    require_graded_ideal(R, I, "crossed_product_equiv");
    if (I == set_full(R.order()))
        throw std::invalid_argument("crossed_product_equiv: ideal must be proper");

    CrossedProductVerdict v;
    GradedModule RM = ring_as_module(R);
    set_for_each(R.homogeneous_nonzero & ~I, [&](ElemId s) {
        if (!v.graded_side && is_graded_s_prime(RM, I, s, exec).verdict) {
            v.graded_side = true;
            v.s = s;
        }
    });

    SubringView E = identity_component_ring(R);
    GradedRing Egr =
        make_graded_ring(E.ring, trivial_grading(cyclic_group(1), E.ring.order, E.ring.zero));
    GradedModule EM = ring_as_module(Egr);
    ElemSet Ie = 0;
    set_for_each(I & R.component(R.grading.group.identity),
                 [&](ElemId x) { Ie |= set_single(E.index_of[x]); });
    for (ElemId t = 0; t < E.ring.order && !v.base_side; ++t) {
        if (t == E.ring.zero || set_contains(Ie, t)) continue;
        if (is_graded_s_prime(EM, Ie, t, exec).verdict) {
            v.base_side = true;
            v.t = E.embed[t];
        }
    }
    if (v.graded_side != v.base_side)
        throw TheoremFailure("crossed product equivalence broke", "{}");
    return v;
}

}  // namespace graded
