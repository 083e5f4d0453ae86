#include "graded/finring.hpp"

#include <sstream>
#include <stdexcept>

#include "graded/fingroup.hpp"

namespace graded {

bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.order == b.order && a.zero == b.zero && a.one == b.one && a.add == b.add &&
           a.mul == b.mul;
}

static void check_shape(const FiniteRing& r) {
    if (r.order < 1 || r.order > kMaxOrder)
        throw std::invalid_argument("ring order must be in 1.." + std::to_string(kMaxOrder));
    const auto n = static_cast<std::size_t>(r.order);
    if (r.add.size() != n * n || r.mul.size() != n * n || r.neg.size() != n)
        throw std::invalid_argument("ring table sizes do not match declared order");
    auto in_range = [&](ElemId x) { return x >= 0 && x < r.order; };
    for (ElemId x : r.add)
        if (!in_range(x)) throw std::invalid_argument("add entry out of range");
    for (ElemId x : r.mul)
        if (!in_range(x)) throw std::invalid_argument("mul entry out of range");
    for (ElemId x : r.neg)
        if (!in_range(x)) throw std::invalid_argument("neg entry out of range");
    if (!in_range(r.zero) || !in_range(r.one))
        throw std::invalid_argument("zero/one out of range");
}

ValidationReport validate_ring(const FiniteRing& r) {
    check_shape(r);
    ValidationReport rep;

    FiniteGroup additive;
    additive.order = r.order;
    additive.op = r.add;
    additive.identity = r.zero;
    additive.inverse = r.neg;
    ValidationReport grp = validate_group(additive);
    for (auto& v : grp.violations) rep.add("ring.add_" + v.axiom.substr(6), v.witness);
    for (ElemId a = 0; a < r.order; ++a) {
        bool done = false;
        for (ElemId b = a + 1; b < r.order && !done; ++b)
            if (r.plus(a, b) != r.plus(b, a)) {
                rep.add("ring.add_commutative", {a, b});
                done = true;
            }
        if (done) break;
    }

    for (ElemId a = 0; a < r.order && rep.ok(); ++a)
        for (ElemId b = 0; b < r.order && rep.ok(); ++b)
            for (ElemId c = 0; c < r.order; ++c)
                if (r.times(r.times(a, b), c) != r.times(a, r.times(b, c))) {
                    rep.add("ring.mul_associative", {a, b, c});
                    break;
                }
    for (ElemId a = 0; a < r.order; ++a) {
        bool done = false;
        for (ElemId b = a + 1; b < r.order && !done; ++b)
            if (r.times(a, b) != r.times(b, a)) {
                rep.add("ring.mul_commutative", {a, b});
                done = true;
            }
        if (done) break;
    }
    for (ElemId a = 0; a < r.order && rep.ok(); ++a)
        for (ElemId b = 0; b < r.order && rep.ok(); ++b)
            for (ElemId c = 0; c < r.order; ++c)
                if (r.times(a, r.plus(b, c)) != r.plus(r.times(a, b), r.times(a, c))) {
                    rep.add("ring.distributive", {a, b, c});
                    break;
                }
    if (r.one == r.zero) rep.add("ring.unity_nonzero", {r.one});
    for (ElemId a = 0; a < r.order; ++a)
        if (r.times(r.one, a) != a) {
            rep.add("ring.unity", {a});
            break;
        }
    return rep;
}

ElemSet units(const FiniteRing& r) {
    ElemSet u = 0;
    for (ElemId a = 0; a < r.order; ++a)
        for (ElemId b = 0; b < r.order; ++b)
            if (r.times(a, b) == r.one) {
                u |= set_single(a);
                break;
            }
    return u;
}

bool is_unit(const FiniteRing& r, ElemId x) { return set_contains(units(r), x); }

FiniteRing zn_ring(int n) {
    if (n < 2 || n > kMaxOrder)
        throw std::invalid_argument("zn ring needs modulus in 2.." + std::to_string(kMaxOrder));
    FiniteRing r;
    r.order = n;
    r.zero = 0;
    r.one = 1;
    r.add.resize(static_cast<std::size_t>(n) * n);
    r.mul.resize(static_cast<std::size_t>(n) * n);
    r.neg.resize(n);
    for (ElemId a = 0; a < n; ++a) {
        r.neg[a] = (n - a) % n;
        for (ElemId b = 0; b < n; ++b) {
            r.add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
            r.mul[static_cast<std::size_t>(a) * n + b] = (a * b) % n;
        }
    }
    return r;
}

FiniteRing quad_ring(int n, int c) {
    if (n < 2) throw std::invalid_argument("quad ring needs base modulus >= 2");
    long long ord = static_cast<long long>(n) * n;
    if (ord > kMaxOrder) throw std::invalid_argument("quad ring exceeds size bound");
    const int N = static_cast<int>(ord);
    c = ((c % n) + n) % n;
    FiniteRing r;
    r.order = N;
    r.zero = 0;
    r.one = 1;  // 1 + 0*u
    r.add.resize(static_cast<std::size_t>(N) * N);
    r.mul.resize(static_cast<std::size_t>(N) * N);
    r.neg.resize(N);
    auto id = [&](int a, int b) { return ((a % n + n) % n) + n * ((b % n + n) % n); };
    for (int a1 = 0; a1 < n; ++a1)
        for (int b1 = 0; b1 < n; ++b1) {
            ElemId x = id(a1, b1);
            r.neg[x] = id(-a1, -b1);
            for (int a2 = 0; a2 < n; ++a2)
                for (int b2 = 0; b2 < n; ++b2) {
                    ElemId y = id(a2, b2);
                    r.add[static_cast<std::size_t>(x) * N + y] = id(a1 + a2, b1 + b2);
                    // (a1 + b1 u)(a2 + b2 u) = a1 a2 + c b1 b2 + (a1 b2 + a2 b1) u
                    r.mul[static_cast<std::size_t>(x) * N + y] =
                        id(a1 * a2 + c * b1 * b2, a1 * b2 + a2 * b1);
                }
        }
    return r;
}

FiniteRing ring_from_tables(int order, std::vector<ElemId> add, std::vector<ElemId> mul) {
    if (order < 1 || order > kMaxOrder)
        throw std::invalid_argument("ring order must be in 1.." + std::to_string(kMaxOrder));
    const auto n = static_cast<std::size_t>(order);
    if (add.size() != n * n || mul.size() != n * n)
        throw std::invalid_argument("ring table sizes do not match declared order");
    FiniteRing r;
    r.order = order;
    r.add = std::move(add);
    r.mul = std::move(mul);
    r.zero = -1;
    for (ElemId z = 0; z < order; ++z) {
        bool ok = true;
        for (ElemId a = 0; a < order && ok; ++a) ok = r.plus(z, a) == a;
        if (ok) {
            r.zero = z;
            break;
        }
    }
    if (r.zero < 0) throw std::invalid_argument("add table has no zero");
    r.one = -1;
    for (ElemId e = 0; e < order; ++e) {
        bool ok = true;
        for (ElemId a = 0; a < order && ok; ++a) ok = r.times(e, a) == a;
        if (ok) {
            r.one = e;
            break;
        }
    }
    if (r.one < 0) throw std::invalid_argument("mul table has no unity");
    r.neg.assign(n, -1);
    for (ElemId a = 0; a < order; ++a)
        for (ElemId b = 0; b < order; ++b)
            if (r.plus(a, b) == r.zero) {
                r.neg[a] = b;
                break;
            }
    for (ElemId a = 0; a < order; ++a)
        if (r.neg[a] < 0) throw std::invalid_argument("element has no additive inverse");
    ValidationReport rep = validate_ring(r);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return r;
}

}  // namespace graded
