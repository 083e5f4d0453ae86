#include "graded/fingroup.hpp"

#include <sstream>
#include <stdexcept>

namespace graded {

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << violations.size() << " axiom violation(s)";
    for (const auto& v : violations) {
        os << "; " << v.axiom;
        if (!v.witness.empty()) {
            os << " at (";
            for (std::size_t i = 0; i < v.witness.size(); ++i)
                os << (i ? "," : "") << v.witness[i];
            os << ")";
        }
        if (!v.detail.empty()) os << ": " << v.detail;
    }
    return os.str();
}

bool FiniteGroup::is_abelian() const {
    for (ElemId a = 0; a < order; ++a)
        for (ElemId b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order == b.order && a.identity == b.identity && a.op == b.op;
}

static void require_table_shape(int order, std::size_t got, std::size_t want,
                                const char* name) {
    if (got != want) {
        std::ostringstream os;
        os << "table '" << name << "' has " << got << " entries, expected " << want
           << " for order " << order;
        throw std::invalid_argument(os.str());
    }
}

static void require_order(int order) {
    if (order < 1 || order > kMaxOrder)
        throw std::invalid_argument("carrier order must be in 1.." +
                                    std::to_string(kMaxOrder));
}

ValidationReport validate_group(const FiniteGroup& g) {
    require_order(g.order);
    const auto n = static_cast<std::size_t>(g.order);
    require_table_shape(g.order, g.op.size(), n * n, "op");
    require_table_shape(g.order, g.inverse.size(), n, "inverse");
    for (ElemId x : g.op)
        if (x < 0 || x >= g.order) throw std::invalid_argument("op entry out of range");
    for (ElemId x : g.inverse)
        if (x < 0 || x >= g.order) throw std::invalid_argument("inverse entry out of range");
    if (g.identity < 0 || g.identity >= g.order)
        throw std::invalid_argument("identity out of range");

    ValidationReport rep;
    for (ElemId a = 0; a < g.order && rep.ok(); ++a)
        for (ElemId b = 0; b < g.order && rep.ok(); ++b)
            for (ElemId c = 0; c < g.order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                    rep.add("group.associative", {a, b, c});
                    break;
                }
    for (ElemId a = 0; a < g.order; ++a) {
        if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) {
            rep.add("group.identity", {a});
            break;
        }
    }
    for (ElemId a = 0; a < g.order; ++a) {
        if (g.mul(g.inv(a), a) != g.identity || g.mul(a, g.inv(a)) != g.identity) {
            rep.add("group.inverse", {a});
            break;
        }
    }
    // Latin square: each row and column is a permutation.
    for (ElemId a = 0; a < g.order; ++a) {
        ElemSet row = 0, col = 0;
        for (ElemId b = 0; b < g.order; ++b) {
            row |= set_single(g.mul(a, b));
            col |= set_single(g.mul(b, a));
        }
        if (row != set_full(g.order) || col != set_full(g.order)) {
            rep.add("group.latin_square", {a});
            break;
        }
    }
    return rep;
}

FiniteGroup cyclic_group(int n) {
    require_order(n);
    FiniteGroup g;
    g.order = n;
    g.identity = 0;
    g.op.resize(static_cast<std::size_t>(n) * n);
    g.inverse.resize(n);
    for (ElemId a = 0; a < n; ++a) {
        g.inverse[a] = (n - a) % n;
        for (ElemId b = 0; b < n; ++b)
            g.op[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    }
    return g;
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
    long long ord = static_cast<long long>(a.order) * b.order;
    if (ord > kMaxOrder) throw std::invalid_argument("product group exceeds size bound");
    FiniteGroup g;
    g.order = static_cast<int>(ord);
    g.identity = a.identity * b.order + b.identity;
    g.op.resize(static_cast<std::size_t>(g.order) * g.order);
    g.inverse.resize(g.order);
    auto mix = [&](ElemId x, ElemId y) { return x * b.order + y; };
    for (ElemId x1 = 0; x1 < a.order; ++x1)
        for (ElemId y1 = 0; y1 < b.order; ++y1) {
            ElemId p = mix(x1, y1);
            g.inverse[p] = mix(a.inv(x1), b.inv(y1));
            for (ElemId x2 = 0; x2 < a.order; ++x2)
                for (ElemId y2 = 0; y2 < b.order; ++y2)
                    g.op[static_cast<std::size_t>(p) * g.order + mix(x2, y2)] =
                        mix(a.mul(x1, x2), b.mul(y1, y2));
        }
    return g;
}

FiniteGroup group_from_table(int order, std::vector<ElemId> op) {
    require_order(order);
    require_table_shape(order, op.size(), static_cast<std::size_t>(order) * order, "op");
    FiniteGroup g;
    g.order = order;
    g.op = std::move(op);
    g.identity = -1;
    for (ElemId e = 0; e < order; ++e) {
        bool ok = true;
        for (ElemId a = 0; a < order && ok; ++a)
            ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) {
            g.identity = e;
            break;
        }
    }
    if (g.identity < 0) throw std::invalid_argument("table has no identity element");
    g.inverse.assign(order, -1);
    for (ElemId a = 0; a < order; ++a)
        for (ElemId b = 0; b < order; ++b)
            if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
                g.inverse[a] = b;
                break;
            }
    for (ElemId a = 0; a < order; ++a)
        if (g.inverse[a] < 0) throw std::invalid_argument("element has no inverse");
    ValidationReport rep = validate_group(g);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return g;
}

}  // namespace graded
