#include "graded/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graded::lattice {

namespace {

struct OverflowSignal {};

long long cadd(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
}
long long cmul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
}

template <typename T>
T floor_div(const T& a, const T& b) {
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Shared row-reduction skeleton; Add/Mul inject the arithmetic so the
// checked 64-bit and big-integer paths stay byte-for-byte identical.
template <typename T, typename Add, typename Mul>
std::vector<std::vector<T>> hnf_impl(std::vector<std::vector<T>> rows, Add add, Mul mul) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
        // euclidean elimination below `top` in column c
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i)
                if (rows[i][c] != 0 &&
                    (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool cleared = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                T q = floor_div(rows[i][c], rows[top][c]);
                for (std::size_t j = 0; j < cols; ++j)
                    rows[i][j] = add(rows[i][j], mul(T(-q), rows[top][j]));
                if (rows[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (top < rows.size() && rows[top][c] != 0) {
            if (rows[top][c] < 0)
                for (std::size_t j = 0; j < cols; ++j) rows[top][j] = mul(T(-1), rows[top][j]);
            for (std::size_t i = 0; i < top; ++i) {
                T q = floor_div(rows[i][c], rows[top][c]);
                if (q == 0) continue;
                for (std::size_t j = 0; j < cols; ++j)
                    rows[i][j] = add(rows[i][j], mul(T(-q), rows[top][j]));
            }
            ++top;
        }
    }
    rows.resize(top);
    return rows;
}

BigMat to_big(const IntMat& m) {
    BigMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i].assign(m[i].begin(), m[i].end());
    return out;
}

}  // namespace

BigMat hnf_big(BigMat rows) {
    return hnf_impl<BigInt>(
        std::move(rows), [](const BigInt& a, const BigInt& b) { return a + b; },
        [](const BigInt& a, const BigInt& b) { return a * b; });
}

IntMat hnf(const IntMat& rows) {
    try {
        return hnf_impl<long long>(rows, cadd, cmul);
    } catch (const OverflowSignal&) {
        BigMat big = hnf_big(to_big(rows));
        IntMat out(big.size());
        for (std::size_t i = 0; i < big.size(); ++i) {
            out[i].reserve(big[i].size());
            for (const BigInt& x : big[i]) {
                if (x > std::numeric_limits<long long>::max() ||
                    x < std::numeric_limits<long long>::min())
                    throw std::overflow_error("HNF entry exceeds 64-bit range");
                out[i].push_back(static_cast<long long>(x));
            }
        }
        return out;
    }
}

BigMat kernel_lattice(const BigMat& a) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    const std::size_t m = a[0].size();
    BigMat aug(n, std::vector<BigInt>(m + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = a[i][j];
        aug[i][m + i] = 1;
    }
    aug = hnf_big(std::move(aug));
    BigMat kernel;
    for (const auto& row : aug) {
        bool zero_part = true;
        for (std::size_t j = 0; j < m && zero_part; ++j) zero_part = row[j] == 0;
        if (zero_part)
            kernel.emplace_back(row.begin() + static_cast<long>(m), row.end());
    }
    return kernel;
}

IntLatticeModule make_lattice_module(int free_rank, std::vector<long long> torsion_moduli,
                                     std::vector<int> coordinate_grades,
                                     int grade_group_order, bool rational_coords) {
    if (free_rank < 0) throw std::invalid_argument("negative free rank");
    for (long long t : torsion_moduli)
        if (t < 2) throw std::invalid_argument("torsion moduli must be >= 2");
    if (rational_coords && !torsion_moduli.empty())
        throw std::invalid_argument("rational modules carry no torsion part");
    IntLatticeModule M;
    M.free_rank = free_rank;
    M.torsion_moduli = std::move(torsion_moduli);
    M.grade_group_order = grade_group_order;
    M.rational_coords = rational_coords;
    if (coordinate_grades.size() != static_cast<std::size_t>(M.dim()))
        throw std::invalid_argument("one grading tag per coordinate required");
    for (int g : coordinate_grades)
        if (g < 0 || g >= grade_group_order)
            throw std::invalid_argument("grading tag out of range");
    M.coordinate_grades = std::move(coordinate_grades);
    return M;
}

namespace {

// Rows spanning the denominator-cleared lattice of N, torsion relations included.
BigMat cleared_rows(const IntLatticeModule& parent, const std::vector<Vec>& gens,
                    const BigInt& denom) {
    const int d = parent.dim();
    BigMat rows;
    for (const Vec& g : gens) {
        std::vector<BigInt> row(d);
        for (int j = 0; j < d; ++j) {
            Rat scaled = g[j] * Rat(denom);
            if (boost::multiprecision::denominator(scaled) != 1)
                throw std::invalid_argument("generator denominators exceed the common one");
            row[j] = boost::multiprecision::numerator(scaled);
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t t = 0; t < parent.torsion_moduli.size(); ++t) {
        std::vector<BigInt> row(d, 0);
        row[parent.free_rank + static_cast<int>(t)] = parent.torsion_moduli[t] * denom;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool member_of_basis(const BigMat& basis, std::vector<BigInt> v) {
    for (const auto& row : basis) {
        std::size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) ++pivot;
        if (pivot == row.size()) continue;
        // anything nonzero left of this pivot is unreachable
        for (std::size_t j = 0; j < pivot; ++j)
            if (v[j] != 0) return false;
        if (v[pivot] == 0) continue;
        if (v[pivot] % row[pivot] != 0) return false;
        BigInt q = v[pivot] / row[pivot];
        for (std::size_t j = pivot; j < v.size(); ++j) v[j] -= q * row[j];
    }
    for (const BigInt& x : v)
        if (x != 0) return false;
    return true;
}

std::vector<BigInt> clear_vector(const Vec& m, const BigInt& scale, bool* ok) {
    std::vector<BigInt> v(m.size());
    *ok = true;
    for (std::size_t j = 0; j < m.size(); ++j) {
        Rat scaled = m[j] * Rat(scale);
        if (boost::multiprecision::denominator(scaled) != 1) {
            *ok = false;
            return v;
        }
        v[j] = boost::multiprecision::numerator(scaled);
    }
    return v;
}

}  // namespace

LatticeSubmodule make_lattice_submodule(IntLatticeModule parent, std::vector<Vec> generators) {
    const int d = parent.dim();
    BigInt denom = 1;
    for (const Vec& g : generators) {
        if (g.size() != static_cast<std::size_t>(d))
            throw std::invalid_argument("generator dimension mismatch");
        for (const Rat& x : g) {
            if (!parent.rational_coords && boost::multiprecision::denominator(x) != 1)
                throw std::invalid_argument("integer module cannot hold rational generators");
            denom = boost::multiprecision::lcm(denom,
                                               boost::multiprecision::denominator(x));
        }
    }
    LatticeSubmodule N;
    N.parent = std::move(parent);
    N.generators = std::move(generators);
    N.denom = denom;
    N.basis = hnf_big(cleared_rows(N.parent, N.generators, denom));
    return N;
}

bool lattice_membership(const LatticeSubmodule& N, const Vec& m) {
    if (m.size() != static_cast<std::size_t>(N.parent.dim()))
        throw std::invalid_argument("vector dimension mismatch");
    bool ok = false;
    std::vector<BigInt> v = clear_vector(m, N.denom, &ok);
    if (!ok) return false;
    return member_of_basis(N.basis, std::move(v));
}

namespace {

// d with {r : r*g in N} = d*Z, via the r-projection of the solution lattice.
BigInt generator_colon(const LatticeSubmodule& N, const Vec& g) {
    BigInt gd = 1;
    for (const Rat& x : g)
        gd = boost::multiprecision::lcm(gd, boost::multiprecision::denominator(x));
    const BigInt scale = N.denom * gd;  // r*g in N  <=>  r*(scale*g) in gd*L_cleared
    bool ok = false;
    std::vector<BigInt> w = clear_vector(g, scale, &ok);
    if (!ok) throw std::logic_error("scaled generator must be integral");
    BigMat a;
    a.push_back(std::move(w));
    for (const auto& row : N.basis) {
        std::vector<BigInt> r(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) r[j] = -gd * row[j];
        a.push_back(std::move(r));
    }
    BigMat kernel = kernel_lattice(a);
    BigInt d = 0;
    for (const auto& row : kernel) d = boost::multiprecision::gcd(d, row[0]);
    return boost::multiprecision::abs(d);
}

std::vector<Vec> standard_generators(const IntLatticeModule& M) {
    std::vector<Vec> gens;
    for (int j = 0; j < M.dim(); ++j) {
        Vec e(M.dim(), Rat(0));
        e[j] = 1;
        gens.push_back(std::move(e));
    }
    return gens;
}

}  // namespace

BigInt lattice_colon_ideal(const LatticeSubmodule& N, const std::vector<Vec>& k_gens) {
    BigInt d = 1;
    for (const Vec& g : k_gens) d = boost::multiprecision::lcm(d, generator_colon(N, g));
    return d;
}

BigInt lattice_colon_ideal(const LatticeSubmodule& N) {
    if (N.parent.rational_coords) {
        // r * Q^k lands inside a finitely generated lattice only for r = 0
        return N.parent.dim() == 0 ? BigInt(1) : BigInt(0);
    }
    return lattice_colon_ideal(N, standard_generators(N.parent));
}

namespace {

bool in_principal(const BigInt& d, const BigInt& x) {
    if (d == 0) return x == 0;
    return x % d == 0;
}

Vec scaled(const Vec& m, const BigInt& r) {
    Vec out(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) out[j] = m[j] * Rat(r);
    return out;
}

}  // namespace

bool verify_nonprime_witness(const LatticeSubmodule& N, const BigInt& r, const Vec& m,
                             const BigInt& s) {
    const BigInt colon = lattice_colon_ideal(N);
    if (!lattice_membership(N, scaled(m, r))) return false;
    if (in_principal(colon, s * r)) return false;
    if (lattice_membership(N, scaled(m, s))) return false;
    return true;
}

namespace {

// 0, 1, -1, 2, -2, ...
BigInt spiral(long long i) {
    long long half = (i + 1) / 2;
    return (i % 2 == 1) ? BigInt(half) : BigInt(-half);
}

struct CandidateGrid {
    // per tag class: coordinate indices and the value list of each coordinate
    struct TagClass {
        std::vector<int> coords;
        std::vector<std::vector<Rat>> values;
        long long combos = 1;
    };
    std::vector<TagClass> classes;
    long long total_m = 0;

    Vec candidate(int dim, long long idx) const {
        for (const TagClass& tc : classes) {
            if (idx >= tc.combos) {
                idx -= tc.combos;
                continue;
            }
            Vec m(dim, Rat(0));
            // first coordinate most significant
            long long rest = idx;
            for (std::size_t j = tc.coords.size(); j-- > 0;) {
                long long sz = static_cast<long long>(tc.values[j].size());
                m[tc.coords[j]] = tc.values[j][rest % sz];
                rest /= sz;
            }
            return m;
        }
        throw std::logic_error("candidate index out of range");
    }
};

CandidateGrid build_grid(const IntLatticeModule& M, long long bound) {
    std::map<int, std::vector<int>> by_tag;
    for (int j = 0; j < M.dim(); ++j) by_tag[M.coordinate_grades[j]].push_back(j);
    CandidateGrid grid;
    for (const auto& [tag, coords] : by_tag) {
        CandidateGrid::TagClass tc;
        tc.coords = coords;
        for (int j : coords) {
            std::vector<Rat> vals;
            if (j >= M.free_rank) {
                long long mod = M.torsion_moduli[j - M.free_rank];
                for (long long v = 0; v <= std::min(bound, mod - 1); ++v) vals.emplace_back(v);
            } else if (!M.rational_coords) {
                for (long long i = 0; i <= 2 * bound; ++i) vals.push_back(Rat(spiral(i)));
            } else {
                for (long long q = 1; q <= std::max<long long>(1, bound); ++q)
                    for (long long i = 0; i <= 2 * bound; ++i) {
                        BigInt p = spiral(i);
                        if (boost::multiprecision::gcd(boost::multiprecision::abs(p),
                                                       BigInt(q)) != 1)
                            continue;
                        vals.push_back(Rat(p, BigInt(q)));
                    }
            }
            tc.values.push_back(std::move(vals));
            tc.combos *= static_cast<long long>(tc.values.back().size());
        }
        grid.total_m += tc.combos;
        grid.classes.push_back(std::move(tc));
    }
    return grid;
}

}  // namespace

FalsifyResult bounded_sprime_falsify(const LatticeSubmodule& N, const BigInt& s,
                                     long long bound, Exec exec) {
    if (s == 0) throw std::invalid_argument("falsification needs a nonzero s");
    if (bound < 0) throw std::invalid_argument("negative bound");
    FalsifyResult res;
    res.bound = bound;
    if (bound == 0 && N.parent.free_rank == 0 && N.parent.torsion_moduli.empty())
        return res;

    const BigInt colon = lattice_colon_ideal(N);
    const CandidateGrid grid = build_grid(N.parent, bound);
    const long long nr = 2 * bound + 1;
    const long long total = nr * grid.total_m;
    const int dim = N.parent.dim();

    auto bad = [&](long long k) {
        BigInt r = spiral(k / grid.total_m);
        Vec m = grid.candidate(dim, k % grid.total_m);
        if (!lattice_membership(N, scaled(m, r))) return false;
        if (in_principal(colon, s * r)) return false;
        return !lattice_membership(N, scaled(m, s));
    };

    long long best = -1;
    if (exec == Exec::serial) {
        for (long long k = 0; k < total && best < 0; ++k)
            if (bad(k)) best = k;
    } else {
#ifdef _OPENMP
#pragma omp parallel
        {
            long long local = -1;
#pragma omp for nowait
            for (long long k = 0; k < total; ++k) {
                if (local >= 0) continue;
                if (bad(k)) local = k;
            }
#pragma omp critical
            if (local >= 0 && (best < 0 || local < best)) best = local;
        }
#else
        for (long long k = 0; k < total && best < 0; ++k)
            if (bad(k)) best = k;
#endif
    }
    if (best >= 0) {
        res.found = true;
        res.r = spiral(best / grid.total_m);
        res.m = grid.candidate(dim, best % grid.total_m);
    }
    return res;
}

LatticeColonFamily lattice_colon_family(const LatticeSubmodule& N,
                                        const std::vector<BigInt>& t_range) {
    if (N.parent.rational_coords)
        throw std::invalid_argument("colon families are defined for integer modules");
    const BigInt colon = lattice_colon_ideal(N);
    const int dim = N.parent.dim();
    LatticeColonFamily fam;
    for (const BigInt& t : t_range) {
        if (t == 0 || in_principal(colon, t))
            throw std::invalid_argument("multipliers must be nonzero and escape (N:M)");
        // solve t*m = c * basis: kernel of [t*I; -basis], projected onto m
        BigMat a;
        for (int j = 0; j < dim; ++j) {
            std::vector<BigInt> row(dim, 0);
            row[j] = t;
            a.push_back(std::move(row));
        }
        for (const auto& b : N.basis) {
            std::vector<BigInt> row(b.size());
            for (std::size_t j = 0; j < b.size(); ++j) row[j] = -b[j];
            a.push_back(std::move(row));
        }
        BigMat kernel = kernel_lattice(a);
        BigMat mparts;
        for (const auto& row : kernel)
            mparts.emplace_back(row.begin(), row.begin() + dim);
        LatticeColonEntry e;
        e.t = t;
        e.colon = hnf_big(std::move(mparts));
        fam.entries.push_back(std::move(e));
    }
    auto contains = [](const BigMat& big, const BigMat& small) {
        for (const auto& row : small)
            if (!member_of_basis(big, row)) return false;
        return true;
    };
    std::vector<BigMat> maximal_sets;
    for (std::size_t i = 0; i < fam.entries.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < fam.entries.size() && maximal; ++j)
            if (i != j && contains(fam.entries[j].colon, fam.entries[i].colon) &&
                fam.entries[i].colon != fam.entries[j].colon)
                maximal = false;
        fam.entries[i].maximal = maximal;
        if (maximal) {
            fam.maximal_indices.push_back(i);
            bool fresh = true;
            for (const BigMat& seen : maximal_sets)
                if (seen == fam.entries[i].colon) fresh = false;
            if (fresh) maximal_sets.push_back(fam.entries[i].colon);
        }
    }
    fam.distinct_maximal_count = static_cast<int>(maximal_sets.size());
    if (!fam.maximal_indices.empty())
        fam.smallest_maximal_t = fam.entries[fam.maximal_indices.front()].t;
    return fam;
}

// ---------------------------------------------------------------------------
// fixtures

namespace {

Vec vec(std::initializer_list<Rat> xs) { return Vec(xs); }

LatticeFixture build_fixture(const std::string& name) {
    if (name == "example2.3") {
        // Z[i] x Z_2[i] over Z, C2-tagged by real/imaginary coordinates
        IntLatticeModule M = make_lattice_module(2, {2, 2}, {0, 1, 0, 1}, 2);
        LatticeSubmodule N = make_lattice_submodule(M, {});
        return {name, "Z[i] x Z_2[i] with C2 grading tags; zero submodule", M, N};
    }
    if (name == "example7") {
        // Z[i] x Z[i] over Z, C4-tagged (real -> 0, imaginary -> 2)
        IntLatticeModule M = make_lattice_module(4, {}, {0, 2, 0, 2}, 4);
        LatticeSubmodule N = make_lattice_submodule(M, {vec({2, 0, 0, 0})});
        return {name, "Z[i]^2 with C4 grading tags; cyclic submodule Z*(2,0)", M, N};
    }
    if (name == "example2.4") {
        // Q[i] x Q[i] over Z, C2-tagged; N = Z x {0} inside the first factor
        IntLatticeModule M = make_lattice_module(4, {}, {0, 1, 0, 1}, 2, true);
        LatticeSubmodule N = make_lattice_submodule(M, {vec({1, 0, 0, 0})});
        return {name, "Q[i]^2 with C2 grading tags; integer line Z*(1,0)", M, N};
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"example2.3", "example7", "example2.4"};
    return names;
}

LatticeFixture get_fixture(const std::string& name) { return build_fixture(name); }

}  // namespace graded::lattice
