#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graded/exec.hpp"
#include "graded/validation.hpp"

namespace graded::lattice {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rat>;
using IntMat = std::vector<std::vector<long long>>;
using BigMat = std::vector<std::vector<BigInt>>;

/// Row-style Hermite normal form: zero rows dropped, pivots positive and
/// strictly right-moving, entries above each pivot reduced into [0, pivot).
/// Runs in checked 64-bit arithmetic and falls back to arbitrary precision
/// on overflow.
IntMat hnf(const IntMat& rows);
BigMat hnf_big(BigMat rows);

/// Basis of {x : x * A = 0} over the integers.
BigMat kernel_lattice(const BigMat& a);

/// Finitely generated Z-module: free coordinates, then torsion coordinates
/// reduced mod their moduli. Rational modules are the full coordinate space
/// over Q with no torsion part. Each coordinate carries a grading tag.
struct IntLatticeModule {
    int free_rank = 0;
    std::vector<long long> torsion_moduli;  // each >= 2
    std::vector<int> coordinate_grades;     // size free_rank + #torsion
    int grade_group_order = 1;
    bool rational_coords = false;

    int dim() const { return free_rank + static_cast<int>(torsion_moduli.size()); }
};

IntLatticeModule make_lattice_module(int free_rank, std::vector<long long> torsion_moduli,
                                     std::vector<int> coordinate_grades,
                                     int grade_group_order, bool rational_coords = false);

/// Submodule given by generators; membership decided against a Hermite basis
/// of the denominator-cleared generator lattice (torsion relations included).
struct LatticeSubmodule {
    IntLatticeModule parent;
    std::vector<Vec> generators;
    BigInt denom = 1;  // common denominator of the generators
    BigMat basis;      // HNF of the cleared lattice
};

LatticeSubmodule make_lattice_submodule(IntLatticeModule parent, std::vector<Vec> generators);

bool lattice_membership(const LatticeSubmodule& N, const Vec& m);

/// (N :_Z K) as d*Z; d = 0 encodes the zero ideal. K defaults to the whole
/// parent module (standard basis generators, or the full rational space).
BigInt lattice_colon_ideal(const LatticeSubmodule& N);
BigInt lattice_colon_ideal(const LatticeSubmodule& N, const std::vector<Vec>& k_gens);

/// Certifies r*m in N, s*r outside (N:M), s*m outside N. With s = 1 this is
/// a non-primeness certificate for N.
bool verify_nonprime_witness(const LatticeSubmodule& N, const BigInt& r, const Vec& m,
                             const BigInt& s = 1);

struct FalsifyResult {
    bool found = false;
    BigInt r;
    Vec m;
    long long bound = 0;  // a miss only means "none up to this bound"
};

/// Grid search over homogeneous r and single-tag m with entries bounded by B.
/// Order: r spirals 0, 1, -1, 2, ...; m by tag class then coordinate spiral.
FalsifyResult bounded_sprime_falsify(const LatticeSubmodule& N, const BigInt& s,
                                     long long bound, Exec exec = Exec::parallel);

struct LatticeColonEntry {
    BigInt t;
    BigMat colon;  // HNF basis of (N :_M t)
    bool maximal = false;
};

struct LatticeColonFamily {
    std::vector<LatticeColonEntry> entries;
    std::vector<std::size_t> maximal_indices;  // every inclusion-maximal entry
    int distinct_maximal_count = 0;            // distinct maximal colon lattices
    BigInt smallest_maximal_t;                 // canonical witness
};

/// Colon submodules over a sampled range of multipliers; maximality is
/// relative to the sampled range.
LatticeColonFamily lattice_colon_family(const LatticeSubmodule& N,
                                        const std::vector<BigInt>& t_range);

// ---------------------------------------------------------------------------
// bundled fixtures, addressable by name from the CLI

struct LatticeFixture {
    std::string name;
    std::string description;
    IntLatticeModule module;
    LatticeSubmodule submodule;
};

const std::vector<std::string>& fixture_names();
LatticeFixture get_fixture(const std::string& name);

}  // namespace graded::lattice
