#include "graded/sprime.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graded {

using json = nlohmann::json;

const char* to_string(FailReason r) {
    switch (r) {
        case FailReason::none: return "none";
        case FailReason::s_in_colon: return "s-in-colon";
        case FailReason::mcs_meets_colon: return "mcs-meets-colon";
        case FailReason::counterexample: return "counterexample";
    }
    return "?";
}

namespace {

void require_graded(const GradedModule& M, ElemSet N, const char* who) {
    CheckResult c = is_graded_submodule(M, N);
    if (!c.ok) throw std::invalid_argument(std::string(who) + ": N is not graded (" + c.reason + ")");
}

void require_proper(const GradedModule& M, ElemSet N, const char* who) {
    if (N == M.full()) throw std::invalid_argument(std::string(who) + ": N must be proper");
}

// Smallest flattened index over rs x ms where pred holds, or -1. The parallel
// path scans every cell and min-combines, matching the serial early-exit scan.
template <typename Pred>
long scan_pairs(const std::vector<ElemId>& rs, const std::vector<ElemId>& ms, Exec exec,
                Pred&& pred) {
    const long total = static_cast<long>(rs.size()) * static_cast<long>(ms.size());
    if (exec == Exec::serial) {
        for (long k = 0; k < total; ++k) {
            if (pred(rs[k / static_cast<long>(ms.size())], ms[k % static_cast<long>(ms.size())]))
                return k;
        }
        return -1;
    }
    long best = -1;
#ifdef _OPENMP
#pragma omp parallel
    {
        long local = -1;
#pragma omp for nowait
        for (long k = 0; k < total; ++k) {
            if (local >= 0) continue;
            if (pred(rs[k / static_cast<long>(ms.size())], ms[k % static_cast<long>(ms.size())]))
                local = k;
        }
#pragma omp critical
        if (local >= 0 && (best < 0 || local < best)) best = local;
    }
#else
    for (long k = 0; k < total && best < 0; ++k)
        if (pred(rs[k / static_cast<long>(ms.size())], ms[k % static_cast<long>(ms.size())]))
            best = k;
#endif
    return best;
}

SPrimeReport scan_for_counterexample(const GradedModule& M, ElemSet N, ElemSet colon,
                                     ElemId scale, bool scaled, Exec exec) {
    const std::vector<ElemId> rs = set_elements(M.ring.homogeneous);
    const std::vector<ElemId> ms = set_elements(M.homogeneous);
    const FiniteRing& ring = M.ring.ring;
    auto bad = [&](ElemId r, ElemId m) {
        if (!set_contains(N, M.act(r, m))) return false;
        if (scaled) {
            return !set_contains(colon, ring.times(scale, r)) &&
                   !set_contains(N, M.act(scale, m));
        }
        return !set_contains(colon, r) && !set_contains(N, m);
    };
    long k = scan_pairs(rs, ms, exec, bad);
    SPrimeReport rep;
    if (k < 0) {
        rep.verdict = true;
        return rep;
    }
    rep.verdict = false;
    rep.reason = FailReason::counterexample;
    rep.counterexample = {rs[k / static_cast<long>(ms.size())],
                          ms[k % static_cast<long>(ms.size())]};
    return rep;
}

}  // namespace

SPrimeReport is_graded_prime(const GradedModule& M, ElemSet N, Exec exec) {
    require_graded(M, N, "is_graded_prime");
    require_proper(M, N, "is_graded_prime");
    return scan_for_counterexample(M, N, colon_ideal(M, N), 0, false, exec);
}

SPrimeReport is_graded_s_prime(const GradedModule& M, ElemSet N, ElemId s, Exec exec) {
    if (s < 0 || s >= M.ring.order() || s == M.ring.ring.zero)
        throw std::invalid_argument("is_graded_s_prime: s must be a nonzero element");
    if (!M.ring.is_homogeneous(s))
        throw std::invalid_argument("is_graded_s_prime: s must be homogeneous");
    require_graded(M, N, "is_graded_s_prime");
    ElemSet colon = colon_ideal(M, N);
    if (set_contains(colon, s)) {
        SPrimeReport rep;
        rep.verdict = false;
        rep.reason = FailReason::s_in_colon;
        return rep;
    }
    return scan_for_counterexample(M, N, colon, s, true, exec);
}

SPrimeReport is_graded_S_prime(const GradedModule& M, ElemSet N, ElemSet S, Exec exec) {
    CheckResult mcs = is_mcs(M.ring, S);
    if (!mcs.ok)
        throw std::invalid_argument("is_graded_S_prime: S is not a valid m.c.s. (" +
                                    mcs.reason + ")");
    require_graded(M, N, "is_graded_S_prime");
    ElemSet colon = colon_ideal(M, N);
    if (colon & S) {
        SPrimeReport rep;
        rep.verdict = false;
        rep.reason = FailReason::mcs_meets_colon;
        return rep;
    }
    SPrimeReport rep;
    rep.verdict = false;
    rep.reason = FailReason::counterexample;
    bool found = false;
    set_for_each(S, [&](ElemId s) {
        if (found) return;
        SPrimeReport one = is_graded_s_prime(M, N, s, exec);
        if (one.verdict) {
            rep = one;
            rep.witness = s;
            found = true;
        } else if (!rep.counterexample) {
            rep.counterexample = one.counterexample;
        }
    });
    return rep;
}

ElemSet sprime_witnesses(const GradedModule& M, ElemSet N, Exec exec) {
    require_graded(M, N, "sprime_witnesses");
    ElemSet colon = colon_ideal(M, N);
    ElemSet out = 0;
    set_for_each(M.ring.homogeneous_nonzero & ~colon, [&](ElemId s) {
        if (is_graded_s_prime(M, N, s, exec).verdict) out |= set_single(s);
    });
    return out;
}

namespace {

bool set_subset(ElemSet a, ElemSet b) { return (a & ~b) == 0; }

// All pairwise action products land in N; equivalent to I*K <= N since N is
// additively closed.
bool products_inside(const GradedModule& M, ElemSet I, ElemSet K, ElemSet N) {
    bool ok = true;
    set_for_each(I, [&](ElemId r) {
        if (!ok) return;
        set_for_each(K, [&](ElemId k) {
            if (ok && !set_contains(N, M.act(r, k))) ok = false;
        });
    });
    return ok;
}

bool scaled_inside_ring(const FiniteRing& ring, ElemId s, ElemSet I, ElemSet target) {
    bool ok = true;
    set_for_each(I, [&](ElemId a) {
        if (ok && !set_contains(target, ring.times(s, a))) ok = false;
    });
    return ok;
}

bool scaled_inside_module(const GradedModule& M, ElemId s, ElemSet K, ElemSet target) {
    bool ok = true;
    set_for_each(K, [&](ElemId k) {
        if (ok && !set_contains(target, M.act(s, k))) ok = false;
    });
    return ok;
}

}  // namespace

SPrimeReport is_s_prime_via_ideal_pairs(const GradedModule& M, ElemSet N, ElemId s,
                                        Exec exec) {
    if (M.order() > 16)
        throw std::invalid_argument("ideal-pair oracle is bounded to modules of order <= 16");
    if (s < 0 || s >= M.ring.order() || s == M.ring.ring.zero)
        throw std::invalid_argument("ideal-pair oracle: s must be a nonzero element");
    if (!M.ring.is_homogeneous(s))
        throw std::invalid_argument("ideal-pair oracle: s must be homogeneous");
    require_graded(M, N, "is_s_prime_via_ideal_pairs");
    ElemSet colon = colon_ideal(M, N);
    SPrimeReport rep;
    if (set_contains(colon, s)) {
        rep.verdict = false;
        rep.reason = FailReason::s_in_colon;
        return rep;
    }
    GradedModule RM = ring_as_module(M.ring);
    const std::vector<ElemSet> ideals = enumerate_graded_submodules(RM);
    const std::vector<ElemSet> subs = enumerate_graded_submodules(M);
    const FiniteRing& ring = M.ring.ring;

    const long total = static_cast<long>(ideals.size()) * static_cast<long>(subs.size());
    auto bad = [&](long k) {
        ElemSet I = ideals[k / static_cast<long>(subs.size())];
        ElemSet K = subs[k % static_cast<long>(subs.size())];
        if (!products_inside(M, I, K, N)) return false;
        return !scaled_inside_ring(ring, s, I, colon) && !scaled_inside_module(M, s, K, N);
    };
    long best = -1;
    if (exec == Exec::serial) {
        for (long k = 0; k < total && best < 0; ++k)
            if (bad(k)) best = k;
    } else {
#ifdef _OPENMP
#pragma omp parallel
        {
            long local = -1;
#pragma omp for nowait
            for (long k = 0; k < total; ++k) {
                if (local >= 0) continue;
                if (bad(k)) local = k;
            }
#pragma omp critical
            if (local >= 0 && (best < 0 || local < best)) best = local;
        }
#else
        for (long k = 0; k < total && best < 0; ++k)
            if (bad(k)) best = k;
#endif
    }
    if (best < 0) {
        rep.verdict = true;
        return rep;
    }
    rep.verdict = false;
    rep.reason = FailReason::counterexample;
    rep.counterexample_pair = {ideals[best / static_cast<long>(subs.size())],
                               subs[best % static_cast<long>(subs.size())]};
    return rep;
}

ColonFamily colon_family(const GradedModule& M, ElemSet N) {
    require_graded(M, N, "colon_family");
    require_proper(M, N, "colon_family");
    ColonFamily fam;
    fam.base = N;
    ElemSet colon = colon_ideal(M, N);
    set_for_each(M.ring.homogeneous_nonzero & ~colon, [&](ElemId t) {
        fam.entries.push_back({t, colon_submodule(M, N, t)});
    });
    for (std::size_t i = 0; i < fam.entries.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < fam.entries.size() && maximal; ++j)
            if (set_subset(fam.entries[i].colon, fam.entries[j].colon) &&
                fam.entries[i].colon != fam.entries[j].colon)
                maximal = false;
        if (maximal) fam.maximal_indices.push_back(static_cast<int>(i));
    }
    return fam;
}

WitnessResult find_sprime_witness(const GradedModule& M, ElemSet N, Exec exec) {
    ColonFamily fam = colon_family(M, N);
    if (fam.maximal_indices.empty())
        throw TheoremFailure("colon family has no maximal entry", "{}");
    const ColonFamilyEntry& e = fam.entries[fam.maximal_indices.front()];
    SPrimeReport sp = is_graded_s_prime(M, N, e.t, exec);
    SPrimeReport pr = is_graded_prime(M, e.colon, exec);
    if (!sp.verdict || !pr.verdict) {
        json bundle;
        bundle["base"] = set_elements(N);
        bundle["t"] = e.t;
        bundle["colon"] = set_elements(e.colon);
        bundle["s_prime_verdict"] = sp.verdict;
        bundle["colon_prime_verdict"] = pr.verdict;
        throw TheoremFailure("maximal colon entry failed the witness postcondition",
                             bundle.dump());
    }
    return {e.t, e.colon};
}

// ---------------------------------------------------------------------------
// theorem suite

bool TheoremSuiteReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string TheoremSuiteReport::bundle_json() const {
    json out = json::array();
    for (const auto& c : checks)
        if (!c.passed) out.push_back({{"check", c.name}, {"detail", c.failure}});
    return out.dump();
}

namespace {

struct InstanceOutcome {
    long failed_index = -1;
    std::string detail;
};

// Evaluates `body` over 0..count-1; failure report is the smallest index for
// which body returns a message, so parallel execution stays deterministic.
template <typename Body>
InstanceOutcome run_instances(long count, Exec exec, Body&& body) {
    InstanceOutcome out;
    if (exec == Exec::serial) {
        for (long k = 0; k < count; ++k) {
            auto fail = body(k);
            if (fail) {
                out.failed_index = k;
                out.detail = *fail;
                return out;
            }
        }
        return out;
    }
#ifdef _OPENMP
#pragma omp parallel
    {
        long local = -1;
        std::string local_detail;
#pragma omp for nowait
        for (long k = 0; k < count; ++k) {
            if (local >= 0) continue;
            auto fail = body(k);
            if (fail) {
                local = k;
                local_detail = *fail;
            }
        }
#pragma omp critical
        if (local >= 0 && (out.failed_index < 0 || local < out.failed_index)) {
            out.failed_index = local;
            out.detail = local_detail;
        }
    }
#else
    for (long k = 0; k < count && out.failed_index < 0; ++k) {
        auto fail = body(k);
        if (fail) {
            out.failed_index = k;
            out.detail = *fail;
        }
    }
#endif
    return out;
}

std::string ids(ElemSet s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    set_for_each(s, [&](ElemId x) {
        os << (first ? "" : ",") << x;
        first = false;
    });
    os << "}";
    return os.str();
}

struct SuiteContext {
    const GradedModule& M;
    GradedModule RM;                  // the ring over itself
    std::vector<ElemSet> subs;        // all graded submodules of M
    std::vector<ElemSet> proper_subs;
    std::vector<ElemSet> ideals;      // all graded ideals of R
    std::vector<ElemSet> proper_ideals;
    std::vector<ElemId> hstar;
    std::vector<ElemId> hom_units;
    std::vector<ElemSet> colon_of;    // aligned with subs
    bool multiplication = false;
    Exec inner;                       // policy for predicate scans inside instances
};

ElemSet cached_colon(const SuiteContext& cx, ElemSet N) {
    for (std::size_t i = 0; i < cx.subs.size(); ++i)
        if (cx.subs[i] == N) return cx.colon_of[i];
    return colon_ideal(cx.M, N);
}

// N = (N:M)(K:M)M without re-running the multiplication-module check.
ElemSet product_unchecked(const GradedModule& M, ElemSet colonN, ElemSet colonK) {
    ElemSet prod_ideal = 0;
    set_for_each(colonN, [&](ElemId a) {
        set_for_each(colonK, [&](ElemId b) {
            prod_ideal |= set_single(M.ring.ring.times(a, b));
        });
    });
    prod_ideal = ideal_closure(M.ring, prod_ideal);
    return ideal_mult_submodule(M, prod_ideal, M.full());
}

}  // namespace

TheoremSuiteReport verify_module_theorems(const GradedModule& M, TheoremSuiteOptions options) {
    SuiteContext cx{M, ring_as_module(M.ring), {}, {}, {}, {}, {}, {}, {}, false,
                    Exec::serial};
    cx.subs = enumerate_graded_submodules(M);
    for (ElemSet N : cx.subs) {
        cx.colon_of.push_back(colon_ideal(M, N));
        if (N != M.full()) cx.proper_subs.push_back(N);
    }
    cx.ideals = enumerate_graded_submodules(cx.RM);
    for (ElemSet I : cx.ideals)
        if (I != cx.RM.full()) cx.proper_ideals.push_back(I);
    cx.hstar = set_elements(M.ring.homogeneous_nonzero);
    cx.hom_units = set_elements(M.ring.hom_units);
    cx.multiplication = is_multiplication_module(M).ok;

    const Exec exec = options.exec;
    const long nsub = static_cast<long>(cx.proper_subs.size());
    const long nall = static_cast<long>(cx.subs.size());
    const long nh = static_cast<long>(cx.hstar.size());
    const FiniteRing& ring = M.ring.ring;

    TheoremSuiteReport rep;
    auto add_check = [&](std::string name, long count, auto&& body) {
        InstanceOutcome out = run_instances(count, exec, body);
        TheoremCheck c;
        c.name = std::move(name);
        c.instances = count;
        c.passed = out.failed_index < 0;
        c.failure = out.detail;
        rep.checks.push_back(std::move(c));
    };
    using Fail = std::optional<std::string>;

    add_check("prime-implies-sprime", nsub * nh, [&](long k) -> Fail {
        ElemSet N = cx.proper_subs[k / nh];
        ElemId s = cx.hstar[k % nh];
        ElemSet colon = cached_colon(cx, N);
        if (set_contains(colon, s)) return std::nullopt;
        if (!is_graded_prime(M, N, cx.inner).verdict) return std::nullopt;
        if (!is_graded_s_prime(M, N, s, cx.inner).verdict)
            return "prime N=" + ids(N) + " not s-prime for s=" + std::to_string(s);
        return std::nullopt;
    });

    add_check("unit-scale-invariance", nsub * nh * static_cast<long>(cx.hom_units.size()),
              [&](long k) -> Fail {
                  const long nu = static_cast<long>(cx.hom_units.size());
                  ElemSet N = cx.proper_subs[k / (nh * nu)];
                  ElemId s = cx.hstar[(k / nu) % nh];
                  ElemId t = cx.hom_units[k % nu];
                  ElemId ts = ring.times(t, s);
                  bool a = is_graded_s_prime(M, N, s, cx.inner).verdict;
                  bool b = is_graded_s_prime(M, N, ts, cx.inner).verdict;
                  if (a != b)
                      return "N=" + ids(N) + " s=" + std::to_string(s) + " t=" +
                             std::to_string(t) + " disagree";
                  return std::nullopt;
              });

    add_check("colon-ideal-inherits-sprime", nsub * nh, [&](long k) -> Fail {
        ElemSet N = cx.proper_subs[k / nh];
        ElemId s = cx.hstar[k % nh];
        if (!is_graded_s_prime(M, N, s, cx.inner).verdict) return std::nullopt;
        ElemSet colon = cached_colon(cx, N);
        if (!is_graded_s_prime(cx.RM, colon, s, cx.inner).verdict)
            return "(N:M)=" + ids(colon) + " not s-prime for s=" + std::to_string(s);
        return std::nullopt;
    });

    add_check("multiplication-module-converse",
              cx.multiplication ? nall * nh : 0, [&](long k) -> Fail {
                  ElemSet N = cx.subs[k / nh];
                  ElemId s = cx.hstar[k % nh];
                  ElemSet colon = cx.colon_of[k / nh];
                  if (!is_graded_s_prime(cx.RM, colon, s, cx.inner).verdict)
                      return std::nullopt;
                  if (!is_graded_s_prime(M, N, s, cx.inner).verdict)
                      return "N=" + ids(N) + " not s-prime though (N:M) is, s=" +
                             std::to_string(s);
                  return std::nullopt;
              });

    add_check("submodule-pair-criterion",
              cx.multiplication ? nall * nh : 0, [&](long k) -> Fail {
                  ElemSet N = cx.subs[k / nh];
                  ElemId s = cx.hstar[k % nh];
                  ElemSet colon = cx.colon_of[k / nh];
                  if (set_contains(colon, s)) return std::nullopt;
                  bool lhs = is_graded_s_prime(M, N, s, cx.inner).verdict;
                  bool rhs = true;
                  for (std::size_t i = 0; i < cx.subs.size() && rhs; ++i)
                      for (std::size_t j = 0; j < cx.subs.size() && rhs; ++j) {
                          ElemSet LK = product_unchecked(M, cx.colon_of[i], cx.colon_of[j]);
                          if (!set_subset(LK, N)) continue;
                          if (!scaled_inside_module(M, s, cx.subs[i], N) &&
                              !scaled_inside_module(M, s, cx.subs[j], N))
                              rhs = false;
                      }
                  if (lhs != rhs)
                      return "N=" + ids(N) + " s=" + std::to_string(s) +
                             " elementwise/pairwise disagree";
                  return std::nullopt;
              });

    add_check("intersection-absorption",
              cx.multiplication ? nsub * nh : 0, [&](long k) -> Fail {
                  ElemSet N = cx.proper_subs[k / nh];
                  ElemId s = cx.hstar[k % nh];
                  if (!is_graded_s_prime(M, N, s, cx.inner).verdict) return std::nullopt;
                  for (ElemSet K : cx.subs)
                      for (ElemSet L : cx.subs) {
                          if (!set_subset(K & L, N)) continue;
                          if (!scaled_inside_module(M, s, K, N) &&
                              !scaled_inside_module(M, s, L, N))
                              return "N=" + ids(N) + " s=" + std::to_string(s) + " K=" +
                                     ids(K) + " L=" + ids(L);
                      }
                  return std::nullopt;
              });

    add_check("colon-shift-inclusion", nsub * nh * nh, [&](long k) -> Fail {
        ElemSet N = cx.proper_subs[k / (nh * nh)];
        ElemId s = cx.hstar[(k / nh) % nh];
        ElemId t = cx.hstar[k % nh];
        ElemSet colon = cached_colon(cx, N);
        ElemId st = ring.times(s, t);
        if (set_contains(colon, st)) return std::nullopt;
        if (!is_graded_s_prime(M, N, s, cx.inner).verdict) return std::nullopt;
        if (!set_subset(colon_submodule(M, N, t), colon_submodule(M, N, s)))
            return "module colon shift failed N=" + ids(N) + " s=" + std::to_string(s) +
                   " t=" + std::to_string(t);
        if (!set_subset(colon_submodule(cx.RM, colon, t), colon_submodule(cx.RM, colon, s)))
            return "ideal colon shift failed N=" + ids(N) + " s=" + std::to_string(s) +
                   " t=" + std::to_string(t);
        return std::nullopt;
    });

    add_check("colon-prime-correspondence", nsub * nh, [&](long k) -> Fail {
        ElemSet N = cx.proper_subs[k / nh];
        ElemId s = cx.hstar[k % nh];
        ElemSet colon = cached_colon(cx, N);
        if (set_contains(colon, s)) return std::nullopt;
        ElemSet C = colon_submodule(M, N, s);
        bool c_prime = is_graded_prime(M, C, cx.inner).verdict;
        bool n_sprime = is_graded_s_prime(M, N, s, cx.inner).verdict;
        if (c_prime && !n_sprime)
            return "(N:s) prime but N not s-prime, N=" + ids(N) + " s=" + std::to_string(s);
        ElemId s2 = ring.times(s, s);
        if (n_sprime && !set_contains(colon, s2) && !c_prime)
            return "N s-prime with s^2 outside (N:M) but (N:s) not prime, N=" + ids(N) +
                   " s=" + std::to_string(s);
        return std::nullopt;
    });

    // For each fixed s whose premise "every proper graded submodule is s-prime"
    // holds: zero-divisor identity, surjective action of non-divisors, the
    // colon dichotomy, and simplicity under multiplication.
    const bool nonzero_module = M.order() > 1;
    std::vector<ElemId> premise_s;
    if (nonzero_module)
        for (ElemId s : cx.hstar) {
            bool all = true;
            for (ElemSet N : cx.proper_subs)
                if (!is_graded_s_prime(M, N, s, cx.inner).verdict) {
                    all = false;
                    break;
                }
            if (all) premise_s.push_back(s);
        }
    const ElemSet ann = annihilator(M, M.full());
    const ElemSet hz = hz_set(M);

    add_check("all-sprime-zero-divisors", static_cast<long>(premise_s.size()),
              [&](long) -> Fail {
                  if (hz != (ann & M.ring.homogeneous))
                      return "HZ=" + ids(hz) + " vs Ann&h(R)=" + ids(ann & M.ring.homogeneous);
                  return std::nullopt;
              });

    add_check("all-sprime-surjective-action",
              static_cast<long>(premise_s.size()) *
                  static_cast<long>(set_size(M.ring.homogeneous & ~hz)),
              [&](long k) -> Fail {
                  auto ts = set_elements(M.ring.homogeneous & ~hz);
                  ElemId t = ts[k % ts.size()];
                  ElemSet image = 0;
                  for (ElemId m = 0; m < M.order(); ++m) image |= set_single(M.act(t, m));
                  if (image != M.full())
                      return "tM != M for non-zero-divisor t=" + std::to_string(t);
                  return std::nullopt;
              });

    add_check("colon-forces-full", static_cast<long>(premise_s.size()) * nall,
              [&](long k) -> Fail {
                  ElemSet N = cx.subs[k % nall];
                  if (cx.colon_of[k % nall] != ann && N != M.full())
                      return "(N:M) != Ann(M) for proper N=" + ids(N);
                  return std::nullopt;
              });

    add_check("all-sprime-implies-simple",
              cx.multiplication ? static_cast<long>(premise_s.size()) : 0,
              [&](long) -> Fail {
                  if (!is_graded_simple(M).simple) return std::string("module not simple");
                  return std::nullopt;
              });

    add_check("all-sprime-implies-graded-field", nh, [&](long k) -> Fail {
        ElemId s = cx.hstar[k];
        for (ElemSet I : cx.proper_ideals)
            if (!is_graded_s_prime(cx.RM, I, s, cx.inner).verdict) return std::nullopt;
        if (!is_graded_field(M.ring))
            return "all proper graded ideals are s-prime for s=" + std::to_string(s) +
                   " but R is not a graded field";
        return std::nullopt;
    });

    add_check("maximal-colon-witness", nsub, [&](long k) -> Fail {
        ElemSet N = cx.proper_subs[k];
        ColonFamily fam = colon_family(M, N);
        for (int i : fam.maximal_indices) {
            const auto& e = fam.entries[i];
            if (!is_graded_prime(M, e.colon, cx.inner).verdict)
                return "maximal colon not prime, N=" + ids(N) + " t=" + std::to_string(e.t);
            if (!is_graded_s_prime(M, N, e.t, cx.inner).verdict)
                return "maximal entry not a witness, N=" + ids(N) + " t=" + std::to_string(e.t);
        }
        return std::nullopt;
    });

    add_check("witness-existence", nsub, [&](long k) -> Fail {
        if (sprime_witnesses(M, cx.proper_subs[k], cx.inner) == 0)
            return "no witness for N=" + ids(cx.proper_subs[k]);
        return std::nullopt;
    });

    const bool pair_oracle = options.ideal_pair_oracle && M.order() <= 16;
    add_check("ideal-pair-equivalence", pair_oracle ? nsub * nh : 0, [&](long k) -> Fail {
        ElemSet N = cx.proper_subs[k / nh];
        ElemId s = cx.hstar[k % nh];
        bool a = is_graded_s_prime(M, N, s, cx.inner).verdict;
        bool b = is_s_prime_via_ideal_pairs(M, N, s, cx.inner).verdict;
        if (a != b)
            return "elementwise and pair oracles disagree, N=" + ids(N) + " s=" +
                   std::to_string(s);
        return std::nullopt;
    });

    return rep;
}

}  // namespace graded
