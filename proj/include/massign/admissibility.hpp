#pragma once

// The user-facing decision layer: certification of mass-assignment
// admissibility for a tuple (d, l, k, j) through non-membership of the Euler
// class in the configuration-space index, together with the classical
// dimension bounds and the minimal-d search.
//
// The criterion is sufficient only: a verdict is either a certificate of
// admissibility or "inconclusive", never a claim of non-admissibility.

#include <chrono>
#include <climits>
#include <optional>
#include <stdexcept>
#include <string>

#include "index_ideal.hpp"

namespace massign {

struct Tuple4 {
    int d = 0;
    int ell = 0;
    int k = 0;
    int j = 0;

    bool operator==(const Tuple4&) const = default;
};

enum class Verdict { certified_admissible, inconclusive, inapplicable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::certified_admissible: return "certified-admissible";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::inapplicable: return "inapplicable";
    }
    return "?";
}

enum class Method { fast, oracle, both };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::fast: return "fast";
        case Method::oracle: return "oracle";
        case Method::both: return "both";
    }
    return "?";
}

inline int floor_log2(long long j) {
    if (j < 1) throw std::invalid_argument("floor_log2 requires j >= 1");
    int t = 0;
    while ((1LL << (t + 1)) <= j) ++t;
    return t;
}

// With j = 2^t + r, 0 <= r <= 2^t - 1: the sufficient dimension 2^{t+k-1} + r.
inline long long theorem2_bound(int k, long long j) {
    if (k < 1 || j < 1) throw std::invalid_argument("theorem2_bound requires k, j >= 1");
    int t = floor_log2(j);
    if (t + k - 1 >= 62) throw std::overflow_error("theorem2_bound overflow");
    long long r = j - (1LL << t);
    return (1LL << (t + k - 1)) + r;
}

// ceil((2^k - 1) j / k), the classical lower bound.
inline long long ramos_lower(long long j, int k) {
    if (k < 1 || j < 1) throw std::invalid_argument("ramos_lower requires j, k >= 1");
    if (k >= 62) throw std::overflow_error("ramos_lower overflow");
    long long num = ((1LL << k) - 1);
    if (num > LLONG_MAX / j) throw std::overflow_error("ramos_lower overflow");
    return (num * j + k - 1) / k;
}

// j + (2^{k-1} - 1) 2^{floor(log2 j)}, the classical upper bound.
inline long long mvz_upper(long long j, int k) {
    if (k < 1 || j < 1) throw std::invalid_argument("mvz_upper requires j, k >= 1");
    if (k >= 62) throw std::overflow_error("mvz_upper overflow");
    int t = floor_log2(j);
    long long factor = (1LL << (k - 1)) - 1;
    long long p2 = 1LL << t;
    if (factor > 0 && p2 > LLONG_MAX / factor) throw std::overflow_error("mvz_upper overflow");
    return j + factor * p2;
}

struct Bounds {
    long long ramos_lower = 0;
    long long mvz_upper = 0;
    long long theorem2_bound = 0;
};

struct AdmissibilityReport {
    Tuple4 tuple;
    Verdict verdict = Verdict::inconclusive;
    Method method = Method::fast;  // engine(s) that produced the verdict
    std::optional<Monomial> witness;
    std::string witness_rendered;
    long long degree_checked = 0;
    Bounds bounds;
    double elapsed_seconds = 0.0;
    bool oracle_degraded = false;  // set when the oracle budget forced a fast fallback
    std::string note;
};

inline AdmissibilityReport check(const Tuple4& t, Method method = Method::fast,
                                 std::size_t budget = kDefaultOracleBudget) {
    if (t.d < 1 || t.ell < 1 || t.k < 1 || t.j < 1)
        throw std::invalid_argument("check requires positive d, l, k, j");
    auto start = std::chrono::steady_clock::now();
    AdmissibilityReport rep;
    rep.tuple = t;
    rep.method = method;
    rep.bounds = Bounds{ramos_lower(t.j, t.k), mvz_upper(t.j, t.k), theorem2_bound(t.k, t.j)};

    if (t.ell > t.d - 1) {
        rep.verdict = Verdict::inapplicable;
        rep.note = "requires 1 <= l <= d-1; l = d is the classical hyperplane partition problem";
    } else if (t.k > t.ell) {
        rep.verdict = Verdict::inapplicable;
        rep.note = "requires k <= l: a k-arrangement needs k independent directions in an l-dimensional subspace";
    } else {
        EulerClass e = euler_class(t.k, t.j);
        auto run_oracle = [&]() -> std::optional<MembershipVerdict> {
            try {
                return membership_oracle(e, t.d, t.ell, t.k, budget);
            } catch (const BudgetExceeded& ex) {
                // Valid fallback: k <= l <= d-1 holds here, where the two
                // engines provably agree.
                rep.oracle_degraded = true;
                rep.note = std::string(ex.what()) + "; fell back to the fast engine";
                return std::nullopt;
            }
        };

        MembershipVerdict v;
        switch (method) {
            case Method::fast:
                v = membership_fast(e, t.d);
                break;
            case Method::oracle: {
                auto vo = run_oracle();
                if (vo) {
                    v = *vo;
                } else {
                    v = membership_fast(e, t.d);
                    rep.method = Method::fast;
                }
                break;
            }
            case Method::both: {
                MembershipVerdict vf = membership_fast(e, t.d);
                auto vo = run_oracle();
                if (vo && vo->member != vf.member)
                    throw std::logic_error("membership engines disagree on (" + std::to_string(t.d) +
                                           "," + std::to_string(t.ell) + "," + std::to_string(t.k) +
                                           "," + std::to_string(t.j) + ")");
                v = vf;
                if (!vo) rep.method = Method::fast;
                break;
            }
        }
        rep.verdict = v.member ? Verdict::inconclusive : Verdict::certified_admissible;
        rep.degree_checked = v.degree_checked;
        if (v.witness) {
            rep.witness = v.witness;
            rep.witness_rendered = to_string(x_space(t.k), *v.witness);
        }
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

struct SearchResult {
    int k = 0;
    long long j = 0;
    std::optional<long long> min_d;
    Bounds bounds;
};

// Least d <= d_max whose fast membership check certifies (k, j); equals one
// plus the smallest over terms of the largest exponent, since a witness term
// needs all exponents <= d-1.
inline SearchResult search_min_d(int k, long long j, long long d_max) {
    if (k < 1 || j < 1 || d_max < 1)
        throw std::invalid_argument("search_min_d requires k, j, d_max >= 1");
    SearchResult res;
    res.k = k;
    res.j = j;
    res.bounds = Bounds{ramos_lower(j, k), mvz_upper(j, k), theorem2_bound(k, j)};
    EulerClass e = euler_class(k, static_cast<int>(j));
    long long best = LLONG_MAX;
    for (const Monomial& t : e.poly.terms()) {
        long long mx = 0;
        for (exp_t ex : t.exps) mx = std::max<long long>(mx, ex);
        best = std::min(best, mx);
    }
    long long min_d = best + 1;
    if (min_d <= d_max) res.min_d = min_d;
    return res;
}

}  // namespace massign
