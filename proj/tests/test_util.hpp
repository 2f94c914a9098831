#pragma once

#include <massign/massign.hpp>

#include <numeric>
#include <random>
#include <vector>

namespace testutil {

using namespace massign;

inline Poly X(const VarSpace& vs, int i, unsigned long long e = 1) {
    return Poly::var(vs, vs.x(i), e);
}
inline Poly W(const VarSpace& vs, int s, unsigned long long e = 1) {
    return Poly::var(vs, vs.w(s), e);
}
inline Poly WB(const VarSpace& vs, int r, unsigned long long e = 1) {
    return Poly::var(vs, vs.wb(r), e);
}

// Independent power oracle: plain repeated multiplication.
inline Poly naive_pow(const Poly& p, unsigned n) {
    Poly acc = Poly::one(p.space());
    for (unsigned i = 0; i < n; ++i) acc = mul(acc, p);
    return acc;
}

inline Poly random_poly(std::mt19937& rng, const VarSpace& vs, int terms, int max_exp) {
    std::uniform_int_distribution<int> exp_dist(0, max_exp);
    std::vector<Monomial> ms;
    for (int t = 0; t < terms; ++t) {
        Monomial m(vs.total());
        for (int v = 0; v < vs.total(); ++v)
            m.set_exponent(v, static_cast<unsigned long long>(exp_dist(rng)));
        ms.push_back(std::move(m));
    }
    return Poly::from_terms(vs, std::move(ms));
}

// Random nonempty subset of the monomials of one weighted degree.
inline Poly random_homogeneous(std::mt19937& rng, const VarSpace& vs, long long degree) {
    std::vector<Monomial> all = monomials_of_degree(vs, degree);
    if (all.empty()) return Poly::zero(vs);
    std::vector<Monomial> picked;
    std::bernoulli_distribution coin(0.5);
    for (const Monomial& m : all)
        if (coin(rng)) picked.push_back(m);
    if (picked.empty()) picked.push_back(all[rng() % all.size()]);
    return Poly::from_terms(vs, std::move(picked));
}

// Relabels variables inside the x-block; p must be x-only.
inline Poly permute_x(const Poly& p, const std::vector<int>& perm) {
    std::vector<Monomial> out;
    for (const Monomial& t : p.terms()) {
        Monomial m(t.var_count());
        for (std::size_t v = 0; v < perm.size(); ++v)
            m.exps[static_cast<std::size_t>(perm[v])] = t.exps[v];
        out.push_back(std::move(m));
    }
    return Poly::from_terms(p.space(), std::move(out));
}

// Independent dimension oracle: partitions of n into at most `parts` parts,
// each part at most `max_part` (brute-force recursion).
inline long long count_partitions_in_box(long long n, int parts, int max_part) {
    if (n == 0) return 1;
    if (parts == 0 || n < 0) return 0;
    long long total = 0;
    for (int first = 1; first <= max_part && first <= n; ++first)
        total += count_partitions_in_box(n - first, parts - 1, first);
    return total;
}

inline unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    return r;
}

}  // namespace testutil
