#pragma once

// Dickson polynomials over F2 and the Euler class e_{k,j}.
//
// Two independent construction routes are kept side by side: the top class
// Delta_k as the expanded product of all nonzero linear forms, and the
// coefficient family D_{k,i} read off an auxiliary-variable expansion of
// prod_{a in F2^k} (a.x + y).  The family constructor asserts that the
// recursion Delta_k = Delta_{k-1} x_k (sum_i D_{k-1,i} x_k^{2^i-1})
// reconstructs the product route.

#include <memory>
#include <stdexcept>
#include <vector>

#include "f2poly.hpp"
#include "memo.hpp"

namespace massign {

inline VarSpace x_space(int k) { return VarSpace{k, 0, 0}; }

struct DicksonFamily {
    int k = 0;
    Poly top;                  // Delta_k
    std::vector<Poly> coeffs;  // D_{k,0} .. D_{k,k}
};

namespace detail {
// Linear form a1*x1 + ... + ak*xk (+ y for masks over a k+1 space).
inline Poly linear_form(const VarSpace& vs, unsigned mask) {
    std::vector<Monomial> terms;
    for (int i = 0; i < vs.total(); ++i)
        if ((mask >> i) & 1u) {
            Monomial m(vs.total());
            m.set_exponent(i, 1);
            terms.push_back(std::move(m));
        }
    return Poly::from_terms(vs, std::move(terms));
}
}  // namespace detail

// Delta_k: the expanded product of the 2^k - 1 nonzero linear forms.
inline Poly dickson_top(int k) {
    if (k < 1) throw std::invalid_argument("dickson_top requires k >= 1");
    VarSpace vs = x_space(k);
    Poly acc = Poly::one(vs);
    for (unsigned mask = 1; mask < (1u << k); ++mask) acc *= detail::linear_form(vs, mask);
    return acc;
}

inline DicksonFamily dickson_coeffs(int k);

namespace detail {
inline MemoCache<int, DicksonFamily>& dickson_cache() {
    static MemoCache<int, DicksonFamily> cache;
    return cache;
}
}  // namespace detail

inline std::shared_ptr<const DicksonFamily> dickson_family(int k) {
    return detail::dickson_cache().get_or_fill(k, [&] { return dickson_coeffs(k); });
}

inline DicksonFamily dickson_coeffs(int k) {
    if (k < 1) throw std::invalid_argument("dickson_coeffs requires k >= 1");
    // Expand prod_{a in F2^k} (a1 x1 + ... + ak xk + y) with y as an extra
    // degree-1 variable, then read D_{k,i} as the coefficient of y^(2^i).
    VarSpace vsy = x_space(k + 1);
    const int y = vsy.x(k + 1);
    Poly f = Poly::one(vsy);
    for (unsigned mask = 0; mask < (1u << k); ++mask)
        f *= detail::linear_form(vsy, mask | (1u << k));

    VarSpace vs = x_space(k);
    std::vector<std::vector<Monomial>> buckets(static_cast<std::size_t>(k) + 1);
    for (const Monomial& t : f.terms()) {
        exp_t ye = t.exponent(y);
        int i = -1;
        for (int b = 0; b <= k; ++b)
            if (ye == (1u << b)) i = b;
        if (i < 0) throw std::logic_error("auxiliary expansion has a non-2-power y exponent");
        Monomial m(vs.total());
        for (int v = 0; v < k; ++v) m.exps[static_cast<std::size_t>(v)] = t.exponent(v);
        buckets[static_cast<std::size_t>(i)].push_back(std::move(m));
    }

    DicksonFamily fam;
    fam.k = k;
    fam.coeffs.reserve(static_cast<std::size_t>(k) + 1);
    for (auto& b : buckets) fam.coeffs.push_back(Poly::from_terms(vs, std::move(b)));
    fam.top = dickson_top(k);

    if (fam.coeffs.back() != Poly::one(vs))
        throw std::logic_error("D_{k,k} is not 1");
    if (fam.coeffs.front() != fam.top)
        throw std::logic_error("D_{k,0} does not match Delta_k");
    if (k >= 2) {
        // Delta_k = Delta_{k-1} x_k (sum_{i=0}^{k-1} D_{k-1,i} x_k^{2^i - 1})
        auto prev = dickson_family(k - 1);
        Poly sum(vs);
        for (int i = 0; i <= k - 1; ++i)
            sum += mul(promote(prev->coeffs[static_cast<std::size_t>(i)], vs),
                       Poly::var(vs, vs.x(k), (1ull << i) - 1).leading_term());
        Poly rebuilt = promote(prev->top, vs) * Poly::var(vs, vs.x(k)) * sum;
        if (rebuilt != fam.top) throw std::logic_error("Dickson recursion mismatch");
    }
    return fam;
}

// The test-space index generator: Delta_k^j / (x1...xk), homogeneous of
// weighted degree (2^k - 1) j - k and symmetric in x1..xk.
struct EulerClass {
    int k = 0;
    int j = 0;
    Poly poly;
};

inline EulerClass euler_class(int k, int j) {
    if (k < 1 || j < 1) throw std::invalid_argument("euler_class requires k, j >= 1");
    const Poly& top = dickson_family(k)->top;
    Poly p = pow(top, static_cast<unsigned long long>(j));
    Monomial all(p.space().total());
    for (int i = 1; i <= k; ++i) all.set_exponent(p.space().x(i), 1);
    // Non-divisibility here would be a bug in the power routine; NonDivisible
    // propagates to the caller.
    return EulerClass{k, j, divide_exact_by_monomial(p, all)};
}

// The other displayed form: prod_i x_i^{j-1} times the product over vectors
// of weight >= 2.  Quadratic cost in expansion size; used for cross-checks.
inline Poly euler_class_product_form(int k, int j) {
    if (k < 1 || j < 1) throw std::invalid_argument("euler_class requires k, j >= 1");
    VarSpace vs = x_space(k);
    Poly acc = Poly::one(vs);
    for (int i = 1; i <= k; ++i)
        acc *= Poly::var(vs, vs.x(i), static_cast<unsigned long long>(j - 1));
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        acc *= pow(detail::linear_form(vs, mask), static_cast<unsigned long long>(j));
    }
    return acc;
}

}  // namespace massign
