#pragma once

// The two Fadell-Husseini index ideals and the ideal-membership engines.
//
// The configuration-space index is generated by beta_r = sum_s x_r^s w_{l-s}
// inside R_{d,l,k} = H*(G_l(R^d))[x1..xk]; the test-space index is principal
// on the Euler class e_{k,j}.  Membership of e_{k,j} has a fast route (a
// per-term exponent check against the monomial ideal <x_1^d,..,x_k^d>) and a
// direct linear-algebra oracle that row reduces one degree slice of the
// ideal.  The x-variables are never truncated; only w-parts reduce.

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dickson.hpp"
#include "f2poly.hpp"
#include "grassmann.hpp"

namespace massign {

inline constexpr std::size_t kDefaultOracleBudget = 2'000'000;

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(unsigned long long needed, std::size_t budget)
        : std::runtime_error("oracle slice needs " + std::to_string(needed) +
                             " matrix cells, budget is " + std::to_string(budget)),
          needed_cells(needed),
          budget_cells(budget) {}

    unsigned long long needed_cells;
    std::size_t budget_cells;
};

enum class IdealKind { configuration, test };

struct IndexIdeal {
    IdealKind kind = IdealKind::configuration;
    int d = 0;
    int ell = 0;
    int k = 0;
    std::vector<Poly> generators;
};

// beta_r = x_r^l + w_1 x_r^{l-1} + ... + w_l over any space with w-block l.
inline Poly config_generator(const VarSpace& vs, int ell, int r) {
    if (vs.w_count != ell) throw std::invalid_argument("config_generator expects w-block of size l");
    std::vector<Monomial> terms;
    terms.reserve(static_cast<std::size_t>(ell) + 1);
    for (int s = 0; s <= ell; ++s) {
        Monomial m(vs.total());
        if (s > 0) m.set_exponent(vs.x(r), static_cast<unsigned long long>(s));
        if (s < ell) m.set_exponent(vs.w(ell - s), 1);
        terms.push_back(std::move(m));
    }
    return Poly::from_terms(vs, std::move(terms));
}

inline IndexIdeal config_index_generators(int d, int ell, int k) {
    validate(GrassmannSpec{d, ell});
    if (k < 1) throw std::invalid_argument("config_index_generators requires k >= 1");
    VarSpace vs{k, ell, 0};
    IndexIdeal ideal{IdealKind::configuration, d, ell, k, {}};
    ideal.generators.reserve(static_cast<std::size_t>(k));
    for (int r = 1; r <= k; ++r) ideal.generators.push_back(config_generator(vs, ell, r));
    return ideal;
}

inline IndexIdeal test_index_ideal(int d, int ell, int k, int j) {
    validate(GrassmannSpec{d, ell});
    return IndexIdeal{IdealKind::test, d, ell, k, {euler_class(k, j).poly}};
}

enum class Engine { fast, oracle };

inline const char* to_string(Engine e) { return e == Engine::fast ? "fast" : "oracle"; }

struct MembershipVerdict {
    bool member = false;
    Engine method = Engine::fast;
    std::optional<Monomial> witness;  // only set by the fast engine, on non-membership
    long long degree_checked = 0;
};

// Membership of e in the monomial ideal <x_1^d, .., x_k^d>: true iff every
// term carries some exponent >= d.  The witness is the first term in
// canonical order with all exponents <= d-1.
inline MembershipVerdict membership_fast(const EulerClass& e, int d) {
    if (d < 1) throw std::invalid_argument("membership_fast requires d >= 1");
    MembershipVerdict v;
    v.method = Engine::fast;
    v.degree_checked = e.poly.is_zero() ? 0 : weighted_degree(e.poly).value();
    for (const Monomial& t : e.poly.terms()) {
        bool escapes = true;
        for (exp_t ex : t.exps)
            if (ex >= d) {
                escapes = false;
                break;
            }
        if (escapes) {
            v.member = false;
            v.witness = t;
            return v;
        }
    }
    v.member = true;
    return v;
}

// Reduces the w-part of every term to its quotient normal form; x-exponents
// pass through untouched.
inline Poly ring_normal_form(const GrassmannSpec& spec, const Poly& p) {
    validate(spec);
    const VarSpace& vs = p.space();
    if (vs.w_count != spec.ell || vs.dual_count != 0)
        throw std::invalid_argument("ring_normal_form expects a dual-free poly with w-block l");
    VarSpace wv = w_space(spec.ell);
    std::map<std::vector<exp_t>, std::vector<Monomial>> groups;
    for (const Monomial& t : p.terms()) {
        std::vector<exp_t> xkey(t.exps.begin(), t.exps.begin() + vs.x_count);
        Monomial wm(spec.ell);
        for (int s = 0; s < spec.ell; ++s) wm.exps[static_cast<std::size_t>(s)] = t.exponent(vs.x_count + s);
        groups[std::move(xkey)].push_back(std::move(wm));
    }
    std::vector<Monomial> out;
    for (auto& [xkey, wterms] : groups) {
        NormalForm nf = normal_form(spec, Poly::from_terms(wv, std::move(wterms)));
        for (const Monomial& wm : nf.reduced.terms()) {
            Monomial m(vs.total());
            for (int i = 0; i < vs.x_count; ++i) m.exps[static_cast<std::size_t>(i)] = xkey[static_cast<std::size_t>(i)];
            for (int s = 0; s < spec.ell; ++s)
                m.exps[static_cast<std::size_t>(vs.x_count + s)] = wm.exponent(s);
            out.push_back(std::move(m));
        }
    }
    return Poly::from_terms(vs, std::move(out));
}

inline bool ring_is_zero(const GrassmannSpec& spec, const Poly& p) {
    return ring_normal_form(spec, p).is_zero();
}

namespace detail {
inline unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    unsigned long long r = 0;
    return __builtin_add_overflow(a, b, &r) ? ULLONG_MAX : r;
}
inline unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    unsigned long long r = 0;
    return __builtin_mul_overflow(a, b, &r) ? ULLONG_MAX : r;
}

inline unsigned long long x_monomial_count(int k, long long degree) {
    // C(degree + k - 1, k - 1)
    unsigned long long r = 1;
    for (int i = 1; i <= k - 1; ++i)
        r = sat_mul(r, static_cast<unsigned long long>(degree + i)) / static_cast<unsigned long long>(i);
    return r;
}
}  // namespace detail

// dim of the degree slice of R_{d,l,k} = sum over x-degrees of the count of
// x-monomials times the Grassmannian rank of the complementary degree.
inline unsigned long long ring_slice_dimension(const GrassmannSpec& spec, int k, long long degree) {
    if (degree < 0) return 0;
    unsigned long long total = 0;
    for (long long a = 0; a <= degree; ++a)
        total = detail::sat_add(
            total, detail::sat_mul(detail::x_monomial_count(k, a), q_binomial(spec.d, spec.ell, degree - a)));
    return total;
}

// One row-reduced degree slice of <beta_1, .., beta_k> inside R_{d,l,k}.
// Columns span the normal-form monomials seen across the generator products.
class OracleSlice {
public:
    OracleSlice(const GrassmannSpec& spec, int k, long long degree, std::size_t budget)
        : spec_(spec), vs_{k, spec.ell, 0}, degree_(degree) {
        const int ell = spec.ell;
        unsigned long long rows = detail::sat_mul(static_cast<unsigned long long>(k),
                                                  ring_slice_dimension(spec, k, degree - ell));
        unsigned long long cols = ring_slice_dimension(spec, k, degree);
        unsigned long long cells = detail::sat_mul(rows, cols);
        if (cells > budget) throw BudgetExceeded(cells, budget);
        if (degree < ell) {
            rows_ = f2rows::EchelonBasis(0);
            return;  // the ideal has no nonzero element below degree l
        }

        std::vector<Poly> row_polys;
        for (int r = 1; r <= k; ++r) {
            Poly beta = config_generator(vs_, ell, r);
            for (const Monomial& u : slice_basis(degree - ell)) {
                Poly rp = ring_normal_form(spec, mul(beta, u));
                if (!rp.is_zero()) row_polys.push_back(std::move(rp));
            }
        }

        for (const Poly& rp : row_polys)
            for (const Monomial& t : rp.terms())
                if (col_of_.emplace(t.exps, 0).second) columns_.push_back(t);
        std::sort(columns_.begin(), columns_.end(),
                  [&](const Monomial& a, const Monomial& b) { return grlex_less(vs_, b, a); });
        for (std::size_t i = 0; i < columns_.size(); ++i) col_of_[columns_[i].exps] = static_cast<int>(i);

        rows_ = f2rows::EchelonBasis(static_cast<int>(columns_.size()));
        for (const Poly& rp : row_polys) rows_.insert(vectorize(rp));
    }

    // Basis monomials of the degree-m slice of R (x-monomials paired with
    // quotient basis monomials of the complementary degree).
    std::vector<Monomial> slice_basis(long long m) const {
        std::vector<Monomial> out;
        VarSpace xv = x_space(vs_.x_count);
        for (long long a = 0; a <= m; ++a) {
            long long wdeg = m - a;
            if (wdeg > top_degree(spec_)) continue;
            std::vector<Monomial> xmons = monomials_of_degree(xv, a);
            std::vector<Monomial> wmons = graded_basis(spec_, wdeg)->basis_monomials();
            for (const Monomial& xm : xmons)
                for (const Monomial& wm : wmons) {
                    Monomial u(vs_.total());
                    for (int i = 0; i < vs_.x_count; ++i)
                        u.exps[static_cast<std::size_t>(i)] = xm.exponent(i);
                    for (int s = 0; s < spec_.ell; ++s)
                        u.exps[static_cast<std::size_t>(vs_.x_count + s)] = wm.exponent(s);
                    out.push_back(std::move(u));
                }
        }
        return out;
    }

    // Does the normal-form representative lie in the row space?
    bool contains(const Poly& reduced_rep) const {
        for (const Monomial& t : reduced_rep.terms())
            if (col_of_.find(t.exps) == col_of_.end()) return false;
        f2rows::BitVec v = vectorize(reduced_rep);
        rows_.reduce(v);
        return !v.any();
    }

    const VarSpace& space() const { return vs_; }
    long long degree() const { return degree_; }
    int rank() const { return rows_.rank(); }

private:
    f2rows::BitVec vectorize(const Poly& p) const {
        f2rows::BitVec bits(static_cast<int>(columns_.size()));
        for (const Monomial& t : p.terms()) bits.set(col_of_.at(t.exps));
        return bits;
    }

    GrassmannSpec spec_;
    VarSpace vs_;
    long long degree_ = 0;
    std::vector<Monomial> columns_;
    std::map<std::vector<exp_t>, int> col_of_;
    f2rows::EchelonBasis rows_;
};

// Direct test of e in <beta_1, .., beta_k> inside R_{d,l,k}: spans the
// degree-D slice of the ideal by generator-times-basis-monomial products,
// row reduces, and checks whether e lies in the row space.
inline MembershipVerdict membership_oracle(const EulerClass& e, int d, int ell, int k,
                                           std::size_t budget = kDefaultOracleBudget) {
    GrassmannSpec spec{d, ell};
    validate(spec);
    if (k != e.k) throw std::invalid_argument("membership_oracle: k does not match the Euler class");
    VarSpace vs{k, ell, 0};
    Poly ep = promote(e.poly, vs);
    MembershipVerdict v;
    v.method = Engine::oracle;
    v.degree_checked = ep.is_zero() ? 0 : weighted_degree(ep).value();
    OracleSlice slice(spec, k, v.degree_checked, budget);
    v.member = slice.contains(ring_normal_form(spec, ep));
    return v;
}

// Verifies (sum_{r'} x^{r'} wb_{d-l-r'}) * beta = x^d in R_{d,l,1}, the
// cofactor identity that places <x_i^d> inside the configuration index.
inline bool cofactor_identity_check(int d, int ell) {
    GrassmannSpec spec{d, ell};
    validate(spec);
    VarSpace vsf{1, ell, d - ell};
    std::vector<Monomial> terms;
    for (int rp = 0; rp <= d - ell; ++rp) {
        Monomial m(vsf.total());
        if (rp > 0) m.set_exponent(vsf.x(1), static_cast<unsigned long long>(rp));
        int dual = d - ell - rp;
        if (dual > 0) m.set_exponent(vsf.wb(dual), 1);
        terms.push_back(std::move(m));
    }
    Poly cofactor = Poly::from_terms(vsf, std::move(terms));
    Poly beta = config_generator(vsf, ell, 1);
    Poly product = eliminate_duals(spec, cofactor * beta);
    VarSpace vs{1, ell, 0};
    Poly xd = Poly::var(vs, vs.x(1), static_cast<unsigned long long>(d));
    return ring_is_zero(spec, product + xd);
}

struct DivisionResult {
    Poly quotient;                      // over {1, l, 0}, coefficients in normal form
    std::vector<Poly> remainder_coeffs;  // a_0 .. a_{l-1}, classes over the w-space
};

// Divides x^{d-1} by beta = x^l + w_1 x^{l-1} + ... + w_l with coefficients
// reduced in H*(G_l(R^d)) at every step, and checks the closed form of the
// remainder coefficients a_r = w_{l-r-1} wb_{d-l}.
inline DivisionResult crabb_division(int d, int ell) {
    GrassmannSpec spec{d, ell};
    validate(spec);
    VarSpace wv = w_space(ell);
    auto reduce = [&](const Poly& p) { return normal_form(spec, p).reduced; };

    std::vector<Poly> rem(static_cast<std::size_t>(d), Poly::zero(wv));
    rem[static_cast<std::size_t>(d - 1)] = Poly::one(wv);
    std::vector<Poly> quot(static_cast<std::size_t>(d - ell), Poly::zero(wv));
    for (int e = d - 1; e >= ell; --e) {
        Poly c = rem[static_cast<std::size_t>(e)];
        if (c.is_zero()) continue;
        quot[static_cast<std::size_t>(e - ell)] = c;
        rem[static_cast<std::size_t>(e)] = Poly::zero(wv);  // cancelled by c * w_0 * x^e
        for (int s = 0; s < ell; ++s) {
            Poly term = mul(c, Poly::var(wv, wv.w(ell - s)).leading_term());
            rem[static_cast<std::size_t>(e - ell + s)] =
                reduce(rem[static_cast<std::size_t>(e - ell + s)] + term);
        }
    }

    auto table = dual_classes(spec);
    const Poly& dual_top = table->entries[static_cast<std::size_t>(d - ell)];
    for (int r = 0; r < ell; ++r) {
        Poly closed = (r == ell - 1)
                          ? dual_top
                          : mul(dual_top, Poly::var(wv, wv.w(ell - r - 1)).leading_term());
        if (reduce(closed) != rem[static_cast<std::size_t>(r)])
            throw std::logic_error("crabb remainder coefficient mismatch at r=" + std::to_string(r));
    }
    if (rem[static_cast<std::size_t>(ell - 1)].is_zero())
        throw std::logic_error("a_{l-1} = wb_{d-l} vanished in the quotient ring");

    DivisionResult result;
    VarSpace vs{1, ell, 0};
    result.quotient = Poly::zero(vs);
    for (int a = 0; a < d - ell; ++a) {
        Monomial xa(vs.total());
        xa.set_exponent(vs.x(1), static_cast<unsigned long long>(a));
        result.quotient += mul(promote(quot[static_cast<std::size_t>(a)], vs), xa);
    }
    result.remainder_coeffs.assign(rem.begin(), rem.begin() + ell);
    return result;
}

}  // namespace massign
