#pragma once

// The mod-2 cohomology of the real Grassmannian G_l(R^d) as a concrete
// graded quotient.  The dual Stiefel-Whitney classes are eliminated through
// the convolution recurrence, leaving the presentation F2[w1..w_l]/J where J
// is generated by the derived dual classes of degrees d-l+1 .. d.  Each
// degree slice of J is spanned by generator-times-monomial products and row
// reduced; ranks are cross-checkable against the Gaussian binomial.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "bitrows.hpp"
#include "f2poly.hpp"
#include "memo.hpp"

namespace massign {

struct GrassmannSpec {
    int d = 0;
    int ell = 0;

    bool operator==(const GrassmannSpec&) const = default;
};

inline void validate(const GrassmannSpec& spec) {
    if (spec.ell < 1 || spec.ell > spec.d - 1)
        throw std::invalid_argument("GrassmannSpec requires 1 <= l <= d-1");
}

// Top nonvanishing degree l(d-l); everything above reduces to zero.
inline long long top_degree(const GrassmannSpec& spec) {
    return static_cast<long long>(spec.ell) * (spec.d - spec.ell);
}

inline VarSpace w_space(int ell) { return VarSpace{0, ell, 0}; }

// All monomials of the given weighted degree, descending canonical order.
inline std::vector<Monomial> monomials_of_degree(const VarSpace& vs, long long degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial cur(vs.total());
    auto rec = [&](auto&& self, int v, long long rem) -> void {
        if (v < 0) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        long long wt = vs.weight(v);
        long long max_e = rem / wt;
        if (max_e > static_cast<long long>(kExponentCap)) max_e = kExponentCap;
        for (long long e = 0; e <= max_e; ++e) {
            cur.set_exponent(v, static_cast<unsigned long long>(e));
            self(self, v - 1, rem - e * wt);
        }
        cur.set_exponent(v, 0);
    };
    rec(rec, vs.total() - 1, degree);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return grlex_less(vs, b, a); });
    return out;
}

// Dual classes solved from (1 + w1 + ... + w_l)(1 + wb1 + ... ) = 1:
// entry 0 is 1 and entry r = sum_{s=1..min(r,l)} w_s * entry(r-s).  Entries
// r = d-l+1 .. d are the relation generators of the quotient presentation.
struct DualClassTable {
    GrassmannSpec spec;
    std::vector<Poly> entries;  // index 0..d, each over w_space(l)
};

namespace detail {
inline MemoCache<std::pair<int, int>, DualClassTable>& dual_class_cache() {
    static MemoCache<std::pair<int, int>, DualClassTable> cache;
    return cache;
}
}  // namespace detail

inline std::shared_ptr<const DualClassTable> dual_classes(const GrassmannSpec& spec) {
    validate(spec);
    return detail::dual_class_cache().get_or_fill({spec.d, spec.ell}, [&] {
        VarSpace vs = w_space(spec.ell);
        DualClassTable table{spec, {}};
        table.entries.reserve(static_cast<std::size_t>(spec.d) + 1);
        table.entries.push_back(Poly::one(vs));
        for (int r = 1; r <= spec.d; ++r) {
            Poly acc(vs);
            for (int s = 1; s <= std::min(r, spec.ell); ++s)
                acc += mul(table.entries[static_cast<std::size_t>(r - s)],
                           Poly::var(vs, vs.w(s)).leading_term());
            table.entries.push_back(std::move(acc));
        }
        return table;
    });
}

// One degree slice of the quotient ring: the monomial list of the degree,
// the row-reduced ideal slice, and the surviving quotient basis columns.
class GradedBasis {
public:
    GradedBasis(GrassmannSpec spec, long long degree) : spec_(spec), degree_(degree) {
        VarSpace vs = w_space(spec.ell);
        monomials_ = monomials_of_degree(vs, degree);
        for (std::size_t i = 0; i < monomials_.size(); ++i)
            col_index_.emplace(monomials_[i].exps, static_cast<int>(i));
        reduction_ = f2rows::EchelonBasis(static_cast<int>(monomials_.size()));
        auto table = dual_classes(spec);
        for (int r = spec.d - spec.ell + 1; r <= spec.d; ++r) {
            if (r > degree) continue;
            for (const Monomial& u : monomials_of_degree(vs, degree - r))
                reduction_.insert(vectorize(mul(table->entries[static_cast<std::size_t>(r)], u)));
        }
        for (int c = 0; c < static_cast<int>(monomials_.size()); ++c)
            if (!reduction_.is_pivot(c)) quotient_cols_.push_back(c);
    }

    long long degree() const { return degree_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    const f2rows::EchelonBasis& reduction() const { return reduction_; }
    const std::vector<int>& quotient_cols() const { return quotient_cols_; }
    int rank() const { return static_cast<int>(quotient_cols_.size()); }

    std::vector<Monomial> basis_monomials() const {
        std::vector<Monomial> out;
        out.reserve(quotient_cols_.size());
        for (int c : quotient_cols_) out.push_back(monomials_[static_cast<std::size_t>(c)]);
        return out;
    }

    f2rows::BitVec vectorize(const Poly& p) const {
        f2rows::BitVec v(static_cast<int>(monomials_.size()));
        for (const Monomial& t : p.terms()) {
            auto it = col_index_.find(t.exps);
            if (it == col_index_.end())
                throw std::logic_error("monomial outside the degree slice");
            v.set(it->second);
        }
        return v;
    }

    Poly devectorize(const f2rows::BitVec& v) const {
        std::vector<Monomial> terms;
        for (int c = 0; c < static_cast<int>(monomials_.size()); ++c)
            if (v.test(c)) terms.push_back(monomials_[static_cast<std::size_t>(c)]);
        return Poly::from_terms(w_space(spec_.ell), std::move(terms));
    }

private:
    GrassmannSpec spec_;
    long long degree_ = 0;
    std::vector<Monomial> monomials_;
    std::map<std::vector<exp_t>, int> col_index_;
    f2rows::EchelonBasis reduction_;
    std::vector<int> quotient_cols_;
};

namespace detail {
struct GradedBasisHolder {
    GradedBasis basis;
};

inline MemoCache<std::tuple<int, int, long long>, GradedBasisHolder>& graded_basis_cache() {
    static MemoCache<std::tuple<int, int, long long>, GradedBasisHolder> cache;
    return cache;
}
}  // namespace detail

inline std::shared_ptr<const GradedBasis> graded_basis(const GrassmannSpec& spec,
                                                       long long degree) {
    validate(spec);
    if (degree < 0 || degree > top_degree(spec))
        throw std::out_of_range("degree outside 0 .. l(d-l)");
    auto holder = detail::graded_basis_cache().get_or_fill(
        {spec.d, spec.ell, degree}, [&] { return detail::GradedBasisHolder{GradedBasis(spec, degree)}; });
    return std::shared_ptr<const GradedBasis>(holder, &holder->basis);
}

// Class of p in the quotient ring, one coordinate vector per degree present
// in p.  Components above the top degree are zero by convention.
struct NormalForm {
    std::map<long long, std::vector<std::uint8_t>> coordinates;
    Poly reduced;

    bool is_zero() const {
        for (const auto& [deg, coords] : coordinates)
            for (std::uint8_t c : coords)
                if (c) return false;
        return true;
    }
};

inline NormalForm normal_form(const GrassmannSpec& spec, const Poly& p) {
    validate(spec);
    const VarSpace& src = p.space();
    if (src.w_count != spec.ell)
        throw std::invalid_argument("normal_form expects w-variable count l");
    for (const Monomial& t : p.terms())
        for (int v = 0; v < src.total(); ++v)
            if (t.exponent(v) != 0 && !(v >= src.x_count && v < src.x_count + src.w_count))
                throw std::invalid_argument("normal_form expects a polynomial in w1..w_l only");

    VarSpace vs = w_space(spec.ell);
    std::map<long long, std::vector<Monomial>> by_degree;
    for (const Monomial& t : p.terms()) {
        Monomial m(vs.total());
        for (int s = 0; s < spec.ell; ++s) m.exps[static_cast<std::size_t>(s)] = t.exponent(src.x_count + s);
        by_degree[m.weighted_degree(vs)].push_back(std::move(m));
    }

    NormalForm out;
    out.reduced = Poly::zero(vs);
    for (auto& [deg, terms] : by_degree) {
        if (deg > top_degree(spec)) {
            out.coordinates[deg] = {};  // rank 0 slice, zero by fiat
            continue;
        }
        auto gb = graded_basis(spec, deg);
        f2rows::BitVec v = gb->vectorize(Poly::from_terms(vs, std::move(terms)));
        gb->reduction().reduce(v);
        std::vector<std::uint8_t> coords;
        coords.reserve(gb->quotient_cols().size());
        for (int c : gb->quotient_cols()) coords.push_back(v.test(c) ? 1 : 0);
        out.coordinates[deg] = std::move(coords);
        out.reduced += gb->devectorize(v);
    }
    return out;
}

inline bool is_zero_in_ring(const GrassmannSpec& spec, const Poly& p) {
    return normal_form(spec, p).is_zero();
}

namespace detail {
inline unsigned long long checked_add(unsigned long long a, unsigned long long b) {
    unsigned long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("q_binomial overflow");
    return r;
}
}  // namespace detail

// Coefficient of q^degree in the Gaussian binomial [d choose l]_q, by the
// q-Pascal recurrence.  Independent of the polynomial machinery; serves as
// the dimension oracle for graded_basis ranks.
inline unsigned long long q_binomial(int d, int ell, long long degree) {
    validate(GrassmannSpec{d, ell});
    if (degree < 0 || degree > static_cast<long long>(ell) * (d - ell)) return 0;
    // row[i] holds the coefficient vector of [m choose i]_q
    std::vector<std::vector<unsigned long long>> row(static_cast<std::size_t>(ell) + 1);
    row[0] = {1};
    for (int m = 1; m <= d; ++m) {
        std::vector<std::vector<unsigned long long>> next(static_cast<std::size_t>(ell) + 1);
        next[0] = {1};
        for (int i = 1; i <= std::min(m, ell); ++i) {
            const auto& left = row[static_cast<std::size_t>(i - 1)];  // [m-1 choose i-1]
            const auto& up = row[static_cast<std::size_t>(i)];        // [m-1 choose i]
            std::vector<unsigned long long> coeffs = left;
            if (!up.empty()) {
                std::size_t need = up.size() + static_cast<std::size_t>(i);
                if (coeffs.size() < need) coeffs.resize(need, 0);
                for (std::size_t t = 0; t < up.size(); ++t)
                    coeffs[t + static_cast<std::size_t>(i)] =
                        detail::checked_add(coeffs[t + static_cast<std::size_t>(i)], up[t]);
            }
            next[static_cast<std::size_t>(i)] = std::move(coeffs);
        }
        row = std::move(next);
    }
    const auto& coeffs = row[static_cast<std::size_t>(ell)];
    return static_cast<std::size_t>(degree) < coeffs.size()
               ? coeffs[static_cast<std::size_t>(degree)]
               : 0;
}

// (w_l^{d-l} != 0, wb_{d-l}^l != 0) in the quotient ring.
inline std::pair<bool, bool> nonvanishing_certificates(const GrassmannSpec& spec) {
    validate(spec);
    VarSpace vs = w_space(spec.ell);
    Poly w_top = Poly::var(vs, vs.w(spec.ell));
    bool w_cert = !is_zero_in_ring(spec, pow(w_top, static_cast<unsigned long long>(spec.d - spec.ell)));
    const Poly& dual_top = dual_classes(spec)->entries[static_cast<std::size_t>(spec.d - spec.ell)];
    bool dual_cert = !is_zero_in_ring(spec, pow(dual_top, static_cast<unsigned long long>(spec.ell)));
    return {w_cert, dual_cert};
}

// Rewrites every wb_r through the dual class table; result has no dual block.
inline Poly eliminate_duals(const GrassmannSpec& spec, const Poly& p) {
    validate(spec);
    const VarSpace& src = p.space();
    if (src.w_count != spec.ell)
        throw std::invalid_argument("eliminate_duals expects w-variable count l");
    if (src.dual_count > spec.d - spec.ell)
        throw std::invalid_argument("dual variables beyond wb_{d-l} do not exist in the ring");
    VarSpace out_vs{src.x_count, src.w_count, 0};
    auto table = dual_classes(spec);
    Poly acc(out_vs);
    for (const Monomial& t : p.terms()) {
        Monomial base(out_vs.total());
        for (int v = 0; v < src.x_count + src.w_count; ++v) base.exps[static_cast<std::size_t>(v)] = t.exponent(v);
        Poly factor = Poly::one(out_vs);
        for (int r = 1; r <= src.dual_count; ++r) {
            exp_t e = t.exponent(src.wb(r));
            if (e == 0) continue;
            factor *= pow(promote(table->entries[static_cast<std::size_t>(r)], out_vs), e);
        }
        acc += mul(factor, base);
    }
    return acc;
}

}  // namespace massign
