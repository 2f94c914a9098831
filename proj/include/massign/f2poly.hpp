#pragma once

// Exact multivariate polynomial arithmetic over F2.
//
// The ambient variable space carries three blocks of variables in a fixed
// order: x1..x_k of degree 1, w1..w_l of degree s for w_s, and the dual
// classes wb1..wb_m of degree r for wb_r.  A polynomial is a set of
// monomials (all coefficients are 1); addition is symmetric difference.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace massign {

using exp_t = std::uint16_t;

// Hard cap on a single exponent, checked on every multiplication.
inline constexpr unsigned long long kExponentCap = 0xFFFFull;

struct ExponentOverflow : std::overflow_error {
    ExponentOverflow() : std::overflow_error("monomial exponent exceeds cap 65535") {}
};

struct VarSpaceMismatch : std::invalid_argument {
    VarSpaceMismatch() : std::invalid_argument("operands live in different variable spaces") {}
};

struct VarSpace {
    int x_count = 0;
    int w_count = 0;
    int dual_count = 0;

    int total() const { return x_count + w_count + dual_count; }

    // 1-based variable ids, as in x1, w2, wb3.
    int x(int i) const {
        require(i >= 1 && i <= x_count, "x index out of range");
        return i - 1;
    }
    int w(int s) const {
        require(s >= 1 && s <= w_count, "w index out of range");
        return x_count + s - 1;
    }
    int wb(int r) const {
        require(r >= 1 && r <= dual_count, "wb index out of range");
        return x_count + w_count + r - 1;
    }

    // Weighted degree of a single variable: deg(x_i)=1, deg(w_s)=s, deg(wb_r)=r.
    long long weight(int v) const {
        if (v < x_count) return 1;
        if (v < x_count + w_count) return v - x_count + 1;
        return v - x_count - w_count + 1;
    }

    std::string var_name(int v) const {
        if (v < x_count) return "x" + std::to_string(v + 1);
        if (v < x_count + w_count) return "w" + std::to_string(v - x_count + 1);
        return "wb" + std::to_string(v - x_count - w_count + 1);
    }

    bool operator==(const VarSpace&) const = default;

private:
    static void require(bool ok, const char* msg) {
        if (!ok) throw std::out_of_range(msg);
    }
};

struct Monomial {
    std::vector<exp_t> exps;

    Monomial() = default;
    explicit Monomial(int var_count) : exps(static_cast<std::size_t>(var_count), 0) {}

    int var_count() const { return static_cast<int>(exps.size()); }

    exp_t exponent(int v) const { return exps[static_cast<std::size_t>(v)]; }

    void set_exponent(int v, unsigned long long e) {
        if (e > kExponentCap) throw ExponentOverflow{};
        exps[static_cast<std::size_t>(v)] = static_cast<exp_t>(e);
    }

    bool is_unit() const {
        return std::all_of(exps.begin(), exps.end(), [](exp_t e) { return e == 0; });
    }

    long long weighted_degree(const VarSpace& vs) const {
        long long d = 0;
        for (int v = 0; v < var_count(); ++v)
            d += static_cast<long long>(exps[static_cast<std::size_t>(v)]) * vs.weight(v);
        return d;
    }

    // Does this monomial divide `other`?
    bool divides(const Monomial& other) const {
        for (std::size_t v = 0; v < exps.size(); ++v)
            if (exps[v] > other.exps[v]) return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.var_count());
    for (std::size_t v = 0; v < a.exps.size(); ++v) {
        unsigned long long s =
            static_cast<unsigned long long>(a.exps[v]) + static_cast<unsigned long long>(b.exps[v]);
        if (s > kExponentCap) throw ExponentOverflow{};
        r.exps[v] = static_cast<exp_t>(s);
    }
    return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.var_count());
    for (std::size_t v = 0; v < a.exps.size(); ++v)
        r.exps[v] = static_cast<exp_t>(a.exps[v] - b.exps[v]);
    return r;
}

// Canonical term order: graded lexicographic.  Lower weighted degree sorts
// first; ties break on the exponent tuple read from x1 onward, a larger
// exponent on the earlier variable making the larger monomial.
inline bool grlex_less(const VarSpace& vs, const Monomial& a, const Monomial& b) {
    long long da = a.weighted_degree(vs);
    long long db = b.weighted_degree(vs);
    if (da != db) return da < db;
    return a.exps < b.exps;
}

inline std::string to_string(const VarSpace& vs, const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (int v = 0; v < m.var_count(); ++v) {
        exp_t e = m.exponent(v);
        if (e == 0) continue;
        s += vs.var_name(v);
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

class NonDivisible : public std::domain_error {
public:
    NonDivisible(const VarSpace& vs, Monomial term)
        : std::domain_error("term " + massign::to_string(vs, term) + " is not divisible by the divisor"),
          offending_term(std::move(term)) {}

    Monomial offending_term;
};

// A polynomial over F2: distinct monomials stored in descending canonical
// order (leading term first).  Immutable after construction.
class Poly {
public:
    Poly() = default;
    explicit Poly(VarSpace vs) : vs_(std::move(vs)) {}

    static Poly zero(const VarSpace& vs) { return Poly(vs); }

    static Poly one(const VarSpace& vs) {
        Poly p(vs);
        p.terms_.emplace_back(vs.total());
        return p;
    }

    static Poly monomial(const VarSpace& vs, Monomial m) {
        check_width(vs, m);
        Poly p(vs);
        p.terms_.push_back(std::move(m));
        return p;
    }

    static Poly var(const VarSpace& vs, int v, unsigned long long e = 1) {
        Monomial m(vs.total());
        m.set_exponent(v, e);
        return monomial(vs, std::move(m));
    }

    // Normalizes: sorts descending and cancels duplicate pairs (char 2).
    static Poly from_terms(const VarSpace& vs, std::vector<Monomial> terms) {
        for (const Monomial& m : terms) check_width(vs, m);
        Poly p(vs);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const VarSpace& space() const { return vs_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_one() const { return terms_.size() == 1 && terms_.front().is_unit(); }

    const Monomial& leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
        return terms_.front();
    }

    bool operator==(const Poly&) const = default;

private:
    friend Poly add(const Poly&, const Poly&);
    friend Poly mul(const Poly&, const Poly&);
    friend Poly mul(const Poly&, const Monomial&);
    friend Poly frobenius(const Poly&, unsigned);
    friend Poly divide_exact_by_monomial(const Poly&, const Monomial&);
    friend Poly promote(const Poly&, const VarSpace&);

    static void check_width(const VarSpace& vs, const Monomial& m) {
        if (m.var_count() != vs.total())
            throw std::invalid_argument("monomial width does not match variable space");
    }

    void normalize() {
        auto desc = [this](const Monomial& a, const Monomial& b) { return grlex_less(vs_, b, a); };
        std::sort(terms_.begin(), terms_.end(), desc);
        std::size_t out = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            std::size_t run = i + 1;
            while (run < terms_.size() && terms_[run] == terms_[i]) ++run;
            if ((run - i) & 1) {
                if (out != i) terms_[out] = std::move(terms_[i]);
                ++out;
            }
            i = run;
        }
        terms_.resize(out);
    }

    VarSpace vs_;
    std::vector<Monomial> terms_;
};

// Symmetric difference of term sets; add(p, p) = 0.
inline Poly add(const Poly& p, const Poly& q) {
    if (p.space() != q.space()) throw VarSpaceMismatch{};
    Poly r(p.space());
    auto desc = [&](const Monomial& a, const Monomial& b) { return grlex_less(p.space(), b, a); };
    std::set_symmetric_difference(p.terms().begin(), p.terms().end(), q.terms().begin(),
                                  q.terms().end(), std::back_inserter(r.terms_), desc);
    return r;
}

// Multiplication by a single monomial preserves the term order.
inline Poly mul(const Poly& p, const Monomial& m) {
    Poly::check_width(p.space(), m);
    Poly r(p.space());
    r.terms_.reserve(p.term_count());
    for (const Monomial& t : p.terms()) r.terms_.push_back(mono_mul(t, m));
    return r;
}

inline Poly mul(const Poly& p, const Poly& q) {
    if (p.space() != q.space()) throw VarSpaceMismatch{};
    std::vector<Monomial> acc;
    acc.reserve(p.term_count() * q.term_count());
    for (const Monomial& a : p.terms())
        for (const Monomial& b : q.terms()) acc.push_back(mono_mul(a, b));
    return Poly::from_terms(p.space(), std::move(acc));
}

// p^(2^a): the Frobenius shortcut.  Over F2 squaring kills all cross terms,
// so the power just scales every exponent by 2^a, term for term.
inline Poly frobenius(const Poly& p, unsigned a) {
    Poly r(p.space());
    r.terms_.reserve(p.term_count());
    for (const Monomial& t : p.terms()) {
        Monomial m(t.var_count());
        for (int v = 0; v < t.var_count(); ++v)
            m.set_exponent(v, static_cast<unsigned long long>(t.exponent(v)) << a);
        r.terms_.push_back(std::move(m));
    }
    return r;
}

// p^n by binary decomposition of n over Frobenius factors.
inline Poly pow(const Poly& p, unsigned long long n) {
    if (n == 0) return Poly::one(p.space());
    Poly result;
    bool have = false;
    for (unsigned a = 0; n >> a; ++a) {
        if (!((n >> a) & 1ull)) continue;
        Poly f = frobenius(p, a);
        result = have ? mul(result, f) : std::move(f);
        have = true;
    }
    return result;
}

// Exact division by a monomial; every term must be divisible.
inline Poly divide_exact_by_monomial(const Poly& p, const Monomial& m) {
    Poly::check_width(p.space(), m);
    Poly r(p.space());
    r.terms_.reserve(p.term_count());
    for (const Monomial& t : p.terms()) {
        if (!m.divides(t)) throw NonDivisible(p.space(), t);
        r.terms_.push_back(mono_div(t, m));
    }
    return r;
}

// Common weighted degree of a homogeneous polynomial; nullopt if mixed.
inline std::optional<long long> weighted_degree(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("weighted_degree of zero polynomial");
    long long d = p.terms().front().weighted_degree(p.space());
    for (const Monomial& t : p.terms())
        if (t.weighted_degree(p.space()) != d) return std::nullopt;
    return d;
}

inline bool is_homogeneous(const Poly& p) {
    return p.is_zero() || weighted_degree(p).has_value();
}

// Reinterpret p in a larger space (blockwise: x->x, w->w, wb->wb).
inline Poly promote(const Poly& p, const VarSpace& target) {
    const VarSpace& src = p.space();
    if (target.x_count < src.x_count || target.w_count < src.w_count ||
        target.dual_count < src.dual_count)
        throw std::invalid_argument("promote target space too small");
    if (target == src) return p;
    Poly r(target);
    r.terms_.reserve(p.term_count());
    for (const Monomial& t : p.terms()) {
        Monomial m(target.total());
        for (int i = 0; i < src.x_count; ++i) m.exps[static_cast<std::size_t>(i)] = t.exponent(i);
        for (int s = 0; s < src.w_count; ++s)
            m.exps[static_cast<std::size_t>(target.x_count + s)] = t.exponent(src.x_count + s);
        for (int u = 0; u < src.dual_count; ++u)
            m.exps[static_cast<std::size_t>(target.x_count + target.w_count + u)] =
                t.exponent(src.x_count + src.w_count + u);
        r.terms_.push_back(std::move(m));
    }
    // Blockwise padding with zero exponents preserves the canonical order.
    return r;
}

inline Poly operator+(const Poly& p, const Poly& q) { return add(p, q); }
inline Poly operator*(const Poly& p, const Poly& q) { return mul(p, q); }
inline Poly& operator+=(Poly& p, const Poly& q) { return p = add(p, q); }
inline Poly& operator*=(Poly& p, const Poly& q) { return p = mul(p, q); }

// Canonical text rendering: descending term order, " + " separated, "0" for zero.
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
        if (i) s += " + ";
        s += to_string(p.space(), p.terms()[i]);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace massign
