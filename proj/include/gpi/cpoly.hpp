#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "gpi/rational.hpp"

namespace gpi {

// Generic matrix parameters a_i, b_i, c_i. Ordered a1 < b1 < c1 < a2 < ...
enum class ParamKind : int { a = 0, b = 1, c = 2 };

struct CVar {
    ParamKind kind;
    int index; // >= 1

    friend std::strong_ordering operator<=>(const CVar& u, const CVar& v) {
        if (auto c = u.index <=> v.index; c != 0) return c;
        return static_cast<int>(u.kind) <=> static_cast<int>(v.kind);
    }
    friend bool operator==(const CVar&, const CVar&) = default;

    std::string to_string() const {
        static const char* names[] = {"a", "b", "c"};
        return names[static_cast<int>(kind)] + std::to_string(index);
    }
};

// Commutative monomial: sparse exponent map, no zero exponents stored.
class CMonomial {
public:
    CMonomial() = default;

    static CMonomial variable(CVar v, int exp = 1) {
        CMonomial m;
        if (exp != 0) m.exp_[v] = exp;
        return m;
    }

    bool is_one() const { return exp_.empty(); }
    int degree() const {
        int d = 0;
        for (auto& [v, e] : exp_) d += e;
        return d;
    }
    int exponent(CVar v) const {
        auto it = exp_.find(v);
        return it == exp_.end() ? 0 : it->second;
    }
    const std::map<CVar, int>& exponents() const { return exp_; }

    friend CMonomial operator*(const CMonomial& m, const CMonomial& n) {
        CMonomial r = m;
        for (auto& [v, e] : n.exp_) {
            int& x = r.exp_[v];
            x += e;
            if (x == 0) r.exp_.erase(v);
        }
        return r;
    }

    friend bool operator==(const CMonomial&, const CMonomial&) = default;

    std::string to_string() const {
        if (exp_.empty()) return "1";
        std::string s;
        bool first = true;
        for (auto& [v, e] : exp_) {
            if (!first) s += "*";
            s += v.to_string();
            if (e != 1) s += "^" + std::to_string(e);
            first = false;
        }
        return s;
    }

private:
    std::map<CVar, int> exp_;
};

// Degree-lexicographic term order used for canonical storage and printing:
// higher total degree first; ties broken on the earliest variable (in CVar
// order) with differing exponent, larger exponent first.
struct MonomialBefore {
    bool operator()(const CMonomial& m, const CMonomial& n) const {
        int dm = m.degree(), dn = n.degree();
        if (dm != dn) return dm > dn;
        auto i = m.exponents().begin(), iend = m.exponents().end();
        auto j = n.exponents().begin(), jend = n.exponents().end();
        while (i != iend && j != jend) {
            if (i->first != j->first) return i->first < j->first;
            if (i->second != j->second) return i->second > j->second;
            ++i, ++j;
        }
        return i != iend; // longer tail of leading variables first
    }
};

// Sparse multivariate polynomial over Q in the generic parameters.
// Canonical form: no zero coefficients stored.
class CPoly {
public:
    using TermMap = std::map<CMonomial, Rational, MonomialBefore>;

    CPoly() = default;
    CPoly(int n) { if (n != 0) terms_[CMonomial{}] = Rational(n); }
    CPoly(long long n) { if (n != 0) terms_[CMonomial{}] = Rational(n); }
    CPoly(const Rational& r) { if (!r.is_zero()) terms_[CMonomial{}] = r; }

    static CPoly variable(CVar v) {
        CPoly p;
        p.terms_[CMonomial::variable(v)] = Rational(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int degree() const {
        return terms_.empty() ? 0 : terms_.begin()->first.degree();
    }
    Rational coefficient(const CMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    CPoly& operator+=(const CPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    CPoly& operator-=(const CPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend CPoly operator+(CPoly p, const CPoly& q) { p += q; return p; }
    friend CPoly operator-(CPoly p, const CPoly& q) { p -= q; return p; }
    friend CPoly operator-(const CPoly& p) {
        CPoly r;
        for (auto& [m, c] : p.terms_) r.terms_[m] = -c;
        return r;
    }
    friend CPoly operator*(const CPoly& p, const CPoly& q) {
        CPoly r;
        for (auto& [m, c] : p.terms_)
            for (auto& [n, d] : q.terms_) r.add_term(m * n, c * d);
        return r;
    }
    CPoly& operator*=(const CPoly& o) { return *this = *this * o; }

    friend bool operator==(const CPoly&, const CPoly&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) s += "-";
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            if (m.is_one()) {
                s += a.to_string();
            } else {
                if (!a.is_one()) s += a.to_string() + "*";
                s += m.to_string();
            }
            first = false;
        }
        return s;
    }

private:
    void add_term(const CMonomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline bool cpoly_is_zero(const CPoly& p) { return p.is_zero(); }
inline CPoly cpoly_add(const CPoly& p, const CPoly& q) { return p + q; }
inline CPoly cpoly_mul(const CPoly& p, const CPoly& q) { return p * q; }

// Parameter shorthands matching the generic matrices.
inline CPoly pa(int i) { return CPoly::variable({ParamKind::a, i}); }
inline CPoly pb(int i) { return CPoly::variable({ParamKind::b, i}); }
inline CPoly pc(int i) { return CPoly::variable({ParamKind::c, i}); }

} // namespace gpi
