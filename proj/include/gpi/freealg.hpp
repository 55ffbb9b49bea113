#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gpi/rational.hpp"

namespace gpi {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity p, Parity q) {
    return static_cast<Parity>((static_cast<int>(p) + static_cast<int>(q)) % 2);
}

// Graded variable: even variables print as y<i>, odd as z<i>.
// Canonical order y1 < z1 < y2 < z2 < ...
struct Variable {
    Parity parity;
    int index; // >= 1

    friend std::strong_ordering operator<=>(const Variable& u, const Variable& v) {
        if (auto c = u.index <=> v.index; c != 0) return c;
        return static_cast<int>(u.parity) <=> static_cast<int>(v.parity);
    }
    friend bool operator==(const Variable&, const Variable&) = default;

    std::string to_string() const {
        return (parity == Parity::even ? "y" : "z") + std::to_string(index);
    }
};

inline Variable yv(int i) { return {Parity::even, i}; }
inline Variable zv(int i) { return {Parity::odd, i}; }

// Word in the free algebra; the empty word is the unit.
struct Word {
    std::vector<Variable> letters;

    Word() = default;
    Word(std::initializer_list<Variable> ls) : letters(ls) {}
    explicit Word(std::vector<Variable> ls) : letters(std::move(ls)) {}

    std::size_t size() const { return letters.size(); }
    bool is_unit() const { return letters.empty(); }

    Parity parity() const {
        int odd = 0;
        for (auto& v : letters) odd += v.parity == Parity::odd;
        return static_cast<Parity>(odd % 2);
    }

    friend Word operator*(const Word& u, const Word& v) {
        Word w = u;
        w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
        return w;
    }

    // Canonical word order: by length, then lexicographically.
    friend std::strong_ordering operator<=>(const Word& u, const Word& v) {
        if (auto c = u.letters.size() <=> v.letters.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(
            u.letters.begin(), u.letters.end(), v.letters.begin(), v.letters.end());
    }
    friend bool operator==(const Word&, const Word&) = default;

    std::string to_string() const {
        if (letters.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) s += "*";
            s += letters[i].to_string();
        }
        return s;
    }
};

// Multidegree of a multihomogeneous polynomial: variable -> positive count.
struct Multidegree {
    std::map<Variable, int> degrees;

    static Multidegree of_word(const Word& w) {
        Multidegree d;
        for (auto& v : w.letters) d.degrees[v] += 1;
        return d;
    }

    int total() const {
        int t = 0;
        for (auto& [v, k] : degrees) t += k;
        return t;
    }
    bool is_multilinear() const {
        for (auto& [v, k] : degrees)
            if (k != 1) return false;
        return true;
    }
    std::vector<Variable> variables() const {
        std::vector<Variable> vs;
        for (auto& [v, k] : degrees) vs.push_back(v);
        return vs;
    }

    friend Multidegree operator+(const Multidegree& a, const Multidegree& b) {
        Multidegree d = a;
        for (auto& [v, k] : b.degrees) d.degrees[v] += k;
        return d;
    }
    friend bool operator==(const Multidegree&, const Multidegree&) = default;
    friend std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b) {
        return std::lexicographical_compare_three_way(
            a.degrees.begin(), a.degrees.end(), b.degrees.begin(), b.degrees.end());
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (auto& [v, k] : degrees) {
            if (!first) s += ", ";
            s += v.to_string() + ":" + std::to_string(k);
            first = false;
        }
        return s + "}";
    }
};

// Element of the free Z2-graded associative algebra: rational-weighted
// formal sum of words. Canonical form: no zero coefficients stored.
class NCPoly {
public:
    using TermMap = std::map<Word, Rational>;

    NCPoly() = default;
    NCPoly(int n) { if (n != 0) terms_[Word{}] = Rational(n); }
    NCPoly(const Rational& r) { if (!r.is_zero()) terms_[Word{}] = r; }
    NCPoly(Variable v) { terms_[Word{{v}}] = Rational(1); }
    NCPoly(const Word& w) { terms_[w] = Rational(1); }

    static NCPoly one() { return NCPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Word& w, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::set<Variable> variables() const {
        std::set<Variable> vs;
        for (auto& [w, c] : terms_)
            vs.insert(w.letters.begin(), w.letters.end());
        return vs;
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    friend NCPoly operator+(NCPoly f, const NCPoly& g) { f += g; return f; }
    friend NCPoly operator-(NCPoly f, const NCPoly& g) { f -= g; return f; }
    friend NCPoly operator-(const NCPoly& f) {
        NCPoly r;
        for (auto& [w, c] : f.terms_) r.terms_[w] = -c;
        return r;
    }
    friend NCPoly operator*(const NCPoly& f, const NCPoly& g) {
        NCPoly r;
        for (auto& [w, c] : f.terms_)
            for (auto& [u, d] : g.terms_) r.add_term(w * u, c * d);
        return r;
    }
    friend NCPoly operator*(const Rational& c, const NCPoly& f) {
        NCPoly r;
        if (c.is_zero()) return r;
        for (auto& [w, d] : f.terms_) r.terms_[w] = c * d;
        return r;
    }
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    friend bool operator==(const NCPoly&, const NCPoly&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [w, c] : terms_) {
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) s += "-";
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            if (w.is_unit()) {
                s += a.to_string();
            } else {
                if (!a.is_one()) s += a.to_string() + "*";
                s += w.to_string();
            }
            first = false;
        }
        return s;
    }

private:
    TermMap terms_;
};

inline NCPoly nc_mul(const NCPoly& f, const NCPoly& g) { return f * g; }

inline NCPoly word(std::initializer_list<Variable> letters) {
    return NCPoly(Word(letters));
}

inline NCPoly word(const std::vector<Variable>& letters) {
    return NCPoly(Word(letters));
}

// Left-normed commutator [x1,...,xn] = [[x1,...,x(n-1)], xn], [a,b] = ab - ba.
inline NCPoly bracket(const std::vector<NCPoly>& args) {
    if (args.size() < 2) throw error("bracket needs at least two arguments");
    NCPoly acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i)
        acc = acc * args[i] - args[i] * acc;
    return acc;
}

template <typename... Ts>
NCPoly bracket(const NCPoly& a, const NCPoly& b, const Ts&... rest) {
    return bracket(std::vector<NCPoly>{a, b, rest...});
}

inline NCPoly jordan_product(const NCPoly& f, const NCPoly& g) {
    return f * g + g * f;
}

// Standard polynomial: alternating sum over all orderings of the arguments.
inline NCPoly standard_poly(const std::vector<NCPoly>& vars) {
    if (vars.empty()) throw error("standard polynomial of zero arguments");
    const std::size_t n = vars.size();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    NCPoly r;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += idx[i] > idx[j];
        NCPoly prod = vars[idx[0]];
        for (std::size_t i = 1; i < n; ++i) prod *= vars[idx[i]];
        if (inversions % 2)
            r -= prod;
        else
            r += prod;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return r;
}

// Parity of a parity-homogeneous polynomial; nullopt for 0 or mixed input.
inline std::optional<Parity> homogeneous_parity(const NCPoly& f) {
    std::optional<Parity> p;
    for (auto& [w, c] : f.terms()) {
        Parity q = w.parity();
        if (!p)
            p = q;
        else if (*p != q)
            return std::nullopt;
    }
    return p;
}

// The algebra endomorphism sending each mapped variable to its image and
// fixing everything else. Images must be parity-homogeneous of the same
// parity as the variable they replace, and must not contain the unit word
// (images stand in for Lie elements of the pair).
inline NCPoly graded_substitute(const NCPoly& f,
                                const std::map<Variable, NCPoly>& images) {
    for (auto& [v, img] : images) {
        if (img.is_zero()) continue;
        for (auto& [w, c] : img.terms())
            if (w.is_unit())
                throw error("substitution image for " + v.to_string() +
                            " contains the unit word");
        auto p = homogeneous_parity(img);
        if (!p)
            throw error("substitution image for " + v.to_string() +
                        " is not parity-homogeneous");
        if (*p != v.parity)
            throw error("parity mismatch in substitution for " + v.to_string());
    }
    NCPoly r;
    for (auto& [w, c] : f.terms()) {
        NCPoly prod = Rational(c);
        for (auto& v : w.letters) {
            auto it = images.find(v);
            prod = it == images.end() ? prod * NCPoly(v) : prod * it->second;
        }
        r += prod;
    }
    return r;
}

// Common multidegree of all words of f, or nullopt if f is not
// multihomogeneous. The zero polynomial has no multidegree.
inline std::optional<Multidegree> multidegree_of(const NCPoly& f) {
    if (f.is_zero()) throw error("multidegree of the zero polynomial");
    std::optional<Multidegree> d;
    for (auto& [w, c] : f.terms()) {
        Multidegree dw = Multidegree::of_word(w);
        if (!d)
            d = dw;
        else if (!(*d == dw))
            return std::nullopt;
    }
    return d;
}

namespace detail {

// Replace the k occurrences of v in each word by the k fresh variables,
// summed over all placements (the multilinear component of v -> sum of fresh).
inline NCPoly polarize(const NCPoly& f, Variable v,
                       const std::vector<Variable>& fresh) {
    NCPoly r;
    for (auto& [w, c] : f.terms()) {
        std::vector<std::size_t> positions;
        for (std::size_t i = 0; i < w.letters.size(); ++i)
            if (w.letters[i] == v) positions.push_back(i);
        if (positions.size() != fresh.size())
            throw error("polarize: inconsistent multiplicity");
        std::vector<std::size_t> perm(fresh.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        do {
            Word u = w;
            for (std::size_t i = 0; i < positions.size(); ++i)
                u.letters[positions[i]] = fresh[perm[i]];
            r.add_term(u, c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return r;
}

} // namespace detail

// Full polarization of a multihomogeneous polynomial: every variable of
// degree d > 1 is replaced by the multilinear component in d fresh variables
// of the same parity, chosen as the smallest indices not already in use.
inline NCPoly multilinearize(const NCPoly& f) {
    if (f.is_zero()) return f;
    auto d = multidegree_of(f);
    if (!d) throw error("multilinearize: input is not multihomogeneous");
    NCPoly g = f;
    for (auto& [v, k] : d->degrees) {
        if (k == 1) continue;
        std::set<int> used;
        for (auto& u : g.variables())
            if (u.parity == v.parity) used.insert(u.index);
        std::vector<Variable> fresh;
        for (int i = 1; static_cast<int>(fresh.size()) < k; ++i)
            if (!used.count(i)) fresh.push_back({v.parity, i});
        g = detail::polarize(g, v, fresh);
    }
    return g;
}

} // namespace gpi
