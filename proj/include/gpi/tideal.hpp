#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpi/catalog.hpp"
#include "gpi/generic.hpp"
#include "gpi/rowspace.hpp"

namespace gpi {

inline constexpr int kDefaultDegreeCap = 5;

// All words of a multilinear multidegree, in the canonical word order.
struct MultilinearSpace {
    Multidegree multidegree;
    std::vector<Word> words;

    Eigen::Index dimension() const {
        return static_cast<Eigen::Index>(words.size());
    }
    Eigen::Index index_of(const Word& w) const {
        auto it = std::lower_bound(words.begin(), words.end(), w);
        if (it == words.end() || !(*it == w))
            throw error("word " + w.to_string() + " is outside the component");
        return static_cast<Eigen::Index>(it - words.begin());
    }

    RatRow to_row(const NCPoly& f) const {
        RatRow r = RatRow::Zero(dimension());
        for (auto& [w, c] : f.terms()) r[index_of(w)] = c;
        return r;
    }
    NCPoly to_poly(const RatRow& r) const {
        NCPoly f;
        for (Eigen::Index j = 0; j < r.size(); ++j)
            f.add_term(words[static_cast<std::size_t>(j)], r[j]);
        return f;
    }
};

inline MultilinearSpace multilinear_words(const Multidegree& d) {
    if (!d.is_multilinear())
        throw error("multidegree " + d.to_string() + " is not multilinear");
    std::vector<Variable> vars = d.variables();
    std::sort(vars.begin(), vars.end());
    MultilinearSpace sp{d, {}};
    do {
        sp.words.push_back(Word(vars));
    } while (std::next_permutation(vars.begin(), vars.end()));
    std::sort(sp.words.begin(), sp.words.end());
    return sp;
}

// Basis of the multilinear component of the free Lie algebra on the given
// variables: the (n-1)! left-normed brackets that start with the smallest
// variable. For a single variable, the variable itself.
inline std::vector<NCPoly> lie_monomial_basis(std::vector<Variable> vars) {
    if (vars.empty()) throw error("Lie monomial basis of the empty set");
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
        throw error("Lie monomial basis needs distinct variables");
    if (vars.size() == 1) return {NCPoly(vars[0])};
    std::vector<Variable> rest(vars.begin() + 1, vars.end());
    std::vector<NCPoly> basis;
    do {
        std::vector<NCPoly> args{NCPoly(vars[0])};
        for (auto& v : rest) args.push_back(NCPoly(v));
        basis.push_back(bracket(args));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return basis;
}

namespace detail {

inline Parity parity_of_block(const std::vector<Variable>& block) {
    int odd = 0;
    for (auto& v : block) odd += v.parity == Parity::odd;
    return static_cast<Parity>(odd % 2);
}

inline void check_cap(const Multidegree& d, int cap) {
    if (d.total() > cap)
        throw cap_error("total degree " + std::to_string(d.total()) +
                        " exceeds the configured cap " + std::to_string(cap));
}

// One linear equation per (matrix entry, parameter monomial) pair.
using EquationKey = std::pair<std::pair<int, int>, CMonomial>;

struct EquationKeyBefore {
    bool operator()(const EquationKey& x, const EquationKey& y) const {
        if (x.first != y.first) return x.first < y.first;
        return MonomialBefore{}(x.second, y.second);
    }
};

} // namespace detail

// Spanning set of the multidegree-d component of the weak T2-ideal generated
// by the (multilinear) generators. For a generator f(x1,...,xk): partition
// the variables of d into blocks B1,...,Bk plus a remainder, substitute Lie
// monomial basis elements of matching parity for the xi, and flank by the
// remainder words u, v. The emitted elements are deduplicated by incremental
// row reduction; the returned ones are independent.
inline std::vector<NCPoly> multilinear_consequences(
    const std::vector<NCPoly>& generators, const Multidegree& d,
    int degree_cap = kDefaultDegreeCap) {
    detail::check_cap(d, degree_cap);
    MultilinearSpace sp = multilinear_words(d);
    const std::vector<Variable> vars = d.variables();
    const int n = static_cast<int>(vars.size());

    RowSpace space(sp.dimension());
    std::vector<NCPoly> independent;
    auto emit = [&](const NCPoly& g) {
        if (g.is_zero()) return;
        if (space.insert(sp.to_row(g))) independent.push_back(g);
    };

    for (const NCPoly& gen : generators) {
        if (gen.is_zero()) continue;
        auto gd = multidegree_of(gen);
        if (!gd || !gd->is_multilinear())
            throw error("consequence generators must be multilinear");
        std::vector<Variable> gvars = gd->variables();
        const int k = static_cast<int>(gvars.size());
        if (k > n) continue;

        // assignment[i] = 0 places vars[i] in the remainder, j in block Bj.
        std::vector<int> assignment(n, 0);
        for (;;) {
            std::vector<std::vector<Variable>> blocks(k);
            std::vector<Variable> rem;
            for (int i = 0; i < n; ++i) {
                if (assignment[i] == 0)
                    rem.push_back(vars[i]);
                else
                    blocks[assignment[i] - 1].push_back(vars[i]);
            }
            bool admissible = true;
            for (int j = 0; j < k && admissible; ++j)
                admissible = !blocks[j].empty() &&
                             detail::parity_of_block(blocks[j]) == gvars[j].parity;
            if (admissible) {
                std::vector<std::vector<NCPoly>> choices;
                for (int j = 0; j < k; ++j)
                    choices.push_back(lie_monomial_basis(blocks[j]));
                std::vector<std::size_t> pick(k, 0);
                for (;;) {
                    std::map<Variable, NCPoly> images;
                    for (int j = 0; j < k; ++j)
                        images[gvars[j]] = choices[j][pick[j]];
                    NCPoly core = graded_substitute(gen, images);
                    std::sort(rem.begin(), rem.end());
                    do {
                        for (std::size_t cut = 0; cut <= rem.size(); ++cut) {
                            Word u(std::vector<Variable>(rem.begin(), rem.begin() + cut));
                            Word v(std::vector<Variable>(rem.begin() + cut, rem.end()));
                            emit(NCPoly(u) * core * NCPoly(v));
                        }
                    } while (std::next_permutation(rem.begin(), rem.end()));
                    int j = 0;
                    while (j < k && ++pick[j] == choices[j].size()) pick[j++] = 0;
                    if (j == k) break;
                }
            }
            int i = 0;
            while (i < n && ++assignment[i] == k + 1) assignment[i++] = 0;
            if (i == n) break;
        }
    }
    return independent;
}

// Basis of the space of multilinear weak graded identities at multidegree d:
// nullspace of word coefficients -> evaluation on the canonical generic
// matrices, one exact linear equation per (entry, parameter monomial) pair.
inline std::vector<NCPoly> identity_space(const Multidegree& d,
                                          int degree_cap = kDefaultDegreeCap) {
    detail::check_cap(d, degree_cap);
    MultilinearSpace sp = multilinear_words(d);

    Assignment a;
    int evens = 0, odds = 0;
    for (auto& v : d.variables()) {
        if (v.parity == Parity::even)
            a.set(v, generic_even(++evens));
        else
            a.set(v, generic_odd(++odds));
    }

    std::vector<Mat3> values;
    values.reserve(sp.words.size());
    for (auto& w : sp.words) values.push_back(evaluate(NCPoly(w), a));

    std::map<detail::EquationKey, Eigen::Index, detail::EquationKeyBefore>
        equation_index;
    for (auto& m : values)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (auto& [mono, coeff] : m(i, j).terms())
                    equation_index.try_emplace({{i, j}, mono},
                                               static_cast<Eigen::Index>(equation_index.size()));

    std::vector<RatRow> equations(equation_index.size(),
                                  RatRow::Zero(sp.dimension()));
    for (std::size_t wi = 0; wi < values.size(); ++wi)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (auto& [mono, coeff] : values[wi](i, j).terms())
                    equations[equation_index.at({{i, j}, mono})]
                             [static_cast<Eigen::Index>(wi)] = coeff;

    std::vector<NCPoly> basis;
    for (auto& v : nullspace_basis(equations, sp.dimension()))
        basis.push_back(sp.to_poly(v));
    return basis;
}

// True iff f reduces to zero against a row-reduced basis of the span.
// All inputs must live in one multilinear component.
inline bool span_contains(const std::vector<NCPoly>& span, const NCPoly& f) {
    if (f.is_zero()) return true;
    auto fd = multidegree_of(f);
    if (!fd || !fd->is_multilinear())
        throw error("span membership needs a multilinear element");
    for (auto& g : span) {
        if (g.is_zero()) continue;
        auto gd = multidegree_of(g);
        if (!gd || !(*gd == *fd))
            throw error("span and element live in different components");
    }
    MultilinearSpace sp = multilinear_words(*fd);
    RowSpace space(sp.dimension());
    for (auto& g : span)
        if (!g.is_zero()) space.insert(sp.to_row(g));
    return space.contains(sp.to_row(f));
}

// Result of comparing the identity space with the consequence span at one
// multilinear multidegree. The dimensions are artifact-derived values.
struct SpanReport {
    Multidegree multidegree;
    Eigen::Index word_count = 0;
    Eigen::Index identity_dim = 0;
    Eigen::Index consequence_dim = 0;
    bool equal = false;
    std::optional<NCPoly> witness; // an identity outside the span, if any
};

// Computes both sides at d and decides equality by mutual containment of the
// two bases, not by dimensions alone.
inline SpanReport verify_theorem_at(const Multidegree& d,
                                    const std::vector<NCPoly>& generators,
                                    int degree_cap = kDefaultDegreeCap) {
    detail::check_cap(d, degree_cap);
    MultilinearSpace sp = multilinear_words(d);
    std::vector<NCPoly> ids = identity_space(d, degree_cap);
    std::vector<NCPoly> cons = multilinear_consequences(generators, d, degree_cap);

    RowSpace id_space(sp.dimension()), con_space(sp.dimension());
    for (auto& f : ids) id_space.insert(sp.to_row(f));
    for (auto& f : cons) con_space.insert(sp.to_row(f));

    SpanReport rep;
    rep.multidegree = d;
    rep.word_count = sp.dimension();
    rep.identity_dim = id_space.rank();
    rep.consequence_dim = con_space.rank();

    bool cons_in_ids = true;
    for (auto& f : cons)
        if (!id_space.contains(sp.to_row(f))) { cons_in_ids = false; break; }
    bool ids_in_cons = true;
    for (auto& f : ids) {
        if (!con_space.contains(sp.to_row(f))) {
            ids_in_cons = false;
            if (!rep.witness) rep.witness = f;
        }
    }
    rep.equal = cons_in_ids && ids_in_cons &&
                rep.identity_dim == rep.consequence_dim;
    return rep;
}

inline SpanReport verify_theorem_at(const Multidegree& d,
                                    int degree_cap = kDefaultDegreeCap) {
    return verify_theorem_at(d, basis_polynomials(), degree_cap);
}

// Multilinear multidegree with the given number of distinct even and odd
// variables: {y1..y_e, z1..z_o}, each of degree one.
inline Multidegree signature_multidegree(int evens, int odds) {
    Multidegree d;
    for (int i = 1; i <= evens; ++i) d.degrees[yv(i)] = 1;
    for (int i = 1; i <= odds; ++i) d.degrees[zv(i)] = 1;
    return d;
}

} // namespace gpi
