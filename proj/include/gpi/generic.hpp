#pragma once

#include <map>
#include <string>
#include <vector>

#include "gpi/eigen_support.hpp"
#include "gpi/freealg.hpp"

namespace gpi {

inline Mat3 mat3_zero() { return Mat3::Constant(CPoly(0)); }

inline Mat3 mat3_identity() {
    Mat3 m = mat3_zero();
    for (int i = 0; i < 3; ++i) m(i, i) = CPoly(1);
    return m;
}

inline bool mat3_is_zero(const Mat3& m) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

inline bool mat3_equal(const Mat3& m, const Mat3& n) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(m(i, j) == n(i, j))) return false;
    return true;
}

// Even block pattern of the grading on M3: entries allowed at
// (0,0), (1,1), (1,2), (2,1), (2,2) only.
inline bool in_even_pattern(const Mat3& m) {
    return m(0, 1).is_zero() && m(0, 2).is_zero() && m(1, 0).is_zero() &&
           m(2, 0).is_zero();
}

// Odd block pattern: entries allowed at (0,1), (0,2), (1,0), (2,0) only.
inline bool in_odd_pattern(const Mat3& m) {
    return m(0, 0).is_zero() && m(1, 1).is_zero() && m(1, 2).is_zero() &&
           m(2, 1).is_zero() && m(2, 2).is_zero();
}

// S0 = diag(0, t, -t).
inline bool in_s0_pattern(const Mat3& m) {
    return in_even_pattern(m) && m(0, 0).is_zero() && m(1, 2).is_zero() &&
           m(2, 1).is_zero() && (m(1, 1) + m(2, 2)).is_zero();
}

// S1 = [[0, -m, n], [-2n, 0, 0], [2m, 0, 0]].
inline bool in_s1_pattern(const Mat3& m) {
    return in_odd_pattern(m) && (m(1, 0) + CPoly(2) * m(0, 2)).is_zero() &&
           (m(2, 0) + CPoly(2) * m(0, 1)).is_zero();
}

// Generic even matrix Y_i = diag(0, 2a_i, -2a_i).
inline Mat3 generic_even(int i) {
    if (i < 1) throw error("generic matrix index must be positive");
    Mat3 m = mat3_zero();
    m(1, 1) = CPoly(2) * pa(i);
    m(2, 2) = CPoly(-2) * pa(i);
    return m;
}

// Generic odd matrix Z_i = [[0, -b_i, c_i], [-2c_i, 0, 0], [2b_i, 0, 0]].
inline Mat3 generic_odd(int i) {
    if (i < 1) throw error("generic matrix index must be positive");
    Mat3 m = mat3_zero();
    m(0, 1) = -pb(i);
    m(0, 2) = pc(i);
    m(1, 0) = CPoly(-2) * pc(i);
    m(2, 0) = CPoly(2) * pb(i);
    return m;
}

// Substitution of graded Lie elements for variables. Even images must match
// the S0 pattern and odd images the S1 pattern.
class Assignment {
public:
    Assignment() = default;

    void set(Variable v, const Mat3& m) {
        if (v.parity == Parity::even ? !in_s0_pattern(m) : !in_s1_pattern(m))
            throw error("assignment image for " + v.to_string() +
                        " violates the graded pattern");
        images_[v] = m;
    }

    const Mat3& image(Variable v) const {
        auto it = images_.find(v);
        if (it == images_.end())
            throw error("unmapped variable " + v.to_string());
        return it->second;
    }

    bool maps(Variable v) const { return images_.count(v) != 0; }
    const std::map<Variable, Mat3>& images() const { return images_; }

private:
    std::map<Variable, Mat3> images_;
};

// Canonical assignment: the j-th distinct even (odd) variable of f, in order
// of first appearance along the canonical word order, goes to Y_j (Z_j).
inline Assignment canonical_assignment(const NCPoly& f) {
    Assignment a;
    int evens = 0, odds = 0;
    for (auto& [w, c] : f.terms()) {
        for (auto& v : w.letters) {
            if (a.maps(v)) continue;
            if (v.parity == Parity::even)
                a.set(v, generic_even(++evens));
            else
                a.set(v, generic_odd(++odds));
        }
    }
    return a;
}

// The image of f under the algebra homomorphism extending the assignment:
// words become left-to-right matrix products, extended linearly.
inline Mat3 evaluate(const NCPoly& f, const Assignment& a) {
    Mat3 acc = mat3_zero();
    for (auto& [w, c] : f.terms()) {
        Mat3 prod = mat3_identity();
        for (auto& v : w.letters) prod = Mat3(prod * a.image(v));
        acc += prod * CPoly(c);
    }
    return acc;
}

namespace detail {

inline std::vector<NCPoly> multihomogeneous_components(const NCPoly& f) {
    std::map<Multidegree, NCPoly> parts;
    for (auto& [w, c] : f.terms())
        parts[Multidegree::of_word(w)].add_term(w, c);
    std::vector<NCPoly> r;
    for (auto& [d, g] : parts) r.push_back(g);
    return r;
}

} // namespace detail

// Exact membership test in T2(M, S): f vanishes on the generic matrices,
// one distinct generic matrix per distinct variable. Inputs that are not
// multihomogeneous are split into components first.
inline bool is_weak_graded_identity(const NCPoly& f) {
    if (f.is_zero()) return true;
    Assignment a = canonical_assignment(f);
    for (auto& g : detail::multihomogeneous_components(f))
        if (!mat3_is_zero(evaluate(g, a))) return false;
    return true;
}

} // namespace gpi
