#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gpi/freealg.hpp"

namespace gpi {

enum class IdentityKind { basis, derived, associative, casimir };

inline const char* to_string(IdentityKind k) {
    switch (k) {
        case IdentityKind::basis: return "basis";
        case IdentityKind::derived: return "derived";
        case IdentityKind::associative: return "associative";
        case IdentityKind::casimir: return "casimir";
    }
    return "?";
}

// One labeled identity. Labels follow the running numbering (1)-(27);
// two-sided labels ("7": central element times x, "11": the two symmetry
// forms) carry a "variant" parameter. Identity (8) generates but is not part
// of the minimal list, hence theorem_listed = false.
struct IdentityEntry {
    std::string label;
    std::map<std::string, int> params;
    NCPoly poly;
    IdentityKind kind = IdentityKind::basis;
    bool theorem_listed = true;

    std::string params_string() const {
        if (params.empty()) return "";
        std::string s = "{";
        bool first = true;
        for (auto& [k, v] : params) {
            if (!first) s += ",";
            s += k + ":" + std::to_string(v);
            first = false;
        }
        return s + "}";
    }
};

namespace detail {

inline std::vector<Variable> run_of(Parity p, int from, int count) {
    std::vector<Variable> vs;
    for (int i = 0; i < count; ++i) vs.push_back({p, from + i});
    return vs;
}

// s3(ad p, ad q, ad r) applied to d, with ad u (x) = [u, x] and operators
// composed left to right: (ad u ad v)(d) = [u, [v, d]].
inline NCPoly ad_triple(const NCPoly& p, const NCPoly& q, const NCPoly& r,
                        const NCPoly& d) {
    const NCPoly* ops[3] = {&p, &q, &r};
    int idx[3] = {0, 1, 2};
    NCPoly acc;
    do {
        int inv = (idx[0] > idx[1]) + (idx[0] > idx[2]) + (idx[1] > idx[2]);
        NCPoly t = bracket(*ops[idx[0]], bracket(*ops[idx[1]], bracket(*ops[idx[2]], d)));
        if (inv % 2)
            acc -= t;
        else
            acc += t;
    } while (std::next_permutation(idx, idx + 3));
    return acc;
}

inline int require_param(const std::map<std::string, int>& params,
                         const std::string& key, const std::string& label) {
    auto it = params.find(key);
    if (it == params.end())
        throw error("identity (" + label + ") needs parameter '" + key + "'");
    return it->second;
}

} // namespace detail

// The eight generating identities; label "7" contributes one entry per
// choice of the extra factor (variant 1: x even, variant 2: x odd).
inline std::vector<IdentityEntry> basis_identities() {
    using detail::run_of;
    const NCPoly y1{yv(1)}, y2{yv(2)}, z1{zv(1)}, z2{zv(2)}, z3{zv(3)};
    std::vector<IdentityEntry> out;
    auto add = [&](std::string label, NCPoly p, std::map<std::string, int> params = {},
                   bool listed = true) {
        out.push_back({std::move(label), std::move(params), std::move(p),
                       IdentityKind::basis, listed});
    };
    add("1", bracket(y1, y2));
    add("2", word({yv(1), zv(1), yv(2)}));
    add("3", word({zv(1), yv(1), zv(2)}) + word({zv(2), yv(1), zv(1)}));
    add("4", standard_poly({z1, z2, z3}));
    add("5", word({yv(1), zv(1), zv(2), yv(2)}) - word({yv(2), zv(1), zv(2), yv(1)}));
    add("6", word({zv(1), yv(1), yv(2), zv(2)}) - word({zv(2), yv(1), yv(2), zv(1)}));
    NCPoly central = standard_poly({z1, z2, y1});
    add("7", central * y2 - y2 * central, {{"variant", 1}});
    add("7", central * z3 - z3 * central, {{"variant", 2}});
    add("8", y1 * bracket(z1, z2) * z3 + word({zv(3), zv(1), yv(1), zv(2)}), {},
        /*listed=*/false);
    return out;
}

inline std::vector<NCPoly> basis_polynomials() {
    std::vector<NCPoly> ps;
    for (auto& e : basis_identities()) ps.push_back(e.poly);
    return ps;
}

// Basis entries with labels in [1, 7]; used to probe whether (8) is redundant.
inline std::vector<NCPoly> basis_polynomials_1_to_7() {
    std::vector<NCPoly> ps;
    for (auto& e : basis_identities())
        if (e.label != "8") ps.push_back(e.poly);
    return ps;
}

// Derived families (9)-(24). Family parameters: k for (17)-(22) and, for
// (17), a permutation of the pairs given as s1..sk; m, n for (24); variant
// for the double label (11).
inline IdentityEntry derived_identity(const std::string& label,
                                      const std::map<std::string, int>& params = {}) {
    using detail::require_param;
    using detail::run_of;
    const NCPoly y1{yv(1)}, y2{yv(2)}, z1{zv(1)}, z2{zv(2)}, z3{zv(3)};
    IdentityEntry e{label, params, NCPoly(), IdentityKind::derived, true};

    auto word_run = [&](Parity p, int from, int count) {
        return word(run_of(p, from, count));
    };

    if (label == "9") {
        e.poly = bracket(y1, z1, z2) - word({yv(1), zv(1), zv(2)}) -
                 word({zv(2), zv(1), yv(1)});
    } else if (label == "10") {
        e.poly = bracket(z1, y1, y2) - word({zv(1), yv(1), yv(2)}) -
                 word({yv(2), yv(1), zv(1)});
    } else if (label == "11") {
        int variant = require_param(params, "variant", label);
        if (variant == 1)
            e.poly = bracket(y1, z1, y2) - bracket(y2, z1, y1);
        else if (variant == 2)
            e.poly = bracket(z1, y1, z2) - bracket(z2, y1, z1);
        else
            throw error("identity (11) variant must be 1 or 2");
    } else if (label == "12") {
        e.poly = z1 * bracket(z2, z3) - z2 * bracket(z1, z3) + z3 * bracket(z1, z2);
    } else if (label == "13") {
        e.poly = word({zv(1), zv(2), zv(3)}) - word({zv(3), zv(2), zv(1)}) -
                 jordan_product(bracket(z1, z3), z2);
    } else if (label == "14") {
        e.poly = word({zv(1), yv(1), zv(2), zv(3)}) - z3 * bracket(z2, z1) * y1;
    } else if (label == "15") {
        e.poly = word({yv(1), zv(1), zv(2), zv(3)}) - bracket(y1, z2, z3) * z1;
    } else if (label == "16") {
        e.poly = word({zv(1), zv(2), zv(3), yv(1)}) - z3 * bracket(y1, z1, z2);
    } else if (label == "17") {
        int k = require_param(params, "k", label);
        if (k < 2) throw error("identity (17) needs k > 1");
        std::vector<int> sigma(k);
        std::vector<bool> seen(k + 1, false);
        for (int i = 1; i <= k; ++i) {
            int v = require_param(params, "s" + std::to_string(i), label);
            if (v < 1 || v > k || seen[v])
                throw error("identity (17): s1..sk must form a permutation");
            seen[v] = true;
            sigma[i - 1] = v;
        }
        std::vector<NCPoly> lhs{y1}, rhs{y1};
        for (int i = 1; i <= k; ++i) {
            lhs.push_back(NCPoly(zv(2 * i - 1)));
            lhs.push_back(NCPoly(zv(2 * i)));
            rhs.push_back(NCPoly(zv(2 * sigma[i - 1] - 1)));
            rhs.push_back(NCPoly(zv(2 * sigma[i - 1])));
        }
        e.poly = bracket(lhs) - bracket(rhs);
    } else if (label == "18") {
        int k = require_param(params, "k", label);
        if (k < 1) throw error("identity (18) needs k >= 1");
        std::vector<NCPoly> lhs{y1}, rhs{y1};
        for (int i = 1; i <= k; ++i) {
            lhs.push_back(NCPoly(zv(2 * i - 1)));
            lhs.push_back(NCPoly(zv(2 * i)));
        }
        for (int i = k; i >= 1; --i) {
            rhs.push_back(NCPoly(zv(2 * i - 1)));
            rhs.push_back(NCPoly(zv(2 * i)));
        }
        e.poly = bracket(lhs) - bracket(rhs);
    } else if (label == "19") {
        int k = require_param(params, "k", label);
        if (k < 0) throw error("identity (19) needs k >= 0");
        e.poly = y1 * word_run(Parity::odd, 1, 2 * k + 1) * y2;
    } else if (label == "20") {
        int k = require_param(params, "k", label);
        if (k < 0) throw error("identity (20) needs k >= 0");
        NCPoly mid = word_run(Parity::even, 1, 2 * k + 1);
        e.poly = z1 * mid * z2 + z2 * mid * z1;
    } else if (label == "21") {
        int k = require_param(params, "k", label);
        // k = 0 would be [z1, z2], which is not an identity of the pair.
        if (k < 1) throw error("identity (21) needs k >= 1");
        NCPoly mid = word_run(Parity::even, 1, 2 * k);
        e.poly = z1 * mid * z2 - z2 * mid * z1;
    } else if (label == "22") {
        int k = require_param(params, "k", label);
        if (k < 0) throw error("identity (22) needs k >= 0");
        NCPoly mid = word_run(Parity::odd, 1, 2 * k);
        e.poly = y1 * mid * y2 - y2 * mid * y1;
    } else if (label == "23") {
        e.poly = word({yv(1), yv(2), zv(1), zv(2)}) - word({zv(1), zv(2), yv(1), yv(2)});
    } else if (label == "24") {
        int m = require_param(params, "m", label);
        int n = require_param(params, "n", label);
        if (m < 0 || n < 0) throw error("identity (24) needs m, n >= 0");
        NCPoly ys = word_run(Parity::even, 1, 2 * m);
        NCPoly zs = word_run(Parity::odd, 1, 2 * n);
        e.poly = ys * zs - zs * ys;
    } else {
        throw error("unknown derived identity label (" + label + ")");
    }
    return e;
}

// (25) and (26) hold in every associative algebra and expand to the zero
// element of the free algebra; (27) is the Casimir identity of the pair.
inline IdentityEntry associative_identity(const std::string& label) {
    const NCPoly a{yv(1)}, b{yv(2)}, c{yv(3)}, d{yv(4)};
    const NCPoly y1{yv(1)}, z1{zv(1)}, z2{zv(2)}, z3{zv(3)};
    IdentityEntry e{label, {}, NCPoly(), IdentityKind::associative, true};
    if (label == "25") {
        e.poly = bracket(a, b, c, d) - bracket(a, b, d, c) -
                 bracket(bracket(a, b), bracket(c, d));
    } else if (label == "26") {
        e.poly = detail::ad_triple(a, b, c, d) -
                 bracket(bracket(d, a), bracket(b, c)) -
                 bracket(bracket(d, b), bracket(c, a)) -
                 bracket(bracket(d, c), bracket(a, b));
    } else if (label == "27") {
        e.kind = IdentityKind::casimir;
        e.poly = detail::ad_triple(z2, z3, y1, z1) -
                 Rational(2) * bracket(bracket(z1, y1), bracket(z2, z3));
    } else {
        throw error("unknown associative identity label (" + label + ")");
    }
    return e;
}

// Every catalog entry with family parameters up to max_param, in label order.
inline std::vector<IdentityEntry> full_catalog(int max_param = 3) {
    std::vector<IdentityEntry> out = basis_identities();
    auto add = [&](const std::string& label, std::map<std::string, int> params = {}) {
        out.push_back(derived_identity(label, params));
    };
    add("9");
    add("10");
    add("11", {{"variant", 1}});
    add("11", {{"variant", 2}});
    add("12");
    add("13");
    add("14");
    add("15");
    add("16");
    for (int k = 2; k <= max_param; ++k) {
        std::vector<int> sigma(k);
        for (int i = 0; i < k; ++i) sigma[i] = i + 1;
        do {
            std::map<std::string, int> params{{"k", k}};
            for (int i = 0; i < k; ++i)
                params["s" + std::to_string(i + 1)] = sigma[i];
            add("17", params);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    for (int k = 1; k <= max_param; ++k) add("18", {{"k", k}});
    for (int k = 0; k <= max_param; ++k) add("19", {{"k", k}});
    for (int k = 0; k <= max_param; ++k) add("20", {{"k", k}});
    for (int k = 1; k <= max_param; ++k) add("21", {{"k", k}});
    for (int k = 0; k <= max_param; ++k) add("22", {{"k", k}});
    add("23");
    for (int m = 0; m <= max_param; ++m)
        for (int n = 0; n <= max_param; ++n)
            add("24", {{"m", m}, {"n", n}});
    out.push_back(associative_identity("25"));
    out.push_back(associative_identity("26"));
    out.push_back(associative_identity("27"));
    return out;
}

} // namespace gpi
