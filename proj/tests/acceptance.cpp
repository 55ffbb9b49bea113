// Acceptance suite: runs every acceptance criterion at its exact tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "gpi/catalog.hpp"
#include "gpi/reduce.hpp"
#include "gpi/tideal.hpp"
#include "oracle.hpp"
#include "property_checks.hpp"

using namespace gpi;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::ostream&)> run;
};

Mat3 mat3_from_rows(std::initializer_list<std::initializer_list<CPoly>> rows) {
    Mat3 m = mat3_zero();
    int i = 0;
    for (auto& row : rows) {
        int j = 0;
        for (auto& e : row) m(i, j++) = e;
        ++i;
    }
    return m;
}

NCPoly yz_monomial(const std::string& pattern) {
    Word w;
    for (char ch : pattern) {
        if (ch == 'y') w.letters.push_back(yv(1));
        if (ch == 'z' || ch == 'i') w.letters.push_back(zv(1));
        if (ch == 'j') w.letters.push_back(zv(2));
    }
    return NCPoly(w);
}

// One evaluation matrix of the independence argument, as conventionally
// tabulated, with the frozen per-entry ratios actual/tabulated established
// by the multiplication oracle.
struct Display {
    std::string name;
    std::string pattern; // 'y', 'z' (single odd), 'i'/'j' (z1/z2)
    Mat3 tabulated;
    Mat3 ratio; // entry-wise rational factors on the tabulated support
};

Mat3 constant_ratio(const Mat3& tabulated, const Rational& q) {
    Mat3 r = mat3_zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!tabulated(i, j).is_zero()) r(i, j) = CPoly(q);
    return r;
}

std::vector<std::vector<Display>> display_groups() {
    const CPoly zero(0);
    CPoly a = pa(1), b = pb(1), c = pc(1);
    CPoly bi = pb(1), ci = pc(1), bj = pb(2), cj = pc(2);
    CPoly a2 = a * a;
    auto pw = [](const CPoly& base, int e) {
        CPoly r(1);
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    };
    auto c2 = [](unsigned e) { return CPoly(Rational(pow2(e))); };

    std::vector<std::vector<Display>> groups;

    // deg_y even, deg_z even: r = 2, k = 1
    {
        Mat3 d1 = Mat3(mat3_from_rows({{zero, zero, zero},
                                       {zero, a2 * b * c, -(a2 * pw(c, 2))},
                                       {zero, -(a2 * pw(b, 2)), a2 * b * c}}) *
                       c2(3));
        Mat3 d2 = Mat3(mat3_from_rows({{a2 * b * c, zero, zero},
                                       {zero, zero, zero},
                                       {zero, zero, zero}}) *
                       c2(6));
        Mat3 d3 = Mat3(mat3_from_rows({{zero, zero, zero},
                                       {zero, a2 * b * c, a2 * pw(c, 2)},
                                       {zero, -(a2 * pw(b, 2)), a2 * b * c}}) *
                       c2(4));
        Mat3 r3 = constant_ratio(d3, Rational(1, 2));
        r3(2, 1) = CPoly(Rational(-1, 2)); // sign of the tabulated entry flips
        groups.push_back({{"Y^rZ^{2k} (r=2,k=1)", "yyzz", d1, constant_ratio(d1, 1)},
                          {"ZY^rZ^{2k-1} (r=2,k=1)", "zyyz", d2,
                           constant_ratio(d2, Rational(1, 4))},
                          {"Y^{r-1}Z^{2k}Y (r=2,k=1)", "yzzy", d3, r3}});
    }
    // deg_y odd, deg_z odd: r = 1, k = 0 (s = 1)
    {
        Mat3 d4 = Mat3(mat3_from_rows({{zero, zero, zero},
                                       {-(a * c), zero, zero},
                                       {-(a * b), zero, zero}}) *
                       c2(2));
        Mat3 d5 = Mat3(mat3_from_rows({{zero, -(a * b), -(a * c)},
                                       {zero, zero, zero},
                                       {zero, zero, zero}}) *
                       c2(1));
        groups.push_back({{"Y^rZ^s (r=1,k=0)", "yz", d4, constant_ratio(d4, 1)},
                          {"Z^sY^r (r=1,k=0)", "zy", d5, constant_ratio(d5, 1)}});
    }
    // deg_y odd, deg_z even: r = 1, k = 1
    {
        Mat3 d6 = Mat3(mat3_from_rows({{zero, zero, zero},
                                       {zero, a * b * c, -(a * pw(c, 2))},
                                       {zero, a * pw(b, 2), -(a * b * c)}}) *
                       c2(2));
        Mat3 d7 = Mat3(mat3_from_rows({{zero, zero, zero},
                                       {zero, a * b * c, a * pw(c, 2)},
                                       {zero, -(a * pw(b, 2)), -(a * b * c)}}) *
                       c2(3));
        groups.push_back(
            {{"Y^rZ^{2k} (r=1,k=1)", "yzz", d6, constant_ratio(d6, 1)},
             {"Z^{2k}Y^r (r=1,k=1)", "zzy", d7,
              constant_ratio(d7, Rational(1, 2))}});
    }
    // deg_y even, deg_z odd: r = 2, k = 0
    {
        Mat3 d8 = Mat3(mat3_from_rows({{zero, zero, zero},
                                       {-(a2 * c), zero, zero},
                                       {a2 * b, zero, zero}}) *
                       c2(3));
        Mat3 d9 = Mat3(mat3_from_rows({{zero, -(a2 * b), a2 * c},
                                       {zero, zero, zero},
                                       {zero, zero, zero}}) *
                       c2(3));
        groups.push_back(
            {{"Y^rZ^{2k+1} (r=2,k=0)", "yyz", d8, constant_ratio(d8, 1)},
             {"Z^{2k+1}Y^r (r=2,k=0)", "zyy", d9,
              constant_ratio(d9, Rational(1, 2))}});
    }
    // two linear odd variables, even total degree: r = 1
    {
        Mat3 e1 = Mat3(mat3_from_rows({{zero, zero, zero},
                                       {zero, a2 * bj * ci, -(a2 * ci * cj)},
                                       {zero, -(a2 * bi * bj), a2 * bi * cj}}) *
                       c2(3));
        Mat3 e2 = Mat3(mat3_from_rows({{zero, zero, zero},
                                       {zero, a2 * bj * ci, a2 * ci * cj},
                                       {zero, a2 * bi * bj, a2 * bi * cj}}) *
                       c2(3));
        Mat3 e3 = Mat3(mat3_from_rows({{a2 * (bi * cj + bj * ci), zero, zero},
                                       {zero, zero, zero},
                                       {zero, zero, zero}}) *
                       c2(3));
        groups.push_back(
            {{"Z_iZ_jY^{2r} (r=1)", "ijyy", e1, constant_ratio(e1, 1)},
             {"Y^{2r-1}Z_iZ_jY (r=1)", "yijy", e2, constant_ratio(e2, 1)},
             {"Z_iY^{2r}Z_j (r=1)", "iyyj", e3, constant_ratio(e3, 1)}});
    }
    // two linear odd variables, odd total degree: r = 0
    {
        Mat3 e4 = Mat3(mat3_from_rows({{zero, zero, zero},
                                       {zero, a * bj * ci, -(a * ci * cj)},
                                       {zero, a * bi * bj, -(a * bi * cj)}}) *
                       c2(2));
        Mat3 e5 = Mat3(mat3_from_rows({{zero, zero, zero},
                                       {zero, a * bj * ci, a * ci * cj},
                                       {zero, -(a * bi * bj), -(a * bi * cj)}}) *
                       c2(2));
        Mat3 e6 = Mat3(mat3_from_rows({{a * (bi * cj - bj * ci), zero, zero},
                                       {zero, zero, zero},
                                       {zero, zero, zero}}) *
                       c2(2));
        groups.push_back(
            {{"Y^{2r+1}Z_iZ_j (r=0)", "yij", e4, constant_ratio(e4, 1)},
             {"Z_iZ_jY^{2r+1} (r=0)", "ijy", e5, constant_ratio(e5, 1)},
             {"Z_iY^{2r+1}Z_j (r=0)", "iyj", e6, constant_ratio(e6, 1)}});
    }
    return groups;
}

bool criterion_catalog(std::ostream& log) {
    bool ok = true;
    int entries = 0;
    for (auto& e : full_catalog(3)) {
        if (e.kind == IdentityKind::associative || e.kind == IdentityKind::casimir)
            continue;
        ++entries;
        if (!is_weak_graded_identity(e.poly)) {
            ok = false;
            log << "    entry (" << e.label << ") " << e.params_string()
                << " is not an identity\n";
        }
    }
    log << "    " << entries << " basis/derived entries evaluate to the zero matrix\n";
    return ok && entries >= 50;
}

bool criterion_associative(std::ostream& log) {
    bool ok = associative_identity("25").poly.is_zero();
    ok = associative_identity("26").poly.is_zero() && ok;
    ok = is_weak_graded_identity(associative_identity("27").poly) && ok;
    log << "    (25), (26) expand to the zero element; (27) vanishes on "
           "generic matrices\n";
    return ok;
}

bool criterion_displays(std::ostream& log) {
    bool ok = true;

    for (auto& group : display_groups()) {
        std::map<std::string, Eigen::Index> cols;
        std::vector<Mat3> actuals;
        for (auto& d : group) {
            NCPoly f = yz_monomial(d.pattern);
            Assignment a = canonical_assignment(f);
            Mat3 actual = evaluate(f, a);
            actuals.push_back(actual);

            // the Eigen evaluation and the plain-loop oracle must agree
            std::map<Variable, oracle::SimpleMat> images;
            for (auto& [v, m] : a.images()) images[v] = oracle::from_mat3(m);
            if (!oracle::matches_mat3(
                    oracle::eval_poly(f, images), actual)) {
                ok = false;
                log << "    " << d.name << ": evaluation oracle mismatch\n";
                continue;
            }

            bool exact = true;
            for (int i = 0; i < 3 && ok; ++i)
                for (int j = 0; j < 3; ++j) {
                    bool az = actual(i, j).is_zero(),
                         dz = d.tabulated(i, j).is_zero();
                    if (az != dz) {
                        ok = false;
                        log << "    " << d.name << ": support mismatch at ("
                            << i + 1 << "," << j + 1 << ")\n";
                        break;
                    }
                    if (az) continue;
                    if (!(actual(i, j) == d.ratio(i, j) * d.tabulated(i, j))) {
                        ok = false;
                        log << "    " << d.name
                            << ": unexpected coefficient at (" << i + 1 << ","
                            << j + 1 << "): " << actual(i, j).to_string()
                            << "\n";
                        break;
                    }
                    if (!(d.ratio(i, j) == CPoly(1))) exact = false;
                }
            if (exact)
                log << "    " << d.name << ": matches the tabulated matrix exactly\n";
            else
                log << "    " << d.name
                    << ": support matches; the exact constant differs from "
                       "the tabulated one (correction factor recorded)\n";
        }

        // independence: no nontrivial linear combination of the group is zero
        for (auto& m : actuals)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    for (auto& [mono, cf] : m(i, j).terms())
                        cols.try_emplace(std::to_string(i) + "," +
                                             std::to_string(j) + "|" +
                                             mono.to_string(),
                                         static_cast<Eigen::Index>(cols.size()));
        RowSpace rank_space(static_cast<Eigen::Index>(cols.size()));
        for (auto& m : actuals) {
            RatRow r = RatRow::Zero(static_cast<Eigen::Index>(cols.size()));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    for (auto& [mono, cf] : m(i, j).terms())
                        r[cols.at(std::to_string(i) + "," + std::to_string(j) +
                                  "|" + mono.to_string())] = cf;
            rank_space.insert(r);
        }
        if (rank_space.rank() != static_cast<Eigen::Index>(group.size())) {
            ok = false;
            log << "    a nontrivial combination of the group vanishes\n";
        }
    }

    // the three values the criterion pins directly
    {
        CPoly a = pa(1), b = pb(1), c = pc(1);
        NCPoly yyzz = yz_monomial("yyzz");
        Mat3 m = evaluate(yyzz, canonical_assignment(yyzz));
        ok = (m(1, 1) == CPoly(8) * a * a * b * c) && ok;
        NCPoly yz = yz_monomial("yz");
        Mat3 n = evaluate(yz, canonical_assignment(yz));
        ok = (n(1, 0) == CPoly(-4) * a * c) && ok;
        NCPoly ziyyzj = yz_monomial("iyyj");
        Mat3 p = evaluate(ziyyzj, canonical_assignment(ziyyzj));
        ok = (p(0, 0) ==
              CPoly(8) * a * a * (pb(1) * pc(2) + pb(2) * pc(1))) &&
             ok;
    }
    return ok;
}

bool criterion_theorem(std::ostream& log) {
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
        for (int e = n; e >= 0; --e) {
            SpanReport rep = verify_theorem_at(signature_multidegree(e, n - e));
            log << "    " << rep.multidegree.to_string()
                << " words=" << rep.word_count
                << " identity_dim=" << rep.identity_dim
                << " consequence_dim=" << rep.consequence_dim
                << (rep.equal ? " equal" : " MISMATCH") << "\n";
            ok = ok && rep.equal;
        }
    return ok;
}

bool criterion_spot_dims(std::ostream& log) {
    auto d1 = identity_space(signature_multidegree(2, 0)).size();
    auto d2 = identity_space(signature_multidegree(0, 1)).size();
    auto d3 = identity_space(signature_multidegree(2, 1)).size();
    log << "    {y:2} -> " << d1 << ", {z:1} -> " << d2 << ", {y:2,z:1} -> "
        << d3 << "\n";
    return d1 == 1 && d2 == 0 && d3 == 4;
}

bool criterion_identity8(std::ostream& log) {
    NCPoly id8;
    for (auto& e : basis_identities())
        if (e.label == "8") id8 = e.poly;
    auto cons = multilinear_consequences(basis_polynomials_1_to_7(),
                                         signature_multidegree(1, 3));
    bool inside = span_contains(cons, id8);
    log << "    span of (1)-(7) consequences at {y:1,z:3} has dimension "
        << cons.size() << "\n"
        << "    identity (8) lies in that span: "
        << (inside ? "true" : "false") << "\n"
        << "    (recorded, not asserted: the minimal list omits (8))\n";
    return true;
}

bool criterion_reduction(std::ostream& log) {
    bool ok = true;
    int shaped = 0, killed = 0, diagnosed = 0;
    for (int len = 1; len <= 6; ++len)
        for (int mask = 0; mask < (1 << len); ++mask) {
            Word w;
            for (int i = 0; i < len; ++i)
                w.letters.push_back((mask >> i) & 1 ? zv(1) : yv(1));
            ReduceResult r = canonical_form_yz(w);
            NCPoly input(w);
            Assignment a = canonical_assignment(input);
            if (!mat3_equal(evaluate(input, a), evaluate(r.result, a))) {
                ok = false;
                log << "    certification failed for " << w.to_string() << "\n";
                continue;
            }
            if (!r.diagnostic.empty()) {
                ++diagnosed;
                continue;
            }
            if (r.result.is_zero()) {
                ++killed;
                continue;
            }
            bool all_shaped = true;
            for (auto& [u, c] : r.result.terms())
                all_shaped = all_shaped && classify_shape(u).has_value();
            if (!all_shaped) {
                ok = false;
                log << "    unshaped undiagnosed output for " << w.to_string()
                    << "\n";
            } else {
                ++shaped;
            }
        }
    log << "    " << (shaped + killed + diagnosed)
        << " words of degree <= 6 certified (" << shaped << " canonical, "
        << killed << " zero, " << diagnosed << " diagnosed)\n";
    return ok && shaped + killed + diagnosed == 126;
}

bool criterion_properties(std::ostream& log) {
    struct Suite {
        const char* name;
        props::Outcome outcome;
    };
    std::vector<Suite> suites{
        {"evaluate homomorphism", props::evaluate_homomorphism()},
        {"bracket antisymmetry", props::bracket_antisymmetry()},
        {"polarization/restitution", props::polarization_restitution()},
        {"parity block patterns", props::parity_block_patterns()},
        {"consequence soundness", props::consequence_soundness()}};
    bool ok = true;
    for (auto& s : suites) {
        log << "    " << s.name << ": " << s.outcome.checks << " checks, "
            << s.outcome.failures << " failures\n";
        if (s.outcome.failures) {
            ok = false;
            log << "      first failure: " << s.outcome.first_failure << "\n";
        }
    }
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "catalog identities (1)-(24) vanish exactly on generic matrices",
         criterion_catalog},
        {2, "formal associative identities (25)-(26) and the Casimir identity (27)",
         criterion_associative},
        {3, "evaluation matrices of the independence argument",
         criterion_displays},
        {4, "identity space equals consequence span at every multidegree of "
            "total degree <= 5",
         criterion_theorem},
        {5, "frozen spot dimensions {y:2} = 1, {z:1} = 0, {y:2,z:1} = 4",
         criterion_spot_dims},
        {6, "status of identity (8) relative to (1)-(7)", criterion_identity8},
        {7, "reduction certification for every {y,z}-word of degree <= 6",
         criterion_reduction},
        {8, "randomized property suites (fixed seed)", criterion_properties}};

    int failed = 0;
    for (auto& c : criteria) {
        std::ostringstream log;
        auto start = Clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      Clock::now() - start)
                      .count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number
                  << ": " << c.title << " (" << ms << " ms)\n"
                  << log.str();
        failed += !ok;
    }
    std::cout << "acceptance: " << (criteria.size() - failed) << "/"
              << criteria.size() << " criteria passed\n";
    return failed;
}
