// Command-line front end: parses expressions in the y/z surface syntax and
// drives the catalog, evaluation, identity-space, and reduction machinery.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 parse or usage
// error, 3 resource-cap abort.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "gpi/catalog.hpp"
#include "gpi/parse.hpp"
#include "gpi/reduce.hpp"
#include "gpi/serialize.hpp"
#include "gpi/tideal.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;
constexpr int kHardDegreeCeiling = 6;

using Clock = std::chrono::steady_clock;

long long micros_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                                 start)
        .count();
}

int check_degree_flag(int max_degree) {
    if (max_degree < 1 || max_degree > kHardDegreeCeiling) {
        std::cerr << "resource cap: --max-degree must be between 1 and "
                  << kHardDegreeCeiling
                  << " (consequence enumeration grows super-exponentially)\n";
        return kExitResourceCap;
    }
    return kExitOk;
}

int run_verify_catalog(bool as_json) {
    bool all_ok = true;
    gpi::json entries = gpi::json::array();
    for (auto& e : gpi::full_catalog(3)) {
        auto start = Clock::now();
        bool ok = e.kind == gpi::IdentityKind::associative
                      ? e.poly.is_zero()
                      : gpi::is_weak_graded_identity(e.poly);
        long long us = micros_since(start);
        all_ok = all_ok && ok;
        if (as_json) {
            gpi::json o;
            o["label"] = e.label;
            o["params"] = e.params;
            o["kind"] = gpi::to_string(e.kind);
            o["verified"] = ok;
            o["micros"] = us;
            entries.push_back(o);
        } else {
            std::cout << "(" << e.label << ") " << e.params_string()
                      << (e.params.empty() ? "" : " ") << gpi::to_string(e.kind)
                      << ": " << (ok ? "verified" : "FAILED") << "  [" << us
                      << " us]\n";
        }
    }
    if (as_json) {
        gpi::json o;
        o["entries"] = entries;
        o["all_verified"] = all_ok;
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << (all_ok ? "catalog verified" : "catalog verification FAILED")
                  << "\n";
    }
    return all_ok ? kExitOk : kExitVerificationFailed;
}

int run_check(const std::string& expr, bool as_json) {
    gpi::NCPoly f = gpi::parse_poly(expr);
    bool ok = gpi::is_weak_graded_identity(f);
    if (as_json) {
        gpi::json o;
        o["expr"] = expr;
        o["polynomial"] = f.to_string();
        o["identity"] = ok;
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << f.to_string() << "\n"
                  << (ok ? "IDENTITY of the graded pair"
                         : "NOT an identity of the graded pair")
                  << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int run_eval(const std::string& expr, bool as_json) {
    gpi::NCPoly f = gpi::parse_poly(expr);
    gpi::Mat3 m = gpi::evaluate(f, gpi::canonical_assignment(f));
    if (as_json) {
        gpi::json o;
        o["expr"] = expr;
        o["matrix"] = gpi::to_json(m);
        o["zero"] = gpi::mat3_is_zero(m);
        std::cout << o.dump(2) << "\n";
    } else {
        for (int i = 0; i < 3; ++i) {
            std::cout << "[ ";
            for (int j = 0; j < 3; ++j)
                std::cout << m(i, j).to_string() << (j < 2 ? ", " : " ");
            std::cout << "]\n";
        }
        std::cout << (gpi::mat3_is_zero(m) ? "zero matrix" : "nonzero") << "\n";
    }
    return kExitOk;
}

int run_identities(const std::string& spec, int max_degree, bool as_json) {
    if (int rc = check_degree_flag(max_degree)) return rc;
    auto [evens, odds] = gpi::parse_signature(spec);
    gpi::Multidegree d = gpi::signature_multidegree(evens, odds);
    auto basis = gpi::identity_space(d, max_degree);
    if (as_json) {
        gpi::json o;
        o["multidegree"] = gpi::to_json(d);
        o["word_count"] = gpi::multilinear_words(d).dimension();
        o["dimension"] = basis.size();
        gpi::json arr = gpi::json::array();
        for (auto& f : basis) arr.push_back(f.to_string());
        o["basis"] = arr;
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << "multidegree " << d.to_string() << "\n"
                  << "identity space dimension (artifact-derived): "
                  << basis.size() << "\n";
        for (auto& f : basis) std::cout << "  " << f.to_string() << "\n";
    }
    return kExitOk;
}

void print_report_line(const gpi::SpanReport& rep) {
    std::cout << rep.multidegree.to_string() << "  words=" << rep.word_count
              << "  identity_dim=" << rep.identity_dim
              << "  consequence_dim=" << rep.consequence_dim
              << (rep.equal ? "  equal" : "  MISMATCH");
    if (rep.witness)
        std::cout << "  witness: " << rep.witness->to_string();
    std::cout << "\n";
}

int run_span(const std::string& spec, int max_degree, bool as_json) {
    if (int rc = check_degree_flag(max_degree)) return rc;
    auto [evens, odds] = gpi::parse_signature(spec);
    gpi::Multidegree d = gpi::signature_multidegree(evens, odds);
    gpi::SpanReport rep = gpi::verify_theorem_at(d, max_degree);
    if (as_json)
        std::cout << gpi::to_json(rep).dump(2) << "\n";
    else
        print_report_line(rep);
    return rep.equal ? kExitOk : kExitVerificationFailed;
}

int run_theorem(int max_degree, int threads, bool as_json) {
    if (int rc = check_degree_flag(max_degree)) return rc;
    std::vector<gpi::Multidegree> degrees;
    for (int n = 1; n <= max_degree; ++n)
        for (int e = n; e >= 0; --e)
            degrees.push_back(gpi::signature_multidegree(e, n - e));

    std::vector<gpi::SpanReport> reports(degrees.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < degrees.size(); ++i)
            reports[i] = gpi::verify_theorem_at(degrees[i], max_degree);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= degrees.size()) return;
                reports[i] = gpi::verify_theorem_at(degrees[i], max_degree);
            }
        };
        std::vector<std::future<void>> pool;
        for (int t = 0; t < threads; ++t)
            pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }

    bool all_equal = true;
    for (auto& rep : reports) all_equal = all_equal && rep.equal;
    if (as_json) {
        gpi::json o;
        o["max_degree"] = max_degree;
        gpi::json arr = gpi::json::array();
        for (auto& rep : reports) arr.push_back(gpi::to_json(rep));
        o["reports"] = arr;
        o["all_equal"] = all_equal;
        std::cout << o.dump(2) << "\n";
    } else {
        for (auto& rep : reports) print_report_line(rep);
        std::cout << (all_equal
                          ? "identity spaces match the consequence spans at "
                            "every multidegree"
                          : "MISMATCH found")
                  << "\n";
    }
    return all_equal ? kExitOk : kExitVerificationFailed;
}

int run_reduce(const std::string& expr, bool as_json) {
    gpi::NCPoly f = gpi::parse_poly(expr);
    gpi::NCPoly combined;
    bool all_canonical = true;
    gpi::json words = gpi::json::array();
    std::vector<std::string> text_lines;
    for (auto& [w, c] : f.terms()) {
        gpi::ReduceResult r = gpi::canonical_form_yz(w);
        combined += c * r.result;
        all_canonical = all_canonical && r.canonical;
        if (as_json) {
            gpi::json o;
            o["word"] = w.to_string();
            o["result"] = r.result.to_string();
            o["canonical"] = r.canonical;
            if (!r.diagnostic.empty()) o["diagnostic"] = r.diagnostic;
            gpi::json steps = gpi::json::array();
            for (auto& s : r.trace)
                steps.push_back({{"rule", s.rule}, {"detail", s.detail}});
            o["trace"] = steps;
            words.push_back(o);
        } else {
            text_lines.push_back(w.to_string() + "  ->  " + r.result.to_string());
            for (auto& s : r.trace)
                text_lines.push_back("    (" + s.rule + ") " + s.detail);
            if (!r.diagnostic.empty())
                text_lines.push_back("    diagnostic: " + r.diagnostic);
        }
    }
    if (as_json) {
        gpi::json o;
        o["expr"] = expr;
        o["words"] = words;
        o["result"] = combined.to_string();
        o["canonical"] = all_canonical;
        std::cout << o.dump(2) << "\n";
    } else {
        for (auto& l : text_lines) std::cout << l << "\n";
        std::cout << "reduced form: " << combined.to_string() << "\n";
    }
    return all_canonical ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the graded weak polynomial identities "
                 "of the adjoint pair of sl2"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON reports");

    auto* cmd_catalog =
        app.add_subcommand("verify-catalog", "verify every catalog identity");

    std::string check_expr;
    auto* cmd_check =
        app.add_subcommand("check", "test whether an expression is an identity");
    cmd_check->add_option("expr", check_expr, "expression")->required();

    std::string eval_expr;
    auto* cmd_eval =
        app.add_subcommand("eval", "evaluate an expression on generic matrices");
    cmd_eval->add_option("expr", eval_expr, "expression")->required();

    std::string ids_spec;
    int ids_degree = gpi::kDefaultDegreeCap;
    auto* cmd_ids = app.add_subcommand(
        "identities", "basis of the multilinear identity space");
    cmd_ids->add_option("--multidegree", ids_spec, "e.g. y:2,z:1")->required();
    cmd_ids->add_option("--max-degree", ids_degree, "total degree cap");

    std::string span_spec;
    int span_degree = gpi::kDefaultDegreeCap;
    auto* cmd_span = app.add_subcommand(
        "span", "compare identity space and consequence span at one multidegree");
    cmd_span->add_option("--multidegree", span_spec, "e.g. y:2,z:1")->required();
    cmd_span->add_option("--max-degree", span_degree, "total degree cap");

    int thm_degree = gpi::kDefaultDegreeCap;
    int thm_threads = 1;
    auto* cmd_thm = app.add_subcommand(
        "theorem", "compare spans at every multidegree up to the cap");
    cmd_thm->add_option("--max-degree", thm_degree, "total degree cap");
    cmd_thm->add_option("--threads", thm_threads, "worker threads");

    std::string reduce_expr;
    auto* cmd_reduce = app.add_subcommand(
        "reduce", "canonical form of words in one even and one odd variable");
    cmd_reduce->add_option("expr", reduce_expr, "expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_catalog->parsed()) return run_verify_catalog(as_json);
        if (cmd_check->parsed()) return run_check(check_expr, as_json);
        if (cmd_eval->parsed()) return run_eval(eval_expr, as_json);
        if (cmd_ids->parsed()) return run_identities(ids_spec, ids_degree, as_json);
        if (cmd_span->parsed()) return run_span(span_spec, span_degree, as_json);
        if (cmd_thm->parsed()) return run_theorem(thm_degree, thm_threads, as_json);
        if (cmd_reduce->parsed()) return run_reduce(reduce_expr, as_json);
    } catch (const gpi::cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const gpi::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gpi::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
