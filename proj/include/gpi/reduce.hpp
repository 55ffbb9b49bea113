#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpi/generic.hpp"

namespace gpi {

// Canonical shapes for monomials in one even variable y and one odd
// variable z, modulo the generated ideal:
//   y^r, z^s, y^r z^s, z^s y^r, z y^{2r} z^{2s+1}, y^r z^{2s} y.
enum class ShapeTag { Yr, Zs, YrZs, ZsYr, ZY2rZodd, YrZ2sY };

inline const char* to_string(ShapeTag t) {
    switch (t) {
        case ShapeTag::Yr: return "y^r";
        case ShapeTag::Zs: return "z^s";
        case ShapeTag::YrZs: return "y^r z^s";
        case ShapeTag::ZsYr: return "z^s y^r";
        case ShapeTag::ZY2rZodd: return "z y^{2r} z^{2s+1}";
        case ShapeTag::YrZ2sY: return "y^r z^{2s} y";
    }
    return "?";
}

struct CanonicalShape {
    ShapeTag tag;
    int r = 0;
    int s = 0;
};

namespace detail {

// Maximal runs of a single letter.
struct Block {
    Variable letter;
    int length;
};

inline std::vector<Block> blocks_of(const Word& w) {
    std::vector<Block> bs;
    for (auto& v : w.letters) {
        if (!bs.empty() && bs.back().letter == v)
            ++bs.back().length;
        else
            bs.push_back({v, 1});
    }
    return bs;
}

inline Word word_of(const std::vector<Block>& bs) {
    Word w;
    for (auto& b : bs)
        for (int i = 0; i < b.length; ++i) w.letters.push_back(b.letter);
    return w;
}

inline bool is_even_letter(const Block& b) {
    return b.letter.parity == Parity::even;
}

} // namespace detail

// Shape classification of a word in at most one even and one odd variable.
inline std::optional<CanonicalShape> classify_shape(const Word& w) {
    auto bs = detail::blocks_of(w);
    if (bs.empty()) return CanonicalShape{ShapeTag::Yr, 0, 0};
    if (bs.size() == 1) {
        if (detail::is_even_letter(bs[0]))
            return CanonicalShape{ShapeTag::Yr, bs[0].length, 0};
        return CanonicalShape{ShapeTag::Zs, 0, bs[0].length};
    }
    if (bs.size() == 2) {
        if (detail::is_even_letter(bs[0]))
            return CanonicalShape{ShapeTag::YrZs, bs[0].length, bs[1].length};
        return CanonicalShape{ShapeTag::ZsYr, bs[1].length, bs[0].length};
    }
    if (bs.size() == 3) {
        if (!detail::is_even_letter(bs[0]) && bs[0].length == 1 &&
            bs[1].length % 2 == 0 && bs[2].length % 2 == 1)
            return CanonicalShape{ShapeTag::ZY2rZodd, bs[1].length / 2,
                                  (bs[2].length - 1) / 2};
        if (detail::is_even_letter(bs[0]) && bs[2].length == 1 &&
            bs[1].length % 2 == 0)
            return CanonicalShape{ShapeTag::YrZ2sY, bs[0].length,
                                  bs[1].length / 2};
    }
    return std::nullopt;
}

struct TraceStep {
    std::string rule;   // identity label that justifies the step
    std::string detail;
};

struct ReduceResult {
    NCPoly result;
    std::vector<TraceStep> trace;
    bool canonical = false;
    std::string diagnostic; // nonempty when the reduction could not finish
};

// Replace every even variable of f by the target even variable.
inline NCPoly restitute_even(const NCPoly& f, Variable target) {
    if (target.parity != Parity::even)
        throw error("restitution target must be even");
    std::map<Variable, NCPoly> images;
    for (auto& v : f.variables())
        if (v.parity == Parity::even) images[v] = NCPoly(target);
    return graded_substitute(f, images);
}

// Rewrites a word in {y, z} to a canonical shape modulo the generated ideal.
// Oriented rules: y z^{2k+1} y and z y^{2k+1} z vanish; even blocks of y's
// commute past even blocks of z's. The output is certified by evaluating
// input and output on the generic matrices.
inline ReduceResult canonical_form_yz(const Word& w) {
    using detail::Block;
    int evens = 0, odds = 0;
    std::optional<Variable> seen_even, seen_odd;
    for (auto& v : w.letters) {
        if (v.parity == Parity::even) {
            if (!seen_even) { seen_even = v; ++evens; }
            else if (!(*seen_even == v)) ++evens;
        } else {
            if (!seen_odd) { seen_odd = v; ++odds; }
            else if (!(*seen_odd == v)) ++odds;
        }
    }
    if (evens > 1 || odds > 1)
        throw error("canonical form is defined for words in one even and one "
                    "odd variable; foreign variables present");

    ReduceResult out;
    std::vector<Block> bs = detail::blocks_of(w);

    // Vanishing rules: an interior odd-length block is flanked by the other
    // letter on both sides and the word is a multiple of (2)/(19) or (3)/(20).
    for (std::size_t i = 1; i + 1 < bs.size(); ++i) {
        if (bs[i].length % 2 == 1) {
            bool even_block = detail::is_even_letter(bs[i]);
            std::string rule = even_block ? (bs[i].length == 1 ? "3" : "20")
                                          : (bs[i].length == 1 ? "2" : "19");
            std::string flank = even_block ? "z" : "y";
            out.trace.push_back(
                {rule, "factor " + flank + "*" + bs[i].letter.to_string() + "^" +
                           std::to_string(bs[i].length) + "*" + flank +
                           " vanishes modulo the ideal"});
            out.result = NCPoly();
            out.canonical = true;
            return out;
        }
    }

    // Even-even adjacent block swap, recorded against (23) or (24).
    auto swap_blocks = [&](std::vector<Block>& v, std::size_t i) {
        const Block &l = v[i], &r = v[i + 1];
        std::string rule = (l.length == 2 && r.length == 2) ? "23" : "24";
        out.trace.push_back(
            {rule, "swap " + l.letter.to_string() + "^" + std::to_string(l.length) +
                       " and " + r.letter.to_string() + "^" +
                       std::to_string(r.length)});
        std::swap(v[i], v[i + 1]);
        // merge with equal-letter neighbours
        std::vector<Block> merged;
        for (auto& b : v) {
            if (!merged.empty() && merged.back().letter == b.letter)
                merged.back().length += b.length;
            else
                merged.push_back(b);
        }
        v = std::move(merged);
    };

    int fuel = static_cast<int>(w.size() * w.size()) + 8;
    auto shaped = [&] { return classify_shape(detail::word_of(bs)).has_value(); };

    while (!shaped() && fuel-- > 0) {
        const bool starts_even = detail::is_even_letter(bs.front());
        const bool ends_even = detail::is_even_letter(bs.back());
        if (starts_even && ends_even) {
            if (bs.back().length % 2 == 1) {
                if (bs.back().length > 1) { // keep a single trailing y fixed
                    int rest = bs.back().length - 1;
                    bs.back().length = 1;
                    bs.insert(bs.end() - 1, Block{bs.back().letter, rest});
                }
                // move the first odd block right, across the even y-run
                std::size_t i = 1; // first block after the leading y-run
                while (i + 1 < bs.size() && detail::is_even_letter(bs[i])) ++i;
                if (i + 2 < bs.size()) swap_blocks(bs, i); // not yet next to final y
                else break;                                 // inconsistent; diagnose below
            } else {
                std::size_t i = 1;
                while (i < bs.size() && detail::is_even_letter(bs[i])) ++i;
                if (i + 1 < bs.size()) swap_blocks(bs, i);
                else break;
            }
        } else if (!starts_even && ends_even) {
            // send interior z-blocks left into the leading run
            std::size_t i = 1;
            while (i < bs.size() && detail::is_even_letter(bs[i])) ++i;
            if (i < bs.size() && i >= 2) swap_blocks(bs, i - 1);
            else break;
        } else if (starts_even && !ends_even) {
            std::size_t i = 1;
            while (i < bs.size() && detail::is_even_letter(bs[i])) ++i;
            if (i + 1 < bs.size()) swap_blocks(bs, i);
            else break;
        } else {
            if (bs.size() > 3) {
                swap_blocks(bs, 2); // consolidate interior z-blocks rightwards
            } else {
                // bs = z^{b1} y^{a} z^{B} with a even
                int b1 = bs[0].length, B = bs[2].length;
                if (B % 2 == 0) {
                    swap_blocks(bs, 1);
                } else if (b1 % 2 == 0) {
                    swap_blocks(bs, 0);
                } else if (b1 > 1) {
                    bs[0].length = 1;
                    bs.insert(bs.begin() + 1, Block{bs[0].letter, b1 - 1});
                    swap_blocks(bs, 1);
                } else {
                    break; // z y^{2r} z^{even}: unreachable, shapes caught above
                }
            }
        }
    }

    Word reduced = detail::word_of(bs);
    out.result = NCPoly(reduced);
    out.canonical = classify_shape(reduced).has_value();
    if (!out.canonical)
        out.diagnostic = "no canonical shape reached within the step bound; "
                         "residue " + reduced.to_string();

    // Certification: input and output evaluate identically on the generic
    // matrices, so the two sides are congruent modulo the identity ideal.
    NCPoly input(w);
    Assignment a = canonical_assignment(input);
    if (!mat3_equal(evaluate(input, a), evaluate(out.result, a))) {
        out.canonical = false;
        out.diagnostic = "certification failed: input and reduced forms "
                         "evaluate differently";
    }
    return out;
}

} // namespace gpi
