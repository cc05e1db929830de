// include/braidcert/examples.hpp — builders for the counterexample braids:
// block twist powers (even and odd strand counts) and products of embedded
// 3-strand pseudo-Anosov factors with pairwise distinct dilatations.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "blocks.hpp"
#include "word.hpp"

namespace braidcert {

enum class Variant { TwistEven, TwistOdd, PseudoAnosov };

inline std::string variant_name(Variant v) {
    switch (v) {
        case Variant::TwistEven: return "twist";
        case Variant::TwistOdd: return "twist-odd";
        case Variant::PseudoAnosov: return "pa";
    }
    throw error("unknown variant");
}

struct ExampleSpec {
    Variant variant = Variant::TwistEven;
    int m = 1;
    std::vector<long long> params;  // twist exponents a_i or pseudo-Anosov powers k_i
};

struct ExampleInstance {
    BraidWord beta;
    BlockStructure structure;
    ExampleSpec spec;
};

namespace detail {

inline void validate_params(int m, const std::vector<long long>& params, const char* what) {
    if (m < 1) throw error(std::string(what) + ": m must be >= 1");
    if (static_cast<int>(params.size()) != m)
        throw error(std::string(what) + ": expected exactly m parameters");
    for (std::size_t a = 0; a < params.size(); ++a) {
        if (params[a] < 1) throw error(std::string(what) + ": parameters must be >= 1");
        for (std::size_t b = a + 1; b < params.size(); ++b)
            if (params[a] == params[b])
                throw error(std::string(what) + ": parameters must be pairwise distinct");
    }
}

}  // namespace detail

// Shift every generator index of a word on k strands by offset, viewed in B_n.
inline BraidWord embed(const BraidWord& w, int offset, int n) {
    if (offset < 0 || offset + w.strand_count > n) throw error("embed: word does not fit");
    BraidWord out{n, {}};
    out.letters.reserve(w.letters.size());
    for (int g : w.letters) out.letters.push_back(g > 0 ? g + offset : g - offset);
    return out;
}

// n = 2m, blocks of size 2; beta = prod_i sigma_{2i-1}^{2 a_i}.
inline ExampleInstance build_twist_example(int m, const std::vector<long long>& exps) {
    detail::validate_params(m, exps, "twist example");
    BlockStructure B = uniform_blocks(m, 2);
    BraidWord beta{B.strand_count, {}};
    for (int i = 1; i <= m; ++i)
        for (long long r = 0; r < 2 * exps[static_cast<std::size_t>(i - 1)]; ++r)
            beta.letters.push_back(2 * i - 1);
    return ExampleInstance{std::move(beta), std::move(B), {Variant::TwistEven, m, exps}};
}

// n = 2m+1, blocks (2,...,2,1); the last strand is untouched.
inline ExampleInstance build_twist_example_odd(int m, const std::vector<long long>& exps) {
    detail::validate_params(m, exps, "odd twist example");
    std::vector<int> sizes(static_cast<std::size_t>(m), 2);
    sizes.push_back(1);
    BlockStructure B = make_blocks(std::move(sizes));
    BraidWord beta{B.strand_count, {}};
    for (int i = 1; i <= m; ++i)
        for (long long r = 0; r < 2 * exps[static_cast<std::size_t>(i - 1)]; ++r)
            beta.letters.push_back(2 * i - 1);
    return ExampleInstance{std::move(beta), std::move(B), {Variant::TwistOdd, m, exps}};
}

// n = 3m, blocks of size 3; beta = prod_i embed((sigma_1 sigma_2^{-1})^{k_i}).
// Each factor is pseudo-Anosov on its block with dilatation lambda^{k_i},
// lambda the larger root of x^2 - 3x + 1, so distinct powers give distinct
// dilatations.
inline ExampleInstance build_pa_example(int m, const std::vector<long long>& powers) {
    detail::validate_params(m, powers, "pseudo-Anosov example");
    BlockStructure B = uniform_blocks(m, 3);
    BraidWord beta{B.strand_count, {}};
    for (int i = 1; i <= m; ++i) {
        BraidWord factor{3, {}};
        for (long long r = 0; r < powers[static_cast<std::size_t>(i - 1)]; ++r) {
            factor.letters.push_back(1);
            factor.letters.push_back(-2);
        }
        BraidWord emb = embed(factor, 3 * (i - 1), B.strand_count);
        beta.letters.insert(beta.letters.end(), emb.letters.begin(), emb.letters.end());
    }
    return ExampleInstance{std::move(beta), std::move(B), {Variant::PseudoAnosov, m, powers}};
}

inline ExampleInstance build_example(const ExampleSpec& spec) {
    switch (spec.variant) {
        case Variant::TwistEven: return build_twist_example(spec.m, spec.params);
        case Variant::TwistOdd: return build_twist_example_odd(spec.m, spec.params);
        case Variant::PseudoAnosov: return build_pa_example(spec.m, spec.params);
    }
    throw error("unknown variant");
}

// Image of a 3-strand braid in SL(2,Z): sigma_1 -> [[1,1],[0,1]],
// sigma_2 -> [[1,0],[-1,1]].  |trace| > 2 certifies a pseudo-Anosov class with
// dilatation (|trace| + sqrt(trace^2 - 4)) / 2.
struct PaResult {
    mpz_class trace;
    double dilatation = 0.0;  // meaningful only when is_pa
    bool is_pa = false;
};

inline PaResult pa_trace_and_dilatation(const BraidWord& u) {
    if (u.strand_count != 3) throw error("pa_trace_and_dilatation requires exactly 3 strands");
    mpz_class a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]]
    for (int g : u.letters) {
        mpz_class na, nb, nc, nd;
        switch (g) {
            case 1:  // [[1,1],[0,1]]
                na = a, nb = a + b, nc = c, nd = c + d;
                break;
            case -1:  // [[1,-1],[0,1]]
                na = a, nb = b - a, nc = c, nd = d - c;
                break;
            case 2:  // [[1,0],[-1,1]]
                na = a - b, nb = b, nc = c - d, nd = d;
                break;
            case -2:  // [[1,0],[1,1]]
                na = a + b, nb = b, nc = c + d, nd = d;
                break;
            default:
                throw error("pa_trace_and_dilatation: letter out of range");
        }
        a = na, b = nb, c = nc, d = nd;
    }
    PaResult r;
    r.trace = a + d;
    mpz_class abs_trace = abs(r.trace);
    r.is_pa = abs_trace > 2;
    if (r.is_pa) {
        mpf_class t(abs_trace, 256);
        mpf_class disc = t * t - 4;
        mpf_class root(0, 256);
        mpf_sqrt(root.get_mpf_t(), disc.get_mpf_t());
        r.dilatation = mpf_class((t + root) / 2).get_d();
    }
    return r;
}

}  // namespace braidcert
