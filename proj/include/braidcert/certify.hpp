// include/braidcert/certify.hpp — generator lower-bound certificates for
// centralizers of the example braids.
//
// The certificate exhibits candidate centralizer elements, machine-checks
// that each commutes with beta (under both word-problem engines) and
// preserves the block structure, and bounds the number of generators of the
// centralizer from below by the integer rank of the candidates' block
// profiles.  The bound refutes the "n-1 generators suffice" threshold
// whenever rank > n-1.

#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "blocks.hpp"
#include "examples.hpp"
#include "rank.hpp"
#include "word.hpp"
#include "word_problem.hpp"

namespace braidcert {

struct Candidate {
    std::string label;
    BraidWord word;
};

struct CandidateCheck {
    std::string label;
    bool commutes = false;
    bool block_preserving = false;
};

struct CertificateReport {
    ExampleSpec spec;
    int n = 1;
    int m = 1;
    BraidWord beta;
    std::vector<int> sizes;
    std::vector<Candidate> candidates;
    std::vector<CandidateCheck> checks;
    std::vector<std::vector<long long>> profile_matrix;  // rows: candidates passing both checks
    int rank = 0;
    int lower_bound = 0;
    int conjecture_threshold = 0;  // n - 1
    bool refuted = false;
    std::string assumptions;
};

// Block twists of the non-singleton blocks plus block linkings of all block
// pairs: m(m+1)/2 candidates for uniform structures, m(m+3)/2 when a trailing
// singleton block is present.
inline std::vector<Candidate> default_candidate_set(const ExampleInstance& inst) {
    const BlockStructure& B = inst.structure;
    std::vector<Candidate> out;
    for (int i = 1; i <= B.block_count(); ++i)
        if (B.size_of(i) >= 2)
            out.push_back({"T_" + std::to_string(i), block_twist(i, B)});
    for (int j = 1; j <= B.block_count(); ++j)
        for (int k = j + 1; k <= B.block_count(); ++k)
            out.push_back({"L_" + std::to_string(j) + "_" + std::to_string(k),
                           block_linking(j, k, B)});
    return out;
}

// Commutation of each candidate with beta, decided by the coordinate engine
// and re-verified by the Garside engine.  Disagreement is a hard failure.
inline std::vector<bool> verify_commutation(const BraidWord& beta,
                                            const std::vector<Candidate>& candidates) {
    std::vector<bool> out;
    out.reserve(candidates.size());
    for (const auto& cand : candidates) {
        if (cand.word.strand_count != beta.strand_count) throw error("strand count mismatch");
        bool coord = commutes(beta, cand.word);
        bool garside = commutes_garside(beta, cand.word);
        if (coord != garside)
            throw error("word-problem engines disagree on candidate '" + cand.label + "'");
        out.push_back(coord);
    }
    return out;
}

inline const char* certificate_assumptions() {
    return "Machine-checked: each listed candidate commutes with beta (verified independently by "
           "the coordinate-action and Garside engines) and preserves every block setwise; the "
           "profile matrix and its rank over Q are exact. Assumed (Thurston theory, not "
           "machine-checked): because the blocks of beta carry pairwise distinct invariants "
           "(distinct twist powers or distinct dilatations), every element of the centralizer of "
           "beta preserves each block setwise. The block profile is an additive homomorphism from "
           "the block-preserving subgroup to a free abelian group, so the rank of its image on "
           "the centralizer is at least the reported rank, and any generating set of the "
           "centralizer has at least that many elements.";
}

inline CertificateReport lower_bound_certificate(const ExampleInstance& inst,
                                                 const std::vector<Candidate>& candidates) {
    if (candidates.empty()) throw error("certificate requires at least one candidate");
    const BlockStructure& B = inst.structure;

    CertificateReport rep;
    rep.spec = inst.spec;
    rep.n = B.strand_count;
    rep.m = inst.spec.m;
    rep.beta = inst.beta;
    rep.sizes = B.sizes;
    rep.candidates = candidates;

    std::vector<bool> comm = verify_commutation(inst.beta, candidates);
    bool all_pass = true;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const Candidate& cand = candidates[k];
        bool preserves = blocks_preserved(cand.word, B);
        rep.checks.push_back({cand.label, comm[k], preserves});
        if (comm[k] && preserves)
            rep.profile_matrix.push_back(block_profile(cand.word, B).as_vector());
        else
            all_pass = false;  // excluded from the profile matrix, visible in checks
    }

    rep.rank = integer_rank(rep.profile_matrix);
    rep.lower_bound = rep.rank;
    rep.conjecture_threshold = rep.n - 1;
    rep.refuted = all_pass && rep.rank > rep.conjecture_threshold;
    rep.assumptions = certificate_assumptions();
    return rep;
}

inline CertificateReport lower_bound_certificate(const ExampleInstance& inst) {
    return lower_bound_certificate(inst, default_candidate_set(inst));
}

// Fixed-key-order JSON form; identical reports serialize byte-identically.
inline nlohmann::ordered_json report_to_json(const CertificateReport& rep) {
    nlohmann::ordered_json j;
    j["variant"] = variant_name(rep.spec.variant);
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["sizes"] = rep.sizes;
    j["params"] = rep.spec.params;
    j["beta"] = rep.beta.letters;
    j["candidates"] = nlohmann::ordered_json::array();
    for (const auto& cand : rep.candidates)
        j["candidates"].push_back(
            nlohmann::ordered_json{{"label", cand.label}, {"word", cand.word.letters}});
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& chk : rep.checks)
        j["checks"].push_back(nlohmann::ordered_json{{"label", chk.label},
                                                     {"commutes", chk.commutes},
                                                     {"block_preserving", chk.block_preserving}});
    j["profile_matrix"] = rep.profile_matrix;
    j["rank"] = rep.rank;
    j["lower_bound"] = rep.lower_bound;
    j["conjecture_threshold"] = rep.conjecture_threshold;
    j["refuted"] = rep.refuted;
    j["assumptions"] = rep.assumptions;
    return j;
}

}  // namespace braidcert
