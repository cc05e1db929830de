// include/braidcert/word_problem.hpp — braid word problem: triviality,
// equality, commutation.
//
// Two independent engines back these decisions: the coordinate action
// (dynnikov.hpp), which is the default, and the Garside normal form
// (garside.hpp), used for canonical forms and for re-verification of
// certificate claims.

#pragma once

#include "dynnikov.hpp"
#include "garside.hpp"
#include "word.hpp"

namespace braidcert {

inline bool is_identity(const BraidWord& u) { return is_identity_dynnikov(u); }

inline bool equal(const BraidWord& u, const BraidWord& v) {
    if (u.strand_count != v.strand_count) throw error("strand count mismatch");
    return is_identity(compose(u, inverse(v)));
}

inline BraidWord commutator(const BraidWord& u, const BraidWord& v) {
    if (u.strand_count != v.strand_count) throw error("strand count mismatch");
    return compose(compose(u, v), compose(inverse(u), inverse(v)));
}

inline bool commutes(const BraidWord& u, const BraidWord& v) {
    return is_identity(commutator(u, v));
}

// Same decisions through the Garside engine; certificate verification runs
// both and insists they agree.
inline bool commutes_garside(const BraidWord& u, const BraidWord& v) {
    return is_identity_garside(commutator(u, v));
}

}  // namespace braidcert
