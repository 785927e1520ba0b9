// Shared fixture algebras for the test suite.
#pragma once

#include "nakayama/census.hpp"

namespace fixtures {

using nakayama::Algebra;

/// Five vertices, Kupisch 3,5,4,5,4; relations 1:3 and 3:4.
inline Algebra e5() { return Algebra::from_kupisch(5, {3, 5, 4, 5, 4}); }

/// Eight vertices, four relations 1:11, 4:11, 5:12, 7:12.
inline Algebra e8() {
    return Algebra::from_relations(8, {{1, 11}, {4, 11}, {5, 12}, {7, 12}});
}

/// Self-injective: constant series.
inline Algebra si3() { return Algebra::from_kupisch(3, {4, 4, 4}); }

/// One relation, finite global dimension 2 (the length-N Delta module is
/// projective).
inline Algebra one_rel_finite() { return Algebra::from_kupisch(3, {3, 5, 4}); }

/// One relation, infinite global dimension: from_relations(4, [(1,5)]).
inline Algebra one_rel_infinite() { return Algebra::from_relations(4, {{1, 5}}); }

} // namespace fixtures
