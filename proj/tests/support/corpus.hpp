#ifndef SHIFTKIT_TESTS_CORPUS_HPP
#define SHIFTKIT_TESTS_CORPUS_HPP

#include <vector>

#include "shiftkit/ideals.hpp"
#include "shiftkit/linalg.hpp"
#include "shiftkit/simplicial.hpp"

namespace shiftkit::testing {

/// Every complex on [n]; with full_support only those containing all
/// vertices. n <= 5.
std::vector<SimplicialComplex> all_complexes(int n, bool full_support);

/// Closure of a few random faces plus all vertices.
SimplicialComplex random_complex(int n, Rng& rng);

/// A few random squarefree generators of degree >= 1.
MonomialIdeal random_ideal(Ring ring, int n, Rng& rng);

/// Closure of random degree-d monomials under e_A -> e_{A - j + i}, i > j.
MonomialIdeal random_strongly_stable(int n, int d, Rng& rng);

/// Every nonempty set of exterior generators closed under the exchange
/// test, brute force over all monomials: the oracle for stability flags.
bool brute_force_stable(const MonomialIdeal& ideal, bool strongly);

}  // namespace shiftkit::testing

#endif
