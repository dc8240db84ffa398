#ifndef SHIFTKIT_REPORT_HPP
#define SHIFTKIT_REPORT_HPP

// Text tables and the machine (JSON) form of results. Every number in the
// machine form is an exact integer.

#include <string>
#include <vector>

#include <json.hpp>

#include "shiftkit/annihilators.hpp"
#include "shiftkit/ideals.hpp"
#include "shiftkit/simplicial.hpp"
#include "shiftkit/verification.hpp"

namespace shiftkit {

using Json = nlohmann::ordered_json;

/// Rows j (strands), columns i; entry beta_{i,i+j}. Zeros print as ".".
std::string render_betti(const BettiTable& table);
/// Rows i, columns j.
std::string render_alpha(const AnnihilatorTable& table);
std::string render_facets(const std::vector<Mask>& faces);
std::string render_f_vector(const FVector& f);
std::string render_checks(const std::vector<Check>& checks);

/// {"kind", "ring", "n", "entries": [[i, j, beta_{i,i+j}], ...]}
Json betti_json(const BettiTable& table, const std::string& kind, Ring ring, int n);
/// {"kind": "alpha", "ring", "n", "entries": [[i, j, alpha_{i,j}], ...]}
Json alpha_json(const AnnihilatorTable& table);
/// {"n", "facets", "f_vector"}
Json complex_json(const SimplicialComplex& delta);
/// {"ring", "n", "generators": [[index, ...], ...]}, indices repeated by exponent.
Json ideal_json(const MonomialIdeal& ideal);
/// [{"name", "passed", "detail"}, ...]
Json checks_json(const std::vector<Check>& checks);

}  // namespace shiftkit

#endif
