#pragma once

#include <string>

#include "braidalg/abgroup.hpp"
#include "braidalg/ncalg.hpp"

namespace braidalg {

/// Parses the polynomial grammar over a signature: identifiers (generators
/// first, then ring variables), juxtaposition or * for products, + -,
/// ^ non-negative integer powers, star(x) or trailing ' for adjoints,
/// rational literals p/q, zeta(N)^k, @i slot suffixes inside tensor
/// contexts, and tens(x, y) for x@1 * y@2.
NCPoly parse_poly(const SigPtr& sig, const std::string& text);

/// Group algebra elements: sums of scalar-weighted characters t(e1,...,ek),
/// plus bare scalars for multiples of the identity character.
GroupAlgElem parse_group_alg(const FgAbelianGroup& group, const ScalarRingPtr& ring,
                             const std::string& text);

} // namespace braidalg
