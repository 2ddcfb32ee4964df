#pragma once

#include "dmc/ratfun.hpp"

#include <vector>

namespace dmc {

// Irreducible monic factors over Q of a squarefree-or-not monic rational
// polynomial, with multiplicity. Classic route: squarefree decomposition,
// factor mod a good prime, Hensel lift, subset recombination.
std::vector<std::pair<QPoly, int>> factor_rational_poly(const QPoly& f);

// Implementation pieces exposed for the unit tests.
QPoly squarefree_part(const QPoly& f);
bool rational_poly_irreducible(const QPoly& f);

} // namespace dmc
