#pragma once

// Small hyperrings used as fixtures throughout the tests and the suite.
// All are returned unverified; run verify_axioms before use.

#include "hyperring/kernel.hpp"

namespace hyperring::catalog {

// R = {0,a,b,c}, unit a, with a+a = b+b = {0,b}, a+b = {a,c}, a+c = b,
// b+c = a, c+c = 0; b*b = b, c*c = c, b*c = 0.
FiniteHyperring example_3_2();

// Krasner hyperfield K = {0,1} with 1+1 = {0,1}.
FiniteHyperring krasner_k2();

// Sign hyperfield {0,1,-1} with 1+(-1) = {0,1,-1}.
FiniteHyperring sign_hyperfield();

// Z/nZ with singleton addition cells.
FiniteHyperring z_mod(std::size_t n);

}  // namespace hyperring::catalog
