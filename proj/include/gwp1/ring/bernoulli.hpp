#pragma once

#include "gwp1/ring/multipoly.hpp"
#include "gwp1/ring/rational.hpp"

namespace gwp1 {

// Variable set {"u"} shared by all Bernoulli polynomials.
const VarSetPtr& bernoulli_vars();

// B_j(u), built from B_j' = j B_{j-1} and the zero-mean normalisation on [0,1].
// Results are memoised behind a mutex.
MultiPoly bernoulli_poly(int j);

// B_n = B_n(0).
Rational bernoulli_number(int n);

Rational pochhammer(const Rational& x, long k);
MultiPoly pochhammer(const MultiPoly& x, long k);

}  // namespace gwp1
