#ifndef PLANAUT_ARITH_HPP
#define PLANAUT_ARITH_HPP

// Exact-rational kernel: scalars, polynomials, maps, resultants.
#include "planaut/bipoly.hpp"
#include "planaut/factor.hpp"
#include "planaut/line.hpp"
#include "planaut/polymap.hpp"
#include "planaut/rational.hpp"
#include "planaut/resultant.hpp"
#include "planaut/unipoly.hpp"

#endif
