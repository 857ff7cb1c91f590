#pragma once

#include "xlag/exactnum/poly.hpp"
#include "xlag/exactnum/rat.hpp"
#include "xlag/exactnum/ratfunc.hpp"
#include "xlag/exactnum/roots.hpp"
#include "xlag/exactnum/shifted_poly.hpp"
#include "xlag/exactnum/sturm.hpp"
