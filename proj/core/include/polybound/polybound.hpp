#pragma once

#include "polybound/charpoly_bounds.hpp"
#include "polybound/coeff_bound.hpp"
#include "polybound/crt.hpp"
#include "polybound/integer.hpp"
#include "polybound/matrix.hpp"
#include "polybound/matrix_io.hpp"
#include "polybound/minpoly_bounds.hpp"
#include "polybound/modular.hpp"
#include "polybound/oracle.hpp"
#include "polybound/polynomial.hpp"
