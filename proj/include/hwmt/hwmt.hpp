#ifndef HWMT_HWMT_HPP
#define HWMT_HWMT_HPP

#include "arith.hpp"
#include "census.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "hasse_witt.hpp"
#include "hypergeometric.hpp"
#include "integer_matrix.hpp"
#include "lattice_polytope.hpp"
#include "pencil.hpp"
#include "picard_fuchs.hpp"
#include "point_count.hpp"
#include "polynomial.hpp"
#include "polytope_io.hpp"
#include "rational_function.hpp"

#endif
