// dualrank.hpp - umbrella header

#ifndef DUALRANK_DUALRANK_HPP
#define DUALRANK_DUALRANK_HPP

#include "dualrank/dmpgi.hpp"
#include "dualrank/dual_matrix.hpp"
#include "dualrank/errors.hpp"
#include "dualrank/io.hpp"
#include "dualrank/matrix.hpp"
#include "dualrank/penrose_lab.hpp"
#include "dualrank/rank_decomposition.hpp"
#include "dualrank/rational.hpp"
#include "dualrank/real_linalg.hpp"
#include "dualrank/special_matrices.hpp"
#include "dualrank/sylvester.hpp"

#endif  // DUALRANK_DUALRANK_HPP
