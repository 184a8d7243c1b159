#pragma once

// Umbrella header: exact m-Laplacian toolkit.
//
//   graph_core   simple_graph, constructions, graph6 I/O, enumeration
//   fd_coeffs    stencil coefficients a_{k,m}, discrete operator, c_{k,m}
//   paths        open-path counting matrices P_{G,k}
//   laplacian    weighted graphs G_m, L^(m), classic matrices, identities
//   spectra      exact charpolys, Jacobi eigensolver, closed-form spectra
//   synthesis    weighted circulants realizing a prescribed spectrum
//   census       cospectral-mate counting over graph corpora

#include "mlap/census.hpp"
#include "mlap/charpoly.hpp"
#include "mlap/enumerate.hpp"
#include "mlap/errors.hpp"
#include "mlap/fd_coeffs.hpp"
#include "mlap/graph.hpp"
#include "mlap/graph6.hpp"
#include "mlap/jacobi.hpp"
#include "mlap/laplacian.hpp"
#include "mlap/matrix.hpp"
#include "mlap/path_matrices.hpp"
#include "mlap/rational.hpp"
#include "mlap/spectra.hpp"
#include "mlap/synthesis.hpp"
