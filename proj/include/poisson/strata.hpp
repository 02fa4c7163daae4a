#pragma once

#include <vector>

#include "poisson/laurent.hpp"

namespace poisson {

/// Data attached to one stratum S of a conical symplectic singularity.
struct StratumDatum {
  /// Complex dimension of S (even).
  int dim_S = 0;
  /// Intersection-cohomology Poincare polynomial of the closure, in x.
  LaurentPolynomial ih_poly = 1;
  /// Zeroth Poisson homology series of the normal slice, in y.
  LaurentPolynomial slice_p0 = 1;
  /// Weight of the symplectic form.
  int weight_n = 2;
  /// False when the datum carries a nontrivial local system; such data come
  /// with a shifted IC polynomial whose constant term need not be 1.
  bool trivial_local_system = true;
  int local_system_rank = 1;
};

/// Sum over strata of x^dim y^(-n dim/2) Q(x^-1) P0(y), in (x, y).
/// Throws InconsistentWeight if the strata disagree on n or if n*dim is odd.
LaurentPolynomial assemble_poincare(const std::vector<StratumDatum>& strata);

/// Checks the stratum invariants: even dimension, and constant term 1 for
/// the IC polynomial of a trivial local system.
bool is_valid(const StratumDatum& s);

}  // namespace poisson
