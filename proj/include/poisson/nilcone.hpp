#pragma once

#include <string>
#include <vector>

#include "poisson/coxeter.hpp"
#include "poisson/laurent.hpp"
#include "poisson/report.hpp"
#include "poisson/strata.hpp"

namespace poisson {

/// Springer correspondent of an irreducible character: a nilpotent orbit
/// (by its dimension) with an irreducible local system on it.
struct SpringerDatum {
  std::string chi_label;
  int orbit_dim = 0;
  bool trivial_local_system = true;
  int local_system_rank = 1;
};

/// Type A: chi_nu -> (O_nu, trivial) with dim O_nu = r(r-1) - 2 n_nu.
/// B2 and G2: the classical tables. Throws UnsupportedType.
std::vector<SpringerDatum> springer_table(const CartanType& type);

/// dim O_nu = r(r-1) - 2 n_nu for the orbit of Jordan type nu in gl_r.
int orbit_dimension(const Partition& nu);

/// sum_chi K_{g,chi}(x^2) K_{g,chi}(y^-2), in (x, y).
LaurentPolynomial conjecture_poincare(const CartanType& type);

/// "theorem" for every supported type.
std::string conjecture_status(const CartanType& type);

/// K_{g,chi}(y^-2), in y.
LaurentPolynomial h_multiplicity(const CartanType& type, const std::string& chi);

/// One datum per character: dim O_chi, IC polynomial x^dim K_chi(x^-2),
/// slice series y^dim K_chi(y^-2), weight 2, and the local system of the
/// Springer table.
std::vector<StratumDatum> springer_strata(const CartanType& type);

/// sum_i y^(2(d_i - 2)).
LaurentPolynomial subregular_p0(const std::vector<int>& degrees);

/// K_chi(t^2) = t^(dim O_chi - dim O_{chi sigma}) K_{chi sigma}(t^2) for every
/// irreducible of S_r, 2 <= r <= 6. Throws UnsupportedType outside that range.
Report verify_palindromicity(int r);

/// B2 or G2: generalized Kostka and h values against the published tables,
/// the subregular slice series, the triv and sigma extremes, the regular
/// representation at y = 1, and stratified assembly. Throws UnsupportedType.
Report verify_springer_case(const CartanType& type);

/// The slice series of the subregular orbit: sum over chi on that orbit of
/// rank(M_chi) h(chi; y), shifted by y^(n dim S / 2) with n = 2.
LaurentPolynomial subregular_slice_series(const CartanType& type);

}  // namespace poisson
