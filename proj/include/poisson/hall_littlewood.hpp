#pragma once

#include "poisson/laurent.hpp"
#include "poisson/partitions.hpp"

namespace poisson {

/// Largest size handled by the Hall-Littlewood oracle.
constexpr int kHallLittlewoodLimit = 8;

/// Coefficient of s_nu in the Hall-Littlewood polynomial P_mu(x; t) in |mu|
/// variables, as a polynomial in t. Zero unless nu <= mu.
LaurentPolynomial hall_littlewood_schur_coefficient(const Partition& mu, const Partition& nu);

/// K_{lambda mu}(t) as the coefficient of P_mu in s_lambda, obtained by
/// inverting the unitriangular Schur expansion of the P_mu.
/// Throws SizeMismatch, and ScaleExceeded above kHallLittlewoodLimit.
LaurentPolynomial kostka_oracle_hl(const Partition& lambda, const Partition& mu);

}  // namespace poisson
