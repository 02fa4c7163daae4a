#include "poisson/nilcone.hpp"

#include <algorithm>
#include <utility>

#include "poisson/errors.hpp"
#include "poisson/parallel.hpp"

namespace poisson {

namespace {

using Terms = std::vector<std::pair<int, int>>;  // (exponent, coefficient)

LaurentPolynomial sparse(const std::string& var, const Terms& terms) {
  LaurentPolynomial p = LaurentPolynomial::monomial({var}, {0}, 0);
  for (auto [e, c] : terms) p += LaurentPolynomial::monomial({var}, {e}, c);
  return p;
}

LaurentPolynomial power(const std::string& var, int e) { return LaurentPolynomial::monomial({var}, {e}); }

struct PublishedRow {
  std::string chi;
  Terms k_of_t2;  // K_{g,chi}(t^2)
  Terms h;        // h(chi; y)
};

std::vector<PublishedRow> published(const CartanType& type) {
  if (type.family == Family::B)
    return {{"triv", {{8, 1}}, {{-8, 1}}},
            {"sigma", {{0, 1}}, {{0, 1}}},
            {"tau", {{4, 1}}, {{-4, 1}}},
            {"tau_sigma", {{4, 1}}, {{-4, 1}}},
            {"h", {{2, 1}, {6, 1}}, {{-2, 1}, {-6, 1}}}};
  if (type.family == Family::G)
    return {{"triv", {{12, 1}}, {{-12, 1}}},
            {"sigma", {{0, 1}}, {{0, 1}}},
            {"tau", {{6, 1}}, {{-6, 1}}},
            {"tau_sigma", {{6, 1}}, {{-6, 1}}},
            {"h", {{2, 1}, {10, 1}}, {{-2, 1}, {-10, 1}}},
            {"h_tau", {{4, 1}, {8, 1}}, {{-4, 1}, {-8, 1}}}};
  throw UnsupportedType("no published table for " + type.name());
}

// Hilbert series of HP_0 of the subregular slice: Kleinian A2 for B2
// (basis 1, xy, (xy)^2) and Kleinian D4 for G2.
LaurentPolynomial published_slice_series(const CartanType& type) {
  if (type.family == Family::B) return sparse("y", {{0, 1}, {2, 1}, {4, 1}});
  if (type.family == Family::G) return sparse("y", {{0, 1}, {4, 2}, {8, 1}});
  throw UnsupportedType("no published slice series for " + type.name());
}

}  // namespace

int orbit_dimension(const Partition& nu) {
  const int r = nu.size();
  return r * (r - 1) - 2 * nu.n_stat();
}

std::vector<SpringerDatum> springer_table(const CartanType& type) {
  const auto checked = CartanType::parse(type.name());
  switch (checked.family) {
    case Family::A: {
      std::vector<SpringerDatum> out;
      for (const auto& nu : all_partitions(checked.rank + 1))
        out.push_back({nu.to_string(), orbit_dimension(nu), true, 1});
      return out;
    }
    case Family::B:
      return {{"triv", 8, true, 1},
              {"sigma", 0, true, 1},
              {"tau", 6, false, 1},
              {"tau_sigma", 4, true, 1},
              {"h", 6, true, 1}};
    case Family::G:
      return {{"triv", 12, true, 1}, {"sigma", 0, true, 1}, {"tau", 10, false, 2},
              {"tau_sigma", 6, true, 1}, {"h", 10, true, 1}, {"h_tau", 8, true, 1}};
  }
  throw UnsupportedType(type.name());
}

std::string conjecture_status(const CartanType& type) {
  CartanType::parse(type.name());
  return "theorem";
}

LaurentPolynomial h_multiplicity(const CartanType& type, const std::string& chi) {
  const auto& w = weyl_group(type);
  return generalized_kostka(w, chi).substitute("t", power("y", -2)).with_variables({"y"});
}

LaurentPolynomial conjecture_poincare(const CartanType& type) {
  const auto& w = weyl_group(type);
  const auto terms = parallel_map(w.irreducibles(), [&](const Character& chi) {
    const auto k = generalized_kostka(w, chi.label);
    return k.substitute("t", power("x", 2)) * k.substitute("t", power("y", -2));
  });
  LaurentPolynomial p = LaurentPolynomial::monomial({"x", "y"}, {0, 0}, 0);
  for (const auto& t : terms) p += t;
  return p.with_variables({"x", "y"});
}

std::vector<StratumDatum> springer_strata(const CartanType& type) {
  const auto& w = weyl_group(type);
  std::vector<StratumDatum> out;
  for (const auto& d : springer_table(type)) {
    const auto k = generalized_kostka(w, d.chi_label);
    StratumDatum s;
    s.dim_S = d.orbit_dim;
    s.ih_poly = (power("x", d.orbit_dim) * k.substitute("t", power("x", -2))).with_variables({"x"});
    s.slice_p0 = (power("y", d.orbit_dim) * k.substitute("t", power("y", -2))).with_variables({"y"});
    s.weight_n = 2;
    s.trivial_local_system = d.trivial_local_system;
    s.local_system_rank = d.local_system_rank;
    out.push_back(std::move(s));
  }
  return out;
}

LaurentPolynomial subregular_p0(const std::vector<int>& degrees) {
  LaurentPolynomial p = LaurentPolynomial::monomial({"y"}, {0}, 0);
  for (int d : degrees) p += power("y", 2 * (d - 2));
  return p;
}

LaurentPolynomial subregular_slice_series(const CartanType& type) {
  const auto table = springer_table(type);
  int top = 0;
  for (const auto& d : table) top = std::max(top, d.orbit_dim);
  const int subregular = top - 2;
  LaurentPolynomial sum = LaurentPolynomial::monomial({"y"}, {0}, 0);
  for (const auto& d : table)
    if (d.orbit_dim == subregular) sum += Integer(d.local_system_rank) * h_multiplicity(type, d.chi_label);
  return (power("y", subregular) * sum).with_variables({"y"});
}

Report verify_palindromicity(int r) {
  if (r < 2 || r > 6) throw UnsupportedType("palindromicity is checked for 2 <= r <= 6, got " + std::to_string(r));
  const auto type = CartanType{Family::A, r - 1};
  const auto& w = weyl_group(type);
  const auto t2 = power("t", 2);
  Report report{"palindromicity A" + std::to_string(r - 1), {}};
  for (const auto& nu : all_partitions(r)) {
    const auto conj = nu.conjugate();
    const auto lhs = generalized_kostka(w, nu.to_string()).substitute("t", t2);
    const auto rhs = power("t", orbit_dimension(nu) - orbit_dimension(conj)) *
                     generalized_kostka(w, conj.to_string()).substitute("t", t2);
    report.checks.push_back({"chi=" + nu.to_string(), lhs.with_variables({"t"}), rhs.with_variables({"t"})});
  }
  return report;
}

Report verify_springer_case(const CartanType& type) {
  const auto checked = CartanType::parse(type.name());
  if (checked.family == Family::A)
    throw UnsupportedType("the Springer case check covers B2 and G2, not " + checked.name());
  const auto& w = weyl_group(checked);
  Report report{"springer " + checked.name(), {}};
  for (const auto& row : published(checked)) {
    report.checks.push_back({"K[" + row.chi + "](t^2)",
                             generalized_kostka(w, row.chi).substitute("t", power("t", 2)).with_variables({"t"}),
                             sparse("t", row.k_of_t2)});
    report.checks.push_back({"h[" + row.chi + "]", h_multiplicity(checked, row.chi), sparse("y", row.h)});
  }
  report.checks.push_back({"subregular_slice", subregular_slice_series(checked), published_slice_series(checked)});
  report.checks.push_back({"h[triv]=y^-dimX", h_multiplicity(checked, "triv"), power("y", -2 * w.reflection_count())});
  report.checks.push_back({"h[sigma]=1", h_multiplicity(checked, "sigma"), power("y", 0)});

  LaurentPolynomial regular = LaurentPolynomial::monomial({"t"}, {0}, 0);
  for (const auto& chi : w.irreducibles()) regular += Integer(chi.degree()) * generalized_kostka(w, chi.label);
  report.checks.push_back({"regular_representation", regular.with_variables({"t"}), flag_poincare(w)});
  report.checks.push_back({"stratified_assembly", assemble_poincare(springer_strata(checked)),
                           conjecture_poincare(checked)});
  return report;
}

}  // namespace poisson
