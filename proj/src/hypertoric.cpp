#include "poisson/hypertoric.hpp"

#include "poisson/parallel.hpp"

namespace poisson {

namespace {

const LaurentPolynomial& x() {
  static const auto v = LaurentPolynomial::variable("x");
  return v;
}
const LaurentPolynomial& y() {
  static const auto v = LaurentPolynomial::variable("y");
  return v;
}
LaurentPolynomial y_pow(int e) { return LaurentPolynomial::monomial({"y"}, {e}); }
LaurentPolynomial x_pow(int e) { return LaurentPolynomial::monomial({"x"}, {e}); }

// T(a, 0) with x -> a, as a polynomial in a's variables.
LaurentPolynomial tutte_at_y0(const LaurentPolynomial& t, const LaurentPolynomial& a) {
  return t.substitute("y", 0).substitute("x", a);
}

// T(0, b).
LaurentPolynomial tutte_at_x0(const LaurentPolynomial& t, const LaurentPolynomial& b) {
  return t.substitute("x", 0).substitute("y", b);
}

struct FlatTerms {
  LaurentPolynomial above;  // Tutte of the contraction A^F
  LaurentPolynomial below;  // Tutte of the localization A_F
  int size = 0;
};

std::vector<FlatTerms> flat_terms(const Matroid& m) {
  return parallel_map(m.flats(), [&](const Flat& f) {
    return FlatTerms{m.restrict_flat(f).tutte(), m.localize(f).tutte(), cardinality(f.elements)};
  });
}

}  // namespace

LaurentPolynomial denham_phi(const Matroid& m) {
  const auto b = LaurentPolynomial::variable("b");
  LaurentPolynomial phi = LaurentPolynomial::monomial({"x", "y", "b"}, {0, 0, 0}, 0);
  for (const auto& t : flat_terms(m))
    phi += tutte_at_y0(t.above, x() - 1) * tutte_at_x0(t.below, y() - 1) *
           b.pow(static_cast<unsigned>(t.size));
  return phi.with_variables({"x", "y", "b"});
}

LaurentPolynomial hypertoric_poincare(const Matroid& m) {
  LaurentPolynomial p = LaurentPolynomial::monomial({"x", "y"}, {0, 0}, 0);
  for (const auto& t : flat_terms(m))
    p += y_pow(2 * t.size) * tutte_at_y0(t.above, x().pow(2)) *
         tutte_at_x0(t.below, y_pow(-2));
  return (y_pow(-2 * m.rank()) * p).with_variables({"x", "y"});
}

LaurentPolynomial hypertoric_poincare_via_phi(const Matroid& m) {
  const auto p = denham_phi(m)
                     .substitute("x", x().pow(2) + 1)
                     .substitute("y", y_pow(-2) + 1)
                     .substitute("b", y().pow(2));
  return (y_pow(-2 * m.rank()) * p).with_variables({"x", "y"});
}

LaurentPolynomial q_ih(const Matroid& m) {
  return (x_pow(2 * m.rank()) * tutte_at_y0(m.tutte(), x_pow(-2))).with_variables({"x"});
}

LaurentPolynomial p_zero(const Matroid& m) {
  const int shift = 2 * static_cast<int>(m.size()) - 2 * m.rank();
  return (y_pow(shift) * tutte_at_x0(m.tutte(), y_pow(-2))).with_variables({"y"});
}

LaurentPolynomial p_zero_via_dual(const Matroid& m) {
  return q_ih(m.dual()).substitute("x", y()).with_variables({"y"});
}

std::vector<StratumDatum> hypertoric_strata(const Matroid& m) {
  std::vector<Flat> coloop_free;
  for (const auto& f : m.flats())
    if (m.localize(f).is_coloop_free()) coloop_free.push_back(f);
  return parallel_map(coloop_free, [&](const Flat& f) {
    StratumDatum s;
    s.dim_S = 2 * (m.rank() - f.rank);
    s.ih_poly = q_ih(m.restrict_flat(f));
    s.slice_p0 = p_zero(m.localize(f));
    s.weight_n = 2;
    return s;
  });
}

bool LaplacianReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

nlohmann::json LaplacianReport::to_json() const {
  nlohmann::json j;
  j["hypotheses"] = {{"loop_free", loop_free}, {"coloop_free", coloop_free}};
  j["hypotheses"]["unimodular"] = unimodular ? nlohmann::json(*unimodular) : nlohmann::json();
  if (!hypotheses_hold()) j["warning"] = "arrangement violates the theorem's hypotheses";
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  j["passed"] = passed();
  return j;
}

LaplacianReport verify_laplacian(const Matroid& m) {
  LaplacianReport r;
  r.loop_free = m.is_loop_free();
  r.coloop_free = m.is_coloop_free();
  if (m.size() <= kExhaustiveLimit) r.unimodular = m.is_unimodular();

  const auto p = hypertoric_poincare(m);
  const auto t = m.tutte();
  r.checks.push_back({"flat_sum_equals_phi_form", p, hypertoric_poincare_via_phi(m)});

  const auto at_y1 = p.substitute("y", 1).with_variables({"x"});
  r.checks.push_back({"y1_equals_tutte", at_y1,
                      t.substitute("y", 1).substitute("x", x().pow(2)).with_variables({"x"})});
  const auto h = m.h_independence();
  r.checks.push_back({"y1_equals_h", at_y1,
                      (x_pow(2 * m.rank()) * h.substitute("t", x_pow(-2))).with_variables({"x"})});

  const auto direct = p_zero(m);
  r.checks.push_back({"x0_equals_p_zero", p.substitute("x", 0).with_variables({"y"}), direct});
  r.checks.push_back({"p_zero_gale_dual", direct, p_zero_via_dual(m)});
  return r;
}

}  // namespace poisson
