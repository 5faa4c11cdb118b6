#include "densbench/models.hpp"

namespace densbench::sym::models {

namespace {

const Expr I{Coeff::i()};

Expr d(const Atom& a, int mu) { return Expr(a.d(mu)); }

}  // namespace

Expr dirac_lagrangian() {
  const Expr e(charge());
  const Expr m(mass());
  std::vector<Expr> terms;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int mu = 0; mu < 4; ++mu) {
        terms.push_back(Expr(psibar(a)) * Expr(gamma(mu, a, b)) *
                        (I * d(psi(b), mu) - e * Expr(vector_potential(mu)) * Expr(psi(b))));
      }
    }
    terms.push_back(-(m * Expr(psibar(a)) * Expr(psi(a))));
  }
  return Expr::sum(std::move(terms));
}

Expr dirac_current(int mu) {
  std::vector<Expr> terms;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) terms.push_back(Expr(psibar(a)) * Expr(gamma(mu, a, b)) * Expr(psi(b)));
  }
  return Expr::sum(std::move(terms));
}

Expr dirac_density() { return dirac_current(0); }

Expr dirac_equation_row(int a) {
  const Expr e(charge());
  std::vector<Expr> terms;
  for (int b = 0; b < 4; ++b) {
    for (int mu = 0; mu < 4; ++mu) {
      terms.push_back(Expr(gamma(mu, a, b)) * I * d(psi(b), mu));
      terms.push_back(-(Expr(gamma(mu, a, b)) * e * Expr(vector_potential(mu)) * Expr(psi(b))));
    }
  }
  terms.push_back(-(Expr(mass()) * Expr(psi(a))));
  return Expr::sum(std::move(terms));
}

std::vector<Atom> dirac_fields() {
  std::vector<Atom> out;
  for (int a = 0; a < 4; ++a) out.push_back(psi(a));
  for (int a = 0; a < 4; ++a) out.push_back(psibar(a));
  return out;
}

namespace {

// (phi*_{,0} - ieV phi*), (phi_{,0} + ieV phi)
Expr time_factor_conj() {
  return d(phi_conj(), 0) - I * Expr(charge()) * Expr(scalar_potential()) * Expr(phi_conj());
}
Expr time_factor() { return d(phi(), 0) + I * Expr(charge()) * Expr(scalar_potential()) * Expr(phi()); }

// (phi*_{,k} + ieA_k phi*), (phi_{,k} - ieA_k phi)
Expr space_factor_conj(int k) {
  return d(phi_conj(), k) + I * Expr(charge()) * Expr(vector_potential(k)) * Expr(phi_conj());
}
Expr space_factor(int k) {
  return d(phi(), k) - I * Expr(charge()) * Expr(vector_potential(k)) * Expr(phi());
}

Expr kg_quadratic_form(int sign) {
  const Expr m(mass());
  std::vector<Expr> terms{time_factor_conj() * time_factor()};
  for (int k = 1; k <= 3; ++k) terms.push_back(Expr(sign) * space_factor_conj(k) * space_factor(k));
  terms.push_back(Expr(sign) * m * m * Expr(phi_conj()) * Expr(phi()));
  return Expr::sum(std::move(terms));
}

}  // namespace

Expr kg_lagrangian() { return kg_quadratic_form(-1); }

Expr kg_hamiltonian_density() { return kg_quadratic_form(+1); }

Expr kg_density() {
  return I * (Expr(phi_conj()) * d(phi(), 0) - d(phi_conj(), 0) * Expr(phi())) -
         Expr(2) * Expr(charge()) * Expr(scalar_potential()) * Expr(phi_conj()) * Expr(phi());
}

Expr kg_current(int k) {
  return I * (d(phi_conj(), k) * Expr(phi()) - Expr(phi_conj()) * d(phi(), k)) -
         Expr(2) * Expr(charge()) * Expr(vector_potential(k)) * Expr(phi_conj()) * Expr(phi());
}

Expr kg_field_equation() {
  const Expr e(charge());
  const Expr V(scalar_potential());
  const Expr f(phi());
  Expr out = Expr(phi().d(0).d(0)) + I * e * d(scalar_potential(), 0) * f + Expr(2) * I * e * V * d(phi(), 0) -
             e * e * V * V * f + Expr(mass()) * Expr(mass()) * f;
  for (int k = 1; k <= 3; ++k) {
    const Expr A(vector_potential(k));
    out = out - Expr(phi().d(k).d(k)) + I * e * d(vector_potential(k), k) * f + Expr(2) * I * e * A * d(phi(), k) +
          e * e * A * A * f;
  }
  return out;
}

std::vector<Atom> kg_fields() { return {phi(), phi_conj()}; }

}  // namespace densbench::sym::models
