#pragma once

// Lagrangian densities, Hamiltonian densities and currents of the Dirac and
// complex Klein-Gordon fields, written the way they are usually printed
// (products of covariant-derivative factors) and left uncanonicalized.
//
// Index conventions: Dirac couples to the covariant potential A[mu],
// mu = 0..3; the KG expressions use V and the components A[k], k = 1..3,
// exactly as they appear in the Pauli-Weisskopf form. Spinor indices run
// 0..3 and gamma^mu[a,b] stays an uninterpreted tag.

#include <vector>

#include "densbench/symexpr.hpp"

namespace densbench::sym::models {

/// psibar [gamma^mu (i d_mu - e A_mu) - m] psi
Expr dirac_lagrangian();
/// psibar gamma^0 psi
Expr dirac_density();
/// psibar gamma^mu psi
Expr dirac_current(int mu);
/// Hand-expanded [gamma^mu (i d_mu - e A_mu) - m] psi, row `a`.
Expr dirac_equation_row(int a);
std::vector<Atom> dirac_fields();  // psi[0..3], psibar[0..3]

/// (phi*_0 - ieV phi*)(phi_0 + ieV phi) - sum_k (phi*_k + ieA_k phi*)(phi_k - ieA_k phi) - m^2 phi* phi
Expr kg_lagrangian();
/// Same factors with the spatial and mass terms entering with + sign.
Expr kg_hamiltonian_density();
/// i(phi* phi_0 - phi*_0 phi) - 2eV phi* phi
Expr kg_density();
/// k-th component of i((grad phi*) phi - phi* grad phi) - 2eA phi* phi
Expr kg_current(int k);
/// Hand-expanded D_mu D^mu phi + m^2 phi with D_0 = d_0 + ieV, D_k = d_k - ieA_k.
Expr kg_field_equation();
std::vector<Atom> kg_fields();  // phi, phi*

}  // namespace densbench::sym::models
