#pragma once

// Concrete Hopf algebras, comodule algebras and bimodules.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/comodule.hpp"
#include "hopfkit/equivariant.hpp"

namespace hk {

// Kac-Paljutkin algebra on 1, x, y, xy, z, zx, zy, zxy.
HopfAlgebra build_kp();
HopfPtr kp();  // shared instance of build_kp()

// Group algebra of the Klein four group on 1, x, y, xy (group element g <-> bits x=1, y=2).
HopfAlgebra build_klein();
Matrix klein_into_kp();  // 8 x 4
// Group algebra of Z/n on 1, g, g^2, ...
HopfAlgebra build_cyclic(size_t n);

// Regular comodule algebra H over itself.
ComoduleAlgebra regular(const HopfPtr& h, std::string name = "");
// k with lambda(1) = 1 (x) 1.
ComoduleAlgebra trivial_comodule_algebra(const HopfPtr& h);

// Klein four group 2-cochain, indexed by the bit encoding above.
struct Cocycle {
  std::array<std::array<Scalar, 4>, 4> table;
  const Scalar& operator()(size_t g, size_t h) const { return table[g][h]; }
  bool is_normalized() const;
  bool is_cocycle() const;

  static Cocycle trivial();
  static Cocycle klein_sign();  // psi(x^i y^j, x^k y^l) = (-1)^{jk}
  // psi'(g,h) = psi(g,h) c(g) c(h) / c(gh)
  Cocycle twisted_by(const std::array<Scalar, 4>& c) const;
};

ComoduleAlgebra build_twisted_group_algebra(const Cocycle& psi, std::string name = "");
Algebra matrix_algebra(size_t n);  // basis E_ij, row-major
Matrix kpsi_to_m2();               // 4 x 4, e_x -> E11 - E22, e_y -> E12 + E21

// Smallest subalgebra containing gens that is a left coideal.
Subspace coideal_span(const HopfPtr& h, const std::vector<Vec>& gens);
ComoduleAlgebra coideal_generated(const HopfPtr& h, const std::vector<Vec>& gens, std::string name = "");
// Coideal subalgebra k[G] for grouplikes given by KP labels ("x", "y", ...).
ComoduleAlgebra group_coideal(const std::vector<std::string>& labels, std::string name = "");

// 1, e_xy, v, w with v^2 = 1 - gamma e_xy, e_xy v = v e_xy = gamma w.
ComoduleAlgebra build_a_xy_gamma(const Scalar& gamma);
// Same structure constants without the gamma^2 = -1 check.
ComoduleAlgebra build_a_xy_gamma_unchecked(const Scalar& gamma);

struct SmashInput {
  HopfPtr h0;
  Algebra b;                    // graded algebra R
  std::vector<size_t> degree;   // degree of each basis element of R
  std::vector<Matrix> action;   // action[h]: t -> h . t
  Matrix b_coaction;            // (dim H0 * dim R) x dim R
  Matrix b_comult;              // braided coproduct, dim R^2 x dim R
  Vec b_counit;
  Matrix b_antipode;
  ComoduleAlgebra a0;           // over h0
};

struct SmashResult {
  HopfPtr hopf;             // R # H0
  ComoduleAlgebra algebra;  // R # A0 over R # H0
  LoewyGrading grading;     // by R-degree
  LoewyGrading hopf_grading;
};

// Sweedler-type data: H0 = k[Z/2], R = k[v]/(v^2), g.v = -v, delta(v) = g (x) v.
SmashInput sweedler_input(const ComoduleAlgebra& a0);
SmashResult smash_product(const SmashInput& in);

// The classification representatives: k, ga_x, ga_y, ga_xy, ga_K, a_xy_i, kp, kpsi.
std::vector<ComoduleAlgebra> catalog();
ComoduleAlgebra catalog_entry(const std::string& name);

// The comodule X on {v, w} with the right kK_psi action (target "kpsi") or its restriction to ga_x.
EquivariantModule build_bimodule_V(const std::string& target);
// Comodule X on {v, w} over KP.
Comodule comodule_x();

}  // namespace hk
