#pragma once

#include "cwb/axioms.hpp"

namespace cwb {

// (phi, psi, l, r, g, circ) over (R, Q). Tables are sesquilinear in the same
// way as a lambda-product:
//   phi(x)_lam a, psi(x)_lam a : Q x R -> R
//   l(a)_lam x,   r(a)_lam x   : R x Q -> Q
//   g_lam(x, y)                : Q x Q -> R
//   x circ_lam y               : Q x Q -> Q
struct ExtendingDatum {
  Algebra R;
  FreeModule Q;
  std::vector<std::string> params;
  LambdaTable phi, psi, l, r, g, circ;

  static ExtendingDatum zero(const Algebra& R, const FreeModule& Q);
  void validate() const;
  bool has_parameters() const;
  ExtendingDatum assign(const std::map<std::string, Rational>& bindings) const;
  Algebra q_algebra() const;  // (Q, circ)
};

// E = R + Q with recorded block decomposition: the first r_rank basis
// vectors span R.
struct ProductAlgebra {
  Algebra E;
  std::size_t r_rank = 0;

  FreeModule r_module() const;
  FreeModule q_module() const;
};

LawSet extending_laws(const ExtendingDatum& d);
CheckReport check_extending_structure(const ExtendingDatum& d);

ProductAlgebra build_unified_unchecked(const ExtendingDatum& d);
// Throws PreconditionError when the datum fails LC1-LC10.
ProductAlgebra build_unified(const ExtendingDatum& d);

// Throws std::invalid_argument when R is not closed under the product.
ExtendingDatum extract_datum(const ProductAlgebra& P);

// Lie extending structure on the sub-adjacent algebra.
struct LieDatum {
  LambdaTable triangleleft;   // Q x R -> Q
  LambdaTable triangleright;  // Q x R -> R
  LambdaTable f;              // Q x Q -> R
  LambdaTable bracket;        // Q x Q -> Q
};
LieDatum induced_lie_datum_unchecked(const ExtendingDatum& d);
LieDatum induced_lie_datum(const ExtendingDatum& d);
// Bracket on R + Q assembled from the sub-adjacent table of R and a Lie datum.
LambdaTable assemble_lie_unified(const LambdaTable& r_lie, const LieDatum& ld);

// Throws std::invalid_argument when l or r is nonzero.
CheckReport check_crossed(const ExtendingDatum& d);
// Throws std::invalid_argument when g is nonzero.
CheckReport check_bicrossed(const ExtendingDatum& d);
LawSet crossed_laws(const ExtendingDatum& d);
LawSet bicrossed_laws(const ExtendingDatum& d);

// Witness (u, v) relating d to d2: u(x_i) in R, v(x_i) in Q, both d-linear maps.
struct DatumWitness {
  std::vector<Element> u;
  std::vector<Element> v;
};
LawSet datum_equiv_laws(const ExtendingDatum& d, const ExtendingDatum& d2, const DatumWitness& w);
CheckReport check_datum_equiv(const ExtendingDatum& d, const ExtendingDatum& d2, const DatumWitness& w);

// Applies a d-linear map given by its values on basis vectors.
Element apply_linear(const std::vector<Element>& images, const Element& v, std::size_t target);

}  // namespace cwb
