#pragma once

#include <optional>

#include "cwb/laws.hpp"

namespace cwb {

LawSet derivation_laws(const Algebra& R, const OperatorTable& D);
CheckReport check_derivation(const Algebra& R, const OperatorTable& D);

// g_{-lam-d}(a, -lam-mu) is read sequentially: the spectral slot becomes
// -lam-d first, then d is replaced by -lam-mu in the whole value.
LawSet twisted_derivation_laws(const Algebra& R, const OperatorTable& D, const OperatorTable& g);
CheckReport check_twisted_derivation(const Algebra& R, const OperatorTable& D, const OperatorTable& g);

LawSet semiquasicentroid_laws(const Algebra& R, const OperatorTable& T);
CheckReport check_semiquasicentroid(const Algebra& R, const OperatorTable& T);

// T^b_lam(a) = a_{-lam-d} b.
OperatorTable inner_semiquasicentroid(const Algebra& R, const Element& b);

// Operator whose entries are sum_{p+q<=deg} u * lam^p d^q with fresh unknowns.
struct GenericOperator {
  OperatorTable op;
  std::vector<Var> unknowns;
};
GenericOperator generic_operator(Variance v, std::size_t source, std::size_t target, unsigned deg,
                                 std::size_t first_unknown = 0);
OperatorTable instantiate(const GenericOperator& g, const std::vector<Rational>& values);

struct SolutionSpace {
  std::size_t dimension = 0;
  std::vector<OperatorTable> basis;
};

// Conformal derivations with entries of total degree <= bound in (lam, d).
SolutionSpace solve_derivations(const Algebra& R, unsigned bound);
// Same dimension by a dense column-per-unit-operator assembly and a separate rank routine.
std::size_t derivation_dimension_dense(const Algebra& R, unsigned bound);

// b of d-degree <= bound with T = T^b, or nullopt when none exists within the bound.
std::optional<Element> solve_inner_witness(const Algebra& R, const OperatorTable& T, unsigned bound);

// Throws std::invalid_argument if any table entry still carries a parameter.
void require_numeric(const Algebra& R);

}  // namespace cwb
