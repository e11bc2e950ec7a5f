#pragma once

#include "cwb/laws.hpp"

namespace cwb {

LawSet lsca_laws(const Algebra& R, const std::string& name = "left-symmetry");
CheckReport check_lsca(const Algebra& R);

LawSet skew_laws(const Algebra& L);
LawSet jacobi_laws(const Algebra& L);
// Skew-symmetry first; Jacobi is only evaluated on skew-symmetric tables.
CheckReport check_lie(const Algebra& L);

// [a_lam b] = a_lam b - b_{-lam-d} a, without checking the input.
LambdaTable subadjacent_table(const LambdaTable& t);
// Throws PreconditionError when R is not left-symmetric.
Algebra subadjacent(const Algebra& R);

// Bimodule laws for left action l(a)_lam v and right action r(a)_lam v,
// both stored as tables A x V -> V.
LawSet bimodule_laws(const LambdaTable& A, const LambdaTable& l, const LambdaTable& r,
                     const std::vector<std::string>& a_names, const std::vector<std::string>& v_names,
                     const std::string& suffix = "");
CheckReport check_bimodule(const Algebra& R, const LambdaTable& l, const LambdaTable& r,
                           const FreeModule& V);

}  // namespace cwb
