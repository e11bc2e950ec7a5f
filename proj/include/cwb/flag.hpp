#pragma once

#include <optional>

#include "cwb/operators.hpp"
#include "cwb/products.hpp"

namespace cwb {

// Extension data for Q = C[d]x of rank one over R.
//   h, k : left-conformal functionals R -> C[lam, d]
//   D, T : conformal operators R -> R
//   M    : element of R with coefficients in (lam, d);  P : polynomial in (lam, d)
struct FlagDatum {
  Algebra R;
  std::string generator;
  std::vector<std::string> params;
  OperatorTable h, k, D, T;
  Element M;
  Poly P;

  static FlagDatum zero(const Algebra& R);
  void validate() const;
  bool has_parameters() const;
  FlagDatum assign(const std::map<std::string, Rational>& bindings) const;
};

// "x" unless R already uses it; then y, z, x1, x2, ...
std::string default_generator(const Algebra& R);

LawSet flag_laws(const FlagDatum& fd);
CheckReport check_flag(const FlagDatum& fd);

ExtendingDatum flag_to_datum(const FlagDatum& fd);
// Inverse translation; Q must have rank one.
FlagDatum datum_to_flag(const ExtendingDatum& d);

ProductAlgebra build_flag_extension_unchecked(const FlagDatum& fd);
// Throws PreconditionError carrying the check_flag report.
ProductAlgebra build_flag_extension(const FlagDatum& fd);

struct EquivWitness {
  Element omega;
  Rational beta = 1;
};

// general: the full four-equation system; dflc1 / dflc2: the specialized forms.
enum class EquivForm { general, dflc1, dflc2 };

LawSet equiv_laws(const FlagDatum& fd1, const FlagDatum& fd2, const EquivWitness& w,
                  EquivForm form = EquivForm::general);
// Reports equiv-h / equiv-k failures without looking at the witness when the
// functionals differ.
CheckReport check_equiv(const FlagDatum& fd1, const FlagDatum& fd2, const EquivWitness& w,
                        EquivForm form = EquivForm::general);

enum class SearchStatus { found, none_within_bound, rejected, inconclusive };
std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::none_within_bound;
  std::optional<EquivWitness> witness;
  std::string detail;
};

std::vector<Rational> default_betas();
// omega ranges over elements whose coefficients have d-degree <= bound.
SearchResult search_equiv(const FlagDatum& fd1, const FlagDatum& fd2, unsigned bound,
                          const std::vector<Rational>& betas = default_betas());

enum class DflcTag { dflc1, dflc2, neither };
std::string to_string(DflcTag t);

struct DflcMembership {
  DflcTag tag = DflcTag::neither;
  bool consistent = false;  // derivation (dflc1) or twisted derivation (dflc2) check passed
  CheckReport report;
};
DflcMembership check_dflc_membership(const FlagDatum& fd);

// Crossed datum over a rank-two R = C[d]L + C[d]W from (k0, p1, p0, h);
// k0, p1, p0 are polynomials in lam.
FlagDatum example53_datum(const Algebra& R, const Poly& k0, const Poly& p1, const Poly& p0, const Rational& h);

}  // namespace cwb
