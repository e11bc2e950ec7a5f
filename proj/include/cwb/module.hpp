#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cwb/poly.hpp"

namespace cwb {

// Ordered basis of a free module over the polynomial ring in d.
struct FreeModule {
  std::vector<std::string> basis;

  std::size_t rank() const { return basis.size(); }
  std::size_t index_of(std::string_view name) const;  // throws if absent
};

// Coefficient vector with respect to a basis.
using Element = std::vector<Poly>;

Element zero_element(std::size_t rank);
Element basis_element(std::size_t rank, std::size_t i);
bool is_zero(const Element& e);

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(const Poly& s, Element a);

// Coefficientwise substitution of a spectral variable (or d).
Element shift_spectral(const Element& e, Var v, const Poly& expr);
Element subst(const Element& e, const std::map<Var, Poly>& images);

// Structure constants of a conformally sesquilinear map left x right -> target.
// entry(i, j) holds the image of (e_i, e_j) at spectral variable lam.
class LambdaTable {
 public:
  LambdaTable() = default;
  LambdaTable(std::size_t left, std::size_t right, std::size_t target);
  static LambdaTable square(std::size_t n) { return LambdaTable(n, n, n); }

  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }
  std::size_t target() const { return target_; }

  const Element& entry(std::size_t i, std::size_t j) const { return entries_[i * right_ + j]; }
  Element& entry(std::size_t i, std::size_t j) { return entries_[i * right_ + j]; }

  bool is_zero() const;
  bool mentions(Var v) const;
  bool has_parameters() const;
  LambdaTable assign(const std::map<std::string, Rational>& bindings) const;

  friend bool operator==(const LambdaTable&, const LambdaTable&) = default;

 private:
  std::size_t left_ = 0, right_ = 0, target_ = 0;
  std::vector<Element> entries_;
};

// a_s b extended from the table: sum_ij a_i(-s) b_j(d+s) P_ij(s, d).
// s may be any polynomial, including ones in d such as -lam-d.
Element eval_at(const LambdaTable& t, const Element& a, const Element& b, const Poly& s);

// Same with a named output variable that must not occur in a or b.
Element eval_lambda(const LambdaTable& t, const Element& a, const Element& b, Var out);

enum class Variance { conformal, left_conformal };

// Values of an operator on basis vectors, as polynomials in (lam, d).
// A functional (h, k, g) is a left-conformal operator with target rank 1.
struct OperatorTable {
  Variance variance = Variance::conformal;
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<Element> images;

  static OperatorTable zero(Variance v, std::size_t source, std::size_t target);
  static OperatorTable functional(std::vector<Poly> values);

  bool is_zero() const;
  bool has_parameters() const;
  OperatorTable assign(const std::map<std::string, Rational>& bindings) const;
  friend bool operator==(const OperatorTable&, const OperatorTable&) = default;
};

// Conformal: D_s(f(d) e_i) = f(d+s) D_i(s, d).  Left-conformal: h_s(f(d) e_i) = f(-s) h_i(s, d).
Element apply_at(const OperatorTable& op, const Element& v, const Poly& s);
Element apply_operator(const OperatorTable& op, const Element& v, Var out);

// Two-slot functional h_s(v, t): the value's d is replaced by t.
Poly functional_at(const OperatorTable& h, const Element& v, const Poly& s, const Poly& t);

// Current algebra of a finite-dimensional algebra: a_lam b = a o b.
// mult[i][j] is the coordinate vector of e_i o e_j.
LambdaTable build_current(const std::vector<std::vector<std::vector<Rational>>>& mult);

// A module with a lambda-product on itself.
struct Algebra {
  std::string name;
  std::vector<std::string> params;
  FreeModule module;
  LambdaTable table;

  std::size_t rank() const { return module.rank(); }
  const std::vector<std::string>& basis() const { return module.basis; }
  Algebra assign(const std::map<std::string, Rational>& bindings) const;
};

std::string format_element(const Element& e, const std::vector<std::string>& names);

}  // namespace cwb
