#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cwb {

using Rational = mpq_class;

enum class VarKind { module, spectral, parameter, unknown };

// Interned variable handle. Ids 0..3 are the reserved variables d, lam, mu, nu
// in that order; parameters and solver unknowns are interned on first use.
class Var {
 public:
  constexpr Var() = default;
  constexpr explicit Var(std::uint32_t id) : id_(id) {}

  static Var d() { return Var(0); }
  static Var lam() { return Var(1); }
  static Var mu() { return Var(2); }
  static Var nu() { return Var(3); }

  static Var parameter(std::string_view name);
  // Solver-internal indeterminate; never collides with user parameters.
  static Var unknown(std::size_t index);
  // Reserved name or an already interned parameter.
  static Var lookup(std::string_view name);

  static bool is_reserved_name(std::string_view name);

  std::uint32_t id() const { return id_; }
  VarKind kind() const;
  const std::string& name() const;

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend auto operator<=>(Var a, Var b) { return a.id_ <=> b.id_; }

 private:
  std::uint32_t id_ = 0;
};

// Variable precedence for canonical printing: d < lam < mu < nu < parameters
// (alphabetical) < unknowns.
bool precedes(Var a, Var b);

// Exponent vector indexed by Var id, trailing zeros trimmed.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, std::uint32_t e = 1);

  std::uint32_t exponent(Var v) const {
    return v.id() < exps_.size() ? exps_[v.id()] : 0;
  }
  std::uint32_t total_degree() const;
  bool is_one() const { return exps_.empty(); }

  Monomial operator*(const Monomial& o) const;
  Monomial without(Var v) const;
  std::vector<Var> variables() const;

  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  void trim();
  std::vector<std::uint32_t> exps_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

class Poly;

// Maps identifiers met by the parser to polynomials. Throws ParseError for
// names it does not know.
using IdentResolver = std::function<Poly(std::string_view name, std::size_t pos)>;

// Exact multivariate polynomial over the rationals. Terms are kept sorted by
// monomial with no zero coefficients, so structural equality is polynomial
// equality.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Poly() = default;
  Poly(const Rational& c);
  Poly(long c) : Poly(Rational(c)) {}
  Poly(int c) : Poly(Rational(c)) {}
  static Poly var(Var v);
  static Poly monomial(const Monomial& m, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned e) const;

  // Ring homomorphism v -> q fixing every other variable.
  Poly subst(Var v, const Poly& q) const;
  // All replacements applied at once (no re-substitution into the images).
  // Parameters cannot be substituted; use assign.
  Poly subst(const std::map<Var, Poly>& images) const;
  // Replace parameters by rationals; unbound parameters stay symbolic.
  Poly assign(const std::map<std::string, Rational>& bindings) const;
  Rational evaluate(const std::map<Var, Rational>& point) const;

  std::set<Var> variables() const;
  bool mentions(Var v) const;
  bool has_parameters() const;
  std::uint32_t degree_in(Var v) const;
  std::uint32_t total_degree() const;

  // Splits p = sum_m m * c_m where m ranges over monomials in `vars` only.
  std::map<Monomial, Poly> coefficients_in(std::span<const Var> vars) const;
  // Coefficient of `v` in a polynomial of degree <= 1 in the unknown variables.
  Rational linear_coefficient(Var v) const;

  std::string to_string() const;

  static Poly parse(std::string_view src, const IdentResolver& resolve);
  // Accepts d, lam, mu, nu and the given parameter names.
  static Poly parse(std::string_view src, const std::set<std::string>& params);

 private:
  void normalize();
  Poly subst_unchecked(const std::map<Var, Poly>& images) const;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Convenience handles for the reserved variables.
inline Poly d_() { return Poly::var(Var::d()); }
inline Poly lam_() { return Poly::var(Var::lam()); }
inline Poly mu_() { return Poly::var(Var::mu()); }
inline Poly nu_() { return Poly::var(Var::nu()); }

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

}  // namespace cwb
