#pragma once

#include <span>
#include <vector>

#include "cwb/poly.hpp"

namespace cwb {

using Matrix = std::vector<std::vector<Rational>>;

struct AffineSolution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<Rational> particular;              // free coordinates set to 0
  std::vector<std::vector<Rational>> nullspace;  // one vector per free column
};

// Solves A x = b exactly by fraction-free elimination on integer rows.
AffineSolution solve_affine(const Matrix& A, const std::vector<Rational>& b, std::size_t cols);

// Rank by plain Gauss-Jordan over the rationals (kept separate from the
// fraction-free route so the two can cross-check each other).
std::size_t rank_gauss_jordan(Matrix A);

// Coefficient matching: every residual must vanish identically in the
// non-unknown variables. Residuals must be affine in the unknowns.
struct LinearSystem {
  Matrix A;
  std::vector<Rational> b;
};
LinearSystem match_coefficients(std::span<const Poly> residuals, const std::vector<Var>& unknowns);

// Fresh solver unknowns u_first .. u_{first+count-1}.
std::vector<Var> make_unknowns(std::size_t first, std::size_t count);

std::map<Var, Poly> bind_unknowns(const std::vector<Var>& unknowns, const std::vector<Rational>& values);

}  // namespace cwb
