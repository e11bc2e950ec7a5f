#include "cwb/linsolve.hpp"

#include <numeric>
#include <stdexcept>

namespace cwb {

namespace {

using IntRow = std::vector<mpz_class>;

IntRow to_integer_row(const std::vector<Rational>& row) {
  mpz_class l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(q.get_num() * (l / q.get_den()));
  return out;
}

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& v : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

AffineSolution solve_affine(const Matrix& A, const std::vector<Rational>& b, std::size_t cols) {
  if (A.size() != b.size()) throw std::invalid_argument("right-hand side length mismatch");
  std::vector<IntRow> rows;
  rows.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != cols) throw std::invalid_argument("row length mismatch");
    std::vector<Rational> aug = A[i];
    aug.push_back(b[i]);
    rows.push_back(to_integer_row(aug));
    remove_content(rows.back());
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    if (rows[r][c] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpz_class f = rows[i][c], piv = rows[r][c];
      for (std::size_t k = 0; k <= cols; ++k) rows[i][k] = piv * rows[i][k] - f * rows[r][k];
      remove_content(rows[i]);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  AffineSolution sol;
  sol.rank = r;
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][cols] != 0) return sol;
  sol.consistent = true;

  std::vector<long> pivot_row_of(cols, -1);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) pivot_row_of[pivot_cols[i]] = static_cast<long>(i);

  sol.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    Rational v(rows[i][cols], rows[i][pivot_cols[i]]);
    v.canonicalize();
    sol.particular[pivot_cols[i]] = v;
  }
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_row_of[f] >= 0) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      Rational q(-rows[i][f], rows[i][pivot_cols[i]]);
      q.canonicalize();
      v[pivot_cols[i]] = q;
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::size_t rank_gauss_jordan(Matrix A) {
  std::size_t rank = 0;
  const std::size_t cols = A.empty() ? 0 : A[0].size();
  for (std::size_t c = 0; c < cols && rank < A.size(); ++c) {
    std::size_t p = rank;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[rank], A[p]);
    Rational inv = 1 / A[rank][c];
    for (auto& v : A[rank]) v *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == rank || A[i][c] == 0) continue;
      Rational f = A[i][c];
      for (std::size_t k = c; k < cols; ++k) A[i][k] -= f * A[rank][k];
    }
    ++rank;
  }
  return rank;
}

LinearSystem match_coefficients(std::span<const Poly> residuals, const std::vector<Var>& unknowns) {
  std::map<std::uint32_t, std::size_t> column;
  for (std::size_t k = 0; k < unknowns.size(); ++k) column[unknowns[k].id()] = k;

  LinearSystem sys;
  for (const auto& res : residuals) {
    // monomial in the ordinary variables -> (coefficients of unknowns, constant)
    std::map<Monomial, std::pair<std::vector<Rational>, Rational>> rows;
    for (const auto& t : res.terms()) {
      Monomial rest;
      long col = -1;
      for (Var v : t.mono.variables()) {
        auto e = t.mono.exponent(v);
        if (auto it = column.find(v.id()); it != column.end()) {
          if (e != 1 || col >= 0) throw std::invalid_argument("residual is not linear in the unknowns");
          col = static_cast<long>(it->second);
        } else {
          if (v.kind() == VarKind::unknown) throw std::invalid_argument("residual mentions a foreign unknown");
          rest = rest * Monomial::of(v, e);
        }
      }
      auto& row = rows[rest];
      if (row.first.empty()) row.first.assign(unknowns.size(), Rational(0));
      if (col >= 0)
        row.first[static_cast<std::size_t>(col)] += t.coeff;
      else
        row.second += t.coeff;
    }
    for (auto& [mono, row] : rows) {
      sys.A.push_back(std::move(row.first));
      sys.b.push_back(-row.second);
    }
  }
  return sys;
}

std::vector<Var> make_unknowns(std::size_t first, std::size_t count) {
  std::vector<Var> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(Var::unknown(first + k));
  return out;
}

std::map<Var, Poly> bind_unknowns(const std::vector<Var>& unknowns, const std::vector<Rational>& values) {
  std::map<Var, Poly> m;
  for (std::size_t k = 0; k < unknowns.size(); ++k) m.emplace(unknowns[k], Poly(values.at(k)));
  return m;
}

}  // namespace cwb
