#include "cwb/operators.hpp"

#include "cwb/linsolve.hpp"

namespace cwb {

namespace {

void require_shape(const Algebra& R, const OperatorTable& op, Variance v, std::size_t target) {
  if (op.source != R.rank() || op.target != target || op.images.size() != R.rank())
    throw std::invalid_argument("dimension mismatch between operator and algebra");
  if (op.variance != v) throw std::invalid_argument("operator has the wrong variance");
}

}  // namespace

void require_numeric(const Algebra& R) {
  if (R.table.has_parameters())
    throw std::invalid_argument("symbolic parameters present; bind them with --bind before solving");
}

LawSet derivation_laws(const Algebra& R, const OperatorTable& D) {
  require_shape(R, D, Variance::conformal, R.rank());
  const auto& t = R.table;
  const std::size_t n = R.rank();
  Law law{"derivation", {R.basis(), R.basis()}, R.basis(), nullptr};
  law.residual = [&t, &D, n](IndexTuple ix) {
    Element a = basis_element(n, ix[0]), b = basis_element(n, ix[1]);
    const Poly lam = lam_(), mu = mu_();
    return eval_at(t, apply_at(D, a, lam), b, lam_plus_mu()) - apply_at(D, eval_at(t, a, b, mu), lam) +
           eval_at(t, a, apply_at(D, b, lam), mu);
  };
  return {law};
}

CheckReport check_derivation(const Algebra& R, const OperatorTable& D) { return run_laws(derivation_laws(R, D)); }

LawSet twisted_derivation_laws(const Algebra& R, const OperatorTable& D, const OperatorTable& g) {
  require_shape(R, D, Variance::conformal, R.rank());
  require_shape(R, g, Variance::left_conformal, 1);
  const auto& t = R.table;
  const std::size_t n = R.rank();
  Law law{"twisted-derivation", {R.basis(), R.basis()}, R.basis(), nullptr};
  law.residual = [&t, &D, &g, n](IndexTuple ix) {
    Element a = basis_element(n, ix[0]), b = basis_element(n, ix[1]);
    const Poly lam = lam_(), mu = mu_(), lm = lam_plus_mu();
    Poly twist = functional_at(g, a, neg_lam_d(), d_()).subst(Var::d(), -lam - mu);
    return eval_at(t, apply_at(D, a, lam), b, lm) + twist * apply_at(D, b, lm) -
           apply_at(D, eval_at(t, a, b, mu), lam) + eval_at(t, a, apply_at(D, b, lam), mu);
  };
  return {law};
}

CheckReport check_twisted_derivation(const Algebra& R, const OperatorTable& D, const OperatorTable& g) {
  return run_laws(twisted_derivation_laws(R, D, g));
}

LawSet semiquasicentroid_laws(const Algebra& R, const OperatorTable& T) {
  require_shape(R, T, Variance::conformal, R.rank());
  const auto& t = R.table;
  const std::size_t n = R.rank();
  Law law{"semi-quasicentroid", {R.basis(), R.basis()}, R.basis(), nullptr};
  law.residual = [&t, &T, n](IndexTuple ix) {
    Element a = basis_element(n, ix[0]), b = basis_element(n, ix[1]);
    const Poly lam = lam_(), mu = mu_();
    return apply_at(T, eval_at(t, a, b, lam) - eval_at(t, b, a, mu), neg_lam_mu_d()) -
           eval_at(t, a, apply_at(T, b, neg_mu_d()), lam) + eval_at(t, b, apply_at(T, a, neg_lam_d()), mu);
  };
  return {law};
}

CheckReport check_semiquasicentroid(const Algebra& R, const OperatorTable& T) {
  return run_laws(semiquasicentroid_laws(R, T));
}

OperatorTable inner_semiquasicentroid(const Algebra& R, const Element& b) {
  if (b.size() != R.rank()) throw std::invalid_argument("module mismatch for inner witness");
  OperatorTable T = OperatorTable::zero(Variance::conformal, R.rank(), R.rank());
  for (std::size_t i = 0; i < R.rank(); ++i) T.images[i] = eval_at(R.table, basis_element(R.rank(), i), b, neg_lam_d());
  return T;
}

GenericOperator generic_operator(Variance v, std::size_t source, std::size_t target, unsigned deg,
                                 std::size_t first_unknown) {
  std::vector<Monomial> monos;
  for (unsigned total = 0; total <= deg; ++total)
    for (unsigned p = 0; p <= total; ++p)
      monos.push_back(Monomial::of(Var::lam(), p) * Monomial::of(Var::d(), total - p));
  GenericOperator g{OperatorTable::zero(v, source, target), {}};
  g.unknowns = make_unknowns(first_unknown, source * target * monos.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < source; ++i)
    for (std::size_t j = 0; j < target; ++j)
      for (const auto& m : monos) g.op.images[i][j] += Poly::monomial(m) * Poly::var(g.unknowns[k++]);
  return g;
}

OperatorTable instantiate(const GenericOperator& g, const std::vector<Rational>& values) {
  auto images = bind_unknowns(g.unknowns, values);
  OperatorTable op = g.op;
  for (auto& e : op.images) e = subst(e, images);
  return op;
}

namespace {

std::vector<Poly> flatten_residuals(const LawSet& laws, std::size_t n) {
  std::vector<Poly> out;
  for (const auto& law : laws)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t ix[2] = {i, j};
        for (auto& p : law.residual(ix))
          if (!p.is_zero()) out.push_back(std::move(p));
      }
  return out;
}

}  // namespace

SolutionSpace solve_derivations(const Algebra& R, unsigned bound) {
  require_numeric(R);
  const std::size_t n = R.rank();
  GenericOperator g = generic_operator(Variance::conformal, n, n, bound);
  auto residuals = flatten_residuals(derivation_laws(R, g.op), n);
  LinearSystem sys = match_coefficients(residuals, g.unknowns);
  AffineSolution sol = solve_affine(sys.A, sys.b, g.unknowns.size());
  SolutionSpace space;
  space.dimension = sol.nullspace.size();
  for (const auto& v : sol.nullspace) space.basis.push_back(instantiate(g, v));
  return space;
}

std::size_t derivation_dimension_dense(const Algebra& R, unsigned bound) {
  require_numeric(R);
  const std::size_t n = R.rank();
  GenericOperator g = generic_operator(Variance::conformal, n, n, bound);
  const std::size_t cols = g.unknowns.size();
  // Each unit operator contributes one column: its residual coefficients,
  // indexed by (law tuple, component, monomial).
  std::vector<std::map<std::tuple<std::size_t, std::size_t, Monomial>, Rational>> columns(cols);
  std::set<std::tuple<std::size_t, std::size_t, Monomial>> keys;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Rational> unit(cols, Rational(0));
    unit[c] = 1;
    OperatorTable D = instantiate(g, unit);
    const auto& t = R.table;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Element a = basis_element(n, i), b = basis_element(n, j);
        Element res = eval_at(t, apply_at(D, a, lam_()), b, lam_plus_mu()) - apply_at(D, eval_at(t, a, b, mu_()), lam_()) +
                      eval_at(t, a, apply_at(D, b, lam_()), mu_());
        for (std::size_t k = 0; k < n; ++k)
          for (const auto& term : res[k].terms()) {
            auto key = std::make_tuple(i * n + j, k, term.mono);
            columns[c][key] = term.coeff;
            keys.insert(key);
          }
      }
  }
  Matrix A;
  for (const auto& key : keys) {
    std::vector<Rational> row(cols, Rational(0));
    for (std::size_t c = 0; c < cols; ++c)
      if (auto it = columns[c].find(key); it != columns[c].end()) row[c] = it->second;
    A.push_back(std::move(row));
  }
  return cols - rank_gauss_jordan(std::move(A));
}

std::optional<Element> solve_inner_witness(const Algebra& R, const OperatorTable& T, unsigned bound) {
  require_numeric(R);
  require_shape(R, T, Variance::conformal, R.rank());
  if (T.has_parameters()) throw std::invalid_argument("symbolic parameters present in the operator");
  const std::size_t n = R.rank();
  auto unknowns = make_unknowns(0, n * (bound + 1));
  Element b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned q = 0; q <= bound; ++q)
      b[i] += Poly::monomial(Monomial::of(Var::d(), q)) * Poly::var(unknowns[i * (bound + 1) + q]);
  OperatorTable Tb = inner_semiquasicentroid(R, b);
  std::vector<Poly> residuals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) residuals.push_back(Tb.images[i][k] - T.images[i][k]);
  LinearSystem sys = match_coefficients(residuals, unknowns);
  AffineSolution sol = solve_affine(sys.A, sys.b, unknowns.size());
  if (!sol.consistent) return std::nullopt;
  return subst(b, bind_unknowns(unknowns, sol.particular));
}

}  // namespace cwb
