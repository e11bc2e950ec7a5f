#include "cwb/axioms.hpp"

namespace cwb {

namespace {

Element e_(std::size_t n, std::size_t i) { return basis_element(n, i); }

}  // namespace

LawSet lsca_laws(const Algebra& R, const std::string& name) {
  const auto& t = R.table;
  const std::size_t n = R.rank();
  Law law{name, {R.basis(), R.basis(), R.basis()}, R.basis(), nullptr};
  law.residual = [&t, n](IndexTuple ix) {
    Element a = e_(n, ix[0]), b = e_(n, ix[1]), c = e_(n, ix[2]);
    const Poly lam = lam_(), mu = mu_(), lm = lam_plus_mu();
    return eval_at(t, eval_at(t, a, b, lam), c, lm) - eval_at(t, a, eval_at(t, b, c, mu), lam) -
           eval_at(t, eval_at(t, b, a, mu), c, lm) + eval_at(t, b, eval_at(t, a, c, lam), mu);
  };
  return {law};
}

CheckReport check_lsca(const Algebra& R) { return run_laws(lsca_laws(R)); }

LawSet skew_laws(const Algebra& L) {
  const auto& t = L.table;
  Law law{"skew-symmetry", {L.basis(), L.basis()}, L.basis(), nullptr};
  law.residual = [&t](IndexTuple ix) {
    return t.entry(ix[0], ix[1]) + shift_spectral(t.entry(ix[1], ix[0]), Var::lam(), neg_lam_d());
  };
  return {law};
}

LawSet jacobi_laws(const Algebra& L) {
  const auto& t = L.table;
  const std::size_t n = L.rank();
  Law law{"jacobi", {L.basis(), L.basis(), L.basis()}, L.basis(), nullptr};
  law.residual = [&t, n](IndexTuple ix) {
    Element a = e_(n, ix[0]), b = e_(n, ix[1]), c = e_(n, ix[2]);
    const Poly lam = lam_(), mu = mu_();
    return eval_at(t, a, eval_at(t, b, c, mu), lam) - eval_at(t, eval_at(t, a, b, lam), c, lam_plus_mu()) -
           eval_at(t, b, eval_at(t, a, c, lam), mu);
  };
  return {law};
}

CheckReport check_lie(const Algebra& L) {
  CheckReport skew = run_laws(skew_laws(L));
  if (!skew.passed()) return skew;
  return run_laws(jacobi_laws(L));
}

LambdaTable subadjacent_table(const LambdaTable& t) {
  if (t.left() != t.right() || t.left() != t.target()) throw std::invalid_argument("table is not square");
  LambdaTable out = LambdaTable::square(t.left());
  for (std::size_t i = 0; i < t.left(); ++i)
    for (std::size_t j = 0; j < t.right(); ++j)
      out.entry(i, j) = t.entry(i, j) - shift_spectral(t.entry(j, i), Var::lam(), neg_lam_d());
  return out;
}

Algebra subadjacent(const Algebra& R) {
  CheckReport report = check_lsca(R);
  if (!report.passed()) throw PreconditionError("input is not a left-symmetric conformal algebra", report);
  Algebra L = R;
  L.name = R.name.empty() ? "" : "g(" + R.name + ")";
  L.table = subadjacent_table(R.table);
  return L;
}

LawSet bimodule_laws(const LambdaTable& A, const LambdaTable& l, const LambdaTable& r,
                     const std::vector<std::string>& a_names, const std::vector<std::string>& v_names,
                     const std::string& suffix) {
  if (l.left() != A.left() || r.left() != A.left() || l.right() != v_names.size() ||
      r.right() != v_names.size() || l.target() != v_names.size() || r.target() != v_names.size())
    throw std::invalid_argument("dimension mismatch in bimodule actions");
  const std::size_t n = A.left(), m = v_names.size();
  Law bm1{"bm1" + suffix, {a_names, a_names, v_names}, v_names, nullptr};
  bm1.residual = [&A, &l, n, m](IndexTuple ix) {
    Element a = e_(n, ix[0]), b = e_(n, ix[1]), v = e_(m, ix[2]);
    const Poly lam = lam_(), mu = mu_(), lm = lam_plus_mu();
    return eval_at(l, eval_at(A, a, b, lam), v, lm) - eval_at(l, a, eval_at(l, b, v, mu), lam) -
           eval_at(l, eval_at(A, b, a, mu), v, lm) + eval_at(l, b, eval_at(l, a, v, lam), mu);
  };
  Law bm2{"bm2" + suffix, {a_names, a_names, v_names}, v_names, nullptr};
  bm2.residual = [&A, &l, &r, n, m](IndexTuple ix) {
    Element a = e_(n, ix[0]), b = e_(n, ix[1]), v = e_(m, ix[2]);
    const Poly lam = lam_(), nlmd = neg_lam_mu_d(), nmd = neg_mu_d();
    return eval_at(r, b, eval_at(l, a, v, lam), nlmd) - eval_at(l, a, eval_at(r, b, v, nmd), lam) -
           eval_at(r, b, eval_at(r, a, v, nmd), nlmd) + eval_at(r, eval_at(A, a, b, lam), v, nmd);
  };
  return {bm1, bm2};
}

CheckReport check_bimodule(const Algebra& R, const LambdaTable& l, const LambdaTable& r, const FreeModule& V) {
  return run_laws(bimodule_laws(R.table, l, r, R.basis(), V.basis));
}

}  // namespace cwb
