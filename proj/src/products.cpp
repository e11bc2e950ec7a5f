#include "cwb/products.hpp"

namespace cwb {

ExtendingDatum ExtendingDatum::zero(const Algebra& R, const FreeModule& Q) {
  const std::size_t n = R.rank(), m = Q.rank();
  ExtendingDatum d{R, Q, R.params,
                   LambdaTable(m, n, n), LambdaTable(m, n, n),
                   LambdaTable(n, m, m), LambdaTable(n, m, m),
                   LambdaTable(m, m, n), LambdaTable(m, m, m)};
  return d;
}

void ExtendingDatum::validate() const {
  const std::size_t n = R.rank(), m = Q.rank();
  auto shape = [](const LambdaTable& t, std::size_t a, std::size_t b, std::size_t c, const char* name) {
    if (t.left() != a || t.right() != b || t.target() != c)
      throw std::invalid_argument(std::string("table ") + name + " has the wrong shape");
  };
  shape(R.table, n, n, n, "R");
  shape(phi, m, n, n, "phi");
  shape(psi, m, n, n, "psi");
  shape(l, n, m, m, "l");
  shape(r, n, m, m, "r");
  shape(g, m, m, n, "g");
  shape(circ, m, m, m, "circ");
  for (const auto& a : R.basis())
    for (const auto& x : Q.basis)
      if (a == x) throw std::invalid_argument("basis name '" + a + "' occurs in both R and Q");
}

bool ExtendingDatum::has_parameters() const {
  return R.table.has_parameters() || phi.has_parameters() || psi.has_parameters() || l.has_parameters() ||
         r.has_parameters() || g.has_parameters() || circ.has_parameters();
}

ExtendingDatum ExtendingDatum::assign(const std::map<std::string, Rational>& b) const {
  ExtendingDatum d = *this;
  d.R = R.assign(b);
  for (LambdaTable* t : {&d.phi, &d.psi, &d.l, &d.r, &d.g, &d.circ}) *t = t->assign(b);
  return d;
}

Algebra ExtendingDatum::q_algebra() const { return Algebra{"Q", params, Q, circ}; }

FreeModule ProductAlgebra::r_module() const {
  return FreeModule{{E.basis().begin(), E.basis().begin() + static_cast<long>(r_rank)}};
}

FreeModule ProductAlgebra::q_module() const {
  return FreeModule{{E.basis().begin() + static_cast<long>(r_rank), E.basis().end()}};
}

Element apply_linear(const std::vector<Element>& images, const Element& v, std::size_t target) {
  if (images.size() != v.size()) throw std::invalid_argument("module mismatch in linear map");
  Element out(target);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out = out + v[i] * images[i];
  return out;
}

namespace {

// Evaluation helpers named after the datum maps; s is the spectral argument.
struct Ops {
  const ExtendingDatum& d;
  Element R(const Element& a, const Element& b, const Poly& s) const { return eval_at(d.R.table, a, b, s); }
  Element phi(const Element& x, const Element& a, const Poly& s) const { return eval_at(d.phi, x, a, s); }
  Element psi(const Element& x, const Element& a, const Poly& s) const { return eval_at(d.psi, x, a, s); }
  Element l(const Element& a, const Element& x, const Poly& s) const { return eval_at(d.l, a, x, s); }
  Element r(const Element& a, const Element& x, const Poly& s) const { return eval_at(d.r, a, x, s); }
  Element g(const Element& x, const Element& y, const Poly& s) const { return eval_at(d.g, x, y, s); }
  Element circ(const Element& x, const Element& y, const Poly& s) const { return eval_at(d.circ, x, y, s); }
  Element a(std::size_t i) const { return basis_element(d.R.rank(), i); }
  Element x(std::size_t i) const { return basis_element(d.Q.rank(), i); }
};

Law make_law(const std::string& name, std::vector<std::vector<std::string>> slots, const std::vector<std::string>& target,
             std::function<Element(IndexTuple)> fn) {
  return Law{name, std::move(slots), target, std::move(fn)};
}

}  // namespace

LawSet extending_laws(const ExtendingDatum& d) {
  d.validate();
  const auto& Rn = d.R.basis();
  const auto& Qn = d.Q.basis;
  const Ops o{d};
  const Poly lam = lam_(), mu = mu_(), lm = lam_plus_mu(), nld = neg_lam_d(), nmd = neg_mu_d(),
             nlmd = neg_lam_mu_d();
  LawSet laws;

  laws.push_back(make_law("LC1", {Qn, Rn, Rn}, Rn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), a = o.a(ix[1]), b = o.a(ix[2]);
    Element lhs = o.R(o.phi(x, a, lam) - o.psi(x, a, lam), b, lm) + o.phi(o.r(a, x, mu) - o.l(a, x, mu), b, lm);
    Element rhs = o.phi(x, o.R(a, b, mu), lam) - o.R(a, o.phi(x, b, lam), mu) - o.psi(o.r(b, x, nld), a, nmd);
    return lhs - rhs;
  }));
  laws.push_back(make_law("LC2", {Qn, Rn, Rn}, Qn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), a = o.a(ix[1]), b = o.a(ix[2]);
    Element lhs = o.r(b, o.r(a, x, mu) - o.l(a, x, mu), nlmd);
    Element rhs = o.r(o.R(a, b, mu), x, nld) - o.l(a, o.r(b, x, nld), mu);
    return lhs - rhs;
  }));
  laws.push_back(make_law("LC3", {Rn, Rn, Qn}, Rn, [=](IndexTuple ix) {
    Element a = o.a(ix[0]), b = o.a(ix[1]), x = o.x(ix[2]);
    Element lhs = o.psi(x, o.R(a, b, lam) - o.R(b, a, mu), nlmd);
    Element rhs = o.R(a, o.psi(x, b, nmd), lam) - o.R(b, o.psi(x, a, nld), mu) + o.psi(o.l(b, x, mu), a, nld) -
                  o.psi(o.l(a, x, lam), b, nmd);
    return lhs - rhs;
  }));
  laws.push_back(make_law("LC4", {Rn, Rn, Qn}, Qn, [=](IndexTuple ix) {
    Element a = o.a(ix[0]), b = o.a(ix[1]), x = o.x(ix[2]);
    Element lhs = o.l(o.R(a, b, lam), x, lm) - o.l(o.R(b, a, mu), x, lm);
    Element rhs = o.l(a, o.l(b, x, mu), lam) - o.l(b, o.l(a, x, lam), mu);
    return lhs - rhs;
  }));
  laws.push_back(make_law("LC5", {Rn, Qn, Qn}, Rn, [=](IndexTuple ix) {
    Element a = o.a(ix[0]), x = o.x(ix[1]), y = o.x(ix[2]);
    Element lhs = o.psi(y, o.psi(x, a, mu) - o.phi(x, a, mu), nlmd) + o.g(o.l(a, x, lam), y, lm) -
                  o.R(a, o.g(x, y, mu), lam) - o.psi(o.circ(x, y, mu), a, nld);
    Element rhs = o.g(o.r(a, x, nmd), y, lm) - o.phi(x, o.psi(y, a, nld), mu) - o.g(x, o.l(a, y, lam), mu);
    return lhs - rhs;
  }));
  laws.push_back(make_law("LC6", {Rn, Qn, Qn}, Qn, [=](IndexTuple ix) {
    Element a = o.a(ix[0]), x = o.x(ix[1]), y = o.x(ix[2]);
    Element lhs = o.circ(o.l(a, x, lam), y, lm) + o.l(o.psi(x, a, nld), y, lm) - o.l(a, o.circ(x, y, mu), lam);
    Element rhs = o.l(o.phi(x, a, mu), y, lm) + o.circ(o.r(a, x, nmd), y, lm) - o.r(o.psi(y, a, nld), x, nmd) -
                  o.circ(x, o.l(a, y, lam), mu);
    return lhs - rhs;
  }));
  laws.push_back(make_law("LC7", {Qn, Qn, Rn}, Rn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), y = o.x(ix[1]), a = o.a(ix[2]);
    Element lhs = o.R(o.g(x, y, lam) - o.g(y, x, mu), a, lm) + o.phi(o.circ(x, y, lam) - o.circ(y, x, mu), a, lm);
    Element rhs = o.phi(x, o.phi(y, a, mu), lam) - o.phi(y, o.phi(x, a, lam), mu) + o.g(x, o.r(a, y, nmd), lam) -
                  o.g(y, o.r(a, x, nld), mu);
    return lhs - rhs;
  }));
  laws.push_back(make_law("LC8", {Qn, Qn, Rn}, Qn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), y = o.x(ix[1]), a = o.a(ix[2]);
    Element lhs = o.r(a, o.circ(x, y, lam) - o.circ(y, x, mu), nlmd);
    Element rhs = o.r(o.phi(y, a, mu), x, nld) - o.r(o.phi(x, a, lam), y, nmd) + o.circ(x, o.r(a, y, nmd), lam) -
                  o.circ(y, o.r(a, x, nld), mu);
    return lhs - rhs;
  }));
  laws.push_back(make_law("LC9", {Qn, Qn, Qn}, Rn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), y = o.x(ix[1]), z = o.x(ix[2]);
    Element lhs = o.psi(z, o.g(x, y, lam), nlmd) + o.g(o.circ(x, y, lam), z, lm) - o.phi(x, o.g(y, z, mu), lam) -
                  o.g(x, o.circ(y, z, mu), lam);
    Element rhs = o.psi(z, o.g(y, x, mu), nlmd) + o.g(o.circ(y, x, mu), z, lm) - o.phi(y, o.g(x, z, lam), mu) -
                  o.g(y, o.circ(x, z, lam), mu);
    return lhs - rhs;
  }));
  laws.push_back(make_law("LC10", {Qn, Qn, Qn}, Qn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), y = o.x(ix[1]), z = o.x(ix[2]);
    Element lhs = o.l(o.g(x, y, lam), z, lm) + o.circ(o.circ(x, y, lam), z, lm) - o.r(o.g(y, z, mu), x, nld) -
                  o.circ(x, o.circ(y, z, mu), lam);
    Element rhs = o.l(o.g(y, x, mu), z, lm) + o.circ(o.circ(y, x, mu), z, lm) - o.r(o.g(x, z, lam), y, nmd) -
                  o.circ(y, o.circ(x, z, lam), mu);
    return lhs - rhs;
  }));
  return laws;
}

CheckReport check_extending_structure(const ExtendingDatum& d) { return run_laws(extending_laws(d)); }

ProductAlgebra build_unified_unchecked(const ExtendingDatum& d) {
  d.validate();
  const std::size_t n = d.R.rank(), m = d.Q.rank();
  ProductAlgebra P;
  P.r_rank = n;
  P.E.name = d.R.name.empty() ? "" : d.R.name + "#Q";
  P.E.params = d.params;
  P.E.module.basis = d.R.basis();
  P.E.module.basis.insert(P.E.module.basis.end(), d.Q.basis.begin(), d.Q.basis.end());
  P.E.table = LambdaTable::square(n + m);
  auto put = [&](std::size_t i, std::size_t j, const Element& rpart, const Element& qpart) {
    Element& e = P.E.table.entry(i, j);
    for (std::size_t k = 0; k < n; ++k) e[k] = rpart[k];
    for (std::size_t k = 0; k < m; ++k) e[n + k] = qpart[k];
  };
  const Poly nld = neg_lam_d();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) put(i, j, d.R.table.entry(i, j), Element(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      put(i, n + j, shift_spectral(d.psi.entry(j, i), Var::lam(), nld), d.l.entry(i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      put(n + i, j, d.phi.entry(i, j), shift_spectral(d.r.entry(j, i), Var::lam(), nld));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) put(n + i, n + j, d.g.entry(i, j), d.circ.entry(i, j));
  return P;
}

ProductAlgebra build_unified(const ExtendingDatum& d) {
  CheckReport report = check_extending_structure(d);
  if (!report.passed()) throw PreconditionError("datum is not an extending structure", report);
  return build_unified_unchecked(d);
}

ExtendingDatum extract_datum(const ProductAlgebra& P) {
  const std::size_t total = P.E.rank(), n = P.r_rank;
  if (n > total) throw std::invalid_argument("block decomposition exceeds the rank");
  const std::size_t m = total - n;
  Algebra R{P.E.name.empty() ? "" : P.E.name + "|R", P.E.params, P.r_module(), LambdaTable::square(n)};
  auto split = [&](const Element& e, Element& rpart, Element& qpart) {
    rpart.assign(e.begin(), e.begin() + static_cast<long>(n));
    qpart.assign(e.begin() + static_cast<long>(n), e.end());
  };
  Element rp, qp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      split(P.E.table.entry(i, j), rp, qp);
      if (!is_zero(qp))
        throw std::invalid_argument("R is not closed under the product: " + P.E.basis()[i] + "_lam " +
                                    P.E.basis()[j] + " has a Q component");
      R.table.entry(i, j) = rp;
    }
  ExtendingDatum d = ExtendingDatum::zero(R, P.q_module());
  d.params = P.E.params;
  const Poly nld = neg_lam_d();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      split(P.E.table.entry(i, n + j), rp, qp);
      d.psi.entry(j, i) = shift_spectral(rp, Var::lam(), nld);
      d.l.entry(i, j) = qp;
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      split(P.E.table.entry(n + i, j), rp, qp);
      d.phi.entry(i, j) = rp;
      d.r.entry(j, i) = shift_spectral(qp, Var::lam(), nld);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      split(P.E.table.entry(n + i, n + j), rp, qp);
      d.g.entry(i, j) = rp;
      d.circ.entry(i, j) = qp;
    }
  return d;
}

LieDatum induced_lie_datum_unchecked(const ExtendingDatum& d) {
  d.validate();
  const std::size_t n = d.R.rank(), m = d.Q.rank();
  const Ops o{d};
  const Poly lam = lam_(), nld = neg_lam_d();
  LieDatum ld{LambdaTable(m, n, m), LambdaTable(m, n, n), LambdaTable(m, m, n), LambdaTable(m, m, m)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element x = o.x(i), a = o.a(j);
      ld.triangleleft.entry(i, j) = o.r(a, x, nld) - o.l(a, x, nld);
      ld.triangleright.entry(i, j) = o.phi(x, a, lam) - o.psi(x, a, lam);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element x = o.x(i), y = o.x(j);
      ld.f.entry(i, j) = o.g(x, y, lam) - o.g(y, x, nld);
      ld.bracket.entry(i, j) = o.circ(x, y, lam) - o.circ(y, x, nld);
    }
  return ld;
}

LieDatum induced_lie_datum(const ExtendingDatum& d) {
  CheckReport report = check_extending_structure(d);
  if (!report.passed()) throw PreconditionError("datum is not an extending structure", report);
  return induced_lie_datum_unchecked(d);
}

LambdaTable assemble_lie_unified(const LambdaTable& r_lie, const LieDatum& ld) {
  const std::size_t n = r_lie.left(), m = ld.bracket.left();
  LambdaTable E = LambdaTable::square(n + m);
  auto put = [&](std::size_t i, std::size_t j, const Element& rpart, const Element& qpart) {
    Element& e = E.entry(i, j);
    for (std::size_t k = 0; k < n; ++k) e[k] = rpart[k];
    for (std::size_t k = 0; k < m; ++k) e[n + k] = qpart[k];
  };
  const Poly nld = neg_lam_d();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) put(i, j, r_lie.entry(i, j), Element(m));
  // a_lam y:  -y |>_{-lam-d} a  and  -y <|_{-lam-d} a
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      put(i, n + j, -shift_spectral(ld.triangleright.entry(j, i), Var::lam(), nld),
          -shift_spectral(ld.triangleleft.entry(j, i), Var::lam(), nld));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) put(n + i, j, ld.triangleright.entry(i, j), ld.triangleleft.entry(i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) put(n + i, n + j, ld.f.entry(i, j), ld.bracket.entry(i, j));
  return E;
}

LawSet crossed_laws(const ExtendingDatum& d) {
  d.validate();
  const auto& Rn = d.R.basis();
  const auto& Qn = d.Q.basis;
  const Ops o{d};
  const Poly lam = lam_(), mu = mu_(), lm = lam_plus_mu(), nld = neg_lam_d(), nmd = neg_mu_d(),
             nlmd = neg_lam_mu_d();
  LawSet laws;
  Algebra q{"Q", d.params, d.Q, d.circ};
  Law ls = lsca_laws(q, "left-symmetry(Q)").front();
  const ExtendingDatum* dp = &d;
  // The Q algebra above is a temporary; rebind the residual to the datum's table.
  ls.residual = [dp](IndexTuple ix) {
    const auto& t = dp->circ;
    const std::size_t m = dp->Q.rank();
    Element a = basis_element(m, ix[0]), b = basis_element(m, ix[1]), c = basis_element(m, ix[2]);
    const Poly lam = lam_(), mu = mu_(), lm = lam_plus_mu();
    return eval_at(t, eval_at(t, a, b, lam), c, lm) - eval_at(t, a, eval_at(t, b, c, mu), lam) -
           eval_at(t, eval_at(t, b, a, mu), c, lm) + eval_at(t, b, eval_at(t, a, c, lam), mu);
  };
  laws.push_back(ls);

  laws.push_back(make_law("C1", {Qn, Rn, Rn}, Rn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), a = o.a(ix[1]), b = o.a(ix[2]);
    return o.R(o.phi(x, a, lam) - o.psi(x, a, nmd), b, lm) -
           (o.phi(x, o.R(a, b, mu), lam) - o.R(a, o.phi(x, b, lam), mu));
  }));
  laws.push_back(make_law("C2", {Qn, Rn, Rn}, Rn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), a = o.a(ix[1]), b = o.a(ix[2]);
    return o.psi(x, o.R(a, b, lam) - o.R(b, a, mu), nlmd) -
           (o.R(a, o.psi(x, b, nmd), lam) - o.R(b, o.psi(x, a, nld), mu));
  }));
  laws.push_back(make_law("C3", {Rn, Qn, Qn}, Rn, [=](IndexTuple ix) {
    Element a = o.a(ix[0]), x = o.x(ix[1]), y = o.x(ix[2]);
    Element lhs = o.psi(y, o.psi(x, a, nld) - o.phi(x, a, mu), nlmd) - o.R(a, o.g(x, y, mu), lam) -
                  o.psi(o.circ(x, y, mu), a, nld);
    return lhs + o.phi(x, o.psi(y, a, nld), mu);
  }));
  laws.push_back(make_law("C4", {Qn, Qn, Rn}, Rn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), y = o.x(ix[1]), a = o.a(ix[2]);
    Element lhs = o.R(o.g(x, y, lam) - o.g(y, x, mu), a, lm) + o.phi(o.circ(x, y, lam) - o.circ(y, x, mu), a, lm);
    return lhs - (o.phi(x, o.phi(y, a, mu), lam) - o.phi(y, o.phi(x, a, lam), mu));
  }));
  laws.push_back(make_law("C5", {Qn, Qn, Qn}, Rn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), y = o.x(ix[1]), z = o.x(ix[2]);
    Element lhs = o.psi(z, o.g(x, y, lam), nlmd) + o.g(o.circ(x, y, lam), z, lm) - o.phi(x, o.g(y, z, mu), lam) -
                  o.g(x, o.circ(y, z, mu), lam);
    Element rhs = o.psi(z, o.g(y, x, mu), nlmd) + o.g(o.circ(y, x, mu), z, lm) - o.phi(y, o.g(x, z, lam), mu) -
                  o.g(y, o.circ(x, z, lam), mu);
    return lhs - rhs;
  }));
  return laws;
}

CheckReport check_crossed(const ExtendingDatum& d) {
  if (!d.l.is_zero() || !d.r.is_zero()) throw std::invalid_argument("crossed product requires l = r = 0");
  return run_laws(crossed_laws(d));
}

LawSet bicrossed_laws(const ExtendingDatum& d) {
  d.validate();
  LawSet laws;
  const ExtendingDatum* dp = &d;
  LawSet q = crossed_laws(d);
  laws.push_back(q.front());
  for (auto& law : bimodule_laws(d.circ, d.phi, d.psi, d.Q.basis, d.R.basis(), "(phi,psi)")) laws.push_back(law);
  for (auto& law : bimodule_laws(d.R.table, d.l, d.r, d.R.basis(), d.Q.basis, "(l,r)")) laws.push_back(law);
  for (auto& law : extending_laws(*dp))
    if (law.name == "LC1" || law.name == "LC3" || law.name == "LC6" || law.name == "LC8") laws.push_back(law);
  return laws;
}

CheckReport check_bicrossed(const ExtendingDatum& d) {
  if (!d.g.is_zero()) throw std::invalid_argument("bicrossed product requires g = 0");
  return run_laws(bicrossed_laws(d));
}

LawSet datum_equiv_laws(const ExtendingDatum& d, const ExtendingDatum& d2, const DatumWitness& w) {
  d.validate();
  d2.validate();
  const std::size_t n = d.R.rank(), m = d.Q.rank();
  if (d2.R.rank() != n || d2.Q.rank() != m) throw std::invalid_argument("datums live on different modules");
  if (w.u.size() != m || w.v.size() != m) throw std::invalid_argument("witness must give u and v on every Q basis vector");
  for (const auto& e : w.u)
    if (e.size() != n) throw std::invalid_argument("u must map into R");
  for (const auto& e : w.v)
    if (e.size() != m) throw std::invalid_argument("v must map into Q");
  const auto& Rn = d.R.basis();
  const auto& Qn = d.Q.basis;
  const Ops o{d}, p{d2};
  const Poly lam = lam_(), nld = neg_lam_d();
  auto u = [&w, n](const Element& x) { return apply_linear(w.u, x, n); };
  auto v = [&w, m](const Element& x) { return apply_linear(w.v, x, m); };
  LawSet laws;
  laws.push_back(make_law("equiv-psi", {Rn, Qn}, Rn, [=](IndexTuple ix) {
    Element a = o.a(ix[0]), x = o.x(ix[1]);
    return o.psi(x, a, nld) + u(o.l(a, x, lam)) - (o.R(a, u(x), lam) + p.psi(v(x), a, nld));
  }));
  laws.push_back(make_law("equiv-l", {Rn, Qn}, Qn, [=](IndexTuple ix) {
    Element a = o.a(ix[0]), x = o.x(ix[1]);
    return v(o.l(a, x, lam)) - p.l(a, v(x), lam);
  }));
  laws.push_back(make_law("equiv-phi", {Qn, Rn}, Rn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), a = o.a(ix[1]);
    return o.phi(x, a, lam) + u(o.r(a, x, nld)) - (o.R(u(x), a, lam) + p.phi(v(x), a, lam));
  }));
  laws.push_back(make_law("equiv-r", {Qn, Rn}, Qn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), a = o.a(ix[1]);
    return v(o.r(a, x, nld)) - p.r(a, v(x), nld);
  }));
  laws.push_back(make_law("equiv-g", {Qn, Qn}, Rn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), y = o.x(ix[1]);
    return o.g(x, y, lam) + u(o.circ(x, y, lam)) -
           (o.R(u(x), u(y), lam) + p.phi(v(x), u(y), lam) + p.psi(v(y), u(x), nld) + p.g(v(x), v(y), lam));
  }));
  laws.push_back(make_law("equiv-circ", {Qn, Qn}, Qn, [=](IndexTuple ix) {
    Element x = o.x(ix[0]), y = o.x(ix[1]);
    return v(o.circ(x, y, lam)) - (p.r(u(y), v(x), nld) + p.l(u(x), v(y), lam) + p.circ(v(x), v(y), lam));
  }));
  return laws;
}

CheckReport check_datum_equiv(const ExtendingDatum& d, const ExtendingDatum& d2, const DatumWitness& w) {
  return run_laws(datum_equiv_laws(d, d2, w));
}

}  // namespace cwb
