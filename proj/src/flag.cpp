#include "cwb/flag.hpp"

#include <algorithm>

#include "cwb/linsolve.hpp"

namespace cwb {

std::string default_generator(const Algebra& R) {
  const auto& names = R.basis();
  auto taken = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); };
  for (const char* s : {"x", "y", "z"})
    if (!taken(s)) return s;
  for (std::size_t i = 1;; ++i)
    if (!taken("x" + std::to_string(i))) return "x" + std::to_string(i);
}

FlagDatum FlagDatum::zero(const Algebra& R) {
  const std::size_t n = R.rank();
  return FlagDatum{R,
                   default_generator(R),
                   R.params,
                   OperatorTable::functional(std::vector<Poly>(n)),
                   OperatorTable::functional(std::vector<Poly>(n)),
                   OperatorTable::zero(Variance::conformal, n, n),
                   OperatorTable::zero(Variance::conformal, n, n),
                   Element(n),
                   Poly()};
}

void FlagDatum::validate() const {
  const std::size_t n = R.rank();
  auto functional = [n](const OperatorTable& op, const char* name) {
    if (op.variance != Variance::left_conformal || op.source != n || op.target != 1 || op.images.size() != n)
      throw std::invalid_argument(std::string(name) + " must be a left-conformal functional on R");
    for (const auto& e : op.images)
      if (e.size() != 1) throw std::invalid_argument(std::string(name) + " must be scalar valued");
  };
  auto conformal = [n](const OperatorTable& op, const char* name) {
    if (op.variance != Variance::conformal || op.source != n || op.target != n || op.images.size() != n)
      throw std::invalid_argument(std::string(name) + " must be a conformal operator R -> R");
    for (const auto& e : op.images)
      if (e.size() != n) throw std::invalid_argument(std::string(name) + " has an image of the wrong rank");
  };
  functional(h, "h");
  functional(k, "k");
  conformal(D, "D");
  conformal(T, "T");
  if (M.size() != n) throw std::invalid_argument("M must be an element of R");
  for (const auto& p : M)
    if (p.mentions(Var::mu()) || p.mentions(Var::nu())) throw std::invalid_argument("M may only involve lam and d");
  if (P.mentions(Var::mu()) || P.mentions(Var::nu())) throw std::invalid_argument("P may only involve lam and d");
  if (generator.empty()) throw std::invalid_argument("empty generator name");
  if (std::find(R.basis().begin(), R.basis().end(), generator) != R.basis().end())
    throw std::invalid_argument("generator '" + generator + "' is also a basis name of R");
}

bool FlagDatum::has_parameters() const {
  if (R.table.has_parameters() || h.has_parameters() || k.has_parameters() || D.has_parameters() ||
      T.has_parameters() || P.has_parameters())
    return true;
  return std::any_of(M.begin(), M.end(), [](const Poly& p) { return p.has_parameters(); });
}

FlagDatum FlagDatum::assign(const std::map<std::string, Rational>& b) const {
  FlagDatum f = *this;
  f.R = R.assign(b);
  f.h = h.assign(b);
  f.k = k.assign(b);
  f.D = D.assign(b);
  f.T = T.assign(b);
  for (auto& p : f.M) p = p.assign(b);
  f.P = P.assign(b);
  return f;
}

namespace {

struct FlagOps {
  const FlagDatum& f;
  Element R(const Element& a, const Element& b, const Poly& s) const { return eval_at(f.R.table, a, b, s); }
  Element D(const Element& a, const Poly& s) const { return apply_at(f.D, a, s); }
  Element T(const Element& a, const Poly& s) const { return apply_at(f.T, a, s); }
  Poly h(const Element& a, const Poly& s, const Poly& t) const { return functional_at(f.h, a, s, t); }
  Poly k(const Element& a, const Poly& s, const Poly& t) const { return functional_at(f.k, a, s, t); }
  Element M(const Poly& s, const Poly& t) const { return subst(f.M, {{Var::lam(), s}, {Var::d(), t}}); }
  Poly P(const Poly& s, const Poly& t) const { return f.P.subst({{Var::lam(), s}, {Var::d(), t}}); }
  Element a(std::size_t i) const { return basis_element(f.R.rank(), i); }
};

Element scalar(Poly p) { return Element{std::move(p)}; }

}  // namespace

LawSet flag_laws(const FlagDatum& fd) {
  fd.validate();
  const auto& Rn = fd.R.basis();
  const std::vector<std::string> none;
  const FlagOps o{fd};
  const Poly lam = lam_(), mu = mu_(), d = d_(), lm = lam_plus_mu(), nlm = -lam_plus_mu(), nld = neg_lam_d(),
             nmd = neg_mu_d(), nlmd = neg_lam_mu_d();
  LawSet laws;
  laws.push_back({"lfd1", {Rn, Rn}, Rn, [=](IndexTuple ix) {
                    Element a = o.a(ix[0]), b = o.a(ix[1]);
                    Element lhs = o.R(o.D(a, lam) - o.T(a, lam), b, lm) + (o.k(a, mu, nlm) - o.h(a, mu, nlm)) * o.D(b, lm);
                    Element rhs = o.D(o.R(a, b, mu), lam) - o.R(a, o.D(b, lam), mu) - o.k(b, nlmd, mu + d) * o.T(a, nmd);
                    return lhs - rhs;
                  }});
  laws.push_back({"lfd2", {Rn, Rn}, none, [=](IndexTuple ix) {
                    Element a = o.a(ix[0]), b = o.a(ix[1]);
                    Poly lhs = (o.k(a, mu, nlm) - o.h(a, mu, nlm)) * o.k(b, nlmd, d);
                    Poly rhs = o.k(o.R(a, b, mu), nld, d) - o.k(b, nlmd, mu + d) * o.h(a, mu, d);
                    return scalar(lhs - rhs);
                  }});
  laws.push_back({"lfd3", {Rn, Rn}, Rn, [=](IndexTuple ix) {
                    Element a = o.a(ix[0]), b = o.a(ix[1]);
                    Element lhs = o.T(o.R(a, b, lam) - o.R(b, a, mu), nlmd);
                    Element rhs = o.R(a, o.T(b, nmd), lam) - o.R(b, o.T(a, nld), mu) +
                                  o.h(b, mu, lam + d) * o.T(a, nld) - o.h(a, lam, mu + d) * o.T(b, nmd);
                    return lhs - rhs;
                  }});
  laws.push_back({"lfd4", {Rn, Rn}, none, [=](IndexTuple ix) {
                    Element a = o.a(ix[0]), b = o.a(ix[1]);
                    Poly lhs = o.h(o.R(a, b, lam) - o.R(b, a, mu), lm, d);
                    Poly rhs = o.h(b, mu, lam + d) * o.h(a, lam, d) - o.h(a, lam, mu + d) * o.h(b, mu, d);
                    return scalar(lhs - rhs);
                  }});
  laws.push_back({"lfd5", {Rn}, Rn, [=](IndexTuple ix) {
                    Element a = o.a(ix[0]);
                    Element lhs = o.T(o.T(a, mu) - o.D(a, mu), nlmd) + o.h(a, lam, nlm) * o.M(lm, d) -
                                  o.P(mu, lam + d) * o.T(a, nld) - o.R(a, o.M(mu, d), lam);
                    Element rhs = o.k(a, lam, nlm) * o.M(lm, d) - o.D(o.T(a, nld), mu) - o.h(a, lam, mu + d) * o.M(mu, d);
                    return lhs - rhs;
                  }});
  laws.push_back({"lfd6", {Rn}, none, [=](IndexTuple ix) {
                    Element a = o.a(ix[0]);
                    Poly lhs = o.h(a, lam, nlm) * o.P(lm, d) + o.h(o.T(a, nld), lm, d) - o.P(mu, lam + d) * o.h(a, lam, d);
                    Poly rhs = o.h(o.D(a, mu), lm, d) + o.k(a, lam, nlm) * o.P(lm, d) - o.k(o.T(a, nld), nmd, d) -
                               o.h(a, lam, mu + d) * o.P(mu, d);
                    return scalar(lhs - rhs);
                  }});
  laws.push_back({"lfd7", {Rn}, Rn, [=](IndexTuple ix) {
                    Element a = o.a(ix[0]);
                    Element lhs = o.R(o.M(lam, d) - o.M(mu, d), a, lm) + (o.P(lam, nlm) - o.P(mu, nlm)) * o.D(a, lm);
                    Element rhs = o.D(o.D(a, mu), lam) - o.D(o.D(a, lam), mu) + o.k(a, nlmd, lam + d) * o.M(lam, d) -
                                  o.k(a, nlmd, mu + d) * o.M(mu, d);
                    return lhs - rhs;
                  }});
  laws.push_back({"lfd8", {Rn}, none, [=](IndexTuple ix) {
                    Element a = o.a(ix[0]);
                    Poly lhs = (o.P(lam, nlm) - o.P(mu, nlm)) * o.k(a, nlmd, d);
                    Poly rhs = o.k(o.D(a, mu), nld, d) - o.k(o.D(a, lam), nmd, d) + o.k(a, nlmd, lam + d) * o.P(lam, d) -
                               o.k(a, nlmd, mu + d) * o.P(mu, d);
                    return scalar(lhs - rhs);
                  }});
  laws.push_back({"lfd9", {}, Rn, [=](IndexTuple) {
                    Element lhs = o.T(o.M(lam, d) - o.M(mu, d), nlmd) + (o.P(lam, nlm) - o.P(mu, nlm)) * o.M(lm, d);
                    Element rhs = o.D(o.M(mu, d), lam) - o.D(o.M(lam, d), mu) + o.P(mu, lam + d) * o.M(lam, d) -
                                  o.P(lam, mu + d) * o.M(mu, d);
                    return lhs - rhs;
                  }});
  laws.push_back({"lfd10", {}, none, [=](IndexTuple) {
                    Poly lhs = o.h(o.M(lam, d) - o.M(mu, d), lm, d) + (o.P(lam, nlm) - o.P(mu, nlm)) * o.P(lm, d);
                    Poly rhs = o.k(o.M(mu, d), nld, d) - o.k(o.M(lam, d), nmd, d) + o.P(mu, lam + d) * o.P(lam, d) -
                               o.P(lam, mu + d) * o.P(mu, d);
                    return scalar(lhs - rhs);
                  }});
  return laws;
}

CheckReport check_flag(const FlagDatum& fd) { return run_laws(flag_laws(fd)); }

ExtendingDatum flag_to_datum(const FlagDatum& fd) {
  fd.validate();
  const std::size_t n = fd.R.rank();
  ExtendingDatum d = ExtendingDatum::zero(fd.R, FreeModule{{fd.generator}});
  d.params = fd.params;
  for (std::size_t i = 0; i < n; ++i) {
    d.phi.entry(0, i) = fd.D.images[i];
    d.psi.entry(0, i) = fd.T.images[i];
    d.l.entry(i, 0) = fd.h.images[i];
    d.r.entry(i, 0) = fd.k.images[i];
  }
  d.g.entry(0, 0) = fd.M;
  d.circ.entry(0, 0) = Element{fd.P};
  return d;
}

FlagDatum datum_to_flag(const ExtendingDatum& d) {
  d.validate();
  if (d.Q.rank() != 1) throw std::invalid_argument("flag datums need a rank-one Q");
  const std::size_t n = d.R.rank();
  FlagDatum fd = FlagDatum::zero(d.R);
  fd.generator = d.Q.basis[0];
  fd.params = d.params;
  for (std::size_t i = 0; i < n; ++i) {
    fd.D.images[i] = d.phi.entry(0, i);
    fd.T.images[i] = d.psi.entry(0, i);
    fd.h.images[i] = d.l.entry(i, 0);
    fd.k.images[i] = d.r.entry(i, 0);
  }
  fd.M = d.g.entry(0, 0);
  fd.P = d.circ.entry(0, 0)[0];
  return fd;
}

ProductAlgebra build_flag_extension_unchecked(const FlagDatum& fd) {
  return build_unified_unchecked(flag_to_datum(fd));
}

ProductAlgebra build_flag_extension(const FlagDatum& fd) {
  CheckReport report = check_flag(fd);
  if (!report.passed()) throw PreconditionError("flag datum fails its identities", report);
  return build_flag_extension_unchecked(fd);
}

namespace {

void require_same_base(const FlagDatum& a, const FlagDatum& b) {
  a.validate();
  b.validate();
  if (a.R.rank() != b.R.rank() || !(a.R.table == b.R.table))
    throw std::invalid_argument("module mismatch: flag datums over different algebras");
}

CheckReport functional_mismatch(const FlagDatum& fd1, const FlagDatum& fd2) {
  CheckReport report;
  const auto& names = fd1.R.basis();
  for (std::size_t i = 0; i < names.size(); ++i) {
    Poly dh = fd1.h.images[i][0] - fd2.h.images[i][0];
    if (!dh.is_zero()) report.failures.push_back({"equiv-h", {names[i]}, Element{dh}, {}});
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    Poly dk = fd1.k.images[i][0] - fd2.k.images[i][0];
    if (!dk.is_zero()) report.failures.push_back({"equiv-k", {names[i]}, Element{dk}, {}});
  }
  return report;
}

}  // namespace

LawSet equiv_laws(const FlagDatum& fd1, const FlagDatum& fd2, const EquivWitness& w, EquivForm form) {
  require_same_base(fd1, fd2);
  if (w.omega.size() != fd1.R.rank()) throw std::invalid_argument("omega must be an element of R");
  if (w.beta == 0) throw std::invalid_argument("beta must be nonzero");
  const auto& Rn = fd1.R.basis();
  const std::vector<std::string> none;
  const FlagOps o{fd1}, p{fd2};
  const Element omega = w.omega;
  const Poly beta(w.beta);
  const Poly lam = lam_(), d = d_(), nld = neg_lam_d();
  const std::string prefix = form == EquivForm::general ? "equiv-" : form == EquivForm::dflc1 ? "dflc1-" : "dflc2-";
  LawSet laws;
  laws.push_back({prefix + "D", {Rn}, Rn, [=](IndexTuple ix) {
                    Element a = o.a(ix[0]);
                    Element rhs = beta * p.D(a, lam) + o.R(omega, a, lam);
                    if (form != EquivForm::dflc1) rhs = rhs - o.k(a, nld, d) * omega;
                    return o.D(a, lam) - rhs;
                  }});
  laws.push_back({prefix + "T", {Rn}, Rn, [=](IndexTuple ix) {
                    Element a = o.a(ix[0]);
                    if (form != EquivForm::general) return -o.R(a, omega, lam);
                    return o.T(a, nld) - (beta * p.T(a, nld) + o.R(a, omega, lam) - o.h(a, lam, d) * omega);
                  }});
  laws.push_back({prefix + "M", {}, Rn, [=](IndexTuple) {
                    Element rhs = o.R(omega, omega, lam) + (beta * beta) * p.M(lam, d) + beta * p.D(omega, lam);
                    if (form == EquivForm::general) rhs = rhs + beta * p.T(omega, nld);
                    if (form != EquivForm::dflc2) rhs = rhs - o.P(lam, d) * omega;
                    return o.M(lam, d) - rhs;
                  }});
  laws.push_back({prefix + "P", {}, none, [=](IndexTuple) {
                    switch (form) {
                      case EquivForm::dflc1: return scalar(o.P(lam, d) - beta * p.P(lam, d));
                      case EquivForm::dflc2: return scalar(-p.k(omega, nld, d));
                      default: break;
                    }
                    return scalar(o.P(lam, d) - (p.k(omega, nld, d) + p.h(omega, lam, d) + beta * p.P(lam, d)));
                  }});
  return laws;
}

CheckReport check_equiv(const FlagDatum& fd1, const FlagDatum& fd2, const EquivWitness& w, EquivForm form) {
  require_same_base(fd1, fd2);
  CheckReport mismatch = functional_mismatch(fd1, fd2);
  if (!mismatch.passed()) return mismatch;
  return run_laws(equiv_laws(fd1, fd2, w, form));
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none_within_bound: return "none-within-bound";
    case SearchStatus::rejected: return "rejected";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<Rational> default_betas() { return {Rational(1), Rational(-1), Rational(2), Rational(1, 2)}; }

namespace {

std::vector<Poly> collect_residuals(const LawSet& laws, std::string_view only = {}) {
  std::vector<Poly> out;
  for (const auto& law : laws) {
    if (!only.empty() && law.name.find(only) == std::string::npos) continue;
    std::vector<std::size_t> idx(law.slots.size(), 0);
    auto emit = [&] {
      for (auto& p : law.residual(idx))
        if (!p.is_zero()) out.push_back(std::move(p));
    };
    if (idx.empty()) {
      emit();
      continue;
    }
    for (idx[0] = 0; idx[0] < law.slots[0].size(); ++idx[0]) emit();
  }
  return out;
}

bool linear_in(const Poly& p, const std::vector<Var>& unknowns) {
  for (const auto& t : p.terms()) {
    std::uint32_t deg = 0;
    for (Var v : unknowns) deg += t.mono.exponent(v);
    if (deg > 1) return false;
  }
  return true;
}

Element omega_from(const std::vector<Rational>& values, std::size_t n, unsigned bound) {
  Element omega(n);
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned q = 0; q <= bound; ++q)
      omega[i] += Poly::monomial(Monomial::of(Var::d(), q), values[i * (bound + 1) + q]);
  return omega;
}

}  // namespace

SearchResult search_equiv(const FlagDatum& fd1, const FlagDatum& fd2, unsigned bound,
                          const std::vector<Rational>& betas) {
  require_same_base(fd1, fd2);
  if (fd1.has_parameters() || fd2.has_parameters())
    throw std::invalid_argument("symbolic parameters present; bind them with --bind before searching");
  if (betas.empty()) throw std::invalid_argument("empty beta list");
  for (const auto& b : betas)
    if (b == 0) throw std::invalid_argument("beta must be nonzero");

  SearchResult result;
  if (!functional_mismatch(fd1, fd2).passed()) {
    result.status = SearchStatus::rejected;
    result.detail = "h or k differ";
    return result;
  }

  const std::size_t n = fd1.R.rank();
  const std::size_t width = bound + 1;
  auto u = make_unknowns(0, n * width);
  Element omega(n);
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned q = 0; q < width; ++q)
      omega[i] += Poly::monomial(Monomial::of(Var::d(), q)) * Poly::var(u[i * width + q]);

  bool inconclusive = false;
  for (const auto& beta : betas) {
    EquivWitness generic{omega, beta};
    LawSet laws = equiv_laws(fd1, fd2, generic);
    std::vector<Poly> linear;
    for (const char* name : {"equiv-D", "equiv-T", "equiv-P"}) {
      auto part = collect_residuals(laws, name);
      linear.insert(linear.end(), part.begin(), part.end());
    }
    LinearSystem sys = match_coefficients(linear, u);
    AffineSolution sol = solve_affine(sys.A, sys.b, u.size());
    if (!sol.consistent) continue;

    EquivWitness w{omega_from(sol.particular, n, bound), beta};
    if (check_equiv(fd1, fd2, w).passed()) {
      result.status = SearchStatus::found;
      result.witness = w;
      return result;
    }
    if (sol.nullspace.empty()) continue;

    // omega = particular + sum_j t_j N_j; the remaining equation is quadratic in general.
    auto t = make_unknowns(u.size(), sol.nullspace.size());
    std::vector<Poly> coords(u.size());
    for (std::size_t c = 0; c < u.size(); ++c) {
      coords[c] = Poly(sol.particular[c]);
      for (std::size_t j = 0; j < t.size(); ++j)
        if (sol.nullspace[j][c] != 0) coords[c] += Poly(sol.nullspace[j][c]) * Poly::var(t[j]);
    }
    Element param(n);
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned q = 0; q < width; ++q)
        param[i] += Poly::monomial(Monomial::of(Var::d(), q)) * coords[i * width + q];
    auto quad = collect_residuals(equiv_laws(fd1, fd2, EquivWitness{param, beta}), "equiv-M");
    if (!std::all_of(quad.begin(), quad.end(), [&](const Poly& p) { return linear_in(p, t); })) {
      inconclusive = true;
      continue;
    }
    LinearSystem qs = match_coefficients(quad, t);
    AffineSolution qsol = solve_affine(qs.A, qs.b, t.size());
    if (!qsol.consistent) continue;
    std::vector<Rational> values(u.size());
    for (std::size_t c = 0; c < u.size(); ++c) {
      values[c] = sol.particular[c];
      for (std::size_t j = 0; j < t.size(); ++j) values[c] += qsol.particular[j] * sol.nullspace[j][c];
    }
    EquivWitness found{omega_from(values, n, bound), beta};
    if (check_equiv(fd1, fd2, found).passed()) {
      result.status = SearchStatus::found;
      result.witness = found;
      return result;
    }
  }
  result.status = inconclusive ? SearchStatus::inconclusive : SearchStatus::none_within_bound;
  if (inconclusive) result.detail = "a quadratic constraint on omega was left unsolved";
  return result;
}

std::string to_string(DflcTag t) {
  switch (t) {
    case DflcTag::dflc1: return "DFLC1";
    case DflcTag::dflc2: return "DFLC2";
    case DflcTag::neither: return "neither";
  }
  return "?";
}

DflcMembership check_dflc_membership(const FlagDatum& fd) {
  fd.validate();
  DflcMembership m;
  if (fd.h.is_zero() && fd.k.is_zero() && fd.T.is_zero()) {
    m.tag = DflcTag::dflc1;
    m.report = check_derivation(fd.R, fd.D);
  } else if (fd.h.is_zero() && fd.T.is_zero() && fd.P.is_zero()) {
    m.tag = DflcTag::dflc2;
    m.report = check_twisted_derivation(fd.R, fd.D, fd.k);
  } else {
    return m;
  }
  m.consistent = m.report.passed();
  return m;
}

FlagDatum example53_datum(const Algebra& R, const Poly& k0, const Poly& p1, const Poly& p0, const Rational& h) {
  if (R.rank() != 2) throw std::invalid_argument("the constructor needs a rank-two algebra");
  for (const Poly* p : {&k0, &p1, &p0})
    if (p->mentions(Var::d()) || p->mentions(Var::mu()) || p->mentions(Var::nu()))
      throw std::invalid_argument("k0, p1 and p0 must be polynomials in lam");
  const Poly lam = lam_(), d = d_(), H(h);
  auto at = [](const Poly& p, const Poly& s) { return p.subst(Var::lam(), s); };
  auto d1 = [&](const Poly& s, const Poly& t) { return at(p1, s) * t + at(p0, s); };
  FlagDatum fd = FlagDatum::zero(R);
  fd.D.images[0] = {k0, Poly()};
  fd.D.images[1] = {d1(lam, d), H};
  fd.T.images[0] = {H, Poly()};
  fd.T.images[1] = {d1(lam, -lam), H};
  fd.M = {d1(neg_lam_d(), lam + d) * k0 + H * d1(lam, d), H * H};
  return fd;
}

}  // namespace cwb
