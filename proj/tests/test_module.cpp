#include "doctest.h"
#include "support.hpp"

using namespace cwb;
using cwb::test::P;

namespace {

Element random_element(std::mt19937& rng, std::size_t n, unsigned deg) {
  Element e(n);
  for (auto& c : e) c = test::random_poly(rng, {Var::d()}, deg, 1);
  return e;
}

}  // namespace

TEST_CASE("lambda-product on the rank-one fixtures") {
  Algebra R = test::rc();
  Element x{Poly(1)}, dx{d_()};
  CHECK(eval_lambda(R.table, x, dx, Var::lam()) == Element{P("(d+lam)*(d+lam+c)")});

  Algebra R0 = test::rank1("0");
  std::mt19937 rng(1);
  CHECK(is_zero(eval_lambda(R0.table, random_element(rng, 1, 3), random_element(rng, 1, 3), Var::lam())));

  Algebra bad1 = test::rank1("lam");
  CHECK(eval_lambda(bad1.table, x, x, Var::lam()) == Element{lam_()});
}

TEST_CASE("eval_lambda errors") {
  Algebra R = test::rc();
  CHECK_THROWS_AS(eval_lambda(R.table, Element{Poly(1), Poly(1)}, Element{Poly(1)}, Var::lam()), std::invalid_argument);
  CHECK_THROWS_AS(eval_lambda(R.table, Element{lam_()}, Element{Poly(1)}, Var::lam()), std::invalid_argument);
  CHECK_NOTHROW(eval_lambda(R.table, Element{lam_()}, Element{Poly(1)}, Var::mu()));
}

TEST_CASE("sesquilinearity and bilinearity on random elements") {
  Algebra R = test::rlw();
  R.table.entry(0, 0) = {P("d + 2*lam"), P("lam")};
  std::mt19937 rng(2);
  for (int i = 0; i < 30; ++i) {
    Element a = random_element(rng, 2, 2), b = random_element(rng, 2, 2), a2 = random_element(rng, 2, 2);
    Poly f = test::random_poly(rng, {Var::d()}, 2, 0), g = test::random_poly(rng, {Var::d()}, 2, 0);
    Element ab = eval_lambda(R.table, a, b, Var::lam());
    CHECK(eval_lambda(R.table, f * a, b, Var::lam()) == f.subst(Var::d(), -lam_()) * ab);
    CHECK(eval_lambda(R.table, a, g * b, Var::lam()) == g.subst(Var::d(), d_() + lam_()) * ab);
    Rational q = test::random_rational(rng);
    CHECK(eval_lambda(R.table, Poly(q) * a + a2, b, Var::lam()) ==
          Poly(q) * ab + eval_lambda(R.table, a2, b, Var::lam()));
  }
}

TEST_CASE("operator variance rules") {
  auto D = OperatorTable::zero(Variance::conformal, 1, 1);
  D.images[0] = {P("d+lam+c")};
  CHECK(apply_operator(D, Element{d_()}, Var::lam()) == Element{P("(d+lam)*(d+lam+c)")});

  auto h = OperatorTable::functional({P("d+lam")});
  CHECK(h.variance == Variance::left_conformal);
  CHECK(apply_operator(h, Element{d_()}, Var::lam()) == Element{P("-lam*(d+lam)")});

  auto Z = OperatorTable::zero(Variance::conformal, 2, 2);
  CHECK(is_zero(apply_operator(Z, Element{P("d^2"), P("1")}, Var::lam())));

  std::mt19937 rng(4);
  for (int i = 0; i < 20; ++i) {
    Poly f = test::random_poly(rng, {Var::d()}, 3, 0);
    Element v{test::random_poly(rng, {Var::d()}, 2, 0)};
    CHECK(apply_operator(D, f * v, Var::lam()) == f.subst(Var::d(), d_() + lam_()) * apply_operator(D, v, Var::lam()));
    CHECK(apply_operator(h, f * v, Var::lam()) == f.subst(Var::d(), -lam_()) * apply_operator(h, v, Var::lam()));
  }
}

TEST_CASE("spectral shift") {
  Element e{P("d + mu + c")};
  Element s = shift_spectral(e, Var::mu(), neg_lam_d());
  CHECK(s == Element{P("c - lam")});
  CHECK(s[0].evaluate({{Var::lam(), 0}, {Var::parameter("c"), 1}}) == 1);
  CHECK(shift_spectral(e, Var::mu(), mu_()) == e);
  CHECK(is_zero(shift_spectral(zero_element(2), Var::mu(), neg_lam_d())));

  std::mt19937 rng(6);
  for (int i = 0; i < 20; ++i) {
    Element a{test::random_poly(rng, {Var::d(), Var::mu()}, 2)}, b{test::random_poly(rng, {Var::d(), Var::mu()}, 2)};
    Poly q = test::random_poly(rng, {Var::lam(), Var::d()}, 1);
    CHECK(shift_spectral(a + b, Var::mu(), q) == shift_spectral(a, Var::mu(), q) + shift_spectral(b, Var::mu(), q));
    CHECK(shift_spectral(Poly(3) * a, Var::mu(), q) == Poly(3) * shift_spectral(a, Var::mu(), q));
  }
}

TEST_CASE("current algebras") {
  LambdaTable t = build_current({{{1}}});
  CHECK(t.entry(0, 0) == Element{Poly(1)});
  CHECK(build_current({{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}}).is_zero());
  LambdaTable e = build_current({{{1, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
  CHECK(e.entry(0, 0) == Element{Poly(1), Poly()});
  CHECK(is_zero(e.entry(0, 1)));
  CHECK(is_zero(e.entry(1, 0)));
  CHECK(is_zero(e.entry(1, 1)));
  CHECK_THROWS_AS(build_current({{{1, 0}}}), std::invalid_argument);
}

TEST_CASE("current algebra is left-symmetric exactly when the finite algebra is") {
  std::mt19937 rng(8);
  int accepted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto m = test::random_mult(rng);
    Algebra A{"cur", {}, FreeModule{{"e1", "e2"}}, build_current(m)};
    bool checked = check_lsca(A).passed();
    CHECK(test::brute_left_symmetric(m) == checked);
    accepted += checked;
  }
  CHECK(accepted > 0);
}

TEST_CASE("rank-zero modules") {
  Algebra Z{"zero", {}, FreeModule{}, LambdaTable::square(0)};
  CHECK(check_lsca(Z).passed());
  CHECK(check_lie(Z).passed());
  CHECK(eval_lambda(Z.table, {}, {}, Var::lam()).empty());
}

TEST_CASE("element formatting") {
  CHECK(format_element(Element{P("lam^2 - mu^2"), Poly()}, {"x", "y"}) == "(lam^2 - mu^2)*x");
  CHECK(format_element(Element{Poly(1), P("-2")}, {"x", "y"}) == "x - 2*y");
  CHECK(format_element(zero_element(2), {"x", "y"}) == "0");
}
