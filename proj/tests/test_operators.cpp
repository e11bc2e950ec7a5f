#include "doctest.h"
#include "support.hpp"

using namespace cwb;
using cwb::test::P;

namespace {

OperatorTable scalar_op(const std::string& entry, Variance v = Variance::conformal) {
  auto op = OperatorTable::zero(v, 1, 1);
  op.images[0] = {P(entry)};
  return op;
}

OperatorTable random_op(std::mt19937& rng, std::size_t n, unsigned deg) {
  auto op = OperatorTable::zero(Variance::conformal, n, n);
  for (auto& img : op.images)
    for (auto& c : img) c = test::random_poly(rng, {Var::lam(), Var::d()}, deg, 1);
  return op;
}

Element random_b(std::mt19937& rng, std::size_t n) {
  Element b(n);
  for (auto& c : b) c = test::random_poly(rng, {Var::d()}, 2, 0);
  return b;
}

}  // namespace

TEST_CASE("derivation checks") {
  auto zero1 = OperatorTable::zero(Variance::conformal, 1, 1);
  CHECK(check_derivation(test::rc(), zero1).passed());
  CHECK(check_derivation(test::rlw(), OperatorTable::zero(Variance::conformal, 2, 2)).passed());

  for (const char* e : {"1", "lam", "d", "d + lam + c", "lam^3*d^3 - 2", "d^6"})
    CHECK_FALSE(check_derivation(test::rc(), scalar_op(e)).passed());

  std::mt19937 rng(41);
  for (int i = 0; i < 10; ++i) CHECK(check_derivation(test::rank1("0"), random_op(rng, 1, 3)).passed());
}

TEST_CASE("derivation spaces") {
  for (int c : {0, 1, 2}) CHECK(solve_derivations(test::rc(c), 6).dimension == 0);
  auto r0 = solve_derivations(test::rank1("0"), 1);
  CHECK(r0.dimension == 3);
  CHECK_THROWS_AS(solve_derivations(test::rc(), 2), std::invalid_argument);

  Algebra R = test::rlw();
  std::size_t prev = 0;
  for (unsigned bound = 0; bound <= 3; ++bound) {
    auto s = solve_derivations(R, bound);
    CHECK(s.dimension == s.basis.size());
    CHECK(s.dimension == derivation_dimension_dense(R, bound));
    CHECK(s.dimension >= prev);
    prev = s.dimension;
    for (const auto& D : s.basis) CHECK(check_derivation(R, D).passed());
  }
}

TEST_CASE("twisted derivations") {
  Algebra R = test::rlw();
  auto g0 = OperatorTable::zero(Variance::left_conformal, 2, 1);
  std::mt19937 rng(43);
  for (int i = 0; i < 10; ++i) {
    auto D = random_op(rng, 2, 2);
    auto a = check_derivation(R, D), b = check_twisted_derivation(R, D, g0);
    CHECK(a.passed() == b.passed());
    CHECK(a.failures.size() == b.failures.size());
    for (std::size_t k = 0; k < std::min(a.failures.size(), b.failures.size()); ++k)
      CHECK(a.failures[k].residual == b.failures[k].residual);
  }
  auto g = OperatorTable::functional({P("lam*d + 1"), P("d^2")});
  CHECK(check_twisted_derivation(R, OperatorTable::zero(Variance::conformal, 2, 2), g).passed());
}

TEST_CASE("twisted derivation read off flag datums with h = T = P = 0") {
  Algebra R = test::rank1("1");
  const std::vector<std::string> ks{"1", "-1", "lam", "d", "2"};
  const std::vector<std::string> small{"0", "1", "-1", "lam", "d", "lam + d", "d - lam", "lam^2", "d^2"};
  int found = 0;
  for (const auto& k : ks)
    for (const auto& D : small)
      for (const auto& M : small) {
        FlagDatum fd = FlagDatum::zero(R);
        fd.k.images[0][0] = P(k);
        fd.D.images[0][0] = P(D);
        fd.M[0] = P(M);
        if (!check_flag(fd).passed()) continue;
        ++found;
        auto m = check_dflc_membership(fd);
        CHECK(m.tag == DflcTag::dflc2);
        CHECK(m.consistent);
        CHECK(check_twisted_derivation(R, fd.D, fd.k).passed());
      }
  CHECK(found > 0);
}

TEST_CASE("semi-quasicentroids") {
  Algebra R = test::rc();
  CHECK(check_semiquasicentroid(R, OperatorTable::zero(Variance::conformal, 1, 1)).passed());
  // T_lam x = t(lam) x: both sides equal (lam - mu) t(-lam-mu-d) x.
  for (const char* t : {"lam", "lam^2", "3*lam - 1"}) CHECK(check_semiquasicentroid(R, scalar_op(t)).passed());
  // T_lam x = d x: LHS (lam-mu) d, RHS (d+lam)(d+lam+c) - (d+mu)(d+mu+c).
  auto rep = check_semiquasicentroid(R, scalar_op("d"));
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].residual == Element{P("(mu - lam)*(d + lam + mu + c)")});

  std::mt19937 rng(53);
  for (const Algebra& A : {test::rc(1), test::rlw()}) {
    for (int i = 0; i < 10; ++i) {
      Element b = random_b(rng, A.rank());
      auto T = inner_semiquasicentroid(A, b);
      CHECK(check_semiquasicentroid(A, T).passed());
      auto w = solve_inner_witness(A, T, 2);
      REQUIRE(w.has_value());
      CHECK(inner_semiquasicentroid(A, *w) == T);
    }
  }
}

TEST_CASE("inner witnesses") {
  Algebra R = test::rc(1);
  auto Tx = inner_semiquasicentroid(R, Element{Poly(1)});
  CHECK(Tx.images[0] == Element{P("1 - lam")});
  auto w = solve_inner_witness(R, Tx, 2);
  REQUIRE(w.has_value());
  CHECK(inner_semiquasicentroid(R, *w) == Tx);

  auto w0 = solve_inner_witness(R, OperatorTable::zero(Variance::conformal, 1, 1), 2);
  REQUIRE(w0.has_value());
  CHECK(is_zero(*w0));

  auto hand = solve_inner_witness(R, scalar_op("1 - lam"), 0);
  REQUIRE(hand.has_value());
  CHECK(*hand == Element{Poly(1)});

  CHECK_FALSE(solve_inner_witness(R, scalar_op("lam^2"), 2).has_value());
  CHECK_THROWS_AS(solve_inner_witness(test::rc(), scalar_op("c - lam"), 2), std::invalid_argument);
}
