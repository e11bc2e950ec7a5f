#pragma once

#include <array>
#include <random>
#include <string>

#include "cwb/flag.hpp"

namespace cwb::test {

inline Poly P(const std::string& src, std::set<std::string> params = {"c", "xi"}) {
  return Poly::parse(src, params);
}

inline Algebra rank1(const std::string& entry, const std::string& name = "A") {
  Algebra A{name, {"c"}, FreeModule{{"x"}}, LambdaTable::square(1)};
  A.table.entry(0, 0)[0] = P(entry);
  return A;
}

inline Algebra rc(std::optional<int> c = std::nullopt) {
  Algebra A = rank1("d+lam+c", "Rc");
  if (c) A = A.assign({{"c", *c}});
  return A;
}

inline Algebra rlw() {
  Algebra A{"RLW", {}, FreeModule{{"L", "W"}}, LambdaTable::square(2)};
  A.table.entry(0, 1) = {Poly(1), Poly()};
  A.table.entry(1, 0) = {Poly(1), Poly()};
  A.table.entry(1, 1) = {Poly(), Poly(1)};
  return A;
}

inline std::string fixture(const std::string& name) { return std::string(CWB_FIXTURES) + "/" + name; }

// Polynomial with coefficients in {-2..2} on monomials in the given variables
// up to total degree deg.
inline Poly random_poly(std::mt19937& rng, std::vector<Var> vars, unsigned deg, int density = 2) {
  std::uniform_int_distribution<int> coef(-2, 2), keep(0, density);
  Poly out;
  std::function<void(std::size_t, unsigned, Poly)> go = [&](std::size_t i, unsigned left, Poly mono) {
    if (i == vars.size()) {
      if (keep(rng) == 0) out += Poly(coef(rng)) * mono;
      return;
    }
    Poly m = mono;
    for (unsigned e = 0; e <= left; ++e) {
      go(i + 1, left - e, m);
      m = m * Poly::var(vars[i]);
    }
  };
  go(0, deg, Poly(1));
  return out;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// Rank-one flag datum over a rank-one R from (h, k, D, T, M, P) strings.
inline FlagDatum flag1(const Algebra& R, const std::string& h, const std::string& k, const std::string& D,
                       const std::string& T, const std::string& M, const std::string& Pp,
                       const std::map<std::string, Rational>& bind = {}) {
  FlagDatum fd = FlagDatum::zero(R);
  fd.h.images[0][0] = P(h).assign(bind);
  fd.k.images[0][0] = P(k).assign(bind);
  fd.D.images[0][0] = P(D).assign(bind);
  fd.T.images[0][0] = P(T).assign(bind);
  fd.M[0] = P(M).assign(bind);
  fd.P = P(Pp).assign(bind);
  return fd;
}

// Bicrossed classification lists over R_c, one per numeric regime; entries
// are (h, k, D, T) with M = 0 and P = lam + d + xi.
struct Regime {
  int xi, c;
  std::vector<std::array<std::string, 4>> list;
};

inline std::vector<Regime> bicrossed_regimes() {
  return {
      {0, 0, {{"0", "0", "0", "0"}, {"lam+d", "0", "lam+d", "0"}, {"lam+d", "-lam", "0", "0"}}},
      {1, 1, {{"0", "0", "0", "0"}, {"lam+d", "0", "lam+d+c", "c"}, {"lam+d", "0", "lam+d", "0"},
              {"lam+d+c", "0", "lam+d+c", "0"}, {"lam+d", "c", "lam+d", "c"}, {"lam+d+2*c", "c", "lam+d+2*c", "c"},
              {"lam+d+c", "c", "lam+d", "0"}, {"lam+d+c", "-lam+c", "0", "0"}}},
      {0, 1, {{"0", "0", "0", "0"}, {"lam+d", "0", "lam+d", "0"}, {"lam+d+c", "c", "lam+d", "0"}}},
      {1, 0, {{"0", "0", "0", "0"}, {"lam+d", "0", "lam+d+xi", "xi"}, {"lam+d", "0", "lam+d", "0"}}},
      {1, 2, {{"0", "0", "0", "0"}, {"lam+d", "0", "lam+d+xi", "xi"}, {"lam+d", "0", "lam+d", "0"},
              {"lam+d+xi", "0", "lam+d+2*xi", "xi"}, {"lam+d+2*xi", "2*xi", "lam+d", "0"}}},
      {2, 1, {{"0", "0", "0", "0"}, {"lam+d", "0", "lam+d+2*c", "2*c"}, {"lam+d", "0", "lam+d", "0"},
              {"lam+d+2*c", "c", "lam+d+c", "0"}, {"lam+d+c", "c", "lam+d", "0"}}},
      {3, 1, {{"0", "0", "0", "0"}, {"lam+d", "0", "lam+d+xi", "xi"}, {"lam+d", "0", "lam+d", "0"},
              {"lam+d+c", "c", "lam+d", "0"}}}};
}

inline std::vector<FlagDatum> regime_datums(const Regime& r) {
  std::map<std::string, Rational> bind{{"c", r.c}, {"xi", r.xi}};
  Algebra R = rc(r.c);
  std::vector<FlagDatum> out;
  for (const auto& t : r.list) out.push_back(flag1(R, t[0], t[1], t[2], t[3], "0", "lam+d+xi", bind));
  return out;
}

// Random rank-one flag datum with entries of total degree <= deg in (lam, d).
inline FlagDatum random_flag(std::mt19937& rng, const Algebra& R, unsigned deg) {
  std::uniform_int_distribution<int> coin(0, 2);
  auto pick = [&] { return coin(rng) == 0 ? random_poly(rng, {Var::lam(), Var::d()}, deg, 1) : Poly(); };
  FlagDatum fd = FlagDatum::zero(R);
  for (std::size_t i = 0; i < R.rank(); ++i) {
    fd.h.images[i][0] = pick();
    fd.k.images[i][0] = pick();
    for (std::size_t j = 0; j < R.rank(); ++j) {
      fd.D.images[i][j] = pick();
      fd.T.images[i][j] = pick();
    }
    fd.M[i] = pick();
  }
  fd.P = pick();
  return fd;
}

using MultTable = std::vector<std::vector<std::vector<Rational>>>;

inline MultTable random_mult(std::mt19937& rng, std::size_t n = 2) {
  std::uniform_int_distribution<int> pick(-1, 1), sparse(0, 2);
  MultTable m(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (auto& row : m)
    for (auto& v : row)
      for (auto& c : v) c = sparse(rng) == 0 ? pick(rng) : 0;
  return m;
}

// (ab)c - a(bc) = (ba)c - b(ac) on all basis triples, by direct arithmetic.
inline bool brute_left_symmetric(const MultTable& m) {
  const std::size_t n = m.size();
  auto mul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[k] += a[i] * b[j] * m[i][j][k];
    return out;
  };
  auto unit = [n](std::size_t i) { std::vector<Rational> v(n); v[i] = 1; return v; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto a = unit(i), b = unit(j), c = unit(k);
        auto lhs = mul(mul(a, b), c), r1 = mul(a, mul(b, c));
        auto rhs = mul(mul(b, a), c), r2 = mul(b, mul(a, c));
        for (std::size_t q = 0; q < n; ++q)
          if (lhs[q] - r1[q] != rhs[q] - r2[q]) return false;
      }
  return true;
}

}  // namespace cwb::test
