// One line per acceptance criterion; exit status is nonzero when any line fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "cwb/io.hpp"
#include "support.hpp"

using namespace cwb;
using cwb::test::P;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Verdict()> body;
};

Algebra fixture_algebra(const std::string& name, std::map<std::string, Rational> bind = {}) {
  auto f = load_algebra(test::fixture(name));
  for (auto& [k, v] : bind) f.bindings[k] = v;
  return f.algebra.assign(f.bindings);
}

// Corpus of extending data: fixtures, listed classification data, and
// randomized rank-one sextuples.
struct Corpus {
  std::vector<ExtendingDatum> datums;
  std::vector<FlagDatum> flags;
};

Corpus build_corpus() {
  Corpus c;
  for (const char* name : {"zero_datum.json", "semidirect.json", "direct_sum.json", "case1_a.json", "case1_b.json",
                           "ex55_a.json", "ex55_b.json", "ex55_bicrossed.json", "ex53.json"}) {
    auto f = load_datum(test::fixture(name));
    c.datums.push_back(f.datum);
    if (f.flag) c.flags.push_back(*f.flag);
  }
  for (const auto& regime : test::bicrossed_regimes())
    for (const auto& fd : test::regime_datums(regime)) c.flags.push_back(fd);
  Algebra rlw = fixture_algebra("rlw.json");
  for (auto [k0, p1, p0, h] : std::vector<std::tuple<const char*, const char*, const char*, int>>{
           {"lam", "1", "lam", 2}, {"2", "1", "lam", 2}, {"1", "1", "0", 0}, {"lam", "lam", "0", 0}, {"lam", "0", "lam^2", 0}})
    c.flags.push_back(example53_datum(rlw, P(k0), P(p1), P(p0), h));

  ExtendingDatum bad = load_datum(test::fixture("semidirect.json")).datum;
  bad.l.entry(0, 0) = {lam_()};
  c.datums.push_back(bad);

  std::mt19937 rng(2024);
  for (const Algebra& R : {test::rc(1), test::rank1("0"), test::rank1("1"), test::rc(0)})
    for (int i = 0; i < 8; ++i) c.flags.push_back(test::random_flag(rng, R, 2));
  for (const auto& fd : c.flags) c.datums.push_back(flag_to_datum(fd));
  return c;
}

const Corpus& corpus() {
  static const Corpus c = build_corpus();
  return c;
}

std::string count_note(std::size_t total, std::size_t passing) {
  return std::to_string(total) + " datums, " + std::to_string(passing) + " passing";
}

Verdict criterion1() {
  Verdict v;
  for (const char* name : {"r0.json", "r1.json", "rc.json"}) {
    auto rep = check_lsca(load_algebra(test::fixture(name)).algebra);
    if (!rep.passed()) v = {false, std::string(name) + " fails: " + rep.to_text()};
  }
  const std::pair<const char*, const char*> bad[] = {
      {"bad1.json", "(lam^2 - mu^2)*x at (x,x,x), law=left-symmetry"},
      {"bad2.json", "(-d*lam + d*mu)*x at (x,x,x), law=left-symmetry"}};
  for (auto [name, golden] : bad) {
    auto rep = check_lsca(load_algebra(test::fixture(name)).algebra);
    if (rep.failures.size() != 1 || rep.failures[0].to_string() != golden)
      v = {false, std::string(name) + " residual: " + rep.to_text()};
  }
  if (v.ok) v.note = "0, x, d+lam+c pass; lam*x and d*x leave the expected residuals";
  return v;
}

Verdict criterion2() {
  std::ostringstream os;
  bool ok = true;
  for (int c : {0, 1, 2}) {
    auto dim = solve_derivations(fixture_algebra("rc.json", {{"c", c}}), 6).dimension;
    os << "R_c c=" << c << ": " << dim << "; ";
    ok = ok && dim == 0;
  }
  auto r0 = solve_derivations(fixture_algebra("r0.json"), 1).dimension;
  os << "R0 bound 1: " << r0;
  return {ok && r0 == 3, os.str()};
}

Verdict criterion3() {
  std::vector<Algebra> algebras;
  for (const char* name : {"r0.json", "r1.json", "rc.json", "rlw.json"}) algebras.push_back(fixture_algebra(name));
  for (const auto& d : corpus().datums)
    if (check_extending_structure(d).passed()) algebras.push_back(build_unified(d).E);
  std::size_t failures = 0;
  for (const auto& A : algebras) {
    if (!check_lsca(A).passed()) continue;
    failures += !check_lie(subadjacent(A)).passed();
  }
  return {failures == 0, std::to_string(algebras.size()) + " algebras, " + std::to_string(failures) + " failures"};
}

Verdict criterion4() {
  std::size_t passing = 0, mismatches = 0;
  for (const auto& d : corpus().datums) {
    bool a = check_extending_structure(d).passed();
    bool b = check_lsca(build_unified_unchecked(d).E).passed();
    passing += a;
    mismatches += a != b;
  }
  const std::size_t n = corpus().datums.size();
  bool ok = mismatches == 0 && n >= 20 && passing > 0 && passing < n;
  return {ok, count_note(n, passing) + ", " + std::to_string(mismatches) + " mismatches"};
}

Verdict criterion5() {
  std::vector<FlagDatum> flags = corpus().flags;
  std::mt19937 rng(4242);
  const Algebra bases[] = {test::rc(1), test::rank1("0"), test::rank1("1")};
  for (int i = 0; i < 50; ++i) flags.push_back(test::random_flag(rng, bases[i % 3], 2));
  std::size_t passing = 0, mismatches = 0;
  for (const auto& fd : flags) {
    bool a = check_flag(fd).passed();
    passing += a;
    mismatches += a != check_extending_structure(flag_to_datum(fd)).passed();
  }
  return {mismatches == 0 && passing > 0,
          std::to_string(flags.size()) + " flag datums (" + std::to_string(passing) + " passing), " +
              std::to_string(mismatches) + " disagreements"};
}

bool same_tables(const ExtendingDatum& a, const ExtendingDatum& b) {
  return a.R.table == b.R.table && a.phi == b.phi && a.psi == b.psi && a.l == b.l && a.r == b.r && a.g == b.g &&
         a.circ == b.circ;
}

Verdict criterion6() {
  std::size_t bad = 0;
  for (const auto& d : corpus().datums) bad += !same_tables(extract_datum(build_unified_unchecked(d)), d);
  return {bad == 0, std::to_string(corpus().datums.size()) + " datums, " + std::to_string(bad) + " differences"};
}

Verdict criterion7() {
  std::size_t checked = 0, bad = 0;
  for (const auto& d : corpus().datums) {
    if (!check_extending_structure(d).passed()) continue;
    ++checked;
    auto lie = induced_lie_datum(d);
    bad += subadjacent(build_unified(d).E).table != assemble_lie_unified(subadjacent_table(d.R.table), lie);
  }
  return {bad == 0 && checked > 0,
          std::to_string(checked) + " extending structures, " + std::to_string(bad) + " differences"};
}

Verdict criterion8() {
  std::ostringstream os;
  bool ok = true;
  std::size_t listed = 0;
  for (const auto& regime : test::bicrossed_regimes()) {
    for (const auto& fd : test::regime_datums(regime)) {
      ++listed;
      if (!check_flag(fd).passed() || !check_bicrossed(flag_to_datum(fd)).passed()) {
        ok = false;
        os << "xi=" << regime.xi << " c=" << regime.c << " datum fails; ";
      }
    }
  }
  auto eight = test::regime_datums(test::bicrossed_regimes()[1]);
  std::map<SearchStatus, int> tally;
  for (std::size_t i = 0; i < eight.size(); ++i)
    for (std::size_t j = i + 1; j < eight.size(); ++j) ++tally[search_equiv(eight[i], eight[j], 3).status];
  int pairs = 0;
  for (auto [s, n] : tally) pairs += n;
  ok = ok && pairs == 28 && tally[SearchStatus::found] == 0 && tally[SearchStatus::inconclusive] == 0;
  os << listed << " listed datums pass; " << pairs << " pairs: " << tally[SearchStatus::rejected]
     << " rejected (h or k differ), " << tally[SearchStatus::none_within_bound] << " none-within-bound, "
     << tally[SearchStatus::found] << " found";
  return {ok, os.str()};
}

Verdict criterion9() {
  auto a = load_datum(test::fixture("case1_a.json"));
  auto b = load_datum(test::fixture("case1_b.json"));
  FlagDatum fa = a.flag->assign(a.bindings), fb = b.flag->assign(b.bindings);
  bool explicit_ok = check_equiv(fa, fb, {Element{Poly(1)}, 1}).passed();
  auto s = search_equiv(fa, fb, 0);
  bool search_ok = s.status == SearchStatus::found && check_equiv(fa, fb, *s.witness).passed();
  std::string note = std::string("explicit witness ") + (explicit_ok ? "passes" : "fails") + "; search " +
                     to_string(s.status);
  if (s.witness)
    note += " with beta = " + rational_to_string(s.witness->beta) + ", omega = " +
            format_element(s.witness->omega, fa.R.basis());
  return {explicit_ok && search_ok, note};
}

Verdict criterion10() {
  Algebra R = fixture_algebra("rlw.json");
  FlagDatum sample = example53_datum(R, lam_(), Poly(1), lam_(), 2);
  FlagDatum normal = example53_datum(R, P("lam - 2"), Poly(1), Poly(), 0);
  auto flag = check_flag(sample);
  auto crossed = check_crossed(flag_to_datum(sample));
  auto s = search_equiv(sample, normal, 2, {1});
  bool reach = s.status == SearchStatus::found;
  std::string note = "sample datum check_flag ";
  note += flag.passed() ? "passes" : "fails (" + flag.failures[0].to_string() + ")";
  note += ", check_crossed ";
  note += crossed.passed() ? "passes" : "fails (" + crossed.failures[0].to_string() + ")";
  note += "; normal form ";
  note += check_flag(normal).passed() ? "passes" : "also fails lfd7";
  note += "; search beta=1 ";
  note += reach ? "reaches it with omega = " + format_element(s.witness->omega, R.basis()) : to_string(s.status);
  return {flag.passed() && crossed.passed() && reach, note};
}

Verdict criterion11() {
  std::mt19937 rng(1111);
  std::size_t bad = 0, round_trips = 0;
  const std::pair<Algebra, Algebra> cases[] = {{fixture_algebra("rc.json"), fixture_algebra("rc.json", {{"c", 1}})},
                                               {fixture_algebra("rlw.json"), fixture_algebra("rlw.json")}};
  for (const auto& [symbolic, numeric] : cases) {
    for (int i = 0; i < 10; ++i) {
      Element b(symbolic.rank());
      for (auto& c : b) c = test::random_poly(rng, {Var::d()}, 2, 0);
      bad += !check_semiquasicentroid(symbolic, inner_semiquasicentroid(symbolic, b)).passed();
      auto T = inner_semiquasicentroid(numeric, b);
      bad += !check_semiquasicentroid(numeric, T).passed();
      auto w = solve_inner_witness(numeric, T, 2);
      if (w && inner_semiquasicentroid(numeric, *w) == T)
        ++round_trips;
      else
        ++bad;
    }
  }
  return {bad == 0, "20 random b over R_c and RLW, " + std::to_string(round_trips) + " witness round trips"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rank-one fixtures", 1, criterion1},
      {2, "derivations of R_c and R0", 5, criterion2},
      {3, "sub-adjacent algebras are Lie", 10, criterion3},
      {4, "extending structure iff unified product is left-symmetric", 60, criterion4},
      {5, "flag identities agree with the general conditions", 60, criterion5},
      {6, "extraction inverts the unified build", 10, criterion6},
      {7, "induced Lie structure matches the sub-adjacent product", 10, criterion7},
      {8, "bicrossed classification lists", 300, criterion8},
      {9, "case 1 equivalence witness", 1, criterion9},
      {10, "rank-two crossed sample and its normal form", 30, criterion10},
      {11, "inner semi-quasicentroids", 10, criterion11},
  };
  corpus();
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.limit_seconds;
    bool ok = v.ok && in_time;
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s of %.0f s", secs, c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << timing
              << (in_time ? "" : ", over the limit") << "] " << v.note << "\n";
  }
  std::cout << (criteria.size() - failed) << " of " << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
