#include "cwb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <unordered_map>

namespace cwb {

namespace {

struct VarInfo {
  std::string name;
  VarKind kind;
};

class VarTable {
 public:
  VarTable() {
    add("d", VarKind::module);
    add("lam", VarKind::spectral);
    add("mu", VarKind::spectral);
    add("nu", VarKind::spectral);
  }

  Var intern(std::string_view name, VarKind kind) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) {
        if (infos_[it->second].kind != kind)
          throw std::invalid_argument("identifier '" + std::string(name) +
                                      "' already names a variable of another kind");
        return Var(it->second);
      }
    }
    std::unique_lock lock(mutex_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return Var(it->second);
    return Var(add(std::string(name), kind));
  }

  std::optional<Var> find(std::string_view name) const {
    std::shared_lock lock(mutex_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return Var(it->second);
    return std::nullopt;
  }

  const VarInfo& info(Var v) const {
    std::shared_lock lock(mutex_);
    return infos_.at(v.id());
  }

 private:
  std::uint32_t add(std::string name, VarKind kind) {
    auto id = static_cast<std::uint32_t>(infos_.size());
    ids_.emplace(name, id);
    infos_.push_back({std::move(name), kind});
    return id;
  }

  mutable std::shared_mutex mutex_;
  std::deque<VarInfo> infos_;  // deque: references stay valid on growth
  std::unordered_map<std::string, std::uint32_t> ids_;
};

VarTable& table() {
  static VarTable t;
  return t;
}

int kind_rank(VarKind k) {
  switch (k) {
    case VarKind::module: return 0;
    case VarKind::spectral: return 1;
    case VarKind::parameter: return 2;
    case VarKind::unknown: return 3;
  }
  return 4;
}

using Accumulator = std::map<Monomial, Rational>;

void accumulate(Accumulator& acc, const Monomial& m, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

Poly from_accumulator(const Accumulator& acc) {
  Poly out;
  for (const auto& [m, c] : acc) out += Poly::monomial(m, c);
  return out;
}

}  // namespace

Var Var::parameter(std::string_view name) {
  if (is_reserved_name(name))
    throw std::invalid_argument("'" + std::string(name) + "' is reserved and cannot be a parameter");
  if (name.empty() || name.front() == '#')
    throw std::invalid_argument("invalid parameter name '" + std::string(name) + "'");
  return table().intern(name, VarKind::parameter);
}

Var Var::unknown(std::size_t index) {
  return table().intern("#u" + std::to_string(index), VarKind::unknown);
}

Var Var::lookup(std::string_view name) {
  if (auto v = table().find(name)) return *v;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

bool Var::is_reserved_name(std::string_view name) {
  return name == "d" || name == "lam" || name == "mu" || name == "nu";
}

VarKind Var::kind() const { return table().info(*this).kind; }
const std::string& Var::name() const { return table().info(*this).name; }

bool precedes(Var a, Var b) {
  if (a == b) return false;
  const auto& ia = table().info(a);
  const auto& ib = table().info(b);
  int ra = kind_rank(ia.kind), rb = kind_rank(ib.kind);
  if (ra != rb) return ra < rb;
  if (ia.kind == VarKind::parameter) return ia.name < ib.name;
  return a.id() < b.id();
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, std::uint32_t e) {
  Monomial m;
  if (e == 0) return m;
  m.exps_.assign(v.id() + 1, 0);
  m.exps_[v.id()] = e;
  return m;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t s = 0;
  for (auto e : exps_) s += e;
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  const auto& a = exps_.size() >= o.exps_.size() ? exps_ : o.exps_;
  const auto& b = exps_.size() >= o.exps_.size() ? o.exps_ : exps_;
  m.exps_ = a;
  for (std::size_t i = 0; i < b.size(); ++i) m.exps_[i] += b[i];
  return m;
}

Monomial Monomial::without(Var v) const {
  Monomial m = *this;
  if (v.id() < m.exps_.size()) {
    m.exps_[v.id()] = 0;
    m.trim();
  }
  return m;
}

std::vector<Var> Monomial::variables() const {
  std::vector<Var> out;
  for (std::uint32_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) out.emplace_back(i);
  return out;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::var(Var v) { return monomial(Monomial::of(v), 1); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_[0].mono.is_one()) return terms_[0].coeff;
  return 0;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

template <typename Op>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, Op op) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back({b[j].mono, op(Rational(0), b[j].coeff)});
      ++j;
    } else {
      Rational c = op(a[i].coeff, b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x + y); });
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x - y); });
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly p;
  p.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) p.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
  p.normalize();
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::subst(Var v, const Poly& q) const {
  if (v.kind() == VarKind::parameter)
    throw std::invalid_argument("cannot substitute parameter '" + v.name() + "'; bind it instead");
  if (!mentions(v)) return *this;
  std::vector<Poly> powers{Poly(1)};
  Poly out;
  std::vector<Term> untouched;
  for (const auto& t : terms_) {
    auto e = t.mono.exponent(v);
    if (e == 0) {
      untouched.push_back(t);
      continue;
    }
    while (powers.size() <= e) powers.push_back(powers.back() * q);
    out += Poly::monomial(t.mono.without(v), t.coeff) * powers[e];
  }
  Poly rest;
  rest.terms_ = std::move(untouched);
  return out + rest;
}

Poly Poly::subst(const std::map<Var, Poly>& images) const {
  for (const auto& [v, q] : images)
    if (v.kind() == VarKind::parameter)
      throw std::invalid_argument("cannot substitute parameter '" + v.name() + "'; bind it instead");
  return subst_unchecked(images);
}

Poly Poly::subst_unchecked(const std::map<Var, Poly>& images) const {
  std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> cache;
  auto power = [&](Var v, std::uint32_t e) -> const Poly& {
    auto key = std::make_pair(v.id(), e);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    return cache.emplace(key, images.at(v).pow(e)).first->second;
  };
  Accumulator acc;
  for (const auto& t : terms_) {
    Monomial kept;
    Poly factor(t.coeff);
    for (Var v : t.mono.variables()) {
      auto e = t.mono.exponent(v);
      if (images.count(v))
        factor = factor * power(v, e);
      else
        kept = kept * Monomial::of(v, e);
    }
    for (const auto& s : factor.terms_) accumulate(acc, s.mono * kept, s.coeff);
  }
  return from_accumulator(acc);
}

Poly Poly::assign(const std::map<std::string, Rational>& bindings) const {
  std::map<Var, Poly> images;
  for (const auto& [name, value] : bindings) {
    if (Var::is_reserved_name(name))
      throw std::invalid_argument("cannot bind reserved variable '" + name + "'");
    images.emplace(Var::parameter(name), Poly(value));
  }
  return images.empty() ? *this : subst_unchecked(images);
}

Rational Poly::evaluate(const std::map<Var, Rational>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (Var x : t.mono.variables()) {
      auto it = point.find(x);
      if (it == point.end()) throw std::invalid_argument("no value for variable '" + x.name() + "'");
      Rational p = 1;
      for (std::uint32_t k = 0; k < t.mono.exponent(x); ++k) p *= it->second;
      v *= p;
    }
    sum += v;
  }
  return sum;
}

std::set<Var> Poly::variables() const {
  std::set<Var> out;
  for (const auto& t : terms_)
    for (Var v : t.mono.variables()) out.insert(v);
  return out;
}

bool Poly::mentions(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.exponent(v) != 0; });
}

bool Poly::has_parameters() const {
  for (Var v : variables())
    if (v.kind() == VarKind::parameter) return true;
  return false;
}

std::uint32_t Poly::degree_in(Var v) const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.mono.exponent(v));
  return m;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.mono.total_degree());
  return m;
}

std::map<Monomial, Poly> Poly::coefficients_in(std::span<const Var> vars) const {
  std::map<Monomial, Accumulator> parts;
  for (const auto& t : terms_) {
    Monomial key, rest = t.mono;
    for (Var v : vars) {
      if (auto e = t.mono.exponent(v)) {
        key = key * Monomial::of(v, e);
        rest = rest.without(v);
      }
    }
    accumulate(parts[key], rest, t.coeff);
  }
  std::map<Monomial, Poly> out;
  for (const auto& [k, acc] : parts)
    if (!acc.empty()) out.emplace(k, from_accumulator(acc));
  return out;
}

Rational Poly::linear_coefficient(Var v) const {
  const Monomial target = Monomial::of(v);
  for (const auto& t : terms_)
    if (t.mono == target) return t.coeff;
  return 0;
}

// ---------------------------------------------------------------- printing

namespace {

// Descending graded lexicographic order under the variable precedence.
bool print_before(const Monomial& a, const Monomial& b, const std::vector<Var>& order) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (Var v : order) {
    auto ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea > eb;
  }
  return false;
}

std::string monomial_to_string(const Monomial& m, const std::vector<Var>& order) {
  std::string s;
  for (Var v : order) {
    auto e = m.exponent(v);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += v.name();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  auto vs = variables();
  std::vector<Var> order(vs.begin(), vs.end());
  std::sort(order.begin(), order.end(), precedes);
  std::vector<const Term*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Term* a, const Term* b) { return print_before(a->mono, b->mono, order); });
  std::string out;
  bool first = true;
  for (const Term* t : sorted) {
    bool neg = t->coeff < 0;
    Rational mag = neg ? Rational(-t->coeff) : t->coeff;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono = monomial_to_string(t->mono, order);
    if (mono.empty())
      out += rational_to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += rational_to_string(mag) + "*" + mono;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view src, const IdentResolver& resolve) : src_(src), resolve_(resolve) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Poly expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '-') throw ParseError("negative exponent", pos_);
      std::size_t at = pos_;
      std::string e = digits();
      if (e.empty()) throw ParseError("expected exponent", at);
      if (e.size() > 4) throw ParseError("exponent too large", at);
      b = b.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        std::size_t at = pos_;
        std::string den = digits();
        if (den.empty()) throw ParseError("expected denominator", at);
        mpz_class q(den);
        if (q == 0) throw ParseError("zero denominator", at);
        Rational r(num, q);
        r.canonicalize();
        return Poly(r);
      }
      return Poly(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return resolve_(src_.substr(start, pos_ - start), start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view src_;
  const IdentResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view src, const IdentResolver& resolve) { return Parser(src, resolve).run(); }

Poly Poly::parse(std::string_view src, const std::set<std::string>& params) {
  IdentResolver resolve = [&](std::string_view name, std::size_t pos) -> Poly {
    if (Var::is_reserved_name(name)) return Poly::var(Var::lookup(name));
    if (params.count(std::string(name))) return Poly::var(Var::parameter(name));
    throw ParseError("undeclared identifier '" + std::string(name) + "'", pos);
  };
  return parse(src, resolve);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
    std::size_t i = 0;
    while (i < x.size() && std::isspace(static_cast<unsigned char>(x[i]))) ++i;
    x.erase(0, i);
  };
  trim(s);
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto all_digits = [](const std::string& x) {
    return !x.empty() && std::all_of(x.begin(), x.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  mpz_class q(den);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(mpz_class(num), q);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

}  // namespace cwb
