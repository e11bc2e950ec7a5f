#include "cwb/module.hpp"

#include <algorithm>

namespace cwb {

std::size_t FreeModule::index_of(std::string_view name) const {
  auto it = std::find(basis.begin(), basis.end(), name);
  if (it == basis.end()) throw std::invalid_argument("no basis element named '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - basis.begin());
}

Element zero_element(std::size_t rank) { return Element(rank); }

Element basis_element(std::size_t rank, std::size_t i) {
  Element e(rank);
  e.at(i) = Poly(1);
  return e;
}

bool is_zero(const Element& e) {
  return std::all_of(e.begin(), e.end(), [](const Poly& p) { return p.is_zero(); });
}

static void require_same_rank(const Element& a, const Element& b) {
  if (a.size() != b.size()) throw std::invalid_argument("module mismatch: elements of different rank");
}

Element operator+(Element a, const Element& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Element operator-(Element a, const Element& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Element operator-(Element a) {
  for (auto& p : a) p = -p;
  return a;
}

Element operator*(const Poly& s, Element a) {
  for (auto& p : a) p = s * p;
  return a;
}

Element shift_spectral(const Element& e, Var v, const Poly& expr) {
  Element out;
  out.reserve(e.size());
  for (const auto& p : e) out.push_back(p.subst(v, expr));
  return out;
}

Element subst(const Element& e, const std::map<Var, Poly>& images) {
  Element out;
  out.reserve(e.size());
  for (const auto& p : e) out.push_back(p.subst(images));
  return out;
}

// ---------------------------------------------------------------- LambdaTable

LambdaTable::LambdaTable(std::size_t left, std::size_t right, std::size_t target)
    : left_(left), right_(right), target_(target), entries_(left * right, Element(target)) {}

bool LambdaTable::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Element& e) { return cwb::is_zero(e); });
}

bool LambdaTable::mentions(Var v) const {
  for (const auto& e : entries_)
    for (const auto& p : e)
      if (p.mentions(v)) return true;
  return false;
}

bool LambdaTable::has_parameters() const {
  for (const auto& e : entries_)
    for (const auto& p : e)
      if (p.has_parameters()) return true;
  return false;
}

LambdaTable LambdaTable::assign(const std::map<std::string, Rational>& bindings) const {
  LambdaTable t = *this;
  for (auto& e : t.entries_)
    for (auto& p : e) p = p.assign(bindings);
  return t;
}

Element eval_at(const LambdaTable& t, const Element& a, const Element& b, const Poly& s) {
  if (a.size() != t.left() || b.size() != t.right())
    throw std::invalid_argument("module mismatch in lambda-product");
  Element out(t.target());
  const Var d = Var::d();
  const Poly minus_s = -s;
  const Poly d_plus_s = d_() + s;
  std::vector<Poly> left(a.size()), right(b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) left[i] = a[i].subst(d, minus_s);
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!b[j].is_zero()) right[j] = b[j].subst(d, d_plus_s);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (left[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (right[j].is_zero()) continue;
      const Element& entry = t.entry(i, j);
      if (cwb::is_zero(entry)) continue;
      Poly scale = left[i] * right[j];
      for (std::size_t k = 0; k < entry.size(); ++k)
        if (!entry[k].is_zero()) out[k] += scale * entry[k].subst(Var::lam(), s);
    }
  }
  return out;
}

static void require_fresh(const Element& e, Var out) {
  for (const auto& p : e)
    if (p.mentions(out))
      throw std::invalid_argument("variable collision: '" + out.name() + "' already occurs in an argument");
}

Element eval_lambda(const LambdaTable& t, const Element& a, const Element& b, Var out) {
  if (out.kind() != VarKind::spectral) throw std::invalid_argument("output variable must be spectral");
  require_fresh(a, out);
  require_fresh(b, out);
  return eval_at(t, a, b, Poly::var(out));
}

// ---------------------------------------------------------------- operators

OperatorTable OperatorTable::zero(Variance v, std::size_t source, std::size_t target) {
  return OperatorTable{v, source, target, std::vector<Element>(source, Element(target))};
}

OperatorTable OperatorTable::functional(std::vector<Poly> values) {
  OperatorTable op{Variance::left_conformal, values.size(), 1, {}};
  for (auto& v : values) op.images.push_back(Element{std::move(v)});
  return op;
}

bool OperatorTable::is_zero() const {
  return std::all_of(images.begin(), images.end(), [](const Element& e) { return cwb::is_zero(e); });
}

bool OperatorTable::has_parameters() const {
  for (const auto& e : images)
    for (const auto& p : e)
      if (p.has_parameters()) return true;
  return false;
}

OperatorTable OperatorTable::assign(const std::map<std::string, Rational>& bindings) const {
  OperatorTable op = *this;
  for (auto& e : op.images)
    for (auto& p : e) p = p.assign(bindings);
  return op;
}

Element apply_at(const OperatorTable& op, const Element& v, const Poly& s) {
  if (v.size() != op.source) throw std::invalid_argument("module mismatch in operator application");
  const Poly shift = op.variance == Variance::conformal ? d_() + s : -s;
  Element out(op.target);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Poly f = v[i].subst(Var::d(), shift);
    for (std::size_t k = 0; k < op.target; ++k)
      if (!op.images[i][k].is_zero()) out[k] += f * op.images[i][k].subst(Var::lam(), s);
  }
  return out;
}

Element apply_operator(const OperatorTable& op, const Element& v, Var out) {
  if (out.kind() != VarKind::spectral) throw std::invalid_argument("output variable must be spectral");
  require_fresh(v, out);
  return apply_at(op, v, Poly::var(out));
}

Poly functional_at(const OperatorTable& h, const Element& v, const Poly& s, const Poly& t) {
  if (h.variance != Variance::left_conformal || h.target != 1)
    throw std::invalid_argument("expected a left-conformal functional");
  if (v.size() != h.source) throw std::invalid_argument("module mismatch in functional application");
  const std::map<Var, Poly> slots{{Var::lam(), s}, {Var::d(), t}};
  Poly out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero() || h.images[i][0].is_zero()) continue;
    out += v[i].subst(Var::d(), -s) * h.images[i][0].subst(slots);
  }
  return out;
}

LambdaTable build_current(const std::vector<std::vector<std::vector<Rational>>>& mult) {
  const std::size_t n = mult.size();
  LambdaTable t = LambdaTable::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mult[i].size() != n) throw std::invalid_argument("dimension mismatch in multiplication table");
    for (std::size_t j = 0; j < n; ++j) {
      if (mult[i][j].size() != n) throw std::invalid_argument("dimension mismatch in multiplication table");
      for (std::size_t k = 0; k < n; ++k) t.entry(i, j)[k] = Poly(mult[i][j][k]);
    }
  }
  return t;
}

Algebra Algebra::assign(const std::map<std::string, Rational>& bindings) const {
  Algebra a = *this;
  a.table = table.assign(bindings);
  return a;
}

std::string format_element(const Element& e, const std::vector<std::string>& names) {
  if (names.empty()) return e.empty() ? "0" : e[0].to_string();
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Poly& c = e[i];
    if (c.is_zero()) continue;
    std::string piece;
    if (c == Poly(1)) {
      piece = names[i];
    } else if (c == Poly(-1)) {
      piece = "-" + names[i];
    } else if (c.size() == 1) {
      piece = c.to_string() + "*" + names[i];
    } else {
      piece = "(" + c.to_string() + ")*" + names[i];
    }
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out.empty() ? "0" : out;
}

}  // namespace cwb
