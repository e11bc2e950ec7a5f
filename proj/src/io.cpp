#include "cwb/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace cwb {

namespace {

constexpr std::size_t basis_placeholder_base = 1'000'000'000;

std::string key_path(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw IoError((where.empty() ? std::string("<root>") : where) + ": " + msg);
}

bool is_identifier(const std::string& s) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s, ident);
}

// Names in scope while parsing one file section.
struct Scope {
  std::set<std::string> params;
  std::vector<std::string> basis;  // target basis for element strings; empty for scalars
};

Poly parse_scalar(const std::string& src, const Scope& scope, const std::string& where) {
  try {
    return Poly::parse(src, scope.params);
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Element parse_entries(const Json& j, const Scope& scope, const std::string& where) {
  std::vector<std::string> items;
  if (j.is_string()) {
    items.push_back(j.get<std::string>());
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_string()) fail(where + "[" + std::to_string(i) + "]", "expected a string");
      items.push_back(j[i].get<std::string>());
    }
  } else {
    fail(where, "expected a string or a list of strings");
  }
  const std::size_t n = scope.basis.size();
  Element out(n);
  IdentResolver resolve = [&](std::string_view name, std::size_t pos) -> Poly {
    if (Var::is_reserved_name(name)) return Poly::var(Var::lookup(name));
    auto it = std::find(scope.basis.begin(), scope.basis.end(), name);
    if (it != scope.basis.end())
      return Poly::var(Var::unknown(basis_placeholder_base + static_cast<std::size_t>(it - scope.basis.begin())));
    if (scope.params.count(std::string(name))) return Poly::var(Var::parameter(name));
    throw ParseError("undeclared identifier '" + std::string(name) + "'", pos);
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string at = j.is_array() ? where + "[" + std::to_string(i) + "]" : where;
    Poly p;
    try {
      p = Poly::parse(items[i], resolve);
    } catch (const ParseError& e) {
      fail(at, e.what());
    }
    for (const auto& t : p.terms()) {
      long slot = -1;
      Monomial rest;
      for (Var v : t.mono.variables()) {
        if (v.kind() == VarKind::unknown) {
          if (slot >= 0 || t.mono.exponent(v) != 1) fail(at, "entry must be linear in the basis names");
          slot = static_cast<long>(std::stoul(v.name().substr(2)) - basis_placeholder_base);
        } else {
          rest = rest * Monomial::of(v, t.mono.exponent(v));
        }
      }
      if (slot < 0) fail(at, "term without a basis name");
      out[static_cast<std::size_t>(slot)] += Poly::monomial(rest, t.coeff);
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_key(const std::string& key, std::size_t rows, std::size_t cols,
                                              const std::string& where) {
  static const std::regex pat("\\s*\\(\\s*([0-9]+)\\s*,\\s*([0-9]+)\\s*\\)\\s*");
  std::smatch m;
  if (!std::regex_match(key, m, pat)) fail(where, "key must look like \"(i,j)\"");
  std::size_t i = std::stoul(m[1]), j = std::stoul(m[2]);
  if (i < 1 || i > rows || j < 1 || j > cols) fail(where, "index out of range");
  return {i - 1, j - 1};
}

LambdaTable parse_table(const Json& j, std::size_t rows, std::size_t cols, const Scope& target,
                        const std::string& where) {
  LambdaTable t(rows, cols, target.basis.size());
  if (j.is_null()) return t;
  if (!j.is_object()) fail(where, "expected an object keyed by \"(i,j)\"");
  for (const auto& [key, value] : j.items()) {
    const std::string at = where + "." + "\"" + key + "\"";
    auto [a, b] = parse_key(key, rows, cols, at);
    t.entry(a, b) = t.entry(a, b) + parse_entries(value, target, at);
  }
  return t;
}

std::vector<std::string> parse_names(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) fail(at, "expected a string");
    std::string s = j[i].get<std::string>();
    if (!is_identifier(s)) fail(at, "'" + s + "' is not an identifier");
    if (Var::is_reserved_name(s)) fail(at, "'" + s + "' is reserved");
    if (std::find(out.begin(), out.end(), s) != out.end()) fail(at, "duplicate name '" + s + "'");
    out.push_back(s);
  }
  return out;
}

Rational parse_value(const Json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where, "expected an integer or a rational string like \"1/2\"");
}

void parse_params(const Json& j, std::vector<std::string>& names, std::map<std::string, Rational>& bindings,
                  const std::string& where) {
  if (j.is_null()) return;
  if (!j.is_array()) fail(where, "expected a list");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    std::string name;
    if (j[i].is_string()) {
      name = j[i].get<std::string>();
    } else if (j[i].is_object() && j[i].contains("name") && j[i]["name"].is_string()) {
      name = j[i]["name"].get<std::string>();
      if (j[i].contains("value")) bindings[name] = parse_value(j[i]["value"], at + ".value");
    } else {
      fail(at, "expected a name or {\"name\", \"value\"}");
    }
    if (!is_identifier(name)) fail(at, "'" + name + "' is not an identifier");
    if (Var::is_reserved_name(name)) fail(at, "'" + name + "' is reserved");
    try {
      Var::parameter(name);
    } catch (const std::exception& e) {
      fail(at, e.what());
    }
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  }
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      fail(key_path(where, key), "unknown key");
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

void require_disjoint(const std::vector<std::string>& basis, const std::vector<std::string>& params,
                      const std::string& where) {
  for (const auto& b : basis)
    if (std::find(params.begin(), params.end(), b) != params.end())
      fail(where, "'" + b + "' is both a basis name and a parameter");
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

AlgebraFile parse_algebra(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  check_keys(j, {"name", "params", "basis", "table", "r_rank"}, where);
  AlgebraFile f;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(key_path(where, "name"), "expected a string");
    f.algebra.name = j["name"].get<std::string>();
  }
  parse_params(j.value("params", Json()), f.algebra.params, f.bindings, key_path(where, "params"));
  if (!j.contains("basis")) fail(key_path(where, "basis"), "missing");
  f.algebra.module.basis = parse_names(j["basis"], key_path(where, "basis"));
  require_disjoint(f.algebra.basis(), f.algebra.params, key_path(where, "basis"));
  Scope scope{as_set(f.algebra.params), f.algebra.basis()};
  const std::size_t n = f.algebra.rank();
  f.algebra.table = parse_table(j.value("table", Json()), n, n, scope, key_path(where, "table"));
  return f;
}

AlgebraFile load_algebra(const std::filesystem::path& path) {
  Json j = read_json(path);
  try {
    return parse_algebra(j);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

bool looks_like_datum(const Json& j) { return j.is_object() && j.contains("R"); }

namespace {

Json resolve_ref(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    try {
      return read_json(p);
    } catch (const IoError& e) {
      fail(where, e.what());
    }
  }
  if (j.is_object()) return j;
  fail(where, "expected a file path or an inline object");
}

// Inline R and Q sections see the parameters declared at the top of the datum.
Json inherit(Json section, const Json& raw_ref, const Json& top) {
  if (!raw_ref.is_object() || !top.contains("params") || !top["params"].is_array() || !section.is_object())
    return section;
  Json merged = section.value("params", Json::array());
  if (!merged.is_array()) return section;
  for (const auto& p : top["params"]) merged.push_back(p);
  section["params"] = merged;
  return section;
}

OperatorTable parse_functional(const Json& j, const Algebra& R, const Scope& scalar, const std::string& where) {
  OperatorTable op = OperatorTable::functional(std::vector<Poly>(R.rank()));
  if (j.is_null()) return op;
  if (!j.is_object()) fail(where, "expected an object keyed by basis names of R");
  for (const auto& [key, value] : j.items()) {
    const std::string at = where + "." + key;
    auto it = std::find(R.basis().begin(), R.basis().end(), key);
    if (it == R.basis().end()) fail(at, "not a basis name of R");
    if (!value.is_string()) fail(at, "expected a polynomial string");
    op.images[static_cast<std::size_t>(it - R.basis().begin())][0] = parse_scalar(value.get<std::string>(), scalar, at);
  }
  return op;
}

OperatorTable parse_operator(const Json& j, const Algebra& R, const Scope& elem, const std::string& where) {
  OperatorTable op = OperatorTable::zero(Variance::conformal, R.rank(), R.rank());
  if (j.is_null()) return op;
  if (!j.is_object()) fail(where, "expected an object keyed by basis names of R");
  for (const auto& [key, value] : j.items()) {
    const std::string at = where + "." + key;
    auto it = std::find(R.basis().begin(), R.basis().end(), key);
    if (it == R.basis().end()) fail(at, "not a basis name of R");
    op.images[static_cast<std::size_t>(it - R.basis().begin())] = parse_entries(value, elem, at);
  }
  return op;
}

}  // namespace

DatumFile parse_datum(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  check_keys(j, {"name", "params", "R", "Q", "phi", "psi", "l", "r", "g", "circ", "flag"}, where);
  DatumFile f;
  if (!j.contains("R")) fail(key_path(where, "R"), "missing");
  AlgebraFile rf =
      parse_algebra(inherit(resolve_ref(j["R"], base_dir, key_path(where, "R")), j["R"], j), key_path(where, "R"));
  f.bindings = rf.bindings;
  Algebra R = rf.algebra;
  std::vector<std::string> params = R.params;
  parse_params(j.value("params", Json()), params, f.bindings, key_path(where, "params"));

  static const std::vector<std::string> table_keys{"Q", "phi", "psi", "l", "r", "g", "circ"};
  const bool has_tables =
      std::any_of(table_keys.begin(), table_keys.end(), [&](const std::string& k) { return j.contains(k); });
  if (j.contains("flag") && has_tables)
    fail(where, "the flag section and the table sections are mutually exclusive");
  if (!j.contains("flag") && !j.contains("Q")) fail(key_path(where, "Q"), "missing");

  if (j.contains("flag")) {
    const std::string fw = key_path(where, "flag");
    const Json& fj = j["flag"];
    if (!fj.is_object()) fail(fw, "expected an object");
    check_keys(fj, {"generator", "h", "k", "D", "T", "M", "P"}, fw);
    R.params = params;
    FlagDatum fd = FlagDatum::zero(R);
    if (fj.contains("generator")) {
      if (!fj["generator"].is_string()) fail(fw + ".generator", "expected a string");
      fd.generator = fj["generator"].get<std::string>();
      if (!is_identifier(fd.generator) || Var::is_reserved_name(fd.generator))
        fail(fw + ".generator", "not a usable name");
    }
    const Scope scalar{as_set(params), {}};
    const Scope elem{as_set(params), R.basis()};
    fd.h = parse_functional(fj.value("h", Json()), R, scalar, fw + ".h");
    fd.k = parse_functional(fj.value("k", Json()), R, scalar, fw + ".k");
    fd.D = parse_operator(fj.value("D", Json()), R, elem, fw + ".D");
    fd.T = parse_operator(fj.value("T", Json()), R, elem, fw + ".T");
    if (fj.contains("M")) fd.M = parse_entries(fj["M"], elem, fw + ".M");
    if (fj.contains("P")) {
      if (!fj["P"].is_string()) fail(fw + ".P", "expected a polynomial string");
      fd.P = parse_scalar(fj["P"].get<std::string>(), scalar, fw + ".P");
    }
    try {
      fd.validate();
    } catch (const std::invalid_argument& e) {
      fail(fw, e.what());
    }
    fd.params = params;
    f.flag = fd;
    f.datum = flag_to_datum(fd);
    return f;
  }

  const std::string qw = key_path(where, "Q");
  Json qj = resolve_ref(j["Q"], base_dir, qw);
  FreeModule Q;
  std::optional<LambdaTable> q_table;
  if (qj.contains("table") || qj.contains("name") || qj.contains("params")) {
    AlgebraFile qf = parse_algebra(inherit(qj, j["Q"], j), qw);
    for (const auto& p : qf.algebra.params)
      if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
    for (const auto& [k, v] : qf.bindings) f.bindings.emplace(k, v);
    Q = qf.algebra.module;
    q_table = qf.algebra.table;
  } else {
    check_keys(qj, {"basis"}, qw);
    if (!qj.contains("basis")) fail(qw + ".basis", "missing");
    Q.basis = parse_names(qj["basis"], qw + ".basis");
  }
  for (const auto& x : Q.basis)
    if (std::find(R.basis().begin(), R.basis().end(), x) != R.basis().end())
      fail(qw + ".basis", "'" + x + "' is also a basis name of R");
  require_disjoint(Q.basis, params, qw + ".basis");

  R.params = params;
  ExtendingDatum d = ExtendingDatum::zero(R, Q);
  d.params = params;
  const std::size_t n = R.rank(), m = Q.rank();
  const Scope to_r{as_set(params), R.basis()}, to_q{as_set(params), Q.basis};
  d.phi = parse_table(j.value("phi", Json()), m, n, to_r, key_path(where, "phi"));
  d.psi = parse_table(j.value("psi", Json()), m, n, to_r, key_path(where, "psi"));
  d.l = parse_table(j.value("l", Json()), n, m, to_q, key_path(where, "l"));
  d.r = parse_table(j.value("r", Json()), n, m, to_q, key_path(where, "r"));
  d.g = parse_table(j.value("g", Json()), m, m, to_r, key_path(where, "g"));
  if (j.contains("circ"))
    d.circ = parse_table(j["circ"], m, m, to_q, key_path(where, "circ"));
  else if (q_table)
    d.circ = *q_table;
  f.datum = d;
  return f;
}

Element parse_element(const std::string& src, const std::vector<std::string>& basis,
                      const std::vector<std::string>& params) {
  return parse_entries(Json(src), Scope{as_set(params), basis}, "");
}

DatumFile load_datum(const std::filesystem::path& path) {
  Json j = read_json(path);
  try {
    return parse_datum(j, path.parent_path());
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> element_strings(const Element& e, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].is_zero()) continue;
    Element single(e.size());
    single[i] = e[i];
    out.push_back(format_element(single, names));
  }
  return out;
}

namespace {

Json params_json(const std::vector<std::string>& params, const std::map<std::string, Rational>& bindings) {
  Json out = Json::array();
  for (const auto& p : params) {
    auto it = bindings.find(p);
    if (it == bindings.end())
      out.push_back(p);
    else
      out.push_back(Json{{"name", p}, {"value", rational_to_string(it->second)}});
  }
  return out;
}

Json table_json(const LambdaTable& t, const std::vector<std::string>& target) {
  Json out = Json::object();
  for (std::size_t i = 0; i < t.left(); ++i)
    for (std::size_t j = 0; j < t.right(); ++j) {
      auto items = element_strings(t.entry(i, j), target);
      if (!items.empty()) out["(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"] = items;
    }
  return out;
}

}  // namespace

Json algebra_to_json(const Algebra& A, const std::map<std::string, Rational>& bindings) {
  Json out;
  if (!A.name.empty()) out["name"] = A.name;
  out["params"] = params_json(A.params, bindings);
  out["basis"] = A.basis();
  out["table"] = table_json(A.table, A.basis());
  return out;
}

Json product_to_json(const ProductAlgebra& P) {
  Json out = algebra_to_json(P.E);
  out["r_rank"] = P.r_rank;
  return out;
}

Json datum_to_json(const ExtendingDatum& d) {
  Json out;
  out["params"] = params_json(d.params, {});
  Algebra r = d.R;
  r.params = {};
  out["R"] = algebra_to_json(r);
  out["Q"] = Json{{"basis", d.Q.basis}};
  out["phi"] = table_json(d.phi, d.R.basis());
  out["psi"] = table_json(d.psi, d.R.basis());
  out["l"] = table_json(d.l, d.Q.basis);
  out["r"] = table_json(d.r, d.Q.basis);
  out["g"] = table_json(d.g, d.R.basis());
  out["circ"] = table_json(d.circ, d.Q.basis);
  return out;
}

Json flag_to_json(const FlagDatum& fd) {
  Json out;
  out["params"] = params_json(fd.params, {});
  Algebra r = fd.R;
  r.params = {};
  out["R"] = algebra_to_json(r);
  Json f;
  f["generator"] = fd.generator;
  auto functional = [&](const OperatorTable& op) {
    Json o = Json::object();
    for (std::size_t i = 0; i < fd.R.rank(); ++i)
      if (!op.images[i][0].is_zero()) o[fd.R.basis()[i]] = op.images[i][0].to_string();
    return o;
  };
  auto conformal = [&](const OperatorTable& op) {
    Json o = Json::object();
    for (std::size_t i = 0; i < fd.R.rank(); ++i)
      if (!is_zero(op.images[i])) o[fd.R.basis()[i]] = element_strings(op.images[i], fd.R.basis());
    return o;
  };
  f["h"] = functional(fd.h);
  f["k"] = functional(fd.k);
  f["D"] = conformal(fd.D);
  f["T"] = conformal(fd.T);
  f["M"] = element_strings(fd.M, fd.R.basis());
  f["P"] = fd.P.to_string();
  out["flag"] = f;
  return out;
}

Json report_to_json(const CheckReport& report) {
  Json out;
  out["passed"] = report.passed();
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json item;
    item["law"] = f.law;
    item["at"] = f.at;
    item["residual"] = format_element(f.residual, f.names);
    failures.push_back(item);
  }
  out["failures"] = failures;
  return out;
}

}  // namespace cwb
