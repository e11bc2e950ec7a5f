#include "cwb/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"

#include "cwb/io.hpp"

namespace cwb::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> files;
  std::vector<std::string> binds;
  bool json = false;
  unsigned deg = 0;
  std::string op;
  std::string omega;
  std::string beta = "1";
  bool search = false;
  std::string betas = "1,-1,2,1/2";
  std::string form = "general";
  long r_rank = -1;
};

std::map<std::string, Rational> cli_bindings(const std::vector<std::string>& binds) {
  std::map<std::string, Rational> out;
  for (const auto& b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--bind expects name=rational, got '" + b + "'");
    try {
      out[b.substr(0, eq)] = parse_rational(b.substr(eq + 1));
    } catch (const std::exception& e) {
      throw UsageError("--bind " + b + ": " + e.what());
    }
  }
  return out;
}

std::map<std::string, Rational> merge_bindings(std::map<std::string, Rational> file,
                                               const std::vector<std::string>& params, const Options& o) {
  for (const auto& [name, value] : cli_bindings(o.binds)) {
    if (std::find(params.begin(), params.end(), name) == params.end())
      throw UsageError("--bind: '" + name + "' is not a declared parameter");
    file[name] = value;
  }
  return file;
}

Algebra algebra_arg(const std::string& path, const Options& o) {
  AlgebraFile f = load_algebra(path);
  return f.algebra.assign(merge_bindings(f.bindings, f.algebra.params, o));
}

DatumFile datum_arg(const std::string& path, const Options& o) {
  DatumFile f = load_datum(path);
  auto b = merge_bindings(f.bindings, f.datum.params, o);
  f.datum = f.datum.assign(b);
  if (f.flag) f.flag = f.flag->assign(b);
  return f;
}

FlagDatum flag_arg(const std::string& path, const Options& o) {
  DatumFile f = datum_arg(path, o);
  if (f.flag) return *f.flag;
  if (f.datum.Q.rank() != 1) throw UsageError(path + ": flag commands need a rank-one Q or a flag section");
  return datum_to_flag(f.datum);
}

Outcome check_outcome(const std::string& command, const CheckReport& report, const Options& o) {
  Outcome out;
  out.code = report.passed() ? 0 : 1;
  if (o.json) {
    Json j = report_to_json(report);
    j["command"] = command;
    out.out = j.dump(2) + "\n";
  } else {
    out.out = report.to_text();
  }
  return out;
}

Outcome json_outcome(const Json& j) { return Outcome{0, j.dump(2) + "\n", {}}; }

OperatorTable operator_arg(const Algebra& R, const Options& o) {
  if (o.op.empty()) throw UsageError("--op is required");
  std::vector<std::string> parts;
  std::stringstream ss(o.op);
  for (std::string item; std::getline(ss, item, ';');) parts.push_back(item);
  if (parts.size() != R.rank())
    throw UsageError("--op needs " + std::to_string(R.rank()) + " images separated by ';'");
  OperatorTable T = OperatorTable::zero(Variance::conformal, R.rank(), R.rank());
  for (std::size_t i = 0; i < parts.size(); ++i) T.images[i] = parse_element(parts[i], R.basis(), R.params);
  return T;
}

std::string describe_operator(const OperatorTable& op, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < op.images.size(); ++i)
    out += (i ? "; " : "") + names[i] + " -> " + format_element(op.images[i], names);
  return out;
}

std::vector<Rational> betas_arg(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception& e) {
      throw UsageError("--betas: " + std::string(e.what()));
    }
  }
  return out;
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + rational_to_string(v[i]);
  return out;
}

Outcome cmd_equiv(const Options& o) {
  if (o.files.size() != 2) throw UsageError("equiv takes two datum files");
  FlagDatum a = flag_arg(o.files[0], o), b = flag_arg(o.files[1], o);
  if (o.search) {
    SearchResult r = search_equiv(a, b, o.deg, betas_arg(o.betas));
    Outcome out;
    out.code = r.status == SearchStatus::found ? 0 : 1;
    if (o.json) {
      Json j{{"command", "equiv"}, {"status", to_string(r.status)}};
      if (r.witness) {
        j["beta"] = rational_to_string(r.witness->beta);
        j["omega"] = format_element(r.witness->omega, a.R.basis());
      }
      if (!r.detail.empty()) j["detail"] = r.detail;
      out.out = j.dump(2) + "\n";
      return out;
    }
    std::ostringstream os;
    os << to_string(r.status);
    if (r.witness)
      os << ": beta = " << rational_to_string(r.witness->beta)
         << ", omega = " << format_element(r.witness->omega, a.R.basis());
    else if (r.status == SearchStatus::none_within_bound)
      os << " (degree " << o.deg << ", betas " << join_rationals(betas_arg(o.betas)) << ")";
    else if (!r.detail.empty())
      os << ": " << r.detail;
    os << "\n";
    out.out = os.str();
    return out;
  }
  EquivWitness w{Element(a.R.rank()), 1};
  if (!o.omega.empty()) w.omega = parse_element(o.omega, a.R.basis(), a.params);
  for (const auto& p : w.omega)
    if (p.mentions(Var::lam()) || p.mentions(Var::mu()) || p.mentions(Var::nu()))
      throw UsageError("--omega may only involve d");
  try {
    w.beta = parse_rational(o.beta);
  } catch (const std::exception& e) {
    throw UsageError("--beta: " + std::string(e.what()));
  }
  if (w.beta == 0) throw UsageError("--beta must be nonzero");
  EquivForm form = EquivForm::general;
  if (o.form == "dflc1")
    form = EquivForm::dflc1;
  else if (o.form == "dflc2")
    form = EquivForm::dflc2;
  else if (o.form != "general")
    throw UsageError("--form must be general, dflc1 or dflc2");
  return check_outcome("equiv", check_equiv(a, b, w, form), o);
}

Outcome cmd_report(const Options& o) {
  const std::string& path = o.files.at(0);
  std::ostringstream os;
  int code = 0;
  auto line = [&](const std::string& label, const CheckReport& r) {
    os << label << ": " << r.to_text();
  };
  Json j = read_json(path);
  if (!looks_like_datum(j)) {
    Algebra R = algebra_arg(path, o);
    os << "algebra " << (R.name.empty() ? "(unnamed)" : R.name) << ", rank " << R.rank() << "\n";
    CheckReport ls = check_lsca(R);
    line("left-symmetry", ls);
    if (!ls.passed()) return Outcome{1, os.str(), {}};
    line("sub-adjacent Lie", check_lie(subadjacent(R)));
    if (!R.table.has_parameters())
      os << "derivations of degree <= 2: dimension " << solve_derivations(R, 2).dimension << "\n";
    else
      os << "derivations: skipped (symbolic parameters)\n";
    return Outcome{0, os.str(), {}};
  }
  DatumFile f = datum_arg(path, o);
  const ExtendingDatum& d = f.datum;
  os << "datum over R of rank " << d.R.rank() << ", Q of rank " << d.Q.rank() << "\n";
  CheckReport ext = check_extending_structure(d);
  line("extending structure", ext);
  if (!ext.passed()) code = 1;
  if (d.l.is_zero() && d.r.is_zero()) line("crossed", check_crossed(d));
  if (d.g.is_zero()) line("bicrossed", check_bicrossed(d));
  if (d.Q.rank() == 1) {
    FlagDatum fd = f.flag ? *f.flag : datum_to_flag(d);
    line("flag identities", check_flag(fd));
    DflcMembership m = check_dflc_membership(fd);
    os << "special class: " << to_string(m.tag);
    if (m.tag != DflcTag::neither) os << (m.consistent ? " (consistent)" : " (inconsistent)");
    os << "\n";
  }
  if (ext.passed()) line("sub-adjacent Lie of the product", check_lie(subadjacent(build_unified(d).E)));
  return Outcome{code, os.str(), {}};
}

Outcome dispatch(const std::string& cmd, const Options& o) {
  const std::string& path = o.files.empty() ? std::string() : o.files[0];
  if (cmd == "check") return check_outcome(cmd, check_lsca(algebra_arg(path, o)), o);
  if (cmd == "check-lie") return check_outcome(cmd, check_lie(algebra_arg(path, o)), o);
  if (cmd == "subadjacent") return json_outcome(algebra_to_json(subadjacent(algebra_arg(path, o))));
  if (cmd == "check-datum") return check_outcome(cmd, check_extending_structure(datum_arg(path, o).datum), o);
  if (cmd == "build-unified") return json_outcome(product_to_json(build_unified(datum_arg(path, o).datum)));
  if (cmd == "extract-datum") {
    Json j = read_json(path);
    long r_rank = o.r_rank;
    if (r_rank < 0 && j.contains("r_rank") && j["r_rank"].is_number_integer()) r_rank = j["r_rank"].get<long>();
    if (r_rank < 0) throw UsageError("extract-datum needs --r-rank or an r_rank key in the file");
    Algebra E = algebra_arg(path, o);
    if (static_cast<std::size_t>(r_rank) > E.rank()) throw UsageError("--r-rank exceeds the rank of the algebra");
    ExtendingDatum d;
    try {
      d = extract_datum(ProductAlgebra{E, static_cast<std::size_t>(r_rank)});
    } catch (const std::invalid_argument& e) {
      return Outcome{1, {}, std::string(e.what()) + "\n"};
    }
    return json_outcome(datum_to_json(d));
  }
  if (cmd == "check-crossed") return check_outcome(cmd, check_crossed(datum_arg(path, o).datum), o);
  if (cmd == "check-bicrossed") return check_outcome(cmd, check_bicrossed(datum_arg(path, o).datum), o);
  if (cmd == "check-flag") return check_outcome(cmd, check_flag(flag_arg(path, o)), o);
  if (cmd == "build-flag") return json_outcome(product_to_json(build_flag_extension(flag_arg(path, o))));
  if (cmd == "equiv") return cmd_equiv(o);
  if (cmd == "solve-derivations") {
    Algebra R = algebra_arg(path, o);
    SolutionSpace s = solve_derivations(R, o.deg);
    if (o.json) {
      Json j{{"command", cmd}, {"degree", o.deg}, {"dimension", s.dimension}};
      Json basis = Json::array();
      for (const auto& D : s.basis) basis.push_back(describe_operator(D, R.basis()));
      j["basis"] = basis;
      return json_outcome(j);
    }
    std::ostringstream os;
    os << "dimension " << s.dimension << "\n";
    for (std::size_t i = 0; i < s.basis.size(); ++i)
      os << "  D" << i + 1 << ": " << describe_operator(s.basis[i], R.basis()) << "\n";
    return Outcome{0, os.str(), {}};
  }
  if (cmd == "inner-witness") {
    Algebra R = algebra_arg(path, o);
    auto b = solve_inner_witness(R, operator_arg(R, o), o.deg);
    if (!b) return Outcome{1, "no witness within degree " + std::to_string(o.deg) + "\n", {}};
    return Outcome{0, "b = " + format_element(*b, R.basis()) + "\n", {}};
  }
  if (cmd == "check-centroid") {
    Algebra R = algebra_arg(path, o);
    return check_outcome(cmd, check_semiquasicentroid(R, operator_arg(R, o)), o);
  }
  if (cmd == "report") return cmd_report(o);
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact workbench for left-symmetric conformal algebras and their extensions", "cwb"};
  app.require_subcommand(1);
  Options o;
  struct Spec {
    const char* name;
    const char* help;
    int files;
  };
  const std::vector<Spec> specs{
      {"check", "verify the left-symmetry identity of an algebra file", 1},
      {"check-lie", "verify skew-symmetry and Jacobi for a bracket table", 1},
      {"subadjacent", "print the sub-adjacent Lie conformal algebra", 1},
      {"check-datum", "verify LC1-LC10 for a datum file", 1},
      {"build-unified", "print the unified product of a datum", 1},
      {"extract-datum", "recover the datum of an algebra with a marked subalgebra", 1},
      {"check-crossed", "verify C1-C5 for a datum with l = r = 0", 1},
      {"check-bicrossed", "verify the bicrossed conditions for a datum with g = 0", 1},
      {"check-flag", "verify lfd1-lfd10 for a rank-one datum", 1},
      {"build-flag", "print the extension built from a flag datum", 1},
      {"equiv", "check or search an equivalence witness between two flag datums", 2},
      {"solve-derivations", "dimension of conformal derivations up to a degree", 1},
      {"inner-witness", "find b with T = T^b", 1},
      {"check-centroid", "verify the semi-quasicentroid identity for an operator", 1},
      {"report", "summary of every applicable check", 1},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("files", o.files, s.files == 2 ? "two datum files" : "input file")
        ->required()
        ->expected(s.files);
    sub->add_option("--bind", o.binds, "bind a parameter, name=rational (repeatable)");
    sub->add_flag("--json", o.json, "machine-readable output");
    const std::string name = s.name;
    if (name == "solve-derivations" || name == "inner-witness")
      sub->add_option("--deg", o.deg, name == "solve-derivations" ? "degree bound (default 6)" : "degree bound (default 2)");
    if (name == "inner-witness" || name == "check-centroid")
      sub->add_option("--op", o.op, "operator images on the basis, separated by ';'");
    if (name == "extract-datum") sub->add_option("--r-rank", o.r_rank, "number of leading basis vectors spanning R");
    if (name == "equiv") {
      sub->add_option("--omega", o.omega, "witness element of R (coefficients in d)");
      sub->add_option("--beta", o.beta, "nonzero rational scale");
      sub->add_option("--form", o.form, "general, dflc1 or dflc2");
      sub->add_flag("--search", o.search, "search for a witness");
      sub->add_option("--betas", o.betas, "comma-separated candidate scales for --search");
      sub->add_option("--deg", o.deg, "degree bound on omega for --search (default 3)");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return Outcome{0, app.help(), {}};
  } catch (const CLI::ParseError& e) {
    std::string help;
    for (const auto* sub : app.get_subcommands())
      if (sub->parsed()) help = sub->help();
    return Outcome{2, {}, std::string(e.what()) + "\n" + (help.empty() ? app.help() : help)};
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  const CLI::Option* deg = app.get_subcommand(cmd)->get_option_no_throw("--deg");
  if (deg == nullptr || deg->count() == 0) {
    if (cmd == "solve-derivations") o.deg = 6;
    if (cmd == "inner-witness") o.deg = 2;
    if (cmd == "equiv") o.deg = 3;
  }

  try {
    return dispatch(cmd, o);
  } catch (const PreconditionError& e) {
    Outcome out{1, {}, {}};
    if (o.json) {
      Json j = report_to_json(e.report);
      j["command"] = cmd;
      j["error"] = e.what();
      out.out = j.dump(2) + "\n";
    } else {
      out.out = std::string(e.what()) + "\n" + e.report.to_text();
    }
    return out;
  } catch (const IoError& e) {
    return Outcome{2, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    return Outcome{2, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return Outcome{2, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return Outcome{2, {}, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace cwb::cli
