#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cwb/cli.hpp"
#include "cwb/io.hpp"

namespace py = pybind11;
using namespace cwb;

namespace {

std::map<std::string, Rational> to_bindings(const std::map<std::string, std::string>& raw) {
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : raw) out.emplace(k, parse_rational(v));
  return out;
}

std::map<std::string, Rational> merged(std::map<std::string, Rational> base,
                                       const std::map<std::string, std::string>& extra) {
  for (auto& [k, v] : to_bindings(extra)) base[k] = v;
  return base;
}

Algebra load_algebra_bound(const std::string& path, const std::map<std::string, std::string>& bind) {
  auto f = load_algebra(path);
  return f.algebra.assign(merged(f.bindings, bind));
}

py::dict report_dict(const CheckReport& r) {
  return py::module_::import("json").attr("loads")(report_to_json(r).dump());
}

std::string json_text(const Json& j) { return j.dump(2); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks and constructions for left-symmetric conformal algebras";

  static py::exception<IoError> io_error(m, "IoError", PyExc_ValueError);
  static py::exception<PreconditionError> pre_error(m, "PreconditionError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionError& e) {
      py::set_error(pre_error, (std::string(e.what()) + "\n" + e.report.to_text()).c_str());
    } catch (const IoError& e) {
      py::set_error(io_error, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("run", [](const std::vector<std::string>& args) {
    auto o = cli::run(args);
    return py::make_tuple(o.code, o.out, o.err);
  }, py::arg("args"), "Run one CLI command; returns (exit_code, stdout, stderr).");

  m.def("parse_poly", [](const std::string& src, const std::vector<std::string>& params) {
    return Poly::parse(src, std::set<std::string>(params.begin(), params.end())).to_string();
  }, py::arg("src"), py::arg("params") = std::vector<std::string>{},
  "Canonical printed form of a polynomial.");

  py::class_<Algebra>(m, "Algebra")
      .def_static("load", &load_algebra_bound, py::arg("path"),
                  py::arg("bind") = std::map<std::string, std::string>{})
      .def_readonly("name", &Algebra::name)
      .def_property_readonly("basis", [](const Algebra& A) { return A.basis(); })
      .def_property_readonly("rank", &Algebra::rank)
      .def("to_json", [](const Algebra& A) { return json_text(algebra_to_json(A)); })
      .def("__repr__", [](const Algebra& A) {
        return "<Algebra " + A.name + " rank " + std::to_string(A.rank()) + ">";
      });

  m.def("check_lsca", [](const Algebra& A) { return report_dict(check_lsca(A)); });
  m.def("check_lie", [](const Algebra& A) { return report_dict(check_lie(A)); });
  m.def("subadjacent", [](const Algebra& A) { return subadjacent(A); });
  m.def("solve_derivations", [](const Algebra& A, unsigned deg) {
    auto s = solve_derivations(A, deg);
    std::vector<std::vector<std::string>> ops;
    for (const auto& op : s.basis) {
      std::vector<std::string> row;
      for (const auto& img : op.images) row.push_back(format_element(img, A.basis()));
      ops.push_back(std::move(row));
    }
    return py::make_tuple(s.dimension, ops);
  }, py::arg("algebra"), py::arg("deg") = 6u);

  py::class_<DatumFile>(m, "Datum")
      .def_static("load", [](const std::string& path, const std::map<std::string, std::string>& bind) {
        auto f = load_datum(path);
        auto b = merged(f.bindings, bind);
        f.datum = f.datum.assign(b);
        if (f.flag) f.flag = f.flag->assign(b);
        f.bindings = b;
        return f;
      }, py::arg("path"), py::arg("bind") = std::map<std::string, std::string>{})
      .def_property_readonly("is_flag", [](const DatumFile& f) { return f.flag.has_value(); })
      .def_property_readonly("R", [](const DatumFile& f) { return f.datum.R; })
      .def("to_json", [](const DatumFile& f) {
        return json_text(f.flag ? flag_to_json(*f.flag) : datum_to_json(f.datum));
      });

  m.def("check_datum", [](const DatumFile& f) { return report_dict(check_extending_structure(f.datum)); });
  m.def("check_crossed", [](const DatumFile& f) { return report_dict(check_crossed(f.datum)); });
  m.def("check_bicrossed", [](const DatumFile& f) { return report_dict(check_bicrossed(f.datum)); });
  m.def("build_unified", [](const DatumFile& f) {
    auto P = build_unified(f.datum);
    return py::make_tuple(P.E, P.r_rank);
  });

  auto need_flag = [](const DatumFile& f) -> const FlagDatum& {
    if (!f.flag) throw std::invalid_argument("datum file has no flag section");
    return *f.flag;
  };
  m.def("check_flag", [need_flag](const DatumFile& f) { return report_dict(check_flag(need_flag(f))); });
  m.def("dflc_membership", [need_flag](const DatumFile& f) {
    return to_string(check_dflc_membership(need_flag(f)).tag);
  });
  m.def("search_equiv", [need_flag](const DatumFile& a, const DatumFile& b, unsigned deg,
                                    const std::vector<std::string>& betas) {
    std::vector<Rational> bs;
    for (const auto& s : betas) bs.push_back(parse_rational(s));
    auto res = search_equiv(need_flag(a), need_flag(b), deg, betas.empty() ? default_betas() : bs);
    py::dict out;
    out["status"] = to_string(res.status);
    out["detail"] = res.detail;
    if (res.witness) {
      out["beta"] = rational_to_string(res.witness->beta);
      out["omega"] = format_element(res.witness->omega, need_flag(a).R.basis());
    }
    return out;
  }, py::arg("a"), py::arg("b"), py::arg("deg") = 3u, py::arg("betas") = std::vector<std::string>{});
}
