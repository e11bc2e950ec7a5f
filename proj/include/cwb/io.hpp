#pragma once

#include <filesystem>
#include <optional>

#include "json.hpp"

#include "cwb/flag.hpp"

namespace cwb {

using Json = nlohmann::ordered_json;

// Schema and syntax problems; the message starts with the JSON path of the
// offending key.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlgebraFile {
  Algebra algebra;
  std::map<std::string, Rational> bindings;  // values given in the params list
};

struct DatumFile {
  ExtendingDatum datum;
  std::optional<FlagDatum> flag;  // set when the file carried a flag section
  std::map<std::string, Rational> bindings;
};

AlgebraFile parse_algebra(const Json& j, const std::string& where = "");
AlgebraFile load_algebra(const std::filesystem::path& path);

// Relative R/Q references are resolved against base_dir.
DatumFile parse_datum(const Json& j, const std::filesystem::path& base_dir, const std::string& where = "");
DatumFile load_datum(const std::filesystem::path& path);

// One linear combination of basis names, e.g. "(d+lam)*x - 2*y".
Element parse_element(const std::string& src, const std::vector<std::string>& basis,
                      const std::vector<std::string>& params);

// True when the file has the keys of a datum file (R plus Q or flag).
bool looks_like_datum(const Json& j);
Json read_json(const std::filesystem::path& path);

Json algebra_to_json(const Algebra& A, const std::map<std::string, Rational>& bindings = {});
Json product_to_json(const ProductAlgebra& P);
Json datum_to_json(const ExtendingDatum& d);
Json flag_to_json(const FlagDatum& fd);
Json report_to_json(const CheckReport& report);

// Entry lists as stored in files: one string per nonzero component.
std::vector<std::string> element_strings(const Element& e, const std::vector<std::string>& names);

}  // namespace cwb
