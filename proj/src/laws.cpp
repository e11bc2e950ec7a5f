#include "cwb/laws.hpp"

#include <algorithm>
#include <sstream>

#include "cwb/parallel.hpp"

namespace cwb {

std::string Failure::to_string() const {
  std::string tuple;
  for (std::size_t i = 0; i < at.size(); ++i) tuple += (i ? "," : "") + at[i];
  return format_element(residual, names) + " at (" + tuple + "), law=" + law;
}

std::set<std::string> CheckReport::failed_laws() const {
  std::set<std::string> out;
  for (const auto& f : failures) out.insert(f.law);
  return out;
}

bool CheckReport::failed(std::string_view law) const {
  return std::any_of(failures.begin(), failures.end(), [&](const Failure& f) { return f.law == law; });
}

void CheckReport::merge(const CheckReport& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string CheckReport::to_text() const {
  if (passed()) return "passed\n";
  std::ostringstream os;
  os << "failed (" << failures.size() << (failures.size() == 1 ? " residual)\n" : " residuals)\n");
  for (const auto& f : failures) os << "  " << f.to_string() << "\n";
  return os.str();
}

namespace {

std::vector<std::vector<std::size_t>> tuples_of(const Law& law) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(law.slots.size(), 0);
  for (const auto& s : law.slots)
    if (s.empty()) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t k = cur.size();
    while (k > 0) {
      --k;
      if (++cur[k] < law.slots[k].size()) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

}  // namespace

CheckReport run_laws(const LawSet& laws) {
  struct Job {
    const Law* law;
    std::vector<std::size_t> idx;
  };
  std::vector<Job> jobs;
  for (const auto& law : laws)
    for (auto& t : tuples_of(law)) jobs.push_back({&law, std::move(t)});
  std::vector<Element> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { results[i] = jobs[i].law->residual(jobs[i].idx); });
  CheckReport report;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (is_zero(results[i])) continue;
    Failure f{jobs[i].law->name, {}, std::move(results[i]), jobs[i].law->target};
    for (std::size_t k = 0; k < jobs[i].idx.size(); ++k) f.at.push_back(jobs[i].law->slots[k][jobs[i].idx[k]]);
    report.failures.push_back(std::move(f));
  }
  return report;
}

Element residual(const LawSet& laws, std::string_view name, IndexTuple indices) {
  if (!is_registered_law(name)) throw std::invalid_argument("unknown law '" + std::string(name) + "'");
  for (const auto& law : laws) {
    if (law.name != name) continue;
    if (indices.size() != law.slots.size())
      throw std::invalid_argument("law '" + law.name + "' takes " + std::to_string(law.slots.size()) + " indices");
    for (std::size_t k = 0; k < indices.size(); ++k)
      if (indices[k] >= law.slots[k].size()) throw std::out_of_range("basis index out of range");
    return law.residual(indices);
  }
  throw std::invalid_argument("law '" + std::string(name) + "' does not apply to these inputs");
}

const std::vector<std::string>& registered_laws() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"left-symmetry", "skew-symmetry", "jacobi", "bm1", "bm2",
                               "derivation", "twisted-derivation", "semi-quasicentroid"};
    for (int i = 1; i <= 10; ++i) v.push_back("LC" + std::to_string(i));
    for (int i = 1; i <= 5; ++i) v.push_back("C" + std::to_string(i));
    for (int i = 1; i <= 10; ++i) v.push_back("lfd" + std::to_string(i));
    for (const char* p : {"equiv", "dflc1", "dflc2"})
      for (const char* s : {"D", "T", "M", "P"}) v.push_back(std::string(p) + "-" + s);
    for (const char* s : {"h", "k", "psi", "l", "phi", "r", "g", "circ"}) v.push_back(std::string("equiv-") + s);
    for (const char* s : {"left-symmetry(Q)", "bm1(phi,psi)", "bm2(phi,psi)", "bm1(l,r)", "bm2(l,r)"})
      v.emplace_back(s);
    return v;
  }();
  return names;
}

bool is_registered_law(std::string_view name) {
  const auto& v = registered_laws();
  return std::find(v.begin(), v.end(), name) != v.end();
}

}  // namespace cwb
