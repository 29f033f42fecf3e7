#include "toric/json_io.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace toric {

namespace {

const Int kInt64Max = std::numeric_limits<long long>::max();
const Int kInt64Min = std::numeric_limits<long long>::min();

std::string degree_key(const IntVector& u) { return vector_to_string(u); }

Json optional_codim(const std::optional<Index>& codim) {
  if (!codim) return Json("infinity");
  return Json(static_cast<long long>(*codim));
}

Json index_list_1based(const std::vector<Index>& xs) {
  Json out = Json::array();
  for (Index x : xs) out.push_back(static_cast<long long>(x + 1));
  return out;
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(int_to_json(v[i]));
  return out;
}

Json matrix_columns_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Index j = 0; j < m.cols(); ++j) out.push_back(vector_to_json(m.col(j)));
  return out;
}

const Json& expect_member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::MalformedInput, "missing field", std::string(key));
  return j.at(key);
}

Index expect_rank(const Json& j) {
  const Json& r = expect_member(j, "rank");
  if (!r.is_number_integer() || r.get<long long>() < 1)
    fail(ErrorCode::MalformedInput, "rank must be a positive integer");
  return static_cast<Index>(r.get<long long>());
}

IntMatrix expect_rays(const Json& j, Index rank) {
  const Json& rays = expect_member(j, "rays");
  if (!rays.is_array() || rays.empty())
    fail(ErrorCode::MalformedInput, "rays must be a non-empty array");
  IntMatrix m(rank, static_cast<Index>(rays.size()));
  Index col = 0;
  for (const Json& ray : rays) {
    if (!ray.is_array() || static_cast<Index>(ray.size()) != rank)
      fail(ErrorCode::MalformedInput, "ray has the wrong length",
           "ray " + std::to_string(static_cast<long long>(col + 1)));
    Index row = 0;
    for (const Json& entry : ray) m(row++, col) = int_from_json(entry);
    bool zero = true;
    for (Index r = 0; r < rank; ++r)
      if (m(r, col) != 0) zero = false;
    if (zero)
      fail(ErrorCode::MalformedInput, "zero ray",
           "ray " + std::to_string(static_cast<long long>(col + 1)));
    ++col;
  }
  return m;
}

}  // namespace

Json int_to_json(const Int& value) {
  if (value <= kInt64Max && value >= kInt64Min)
    return Json(value.convert_to<long long>());
  return Json(to_string(value));
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() ||
        s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) !=
            std::string::npos ||
        (s[0] == '-' && s.size() == 1))
      fail(ErrorCode::MalformedInput, "not a decimal integer", s);
    return Int(s);
  }
  fail(ErrorCode::MalformedInput, "expected an integer", j.dump());
}

Cone cone_from_json(const Json& j, std::ostream* warnings) {
  const Index rank = expect_rank(j);
  IntMatrix rays = expect_rays(j, rank);
  for (Index col = 0; col < rays.cols(); ++col) {
    Int g = 0;
    for (Index r = 0; r < rank; ++r)
      g = boost::multiprecision::gcd(g, rays(r, col));
    if (g > 1) {
      for (Index r = 0; r < rank; ++r) rays(r, col) /= g;
      if (warnings)
        *warnings << "note: ray " << col + 1 << " scaled by 1/" << g
                  << " to its primitive generator\n";
    }
  }
  return Cone::from_rays(rays);
}

Fan fan_from_json(const Json& j) {
  Fan fan;
  fan.ambient_rank = expect_rank(j);
  fan.rays = expect_rays(j, fan.ambient_rank);
  const Json& cones = expect_member(j, "max_cones");
  if (!cones.is_array() || cones.empty())
    fail(ErrorCode::MalformedInput, "max_cones must be a non-empty array");
  for (const Json& cone : cones) {
    if (!cone.is_array() || cone.empty())
      fail(ErrorCode::MalformedInput, "each maximal cone must be a non-empty array");
    std::vector<Index> members;
    for (const Json& entry : cone) {
      const Int raw = int_from_json(entry);
      if (raw < 1 || raw > fan.rays.cols())
        fail(ErrorCode::MalformedInput, "ray index out of range",
             to_string(raw));
      members.push_back(raw.convert_to<Index>() - 1);
    }
    std::sort(members.begin(), members.end());
    for (std::size_t i = 1; i < members.size(); ++i)
      if (members[i] == members[i - 1])
        fail(ErrorCode::MalformedInput, "repeated ray index in a cone",
             std::to_string(static_cast<long long>(members[i] + 1)));
    fan.max_cones.push_back(std::move(members));
  }
  return fan;
}

Json fan_to_json(const Fan& fan) {
  Json out = Json::object();
  Json cones = Json::array();
  for (const auto& members : fan.max_cones)
    cones.push_back(index_list_1based(members));
  out["max_cones"] = std::move(cones);
  out["rank"] = static_cast<long long>(fan.ambient_rank);
  out["rays"] = matrix_columns_to_json(fan.rays);
  return out;
}

Json profile_to_json(const Cone& cone) {
  const ConeProfile profile = classify(cone);
  Json out = Json::object();
  if (profile.simplicial) out["multiplicity"] = int_to_json(profile.multiplicity);
  out["rank"] = static_cast<long long>(cone.ambient_rank());
  out["simplicial"] = profile.simplicial;
  out["singular_codim"] = optional_codim(profile.codim_sing);
  out["smooth"] = profile.smooth;
  return out;
}

Json refinement_to_json(const RefinementProfile& profile) {
  Json out = Json::object();
  out["codim_center"] = optional_codim(profile.codim_center);
  out["exceptional_rays"] = index_list_1based(profile.exceptional_rays);
  Json missing = Json::array();
  for (const auto& face : profile.missing_faces)
    missing.push_back(index_list_1based(face));
  out["missing_faces"] = std::move(missing);
  out["smooth"] = profile.smooth;
  out["strong"] = profile.strong;
  return out;
}

Json table_to_json(const GradedCohomologyTable& table) {
  Json out = Json::object();
  out["bound"] = int_to_json(table.bound);
  Json entries = Json::object();
  for (const GradedEntry& e : table.entries) {
    Json dims = Json::object();
    for (const auto& [i, dim] : e.dims)
      dims[std::to_string(i)] = static_cast<long long>(dim);
    entries[degree_key(e.degree)] = std::move(dims);
  }
  out["entries"] = std::move(entries);
  out["kind"] = table.kind;
  out["p"] = table.p;
  Json totals = Json::object();
  for (const auto& [i, dim] : table.totals)
    totals[std::to_string(i)] = static_cast<long long>(dim);
  out["totals"] = std::move(totals);
  return out;
}

Json complex_to_json(const FiniteComplex& complex, ComplexKind kind, int p,
                     const IntVector& degree,
                     const std::vector<Index>& support) {
  Json out = Json::object();
  Json cohomology = Json::object();
  for (const auto& [d, dim] : complex.cohomology_dims())
    cohomology[std::to_string(d)] = static_cast<long long>(dim);
  out["cohomology"] = std::move(cohomology);
  out["degree"] = vector_to_json(degree);
  out["kind"] = complex_kind_name(kind);
  out["p"] = p;
  out["support"] = index_list_1based(support);
  Json terms = Json::array();
  for (int d = complex.lowest_degree();
       d < complex.lowest_degree() + complex.term_count(); ++d)
    terms.push_back(static_cast<long long>(complex.term(d).dimension));
  out["terms"] = std::move(terms);
  return out;
}

Json report_to_json(const VerificationReport& report) {
  Json out = Json::object();
  Json base = Json::object();
  base["simplicial"] = report.base_simplicial;
  base["singular_codim"] = optional_codim(report.singular_codim);
  base["smooth"] = report.base_smooth;
  out["base"] = std::move(base);
  out["bound"] = int_to_json(report.bound);
  Json crosschecks = Json::array();
  for (const CrosscheckRecord& r : report.crosschecks) {
    Json rec = Json::object();
    rec["comparisons"] = r.comparisons;
    rec["degrees"] = r.degrees;
    rec["message"] = r.message;
    rec["ok"] = r.ok;
    rec["p"] = r.p;
    rec["ran"] = r.ran;
    crosschecks.push_back(std::move(rec));
  }
  out["crosschecks"] = std::move(crosschecks);
  Json entries = Json::array();
  for (const VerdictEntry& e : report.entries) {
    Json rec = Json::object();
    rec["claim"] = claim_name(e.claim);
    rec["clause"] = e.clause;
    rec["i"] = e.i;
    rec["note"] = e.note;
    rec["p"] = e.p;
    rec["status"] = e.status;
    if (e.witness_degree) rec["witness_degree"] = vector_to_json(*e.witness_degree);
    if (e.witness_dim) rec["witness_dim"] = static_cast<long long>(*e.witness_dim);
    entries.push_back(std::move(rec));
  }
  out["entries"] = std::move(entries);
  Json mop = Json::object();
  mop["degree"] = report.mop.degree;
  mop["message"] = report.mop.message;
  mop["ok"] = report.mop.ok;
  mop["ran"] = report.mop.ran;
  mop["total"] = static_cast<long long>(report.mop.total);
  out["mop"] = std::move(mop);
  out["ok"] = report.ok;
  out["p_max"] = report.p_max;
  Json refinement = Json::object();
  refinement["smooth"] = report.fan_smooth;
  refinement["strong"] = report.fan_strong;
  refinement["trivial"] = report.trivial_refinement;
  out["refinement"] = std::move(refinement);
  return out;
}

Json error_to_json(const Error& error) {
  Json out = Json::object();
  out["code"] = error_code_name(error.code());
  out["details"] = error.details();
  out["error"] = std::string(error.what());
  return out;
}

std::string format_table_text(const GradedCohomologyTable& table) {
  std::string out = "kind " + table.kind + "  p " + std::to_string(table.p) +
                    "  bound " + to_string(table.bound) + "\n";
  if (table.entries.empty()) {
    out += "all zero on the box\n";
    return out;
  }
  out += "degree  i  dim\n";
  for (const GradedEntry& e : table.entries)
    for (const auto& [i, dim] : e.dims)
      out += degree_key(e.degree) + "  " + std::to_string(i) + "  " +
             std::to_string(static_cast<long long>(dim)) + "\n";
  out += "totals";
  for (const auto& [i, dim] : table.totals)
    out += "  " + std::to_string(i) + ":" +
           std::to_string(static_cast<long long>(dim));
  out += "\n";
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace toric
