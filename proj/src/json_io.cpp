#include "lps/json_io.hpp"

#include <cstdint>
#include <limits>

#include "lps/errors.hpp"

namespace lps {

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("json: missing field '") + name + "'");
  }
  return j.at(name);
}

int require_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string("json: ") + what + " must be an integer");
  }
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ParseError(std::string("json: ") + what + " out of range");
  }
  return static_cast<int>(v);
}

std::vector<std::string> variables_from_json(const nlohmann::json& j) {
  const nlohmann::json& vars = require_field(j, "variables");
  if (!vars.is_array()) throw ParseError("json: 'variables' must be an array of names");
  std::vector<std::string> names;
  names.reserve(vars.size());
  for (const auto& v : vars) {
    if (!v.is_string()) throw ParseError("json: variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  return names;
}

nlohmann::json coeff_to_json(const Coeff& c) {
  static const Coeff kMin = Coeff(std::numeric_limits<std::int64_t>::min());
  static const Coeff kMax = Coeff(std::numeric_limits<std::int64_t>::max());
  if (c >= kMin && c <= kMax) {
    return c.convert_to<std::int64_t>();
  }
  return c.str();
}

Coeff coeff_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Coeff(j.get<std::uint64_t>());
    return Coeff(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Coeff(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("json: coefficient string '" + j.get<std::string>() +
                       "' is not an integer");
    }
  }
  throw ParseError("json: coefficient must be an integer or a decimal string");
}

}  // namespace

std::vector<std::string> default_variable_names(int num_vars) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(num_vars));
  if (num_vars == 1) {
    names.emplace_back("t");
  } else {
    for (int j = 1; j <= num_vars; ++j) names.push_back("t" + std::to_string(j));
  }
  return names;
}

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

nlohmann::json terms_to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json term;
    term["c"] = coeff_to_json(c);
    term["e"] = e;
    terms.push_back(std::move(term));
  }
  return terms;
}

LaurentPoly terms_from_json(const nlohmann::json& j, int num_vars) {
  if (!j.is_array()) throw ParseError("json: polynomial must be an array of terms");
  TermMap terms;
  for (const auto& term : j) {
    const Coeff c = coeff_from_json(require_field(term, "c"));
    const nlohmann::json& ej = require_field(term, "e");
    if (!ej.is_array() || static_cast<int>(ej.size()) != num_vars) {
      throw ParseError("json: exponent vector must have " + std::to_string(num_vars) +
                       " entries");
    }
    Exponents e;
    e.reserve(ej.size());
    for (const auto& x : ej) e.push_back(static_cast<std::int32_t>(require_int(x, "exponent")));
    auto [it, inserted] = terms.emplace(std::move(e), c);
    if (!inserted) throw ParseError("json: duplicate exponent vector in polynomial");
  }
  return LaurentPoly(num_vars, std::move(terms));
}

nlohmann::json matrix_to_json(const NamedMatrix& m) {
  nlohmann::json j;
  j["variables"] = m.variables;
  j["dim"] = m.matrix.dim();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.matrix.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.matrix.dim(); ++k) row.push_back(terms_to_json(m.matrix.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

NamedMatrix matrix_from_json(const nlohmann::json& j) {
  NamedMatrix out;
  out.variables = variables_from_json(j);
  const int num_vars = static_cast<int>(out.variables.size());
  const int dim = require_int(require_field(j, "dim"), "dim");
  if (dim < 1) throw ParseError("json: matrix dim must be >= 1");
  const nlohmann::json& rows = require_field(j, "entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw ParseError("json: 'entries' must be an array of " + std::to_string(dim) + " rows");
  }
  std::vector<LaurentPoly> entries;
  entries.reserve(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError("json: every matrix row must have " + std::to_string(dim) + " entries");
    }
    for (const auto& entry : row) entries.push_back(terms_from_json(entry, num_vars));
  }
  out.matrix = LaurentMatrix(dim, num_vars, std::move(entries));
  return out;
}

nlohmann::json upoly_to_json(const NamedUPoly& p) {
  nlohmann::json j;
  j["variables"] = p.variables;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.poly.coeffs()) coeffs.push_back(terms_to_json(c));
  j["u_coeffs"] = std::move(coeffs);
  return j;
}

NamedUPoly upoly_from_json(const nlohmann::json& j) {
  NamedUPoly out;
  out.variables = variables_from_json(j);
  const int num_vars = static_cast<int>(out.variables.size());
  const nlohmann::json& coeffs = require_field(j, "u_coeffs");
  if (!coeffs.is_array()) throw ParseError("json: 'u_coeffs' must be an array");
  std::vector<LaurentPoly> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.push_back(terms_from_json(c, num_vars));
  out.poly = UPoly(num_vars, std::move(cs));
  return out;
}

nlohmann::json character_to_json(const Character& chi) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& tc : chi.turns()) j.push_back(tc.str());
  return j;
}

Character character_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("json: character must be a nonempty array of coordinate strings");
  }
  std::vector<TurnCoord> turns;
  turns.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError("json: character coordinates must be strings");
    turns.push_back(TurnCoord::parse(v.get<std::string>()));
  }
  return Character(std::move(turns));
}

nlohmann::json pf_report_to_json(const PFReport& r) {
  nlohmann::json j;
  j["primitive"] = r.primitive;
  j["exponent"] = r.exponent ? nlohmann::json(*r.exponent) : nlohmann::json(nullptr);
  if (r.failure_witness) {
    j["failure_witness"] = {r.failure_witness->first, r.failure_witness->second};
  } else {
    j["failure_witness"] = nullptr;
  }
  return j;
}

nlohmann::json spectrum_report_to_json(const SpectrumReport& r) {
  nlohmann::json j;
  j["character"] = character_to_json(r.character);
  j["eigenvalue_moduli"] = r.eigenvalue_moduli;
  j["rho"] = r.rho;
  j["gamma"] = r.gamma;
  return j;
}

nlohmann::json scan_summary_to_json(const ScanReport& r) {
  nlohmann::json j;
  j["K"] = r.K;
  j["delta"] = r.delta ? nlohmann::json(*r.delta) : nlohmann::json(nullptr);
  j["exclusion_radius"] = r.exclusion_radius;
  j["grid"] = r.grid;
  j["failed_points"] = r.failed_points;
  return j;
}

nlohmann::json divides_report_to_json(const DividesReport& r,
                                      const std::vector<std::string>& variables) {
  nlohmann::json j;
  j["divides"] = r.divides;
  j["diagnostic"] = r.diagnostic;
  j["corroborations_passed"] = r.corroborations_passed;
  j["corroborations_total"] = r.corroborations_total;
  j["quotient"] =
      r.quotient ? upoly_to_json(NamedUPoly{variables, *r.quotient}) : nlohmann::json(nullptr);
  return j;
}

ParsedObject object_from_json(const nlohmann::json& j) {
  ParsedObject out;
  if (j.is_object() && j.contains("entries")) {
    out.kind = ObjectKind::kMatrix;
    out.matrix = matrix_from_json(j);
    return out;
  }
  if (j.is_object() && j.contains("u_coeffs")) {
    out.kind = ObjectKind::kUPoly;
    out.poly = upoly_from_json(j);
    return out;
  }
  throw ParseError("json: expected a matrix ('entries') or a u-polynomial ('u_coeffs')");
}

}  // namespace lps
