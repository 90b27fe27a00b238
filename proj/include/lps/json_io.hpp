#ifndef LPS_JSON_IO_HPP
#define LPS_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "lps/charvariety.hpp"
#include "lps/fiberpoly.hpp"
#include "lps/lpmat.hpp"

namespace lps {

// Values on the wire carry variable names alongside the math objects so
// that emitted JSON re-parses to an identical in-memory value.
struct NamedMatrix {
  std::vector<std::string> variables;
  LaurentMatrix matrix;

  bool operator==(const NamedMatrix& other) const = default;
};

struct NamedUPoly {
  std::vector<std::string> variables;
  UPoly poly;

  bool operator==(const NamedUPoly& other) const = default;
};

// "t" for one variable, otherwise "t1".."th".
std::vector<std::string> default_variable_names(int num_vars);

// Parses text as JSON; malformed input becomes ParseError.
nlohmann::json parse_json_text(const std::string& text);

// A polynomial is a list of terms {"c": coefficient, "e": [exponents]}.
// Coefficients within int64 range are emitted as JSON integers, larger ones
// as decimal strings; the parser accepts both.
nlohmann::json terms_to_json(const LaurentPoly& p);
LaurentPoly terms_from_json(const nlohmann::json& j, int num_vars);

// {"variables": [...], "dim": n, "entries": [[ [term...] ... ]]}
nlohmann::json matrix_to_json(const NamedMatrix& m);
NamedMatrix matrix_from_json(const nlohmann::json& j);

// {"variables": [...], "u_coeffs": [ [term...] ... ]} lowest degree first.
nlohmann::json upoly_to_json(const NamedUPoly& p);
NamedUPoly upoly_from_json(const nlohmann::json& j);

// Characters serialize as arrays of coordinate strings ("1/3", "0.25").
nlohmann::json character_to_json(const Character& chi);
Character character_from_json(const nlohmann::json& j);

nlohmann::json pf_report_to_json(const PFReport& r);
nlohmann::json spectrum_report_to_json(const SpectrumReport& r);
// Scan summary: {"K", "delta" (null when absent), "exclusion_radius",
// "grid", "failed_points"}.
nlohmann::json scan_summary_to_json(const ScanReport& r);
nlohmann::json divides_report_to_json(const DividesReport& r,
                                      const std::vector<std::string>& variables);

// Sniffs whether a JSON object is a matrix ("entries") or a u-polynomial
// ("u_coeffs").
enum class ObjectKind { kMatrix, kUPoly };
struct ParsedObject {
  ObjectKind kind = ObjectKind::kMatrix;
  NamedMatrix matrix;
  NamedUPoly poly;
};
ParsedObject object_from_json(const nlohmann::json& j);

}  // namespace lps

#endif  // LPS_JSON_IO_HPP
