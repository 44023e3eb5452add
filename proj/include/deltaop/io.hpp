#pragma once

// JSON records for every value type. All writers are deterministic; every
// reader accepts exactly what the matching writer produces and throws
// FormatError on anything else.
//
//   PadicInt           {"p": int, "N": int, "v": "decimal"}
//   PadicPoly          {"p", "var": "u", "coeffs": [PadicInt...]}
//   RootSystem         {"p", "m", "N", "index_order": [[beta]...], "roots": [{"alpha", "root", "iterates"}...]}
//   WMatrix            {"p", "m", "N", "index_order", "rows": [[PadicInt...]...], "determinant": {...}}
//   LocalFunctionData  {"p", "m", "N", "K", "discs": [{"alpha": int, "coeffs": [PadicInt...]}...]}
//   CanonicalSeries    {"p", "m", "K", "terms": [{"beta": [int...], "n": int, "coeff": PadicInt}...]}

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "deltaop/delta_calc.hpp"
#include "deltaop/padic.hpp"
#include "deltaop/poly.hpp"
#include "deltaop/repr.hpp"
#include "deltaop/roots.hpp"

namespace deltaop {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const PadicInt& x);
Json to_json(const PadicPoly& poly);
Json to_json(const IndexOrder& order);
Json to_json(const RootSystem& rs);
Json to_json(const WMatrix& w, const DetCertificate& cert);
Json to_json(const LocalFunctionData& local);
Json to_json(const CanonicalSeries& f);
Json to_json(const BoundsReport& report);

PadicInt padic_from_json(const Json& j);
PadicPoly poly_from_json(const Json& j);
RootSystem roots_from_json(const Json& j);
WMatrix wmatrix_from_json(const Json& j);
LocalFunctionData local_from_json(const Json& j);
CanonicalSeries canonical_from_json(const Json& j);

/// Parses "v/N" (value, precision) into a PadicInt for prime p.
PadicInt parse_point(const std::string& text, Prime p);

Json read_json_file(const std::string& path);
/// Pretty-printed with two-space indent and a trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace deltaop
