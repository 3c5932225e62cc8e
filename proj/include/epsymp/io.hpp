#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "epsymp/moser.hpp"
#include "epsymp/polyform.hpp"
#include "epsymp/squeezing.hpp"
#include "epsymp/symplectic.hpp"

namespace epsymp {

using Json = nlohmann::ordered_json;

/// Malformed or unreadable input; the CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// Text format "n <int>" followed by 2n rows of 2n numbers, or JSON
/// {"n": int, "rows": [[...]]}. JSON is detected by a leading '{'.
Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& a);
Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j);

/// {"m", "k", "terms": [{"index": [1-based], "coeff": x}]}.
Covector covector_from_json(const Json& j);
Json covector_to_json(const Covector& c);

/// {"m", "k", "terms": [{"index": [1-based], "poly": [{"exp": [...], "num": "p", "den": "q"}]}]}.
/// "num" and "den" may also be integers; "den" defaults to 1.
PolyForm polyform_from_json(const Json& j);
Json polyform_to_json(const PolyForm& f);
std::string rational_to_string(const Rational& r);

/// JSON array of points, or whitespace separated rows.
std::vector<Vector> parse_points(std::string_view text);

/// FNV-1a 64-bit, rendered as 16 hex digits.
std::string digest(std::string_view data);

Json to_json(const Vector& v);
Json to_json(const LambdaMuReport& r);
Json to_json(const DecompositionCheck& r);
Json to_json(const CertificateReport& r);
Json to_json(const SymplectifyReport& r);
Json to_json(const HBoundReport& r);
Json to_json(const PointwiseReport& r);

}  // namespace epsymp
