#pragma once

// Interchange format. Rationals travel as canonical strings ("p" or "p/q",
// sign on the numerator) and never as JSON numbers.

#include <string>
#include <string_view>

#include "json.hpp"

#include "corrdyn/clebsch_gordan.hpp"
#include "corrdyn/correspondence.hpp"
#include "corrdyn/multiplier.hpp"
#include "corrdyn/stability.hpp"

namespace corrdyn::json_io {

using Json = nlohmann::ordered_json;

/// {"d": d, "e": e, "coeffs": [[...], ...]}. Throws SchemaError on a
/// malformed document, a bad rational or the zero matrix.
Correspondence correspondence_from_json(const Json& doc);
Correspondence parse_correspondence(std::string_view text);
Json to_json(const BiForm& f);
inline Json to_json(const Correspondence& f) { return to_json(f.form()); }

/// {"d": d, "e": e, "parts": [[...], ...]}; parts[m] has d + e - 2m + 1
/// entries.
CgComponents parse_components(const Json& doc);
Json to_json(const CgComponents& c);

Json to_json(const StabilityVerdict& v);

/// Multiplier report: the (dx, dy) coefficients, the (dz0, dz1) coordinates
/// for basis degrees (d2, e2), the form divided by a00 a_de, and the
/// spectrum (null when a multiplier is infinite).
Json multiplier_report(const CovariantForm& r, unsigned d2, unsigned e2, const Rational& norm);

Json rationals(const std::vector<Rational>& v);
Rational parse_rational(const Json& v);

/// Compact single-line text with a trailing newline.
std::string dump(const Json& doc);

}  // namespace corrdyn::json_io
