#include "corrdyn/json_io.hpp"

#include <stdexcept>

#include "corrdyn/errors.hpp"

namespace corrdyn::json_io {

namespace {

unsigned parse_degree(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  const Json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 4096)
    throw SchemaError(std::string("field \"") + key + "\" must be a nonnegative integer");
  return static_cast<unsigned>(v.get<long long>());
}

std::vector<Rational> parse_row(const Json& row, std::size_t expected, const std::string& where) {
  if (!row.is_array() || row.size() != expected)
    throw SchemaError(where + " must be an array of " + std::to_string(expected) + " rationals");
  std::vector<Rational> out;
  out.reserve(expected);
  for (const auto& v : row) out.push_back(parse_rational(v));
  return out;
}

}  // namespace

Rational parse_rational(const Json& v) {
  if (!v.is_string()) throw SchemaError("rationals must be JSON strings, got " + v.dump());
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError("malformed rational \"" + v.get<std::string>() + "\"");
  }
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

Correspondence correspondence_from_json(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("correspondence document must be an object");
  const unsigned d = parse_degree(doc, "d"), e = parse_degree(doc, "e");
  if (!doc.contains("coeffs") || !doc.at("coeffs").is_array() || doc.at("coeffs").size() != d + 1)
    throw SchemaError("\"coeffs\" must be an array of d + 1 rows");
  std::vector<Rational> entries;
  for (unsigned i = 0; i <= d; ++i) {
    auto row = parse_row(doc.at("coeffs")[i], e + 1, "row " + std::to_string(i));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  BiForm f(d, e, std::move(entries));
  if (f.is_zero()) throw SchemaError("the zero form is not a correspondence");
  return Correspondence(std::move(f));
}

Correspondence parse_correspondence(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return correspondence_from_json(doc);
}

Json to_json(const BiForm& f) {
  Json rows = Json::array();
  for (unsigned i = 0; i <= f.dx(); ++i) {
    Json row = Json::array();
    for (unsigned j = 0; j <= f.dy(); ++j) row.push_back(f.at(i, j).str());
    rows.push_back(std::move(row));
  }
  Json doc;
  doc["d"] = f.dx();
  doc["e"] = f.dy();
  doc["coeffs"] = std::move(rows);
  return doc;
}

CgComponents parse_components(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("components document must be an object");
  const unsigned d = parse_degree(doc, "d"), e = parse_degree(doc, "e");
  const unsigned top = std::min(d, e);
  if (!doc.contains("parts") || !doc.at("parts").is_array() || doc.at("parts").size() != top + 1)
    throw SchemaError("\"parts\" must be an array of min(d, e) + 1 forms");
  CgComponents c{d, e, {}};
  for (unsigned m = 0; m <= top; ++m) {
    const unsigned deg = d + e - 2 * m;
    c.parts.emplace_back(deg, parse_row(doc.at("parts")[m], deg + 1, "part " + std::to_string(m)));
  }
  return c;
}

Json to_json(const CgComponents& c) {
  Json parts = Json::array();
  for (const auto& p : c.parts) parts.push_back(rationals(p.coeffs()));
  Json doc;
  doc["d"] = c.d;
  doc["e"] = c.e;
  doc["parts"] = std::move(parts);
  return doc;
}

Json to_json(const StabilityVerdict& v) {
  Json doc;
  doc["verdict"] = std::string(to_string(v.verdict));
  doc["max_multiplicity"] = v.max_multiplicity;
  doc["witness"] = {{"degree", v.witness.degree()}, {"coeffs", rationals(v.witness.coeffs())}};
  Json roots = Json::array();
  if (!v.witness.is_zero() && v.witness.degree() >= 1) {
    try {
      for (const auto& p : rational_roots(v.witness)) roots.push_back({p.p0.str(), p.p1.str()});
    } catch (const std::runtime_error&) {
      // Coefficients too large for the root search; the witness stands alone.
    }
  }
  doc["rational_points"] = std::move(roots);
  return doc;
}

Json multiplier_report(const CovariantForm& r, unsigned d2, unsigned e2, const Rational& norm) {
  Json doc;
  doc["degree"] = r.degree();
  doc["dxdy"] = rationals(r.coeffs());
  doc["dz_basis"] = {d2, e2};
  doc["dz"] = rationals(dz_coordinates(r, d2, e2));
  CovariantForm n = r;
  n *= Rational(1) / norm;
  doc["normalized"] = rationals(n.coeffs());
  try {
    doc["sigma"] = rationals(sigma_spectrum(r).sigma);
  } catch (const std::domain_error&) {
    doc["sigma"] = nullptr;
  }
  return doc;
}

std::string dump(const Json& doc) { return doc.dump() + "\n"; }

}  // namespace corrdyn::json_io
