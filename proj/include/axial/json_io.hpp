#ifndef AXIAL_JSON_IO_HPP
#define AXIAL_JSON_IO_HPP

#include <json.hpp>

#include "axial/axet.hpp"
#include "axial/fusion.hpp"
#include "axial/shapes.hpp"

namespace axial {

using Json = nlohmann::ordered_json;

// Malformed input raises Error(ParseError) naming the offending field.

Json algebra_to_json(const Algebra& a);
// With check_axes false the "axes" entry is ignored; read it with axes_from_json.
Algebra algebra_from_json(const Json& j, bool check_axes = true);
std::vector<Vec> axes_from_json(const Json& j, const FieldSpec& f, int dim);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const FieldSpec& f, int dim);

Json axet_to_json(const Axet& x);
Axet axet_from_json(const Json& j);

Json fingerprint_to_json(const Fingerprint& f);
Json shape_to_json(const Shape& s);
// Fingerprint assignments keep their string key only.
Shape shape_from_json(const Json& j, const FieldSpec& f);

Json axis_report_to_json(const AxisReport& r, const FusionLaw& law);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace axial

#endif
