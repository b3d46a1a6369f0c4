/**
 * JSON (de)serialization of germs, maps, polyhedra and reports.
 *
 * Wire conventions: a rational is a JSON integer, a decimal string, or a
 * "p/q" string on input, and a JSON integer or "p/q" string on output;
 * infinities serialize as "inf".  Non-integer JSON number literals are
 * rejected (binary floating point never enters the exact pipeline).
 */

#ifndef TROPSING_IO_HPP
#define TROPSING_IO_HPP

#include "tropsing/covolume.hpp"
#include "tropsing/dequant.hpp"
#include "tropsing/germ.hpp"
#include "tropsing/invariants.hpp"
#include "tropsing/polyhedron.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <variant>

namespace tropsing::io {

using json = nlohmann::ordered_json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

/// Parses {"n":..,"support":..[,"coeffs":..]} or {"n":..,"map":[..]}.
/// Throws ParseError on schema violations, non-rational number tokens and
/// dimension mismatches.
std::variant<GermSupport, MapSpec> parse_support_json(const std::string& doc);

json to_json(const GermSupport& g);
json to_json(const MapSpec& f);

/// {"n":.., "vertices":[["p/q",..],..] [, "facets":[{"normal":..,"offset":..},..]]}
json to_json(const NewtonPolyhedron& gamma, bool with_facets = true);
NewtonPolyhedron polyhedron_from_json(const json& j);

json to_json(const InvariantReport& report);

/// Fixed 12-significant-digit rendering for every float that leaves the
/// library (byte-determinism of reports).
std::string format_double(double v);

}  // namespace tropsing::io

#endif  // TROPSING_IO_HPP
