#include "tropsing/io.hpp"

#include <cstdio>

namespace tropsing::io {

json rat_to_json(const Rat& r) {
  if (denominator(r) == 1 && numerator(r) >= std::numeric_limits<std::int64_t>::min() &&
      numerator(r) <= std::numeric_limits<std::int64_t>::max())
    return numerator(r).convert_to<std::int64_t>();
  return rat_to_string(r);
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_number())
    throw ParseError("non-rational number token (use a decimal or \"p/q\" string)");
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational (integer or string), got " + std::string(j.type_name()));
}

namespace {

RatVec point_from_json(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError("dimension mismatch: expected a point with " + std::to_string(dim) +
                     " coordinates");
  RatVec p(dim);
  for (int i = 0; i < dim; ++i) p(i) = rat_from_json(j[i]);
  return p;
}

GermSupport germ_from_json(const json& j, int dim) {
  if (!j.is_object() || !j.contains("support") || !j["support"].is_array())
    throw ParseError("germ object must contain a \"support\" array");
  std::vector<RatVec> points;
  for (const json& pj : j["support"]) points.push_back(point_from_json(pj, dim));
  if (!j.contains("coeffs")) {
    try {
      return GermSupport::from_points(dim, std::move(points));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  const json& cj = j["coeffs"];
  if (!cj.is_array() || cj.size() != points.size())
    throw ParseError("\"coeffs\" must be an array aligned with \"support\"");
  std::vector<std::pair<RatVec, RatComplex>> terms;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!cj[i].is_array() || cj[i].size() != 2)
      throw ParseError("coefficient must be a [re, im] pair");
    terms.emplace_back(points[i], RatComplex{rat_from_json(cj[i][0]), rat_from_json(cj[i][1])});
  }
  try {
    return GermSupport::from_terms(dim, std::move(terms));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

int dim_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("document must be an object with an integer \"n\"");
  int n = j["n"].get<int>();
  if (n < 1) throw ParseError("\"n\" must be >= 1");
  return n;
}

}  // namespace

std::variant<GermSupport, MapSpec> parse_support_json(const std::string& doc) {
  json j;
  try {
    j = json::parse(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  int n = dim_from_json(j);
  if (j.contains("map")) {
    if (!j["map"].is_array())
      throw ParseError("\"map\" must be an array of germ objects");
    std::vector<GermSupport> comps;
    for (const json& gj : j["map"]) comps.push_back(germ_from_json(gj, n));
    try {
      return MapSpec(n, std::move(comps));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (j.contains("support")) return germ_from_json(j, n);
  throw ParseError("document must contain \"support\" or \"map\"");
}

json to_json(const GermSupport& g) {
  json j;
  j["n"] = g.dim();
  json support = json::array();
  for (const RatVec& p : g.points()) {
    json pj = json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) pj.push_back(rat_to_json(p(i)));
    support.push_back(std::move(pj));
  }
  j["support"] = std::move(support);
  if (g.has_coeffs()) {
    json coeffs = json::array();
    for (const RatComplex& c : g.coeffs())
      coeffs.push_back(json::array({rat_to_json(c.re), rat_to_json(c.im)}));
    j["coeffs"] = std::move(coeffs);
  }
  return j;
}

json to_json(const MapSpec& f) {
  json j;
  j["n"] = f.dim();
  json comps = json::array();
  for (const GermSupport& g : f.components()) {
    json gj = to_json(g);
    gj.erase("n");
    comps.push_back(std::move(gj));
  }
  j["map"] = std::move(comps);
  return j;
}

json to_json(const NewtonPolyhedron& gamma, bool with_facets) {
  json j;
  j["n"] = gamma.dim();
  json verts = json::array();
  for (const RatVec& v : gamma.vertices()) {
    json vj = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) vj.push_back(rat_to_string(v(i)));
    verts.push_back(std::move(vj));
  }
  j["vertices"] = std::move(verts);
  if (with_facets && !gamma.empty()) {
    json facets = json::array();
    for (const Facet& f : gamma.facets()) {
      json fj;
      json normal = json::array();
      for (Eigen::Index i = 0; i < f.normal.size(); ++i)
        normal.push_back(rat_to_string(f.normal(i)));
      fj["normal"] = std::move(normal);
      fj["offset"] = rat_to_string(f.offset);
      facets.push_back(std::move(fj));
    }
    j["facets"] = std::move(facets);
  }
  return j;
}

NewtonPolyhedron polyhedron_from_json(const json& j) {
  int n = dim_from_json(j);
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("polyhedron object must contain a \"vertices\" array");
  std::vector<RatVec> pts;
  for (const json& pj : j["vertices"]) pts.push_back(point_from_json(pj, n));
  try {
    return NewtonPolyhedron::from_points(n, std::move(pts));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const InvariantReport& r) {
  json j;
  j["n"] = r.dim;
  j["empty"] = r.empty;
  j["nonsingular"] = r.nonsingular;
  j["lelong"] = r.lelong.str();
  if (!r.directional.empty()) {
    json dir = json::array();
    for (const auto& [w, nu] : r.directional) {
      json dj;
      json wj = json::array();
      for (Eigen::Index i = 0; i < w.size(); ++i) wj.push_back(rat_to_string(w(i)));
      dj["weight"] = std::move(wj);
      dj["nu"] = nu.str();
      dir.push_back(std::move(dj));
    }
    j["directional"] = std::move(dir);
  }
  j["lambda"] = r.lambda.str();
  j["lct"] = r.log_canonical_threshold.str();
  j["covol"] = r.covolume.str();
  j["kushnirenko"] = r.kushnirenko.str();
  return j;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace tropsing::io
