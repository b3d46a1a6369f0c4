/**
 * Data model for germs given by monomial supports.
 *
 * Every polyhedral invariant downstream depends on the support alone:
 * the Newton polyhedron of a germ is determined by which exponents carry a
 * nonzero coefficient, not by the coefficient values.  Coefficients are
 * therefore optional and are kept exclusively for the dequantization lab,
 * where |f| itself is evaluated numerically.
 *
 * Exponents are nonnegative rationals.  Integer exponents (analytic germs)
 * are the special case; rational ones arise as vertices of indicator and
 * directional-weight polyhedra, e.g. e_k / a_k.
 */

#ifndef TROPSING_GERM_HPP
#define TROPSING_GERM_HPP

#include "tropsing/errors.hpp"
#include "tropsing/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropsing {

/// Exact complex coefficient (real/imaginary pair of rationals).
struct RatComplex {
  Rat re, im;
  bool is_zero() const { return re == 0 && im == 0; }
  RatComplex operator+(const RatComplex& o) const { return {re + o.re, im + o.im}; }
  RatComplex operator*(const RatComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  RatComplex operator-() const { return {-re, -im}; }
  bool operator==(const RatComplex& o) const { return re == o.re && im == o.im; }
  std::complex<double> to_complex() const {
    return {rat_to_double(re), rat_to_double(im)};
  }
};

/// Finite monomial support of a germ, immutable after construction.
/// Points are kept lexicographically sorted and duplicate-free; when
/// coefficients are present they are aligned with the points and nonzero.
/// The empty support denotes f == 0, i.e. the tropical zero u == -infinity.
class GermSupport {
 public:
  explicit GermSupport(int dim) : dim_(check_dim(dim)) {}

  /// Combines like terms exactly and drops exponents whose combined
  /// coefficient vanishes.
  static GermSupport from_terms(int dim, std::vector<std::pair<RatVec, RatComplex>> terms);

  /// Support only (deduplicates points, no coefficients).
  static GermSupport from_points(int dim, std::vector<RatVec> points);

  int dim() const { return dim_; }
  const std::vector<RatVec>& points() const { return points_; }
  bool has_coeffs() const { return coeffs_.has_value(); }
  const std::vector<RatComplex>& coeffs() const;
  bool empty() const { return points_.empty(); }

  bool operator==(const GermSupport& o) const;

 private:
  static int check_dim(int dim);
  int dim_;
  std::vector<RatVec> points_;
  std::optional<std::vector<RatComplex>> coeffs_;
};

/// True iff the germ is singular at 0: the support is empty (u == -inf) or
/// omits the origin exponent.  A constant term makes f(0) != 0, the
/// tropical unit, and the germ nonsingular.
bool is_singular(const GermSupport& u);

/// An equidimensional map F = (f_1, ..., f_n): exactly n nonempty
/// components of dimension n.
class MapSpec {
 public:
  MapSpec(int dim, std::vector<GermSupport> components);
  int dim() const { return dim_; }
  const std::vector<GermSupport>& components() const { return components_; }

 private:
  int dim_;
  std::vector<GermSupport> components_;
};

/// Parses a polynomial in variables x1..x<dim> with integer, decimal or
/// complex "(re+imi)" coefficients and nonnegative integer exponents.
/// Like terms are combined exactly; exact cancellations leave the support.
/// Throws ParseError (with position) on malformed text, unknown variable
/// index, or negative exponent.
GermSupport parse_polynomial(const std::string& text, int dim);

}  // namespace tropsing

#endif  // TROPSING_GERM_HPP
