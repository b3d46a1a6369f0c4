/**
 * Exact scalar types for the tropical core: GMP-backed rationals, the
 * extended rational line (rationals plus the two infinities), and exact
 * string conversion.  No binary floating point enters through this header.
 */

#ifndef TROPSING_RATIONAL_HPP
#define TROPSING_RATIONAL_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropsing {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatVec = Vec<Rat>;
using RatMat = Mat<Rat>;

/// Thrown on malformed numeric or polynomial text; carries a 0-based
/// position into the offending string where that makes sense.
struct ParseError : std::runtime_error {
  std::size_t position;
  explicit ParseError(const std::string& what, std::size_t pos = 0)
      : std::runtime_error(what), position(pos) {}
};

/// Parses "p", "p/q" or an exact decimal such as "-3.25" into a canonical
/// rational.  Rejects anything else (in particular float notation like 1e-3).
Rat parse_rational(const std::string& text);

/// Renders canonically as "p" or "p/q".
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

/// The rational line extended by +inf / -inf.  Only the operations the
/// invariant pipeline needs are provided; mixing +inf with -inf in a sum
/// is a programming error and throws.
class ExtRat {
 public:
  ExtRat() : kind_(Kind::finite), value_(0) {}
  ExtRat(Rat v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT: implicit by design
  ExtRat(int v) : kind_(Kind::finite), value_(v) {}             // NOLINT

  static ExtRat infinity() { return ExtRat(Kind::pos_inf); }
  static ExtRat neg_infinity() { return ExtRat(Kind::neg_inf); }

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  /// Finite value; throws if infinite.
  const Rat& value() const {
    if (!is_finite()) throw std::logic_error("ExtRat: value() on infinite");
    return value_;
  }

  ExtRat operator+(const ExtRat& o) const;
  ExtRat operator*(const Rat& c) const;  // c > 0 expected for infinities
  bool operator==(const ExtRat& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::finite || value_ == o.value_);
  }
  bool operator!=(const ExtRat& o) const { return !(*this == o); }
  bool operator<(const ExtRat& o) const;
  bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }

  /// "p/q", "inf" or "-inf"; the wire form used in every JSON report.
  std::string str() const;

  double to_double() const;

 private:
  enum class Kind { finite, pos_inf, neg_inf };
  explicit ExtRat(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rat value_;
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }
inline ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

/// n! as an exact rational, for the residual-mass factors.
Rat factorial(int n);

/// Simplest rational (smallest denominator, then smallest |numerator|) in
/// the half-open interval (lo, hi].  Used to snap exact bisection brackets
/// back to the rational they enclose.
Rat simplest_rational_above(const Rat& lo, const Rat& hi);

}  // namespace tropsing

#endif  // TROPSING_RATIONAL_HPP
