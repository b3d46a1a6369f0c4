#include "tropsing/rational.hpp"

#include <cctype>

namespace tropsing {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::size_t i = 0, n = text.size();
  auto fail = [&](const char* msg, std::size_t pos) -> Rat {
    throw ParseError(std::string("invalid rational '") + text + "': " + msg, pos);
  };

  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t start = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  std::string ipart = text.substr(start, i - start);

  Rat result;
  if (i < n && text[i] == '/') {
    if (ipart.empty()) fail("missing numerator", start);
    std::string den = text.substr(i + 1);
    if (!all_digits(den)) fail("denominator must be a positive integer", i + 1);
    Int q(den);
    if (q == 0) fail("zero denominator", i + 1);
    result = Rat(Int(ipart)) / Rat(q);  // division canonicalizes
  } else if (i < n && text[i] == '.') {
    std::string frac = text.substr(i + 1);
    if (ipart.empty() && frac.empty()) fail("lone decimal point", i);
    if (!frac.empty() && !all_digits(frac)) fail("malformed decimal part", i + 1);
    Int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    Int num = Int(ipart.empty() ? "0" : ipart) * scale + Int(frac.empty() ? "0" : frac);
    result = Rat(num) / Rat(scale);
  } else if (i == n) {
    if (ipart.empty()) fail("empty numeric token", 0);
    result = Rat(Int(ipart));
  } else {
    fail("unexpected character", i);
  }
  return negative ? Rat(-result) : result;
}

std::string rat_to_string(const Rat& r) { return r.str(); }

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

ExtRat ExtRat::operator+(const ExtRat& o) const {
  if (is_finite() && o.is_finite()) return ExtRat(value_ + o.value_);
  if ((is_pos_inf() && o.is_neg_inf()) || (is_neg_inf() && o.is_pos_inf()))
    throw std::logic_error("ExtRat: inf + -inf");
  return is_finite() ? o : *this;
}

ExtRat ExtRat::operator*(const Rat& c) const {
  if (is_finite()) return ExtRat(value_ * c);
  if (c <= 0) throw std::logic_error("ExtRat: infinite scaled by non-positive factor");
  return *this;
}

bool ExtRat::operator<(const ExtRat& o) const {
  if (kind_ == o.kind_) return is_finite() && value_ < o.value_;
  if (is_neg_inf()) return true;
  if (o.is_neg_inf()) return false;
  return o.is_pos_inf();
}

std::string ExtRat::str() const {
  if (is_pos_inf()) return "inf";
  if (is_neg_inf()) return "-inf";
  return rat_to_string(value_);
}

double ExtRat::to_double() const {
  if (is_pos_inf()) return std::numeric_limits<double>::infinity();
  if (is_neg_inf()) return -std::numeric_limits<double>::infinity();
  return rat_to_double(value_);
}

Rat factorial(int n) {
  Rat f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

namespace {

Int floor_rat(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  Int q = num / den;
  if (q * den > num) --q;  // round toward -inf
  return q;
}

// Simplest rational in (lo, hi] (left-open) or [lo, hi) (right-open),
// by the continued-fraction descent.  Requires lo < hi.
Rat simplest_half_open(const Rat& lo, const Rat& hi, bool left_open) {
  Int fl = floor_rat(lo);
  if (left_open) {
    Rat candidate(fl + 1);
    if (candidate <= hi) return candidate;
  } else {
    Rat candidate(fl + (Rat(fl) < lo ? 1 : 0));
    if (Rat(fl) >= lo && Rat(fl) < hi) return Rat(fl);
    if (candidate >= lo && candidate < hi) return candidate;
  }
  // Both endpoints sit in the same unit interval [fl, fl+1).
  Rat a = lo - Rat(fl), b = hi - Rat(fl);
  if (a == 0) {
    // (0, b]: simplest is 1/ceil(1/b).
    Rat inv = 1 / b;
    Int c = floor_rat(inv);
    if (Rat(c) < inv) ++c;
    return Rat(fl) + Rat(1) / Rat(c);
  }
  // x in (a,b] <=> 1/x in [1/b, 1/a); recurse with flipped openness.
  Rat inner = simplest_half_open(1 / b, 1 / a, !left_open);
  return Rat(fl) + 1 / inner;
}

}  // namespace

Rat simplest_rational_above(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_rational_above: empty interval");
  return simplest_half_open(lo, hi, /*left_open=*/true);
}

}  // namespace tropsing
