#include "tropsing/germ.hpp"

#include "tropsing/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace tropsing {

int GermSupport::check_dim(int dim) {
  if (dim < 1) throw DomainError("GermSupport: dimension must be >= 1");
  return dim;
}

namespace {

void check_point(const RatVec& p, int dim) {
  if (p.size() != dim) throw DomainError("GermSupport: point dimension mismatch");
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) < 0) throw DomainError("GermSupport: negative exponent coordinate");
}

}  // namespace

GermSupport GermSupport::from_terms(int dim, std::vector<std::pair<RatVec, RatComplex>> terms) {
  GermSupport g(dim);
  std::map<std::vector<Rat>, RatComplex> combined;
  for (auto& [point, coeff] : terms) {
    check_point(point, dim);
    std::vector<Rat> key(point.data(), point.data() + point.size());
    auto [it, fresh] = combined.emplace(std::move(key), coeff);
    if (!fresh) it->second = it->second + coeff;
  }
  std::vector<RatComplex> coeffs;
  for (auto& [key, coeff] : combined) {
    if (coeff.is_zero()) continue;
    RatVec p(dim);
    for (int i = 0; i < dim; ++i) p(i) = key[i];
    g.points_.push_back(std::move(p));
    coeffs.push_back(coeff);
  }
  g.coeffs_ = std::move(coeffs);
  return g;
}

GermSupport GermSupport::from_points(int dim, std::vector<RatVec> points) {
  GermSupport g(dim);
  for (const RatVec& p : points) check_point(p, dim);
  sort_lex(points);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const RatVec& a, const RatVec& b) { return a == b; }),
               points.end());
  g.points_ = std::move(points);
  return g;
}

const std::vector<RatComplex>& GermSupport::coeffs() const {
  if (!coeffs_) throw PreconditionError("GermSupport: coefficients not present");
  return *coeffs_;
}

bool GermSupport::operator==(const GermSupport& o) const {
  if (dim_ != o.dim_ || points_.size() != o.points_.size()) return false;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] != o.points_[i]) return false;
  if (coeffs_.has_value() != o.coeffs_.has_value()) return false;
  if (coeffs_)
    for (std::size_t i = 0; i < coeffs_->size(); ++i)
      if (!((*coeffs_)[i] == (*o.coeffs_)[i])) return false;
  return true;
}

bool is_singular(const GermSupport& u) {
  for (const RatVec& p : u.points())
    if (p.isZero()) return false;
  return true;
}

MapSpec::MapSpec(int dim, std::vector<GermSupport> components)
    : dim_(dim), components_(std::move(components)) {
  if (dim < 1) throw DomainError("MapSpec: dimension must be >= 1");
  if (static_cast<int>(components_.size()) != dim)
    throw DomainError("MapSpec: expected exactly " + std::to_string(dim) + " components");
  for (const GermSupport& g : components_) {
    if (g.dim() != dim) throw DomainError("MapSpec: component dimension mismatch");
    if (g.empty()) throw DomainError("MapSpec: components must be nonempty");
  }
}

// ---------------------------------------------------------------------------
// Polynomial parser: recursive descent over
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff | [coeff '*'] factor ('*' factor)*
//   factor := var ['^' uint]
//   var    := 'x' uint
//   coeff  := int | decimal | '(' re ('+'|'-') im 'i' ')'
// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, int dim) : s_(text), dim_(dim) {}

  GermSupport parse() {
    std::vector<std::pair<RatVec, RatComplex>> terms;
    skip_ws();
    if (eof()) throw ParseError("empty polynomial", 0);
    bool negate = accept_sign();
    terms.push_back(term(negate));
    skip_ws();
    while (!eof()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      terms.push_back(term(c == '-'));
      skip_ws();
    }
    return GermSupport::from_terms(dim_, std::move(terms));
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept_sign() {
    if (!eof() && (peek() == '+' || peek() == '-')) {
      bool neg = peek() == '-';
      ++pos_;
      return neg;
    }
    return false;
  }

  std::pair<RatVec, RatComplex> term(bool negate) {
    skip_ws();
    if (eof()) throw ParseError("expected term", pos_);
    RatComplex coeff{Rat(1), Rat(0)};
    RatVec exponents = RatVec::Zero(dim_);
    bool saw_factor = false;

    if (peek() == '(' || std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      coeff = coefficient();
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        factor(exponents);
        saw_factor = true;
      }
    } else {
      factor(exponents);
      saw_factor = true;
    }
    skip_ws();
    while (saw_factor && !eof() && peek() == '*') {
      ++pos_;
      factor(exponents);
      skip_ws();
    }
    if (negate) coeff = -coeff;
    return {exponents, coeff};
  }

  void factor(RatVec& exponents) {
    skip_ws();
    if (eof() || peek() != 'x')
      throw ParseError("expected variable 'x<k>'", pos_);
    ++pos_;
    std::size_t at = pos_;
    long idx = read_uint("variable index");
    if (idx < 1 || idx > dim_)
      throw ParseError("variable index " + std::to_string(idx) + " out of range 1.." +
                           std::to_string(dim_),
                       at);
    long exp = 1;
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (!eof() && peek() == '-') throw ParseError("negative exponent", pos_);
      exp = read_uint("exponent");
    }
    exponents(idx - 1) += exp;
  }

  RatComplex coefficient() {
    if (peek() == '(') {
      std::size_t open = pos_++;
      Rat re = signed_number();
      skip_ws();
      if (eof() || (peek() != '+' && peek() != '-'))
        throw ParseError("expected '+' or '-' in complex coefficient", pos_);
      bool neg = peek() == '-';
      ++pos_;
      Rat im = signed_number();
      if (neg) im = -im;
      skip_ws();
      if (eof() || peek() != 'i') throw ParseError("expected 'i'", pos_);
      ++pos_;
      skip_ws();
      if (eof() || peek() != ')') throw ParseError("unclosed complex coefficient", open);
      ++pos_;
      return {re, im};
    }
    return {signed_number(), Rat(0)};
  }

  Rat signed_number() {
    skip_ws();
    std::size_t start = pos_;
    if (!eof() && (peek() == '+' || peek() == '-')) ++pos_;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    if (pos_ == start) throw ParseError("expected number", start);
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start);
    }
  }

  long read_uint(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    return std::stol(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

GermSupport parse_polynomial(const std::string& text, int dim) {
  if (dim < 1) throw DomainError("parse_polynomial: dimension must be >= 1");
  return PolyParser(text, dim).parse();
}

}  // namespace tropsing
