#include "tropsing/oracle.hpp"

#include "tropsing/covolume.hpp"
#include "tropsing/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tropsing::oracle {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

OracleEstimate mc_covol(const NewtonPolyhedron& gamma, std::int64_t samples,
                        std::uint64_t seed) {
  if (!covol_finite(gamma))
    throw PreconditionError("mc_covol: infinite covolume");
  if (samples <= 0) throw DomainError("mc_covol: sample count must be positive");

  const int n = gamma.dim();
  Rat box = 0;
  for (int k = 0; k < n; ++k) box = std::max(box, *axis_intercept(gamma, k));
  if (box == 0) return {0.0, 0.0, samples};

  const double m = rat_to_double(box);
  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;
  for (const Facet& f : gamma.facets()) {
    std::vector<double> row(n);
    for (int i = 0; i < n; ++i) row[i] = rat_to_double(f.normal(i));
    normals.push_back(std::move(row));
    offsets.push_back(rat_to_double(f.offset));
  }

  std::int64_t hits = 0;
  std::vector<double> x(n);
  for (std::int64_t s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i)
      x[i] = m * unit_double(splitmix64(seed ^ splitmix64(
                                static_cast<std::uint64_t>(s) * n + i + 1)));
    bool inside = true;
    bool borderline = false;
    for (std::size_t f = 0; f < normals.size() && inside; ++f) {
      double lhs = 0;
      for (int i = 0; i < n; ++i) lhs += normals[f][i] * x[i];
      double margin = lhs - offsets[f];
      if (std::fabs(margin) < 1e-9 * std::max(1.0, std::fabs(offsets[f]))) {
        borderline = true;
        break;
      }
      inside = margin > 0;
    }
    if (borderline) {
      RatVec p(n);
      for (int i = 0; i < n; ++i) p(i) = Rat(x[i]);  // double -> rational is exact
      inside = member(gamma, p);
    }
    if (!inside) ++hits;
  }

  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  const double box_vol = std::pow(m, n);
  OracleEstimate est;
  est.value = p * box_vol;
  est.standard_error = box_vol * std::sqrt(p * (1 - p) / static_cast<double>(samples));
  est.samples = samples;
  return est;
}

Rat staircase_covol_2d(const NewtonPolyhedron& gamma) {
  if (gamma.dim() != 2) throw DomainError("staircase_covol_2d: n must be 2");
  if (!covol_finite(gamma))
    throw PreconditionError("staircase_covol_2d: infinite covolume");
  // Lex order sorts by first coordinate; minimality makes the second
  // coordinate strictly decreasing along the chain.
  const auto& v = gamma.vertices();
  Rat area = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    area += (v[i](1) + v[i + 1](1)) / 2 * (v[i + 1](0) - v[i](0));
  return area;
}

GridEstimate grid_lambda(const NewtonPolyhedron& gamma, int k) {
  if (gamma.empty()) throw PreconditionError("grid_lambda: empty polyhedron");
  if (k < 1) throw DomainError("grid_lambda: resolution must be >= 1");
  const int n = gamma.dim();

  Rat maxnorm = 0;
  for (const RatVec& v : gamma.vertices()) maxnorm = std::max(maxnorm, Rat(v.sum()));

  GridEstimate est;
  est.resolution = maxnorm / k;
  est.value = 0;
  est.argmax = RatVec::Zero(n);

  // Compositions of k into n nonnegative parts.
  std::vector<int> parts(n, 0);
  auto visit = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == n - 1) {
      parts[idx] = remaining;
      RatVec a(n);
      for (int i = 0; i < n; ++i) a(i) = Rat(parts[i], k);
      Rat val = a.dot(gamma.vertices().front());
      for (const RatVec& v : gamma.vertices()) val = std::min(val, Rat(a.dot(v)));
      ++est.samples;
      if (est.samples == 1 || val > est.value) {
        est.value = val;
        est.argmax = a;
      }
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      parts[idx] = take;
      self(self, idx + 1, remaining - take);
    }
  };
  visit(visit, 0, k);
  return est;
}

Rat diagonal_entry_bisect(const NewtonPolyhedron& gamma, int iterations) {
  if (gamma.empty()) throw PreconditionError("diagonal_entry_bisect: empty polyhedron");
  const int n = gamma.dim();
  const RatVec ones = RatVec::Constant(n, Rat(1));
  if (member(gamma, RatVec(RatVec::Zero(n)))) return Rat(0);

  // hi = min over vertices of the max coordinate: hi*(1,..,1) dominates
  // that vertex, so it is a member.
  Rat hi;
  bool first = true;
  for (const RatVec& v : gamma.vertices()) {
    Rat mx = v(0);
    for (Eigen::Index i = 1; i < v.size(); ++i) mx = std::max(mx, v(i));
    hi = first ? mx : std::min(hi, mx);
    first = false;
  }
  Rat lo = 0;  // not a member (checked above); membership is monotone in t
  for (int it = 0; it < iterations && lo < hi; ++it) {
    Rat mid = (lo + hi) / 2;
    if (member(gamma, RatVec(mid * ones)))
      hi = mid;
    else
      lo = mid;
  }
  if (lo == hi) return hi;
  return simplest_rational_above(lo, hi);
}

}  // namespace tropsing::oracle
