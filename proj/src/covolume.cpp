#include "tropsing/covolume.hpp"

#include "tropsing/linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace tropsing {

namespace detail {

std::vector<RatVec> enumerate_vertices(int dim, const std::vector<HalfSpace>& constraints) {
  const int m = static_cast<int>(constraints.size());
  std::vector<RatVec> verts;
  std::vector<int> pick(dim);

  auto feasible = [&](const RatVec& x) {
    for (const HalfSpace& h : constraints)
      if (h.normal.dot(x) < h.offset) return false;
    return true;
  };

  // All dim-subsets of constraint rows; each nonsingular subsystem yields
  // one basic point, kept when it satisfies everything.
  auto run = [&](auto&& self, int start, int depth) -> void {
    if (depth == dim) {
      RatMat a(dim, dim);
      RatVec b(dim);
      for (int i = 0; i < dim; ++i) {
        a.row(i) = constraints[pick[i]].normal.transpose();
        b(i) = constraints[pick[i]].offset;
      }
      auto x = solve_unique<Rat>(a, b);
      if (x && feasible(*x)) verts.push_back(*x);
      return;
    }
    for (int i = start; i <= m - (dim - depth); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  if (m >= dim) run(run, 0, 0);

  sort_lex(verts);
  verts.erase(std::unique(verts.begin(), verts.end(),
                          [](const RatVec& a, const RatVec& b) { return a == b; }),
              verts.end());
  return verts;
}

namespace {

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  RatMat diffs(static_cast<int>(pts.size()) - 1, pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    diffs.row(static_cast<int>(i) - 1) = (pts[i] - pts[0]).transpose();
  return diffs.rows() == 0 ? 0 : rank_of<Rat>(std::move(diffs));
}

// Exact affine chart: maps points of an affinely k-dimensional set from
// R^m down to R^k coordinates (combinatorics and convexity preserved).
std::vector<RatVec> to_affine_chart(const std::vector<RatVec>& pts, int k) {
  const Eigen::Index m = pts[0].size();
  RatMat basis(m, k);
  int found = 0;
  RatMat probe(0, m);
  for (std::size_t i = 1; i < pts.size() && found < k; ++i) {
    RatMat trial(probe.rows() + 1, m);
    trial.topRows(probe.rows()) = probe;
    trial.row(probe.rows()) = (pts[i] - pts[0]).transpose();
    if (rank_of<Rat>(trial) == trial.rows()) {
      basis.col(found++) = pts[i] - pts[0];
      probe = trial;
    }
  }
  // Pick k independent coordinate rows of the basis matrix.
  std::vector<int> rows;
  RatMat acc(0, k);
  for (int r = 0; r < m && static_cast<int>(rows.size()) < k; ++r) {
    RatMat trial(acc.rows() + 1, k);
    trial.topRows(acc.rows()) = acc;
    trial.row(acc.rows()) = basis.row(r);
    if (rank_of<Rat>(trial) == trial.rows()) {
      acc = trial;
      rows.push_back(r);
    }
  }
  RatMat sq(k, k);
  for (int i = 0; i < k; ++i) sq.row(i) = basis.row(rows[i]);
  std::vector<RatVec> mapped;
  mapped.reserve(pts.size());
  for (const RatVec& p : pts) {
    RatVec rhs(k);
    for (int i = 0; i < k; ++i) rhs(i) = p(rows[i]) - pts[0](rows[i]);
    auto c = solve_unique<Rat>(sq, rhs);
    mapped.push_back(*c);
  }
  return mapped;
}

// Triangulates the convex hull of an affinely k-dimensional point set
// given in R^k coordinates; returns index tuples of k+1 points each.
// Fan construction: cone the lexicographically least point (always a
// vertex) over the triangulations of the facets that do not contain it.
std::vector<std::vector<int>> triangulate_chart(const std::vector<RatVec>& pts, int k) {
  const int count = static_cast<int>(pts.size());
  if (k == 0) return {{0}};
  if (k == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < count; ++i) {
      if (lex_less(pts[i], pts[lo])) lo = i;
      if (lex_less(pts[hi], pts[i])) hi = i;
    }
    return {{lo, hi}};
  }

  int base = 0;
  for (int i = 1; i < count; ++i)
    if (lex_less(pts[i], pts[base])) base = i;

  // Brute-force facet enumeration: every k-subset spanning a hyperplane
  // with all points on one side.
  std::vector<std::vector<int>> facet_sets;
  std::vector<int> pick(k);
  auto consider = [&]() {
    RatMat diffs(k - 1, k);
    for (int i = 1; i < k; ++i)
      diffs.row(i - 1) = (pts[pick[i]] - pts[pick[0]]).transpose();
    auto normal = nullspace_direction<Rat>(std::move(diffs));
    if (!normal) return;
    Rat c = normal->dot(pts[pick[0]]);
    bool above = true, below = true;
    for (int i = 0; i < count; ++i) {
      Rat s = normal->dot(pts[i]);
      if (s < c) above = false;
      if (s > c) below = false;
      if (!above && !below) return;
    }
    std::vector<int> active;
    for (int i = 0; i < count; ++i)
      if (normal->dot(pts[i]) == c) active.push_back(i);
    if (std::find(facet_sets.begin(), facet_sets.end(), active) == facet_sets.end())
      facet_sets.push_back(std::move(active));
  };
  auto run = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      consider();
      return;
    }
    for (int i = start; i <= count - (k - depth); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  run(run, 0, 0);

  std::vector<std::vector<int>> simplices;
  for (const std::vector<int>& active : facet_sets) {
    if (std::find(active.begin(), active.end(), base) != active.end()) continue;
    std::vector<RatVec> facet_pts;
    facet_pts.reserve(active.size());
    for (int idx : active) facet_pts.push_back(pts[idx]);
    std::vector<RatVec> chart = to_affine_chart(facet_pts, k - 1);
    for (const std::vector<int>& sub : triangulate_chart(chart, k - 1)) {
      std::vector<int> simplex{base};
      for (int local : sub) simplex.push_back(active[local]);
      simplices.push_back(std::move(simplex));
    }
  }
  return simplices;
}

}  // namespace

Rat polytope_volume(int dim, const std::vector<RatVec>& vertices,
                    const std::vector<HalfSpace>& constraints, int* simplices) {
  if (simplices) *simplices = 0;
  if (affine_rank(vertices) < dim) return Rat(0);

  std::vector<RatVec> verts = vertices;  // lex sorted by the enumerator
  const RatVec& base = verts.front();

  Rat total = 0;
  std::vector<std::vector<std::size_t>> seen_facets;
  for (const HalfSpace& h : constraints) {
    if (h.normal.dot(base) == h.offset) continue;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (h.normal.dot(verts[i]) == h.offset) active.push_back(i);
    if (active.size() < static_cast<std::size_t>(dim)) continue;
    std::vector<RatVec> facet_pts;
    for (std::size_t i : active) facet_pts.push_back(verts[i]);
    if (affine_rank(facet_pts) != dim - 1) continue;
    if (std::find(seen_facets.begin(), seen_facets.end(), active) != seen_facets.end())
      continue;
    seen_facets.push_back(active);

    std::vector<RatVec> chart = to_affine_chart(facet_pts, dim - 1);
    for (const std::vector<int>& tri : triangulate_chart(chart, dim - 1)) {
      RatMat edges(dim, dim);
      for (int i = 0; i < dim; ++i)
        edges.row(i) = (facet_pts[tri[i]] - base).transpose();
      Rat d = det_of<Rat>(std::move(edges));
      if (d < 0) d = -d;
      total += d;
      if (simplices) ++*simplices;
    }
  }
  return total / factorial(dim);
}

}  // namespace detail

namespace {

std::vector<detail::HalfSpace> clipped_hrep(const NewtonPolyhedron& gamma, const Rat& box) {
  const int n = gamma.dim();
  std::vector<detail::HalfSpace> cons;
  for (const Facet& f : gamma.facets()) cons.push_back({f.normal, f.offset});
  for (int i = 0; i < n; ++i) {
    RatVec e = RatVec::Zero(n);
    e(i) = 1;
    cons.push_back({e, Rat(0)});
    cons.push_back({RatVec(-e), Rat(-box)});
  }
  return cons;
}

Rat pow_rat(const Rat& x, int n) {
  Rat r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

CovolResult covol(const NewtonPolyhedron& gamma) {
  if (!covol_finite(gamma))
    return {ExtRat::infinity(), ExtRat::infinity(), 0};

  const int n = gamma.dim();
  Rat box = 0;
  for (int k = 0; k < n; ++k) box = std::max(box, *axis_intercept(gamma, k));
  if (box == 0)  // origin is a vertex: Gamma is the whole orthant
    return {Rat(0), Rat(0), 0};

  auto cons = clipped_hrep(gamma, box);
  auto verts = detail::enumerate_vertices(n, cons);
  int simplices = 0;
  Rat inner = detail::polytope_volume(n, verts, cons, &simplices);
  Rat value = pow_rat(box, n) - inner;
  return {value, Rat(value * factorial(n)), simplices};
}

MixedCovolResult mixed_covol(const std::vector<NewtonPolyhedron>& slots) {
  if (slots.empty()) throw DomainError("mixed_covol: empty slot list");
  const int n = slots.front().dim();
  for (const NewtonPolyhedron& g : slots)
    if (g.dim() != n) throw DomainError("mixed_covol: dimension mismatch");
  if (static_cast<int>(slots.size()) != n)
    throw DomainError("mixed_covol: expected exactly " + std::to_string(n) +
                      " slots for dimension " + std::to_string(n));

  // Minkowski sums per subset, built incrementally by lowest set bit.
  std::vector<NewtonPolyhedron> sums(std::size_t(1) << n, NewtonPolyhedron(n));
  Rat acc = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned low = mask & (mask - 1);
    int low_bit = std::countr_zero(mask);
    sums[mask] = low == 0 ? slots[low_bit] : trop_mul(sums[low], slots[low_bit]);

    CovolResult c = covol(sums[mask]);
    if (!c.finite()) {
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) subset.push_back(i);
      return {ExtRat::infinity(), subset};
    }
    int sign = (n - std::popcount(mask)) % 2 == 0 ? 1 : -1;
    acc += sign * c.value.value();
  }
  return {Rat(acc / factorial(n)), std::nullopt};
}

NewtonPolyhedron map_polyhedron(const MapSpec& f) {
  NewtonPolyhedron g(f.dim());
  for (const GermSupport& comp : f.components()) g = trop_add(g, from_support(comp));
  return g;
}

ExtRat kushnirenko_bound(const MapSpec& f) {
  return covol(map_polyhedron(f)).value * factorial(f.dim());
}

ExtRat bernstein_bound(const MapSpec& f) {
  std::vector<NewtonPolyhedron> slots;
  slots.reserve(f.components().size());
  for (const GermSupport& comp : f.components()) slots.push_back(from_support(comp));
  return mixed_covol(slots).value * factorial(f.dim());
}

ExtRat monomial_map_multiplicity(const MapSpec& f) {
  const int n = f.dim();
  RatMat j(n, n);
  for (int i = 0; i < n; ++i) {
    const GermSupport& comp = f.components()[i];
    if (comp.points().size() != 1)
      throw DomainError("monomial_map_multiplicity: component " + std::to_string(i + 1) +
                        " is not a monomial");
    j.row(i) = comp.points()[0].transpose();
  }
  Rat d = det_of<Rat>(std::move(j));
  if (d == 0) return ExtRat::infinity();
  return d < 0 ? Rat(-d) : d;
}

}  // namespace tropsing
