#include "tropsing/polyhedron.hpp"

#include "tropsing/linalg.hpp"
#include "tropsing/lp.hpp"

#include <algorithm>
#include <cassert>

namespace tropsing {

namespace {

// Membership of p in conv(points) + R_+^n without constructing a
// polyhedron: cheap dominance filters first, then the feasibility LP
//   sum_v lambda_v v + s = p,  sum_v lambda_v = 1,  lambda >= 0, s >= 0.
bool member_of(const std::vector<RatVec>& points, const RatVec& p) {
  if (points.empty()) return false;
  const int n = static_cast<int>(p.size());
  const int k = static_cast<int>(points.size());

  for (const RatVec& v : points) {
    bool dominates = true;
    for (int i = 0; i < n && dominates; ++i) dominates = v(i) <= p(i);
    if (dominates) return true;
  }
  for (int i = 0; i < n; ++i) {
    bool below_all = true;
    for (const RatVec& v : points)
      if (v(i) <= p(i)) { below_all = false; break; }
    if (below_all) return false;
  }

  lp::LinearProgram prog(k + n);
  for (int i = 0; i < n; ++i) {
    RatVec row = RatVec::Zero(k + n);
    for (int j = 0; j < k; ++j) row(j) = points[j](i);
    row(k + i) = 1;
    prog.add_eq(row, p(i));
  }
  RatVec ones = RatVec::Zero(k + n);
  ones.head(k).setConstant(1);
  prog.add_eq(ones, 1);
  return prog.feasible();
}

std::vector<RatVec> minimal_vertices(int dim, std::vector<RatVec> points) {
  for (const RatVec& p : points) {
    if (p.size() != dim) throw DomainError("NewtonPolyhedron: point dimension mismatch");
    for (Eigen::Index i = 0; i < p.size(); ++i)
      if (p(i) < 0) throw DomainError("NewtonPolyhedron: negative coordinate");
  }
  sort_lex(points);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const RatVec& a, const RatVec& b) { return a == b; }),
               points.end());
  // Componentwise domination is a cheap special case of membership.
  std::vector<RatVec> kept;
  for (const RatVec& p : points) {
    bool dominated = false;
    for (const RatVec& q : points) {
      if (&q == &p) continue;
      bool le = true, strict = false;
      for (Eigen::Index i = 0; i < p.size() && le; ++i) {
        le = q(i) <= p(i);
        strict = strict || q(i) < p(i);
      }
      if (le && strict) { dominated = true; break; }
    }
    if (!dominated) kept.push_back(p);
  }
  // Removing a redundant point never makes another point irredundant, so a
  // single sweep yields the order-independent minimal set.
  std::vector<RatVec> result;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<RatVec> others;
    others.reserve(kept.size() - 1 + result.size());
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (!member_of(others, kept[i])) result.push_back(kept[i]);
  }
  return result;
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(int dim)
    : dim_(dim), cache_(std::make_shared<FacetCache>()) {
  if (dim < 1) throw DomainError("NewtonPolyhedron: dimension must be >= 1");
}

NewtonPolyhedron NewtonPolyhedron::from_points(int dim, std::vector<RatVec> points) {
  NewtonPolyhedron g(dim);
  g.vertices_ = minimal_vertices(dim, std::move(points));
  return g;
}

NewtonPolyhedron NewtonPolyhedron::unit(int dim) {
  NewtonPolyhedron g(dim);
  g.vertices_.push_back(RatVec::Zero(dim));
  return g;
}

bool NewtonPolyhedron::contains_origin() const {
  return !vertices_.empty() && vertices_.front().isZero();
}

bool NewtonPolyhedron::operator==(const NewtonPolyhedron& o) const {
  if (dim_ != o.dim_ || vertices_.size() != o.vertices_.size()) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] != o.vertices_[i]) return false;
  return true;
}

NewtonPolyhedron from_support(const GermSupport& u) {
  return NewtonPolyhedron::from_points(u.dim(), u.points());
}

bool member(const NewtonPolyhedron& gamma, const RatVec& p) {
  if (p.size() != gamma.dim()) throw DomainError("member: dimension mismatch");
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) < 0) return false;
  return member_of(gamma.vertices(), p);
}

NewtonPolyhedron reduce(int dim, std::vector<RatVec> points) {
  return NewtonPolyhedron::from_points(dim, std::move(points));
}

NewtonPolyhedron trop_add(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
  if (a.dim() != b.dim()) throw DomainError("trop_add: dimension mismatch");
  std::vector<RatVec> pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  return NewtonPolyhedron::from_points(a.dim(), std::move(pts));
}

NewtonPolyhedron trop_mul(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
  if (a.dim() != b.dim()) throw DomainError("trop_mul: dimension mismatch");
  if (a.empty() || b.empty()) return NewtonPolyhedron(a.dim());  // zero annihilates
  std::vector<RatVec> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const RatVec& va : a.vertices())
    for (const RatVec& vb : b.vertices()) sums.push_back(va + vb);
  return NewtonPolyhedron::from_points(a.dim(), std::move(sums));
}

NewtonPolyhedron scale(const NewtonPolyhedron& gamma, const Rat& c) {
  if (c <= 0) throw DomainError("scale: factor must be positive");
  std::vector<RatVec> pts;
  pts.reserve(gamma.vertices().size());
  for (const RatVec& v : gamma.vertices()) pts.push_back(v * c);
  // Scaling preserves minimality; from_points re-checks anyway for safety
  // at negligible cost.
  return NewtonPolyhedron::from_points(gamma.dim(), std::move(pts));
}

ExtRat support_value(const NewtonPolyhedron& gamma, const RatVec& t) {
  if (t.size() != gamma.dim()) throw DomainError("support_value: dimension mismatch");
  for (Eigen::Index i = 0; i < t.size(); ++i)
    if (t(i) > 0)
      throw DomainError("support_value: argument must be componentwise <= 0");
  if (gamma.empty()) return ExtRat::neg_infinity();
  Rat best = t.dot(gamma.vertices().front());
  for (const RatVec& v : gamma.vertices()) best = std::max(best, Rat(t.dot(v)));
  return best;
}

ExtRat directional_number(const NewtonPolyhedron& gamma, const RatVec& a) {
  if (a.size() != gamma.dim()) throw DomainError("directional_number: dimension mismatch");
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) <= 0)
      throw DomainError("directional_number: weight must be strictly positive");
  if (gamma.empty()) return ExtRat::infinity();
  Rat best = a.dot(gamma.vertices().front());
  for (const RatVec& v : gamma.vertices()) best = std::min(best, Rat(a.dot(v)));
  return best;
}

std::optional<Rat> axis_intercept(const NewtonPolyhedron& gamma, int axis) {
  if (axis < 0 || axis >= gamma.dim()) throw DomainError("axis_intercept: bad axis");
  for (const RatVec& v : gamma.vertices()) {
    bool on_axis = true;
    for (Eigen::Index i = 0; i < v.size() && on_axis; ++i)
      if (i != axis && v(i) != 0) on_axis = false;
    if (on_axis) return v(axis);
  }
  return std::nullopt;
}

bool covol_finite(const NewtonPolyhedron& gamma) {
  if (gamma.empty()) return false;
  for (int k = 0; k < gamma.dim(); ++k)
    if (!axis_intercept(gamma, k)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// V -> H conversion.
//
// Valid inequalities <a,x> >= -delta on Gamma form the polyhedral cone
//   D = {(a, delta) : <a,v> + delta >= 0 for all vertices v, a >= 0}
// in R^{n+1} (the recession cone of Gamma is always R_+^n, giving a >= 0).
// D is pointed when Gamma is nonempty, and its extreme rays are exactly
// the facets of Gamma together with the trivial ray (0, 1) and the orthant
// facets (e_k, 0).  The double description method below enumerates those
// rays from the homogenized constraint matrix.
// ---------------------------------------------------------------------------

namespace {

struct Ray {
  RatVec dir;   // primitive
  RatVec vals;  // evaluations against every constraint row
};

bool adjacent(const std::vector<Ray>& rays, std::size_t r1, std::size_t r2,
              const std::vector<int>& processed) {
  for (std::size_t r3 = 0; r3 < rays.size(); ++r3) {
    if (r3 == r1 || r3 == r2) continue;
    bool covers = true;
    for (int idx : processed) {
      if (rays[r1].vals(idx) == 0 && rays[r2].vals(idx) == 0 &&
          rays[r3].vals(idx) != 0) {
        covers = false;
        break;
      }
    }
    if (covers) return false;
  }
  return true;
}

// Extreme rays of {y : M y >= 0}; requires the cone to be pointed
// (rank(M) = full column dimension).
std::vector<RatVec> extreme_rays(const RatMat& m) {
  const int d = static_cast<int>(m.cols());
  const int rows = static_cast<int>(m.rows());

  // Initial simplicial cone from d linearly independent rows.
  std::vector<int> base;
  {
    RatMat acc(0, d);
    for (int i = 0; i < rows && static_cast<int>(base.size()) < d; ++i) {
      RatMat trial(acc.rows() + 1, d);
      trial.topRows(acc.rows()) = acc;
      trial.row(acc.rows()) = m.row(i);
      if (rank_of<Rat>(trial) == trial.rows()) {
        acc = trial;
        base.push_back(i);
      }
    }
    if (static_cast<int>(base.size()) < d)
      throw std::logic_error("extreme_rays: cone is not pointed");
  }

  RatMat mb(d, d);
  for (int i = 0; i < d; ++i) mb.row(i) = m.row(base[i]);
  // Columns of mb^{-1} generate the initial cone: mb * col_j = e_j >= 0.
  RatMat inv(d, d);
  for (int j = 0; j < d; ++j) {
    RatVec e = RatVec::Zero(d);
    e(j) = 1;
    auto col = solve_unique<Rat>(mb, e);
    assert(col);
    inv.col(j) = *col;
  }

  auto make_ray = [&](const RatVec& dir) {
    Ray r;
    r.dir = primitive(dir);
    r.vals = m * r.dir;
    return r;
  };

  std::vector<Ray> rays;
  for (int j = 0; j < d; ++j) rays.push_back(make_ray(inv.col(j)));
  std::vector<int> processed = base;

  for (int i = 0; i < rows; ++i) {
    if (std::find(processed.begin(), processed.end(), i) != processed.end()) continue;
    std::vector<std::size_t> plus, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (rays[r].vals(i) > 0) plus.push_back(r);
      if (rays[r].vals(i) < 0) minus.push_back(r);
    }
    if (minus.empty()) {
      processed.push_back(i);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (rays[r].vals(i) >= 0) next.push_back(rays[r]);
    for (std::size_t rp : plus) {
      for (std::size_t rm : minus) {
        if (!adjacent(rays, rp, rm, processed)) continue;
        RatVec combo =
            rays[rp].vals(i) * rays[rm].dir - rays[rm].vals(i) * rays[rp].dir;
        Ray fresh = make_ray(combo);
        bool dup = false;
        for (const Ray& r : next)
          if (r.dir == fresh.dir) { dup = true; break; }
        if (!dup) next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
    processed.push_back(i);
  }

  std::vector<RatVec> out;
  out.reserve(rays.size());
  for (Ray& r : rays) out.push_back(std::move(r.dir));
  return out;
}

std::vector<Facet> compute_facets(int dim, const std::vector<RatVec>& vertices) {
  const int d = dim + 1;
  RatMat m(static_cast<int>(vertices.size()) + dim, d);
  int row = 0;
  for (const RatVec& v : vertices) {
    m.row(row).head(dim) = v.transpose();
    m(row, dim) = 1;
    ++row;
  }
  for (int k = 0; k < dim; ++k) {
    m.row(row).setZero();
    m(row, k) = 1;
    ++row;
  }

  std::vector<Facet> facets;
  for (const RatVec& ray : extreme_rays(m)) {
    const Rat& delta = ray(dim);
    if (delta >= 0) continue;           // trivial ray or orthant facet
    bool zero_normal = true;
    for (int k = 0; k < dim && zero_normal; ++k) zero_normal = ray(k) == 0;
    if (zero_normal) continue;
    Facet f;
    f.normal = ray.head(dim);
    f.offset = -delta;
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    return lex_less(a.normal, b.normal);
  });
  return facets;
}

}  // namespace

const std::vector<Facet>& NewtonPolyhedron::facets() const {
  if (empty()) throw PreconditionError("facets: polyhedron is empty");
  std::call_once(cache_->once, [this] {
    cache_->facets = compute_facets(dim_, vertices_);
  });
  return cache_->facets;
}

}  // namespace tropsing
