#include "tropsing/invariants.hpp"

#include "tropsing/covolume.hpp"
#include "tropsing/lp.hpp"

#include <algorithm>

namespace tropsing {

ExtRat lelong_number(const NewtonPolyhedron& gamma) {
  if (gamma.empty()) return ExtRat::infinity();
  return directional_number(gamma, RatVec::Constant(gamma.dim(), Rat(1)));
}

NewtonPolyhedron directional_weight_polyhedron(const Weight& a) {
  const int n = a.dim();
  std::vector<RatVec> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) {
    RatVec v = RatVec::Zero(n);
    v(k) = 1 / a.coords()(k);
    pts.push_back(std::move(v));
  }
  return NewtonPolyhedron::from_points(n, std::move(pts));
}

RelativeType relative_type(const NewtonPolyhedron& gamma_u,
                           const NewtonPolyhedron& gamma_psi) {
  if (gamma_u.dim() != gamma_psi.dim())
    throw DomainError("relative_type: dimension mismatch");
  if (!covol_finite(gamma_psi))
    throw PreconditionError(
        "relative_type: weight not maximal (indicator not locally bounded off 0: "
        "infinite covolume)");
  if (gamma_psi.contains_origin())
    throw PreconditionError("relative_type: weight not maximal (weight is nonsingular)");

  if (gamma_u.empty()) return {ExtRat::infinity(), {}};

  // Per vertex J of Gamma_u: min <a, J> over the LP closure of
  // A_Psi = {a >= 0 : <a, w> >= 1 for every vertex w of Gamma_Psi}.
  const int n = gamma_u.dim();
  const auto& w = gamma_psi.vertices();
  RelativeType out{ExtRat::infinity(), {}};
  for (const RatVec& j : gamma_u.vertices()) {
    lp::LinearProgram prog(n);
    for (const RatVec& wv : w) prog.add_ge(wv, Rat(1));
    lp::Result res = prog.minimize(j);
    if (!res.optimal())
      throw std::logic_error("relative_type: LP unexpectedly not optimal");
    out.certificates.push_back({j, res.x, res.value});
    out.sigma = min(out.sigma, ExtRat(res.value));
  }
  return out;
}

ExtRat weighted_directional_lelong(const NewtonPolyhedron& gamma_u, const Weight& a) {
  if (gamma_u.empty())
    throw PreconditionError("weighted_directional_lelong: empty polyhedron");
  Rat product = 1;
  for (Eigen::Index i = 0; i < a.coords().size(); ++i) product *= a.coords()(i);
  return directional_number(gamma_u, a.coords()) * Rat(1 / product);
}

namespace {

// max t  s.t.  <v, a> - t >= 0 for every vertex v, sum a = 1, a >= 0.
lp::Result lambda_lp(const NewtonPolyhedron& gamma) {
  const int n = gamma.dim();
  lp::LinearProgram prog(n + 1);  // variables (a_1..a_n, t), all >= 0
  for (const RatVec& v : gamma.vertices()) {
    RatVec row(n + 1);
    row.head(n) = v;
    row(n) = -1;
    prog.add_ge(row, Rat(0));
  }
  RatVec simplex = RatVec::Constant(n + 1, Rat(1));
  simplex(n) = 0;
  prog.add_eq(simplex, Rat(1));
  RatVec cost = RatVec::Zero(n + 1);
  cost(n) = 1;
  lp::Result res = prog.maximize(cost);
  if (!res.optimal()) throw std::logic_error("lambda LP unexpectedly not optimal");
  return res;
}

}  // namespace

ExtRat lambda_indicator(const NewtonPolyhedron& gamma) {
  if (gamma.empty()) return ExtRat::infinity();
  if (gamma.contains_origin()) return Rat(0);
  return lambda_lp(gamma).value;
}

RatVec lambda_optimizer(const NewtonPolyhedron& gamma) {
  if (gamma.empty() || gamma.contains_origin())
    throw PreconditionError("lambda_optimizer: polyhedron must be nonempty and singular");
  return lambda_lp(gamma).x.head(gamma.dim());
}

ExtRat lct(const NewtonPolyhedron& gamma) {
  if (gamma.empty()) return Rat(0);
  if (gamma.contains_origin()) return ExtRat::infinity();
  return Rat(1 / lambda_indicator(gamma).value());
}

Rat diagonal_entry_via_facets(const NewtonPolyhedron& gamma) {
  if (gamma.empty()) throw PreconditionError("diagonal_entry_via_facets: empty polyhedron");
  Rat best = 0;
  for (const Facet& f : gamma.facets()) best = std::max(best, Rat(f.offset / f.normal.sum()));
  return best;
}

InvariantReport analyze(const NewtonPolyhedron& gamma, const std::vector<Weight>& weights) {
  InvariantReport r;
  r.dim = gamma.dim();
  r.empty = gamma.empty();
  r.nonsingular = gamma.contains_origin();
  r.lelong = lelong_number(gamma);
  for (const Weight& w : weights) {
    if (w.dim() != gamma.dim()) throw DomainError("analyze: weight dimension mismatch");
    r.directional.emplace_back(w.coords(), gamma.empty()
                                               ? ExtRat::infinity()
                                               : directional_number(gamma, w.coords()));
  }
  r.lambda = lambda_indicator(gamma);
  r.log_canonical_threshold = lct(gamma);
  CovolResult c = covol(gamma);
  r.covolume = c.value;
  r.kushnirenko = c.value * factorial(gamma.dim());
  return r;
}

}  // namespace tropsing
