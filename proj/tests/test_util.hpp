// Shared helpers for the test suites: literal vector builders and seeded
// random generators for supports, polyhedra and weights.

#ifndef TROPSING_TESTS_TEST_UTIL_HPP
#define TROPSING_TESTS_TEST_UTIL_HPP

#include "tropsing/invariants.hpp"
#include "tropsing/polyhedron.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace tst {

inline tropsing::RatVec rv(std::initializer_list<tropsing::Rat> vals) {
  tropsing::RatVec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (const tropsing::Rat& r : vals) v(i++) = r;
  return v;
}

inline std::vector<tropsing::RatVec> pts(std::initializer_list<std::initializer_list<tropsing::Rat>> rows) {
  std::vector<tropsing::RatVec> out;
  for (const auto& r : rows) out.push_back(rv(r));
  return out;
}

inline tropsing::NewtonPolyhedron poly(int dim,
                                       std::initializer_list<std::initializer_list<tropsing::Rat>> rows) {
  return tropsing::NewtonPolyhedron::from_points(dim, pts(rows));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

  tropsing::Rat rat(int max_num = 9, int max_den = 4) {
    return tropsing::Rat(uniform(0, max_num), uniform(1, max_den));
  }

  tropsing::Rat positive_rat(int max_num = 6, int max_den = 3) {
    return tropsing::Rat(uniform(1, max_num), uniform(1, max_den));
  }

  tropsing::RatVec point(int dim, int max_num = 9, int max_den = 4) {
    tropsing::RatVec p(dim);
    for (int i = 0; i < dim; ++i) p(i) = rat(max_num, max_den);
    return p;
  }

  /// Nonempty random polyhedron; optionally guarantees finite covolume by
  /// adding an axis vertex per axis, and keeps the origin out.
  tropsing::NewtonPolyhedron polyhedron(int dim, int max_points,
                                        bool finite_covol = false,
                                        bool exclude_origin = true) {
    std::vector<tropsing::RatVec> p;
    int count = uniform(1, max_points);
    for (int i = 0; i < count; ++i) {
      tropsing::RatVec v = point(dim);
      if (exclude_origin && v.isZero()) v(uniform(0, dim - 1)) = positive_rat();
      p.push_back(v);
    }
    if (finite_covol) {
      for (int k = 0; k < dim; ++k) {
        tropsing::RatVec axis = tropsing::RatVec::Zero(dim);
        axis(k) = positive_rat(9, 3);
        p.push_back(axis);
      }
    }
    return tropsing::NewtonPolyhedron::from_points(dim, std::move(p));
  }

  tropsing::Weight weight(int dim, int max_num = 6, int max_den = 3) {
    tropsing::RatVec a(dim);
    for (int i = 0; i < dim; ++i) a(i) = positive_rat(max_num, max_den);
    return tropsing::Weight(a);
  }

  tropsing::RatVec nonpositive(int dim, int max_num = 6, int max_den = 3) {
    tropsing::RatVec t(dim);
    for (int i = 0; i < dim; ++i) t(i) = -rat(max_num, max_den);
    return t;
  }

  std::mt19937_64& gen() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tst

#endif  // TROPSING_TESTS_TEST_UTIL_HPP
