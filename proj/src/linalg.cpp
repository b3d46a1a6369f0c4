#include "tropsing/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>

namespace tropsing {

RatVec primitive(const RatVec& v) {
  Int lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v(i)));
  Int gcd_num = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    gcd_num = boost::multiprecision::gcd(gcd_num, Int(numerator(v(i)) * (lcm_den / denominator(v(i)))));
  if (gcd_num == 0) return v;  // zero vector: already canonical
  Rat factor = Rat(lcm_den) / Rat(gcd_num);
  RatVec out = v * factor;
  return out;
}

void sort_lex(std::vector<RatVec>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
}

}  // namespace tropsing
