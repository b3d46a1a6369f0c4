#include "tropsing/dequant.hpp"

#include "tropsing/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <limits>
#include <numbers>

namespace tropsing::dequant {

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

// Phase vector for (seed, key, phase, coordinate): purely counter-based,
// so samples are keyed by content rather than completion order.
double phase_at(std::uint64_t seed, std::uint64_t key, int phase, int coord) {
  std::uint64_t h = splitmix64(seed ^ splitmix64(key * 0x100000001B3ull +
                                                 static_cast<std::uint64_t>(phase) * 131 +
                                                 static_cast<std::uint64_t>(coord)));
  return 2.0 * std::numbers::pi * unit_double(h);
}

// Samples are keyed by the content of (t, m), never by call order.
std::uint64_t sample_key(const Eigen::VectorXd& t, int m) {
  std::uint64_t key = static_cast<std::uint64_t>(m) * 0x9E3779B97F4A7C15ull;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    std::uint64_t bits;
    double v = t(i);
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, sizeof(bits));
    key = splitmix64(key ^ bits);
  }
  return key;
}

DequantSample sample_keyed(const GermSupport& f, const Eigen::VectorXd& t, int m,
                           int phases, std::uint64_t seed, std::uint64_t key) {
  if (!f.has_coeffs())
    throw PreconditionError("sample_Tm: coefficients required");
  if (f.empty()) throw PreconditionError("sample_Tm: zero germ");
  if (m < 1) throw DomainError("sample_Tm: m must be >= 1");
  if (phases < 1) throw DomainError("sample_Tm: phases must be >= 1");
  if (t.size() != f.dim()) throw DomainError("sample_Tm: dimension mismatch");
  for (Eigen::Index i = 0; i < t.size(); ++i)
    if (!(t(i) < 0)) throw DomainError("sample_Tm: t must be strictly negative");

  const int n = f.dim();
  const std::size_t terms = f.points().size();
  std::vector<Eigen::VectorXd> exponents(terms);
  std::vector<std::complex<double>> coeffs(terms);
  std::vector<double> log_mag(terms);  // m<t,J> + log|c_J|
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < terms; ++j) {
    Eigen::VectorXd jv(n);
    for (int i = 0; i < n; ++i) jv(i) = rat_to_double(f.points()[j](i));
    exponents[j] = std::move(jv);
    coeffs[j] = f.coeffs()[j].to_complex();
    log_mag[j] = m * exponents[j].dot(t) + std::log(std::abs(coeffs[j]));
    peak = std::max(peak, log_mag[j]);
  }

  // |f| = e^peak |sum_J u_J e^{log_mag_J - peak} e^{i m <theta, J>}| with
  // unimodular u_J: the dominant term is rescaled to magnitude one, so no
  // underflow can zero it out.
  double best = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd theta(n);
  for (int p = 0; p < phases; ++p) {
    for (int i = 0; i < n; ++i) theta(i) = phase_at(seed, key, p, i);
    std::complex<double> sum = 0;
    for (std::size_t j = 0; j < terms; ++j) {
      double arg = m * theta.dot(exponents[j]);
      std::complex<double> unit = coeffs[j] / std::abs(coeffs[j]);
      sum += unit * std::exp(log_mag[j] - peak) *
             std::complex<double>(std::cos(arg), std::sin(arg));
    }
    double mag = std::abs(sum);
    if (mag > 0) best = std::max(best, (peak + std::log(mag)) / m);
  }
  if (best == -std::numeric_limits<double>::infinity())
    throw PreconditionError("sample_Tm: all sampled values are exact zeros");

  DequantSample s;
  s.m = m;
  s.t = t;
  s.theta_count = phases;
  s.value = best;
  return s;
}

}  // namespace

DequantSample sample_Tm(const GermSupport& f, const Eigen::VectorXd& t, int m,
                        int phases, std::uint64_t seed) {
  return sample_keyed(f, t, m, phases, seed, sample_key(t, m));
}

ConvergenceReport convergence_report(const GermSupport& f,
                                     const std::vector<Eigen::VectorXd>& grid,
                                     const std::vector<int>& m_schedule, int phases,
                                     std::uint64_t seed, double tolerance, double slack) {
  for (std::size_t i = 1; i < m_schedule.size(); ++i)
    if (m_schedule[i] <= m_schedule[i - 1])
      throw DomainError("convergence_report: m schedule must be increasing");
  if (grid.empty() || m_schedule.empty())
    throw DomainError("convergence_report: empty grid or schedule");

  NewtonPolyhedron gamma = from_support(f);

  ConvergenceReport rep;
  rep.tolerance = tolerance;
  rep.slack = slack;
  rep.pass = true;

  for (std::size_t ti = 0; ti < grid.size(); ++ti) {
    const Eigen::VectorXd& t = grid[ti];
    RatVec t_exact(t.size());
    for (Eigen::Index i = 0; i < t.size(); ++i) t_exact(i) = Rat(t(i));
    const double exact = support_value(gamma, t_exact).to_double();

    std::vector<double> errors;
    for (int m : m_schedule) {
      DequantSample s = sample_Tm(f, t, m, phases, seed);
      double err = std::fabs(s.value - exact);
      errors.push_back(err);
      rep.rows.push_back({ti, t, m, s.value, exact, err});
    }
    if (errors.back() >= tolerance) rep.pass = false;
    // Growth below the machine floor is float noise, not divergence.
    const std::size_t k = errors.size();
    for (std::size_t step = k >= 3 ? k - 2 : 1; step < k; ++step)
      if (errors[step] > 1e-12 && errors[step] > slack * errors[step - 1])
        rep.pass = false;
  }
  return rep;
}

std::vector<Eigen::VectorXd> default_grid(int dim, int per_axis) {
  const double lo = -2.0, hi = -0.5;
  std::vector<Eigen::VectorXd> grid;
  std::vector<int> idx(dim, 0);
  auto value = [&](int i) {
    return per_axis == 1 ? lo : lo + (hi - lo) * i / (per_axis - 1);
  };
  for (;;) {
    Eigen::VectorXd t(dim);
    for (int i = 0; i < dim; ++i) t(i) = value(idx[i]);
    grid.push_back(t);
    int pos = dim - 1;
    while (pos >= 0 && ++idx[pos] == per_axis) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return grid;
}

}  // namespace tropsing::dequant
