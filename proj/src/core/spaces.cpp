#include "core/spaces.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/eigenbasis.hpp"

namespace catconv {

namespace {

// int_a^b r^k dr
double mono(int k, double a, double b) {
  return (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
}

// int_a^b (alpha*r + gamma) dmu
double segment_integral(double alpha, double gamma, double a, double b,
                        Measure m) {
  if (m == Measure::R)
    return alpha * mono(2, a, b) + gamma * mono(1, a, b);
  return alpha * (mono(2, a, b) - mono(4, a, b)) +
         gamma * (mono(1, a, b) - mono(3, a, b));
}

std::vector<double> hat_weights(std::span<const double> nodes, Measure m) {
  const int n = static_cast<int>(nodes.size());
  std::vector<double> w(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      const double a = nodes[i - 1], b = nodes[i], h = b - a;
      w[i] += segment_integral(1.0 / h, -a / h, a, b, m);
    }
    if (i + 1 < n) {
      const double a = nodes[i], b = nodes[i + 1], h = b - a;
      w[i] += segment_integral(-1.0 / h, b / h, a, b, m);
    }
  }
  return w;
}

void solve3x3(double A[3][3], double b[3], double x[3]) {
  int p[3] = {0, 1, 2};
  for (int c = 0; c < 3; ++c) {
    int best = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(A[p[r]][c]) > std::abs(A[p[best]][c])) best = r;
    std::swap(p[c], p[best]);
    for (int r = c + 1; r < 3; ++r) {
      const double f = A[p[r]][c] / A[p[c]][c];
      for (int k = c; k < 3; ++k) A[p[r]][k] -= f * A[p[c]][k];
      b[p[r]] -= f * b[p[c]];
    }
  }
  for (int c = 2; c >= 0; --c) {
    double s = b[p[c]];
    for (int k = c + 1; k < 3; ++k) s -= A[p[c]][k] * x[k];
    x[c] = s / A[p[c]][c];
  }
}

// Hat weights integrate piecewise linears exactly, which pins the r^0 and
// r^1 moments but leaves an O(h^2) defect in r^2. The correction below is
// the minimum-norm relative perturbation delta_i = w_i * eta_i that zeroes
// all three moment defects.
std::vector<double> corrected_weights(std::span<const double> nodes,
                                      Measure m) {
  std::vector<double> w = hat_weights(nodes, m);
  const int n = static_cast<int>(nodes.size());
  const std::vector<double> M = exact_moments(m);

  double e[3];
  for (int k = 0; k < 3; ++k) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += w[i] * std::pow(nodes[i], k);
    e[k] = M[k] - s;
  }
  double A[3][3] = {};
  for (int i = 0; i < n; ++i) {
    const double w2 = w[i] * w[i];
    double pk[5];
    pk[0] = 1.0;
    for (int k = 1; k < 5; ++k) pk[k] = pk[k - 1] * nodes[i];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) A[a][b] += w2 * pk[a + b];
  }
  double lam[3];
  solve3x3(A, e, lam);
  std::vector<double> corrected = w;
  bool ok = true;
  for (int i = 0; i < n; ++i) {
    const double eta = lam[0] + lam[1] * nodes[i] + lam[2] * nodes[i] * nodes[i];
    corrected[i] += w[i] * w[i] * eta;
    if (corrected[i] < 0.0 && corrected[i] > -1e-13) corrected[i] = 0.0;
    if (corrected[i] < 0.0) ok = false;
  }
  // strongly clustered tiny grids cannot carry the r^2 moment with
  // nonnegative weights; keep the plain hat rule there (masses and the r^1
  // moment stay exact)
  return ok ? corrected : w;
}

}  // namespace

std::vector<double> exact_moments(Measure measure) {
  if (measure == Measure::R) return {0.5, 1.0 / 3.0, 0.25};
  return {0.25, 2.0 / 15.0, 1.0 / 12.0};
}

Discretization build_discretization(int n_r, int n_z, int n_t, double T,
                                    RadialLayout layout) {
  if (n_r < 3 || n_z < 3 || n_t < 3)
    throw std::invalid_argument("build_discretization: grid counts must be >= 3");
  if (!(T > 0.0))
    throw std::invalid_argument("build_discretization: horizon T must be positive");

  Discretization d;
  d.radial_nodes.resize(n_r);
  for (int i = 0; i < n_r; ++i) {
    const double xi = static_cast<double>(i) / (n_r - 1);
    d.radial_nodes[i] = layout == RadialLayout::Uniform
                            ? xi
                            : std::sin(0.5 * std::numbers::pi * xi);
  }
  d.radial_nodes.front() = 0.0;
  d.radial_nodes.back() = 1.0;

  d.axial_nodes.resize(n_z);
  for (int k = 0; k < n_z; ++k)
    d.axial_nodes[k] = static_cast<double>(k) / (n_z - 1);
  d.time_nodes.resize(n_t);
  for (int l = 0; l < n_t; ++l)
    d.time_nodes[l] = T * static_cast<double>(l) / (n_t - 1);

  d.quad_w_r = corrected_weights(d.radial_nodes, Measure::R);
  d.quad_w_rw = corrected_weights(d.radial_nodes, Measure::RW);
  for (int i = 0; i < n_r; ++i) {
    if (d.quad_w_r[i] < 0.0 || d.quad_w_rw[i] < 0.0)
      throw std::runtime_error("build_discretization: negative quadrature weight");
  }
  return d;
}

double inner_weighted(std::span<const double> u, std::span<const double> v,
                      Measure measure, const Discretization& disc) {
  const auto& w = disc.quad(measure);
  if (u.size() != w.size() || v.size() != w.size())
    throw std::invalid_argument("inner_weighted: size mismatch with radial grid");
  double s = 0.0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * u[i] * v[i];
  return s;
}

std::vector<double> fd_derivative(std::span<const double> u,
                                  std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("fd_derivative: size mismatch");
  if (n < 3) throw std::invalid_argument("fd_derivative: need at least 3 nodes");
  std::vector<double> d(n);
  auto lag3 = [&](int ia, int ib, int ic, double t) {
    const double a = x[ia], b = x[ib], c = x[ic];
    const double wa = (2 * t - b - c) / ((a - b) * (a - c));
    const double wb = (2 * t - a - c) / ((b - a) * (b - c));
    const double wc = (2 * t - a - b) / ((c - a) * (c - b));
    return wa * u[ia] + wb * u[ib] + wc * u[ic];
  };
  d[0] = lag3(0, 1, 2, x[0]);
  for (int i = 1; i + 1 < n; ++i) d[i] = lag3(i - 1, i, i + 1, x[i]);
  d[n - 1] = lag3(n - 3, n - 2, n - 1, x[n - 1]);
  return d;
}

double norm_Wr0(std::span<const double> u, const Discretization& disc) {
  const int n = disc.n_r();
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("norm_Wr0: size mismatch with radial grid");
  double umax = 0.0;
  for (double v : u) umax = std::max(umax, std::abs(v));
  if (std::abs(u[n - 1]) > 1e-10 * std::max(umax, 1e-300))
    throw std::invalid_argument("norm_Wr0: u(1) != 0, not in the Dirichlet space");
  const std::vector<double> du = fd_derivative(u, disc.radial_nodes);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += disc.quad_w_r[i] * du[i] * du[i];
  return std::sqrt(s);
}

double dual_norm(std::span<const double> f, const EigenBasis& basis,
                 const Discretization& disc) {
  if (basis.mode_count <= 0)
    throw std::invalid_argument("dual_norm: empty basis");
  double s = 0.0;
  for (int j = 0; j < basis.mode_count; ++j) {
    const double c = inner_weighted(f, basis.eigenfunctions[j], Measure::RW, disc);
    s += c * c / basis.eigenvalues[j];
  }
  return std::sqrt(s);
}

std::vector<double> trapezoid_weights(std::span<const double> nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<double> w(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) {
    const double h = nodes[i + 1] - nodes[i];
    w[i] += 0.5 * h;
    w[i + 1] += 0.5 * h;
  }
  return w;
}

}  // namespace catconv
