#include "daeobs/trajectory.hpp"

#include <cmath>
#include <random>

#include "daeobs/dae.hpp"

namespace daeobs {

void TrajectoryGrid::validate() const {
  if (dt <= 0.0) throw InputError("TrajectoryGrid: dt must be positive");
  if (samples.cols() < 1) throw InputError("TrajectoryGrid: empty grid");
  if (!samples.allFinite())
    throw InputError("TrajectoryGrid: non-finite samples");
}

double SignalSpec::operator()(double t) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Constant:
      return amplitude;
    case Kind::Sinusoid:
      return amplitude * std::sin(frequency * t + phase);
    case Kind::ExpCosine:
      return amplitude * std::exp(-decay * t) * std::cos(frequency * t + phase);
    case Kind::Custom: {
      if (samples.empty()) return 0.0;
      if (sample_dt <= 0.0) throw InputError("SignalSpec: custom signal needs sample_dt > 0");
      const double s = t / sample_dt;
      const auto k = static_cast<std::ptrdiff_t>(std::floor(s));
      if (k < 0) return samples.front();
      if (k + 1 >= static_cast<std::ptrdiff_t>(samples.size())) return samples.back();
      const double w = s - static_cast<double>(k);
      return (1.0 - w) * samples[k] + w * samples[k + 1];
    }
  }
  return 0.0;
}

TrajectoryGrid sample_signal(const VectorSignal& f, Index dim, double t0,
                             double dt, Index count) {
  TrajectoryGrid g;
  g.t0 = t0;
  g.dt = dt;
  g.samples.resize(dim, count);
  for (Index k = 0; k < count; ++k) g.samples.col(k) = f(t0 + k * dt);
  return g;
}

Index grid_index(const TrajectoryGrid& g, double t) {
  const double s = (t - g.t0) / g.dt;
  const Index k = static_cast<Index>(std::llround(s));
  if (std::abs(g.t0 + k * g.dt - t) > 1e-9 * std::max(1.0, std::abs(t)))
    throw InputError("grid_index: time does not land on a grid node");
  if (k < 0 || k >= g.count())
    throw InputError("grid_index: time outside the grid");
  return k;
}

TrajectoryGrid rk4(const std::function<Mat(double)>& M, const VectorSignal& g,
                   const Vec& x0, double t0, double dt, Index steps) {
  if (dt <= 0.0) throw InputError("rk4: dt must be positive");
  TrajectoryGrid out;
  out.t0 = t0;
  out.dt = dt;
  out.samples.resize(x0.size(), steps + 1);
  Vec x = x0;
  out.samples.col(0) = x;
  for (Index k = 0; k < steps; ++k) {
    const double t = t0 + k * dt;
    const Mat M0 = M(t);
    const Mat Mh = M(t + 0.5 * dt);
    const Mat M1 = M(t + dt);
    const Vec g0 = g(t);
    const Vec gh = g(t + 0.5 * dt);
    const Vec g1 = g(t + dt);
    const Vec k1 = M0 * x + g0;
    const Vec k2 = Mh * (x + 0.5 * dt * k1) + gh;
    const Vec k3 = Mh * (x + 0.5 * dt * k2) + gh;
    const Vec k4 = M1 * (x + dt * k3) + g1;
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.samples.col(k + 1) = x;
  }
  return out;
}

TrajectoryGrid rk4_lti(const Mat& A, const Mat& B, const VectorSignal& u,
                       const Vec& x0, double t0, double dt, Index steps) {
  return rk4([&A](double) { return A; },
             [&](double t) -> Vec { return B * u(t); }, x0, t0, dt, steps);
}

TrajectoryGrid rk4_lti(const Mat& A, const Mat& B, const TrajectoryGrid& u,
                       const Vec& x0) {
  u.validate();
  const Index steps = u.steps();
  TrajectoryGrid out;
  out.t0 = u.t0;
  out.dt = u.dt;
  out.samples.resize(x0.size(), steps + 1);
  Vec x = x0;
  out.samples.col(0) = x;
  const double h = u.dt;
  for (Index k = 0; k < steps; ++k) {
    const Vec b0 = B * u.samples.col(k);
    const Vec b1 = B * u.samples.col(k + 1);
    const Vec bh = 0.5 * (b0 + b1);
    const Vec k1 = A * x + b0;
    const Vec k2 = A * (x + 0.5 * h * k1) + bh;
    const Vec k3 = A * (x + 0.5 * h * k2) + bh;
    const Vec k4 = A * (x + h * k3) + b1;
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.samples.col(k + 1) = x;
  }
  return out;
}

double trapz_quadform(const TrajectoryGrid& z, const Mat& W, Index intervals) {
  if (intervals < 0 || intervals >= z.count())
    throw InputError("trapz_quadform: interval count outside grid");
  if (W.rows() != z.dim() || W.cols() != z.dim())
    throw InputError("trapz_quadform: weight dimension mismatch");
  double acc = 0.0;
  auto q = [&](Index k) {
    const Vec v = z.samples.col(k);
    return v.dot(W * v);
  };
  for (Index k = 0; k < intervals; ++k) acc += 0.5 * z.dt * (q(k) + q(k + 1));
  return acc;
}

Mat cumtrapz(const TrajectoryGrid& z) {
  Mat out = Mat::Zero(z.dim(), z.count());
  for (Index k = 1; k < z.count(); ++k)
    out.col(k) =
        out.col(k - 1) + 0.5 * z.dt * (z.samples.col(k - 1) + z.samples.col(k));
  return out;
}

namespace {

// Random vector-valued trigonometric polynomial with analytic derivative.
struct TrigPoly {
  Mat cos_coef;  // dim x harmonics
  Mat sin_coef;
  Vec offset;
  std::vector<double> omega;

  Vec value(double t) const {
    Vec v = offset;
    for (std::size_t j = 0; j < omega.size(); ++j)
      v += cos_coef.col(j) * std::cos(omega[j] * t) +
           sin_coef.col(j) * std::sin(omega[j] * t);
    return v;
  }
  Vec derivative(double t) const {
    Vec v = Vec::Zero(offset.size());
    for (std::size_t j = 0; j < omega.size(); ++j)
      v += omega[j] * (-cos_coef.col(j) * std::sin(omega[j] * t) +
                        sin_coef.col(j) * std::cos(omega[j] * t));
    return v;
  }
};

TrigPoly random_trig_poly(std::mt19937_64& rng, Index dim, int harmonics,
                          double amplitude, double max_frequency) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> freq(0.1, max_frequency);
  TrigPoly tp;
  tp.cos_coef.resize(dim, harmonics);
  tp.sin_coef.resize(dim, harmonics);
  tp.offset.resize(dim);
  for (Index i = 0; i < dim; ++i) tp.offset(i) = amplitude * gauss(rng);
  for (int j = 0; j < harmonics; ++j) {
    tp.omega.push_back(freq(rng));
    for (Index i = 0; i < dim; ++i) {
      tp.cos_coef(i, j) = amplitude * gauss(rng);
      tp.sin_coef(i, j) = amplitude * gauss(rng);
    }
  }
  return tp;
}

}  // namespace

SolutionTuple synth_solution(const DaeTriple& d, std::uint64_t seed, double t0,
                             double dt, Index steps, const SynthOptions& opts) {
  d.validate();
  std::mt19937_64 rng(seed);
  const TrigPoly x_poly = random_trig_poly(rng, d.n(), opts.harmonics,
                                           opts.amplitude, opts.max_frequency);
  const TrigPoly eta_poly = random_trig_poly(
      rng, d.p(), opts.harmonics, opts.noise_amplitude, opts.max_frequency);

  SolutionTuple s;
  s.x = sample_signal([&](double t) { return x_poly.value(t); }, d.n(), t0, dt,
                      steps + 1);
  // f := d(Fx)/dt - Ax, exact by construction
  s.f = sample_signal(
      [&](double t) -> Vec {
        return d.F * x_poly.derivative(t) - d.A * x_poly.value(t);
      },
      d.m(), t0, dt, steps + 1);
  s.eta = sample_signal([&](double t) { return eta_poly.value(t); }, d.p(), t0,
                        dt, steps + 1);
  s.y = s.eta;
  s.y.samples += d.H * s.x.samples;
  return s;
}

AdmissibleScaling scale_to_admissible(const Vec& x0F, const TrajectoryGrid& f,
                                      const TrajectoryGrid& eta, double t1,
                                      const WeightSpec& W) {
  AdmissibleScaling out;
  out.rho_before = rho(x0F, f, eta, t1, W);
  if (out.rho_before <= 0.0)
    throw InputError("scale_to_admissible: rho is zero, nothing to scale");
  out.scale = 1.0 / std::sqrt(out.rho_before);
  out.x0F = out.scale * x0F;
  out.f = f;
  out.f.samples *= out.scale;
  out.eta = eta;
  out.eta.samples *= out.scale;
  return out;
}

}  // namespace daeobs
