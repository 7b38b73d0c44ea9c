#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "daeobs/matrix_tools.hpp"

namespace daeobs {

/// A vector-valued signal sampled on a uniform time grid. Column k of
/// `samples` is the value at t0 + k*dt.
struct TrajectoryGrid {
  double t0 = 0.0;
  double dt = 0.0;
  Mat samples;  // dim x count

  Index dim() const { return samples.rows(); }
  Index count() const { return samples.cols(); }
  Index steps() const { return samples.cols() - 1; }
  double time_at(Index k) const { return t0 + static_cast<double>(k) * dt; }
  double t_end() const { return time_at(count() - 1); }

  void validate() const;
};

using VectorSignal = std::function<Vec(double)>;

/// Analytic scalar signal recipes used for truth inputs and test noises.
struct SignalSpec {
  enum class Kind { Zero, Constant, Sinusoid, ExpCosine, Custom };
  Kind kind = Kind::Zero;
  double amplitude = 0.0;
  double frequency = 0.0;  // rad/s
  double phase = 0.0;
  double decay = 0.0;  // ExpCosine: amplitude * exp(-decay t) * cos(frequency t)
  std::vector<double> samples;  // Custom: linear interpolation on sample_dt
  double sample_dt = 0.0;

  double operator()(double t) const;
};

TrajectoryGrid sample_signal(const VectorSignal& f, Index dim, double t0,
                             double dt, Index count);

/// Grid index of time t; throws InputError if t does not land on a node.
Index grid_index(const TrajectoryGrid& g, double t);

/// Classical fixed-step RK4 for xdot = M(t) x + g(t). The callables are
/// evaluated at nodes and midpoints.
TrajectoryGrid rk4(const std::function<Mat(double)>& M, const VectorSignal& g,
                   const Vec& x0, double t0, double dt, Index steps);

/// RK4 for the LTI system xdot = A x + B u with u given analytically.
TrajectoryGrid rk4_lti(const Mat& A, const Mat& B, const VectorSignal& u,
                       const Vec& x0, double t0, double dt, Index steps);

/// RK4 for xdot = A x + B u with u sampled on a grid; midpoint values are
/// taken as averages of adjacent samples (second order in the drive term).
TrajectoryGrid rk4_lti(const Mat& A, const Mat& B, const TrajectoryGrid& u,
                       const Vec& x0);

/// Composite trapezoid of the quadratic form: integral of z(t)' W z(t) over
/// the first `intervals` grid intervals.
double trapz_quadform(const TrajectoryGrid& z, const Mat& W, Index intervals);

/// Cumulative trapezoid integral of a grid signal (same shape as input,
/// column k holds the integral up to node k).
Mat cumtrapz(const TrajectoryGrid& z);

struct SolutionTuple; // defined in dae.hpp
struct DaeTriple;
struct WeightSpec;

/// Options for synthesizing a consistent DAE solution from a random smooth
/// state trajectory (trigonometric polynomial).
struct SynthOptions {
  int harmonics = 3;
  double amplitude = 1.0;
  double max_frequency = 3.0;   // rad/s
  double noise_amplitude = 0.5; // eta
};

SolutionTuple synth_solution(const DaeTriple& d, std::uint64_t seed, double t0,
                             double dt, Index steps,
                             const SynthOptions& opts = {});

struct AdmissibleScaling {
  Vec x0F;
  TrajectoryGrid f;
  TrajectoryGrid eta;
  double rho_before = 0.0;
  double scale = 1.0;
};

/// Rescales (x0F, f, eta) so the rho norm over [0, t1] equals one exactly.
AdmissibleScaling scale_to_admissible(const Vec& x0F, const TrajectoryGrid& f,
                                      const TrajectoryGrid& eta, double t1,
                                      const WeightSpec& W);

}  // namespace daeobs
