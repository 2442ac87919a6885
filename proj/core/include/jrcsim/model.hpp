#ifndef JRCSIM_MODEL_HPP
#define JRCSIM_MODEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

#include "jrcsim/config.hpp"

namespace jrcsim {

using cxd = std::complex<double>;

/// Clustered narrowband channel realization with its path parameters.
struct CommChannel {
    Eigen::MatrixXcd matrix;     // n_rx x n_tx
    Eigen::VectorXcd path_gains; // per-cluster complex gain
    Eigen::VectorXd aod;         // departure angles (rad)
    Eigen::VectorXd aoa;         // arrival angles (rad)
};

/// Radar targets, radar channel, and the block-slotted optimal radar
/// precoder with its covariance.
struct RadarScene {
    Eigen::VectorXd target_angles;  // n_targets (rad)
    Eigen::MatrixXcd h_rad;         // n_rx x n_tx
    Eigen::MatrixXcd f_rad_opt;     // n_tx x n_targets
    Eigen::MatrixXcd r_t_opt;       // n_tx x n_tx, f_rad_opt * f_rad_opt^H
};

/// Analog stage, baseband stage, and the binary RF-chain selection for
/// one operation.
struct HybridPrecoder {
    Eigen::MatrixXcd analog;    // n_tx x n_rf, constant-modulus entries
    Eigen::MatrixXcd baseband;  // n_rf x n_streams
    Eigen::VectorXd selection;  // binary diagonal, length n_rf

    // analog * diag(selection) * baseband
    Eigen::MatrixXcd effective() const;
};

/// Per-stream receive combiners for both operations (unit-norm columns).
struct Combiners {
    Eigen::MatrixXcd w_com;  // n_rx x n_streams
    Eigen::MatrixXcd w_rad;  // n_rx x n_streams
};

// Unit-norm ULA steering vector; entry m is
// (1/sqrt(n)) * exp(j*2*pi*spacing_ratio*m*sin(angle)).
Eigen::VectorXcd steering_vector(double angle, int n, double spacing_ratio);

// Clustered channel: sqrt(n_tx*n_rx/n_clusters) * sum of gain-weighted
// steering outer products. Gains are i.i.d. standard complex Gaussian,
// angles uniform on [-pi/2, pi/2]; deterministic given the stream state.
CommChannel gen_comm_channel(std::mt19937_64& rng, const SystemConfig& cfg);

// Random target angles, block-slotted optimal radar precoder, its
// covariance, and the radar channel built from steering vectors at the
// target angles.
RadarScene gen_radar_scene(std::mt19937_64& rng, const SystemConfig& cfg);

// First n_rf columns of the n_tx-point unitary DFT matrix.
Eigen::MatrixXcd fft_analog_precoder(int n_tx, int n_rf);

// Left singular vectors of H, ordered by descending singular value.
// Throws on a (numerically) zero channel.
Eigen::MatrixXcd svd_combiner(const Eigen::MatrixXcd& h);

// P(phi) = a^H R a per grid angle; clamps tiny negatives to zero.
// Rejects non-Hermitian R.
Eigen::VectorXd beampattern(const Eigen::MatrixXcd& r,
                            const Eigen::VectorXd& grid_angles,
                            double spacing_ratio);

// Superposed dual-function transmit vector; the two cross terms carry
// the mutual interference and are dropped when include_interference is
// false.
Eigen::VectorXcd transmit_signal(const HybridPrecoder& com,
                                 const HybridPrecoder& rad,
                                 const Eigen::VectorXcd& s_com,
                                 const Eigen::VectorXcd& s_rad,
                                 bool include_interference = true);

// Scales the baseband stage so the effective precoder meets the trace
// budget with equality. A fully deselected precoder is left untouched.
void normalize_power(HybridPrecoder& prec, double p_max);

// Independent substream for one Monte-Carlo trial.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

}  // namespace jrcsim

#endif
