#include "jrcsim/model.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jrcsim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Eigen::MatrixXcd HybridPrecoder::effective() const {
    return analog * selection.asDiagonal().toDenseMatrix().cast<cxd>() * baseband;
}

Eigen::VectorXcd steering_vector(double angle, int n, double spacing_ratio) {
    if (n < 1) throw std::invalid_argument("steering_vector: n must be >= 1");
    if (spacing_ratio <= 0.0)
        throw std::invalid_argument("steering_vector: spacing_ratio must be > 0");
    Eigen::VectorXcd a(n);
    const double step = kTwoPi * spacing_ratio * std::sin(angle);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int m = 0; m < n; ++m)
        a(m) = std::polar(scale, step * m);
    return a;
}

CommChannel gen_comm_channel(std::mt19937_64& rng, const SystemConfig& cfg) {
    cfg.validate();
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> half_circle(-std::numbers::pi / 2,
                                                       std::numbers::pi / 2);
    CommChannel ch;
    ch.path_gains.resize(cfg.n_clusters);
    ch.aod.resize(cfg.n_clusters);
    ch.aoa.resize(cfg.n_clusters);
    for (int l = 0; l < cfg.n_clusters; ++l) {
        const double re = normal(rng);
        const double im = normal(rng);
        ch.path_gains(l) = cxd(re, im) / std::sqrt(2.0);  // CN(0,1)
        ch.aod(l) = half_circle(rng);
        ch.aoa(l) = half_circle(rng);
    }
    const double scale =
        std::sqrt(static_cast<double>(cfg.n_tx) * cfg.n_rx / cfg.n_clusters);
    ch.matrix = Eigen::MatrixXcd::Zero(cfg.n_rx, cfg.n_tx);
    for (int l = 0; l < cfg.n_clusters; ++l) {
        const auto a_r = steering_vector(ch.aoa(l), cfg.n_rx, cfg.spacing_ratio);
        const auto a_t = steering_vector(ch.aod(l), cfg.n_tx, cfg.spacing_ratio);
        ch.matrix.noalias() += (scale * ch.path_gains(l)) * a_r * a_t.adjoint();
    }
    return ch;
}

RadarScene gen_radar_scene(std::mt19937_64& rng, const SystemConfig& cfg) {
    cfg.validate();
    if (cfg.n_targets > cfg.n_tx)
        throw std::invalid_argument("gen_radar_scene: n_targets exceeds n_tx");
    std::uniform_real_distribution<double> half_circle(-std::numbers::pi / 2,
                                                       std::numbers::pi / 2);
    RadarScene scene;
    scene.target_angles.resize(cfg.n_targets);
    for (int i = 0; i < cfg.n_targets; ++i)
        scene.target_angles(i) = half_circle(rng);

    // Each target owns one precoder column: its full-aperture steering
    // vector, so the covariance superposes one narrow lobe per target.
    scene.f_rad_opt.resize(cfg.n_tx, cfg.n_targets);
    for (int i = 0; i < cfg.n_targets; ++i)
        scene.f_rad_opt.col(i) =
            steering_vector(scene.target_angles(i), cfg.n_tx, cfg.spacing_ratio);
    scene.r_t_opt = scene.f_rad_opt * scene.f_rad_opt.adjoint();

    // Radar channel: clustered form with unit-gain paths at the target
    // angles, matched arrival/departure, so its column space follows the
    // radar covariance.
    const double scale =
        std::sqrt(static_cast<double>(cfg.n_tx) * cfg.n_rx / cfg.n_targets);
    scene.h_rad = Eigen::MatrixXcd::Zero(cfg.n_rx, cfg.n_tx);
    for (int i = 0; i < cfg.n_targets; ++i) {
        const auto a_r =
            steering_vector(scene.target_angles(i), cfg.n_rx, cfg.spacing_ratio);
        const auto a_t =
            steering_vector(scene.target_angles(i), cfg.n_tx, cfg.spacing_ratio);
        scene.h_rad.noalias() += scale * a_r * a_t.adjoint();
    }
    return scene;
}

Eigen::MatrixXcd fft_analog_precoder(int n_tx, int n_rf) {
    if (n_rf > n_tx)
        throw std::invalid_argument("fft_analog_precoder: n_rf exceeds n_tx");
    if (n_rf < 1 || n_tx < 1)
        throw std::invalid_argument("fft_analog_precoder: counts must be >= 1");
    Eigen::MatrixXcd f(n_tx, n_rf);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_tx));
    for (int m = 0; m < n_tx; ++m)
        for (int k = 0; k < n_rf; ++k)
            f(m, k) = std::polar(scale, -kTwoPi * m * k / n_tx);
    return f;
}

Eigen::MatrixXcd svd_combiner(const Eigen::MatrixXcd& h) {
    if (h.size() == 0 || h.norm() < 1e-300)
        throw std::invalid_argument("svd_combiner: channel is zero");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h, Eigen::ComputeThinU);
    return svd.matrixU();  // singular values already descend
}

Eigen::VectorXd beampattern(const Eigen::MatrixXcd& r,
                            const Eigen::VectorXd& grid_angles,
                            double spacing_ratio) {
    if (r.rows() != r.cols())
        throw std::invalid_argument("beampattern: covariance must be square");
    if ((r - r.adjoint()).norm() > 1e-9 * std::max(1.0, r.norm()))
        throw std::invalid_argument("beampattern: covariance must be Hermitian");
    const int n = static_cast<int>(r.rows());
    Eigen::VectorXd p(grid_angles.size());
    for (Eigen::Index i = 0; i < grid_angles.size(); ++i) {
        const auto a = steering_vector(grid_angles(i), n, spacing_ratio);
        double v = (a.adjoint() * r * a).value().real();
        if (v < -1e-12)
            throw std::invalid_argument("beampattern: covariance is not PSD");
        p(i) = std::max(v, 0.0);
    }
    return p;
}

Eigen::VectorXcd transmit_signal(const HybridPrecoder& com,
                                 const HybridPrecoder& rad,
                                 const Eigen::VectorXcd& s_com,
                                 const Eigen::VectorXcd& s_rad,
                                 bool include_interference) {
    const Eigen::MatrixXcd a_com =
        com.analog * com.selection.asDiagonal().toDenseMatrix().cast<cxd>();
    const Eigen::MatrixXcd a_rad =
        rad.analog * rad.selection.asDiagonal().toDenseMatrix().cast<cxd>();
    if (com.baseband.cols() != s_com.size() || rad.baseband.cols() != s_rad.size())
        throw std::invalid_argument("transmit_signal: symbol length mismatch");
    if (a_com.cols() != com.baseband.rows() || a_rad.cols() != rad.baseband.rows() ||
        a_com.rows() != a_rad.rows())
        throw std::invalid_argument("transmit_signal: precoder dimension mismatch");
    Eigen::VectorXcd x = a_com * (com.baseband * s_com) + a_rad * (rad.baseband * s_rad);
    if (include_interference) {
        if (com.baseband.cols() != s_rad.size() || rad.baseband.cols() != s_com.size())
            throw std::invalid_argument("transmit_signal: cross-term length mismatch");
        x += a_com * (rad.baseband * s_rad) + a_rad * (com.baseband * s_com);
    }
    return x;
}

void normalize_power(HybridPrecoder& prec, double p_max) {
    if (p_max <= 0.0)
        throw std::invalid_argument("normalize_power: p_max must be > 0");
    const double tr = prec.effective().squaredNorm();
    if (tr <= 0.0) return;  // nothing selected
    prec.baseband *= std::sqrt(p_max / tr);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    // splitmix64 scramble of (seed, trial) for independent substreams
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return std::mt19937_64(z);
}

}  // namespace jrcsim
