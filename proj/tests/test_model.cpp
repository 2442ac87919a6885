#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jrcsim/model.hpp"

using namespace jrcsim;
using std::numbers::pi;

namespace {

SystemConfig small_cfg() {
    SystemConfig cfg;
    cfg.n_tx = 8;
    cfg.n_rx = 2;
    cfg.n_rf = 2;
    cfg.n_clusters = 3;
    cfg.n_targets = 2;
    return cfg;
}

// Independent channel rebuild straight from the path parameters.
Eigen::MatrixXcd rebuild_channel(const CommChannel& ch, const SystemConfig& cfg) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(cfg.n_rx, cfg.n_tx);
    const double scale =
        std::sqrt(double(cfg.n_tx) * cfg.n_rx / cfg.n_clusters);
    for (int l = 0; l < cfg.n_clusters; ++l)
        h += scale * ch.path_gains(l) *
             steering_vector(ch.aoa(l), cfg.n_rx, cfg.spacing_ratio) *
             steering_vector(ch.aod(l), cfg.n_tx, cfg.spacing_ratio).adjoint();
    return h;
}

}  // namespace

TEST_CASE("steering vector matches the closed form") {
    const auto a0 = steering_vector(0.0, 4, 0.5);
    for (int m = 0; m < 4; ++m) {
        CHECK(a0(m).real() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(a0(m).imag() == doctest::Approx(0.0).epsilon(1e-14));
    }
    const auto a1 = steering_vector(pi / 2, 2, 0.5);
    CHECK(a1(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(a1(1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(std::abs(a1(1).imag()) < 1e-12);
}

TEST_CASE("steering vectors are unit norm for random angles and sizes") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ang(-pi / 2, pi / 2);
    std::uniform_int_distribution<int> size(1, 64);
    for (int i = 0; i < 50; ++i)
        CHECK(steering_vector(ang(rng), size(rng), 0.5).norm() ==
              doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("comm channel reconstructs from its path parameters") {
    auto cfg = small_cfg();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const auto ch = gen_comm_channel(rng, cfg);
        const auto rebuilt = rebuild_channel(ch, cfg);
        CHECK((ch.matrix - rebuilt).norm() <= 1e-12 * ch.matrix.norm());
    }
}

TEST_CASE("single-path channel is the rank-1 closed form") {
    auto cfg = small_cfg();
    cfg.n_clusters = 1;
    std::mt19937_64 rng(3);
    const auto ch = gen_comm_channel(rng, cfg);
    const Eigen::MatrixXcd expect =
        std::sqrt(double(cfg.n_tx) * cfg.n_rx) * ch.path_gains(0) *
        steering_vector(ch.aoa(0), cfg.n_rx, cfg.spacing_ratio) *
        steering_vector(ch.aod(0), cfg.n_tx, cfg.spacing_ratio).adjoint();
    CHECK((ch.matrix - expect).norm() <= 1e-12 * expect.norm());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ch.matrix);
    CHECK(svd.singularValues()(1) < 1e-10 * svd.singularValues()(0));
}

TEST_CASE("empirical channel power matches the normalization") {
    auto cfg = small_cfg();  // n_tx=8, n_rx=2
    std::mt19937_64 rng(19);
    double total = 0.0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i)
        total += gen_comm_channel(rng, cfg).matrix.squaredNorm();
    const double mean = total / draws;
    CHECK(mean == doctest::Approx(16.0).epsilon(0.05));
}

TEST_CASE("channel generation is deterministic in the seed") {
    auto cfg = small_cfg();
    std::mt19937_64 a(42), b(42);
    const auto ha = gen_comm_channel(a, cfg);
    const auto hb = gen_comm_channel(b, cfg);
    CHECK(ha.matrix == hb.matrix);
    const auto sa = gen_radar_scene(a, cfg);
    const auto sb = gen_radar_scene(b, cfg);
    CHECK(sa.h_rad == sb.h_rad);
    CHECK(sa.target_angles == sb.target_angles);
}

TEST_CASE("fft analog precoder") {
    const auto f2 = fft_analog_precoder(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(f2(0, 0) - cxd(r, 0)) < 1e-12);
    CHECK(std::abs(f2(1, 1) - cxd(-r, 0)) < 1e-12);
    CHECK(std::abs(f2(1, 0) - cxd(r, 0)) < 1e-12);

    const auto f4 = fft_analog_precoder(4, 2);
    for (int m = 0; m < 4; ++m)
        for (int k = 0; k < 2; ++k)
            CHECK(std::abs(f4(m, k) - std::polar(0.5, -2 * pi * m * k / 4.0)) <
                  1e-12);

    const auto f = fft_analog_precoder(16, 5);
    CHECK((f.adjoint() * f - Eigen::MatrixXcd::Identity(5, 5)).norm() < 1e-12);
    for (int m = 0; m < 16; ++m)
        for (int k = 0; k < 5; ++k)
            CHECK(std::abs(f(m, k)) == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS(fft_analog_precoder(4, 5));
}

TEST_CASE("svd combiner recovers a rank-1 left vector") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n;
    Eigen::VectorXcd u(3), v(4);
    for (int i = 0; i < 3; ++i) u(i) = cxd(n(rng), n(rng));
    for (int i = 0; i < 4; ++i) v(i) = cxd(n(rng), n(rng));
    u.normalize();
    v.normalize();
    const Eigen::MatrixXcd h = 2.5 * u * v.adjoint();
    const auto w = svd_combiner(h);
    CHECK(std::abs(std::abs(u.dot(w.col(0))) - 1.0) < 1e-10);
}

TEST_CASE("svd combiner columns are orthonormal") {
    std::mt19937_64 rng(6);
    std::normal_distribution<double> n;
    Eigen::MatrixXcd h(4, 6);
    for (int i = 0; i < h.size(); ++i) h.data()[i] = cxd(n(rng), n(rng));
    const auto w = svd_combiner(h);
    CHECK((w.adjoint() * w - Eigen::MatrixXcd::Identity(w.cols(), w.cols()))
              .norm() < 1e-10);
}

TEST_CASE("svd combiner beats a coarse grid search on 2x2") {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> n;
    Eigen::MatrixXcd h(2, 2);
    for (int i = 0; i < 4; ++i) h.data()[i] = cxd(n(rng), n(rng));
    // w = [cos t, sin t * e^{j p}] covers the unit sphere up to global phase
    double best = 0.0;
    for (int ti = 0; ti <= 90; ++ti)
        for (int pi_i = 0; pi_i < 360; pi_i += 4) {
            const double t = ti * pi / 180.0;
            Eigen::VectorXcd w(2);
            w << std::cos(t), std::polar(std::sin(t), pi_i * pi / 180.0);
            best = std::max(best, (w.adjoint() * h).norm());
        }
    const Eigen::VectorXcd w1 = svd_combiner(h).col(0);
    CHECK((w1.adjoint() * h).norm() >= best - 1e-3);
}

TEST_CASE("svd combiner rejects a zero channel") {
    CHECK_THROWS(svd_combiner(Eigen::MatrixXcd::Zero(2, 4)));
}

TEST_CASE("beampattern of identity covariance is flat") {
    Eigen::VectorXd grid(5);
    grid << -1.0, -0.5, 0.0, 0.5, 1.0;
    const auto p = beampattern(Eigen::MatrixXcd::Identity(8, 8), grid, 0.5);
    for (int i = 0; i < 5; ++i)
        CHECK(p(i) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("beampattern of a steering outer product peaks at its angle") {
    const double phi0 = 0.3;
    const auto a = steering_vector(phi0, 16, 0.5);
    const Eigen::MatrixXcd r = a * a.adjoint();
    Eigen::VectorXd grid(181);
    for (int d = -90; d <= 90; ++d) grid(d + 90) = d * pi / 180.0;
    const auto p = beampattern(r, grid, 0.5);
    int argmax = 0;
    p.maxCoeff(&argmax);
    CHECK(std::abs(grid(argmax) - phi0) < 1.5 * pi / 180.0);
    const auto at_phi0 = beampattern(r, Eigen::VectorXd::Constant(1, phi0), 0.5);
    CHECK(at_phi0(0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("beampattern rejects a non-Hermitian matrix") {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(3, 3);
    r(0, 1) = cxd(1.0, 0.0);
    CHECK_THROWS(beampattern(r, Eigen::VectorXd::Zero(1), 0.5));
}

TEST_CASE("radar scene covariance is a Hermitian PSD Gram matrix") {
    auto cfg = small_cfg();
    std::mt19937_64 rng(21);
    const auto scene = gen_radar_scene(rng, cfg);
    CHECK((scene.r_t_opt - scene.r_t_opt.adjoint()).norm() < 1e-12);
    CHECK((scene.r_t_opt - scene.f_rad_opt * scene.f_rad_opt.adjoint()).norm() <
          1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(scene.r_t_opt);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
    int rank = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > 1e-10) ++rank;
    CHECK(rank <= cfg.n_targets);
}

TEST_CASE("single-target scene is a steering outer product") {
    auto cfg = small_cfg();
    cfg.n_targets = 1;
    std::mt19937_64 rng(22);
    const auto scene = gen_radar_scene(rng, cfg);
    const auto a =
        steering_vector(scene.target_angles(0), cfg.n_tx, cfg.spacing_ratio);
    CHECK((scene.r_t_opt - a * a.adjoint()).norm() < 1e-12);
}

TEST_CASE("scene rejects more targets than antennas") {
    auto cfg = small_cfg();
    cfg.n_targets = cfg.n_tx + 1;
    std::mt19937_64 rng(1);
    CHECK_THROWS(gen_radar_scene(rng, cfg));
}

TEST_CASE("three-target beampattern peaks near each target") {
    SystemConfig cfg;
    cfg.n_tx = 96;
    cfg.n_targets = 3;
    std::mt19937_64 rng(33);
    const auto scene = gen_radar_scene(rng, cfg);
    Eigen::VectorXd grid(181);
    for (int d = -90; d <= 90; ++d) grid(d + 90) = d * pi / 180.0;
    const auto p = beampattern(scene.r_t_opt, grid, cfg.spacing_ratio);
    for (int i = 0; i < 3; ++i) {
        const double deg = scene.target_angles(i) * 180.0 / pi;
        bool found = false;
        for (int d = 0; d <= 180 && !found; ++d) {
            const bool rises = d == 0 || p(d) > p(d - 1);
            const bool falls = d == 180 || p(d) >= p(d + 1);
            if (rises && falls && std::abs((d - 90) - deg) <= 1.0) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("transmit signal matches an independent four-term rebuild") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> n;
    const int n_tx = 8, n_rf = 3, n_s = 2;
    auto rand_mat = [&](int r, int c) {
        Eigen::MatrixXcd m(r, c);
        for (int i = 0; i < m.size(); ++i) m.data()[i] = cxd(n(rng), n(rng));
        return m;
    };
    HybridPrecoder com{fft_analog_precoder(n_tx, n_rf), rand_mat(n_rf, n_s),
                       Eigen::VectorXd::Ones(n_rf)};
    HybridPrecoder rad{fft_analog_precoder(n_tx, n_rf), rand_mat(n_rf, n_s),
                       Eigen::VectorXd::Ones(n_rf)};
    com.selection(1) = 0.0;
    Eigen::VectorXcd s_com = rand_mat(n_s, 1), s_rad = rand_mat(n_s, 1);
    s_com.normalize();
    s_rad.normalize();

    const auto x = transmit_signal(com, rad, s_com, s_rad, true);

    const Eigen::MatrixXcd fc =
        com.analog * com.selection.asDiagonal().toDenseMatrix().cast<cxd>();
    const Eigen::MatrixXcd fr =
        rad.analog * rad.selection.asDiagonal().toDenseMatrix().cast<cxd>();
    Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(n_tx);
    expect += fc * com.baseband * s_com;
    expect += fr * rad.baseband * s_rad;
    expect += fc * rad.baseband * s_rad;
    expect += fr * com.baseband * s_com;
    CHECK((x - expect).norm() < 1e-12 * expect.norm());

    const auto x_clean = transmit_signal(com, rad, s_com, s_rad, false);
    const Eigen::VectorXcd direct =
        fc * com.baseband * s_com + fr * rad.baseband * s_rad;
    CHECK((x_clean - direct).norm() < 1e-12 * direct.norm());

    SUBCASE("single-operation reduction") {
        const auto only_com = transmit_signal(
            com, rad, s_com, Eigen::VectorXcd::Zero(n_s), false);
        CHECK((only_com - fc * com.baseband * s_com).norm() < 1e-12);
    }
    SUBCASE("zero precoders give a zero signal") {
        HybridPrecoder zc = com, zr = rad;
        zc.baseband.setZero();
        zr.baseband.setZero();
        CHECK(transmit_signal(zc, zr, s_com, s_rad, true).norm() == 0.0);
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS(transmit_signal(com, rad, rand_mat(n_s + 1, 1), s_rad));
    }
}

TEST_CASE("power normalization hits the trace budget with equality") {
    HybridPrecoder prec{fft_analog_precoder(8, 4),
                        Eigen::MatrixXcd::Identity(4, 4),
                        Eigen::VectorXd::Ones(4)};
    prec.selection(2) = 0.0;
    normalize_power(prec, 2.5);
    CHECK(prec.effective().squaredNorm() == doctest::Approx(2.5).epsilon(1e-12));
}
