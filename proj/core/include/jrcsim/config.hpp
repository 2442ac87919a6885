#ifndef JRCSIM_CONFIG_HPP
#define JRCSIM_CONFIG_HPP

#include <cmath>
#include <string>

namespace jrcsim {

/// Scenario dimensions and scalars for one JRC simulation setup.
/// Defaults are the desk-scale configuration used by the test suite;
/// configs/full_scale.cfg holds the 96-antenna setup.
struct SystemConfig {
    int n_tx = 32;            // transmit antennas
    int n_rx = 4;             // receive (UE) antennas
    int n_rf = 4;             // available RF chains
    int n_clusters = 6;       // multipath clusters
    int n_targets = 3;        // radar targets
    double rho = 0.5;         // radar/communication weighting, in [0,1]
    double p_max_com = 1.0;   // communication power budget (linear)
    double p_max_rad = 1.0;   // radar power budget (linear)
    double snr_db = 0.0;      // operating SNR in dB
    double spacing_ratio = 0.5;  // antenna spacing over wavelength

    // Thermal noise power implied by the SNR setting.
    double noise_floor() const { return std::pow(10.0, -snr_db / 10.0); }

    // Number of data streams; equals the UE antenna count.
    int n_streams() const { return n_rx; }

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Parses a flat key-value config file (one "key = value" per line,
// '#' comments). Unknown keys are rejected by name; omitted keys keep
// their defaults. The result is validated before return.
SystemConfig parse_config_file(const std::string& path);
SystemConfig parse_config_text(const std::string& text);

}  // namespace jrcsim

#endif
