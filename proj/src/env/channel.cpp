#include "dtslice/env/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace dtslice::env {

double compute_snr(double gain, double power_w, double noise_psd_w_hz, double bandwidth_hz) {
    if (bandwidth_hz <= 0.0)
        throw std::domain_error("compute_snr: bandwidth must be > 0");
    if (noise_psd_w_hz <= 0.0)
        throw std::domain_error("compute_snr: noise PSD must be > 0");
    if (gain < 0.0 || power_w < 0.0)
        throw std::domain_error("compute_snr: gain and power must be >= 0");
    return gain * power_w / (noise_psd_w_hz * bandwidth_hz);
}

double compute_user_rate(double bandwidth_hz, double snr, bool natural_log) {
    if (bandwidth_hz < 0.0 || snr < 0.0)
        throw std::domain_error("compute_user_rate: negative input");
    const double l = natural_log ? std::log(1.0 + snr) : std::log2(1.0 + snr);
    return bandwidth_hz * l;
}

double pathloss_gain(double distance_m) {
    if (distance_m <= 0.0)
        throw std::domain_error("pathloss_gain: distance must be > 0");
    const double loss_db = 128.1 + 37.6 * std::log10(distance_m / 1000.0);
    return std::pow(10.0, -loss_db / 10.0);
}

} // namespace dtslice::env
