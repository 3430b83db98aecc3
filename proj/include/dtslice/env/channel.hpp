#pragma once

namespace dtslice::env {

// SNR of a user on bandwidth w: gain * power / (noise_psd * w).
// Throws std::domain_error on nonpositive w or noise_psd, or negative gain/power.
double compute_snr(double gain, double power_w, double noise_psd_w_hz, double bandwidth_hz);

// Shannon rate w * log2(1 + snr) in bits/s (natural log variant optional).
double compute_user_rate(double bandwidth_hz, double snr, bool natural_log = false);

// Urban-macro path loss 128.1 + 37.6*log10(d_km) converted to a linear power gain.
double pathloss_gain(double distance_m);

} // namespace dtslice::env
