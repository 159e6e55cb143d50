from ._stbcsm import (
    CSV_HEADER,
    ConfigError,
    Constellation,
    Error,
    array_gain_db,
    codebook,
    codeword_count,
    equivalent_channel,
    figure_names,
    min_cgd,
    mmse_precoder,
    noise_variance,
    optimize_theta,
    run_sweep,
    run_sweep_csv,
    snr_gap_at_ber,
    spectral_efficiency,
    steering_weights,
    zf_precoder,
)

__all__ = [
    "CSV_HEADER",
    "ConfigError",
    "Constellation",
    "Error",
    "array_gain_db",
    "codebook",
    "codeword_count",
    "equivalent_channel",
    "figure_names",
    "min_cgd",
    "mmse_precoder",
    "noise_variance",
    "optimize_theta",
    "run_sweep",
    "run_sweep_csv",
    "snr_gap_at_ber",
    "spectral_efficiency",
    "steering_weights",
    "zf_precoder",
]
