import math

import numpy as np
import pytest

import stbcsm


def test_constellation():
    bpsk = stbcsm.Constellation.parse("BPSK")
    assert bpsk.points == [1 + 0j, -1 + 0j]
    qam = stbcsm.Constellation.parse("16QAM")
    assert np.mean(np.abs(qam.points) ** 2) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        stbcsm.Constellation.parse("3PSK")


def test_codebook_and_rates():
    book = stbcsm.codebook(4, 1.0)
    assert [(a, b) for a, b, _ in book] == [(0, 1), (2, 3), (1, 2), (3, 0)]
    assert abs(book[2][2] - complex(math.cos(1.0), math.sin(1.0))) < 1e-15
    assert stbcsm.codeword_count(8) == 16
    assert stbcsm.spectral_efficiency(4, 2) == 2.0


def test_theta_search():
    theta, cgd = stbcsm.optimize_theta(4, "BPSK", 0.001)
    assert cgd > 0
    assert theta == pytest.approx(math.pi / 2, abs=2e-3)
    assert stbcsm.min_cgd(4, "BPSK", 0.0) == pytest.approx(0.0)


def test_precoders():
    rng = np.random.default_rng(0)
    h = (rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))) / math.sqrt(2)
    p, beta = stbcsm.zf_precoder(h)
    assert np.allclose(h @ p, np.eye(4), atol=1e-9)
    assert np.linalg.norm(beta * p) ** 2 == pytest.approx(4.0)
    p0, _ = stbcsm.mmse_precoder(h, 0.0)
    assert np.allclose(p0, p, atol=1e-9)


def test_equivalent_channel_gram():
    rng = np.random.default_rng(1)
    h = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    e = stbcsm.equivalent_channel(h, 1, 3, complex(0, 1))
    g = np.linalg.norm(h[:, 1]) ** 2 + np.linalg.norm(h[:, 3]) ** 2
    assert np.allclose(e.conj().T @ e, g * np.eye(2), atol=1e-9)


def test_steering():
    w = stbcsm.steering_weights(2, math.pi / 6)
    assert np.allclose(w, [1, -1j], atol=1e-12)
    assert stbcsm.array_gain_db(4) == pytest.approx(12.0412, abs=1e-4)


def test_sweep_is_reproducible():
    kw = dict(scheme="STBC-SM", n_t=4, n_r=4, snr_grid=[0, 4], max_bits=20000, master_seed=5)
    a = stbcsm.run_sweep(**kw)
    b = stbcsm.run_sweep(workers=4, **kw)
    assert a == b
    assert len(a) == 2
    assert a[0]["ber"] > a[1]["ber"]
    assert stbcsm.run_sweep_csv(**kw).startswith(stbcsm.CSV_HEADER + "\n")


def test_config_errors():
    with pytest.raises(stbcsm.ConfigError, match="colour"):
        stbcsm.run_sweep(colour="blue", snr_grid=[0])
    with pytest.raises(stbcsm.ConfigError):
        stbcsm.run_sweep(scheme="SM", n_t=3, snr_grid=[0])


def test_gap():
    a = [(s, 0.5 * 10 ** (-s / 10)) for s in range(0, 31, 2)]
    b = [(s + 3, ber) for s, ber in a]
    assert stbcsm.snr_gap_at_ber(b, a, 1e-2) == pytest.approx(3.0, abs=1e-9)
