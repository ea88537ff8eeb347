#!/usr/bin/env python3
"""Smoke tests for the python bindings."""

import sys

import qstirling as qs


def approx(a, b, tol=1e-12):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def main():
    hot = qs.Reservoir(2.0, squeeze_r=0.5)
    cold = qs.Reservoir(1.0)

    res = qs.run_cycle(qs.Medium.tls, 1.0, 5.0, hot, cold)
    assert res.perf.is_engine
    assert approx(res.perf.w_total, 0.6928178811263814966, 1e-12)
    assert approx(res.perf.eta, 0.4996740409366643556, 1e-12)
    assert approx(res.ledger.heat_total(), res.ledger.work_total(), 1e-11)

    res_ho = qs.run_cycle(qs.Medium.ho, 1.0, 5.0, hot, cold)
    assert approx(res_ho.perf.w_total, 1.5331402127769086725, 1e-12)

    # degenerate cycle: zero ledger, eta is None
    deg = qs.run_cycle(qs.Medium.tls, 2.0, 2.0, hot, cold)
    assert deg.perf.eta is None
    assert deg.ledger.q_ab == 0.0

    assert approx(qs.thermal_occupation(1.0, 1.0), 0.58197670686932642439, 1e-14)
    n, big_n, m_mag = qs.squeezed_occupancy(1.0, hot)
    assert big_n >= n and m_mag > 0.0

    # effective temperature rises with squeezing
    t0 = qs.tls.effective_temperature(1.0, 1.0, 0.0)
    t1 = qs.tls.effective_temperature(1.0, 1.0, 0.5)
    assert t0 == 1.0 and approx(t1, 1.6184111670997160409, 1e-12)

    # maximiser on a synthetic function
    mx = qs.asymptotics.numeric_max_work(lambda x: -(x - 2.5) ** 2, 0.0, 10.0)
    assert mx.interior and approx(mx.omega2_star, 2.5, 1e-8)

    # the first-order low-T efficiency is the Otto value
    assert qs.asymptotics.tls_eta_mw_low_t(1.0, 5.0, 2.0, 0.7) == 0.8

    # oscillator closed forms: F = N + 1 and the squeezed internal energy
    f = qs.ho.coefficient_f(1.0, 2.0, 0.7)
    _, big_n_ho, _ = qs.squeezed_occupancy(1.0, qs.Reservoir(2.0, squeeze_r=0.7))
    assert approx(f, big_n_ho + 1.0, 1e-12)
    assert approx(
        qs.ho.internal_energy(1.0, qs.Reservoir(1.0, squeeze_r=0.5)),
        1.6695773036912271528,
        1e-12,
    )

    # the exact work rises monotonically with omega2: boundary flag expected
    mx = qs.asymptotics.numeric_max_work_cycle(qs.Medium.tls, 1.0, hot, cold, 1.0, 40.0)
    assert not mx.interior

    # invalid input surfaces as ValueError
    try:
        qs.thermal_occupation(-1.0, 1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("python smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
