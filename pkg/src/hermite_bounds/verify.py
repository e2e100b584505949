"""Verification suites over desk-scale ranges.

Every check returns a :class:`CheckResult`; a failing check carries the
first counterexample found. Ranges:

    bounds        sandwich and omega bracket k = 6..2000, pointwise upper
                  envelope k in {6, 20, 100, 200} (400 points each),
                  sharpness points k = 3..200, point-value minimum k = 3..10^4,
                  sampled monotonicity of F G and F / G for k <= 200
    zeros         zero bounds, corollary and s-form k = 3..2000, zero-sum
                  identity and interlacing k <= 200, Laguerre identity
                  k <= 50, parity and ODE residual
    certificates  all exact certificates plus 100 rational tangency samples
    airy          maximiser and maximum of A, first zero, transition ratios
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import airy, envelope, hermite, zeros
from .certificates import certify

SUITES = ("bounds", "zeros", "certificates", "airy")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    pass_word: str = "OK"

    def line(self) -> str:
        status = self.pass_word if self.ok else "FAIL"
        return f"{self.name} {status}" + (f" ({self.detail})" if self.detail else "")


def _first_failure(items: Iterable, pred: Callable) -> object | None:
    for it in items:
        if not pred(it):
            return it
    return None


# bounds

def check_sandwich(k_min=6, k_max=2000) -> list[CheckResult]:
    reports = [envelope.compute_Mk(k) for k in range(k_min, k_max + 1)]
    bad = _first_failure(reports, lambda r: r.sandwich_ok)
    out = [CheckResult(f"mainth sandwich k={k_min}..{k_max}", bad is None,
                       "" if bad is None else f"k={bad.k} ln M_k={bad.ln_Mk}")]
    bad = _first_failure(reports, lambda r: r.x_kk < r.omega < r.omega_upper)
    out.append(CheckResult(f"xt:omega bracket k={k_min}..{k_max}", bad is None,
                           "" if bad is None else f"k={bad.k} omega={bad.omega}"))
    return out


def check_pointwise_envelope(ks=(6, 20, 100, 200), npoints=400) -> CheckResult:
    for k in ks:
        ys = np.linspace(2.0, 2 * k - 1.5, npoints + 1)[:-1]
        xs = np.sqrt(2 * k - ys)
        lw = hermite.log_weighted_square_grid(k, xs)
        for yv, val in zip(ys, lw):
            if not val <= envelope.log_upper_envelope(k, float(yv)):
                return CheckResult("th2 upper envelope", False, f"k={k} y={yv}")
    return CheckResult(f"th2 upper envelope k={','.join(map(str, ks))}", True)


def check_sharpness(k_min=3, k_max=200) -> list[CheckResult]:
    pts = [envelope.sharpness_point(k) for k in range(k_min, k_max + 1)]
    bad = _first_failure(pts, lambda p: p.holds)
    out = [CheckResult(f"th2 sharpness k={k_min}..{k_max}", bad is None,
                       "" if bad is None else f"k={bad.k} tau={bad.tau}")]
    bad = _first_failure(pts, lambda p: envelope.y_of(p.k, p.tau) > 3 * (2 * p.k) ** (1 / 3))
    out.append(CheckResult(f"th2 sharpness y(tau)>3(2k)^(1/3) k={k_min}..{k_max}",
                           bad is None, "" if bad is None else f"k={bad.k}"))
    return out


def check_lower_point_minimum(k_max=10_000) -> CheckResult:
    vals = [(envelope.lower_bound_point_value(k), k) for k in range(3, k_max + 1)]
    v, kmin = min(vals)
    ok = kmin == 46 and abs(v - 0.44265) <= 1e-4 and v > 27 / 61
    return CheckResult(f"max:minimum {v:.5f} at k={kmin}", ok)


def check_monotonicity_sampled(k_max=200, stride=7, npoints=200) -> CheckResult:
    for k in range(2, k_max + 1, stride):
        ys = np.linspace(2.0, 2.0 * k, npoints)
        v1 = [math.log(envelope.envelope_F(k, yv)) + envelope.log_envelope_G(k, yv) for yv in ys]
        if any(b > a for a, b in zip(v1, v1[1:])):
            return CheckResult("incr:v1 sampled", False, f"k={k}")
        lo = 3 * (2 * k) ** (1 / 3)
        if lo < 2 * k:
            ys = np.linspace(lo, 2.0 * k, npoints)
            v2 = [math.log(envelope.envelope_F(k, yv)) - envelope.log_envelope_G(k, yv)
                  for yv in ys]
            if any(b > a for a, b in zip(v2, v2[1:])):
                return CheckResult("incr:v2 sampled", False, f"k={k}")
    return CheckResult(f"incr:v1,v2 sampled k<={k_max}", True)


def suite_bounds() -> list[CheckResult]:
    return (check_sandwich() + [check_pointwise_envelope()] + check_sharpness()
            + [check_lower_point_minimum(), check_monotonicity_sampled()])


# zeros

def check_zero_bounds(k_min=3, k_max=2000) -> list[CheckResult]:
    tops = {k: zeros.find_largest_zero(k) for k in range(k_min - 1, k_max + 1)}
    bad = _first_failure(range(k_min, k_max + 1),
                         lambda k: zeros.largest_zero_bounds(k).contains(tops[k]))
    out = [CheckResult(f"ozkor:zero bounds k={k_min}..{k_max}", bad is None,
                       "" if bad is None else f"k={bad} x_kk={tops[bad]}")]
    bad = _first_failure(range(k_min, k_max + 1),
                         lambda k: 2 * k - tops[k - 1] ** 2 > 3 * (2 * k) ** (1 / 3))
    out.append(CheckResult(f"ozkor:corollary k={k_min}..{k_max}", bad is None,
                           "" if bad is None else f"k={bad}"))
    bad = _first_failure(range(k_min, k_max + 1), lambda k: zeros.s_form(k, tops[k]) > 0)
    out.append(CheckResult(f"ozkor:s-form k={k_min}..{k_max}", bad is None,
                           "" if bad is None else f"k={bad}"))
    return out


def check_zero_sets(k_max=200, tol=1e-8) -> list[CheckResult]:
    sets = {k: zeros.all_zeros(k) for k in range(1, k_max + 1)}
    worst = 0.0
    bad_k = None
    for k in range(3, k_max + 1):
        lhs, rhs = zeros.zero_sum_identity_check(k, sets[k])
        rel = abs(lhs - rhs) / rhs
        worst = max(worst, rel)
        if rel > tol and bad_k is None:
            bad_k = k
    out = [CheckResult(f"ozkor:zero-sum k=3..{k_max}", bad_k is None,
                       f"max rel {worst:.2e}" + ("" if bad_k is None else f", k={bad_k}"))]

    def interlaces(k):
        a, b = sets[k - 1].zeros, sets[k].zeros
        return all(b[i] < a[i] < b[i + 1] for i in range(k - 1))
    bad = _first_failure(range(2, k_max + 1), interlaces)
    out.append(CheckResult(f"zeros:interlacing k<={k_max}", bad is None,
                           "" if bad is None else f"k={bad}"))
    return out


def check_laguerre_identity(k_max=50, tol=1e-8, npoints=60) -> CheckResult:
    worst = 0.0
    for k in range(1, k_max + 1):
        zs = np.array(zeros.all_zeros(k).zeros)
        edge = math.sqrt(2 * k + 1) + 2
        for xv in np.linspace(-edge, edge, npoints):
            if np.min(np.abs(xv - zs)) < 1e-3:
                continue
            lag = hermite.laguerre_expression(k, float(xv))
            ref = math.fsum(1.0 / (xv - zs) ** 2)
            if not lag > 0:
                return CheckResult("lagineqv:positivity", False, f"k={k} x={xv}")
            rel = abs(lag - ref) / ref
            worst = max(worst, rel)
            if rel > tol:
                return CheckResult("lagineqv:identity", False, f"k={k} x={xv} rel={rel:.2e}")
    return CheckResult(f"lagineqv:identity k<={k_max}", True, f"max rel {worst:.2e}")


def check_parity_and_ode(ks=(2, 5, 17, 100, 1000, 10_000)) -> list[CheckResult]:
    bad_parity = None
    worst = 0.0
    for k in ks:
        edge = math.sqrt(2 * k) + 5
        for xv in np.linspace(0.0, edge, 25):
            a = hermite.eval_weighted(k, float(xv))
            b = hermite.eval_weighted(k, -float(xv))
            if not (b.psi_k == (-1) ** k * a.psi_k and b.log_scale == a.log_scale):
                bad_parity = bad_parity or (k, xv)
            if k >= 2:
                worst = max(worst, hermite.ode_residual(k, float(xv)))
    return [CheckResult("hermite:parity", bad_parity is None,
                        "" if bad_parity is None else f"k,x={bad_parity}"),
            CheckResult("difequ:residual<=1e-10", worst <= 1e-10, f"max {worst:.2e}")]


def suite_zeros() -> list[CheckResult]:
    return (check_zero_bounds() + check_zero_sets() + [check_laguerre_identity()]
            + check_parity_and_ode())


# certificates

def tangency_samples(n=100) -> list[Fraction]:
    """n rational m in (1, 21), deterministic."""
    return [Fraction(101 + 199 * i, 100) for i in range(n)]


def suite_certificates() -> list[CheckResult]:
    out = []
    for cert in certify.all_certificates():
        label = {"incr:A": "incr:A shift-positivity", "incr:B": "incr:B reparam+Sturm",
                 "incr:F-radicand": "incr:F radicand shift-positivity",
                 "xt:U": "xt:U display match",
                 "ozkor:final-step": "ozkor:final step"}.get(cert.target, cert.target)
        out.append(CheckResult(label, cert.verdict, cert.note, pass_word="PASS"))
    for variant in ("v1", "v2"):
        p = certify.derive_monotonicity_numerator(variant)
        ok = p.degree("k") == 2 and p.degree("y") == 10
        out.append(CheckResult(f"incr:{variant} numerator degrees (2,10)", ok))
    worst = max(float(certify.tangency_residuals(m)["u_edge_rel_err"])
                for m in tangency_samples())
    out.append(CheckResult("xt:u(sqrt(2k-1)) m-form 100 samples", worst <= 1e-12,
                           f"max rel {worst:.1e}"))
    return out


# airy

def suite_airy() -> list[CheckResult]:
    z_star, a_max = airy.airy_max()
    a_q = airy.airy_A(airy.Z_STAR_QUOTED).value
    out = [CheckResult(f"A(1.46935)={a_q:.4f}", abs(a_q - airy.A_MAX_QUOTED) <= 1e-3),
           CheckResult(f"A max at z={z_star:.5f} value {a_max:.4f}",
                       abs(z_star - airy.Z_STAR_QUOTED) <= 1e-3
                       and abs(a_max - airy.A_MAX_QUOTED) <= 1e-3)]
    edge = 6 ** (-1 / 3) * airy.airy_first_zero()
    out.append(CheckResult(f"first zero 6^(-1/3) i1={edge:.5f}",
                           abs(edge - zeros.AIRY_EDGE_CONSTANT) <= 1e-4))
    d1 = abs(airy.transition_ratio(1000, z_star) - 1)
    d8 = abs(airy.transition_ratio(8000, z_star) - 1)
    out.append(CheckResult(f"transition ratio k=1000 dev {d1:.2e}, k=8000 dev {d8:.2e}",
                           d1 <= 0.01 and d8 * 2 <= d1))
    return out


_SUITES = {"bounds": suite_bounds, "zeros": suite_zeros,
           "certificates": suite_certificates, "airy": suite_airy}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        return [r for s in SUITES for r in _SUITES[s]()]
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return _SUITES[name]()
