"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (lines are printed even when
output is captured) or directly with ``python tests/test_acceptance.py``.
"""
import io
import math
import sys

import numpy as np
import pytest

from hermite_bounds import airy, cli, envelope, hermite, zeros
from hermite_bounds.certificates import certify
from hermite_bounds.certificates.multipoly import k as K, q as Q, x as X


def _emit(number, ok, detail, capsys=None):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


def criterion_1():
    worst = None
    for kv in range(6, 2001):
        r = envelope.compute_Mk(kv)
        margin = min(r.ln_Mk - r.ln_lower, r.ln_upper - r.ln_Mk)
        if not (r.ln_lower < r.ln_Mk < r.ln_upper):
            return False, f"sandwich broken at k={kv}"
        worst = margin if worst is None else min(worst, margin)
    return True, f"27/61 C_k < M_k < upper for k=6..2000 (smallest log margin {worst:.3f})"


def criterion_2():
    devs = {kv: abs(envelope.compute_Mk(kv).ratio_Mk_Ck - 0.715452) for kv in (10 ** 3, 10 ** 4, 10 ** 5)}
    ok = devs[10 ** 5] <= 0.01 and devs[10 ** 3] > devs[10 ** 4] > devs[10 ** 5]
    return ok, "|M_k/C_k - 0.715452| at k=1e3,1e4,1e5: " + ", ".join(f"{d:.2e}" for d in devs.values())


def criterion_3():
    vals = [(envelope.lower_bound_point_value(kv), kv) for kv in range(3, 10 ** 4 + 1)]
    vmin, kmin = min(vals)
    at_end = envelope.lower_bound_point_value(10 ** 4)
    ok_min = abs(vmin - 0.44265) <= 1e-4 and kmin == 46
    ok_end = abs(at_end - 0.4586) <= 2e-3
    return ok_min and ok_end, (f"min {vmin:.6f} at k={kmin} ({'ok' if ok_min else 'off'}); "
                               f"value at k=1e4 {at_end:.6f}, |diff from 0.4586| = "
                               f"{abs(at_end - 0.4586):.2e} vs 2e-3 ({'ok' if ok_end else 'off'})")


def criterion_4():
    for kv in range(3, 2001):
        top = zeros.find_largest_zero(kv)
        lo = math.sqrt(2 * kv) - 2.25 * (2 * kv) ** (-1 / 6)
        hi = math.sqrt(2 * kv + 1) - 1.85574 * (2 * kv + 1) ** (-1 / 6)
        if not lo < top < hi:
            return False, f"bracket broken at k={kv}: x_kk={top}"
    return True, "lower < x_kk < upper for k=3..2000"


def criterion_5():
    worst = 0.0
    for kv in range(3, 201):
        lhs, rhs = zeros.zero_sum_identity_check(kv)
        worst = max(worst, abs(lhs - rhs) / rhs)
    return worst <= 1e-8, f"max relative gap {worst:.2e} for k=3..200 (limit 1e-8)"


def criterion_6():
    z, a = airy.airy_max()
    d1 = abs(airy.transition_ratio(1000, z) - 1)
    d8 = abs(airy.transition_ratio(8000, z) - 1)
    ok = (abs(z - 1.46935) <= 1e-3 and abs(a - 1.1668) <= 1e-3 and d1 <= 0.01 and 2 * d8 <= d1)
    return ok, f"z*={z:.6f} A(z*)={a:.6f}; ratio deviation k=1000 {d1:.2e}, k=8000 {d8:.2e}"


def criterion_7():
    parts = {}
    for v in ("v1", "v2"):
        p = certify.derive_monotonicity_numerator(v)
        parts[f"deg {v}"] = (p.degree("k"), p.degree("y")) == (2, 10)
    parts["A shift"] = certify.certify_shift_positivity(
        certify.derive_monotonicity_numerator("v1"), [("k", 2), ("y", 2)]).verdict
    b = certify.certify_v2_with_reparam()
    parts["B reparam"] = b.verdict and {c["k"] for c in b.sturm if c["ok"]} == {2, 3}
    U, cubic = certify.build_U()
    parts["U t^2"] = U.coeff_in("t", 2) == 2 * K + Q ** 2 - 2 - 2 * Q * X and U == certify.U_DISPLAYED
    parts["U q=0"] = cubic.subs({"q": 0}) == 2 * (2 * K ** 2 - (K + 1) * X ** 2)
    from hermite_bounds.verify import tangency_samples
    worst = max(float(certify.tangency_residuals(m)["u_edge_rel_err"]) for m in tangency_samples())
    parts["m-form"] = worst <= 1e-12
    failed = [n for n, ok in parts.items() if not ok]
    return not failed, (f"all of {', '.join(parts)} hold; m-form max rel {worst:.1e}" if not failed
                        else f"failed: {', '.join(failed)}")


def criterion_8():
    for kv in (6, 20, 100, 200):
        ys = np.linspace(2.0, 2 * kv - 1.5, 401)[:-1]
        lw = hermite.log_weighted_square_grid(kv, np.sqrt(2 * kv - ys))
        for yv, val in zip(ys, lw):
            if not val <= envelope.log_upper_envelope(kv, float(yv)):
                return False, f"upper envelope broken at k={kv}, y={yv}"
    worst = math.inf
    for kv in range(3, 201):
        p = envelope.sharpness_point(kv)
        if not p.holds:
            return False, f"sharpness inequality broken at k={kv}, tau={p.tau}"
        worst = min(worst, p.ln_function_value - p.ln_lower_envelope)
    return True, (f"upper envelope at 4x400 points; lower envelope at tau for k=3..200 "
                  f"(smallest log margin {worst:.4f})")


def criterion_9():
    buf = io.StringIO()
    code = cli.main(["verify", "--suite", "all"], buf)
    lines = buf.getvalue().splitlines()
    needed = ("hermite:parity", "difequ:residual", "lagineqv:identity", "zeros:interlacing")
    missing = [n for n in needed if not any(l.startswith(n) and " OK" in l for l in lines)]
    ok = code == 0 and not missing
    return ok, f"verify all exit {code}, {len(lines)} checks" + (f", missing {missing}" if missing else "")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("number", range(1, 10))
def test_criterion(number, capsys):
    ok, detail = CRITERIA[number - 1]()
    assert _emit(number, ok, detail, capsys), detail


if __name__ == "__main__":
    results = [_emit(i, *fn()) for i, fn in enumerate(CRITERIA, 1)]
    sys.exit(0 if all(results) else 1)
