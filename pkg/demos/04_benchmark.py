"""Closed-form evaluation against direct summation for large k."""

import time

from gfsums import FIBONACCI, brute_sum, closed_form, evaluate_closed

cf = closed_form(1, 3, 1)
for k in (10**3, 10**4, 10**5):
    t0 = time.perf_counter()
    fast = evaluate_closed(cf, k, FIBONACCI)
    t1 = time.perf_counter()
    slow = brute_sum(1, 3, 1, k, FIBONACCI)
    t2 = time.perf_counter()
    assert fast == slow
    print(f"k={k:>6}: closed form {t1 - t0:.4f}s, direct {t2 - t1:.4f}s, ratio {(t2 - t1) / (t1 - t0):.0f}")
