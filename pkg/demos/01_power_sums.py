"""Sums of j^r G_j, from the generic weight down to w = 1.

Run with ``python demos/01_power_sums.py``.
"""

from gfsums import LUCAS, SYMBOLIC, brute_sum, closed_form, evaluate_closed
from gfsums.render import render_text

# The weighted sum as a rational function of w.
print(render_text(closed_form(1, 1, SYMBOLIC, "standard")))
print()

# Specialising to w = 1 gives integer constants; r = 5 is the classic example.
for r in range(1, 7):
    print(render_text(closed_form(1, r, 1, "standard")))
print()

# Any seeds work: evaluate for the Lucas numbers and compare with a direct sum.
cf = closed_form(1, 5, 1, "standard")
for k in (10, 100, 1000):
    value = evaluate_closed(cf, k, LUCAS)
    assert value == brute_sum(1, 5, 1, k, LUCAS)
    print(f"sum_{{j<={k}}} j^5 L_j has {len(str(value.re))} digits")
