"""Sums of G_j^n for n = 2, 3 and their generating functions."""

from gfsums import SYMBOLIC, closed_form, converges, generating_function
from gfsums.exact import as_gauss
from gfsums.render import render_text

for n in (2, 3):
    print(render_text(closed_form(n, 0, SYMBOLIC)))
    print()

for w in ("1", "1/2", "2"):
    print(render_text(closed_form(2, 0, w)))
print()

# The infinite sum needs |w| phi^n < 1, decided exactly in Q(sqrt 5).
for n, w in ((2, "1/16"), (2, "1/4"), (2, "1/2")):
    print(f"n={n}, w={w}: converges={converges(as_gauss(w), n)}")
print(render_text(generating_function(2, 0, "1/16")))

# n >= 2 with r >= 1 has no published formula; the engine flags it.
gf = generating_function(2, 1, "1/16")
print("extension:", gf.extension, "|", render_text(gf))
