"""Alternating sums over even and odd indices from the weight w = i.

Writing the sum at w = i over 0..2K, the real part collects the even
indices and the imaginary part the odd ones.
"""

from gfsums import LUCAS, brute_sum, split_alternating
from gfsums.engine import evaluate_split_part
from gfsums.render import render_split_text

for n in (1, 2, 3):
    print(render_split_text(split_alternating(n, 0)))
    print()

n, r, K = 2, 1, 6
split = split_alternating(n, r)
total = brute_sum(n, r, "i", 2 * K, LUCAS)
even = evaluate_split_part(split.even, n, K, LUCAS)
odd = evaluate_split_part(split.odd, n, K, LUCAS)
print(f"S_2K(i) = {total}; 2^r * even = {2**r * even}, odd = {odd}")
