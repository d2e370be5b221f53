"""
The four shift cases and a non-unitary shift
============================================

Cases a and d ignore the coin: a translates rigidly, d bounces between two
sites.  Case b is computed for comparison with case c.  A shift that sends
both movers with coin 0 to the same ket is caught by the unitarity audit.
"""

# %%
from memwalk import SHIFT_CASES, memory_walk, run_distribution, symmetry_check, unitarity_audit
from memwalk.operators import degenerate_shift_table, shift_table

for case in "abcd":
    d = run_distribution(memory_walk(8, case))
    print(case, {k: str(v) for k, v in d.probs.items()})

# %%
b = run_distribution(memory_walk(40, "b"))
print("case b P(0) at 40 steps:", float(b[0]), "symmetric:", symmetry_check(b).symmetric)

# %%
window = (-10, 10)
for case, shift in SHIFT_CASES.items():
    print(case, unitarity_audit(shift_table(shift, window), window).status)
print("degenerate:", unitarity_audit(degenerate_shift_table(window), window))
