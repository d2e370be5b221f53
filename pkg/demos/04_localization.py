"""
Localization at the origin
==========================

From |-1,0,0> the amplitudes of |-1,0,0> and |1,0,0> stay positive and sum
to exactly 1 at every even step, so the origin keeps at least half of the
probability.  The symmetric four-ket start is shown for comparison.
"""

# %%
from memwalk import SYMMETRIC, localization_series

for r in localization_series(40):
    print(f"n={r.n:2d}  P(0)={float(r.p0):.6f}  a0LR+a0RL={r.lr_plus_rl}  "
          f"a0LL={r.ll.value():+.5f}  a0RR={r.rr.value():+.5f}")

# %%
sym = localization_series(40, SYMMETRIC)
print("symmetric start, P(0) at n=40:", float(sym.at(40).p0))
