"""
Classical, memoryless and memory walks side by side
===================================================

Reproduce the data behind the three comparison plots: 10 and 40 steps from
the default starts, and 40 steps from the symmetric starts.  Plots are
drawn if matplotlib is installed.
"""

# %%
from memwalk import SYMMETRIC, compare_walks, peak_locations

fig1 = compare_walks(10)
for k, c, q, m in fig1.rows():
    if (k - 10) % 2 == 0:
        print(f"{k:4d}  {float(c):.4f}  {float(q):.4f}  {float(m):.4f}")

# %%
print("memory-walk peaks, 10 steps:", peak_locations(fig1.memory))
fig2 = compare_walks(40)
print("memory-walk peaks, 40 steps:", peak_locations(fig2.memory))
print("P(0) after 40 steps:", float(fig2.memory[0]))

# %%
fig3 = compare_walks(40, SYMMETRIC)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 3, figsize=(15, 4))
    for ax, table, title in zip(axes, (fig1, fig2, fig3),
                                ("10 steps", "40 steps", "40 steps, symmetric start")):
        ks = [k for k in table.positions if (k - table.steps) % 2 == 0]
        for label, col in (("classical", table.classical), ("quantum", table.quantum),
                           ("memory", table.memory)):
            ax.plot(ks, [float(col[k]) for k in ks], marker=".", label=label)
        ax.set_title(title)
        ax.set_xlabel("position")
    axes[0].set_ylabel("probability")
    axes[0].legend()
    fig.savefig("three_walks.png", dpi=100, bbox_inches="tight")
    print("wrote three_walks.png")
