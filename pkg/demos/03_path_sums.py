"""
Path sums, the phase rule and the closed form
=============================================

Every amplitude of the case-c Hadamard walk is a signed count of L/R
paths.  Three routes give the same integers: stepping the operators,
enumerating paths with the isolated-move phase rule, and the closed-form
sums over compositions.
"""

# %%
from memwalk import AmplitudeQuery, closed_form_amplitude, path_phase, path_stats, path_sum_amplitude

seq = "LRLLRLLLRRL"
print(path_stats(seq), "phase", path_phase(seq))

# %%
# Origin amplitudes after 6 steps from each route.
from memwalk import Ending, amplitude_of, memory_walk, run

state = run(memory_walk(6))
for e in Ending:
    print(e.value,
          amplitude_of(state, e.ket(0)).numerator,
          path_sum_amplitude(6, 0, e).numerator,
          closed_form_amplitude(AmplitudeQuery(6, 0, e)).numerator)

# %%
from memwalk import triangle_equivalence

report = triangle_equivalence(12)
print(f"{report.compared} tuples compared, {len(report.mismatches)} mismatches")

# %%
# Composition counts behind the closed form.
from memwalk import compositions_with_ones, ones_bounds

n, parts = 9, 4
print(ones_bounds(n, parts), [compositions_with_ones(n, parts, j) for j in range(parts + 1)])
