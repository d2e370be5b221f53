"""
First steps of the walk with memory
===================================

Step the Hadamard walk with two-step memory (shift case c) from |-1,0,0>
and print the exact state after each step.  Amplitudes are stored as
integer numerators over a shared scale 2**(n/2).
"""

# %%
from memwalk import memory_walk, measure_positions
from memwalk.engine import iter_states

for state in iter_states(memory_walk(4)):
    print(f"after {state.steps_taken} steps (scale 2^-{state.scale}/2):")
    for ket, amp in state.items():
        print(f"   {amp.numerator:+d} |{ket.n2},{ket.n1},{ket.p}>")

# %%
# Interference first shows up at step 4: two paths land on |-1,0,0>
# with the same sign, two others on |-1,-2,1> with opposite signs.
print(measure_positions(state).probs)

# %%
# The memoryless Hadamard walk interferes one step earlier.
from memwalk import WalkKind, WalkSpec, run

print(run(WalkSpec(WalkKind.QUANTUM, 3)).numerators)
