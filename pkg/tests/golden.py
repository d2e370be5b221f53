"""Worked expansions transcribed term by term.

Each term is ``(sign, ket offsets)`` relative to the start position ``n``.
Memory kets are ``(n2, n1, p)``, memoryless kets ``(n, p)``.  Scale of
step ``j`` is ``2**(-j/2)``.
"""

# Memory walk, case c, from |n-1, n, 0>.
MEMORY_STEPS = {
    1: [(+1, (0, -1, 0)), (+1, (0, 1, 1))],
    2: [(+1, (-1, 0, 0)), (+1, (-1, -2, 1)), (+1, (1, 0, 0)), (-1, (1, 2, 1))],
    3: [
        (+1, (0, -1, 0)), (+1, (0, 1, 1)), (+1, (-2, -1, 0)), (-1, (-2, -3, 1)),
        (+1, (0, 1, 0)), (+1, (0, -1, 1)), (-1, (2, 1, 0)), (+1, (2, 3, 1)),
    ],
    4: [
        (+1, (-1, 0, 0)), (+1, (-1, -2, 1)), (+1, (1, 0, 0)), (-1, (1, 2, 1)),
        (+1, (-1, -2, 0)), (+1, (-1, 0, 1)), (-1, (-3, -2, 0)), (+1, (-3, -4, 1)),
        (+1, (1, 0, 0)), (+1, (1, 2, 1)), (+1, (-1, 0, 0)), (-1, (-1, -2, 1)),
        (-1, (1, 2, 0)), (-1, (1, 0, 1)), (+1, (3, 2, 0)), (-1, (3, 4, 1)),
    ],
}

# Memoryless Hadamard walk from |n, 0>.
ORDER1_STEPS = {
    1: [(+1, (-1, 0)), (+1, (1, 1))],
    2: [(+1, (-2, 0)), (+1, (0, 1)), (+1, (0, 0)), (-1, (2, 1))],
    3: [
        (+1, (-3, 0)), (+1, (-1, 1)), (+1, (-1, 0)), (-1, (1, 1)),
        (+1, (-1, 0)), (+1, (1, 1)), (-1, (1, 0)), (+1, (3, 1)),
    ],
}


def combine(terms, make_ket):
    """Sum the transcribed terms into ``{ket: numerator}`` with zeros dropped."""
    out = {}
    for sign, offsets in terms:
        ket = make_ket(offsets)
        out[ket] = out.get(ket, 0) + sign
    return {k: v for k, v in out.items() if v}
