"""Independent brute-force evaluators used as test oracles.

Everything here recomputes results from the raw slot tuples of a
parsed diagram with union-find and exhaustive enumeration, sharing no
code with the engines under test: circles are counted by merging slot
pairs instead of walking port permutations, and the bracket is the
literal sum over all resolution choices.  Exponential, fine below
about 16 crossings.
"""

from collections import Counter
from itertools import product

# slot pairs merged by each resolution choice, matching the package's
# orientation convention (slots counterclockwise from the incoming
# understrand)
_A_PAIRS = ((0, 1), (2, 3))
_B_PAIRS = ((3, 0), (1, 2))


def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def _union(parent, a, b):
    ra, rb = _find(parent, a), _find(parent, b)
    if ra != rb:
        parent[ra] = rb


def oracle_circles(diagram, choices):
    """Circle count of one resolution, by union-find over slot ends."""
    crossings = diagram.crossings
    n = len(crossings)
    if n == 0:
        return diagram.free_loops
    parent = list(range(4 * n))
    ends = {}
    for ci, x in enumerate(crossings):
        for si, label in enumerate(x.slots):
            ends.setdefault(label, []).append(4 * ci + si)
    for pair in ends.values():
        _union(parent, pair[0], pair[1])
    for ci, choice in enumerate(choices):
        pairs = _A_PAIRS if choice == "A" else _B_PAIRS
        for p, q in pairs:
            _union(parent, 4 * ci + p, 4 * ci + q)
    return len({_find(parent, i) for i in range(4 * n)})


def oracle_bracket(diagram):
    """Bracket as {exponent: coefficient}, literal state sum."""
    n = len(diagram.crossings)
    if n == 0 and diagram.free_loops == 0:
        # the empty diagram is the unit for disjoint union
        return {0: 1}
    histogram = Counter()
    for choices in product("AB", repeat=n):
        a_count = choices.count("A")
        circles = oracle_circles(diagram, choices)
        histogram[(a_count - (n - a_count), circles - 1)] += 1
    total = Counter()
    for (writhe_exp, loops), mult in histogram.items():
        # delta**loops expanded by hand: (-A^2 - A^-2)**loops
        for k in range(loops + 1):
            comb = 1
            for i in range(k):
                comb = comb * (loops - i) // (i + 1)
            exp = writhe_exp + 2 * k - 2 * (loops - k)
            total[exp] += mult * comb * (-1) ** loops
    return {e: c for e, c in total.items() if c}
