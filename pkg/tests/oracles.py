"""Independent brute-force oracles for the enumeration machinery.

These deliberately avoid the package's constraint solver: candidate chains
are produced by plain cartesian products over bounded coefficient vectors
and filtered by the defining equations, so agreement with the package's
enumerations is meaningful evidence.
"""

import itertools

from steiner_lab import AdcMorphism, Chain


def bounded_chains(K, p, bound):
    """Every positive degree-p chain with all coefficients <= bound."""
    tokens = K.tokens(p)
    out = []
    for values in itertools.product(range(bound + 1), repeat=len(tokens)):
        out.append(Chain.make(p, zip(tokens, values)))
    return out


def brute_morphisms(src, dst, bound):
    """All morphisms src -> dst with image coefficients <= bound."""
    partials = [{}]
    for p in src.degrees():
        candidates = bounded_chains(dst, p, bound)
        for token in src.tokens(p):
            grown = []
            for assignment in partials:
                for z in candidates:
                    if p == 0:
                        if dst.e(z) != src.aug_of(token):
                            continue
                    else:
                        pushed = Chain.zero(p - 1)
                        for t, c in src.diff_of(token).items():
                            pushed = pushed + c * assignment[t]
                        image = dst.d(z) if not z.is_zero else Chain.zero(p - 1)
                        if image != pushed:
                            continue
                    new = dict(assignment)
                    new[token] = z
                    grown.append(new)
            partials = grown
    return [AdcMorphism(src, dst, images) for images in partials]


def brute_cells(K, dim, bound):
    """All dim-cells with coefficients <= bound, straight from the axioms."""
    levels = [bounded_chains(K, p, bound) for p in range(dim + 1)]
    rows = [
        (x, y)
        for x in levels[0]
        for y in levels[0]
        if K.e(x) == 1 and K.e(y) == 1
    ]
    stacks = [((x,), (y,)) for x, y in rows]
    for p in range(1, dim + 1):
        grown = []
        for x0, x1 in stacks:
            want = x1[-1] - x0[-1]
            for a in levels[p]:
                if K.d(a) != want:
                    continue
                if p == dim:
                    grown.append((x0 + (a,), x1 + (a,)))
                else:
                    for b in levels[p]:
                        if K.d(b) == want:
                            grown.append((x0 + (a,), x1 + (b,)))
        stacks = grown
    from steiner_lab import CellTableau

    return [CellTableau(K, x0, x1) for x0, x1 in stacks]
