"""Independent cell dimensions for monomial curves, by brute-force algebra.

For an ideal with valuation set ``Delta`` every element ``x`` of ``Delta``
has a unique generator ``t^x + sum c_j t^j`` with ``j`` running over
``Gamma \\ Delta``.  Closure under multiplication by ``t^p`` and ``t^q``
cuts out the cell inside the space of the ``c``; sympy solves the system and
the number of parameters left free is the dimension.
"""

import sympy as sp

from puncthilb.semimodule import enumerate_mod_r


def ideal_cell_dimension(gamma, delta_mod, r):
    p, q = gamma.p, gamma.q
    top = r + 2 * gamma.delta
    members = [x for x in range(top) if delta_mod.contains(x)]
    outside = [j for j in range(top) if gamma.contains(j) and not delta_mod.contains(j)]
    unknowns = []
    gens = {}
    for x in members:
        poly = {x: sp.Integer(1)}
        for j in outside:
            if j > x:
                s = sp.Symbol(f"c_{x}_{j}")
                unknowns.append(s)
                poly[j] = s
        gens[x] = poly

    def reduce(g):
        g = dict(g)
        for e in range(top):
            c = g.get(e, 0)
            if e in gens and c != 0:
                for j, v in gens[e].items():
                    g[j] = g.get(j, 0) - c * v
        return [sp.expand(v) for e, v in g.items() if e < top and e not in gens and sp.expand(v) != 0]

    eqs = []
    for x in members:
        for m in (p, q):
            eqs += reduce({e + m: v for e, v in gens[x].items() if e + m < top})
    if not eqs:
        return len(unknowns)
    sols = sp.solve(eqs, unknowns, dict=True)
    return max(len(set(unknowns) - set(s)) for s in sols)


def ideal_dimensions(gamma, r):
    return [ideal_cell_dimension(gamma, m, r) for m in enumerate_mod_r(gamma, r)]
