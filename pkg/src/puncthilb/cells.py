"""Affine-cell dimensions, Euler numbers and Betti numbers of ``Hilb^r``.

Each ``Delta`` in ``Mod_r(Gamma)`` contributes one affine cell ``H(Delta)``.
Odd Betti numbers vanish, so a report only carries the even ones:
``betti_hom[d]`` counts cells of dimension ``d`` and ``betti_coh[d]`` counts
cells of codimension ``d``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .semigroup import NumericalSemigroup
from .semimodule import EmbeddedSemimodule, NormalizedSemimodule, enumerate_mod_r


def cell_windows(gamma: NumericalSemigroup, delta_mod: EmbeddedSemimodule, lower_index: int = 0,
                 closed: bool = False) -> list[list[int]]:
    """Per p-basis element, the points of ``(-d + Gamma) ∩ [a_i, a_i + q)`` missing from ``Lam``.

    Points are reported in the 0-normalized coordinates.  ``closed`` uses the
    window ``[a_i, a_i + q]`` instead, which never changes the count because
    ``a_i + q`` always lies in ``Lam``.
    """
    lam, d, q = delta_mod.lam, delta_mod.shift, delta_mod.q
    extra = 1 if closed else 0
    out = []
    for i, a in enumerate(lam.p_basis):
        if i < lower_index:
            out.append([])
            continue
        out.append([x for x in range(a, a + q + extra) if gamma.contains(x + d) and not lam.contains(x)])
    return out


def cell_dimension(gamma: NumericalSemigroup, delta_mod: EmbeddedSemimodule, lower_index: int = 0) -> int:
    """Dimension of the affine cell ``H(Delta)``.

    The sum runs over all ``i = 0 .. p-1``.  ``lower_index=1`` reproduces the
    variant that skips ``a_0``; it is kept only to show that it disagrees with
    the known E6/E8 tables.
    """
    return sum(len(w) for w in cell_windows(gamma, delta_mod, lower_index))


def cell_dimension_stable(lam: NormalizedSemimodule) -> int:
    """Cell dimension for ``r >= c``: ``sum_i #([a_i, a_i + q] \\ Lam)``."""
    q = lam.q
    return sum(
        sum(1 for x in range(a, a + q + 1) if not lam.contains(x))
        for a in lam.p_basis
    )


@dataclass(frozen=True)
class CellRecord:
    semimodule: EmbeddedSemimodule
    dim: int
    codim: int


@dataclass(frozen=True)
class TopologyReport:
    gamma: NumericalSemigroup
    r: int
    cells: tuple[CellRecord, ...] = field(repr=False)
    dim_hilb: int
    betti_hom: tuple[int, ...]
    betti_coh: tuple[int, ...]

    @property
    def euler(self) -> int:
        return len(self.cells)

    @property
    def poincare(self) -> str:
        return poincare_string(self.betti_hom)


def poincare_string(betti: tuple[int, ...]) -> str:
    """``sum_d h_2d * T^(2d)``, e.g. ``1 + T^2 + 2*T^4``."""
    terms = []
    for d, h in enumerate(betti):
        if not h:
            continue
        if d == 0:
            terms.append(str(h))
        else:
            terms.append(f"T^{2 * d}" if h == 1 else f"{h}*T^{2 * d}")
    return " + ".join(terms) if terms else "0"


def topology_report(gamma: NumericalSemigroup, r: int, lower_index: int = 0) -> TopologyReport:
    mods = enumerate_mod_r(gamma, r)
    dims = [cell_dimension(gamma, m, lower_index) for m in mods]
    top = max(dims, default=0)
    cells = tuple(CellRecord(m, d, top - d) for m, d in zip(mods, dims))
    hom = Counter(dims)
    coh = Counter(top - d for d in dims)
    return TopologyReport(
        gamma=gamma,
        r=r,
        cells=cells,
        dim_hilb=top,
        betti_hom=tuple(hom[d] for d in range(top + 1)),
        betti_coh=tuple(coh[d] for d in range(top + 1)),
    )


def stabilization_check(gamma: NumericalSemigroup, r_max: int) -> tuple[bool, dict[int, list[int]]]:
    """Compare cell-dimension multisets for ``c <= r <= r_max`` with the one at ``r = c``."""
    c = gamma.conductor
    if r_max < c:
        raise ValueError(f"r_max={r_max} is below the conductor {c}")
    dims = {
        r: sorted(cell_dimension(gamma, m) for m in enumerate_mod_r(gamma, r))
        for r in range(c, r_max + 1)
    }
    return all(v == dims[c] for v in dims.values()), dims
