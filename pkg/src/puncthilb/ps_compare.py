"""Monomial semigroups and the Pfister-Steenbrink cell-dimension formula.

The PS formula works in the delta-normalized picture: for the minimal
generators ``S'`` of ``-r + Delta`` below ``2*delta`` it sums the sizes of
``J_g = [g + 1, 2*delta - 1] \\ (-r + Delta)``.  :func:`ps_dimension`
evaluates it next to :func:`puncthilb.cells.cell_dimension`; nothing here
assumes the two agree, and on ``<3,4>`` with ``Delta = <4,6,7>`` they do not.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cells import cell_dimension, cell_windows
from .semigroup import NumericalSemigroup, plane_branch
from .semimodule import EmbeddedSemimodule, delta_normalize, generated, minimal_generators
from .series import format_series, parse_series
from .stdbasis import (
    StdBasisProblem,
    default_horizon,
    generator_template,
    is_standard_basis,
    monomial_curve,
    same_module,
    solve_dependent_coefficients,
)

TYPE1, TYPE2, TYPE3, NOT_MONOMIAL = "TYPE1", "TYPE2", "TYPE3", "NOT_MONOMIAL"


@dataclass(frozen=True)
class MonomialClass:
    kind: str
    params: dict = field(default_factory=dict)

    def __str__(self):
        if self.kind == NOT_MONOMIAL:
            return self.kind
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.kind}({inner})"


def _type1(m, s, b):
    return lambda n: (n % m == 0 and n // m <= s) or n >= s * m + b


def _type2(m, r):
    return lambda n: n == 0 or m <= n <= m + r - 1 or n >= m + r + 1


def _type3(m):
    return lambda n: n in (0, m) or m + 2 <= n <= 2 * m or n >= 2 * m + 2


def _candidates(c: int):
    top = c + 2
    for m in range(2, top + 1):
        for s in range(1, c + 1):
            for b in range(1, m):
                yield MonomialClass(TYPE1, {"m": m, "s": s, "b": b}), _type1(m, s, b), s * m + b
    for m in range(3, top + 1):
        for r in range(2, m):
            yield MonomialClass(TYPE2, {"m": m, "r": r}), _type2(m, r), m + r + 1
    for m in range(3, top + 1):
        yield MonomialClass(TYPE3, {"m": m}), _type3(m), 2 * m + 2


def classify_monomial(gamma: NumericalSemigroup) -> MonomialClass:
    """Match ``gamma`` against the three closed forms of monomial semigroups.

    Parameters are searched with ``m <= c + 2``: a larger ``m`` puts a gap at
    ``m - 1 >= c``, which a semigroup with conductor ``c`` cannot have.
    """
    c = gamma.conductor
    for cls, member, tail in _candidates(c):
        bound = max(c, tail) + 1
        if all(member(n) == gamma.contains(n) for n in range(bound)):
            return cls
    return MonomialClass(NOT_MONOMIAL)


@dataclass
class PsDimensionReport:
    semimodule: EmbeddedSemimodule
    r: int
    delta_normal: EmbeddedSemimodule
    s_prime: list[int]
    j_sets: dict[int, list[int]]
    ps_dim: int
    eq2_dim: int

    @property
    def agree(self) -> bool:
        return self.ps_dim == self.eq2_dim

    def as_dict(self) -> dict:
        return {
            "shift": self.semimodule.shift,
            "alphas": list(self.semimodule.alphas),
            "r": self.r,
            "delta_normal_min_generators": minimal_generators(self.delta_normal),
            "delta_normal_shift": self.delta_normal.shift,
            "s_prime": self.s_prime,
            "j_sets": {str(k): v for k, v in self.j_sets.items()},
            "ps_dim": self.ps_dim,
            "eq2_dim": self.eq2_dim,
            "agree": self.agree,
        }


def ps_dimension(gamma: NumericalSemigroup, delta_mod: EmbeddedSemimodule, r: int,
                 windows: str = "ps") -> PsDimensionReport:
    """Evaluate the PS dimension formula for ``Delta`` in ``Mod_r``.

    ``windows="eq2"`` replaces the ``J`` sets by the windows of
    :func:`cell_dimension`; it exists only as a self-comparison check.
    """
    normal = delta_normalize(gamma, delta_mod, r)
    top = 2 * gamma.delta - 1
    s_prime = [g for g in minimal_generators(normal) if 0 <= g <= top]
    if windows == "ps":
        j_sets = {g: [n for n in range(g + 1, top + 1) if not normal.contains(n)] for g in s_prime}
    elif windows == "eq2":
        d = delta_mod.shift
        j_sets = {d + a: [d + x for x in w] for a, w in
                  zip(delta_mod.lam.p_basis, cell_windows(gamma, delta_mod))}
    else:
        raise ValueError(f"unknown window family {windows!r}")
    return PsDimensionReport(
        semimodule=delta_mod,
        r=r,
        delta_normal=normal,
        s_prime=s_prime,
        j_sets=j_sets,
        ps_dim=sum(len(v) for v in j_sets.values()),
        eq2_dim=cell_dimension(gamma, delta_mod),
    )


@dataclass
class Link:
    name: str
    passed: bool
    detail: str


@dataclass
class CounterexampleReport:
    gamma: NumericalSemigroup
    generators: list[int]
    r: int
    links: list[Link]
    ps: PsDimensionReport | None
    ideal: list[str]

    @property
    def status(self) -> str:
        return "PASS" if all(link.passed for link in self.links) else "BROKEN"

    def as_dict(self) -> dict:
        return {
            "semigroup": list(self.gamma.generators),
            "delta_generators": self.generators,
            "r": self.r,
            "status": self.status,
            "links": [{"name": l.name, "status": "PASS" if l.passed else "FAIL", "detail": l.detail}
                      for l in self.links],
            "ps_report": self.ps.as_dict() if self.ps else None,
            "ideal": self.ideal,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def to_markdown(self) -> str:
        g = ",".join(map(str, self.gamma.generators))
        gens = ",".join(map(str, self.generators))
        lines = [
            f"# Cell dimension check for Delta = <{gens}> over <{g}>",
            "",
            f"Status: **{self.status}**",
            "",
            "| link | status | detail |",
            "|---|---|---|",
        ]
        for l in self.links:
            lines.append(f"| {l.name} | {'PASS' if l.passed else 'FAIL'} | {l.detail} |")
        if self.ideal:
            lines += ["", "Ideal generators: " + ", ".join(f"`{h}`" for h in self.ideal)]
        return "\n".join(lines) + "\n"


def counterexample_report(p: int = 3, q: int = 4, generators=(4, 6, 7), r: int = 2,
                          expected_normal=(2, 4, 5), expected_ps: int = 1, expected_eq2: int = 0,
                          expected_ideal=("t^4", "t^6", "t^7"), windows: str = "ps") -> CounterexampleReport:
    """Machine-checked chain on the monomial E6 curve ``C[[t^3, t^4]]``.

    The defaults reproduce the case where the PS formula predicts a 1-cell
    but the only ideal with valuation semimodule ``<4,6,7>`` is
    ``(t^4, t^6, t^7)``.  Any ``expected_*`` set to ``None`` is reported but
    not asserted.
    """
    gamma = plane_branch(p, q)
    delta_mod = generated(gamma, generators)
    links: list[Link] = []

    inside = delta_mod.is_inside(gamma)
    codim = delta_mod.codim(gamma) if inside else None
    links.append(Link("membership", inside and codim == r,
                      f"Delta inside Gamma: {inside}, #(Gamma \\ Delta) = {codim}"))
    if not links[-1].passed:
        return CounterexampleReport(gamma, list(generators), r, links, None, [])

    report = ps_dimension(gamma, delta_mod, r, windows=windows)
    normal = report.delta_normal
    if expected_normal is not None:
        want = generated(gamma, expected_normal)
        ok = want == normal
    else:
        ok = True
    links.append(Link("delta_normalization", ok,
                      f"-{r} + Delta has minimal generators {minimal_generators(normal)}"))
    links.append(Link("ps_dimension", expected_ps is None or report.ps_dim == expected_ps,
                      f"sum of #J = {report.ps_dim}; J = {report.j_sets}"))
    links.append(Link("cell_dimension", expected_eq2 is None or report.eq2_dim == expected_eq2,
                      f"window count = {report.eq2_dim}"))

    trunc = default_horizon(gamma, delta_mod.shift)
    ring = monomial_curve(p, q, trunc)
    template = generator_template(gamma, delta_mod, ring[1])
    n_open = len([s for s in template.slots if s.kind != "dependent"])
    sol = solve_dependent_coefficients(template.instantiate({}, trunc), ring)
    ideal = [format_series(h) for h in sol.generators]
    unique = sol.resolved and n_open == 0
    if expected_ideal is not None:
        target = [parse_series(x, trunc) for x in expected_ideal]
        unique = unique and same_module(ring, sol.generators, target, trunc - 8)
    links.append(Link("unique_ideal", unique,
                      f"{template.free_count} free slots, {n_open} open slots; generators {ideal}"))
    standard = bool(sol.resolved and is_standard_basis(StdBasisProblem(ring, sol.generators, trunc)))
    links.append(Link("standard_basis", standard, "all minimal S-process reductions vanish"
                      if standard else "some S-process reduction is nonzero"))
    return CounterexampleReport(gamma, list(generators), r, links, report, ideal)
