"""Numerical semigroups generated by finitely many positive integers.

Plane branches with one Puiseux pair have value semigroup ``<p, q>`` with
``p < q`` coprime; the general constructor is kept for the monomial
classifier in :mod:`puncthilb.ps_compare`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import gcd


class SemigroupError(ValueError):
    """Raised for generator lists that do not define a numerical semigroup."""


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    gap_set: frozenset[int] = field(repr=False)
    conductor: int

    @property
    def delta(self) -> int:
        return len(self.gap_set)

    @property
    def gaps(self) -> list[int]:
        return sorted(self.gap_set)

    @property
    def is_plane_branch(self) -> bool:
        return len(self.generators) == 2 and self.generators[0] >= 2

    @property
    def p(self) -> int:
        self._require_two()
        return self.generators[0]

    @property
    def q(self) -> int:
        self._require_two()
        return self.generators[1]

    def _require_two(self) -> None:
        if not self.is_plane_branch:
            raise SemigroupError(
                f"expected two coprime generators 2 <= p < q, got {self.generators}"
            )

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        if self.is_plane_branch:
            return two_generator_member(self.p, self.q, n)
        return n not in self.gap_set

    __contains__ = contains

    def elements_below(self, bound: int) -> list[int]:
        return [n for n in range(max(bound, 0)) if self.contains(n)]

    def label(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def two_generator_member(p: int, q: int, n: int) -> bool:
    """Closed-form membership test for ``<p, q>`` with ``gcd(p, q) = 1``.

    ``n = a*p + b*q`` has a unique solution with ``0 <= b < p``; ``n`` is in
    the semigroup iff that ``b*q`` does not exceed ``n``.
    """
    if n < 0:
        return False
    b = (n * pow(q, -1, p)) % p if p > 1 else 0
    return b * q <= n


def reachable_upto(generators: tuple[int, ...], bound: int) -> list[bool]:
    """Dynamic-programming reachability table for ``0 <= n < bound``."""
    table = [False] * bound
    if bound:
        table[0] = True
    for n in range(1, bound):
        table[n] = any(g <= n and table[n - g] for g in generators)
    return table


def make_semigroup(generators) -> NumericalSemigroup:
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise SemigroupError("at least one generator is required")
    if gens[0] <= 0:
        raise SemigroupError(f"generators must be positive, got {gens}")
    if reduce(gcd, gens) != 1:
        raise SemigroupError(f"gcd of {gens} is not 1, the gap set would be infinite")
    # drop generators that are sums of smaller ones
    minimal: list[int] = []
    for g in gens:
        if not minimal or not reachable_upto(tuple(minimal), g + 1)[g]:
            minimal.append(g)
    smallest = minimal[0]
    # grow the table until `smallest` consecutive members appear
    bound = max(64, 4 * smallest * minimal[-1])
    while True:
        table = reachable_upto(tuple(minimal), bound)
        run = 0
        for n, member in enumerate(table):
            run = run + 1 if member else 0
            if run == smallest:
                start = n - smallest + 1
                gaps = frozenset(k for k in range(start) if not table[k])
                conductor = max(gaps) + 1 if gaps else 0
                return NumericalSemigroup(tuple(minimal), gaps, conductor)
        bound *= 2


@lru_cache(maxsize=None)
def plane_branch(p: int, q: int) -> NumericalSemigroup:
    """``<p, q>`` with the plane-branch preconditions enforced."""
    if not (2 <= p < q):
        raise SemigroupError(f"need 2 <= p < q, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise SemigroupError(f"p={p} and q={q} are not coprime")
    return make_semigroup([p, q])
