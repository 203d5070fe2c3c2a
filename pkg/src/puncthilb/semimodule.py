"""Gamma-semimodules over ``Gamma = <p, q>`` in p-basis normal form.

A 0-normalized semimodule ``Lam`` (``min Lam = 0``) is the union of the
arithmetic progressions ``a_i + p*N`` where ``a_i = i*q - alpha_i*p``.
An arbitrary semimodule is ``d + Lam`` with ``d = min``.  Semimodules inside
``Gamma`` with ``#(Gamma \\ Delta) = r`` form ``Mod_r(Gamma)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .semigroup import NumericalSemigroup, plane_branch


class InvalidBasisError(ValueError):
    pass


class OracleBoundError(RuntimeError):
    """The brute-force enumeration was asked to search too large a window."""


@dataclass(frozen=True, order=True)
class NormalizedSemimodule:
    p: int
    q: int
    alphas: tuple[int, ...]

    @property
    def gamma(self) -> NumericalSemigroup:
        return plane_branch(self.p, self.q)

    @property
    def p_basis(self) -> tuple[int, ...]:
        return tuple(i * self.q - a * self.p for i, a in enumerate(self.alphas))

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        i = (n * pow(self.q, -1, self.p)) % self.p
        return n >= self.p_basis[i]

    __contains__ = contains

    @property
    def gap_count(self) -> int:
        return gap_count(self)

    @property
    def gaps(self) -> list[int]:
        top = max(self.p_basis)
        return [n for n in range(top) if not self.contains(n)]

    @property
    def conductor(self) -> int:
        gaps = self.gaps
        return gaps[-1] + 1 if gaps else 0


@dataclass(frozen=True, order=True)
class EmbeddedSemimodule:
    """The semimodule ``shift + lam``; ``shift`` is its minimum."""

    lam: NormalizedSemimodule
    shift: int

    @property
    def p(self) -> int:
        return self.lam.p

    @property
    def q(self) -> int:
        return self.lam.q

    @property
    def alphas(self) -> tuple[int, ...]:
        return self.lam.alphas

    @property
    def basis(self) -> tuple[int, ...]:
        """Shifted p-basis ``b_i = shift + a_i``."""
        return tuple(self.shift + a for a in self.lam.p_basis)

    def contains(self, n: int) -> bool:
        return self.lam.contains(n - self.shift)

    __contains__ = contains

    def elements_below(self, bound: int) -> list[int]:
        return [n for n in range(self.shift, bound) if self.contains(n)]

    @property
    def conductor(self) -> int:
        return self.shift + self.lam.conductor

    def is_inside(self, gamma: NumericalSemigroup) -> bool:
        # Gamma is closed under +p, so checking the basis suffices
        return all(gamma.contains(b) for b in self.basis)

    def codim(self, gamma: NumericalSemigroup) -> int:
        """``#(Gamma \\ Delta)``; requires ``Delta`` to lie in ``Gamma``."""
        if not self.is_inside(gamma):
            raise ValueError(f"{self} is not contained in {gamma.label()}")
        return self.lam.gap_count + self.shift - gamma.delta

    def gaps_above_min(self) -> list[int]:
        return [self.shift + g for g in self.lam.gaps]


def from_alphas(gamma: NumericalSemigroup, alphas) -> NormalizedSemimodule:
    p, q = gamma.p, gamma.q
    alphas = tuple(int(a) for a in alphas)
    if len(alphas) != p:
        raise InvalidBasisError(f"expected {p} alphas, got {len(alphas)}")
    if alphas[0] != 0:
        raise InvalidBasisError("alpha_0 must be 0")
    if any(x > y for x, y in zip(alphas, alphas[1:])):
        raise InvalidBasisError(f"alphas {alphas} are not non-decreasing")
    if alphas[-1] >= q:
        raise InvalidBasisError(f"alpha_(p-1) = {alphas[-1]} must be < q = {q}")
    lam = NormalizedSemimodule(p, q, alphas)
    negative = [(i, a) for i, a in enumerate(lam.p_basis) if a < 0]
    if negative:
        i, a = negative[0]
        raise InvalidBasisError(f"a_{i} = {a} < 0 for alphas {alphas}")
    return lam


def p_basis_of_set(gamma: NumericalSemigroup, generators) -> tuple[NormalizedSemimodule, int]:
    """0-normalization of ``<generators>_Gamma`` together with its minimum."""
    gens = sorted(set(int(s) for s in generators))
    if not gens:
        raise ValueError("need at least one generator")
    p, q = gamma.p, gamma.q
    m = gens[0]
    basis = []
    for i in range(p):
        residue = (i * q) % p
        best = None
        for s in gens:
            # smallest element of s - m + Gamma in the residue class is s - m + b*q
            b = ((residue - (s - m)) * pow(q, -1, p)) % p
            cand = s - m + b * q
            best = cand if best is None else min(best, cand)
        basis.append(best)
    alphas = tuple((i * q - a) // p for i, a in enumerate(basis))
    return from_alphas(gamma, alphas), m


def generated(gamma: NumericalSemigroup, generators) -> EmbeddedSemimodule:
    lam, m = p_basis_of_set(gamma, generators)
    return EmbeddedSemimodule(lam, m)


def gap_count(lam: NormalizedSemimodule) -> int:
    return sum(a // lam.p for a in lam.p_basis)


def delta_normalize(gamma: NumericalSemigroup, delta_mod: EmbeddedSemimodule, r: int) -> EmbeddedSemimodule:
    """``-r + Delta``, checked to have exactly ``delta`` elements in ``[0, 2*delta)``."""
    codim = delta_mod.codim(gamma)
    if codim != r:
        raise ValueError(f"semimodule has codimension {codim}, not {r}")
    shifted = EmbeddedSemimodule(delta_mod.lam, delta_mod.shift - r)
    width = 2 * gamma.delta
    count = sum(1 for n in range(width) if shifted.contains(n))
    if shifted.shift < 0 or count != gamma.delta:
        raise AssertionError(
            f"delta-normalization witness failed: {count} elements in [0, {width})"
        )
    return shifted


def minimal_generators(delta_mod: EmbeddedSemimodule) -> list[int]:
    """Elements ``x`` with neither ``x - p`` nor ``x - q`` in the semimodule.

    Only p-basis elements can qualify, since every other element has
    ``x - p`` in the set.
    """
    q = delta_mod.q
    return sorted(b for b in delta_mod.basis if not delta_mod.contains(b - q))


@lru_cache(maxsize=None)
def _all_normalized(p: int, q: int) -> tuple[NormalizedSemimodule, ...]:
    out = []
    # a_i >= 0 bounds alpha_i by floor(i*q/p)
    caps = [i * q // p for i in range(p)]

    def extend(prefix: list[int]) -> None:
        i = len(prefix)
        if i == p:
            out.append(NormalizedSemimodule(p, q, tuple(prefix)))
            return
        for a in range(prefix[-1], caps[i] + 1):
            extend(prefix + [a])

    extend([0])
    return tuple(out)


def all_normalized(gamma: NumericalSemigroup) -> tuple[NormalizedSemimodule, ...]:
    """Every 0-normalized semimodule, in lexicographic alpha order."""
    return _all_normalized(gamma.p, gamma.q)


def enumerate_mod_r(gamma: NumericalSemigroup, r: int) -> list[EmbeddedSemimodule]:
    if r < 0:
        raise ValueError("r must be non-negative")
    result = []
    for lam in all_normalized(gamma):
        d = r + gamma.delta - lam.gap_count
        if d < 0:
            continue
        cand = EmbeddedSemimodule(lam, d)
        if cand.is_inside(gamma):
            result.append(cand)
    return result


def oracle_bound(gamma: NumericalSemigroup, r: int) -> int:
    # min Delta <= r + delta and Delta contains [min Delta + c, oo)
    return r + gamma.delta + gamma.conductor


def oracle_enumerate_mod_r(gamma: NumericalSemigroup, r: int, max_elements: int = 48) -> list[frozenset[int]]:
    """Brute-force ``Mod_r``: complements of size-``r`` down-sets of ``Gamma``.

    Each result is ``Delta`` intersected with ``[0, B)``; everything at or
    above ``B = oracle_bound(gamma, r)`` belongs to every ``Delta``.
    """
    p, q = gamma.p, gamma.q
    bound = oracle_bound(gamma, r)
    elems = gamma.elements_below(bound)
    if len(elems) > max_elements:
        raise OracleBoundError(
            f"{len(elems)} candidate elements below {bound} exceeds the limit {max_elements}"
        )
    results: list[frozenset[int]] = []
    n = len(elems)

    def search(k: int, removed: frozenset[int]) -> None:
        if len(removed) == r:
            results.append(frozenset(elems) - removed)
            return
        if n - k < r - len(removed):
            return
        x = elems[k]
        # a removed element drags along every predecessor that lies in Gamma
        if all(y not in gamma or y in removed for y in (x - p, x - q)):
            search(k + 1, removed | {x})
        search(k + 1, removed)

    search(0, frozenset())
    return sorted(results, key=lambda s: sorted(s))


def as_element_set(delta_mod: EmbeddedSemimodule, bound: int) -> frozenset[int]:
    return frozenset(delta_mod.elements_below(bound))


def catalan_count(p: int, q: int) -> int:
    from math import comb

    return comb(p + q, p) // (p + q)
