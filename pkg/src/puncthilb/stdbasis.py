"""Standard bases of modules over ``R = C[[g_1, ..., g_m]] ⊆ C[[t]]``.

Terms are ordered by the local order, so the leading term of a series is the
one of least ``t``-degree.  Everything runs on :class:`TruncatedSeries`
with exact rational coefficients; the infinite division loop stops at the
truncation horizon, and a guard band below the horizon must be free of
remainder positions or a :class:`PrecisionError` is raised.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Mapping, Sequence

from .semigroup import NumericalSemigroup, make_semigroup
from .semimodule import EmbeddedSemimodule, NormalizedSemimodule, generated
from .series import Affine, TruncatedSeries

DEFAULT_GUARD = 4

FREE = "free"
DEPENDENT = "dependent"
SYZYGY = "syzygy"


class PrecisionError(ArithmeticError):
    """The truncation horizon is too small for the requested computation."""


class MalformedGeneratorError(ValueError):
    pass


def default_horizon(gamma: NumericalSemigroup, shift: int = 0) -> int:
    q = gamma.generators[-1]
    return shift + 2 * gamma.conductor + 2 * q + 8


@dataclass
class StdBasisProblem:
    """A candidate standard basis ``(G, H)``.

    ``G`` generates the subalgebra and is assumed to be a SAGBI basis, i.e.
    the value semigroup of ``R`` is generated by the orders of ``G``.  ``H``
    is scaled to leading coefficient 1.
    """

    G: list[TruncatedSeries]
    H: list[TruncatedSeries]
    trunc: int
    guard: int = DEFAULT_GUARD
    g_keys: tuple | None = field(default=None, repr=False)
    _cache: dict | None = field(default=None, repr=False)

    def __post_init__(self):
        if not self.G:
            raise MalformedGeneratorError("G must not be empty")
        if not self.H:
            raise MalformedGeneratorError("H must not be empty")
        self.G = [g.truncate(self.trunc) for g in self.G]
        for g in self.G:
            if g.is_zero() or g.valuation == 0:
                raise MalformedGeneratorError(f"ring generator {g} must have positive order")
            if not g.is_numeric():
                raise MalformedGeneratorError("ring generators must be numeric")
        monic = []
        for h in self.H:
            h = h.truncate(self.trunc)
            _, lc = h.leading_term()
            if isinstance(lc, Affine):
                raise MalformedGeneratorError(f"leading coefficient of {h} is not a number")
            monic.append(h.scale(1 / Fraction(lc)))
        self.H = monic
        # products are cached under generator identities, so re-listed copies share them
        if self.g_keys is None:
            self.g_keys = tuple(range(len(self.G)))
        if self._cache is None:
            self._cache = {}
        self._terms: dict[tuple[tuple[int, ...], int], TruncatedSeries] = {}

    @cached_property
    def g_orders(self) -> tuple[int, ...]:
        return tuple(g.valuation for g in self.G)

    @cached_property
    def h_orders(self) -> tuple[int, ...]:
        return tuple(h.valuation for h in self.H)

    @cached_property
    def gamma(self) -> NumericalSemigroup:
        return make_semigroup(self.g_orders)

    def in_module_semigroup(self, e: int) -> bool:
        """Membership in ``<nu(h) : h in H>_Gamma``."""
        return any(self.gamma.contains(e - v) for v in self.h_orders)

    @cached_property
    def module_gaps(self) -> list[int]:
        top = min(self.h_orders) + self.gamma.conductor
        return [e for e in range(top) if not self.in_module_semigroup(e)]

    def check_precision(self, horizon: int) -> None:
        gaps = self.module_gaps
        if gaps and gaps[-1] >= horizon - self.guard:
            raise PrecisionError(
                f"remainder positions reach t^{gaps[-1]} but the horizon is {horizon} "
                f"with guard {self.guard}; increase the truncation"
            )

    def representation(self, n: int) -> tuple[int, ...] | None:
        """Exponent vector ``beta`` with ``sum beta_k * nu(g_k) = n``.

        Lexicographically largest, so multiples of ``nu(g_1)`` use ``g_1`` only.
        """
        return _representation(self.g_orders, n)

    def g_power(self, beta: tuple[int, ...]) -> TruncatedSeries:
        key = tuple(sorted((k, b) for k, b in zip(self.g_keys, beta) if b))
        return self._power_by_key(key)

    def _power_by_key(self, key: tuple) -> TruncatedSeries:
        hit = self._cache.get(key)
        if hit is None:
            if not key:
                hit = TruncatedSeries({0: 1}, self.trunc)
            else:
                (k, b), rest = key[0], key[1:]
                lower = (((k, b - 1),) if b > 1 else ()) + rest
                g = self.G[self.g_keys.index(k)]
                hit = (self._power_by_key(lower) * g).truncate(self.trunc)
            self._cache[key] = hit
        return hit

    def term(self, beta: tuple[int, ...], l: int) -> TruncatedSeries:
        """``g^beta * h_l`` truncated at the problem horizon."""
        hit = self._terms.get((beta, l))
        if hit is None:
            hit = (self.g_power(beta) * self.H[l]).truncate(self.trunc)
            self._terms[(beta, l)] = hit
        return hit

    def match(self, e: int) -> tuple[int, tuple[int, ...]] | None:
        """Smallest ``l`` and ``beta`` with ``LT(g^beta * h_l)`` at ``t^e``."""
        for l, v in enumerate(self.h_orders):
            if e - v >= 0:
                beta = self.representation(e - v)
                if beta is not None:
                    return l, beta
        return None

    def permuted(self, g_order: Sequence[int], h_order: Sequence[int]) -> "StdBasisProblem":
        return StdBasisProblem([self.G[i] for i in g_order], [self.H[i] for i in h_order],
                               self.trunc, self.guard, tuple(self.g_keys[i] for i in g_order),
                               self._cache)


def _representation(orders: tuple[int, ...], n: int) -> tuple[int, ...] | None:
    return _rep_cached(orders, n)


@lru_cache(maxsize=None)
def _rep_cached(orders: tuple[int, ...], n: int) -> tuple[int, ...] | None:
    if n < 0:
        return None
    if not orders:
        return () if n == 0 else None
    head, rest = orders[0], orders[1:]
    for k in range(n // head, -1, -1):
        tail = _rep_cached(rest, n - k * head)
        if tail is not None:
            return (k,) + tail
    return None


@dataclass
class Reduction:
    quotients: list[dict[tuple[int, ...], object]]
    remainder: TruncatedSeries
    horizon: int
    steps: int

    def quotient_series(self, problem: StdBasisProblem, l: int) -> TruncatedSeries:
        out = TruncatedSeries.zero(problem.trunc)
        for beta, c in self.quotients[l].items():
            out = out + problem.g_power(beta).scale(c)
        return out


def reduce(f: TruncatedSeries, problem: StdBasisProblem) -> Reduction:
    """Division of ``f`` by ``(G, H)``: ``f = sum q_l h_l + r``.

    Every exponent of ``r`` lies outside ``<nu(H)>_Gamma``.  The loop stops
    once the working series has no known terms below the horizon.
    """
    horizon = min(f.trunc, problem.trunc)
    problem.check_precision(horizon)
    work = f.truncate(horizon)
    quotients: list[dict[tuple[int, ...], object]] = [{} for _ in problem.H]
    rem: dict[int, object] = {}
    steps = 0
    while not work.is_zero():
        e, c = work.leading_term()
        hit = problem.match(e)
        if hit is not None:
            l, beta = hit
            term = problem.term(beta, l).truncate(horizon)
            k = c / term.leading_term()[1]
            quotients[l][beta] = quotients[l].get(beta, 0) + k
            work = work - term.scale(k)
        else:
            rem[e] = c
            work = work - TruncatedSeries.monomial(e, horizon, c)
        if work.valuation <= e:
            raise AssertionError("division step failed to raise the order")
        steps += 1
    remainder = TruncatedSeries(rem, horizon)
    for e, _ in remainder.items():
        if problem.in_module_semigroup(e):
            raise AssertionError(f"remainder term t^{e} lies in Gamma(M)")
        if e >= horizon - problem.guard:
            raise PrecisionError(f"remainder term t^{e} entered the guard band")
    return Reduction(quotients, remainder, horizon, steps)


def reduction_invariance_check(f: TruncatedSeries, problem: StdBasisProblem, trials: int = 20,
                               seed: int = 0) -> bool:
    """Remainder is unchanged under random re-listings of ``G`` and ``H``."""
    rng = random.Random(seed)
    base = reduce(f, problem).remainder
    for _ in range(trials):
        gi = list(range(len(problem.G)))
        hi = list(range(len(problem.H)))
        rng.shuffle(gi)
        rng.shuffle(hi)
        if reduce(f, problem.permuted(gi, hi)).remainder != base:
            return False
    return True


def first_common_order(problem: StdBasisProblem, i: int, j: int) -> int:
    """Least ``e`` in ``(nu(h_i) + Gamma) ∩ (nu(h_j) + Gamma)``."""
    vi, vj = problem.h_orders[i], problem.h_orders[j]
    gamma = problem.gamma
    e = max(vi, vj)
    while not (gamma.contains(e - vi) and gamma.contains(e - vj)):
        e += 1
    return e


def s_process_min(problem: StdBasisProblem, i: int, j: int) -> TruncatedSeries:
    """Minimal S-process ``g^beta h_i - g^gamma h_j`` cancelling leading terms.

    For a p-basis layout over ``G = {t^p, phi}`` this is
    ``phi*h_i - t^((alpha_{i+1} - alpha_i) p) h_{i+1}`` on consecutive pairs
    and ``phi*h_{p-1} - t^((q - alpha_{p-1}) p) h_0`` on the wrap pair.
    """
    e = first_common_order(problem, i, j)
    left = problem.g_power(problem.representation(e - problem.h_orders[i])) * problem.H[i]
    right = problem.g_power(problem.representation(e - problem.h_orders[j])) * problem.H[j]
    left, right = left.truncate(problem.trunc), right.truncate(problem.trunc)
    (el, cl), (er, cr) = left.leading_term(), right.leading_term()
    if el != er:
        raise MalformedGeneratorError(f"leading terms t^{el} and t^{er} do not cancel")
    s = left.scale(1 / Fraction(cl)) - right.scale(1 / Fraction(cr))
    if s.valuation <= e:
        raise MalformedGeneratorError("S-process did not cancel the leading term")
    return s


def explicit_s_process(problem: StdBasisProblem, lam: NormalizedSemimodule, i: int) -> TruncatedSeries:
    """``phi*h_i - t^(k p) h_(i+1)`` for ``H`` listed along the p-basis of ``lam``."""
    p, q = lam.p, lam.q
    t_p, phi = problem.G[0], problem.G[1]
    if i < p - 1:
        k, nxt = lam.alphas[i + 1] - lam.alphas[i], i + 1
    else:
        k, nxt = q - lam.alphas[p - 1], 0
    s = phi * problem.H[i] - (t_p ** k) * problem.H[nxt]
    return s.truncate(problem.trunc)


@dataclass
class StandardBasisVerdict:
    standard: bool
    residues: list[tuple[int, int, TruncatedSeries, TruncatedSeries]] = field(default_factory=list)


def standard_basis_verdict(problem: StdBasisProblem) -> StandardBasisVerdict:
    """Reduce every minimal S-process; standard iff all reductions vanish."""
    residues = []
    ok = True
    for i, j in itertools.combinations(range(len(problem.H)), 2):
        s = s_process_min(problem, i, j)
        rem = reduce(s, problem).remainder
        residues.append((i, j, s, rem))
        ok = ok and rem.is_zero()
    return StandardBasisVerdict(ok, residues)


def is_standard_basis(problem: StdBasisProblem) -> bool:
    return standard_basis_verdict(problem).standard


def gamma_of_module(problem: StdBasisProblem) -> EmbeddedSemimodule:
    """``<nu(h_1), ..., nu(h_n)>_Gamma`` in p-basis form (two-generator ``Gamma``)."""
    return generated(problem.gamma, problem.h_orders)


def syzygy_generators(gamma: NumericalSemigroup, lam: NormalizedSemimodule) -> list[dict[int, tuple[int, int]]]:
    """Generators of the syzygies of ``(t^a_0, ..., t^a_(p-1))``.

    Each vector maps a position to ``(sign, exponent)`` meaning
    ``sign * t^exponent``.  Every vector is checked to annihilate the tuple.
    """
    p, q = gamma.p, gamma.q
    al = lam.alphas
    vecs = []
    for i in range(p - 1):
        vecs.append({i: (1, q), i + 1: (-1, (al[i + 1] - al[i]) * p)})
    vecs.append({0: (-1, (q - al[p - 1]) * p), p - 1: (1, q)})
    basis = lam.p_basis
    for v in vecs:
        total: dict[int, int] = {}
        for pos, (sign, exp) in v.items():
            total[exp + basis[pos]] = total.get(exp + basis[pos], 0) + sign
        if any(total.values()):
            raise AssertionError(f"syzygy {v} does not annihilate {basis}")
    return vecs


# ---------------------------------------------------------------------------
# linear-algebra view of the module, independent of the division algorithm


def module_echelon(G: Sequence[TruncatedSeries], H: Sequence[TruncatedSeries], trunc: int) -> dict[int, dict[int, Fraction]]:
    """Reduced echelon basis of ``R*H mod t^trunc``, keyed by leading exponent.

    ``R`` is spanned modulo ``t^trunc`` by the products ``g^beta`` of order
    below ``trunc``, so the spanning set is finite.
    """
    orders = tuple(g.valuation for g in G)
    gamma = make_semigroup(orders)
    # one product per value of Gamma: distinct orders, and as many as dim R/t^trunc
    basis = []
    power = {(0,) * len(G): TruncatedSeries({0: 1}, trunc)}
    for n in range(trunc):
        beta = _representation(orders, n) if gamma.contains(n) else None
        if beta is None:
            continue
        if not any(beta):
            basis.append(power[beta])
            continue
        k = next(i for i, b in enumerate(beta) if b)
        lower = beta[:k] + (beta[k] - 1,) + beta[k + 1:]
        if lower not in power:
            power[lower] = _slow_power(G, lower, trunc)
        power[beta] = (power[lower] * G[k]).truncate(trunc)
        basis.append(power[beta])
    rows: list[dict[int, Fraction]] = []
    for h in H:
        for b in basis:
            prod = (b * h).truncate(trunc)
            if prod.is_zero():
                continue
            if prod.trunc < trunc:
                raise PrecisionError("generator data too short for the requested horizon")
            rows.append(dict(prod.items()))
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in pivots:
                break
            factor = row[lead]
            for e, c in pivots[lead].items():
                val = row.get(e, 0) - factor * c
                if val:
                    row[e] = val
                else:
                    row.pop(e, None)
        if row:
            lead = min(row)
            inv = 1 / row[lead]
            pivots[lead] = {e: c * inv for e, c in row.items()}
    # back-substitute so each pivot row is zero at the other pivots
    for lead in sorted(pivots, reverse=True):
        row = pivots[lead]
        for other in sorted(pivots):
            if other <= lead or other not in row:
                continue
            factor = row[other]
            for e, c in pivots[other].items():
                val = row.get(e, 0) - factor * c
                if val:
                    row[e] = val
                else:
                    row.pop(e, None)
    return dict(sorted(pivots.items()))


def _slow_power(G, beta, trunc):
    out = TruncatedSeries({0: 1}, trunc)
    for g, k in zip(G, beta):
        for _ in range(k):
            out = (out * g).truncate(trunc)
    return out


def module_valuations(G, H, trunc: int) -> list[int]:
    return sorted(module_echelon(G, H, trunc))


def same_module(G, H1, H2, trunc: int) -> bool:
    return module_echelon(G, H1, trunc) == module_echelon(G, H2, trunc)


# ---------------------------------------------------------------------------
# generator templates and the dependent-coefficient solver


@dataclass(frozen=True)
class Slot:
    generator: int
    exponent: int
    kind: str

    @property
    def name(self) -> str:
        return f"l{self.generator}_{self.exponent}"


@dataclass
class GeneratorTemplate:
    """``t^b_i + sum_k lambda_(i,k) t^(b_i + k)`` over the exponents missing from ``Delta``.

    Slot kinds: ``free`` for ``b_i + k`` in ``Gamma \\ Delta`` with ``k < q``;
    ``dependent`` for exponents outside ``Gamma`` (fixed by the curve);
    ``syzygy`` for the remaining ``Gamma \\ Delta`` exponents, which the
    S-process conditions tie to the free ones.
    """

    gamma: NumericalSemigroup
    semimodule: EmbeddedSemimodule
    leads: tuple[int, ...]
    slots: tuple[Slot, ...]
    phi_support: tuple[int, ...] = ()

    def slots_of(self, kind: str) -> list[Slot]:
        return [s for s in self.slots if s.kind == kind]

    @property
    def free_count(self) -> int:
        return len(self.slots_of(FREE))

    def instantiate(self, values: Mapping[str, object] | None, trunc: int) -> list[TruncatedSeries]:
        """Series with numeric free/syzygy slots and ``Affine`` dependent slots.

        Free and syzygy slots not given in ``values`` default to 0.
        """
        values = dict(values or {})
        unknown = set(values) - {s.name for s in self.slots}
        if unknown:
            raise KeyError(f"no such slots: {sorted(unknown)}")
        out = []
        for i, b in enumerate(self.leads):
            coeffs: dict[int, object] = {b: 1}
            for s in self.slots:
                if s.generator != i:
                    continue
                if s.kind == DEPENDENT:
                    coeffs[s.exponent] = Affine.var(s.name)
                else:
                    coeffs[s.exponent] = Fraction(values.get(s.name, 0))
            out.append(TruncatedSeries(coeffs, trunc))
        return out


def generator_template(gamma: NumericalSemigroup, delta_mod: EmbeddedSemimodule,
                       phi: TruncatedSeries | None = None) -> GeneratorTemplate:
    q = gamma.q
    leads = delta_mod.basis
    top = delta_mod.conductor
    slots = []
    for i, b in enumerate(leads):
        for e in range(b + 1, max(top, b + 1)):
            if delta_mod.contains(e):
                continue
            if not gamma.contains(e):
                kind = DEPENDENT
            elif e - b < q:
                kind = FREE
            else:
                kind = SYZYGY
            slots.append(Slot(i, e, kind))
    support = ()
    if phi is not None:
        support = tuple(e for e, _ in phi.items() if e > q and not gamma.contains(e))
    return GeneratorTemplate(gamma, delta_mod, leads, tuple(slots), support)


@dataclass
class Solution:
    generators: list[TruncatedSeries]
    values: dict[str, object]
    consistent: bool
    conflict: tuple[int, int, Fraction] | None = None
    unresolved: set[str] = field(default_factory=set)
    standard: bool | None = None

    @property
    def resolved(self) -> bool:
        return self.consistent and not self.unresolved


def _solve_for(coef: Affine, preferred: str | None) -> tuple[str, Affine]:
    name = preferred if preferred in coef.coeffs else sorted(coef.coeffs)[0]
    k = coef.coeffs[name]
    rest = coef - Affine.var(name) * k
    return name, rest * (Fraction(-1) / k)


def solve_dependent_coefficients(H: Sequence[TruncatedSeries], G: Sequence[TruncatedSeries],
                                 free_values: Mapping[str, object] | None = None,
                                 check_standard: bool = True) -> Solution:
    """Force each generator into ``R`` by subduction against ``G``.

    The working series repeatedly loses the ``G``-monomial matching its
    leading term.  A leading exponent outside the value semigroup must carry
    a zero coefficient; that coefficient is affine in the open parameters,
    so it is solved for one of them (the slot at that exponent when present)
    and substituted.  A nonzero constant there means no ideal of this shape
    exists.  Exponents at or above the conductor need no work.
    """
    values: dict[str, object] = {k: Fraction(v) for k, v in (free_values or {}).items()}
    H = [h.substitute(values) for h in H]
    probe = StdBasisProblem(list(G), [TruncatedSeries({0: 1}, min(h.trunc for h in H))],
                            min(h.trunc for h in H))
    gamma = probe.gamma
    c = gamma.conductor
    if c > probe.trunc - probe.guard:
        raise PrecisionError(f"horizon {probe.trunc} does not clear the conductor {c}")
    for idx, h in enumerate(H):
        work = h
        while True:
            work = work.substitute(values)
            if work.is_zero() or work.valuation >= c:
                break
            e, coef = work.leading_term()
            if gamma.contains(e):
                beta = probe.representation(e)
                mono = probe.g_power(beta)
                work = work - mono.scale(coef / mono.leading_term()[1])
                continue
            if not isinstance(coef, Affine):
                H = [g.substitute(values) for g in H]
                return Solution(H, values, False, conflict=(idx, e, coef))
            name, sol = _solve_for(coef, f"l{idx}_{e}")
            values = {k: (v.substitute({name: sol}) if isinstance(v, Affine) else v)
                      for k, v in values.items()}
            values[name] = sol
    values = {k: (v.const if isinstance(v, Affine) and v.is_constant() else v) for k, v in values.items()}
    H = [h.substitute(values) for h in H]
    unresolved = set().union(*(h.variables for h in H)) if H else set()
    standard = None
    if check_standard and not unresolved:
        standard = is_standard_basis(StdBasisProblem(list(G), H, min(h.trunc for h in H)))
    return Solution(H, values, True, unresolved=unresolved, standard=standard)


def plane_branch_ring(p: int, phi: TruncatedSeries) -> list[TruncatedSeries]:
    return [TruncatedSeries.monomial(p, phi.trunc), phi]


def monomial_curve(p: int, q: int, trunc: int) -> list[TruncatedSeries]:
    return [TruncatedSeries.monomial(p, trunc), TruncatedSeries.monomial(q, trunc)]
