"""Monomial ideals as antichains of exponent vectors.

An exponent vector is a plain tuple of non-negative ints; an ideal is stored as
the lexicographically sorted tuple of its minimal generators.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceededError, InvalidIdealError

Exponent = tuple[int, ...]

DEFAULT_BUDGET = 10**6

# below this many candidates the quadratic filter beats building bitsets
_BITSET_THRESHOLD = 256


def degree(v: Sequence[int]) -> int:
    return sum(v)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff X^a divides X^b, i.e. a <= b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def _add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _antichain_small(cands: list[Exponent]) -> list[Exponent]:
    cands.sort(key=degree)
    kept: list[Exponent] = []
    for c in cands:
        if not any(divides(k, c) for k in kept):
            kept.append(c)
    return kept


def _antichain_bitset(cands: list[Exponent]) -> list[Exponent]:
    # mask[j][t] has bit i set iff cands[i][j] <= t; a candidate is minimal iff
    # the AND over its coordinates leaves only its own bit (cands are distinct)
    n = len(cands)
    nbytes = (n + 7) // 8
    s = len(cands[0])
    masks = []
    for j in range(s):
        by_value: dict[int, bytearray] = {}
        for i, c in enumerate(cands):
            buf = by_value.get(c[j])
            if buf is None:
                buf = by_value[c[j]] = bytearray(nbytes)
            buf[i >> 3] |= 1 << (i & 7)
        cumulative = {}
        acc = 0
        for t in sorted(by_value):
            acc |= int.from_bytes(by_value[t], "little")
            cumulative[t] = acc
        masks.append(cumulative)
    kept = []
    for i, c in enumerate(cands):
        bit = 1 << i
        m = -1
        for j in range(s):
            m &= masks[j][c[j]]
            if m == bit:
                break
        if m == bit:
            kept.append(c)
    return kept


def _minimal(vectors: Iterable[Exponent]) -> tuple[Exponent, ...]:
    cands = list(set(vectors))
    if len(cands) < _BITSET_THRESHOLD:
        kept = _antichain_small(cands)
    else:
        kept = _antichain_bitset(cands)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Non-zero proper monomial ideal given by its minimal generators.

    Build instances with :func:`minimalize` (or :meth:`from_generators`); the
    constructor only checks shape, it trusts that ``generators`` is an
    antichain.
    """

    num_vars: int
    generators: tuple[Exponent, ...]
    _genset: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.num_vars < 1:
            raise InvalidIdealError("need at least one variable")
        if not self.generators:
            raise InvalidIdealError("the zero ideal is not representable")
        for g in self.generators:
            if len(g) != self.num_vars:
                raise InvalidIdealError(f"generator {g} has length != {self.num_vars}")
            if any(x < 0 for x in g):
                raise InvalidIdealError(f"negative exponent in {g}")
            if not any(g):
                raise InvalidIdealError("zero vector generates the unit ideal")
        object.__setattr__(self, "_genset", frozenset(self.generators))

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], num_vars: int | None = None):
        return minimalize(gens, num_vars)

    def __len__(self):
        return len(self.generators)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self.generators)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def has_generator(self, m: Sequence[int]) -> bool:
        return tuple(m) in self._genset

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(degree(g) for g in self.generators)

    def to_json(self) -> dict:
        return {"vars": self.num_vars, "generators": [list(g) for g in self.generators]}

    def __str__(self):
        return "(" + ", ".join(monomial_str(g) for g in self.generators) + ")"


def monomial_str(g: Sequence[int], names: Sequence[str] | None = None) -> str:
    names = names or [f"x{i + 1}" for i in range(len(g))]
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, g) if e]
    return "*".join(parts) or "1"


def minimalize(vectors: Iterable[Sequence[int]], num_vars: int | None = None) -> MonomialIdeal:
    """Minimal generating antichain of the ideal generated by ``vectors``."""
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if not vecs:
        raise InvalidIdealError("empty generator set")
    s = num_vars if num_vars is not None else len(vecs[0])
    for v in vecs:
        if len(v) != s:
            raise InvalidIdealError(f"vector {v} does not have length {s}")
        if any(x < 0 for x in v):
            raise InvalidIdealError(f"negative exponent in {v}")
        if not any(v):
            raise InvalidIdealError("zero vector generates the unit ideal")
    return MonomialIdeal(s, _minimal(vecs))


def max_degree(ideal: MonomialIdeal) -> int:
    return max(ideal.degrees)


def mu(ideal: MonomialIdeal) -> int:
    return len(ideal.generators)


def contains(ideal: MonomialIdeal, m: Sequence[int]) -> bool:
    if len(m) != ideal.num_vars:
        raise InvalidIdealError("monomial length does not match the ring")
    return any(divides(g, m) for g in ideal.generators)


def ideal_equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Equality of ideals; minimal generating sets are unique, so this is
    comparison of the sorted antichains."""
    if a.num_vars != b.num_vars:
        raise InvalidIdealError("ideals live in different rings")
    return a.generators == b.generators


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Product of two ideals in the same ring (Minkowski sum + minimalize)."""
    if a.num_vars != b.num_vars:
        raise InvalidIdealError("ideals live in different rings")
    sums = (_add(x, y) for x in a.generators for y in b.generators)
    return MonomialIdeal(a.num_vars, _minimal(sums))


def multiset_count(k: int, n: int) -> int:
    """Number of multisets of size ``n`` drawn from ``k`` generators."""
    return math.comb(k + n - 1, n)


def check_budget(ideal: MonomialIdeal, n: int, budget: int | None) -> None:
    if budget is None:
        return
    predicted = multiset_count(mu(ideal), n)
    if predicted > budget:
        raise BudgetExceededError(n, predicted, budget)


def powers(ideal: MonomialIdeal, budget: int | None = None) -> Iterator[MonomialIdeal]:
    """Yield I, I^2, I^3, ... ; each step is one Minkowski sum with G(I)."""
    current = ideal
    n = 1
    while True:
        yield current
        n += 1
        check_budget(ideal, n, budget)
        current = multiply(current, ideal)


def power(ideal: MonomialIdeal, n: int, budget: int | None = None) -> MonomialIdeal:
    if n < 1:
        raise ValueError("power must be >= 1; the unit ideal is not representable")
    check_budget(ideal, n, budget)
    return next(itertools.islice(powers(ideal), n - 1, None))


def member_of_power(ideal: MonomialIdeal, t: int, m: Sequence[int]) -> bool:
    """Is X^m in I^t?  Searches counts c_i >= 0 with sum t and
    sum c_i g_i <= m, without materializing I^t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    m = tuple(m)
    if len(m) != ideal.num_vars:
        raise InvalidIdealError("monomial length does not match the ring")
    gens = ideal.generators
    k = len(gens)
    memo: dict[tuple[int, int, Exponent], bool] = {}

    def search(idx: int, remaining: int, residual: Exponent) -> bool:
        if remaining == 0:
            return True
        g = gens[idx]
        if idx == k - 1:
            return all(remaining * x <= r for x, r in zip(g, residual))
        key = (idx, remaining, residual)
        hit = memo.get(key)
        if hit is not None:
            return hit
        top = remaining
        for x, r in zip(g, residual):
            if x:
                top = min(top, r // x)
        found = False
        for c in range(top, -1, -1):
            nxt = tuple(r - c * x for x, r in zip(g, residual))
            if search(idx + 1, remaining - c, nxt):
                found = True
                break
        memo[key] = found
        return found

    return search(0, t, m)


def is_minimal_generator(ideal: MonomialIdeal, n: int, m: Sequence[int]) -> bool:
    """Is X^m a minimal generator of I^n?

    X^m is minimal iff it lies in I^n while no X^(m - e_j) does, so the check
    runs through :func:`member_of_power` instead of expanding I^n.
    """
    m = tuple(m)
    if not member_of_power(ideal, n, m):
        return False
    for j, x in enumerate(m):
        if x:
            lower = m[:j] + (x - 1,) + m[j + 1:]
            if member_of_power(ideal, n, lower):
                return False
    return True


def full_degree_ideal(num_vars: int, d: int) -> MonomialIdeal:
    """The ideal of all monomials of degree ``d``."""
    if d < 1:
        raise InvalidIdealError("degree must be positive")
    gens = []
    for bars in itertools.combinations(range(d + num_vars - 1), num_vars - 1):
        prev = -1
        v = []
        for b in bars:
            v.append(b - prev - 1)
            prev = b
        v.append(d + num_vars - 2 - prev)
        gens.append(tuple(v))
    return MonomialIdeal(num_vars, tuple(sorted(gens)))


@dataclass(frozen=True)
class FactoredIdeal:
    """Product of ideals over disjoint consecutive variable blocks.

    Minimal generators of the product are all concatenations of factor
    generators, so counts multiply and maximal degrees add; nothing is
    expanded unless asked.
    """

    factors: tuple[MonomialIdeal, ...]

    def __post_init__(self):
        if not self.factors:
            raise InvalidIdealError("a factored ideal needs at least one factor")

    @property
    def total_vars(self) -> int:
        return sum(f.num_vars for f in self.factors)

    @property
    def blocks(self) -> tuple[int, ...]:
        return tuple(f.num_vars for f in self.factors)

    def mu(self) -> int:
        return math.prod(mu(f) for f in self.factors)

    def max_degree(self) -> int:
        return sum(max_degree(f) for f in self.factors)

    def expand(self, budget: int | None = DEFAULT_BUDGET) -> MonomialIdeal:
        count = self.mu()
        if budget is not None and count > budget:
            raise BudgetExceededError(1, count, budget)
        gens = (sum(combo, ()) for combo in itertools.product(*(f.generators for f in self.factors)))
        return MonomialIdeal(self.total_vars, tuple(sorted(gens)))

    def power(self, n: int, budget: int | None = None) -> "FactoredIdeal":
        """(I J)^n = I^n J^n, taken blockwise."""
        return FactoredIdeal(tuple(power(f, n, budget) for f in self.factors))

    def expanded_power(self, n: int, budget: int | None = DEFAULT_BUDGET) -> MonomialIdeal:
        """n-th power of the expanded ideal, computed directly (no factor shortcut)."""
        expanded = self.expand(budget)
        return power(expanded, n, budget)


def product_disjoint(a: MonomialIdeal | FactoredIdeal, b: MonomialIdeal | FactoredIdeal) -> FactoredIdeal:
    fa = a.factors if isinstance(a, FactoredIdeal) else (a,)
    fb = b.factors if isinstance(b, FactoredIdeal) else (b,)
    return FactoredIdeal(fa + fb)
