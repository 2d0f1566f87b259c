"""Borel-Weil-Bott machinery: line cohomology, potential cohomology supports,
and the classical consistency checks (Kostant wedge profile, distinct-roots
vanishing, Euler characteristics).

The potential support of H^k(X, E) collects, for each degree k, the dominant
weights w . chi with chi in the weight multiset of E and l(w) = k, together
with their accumulated multiplicities.  It bounds the actual cohomology of any
bundle whose associated graded has weight multiset chi(E).
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import combinations

from . import weyl
from .bundles import Expr, WeightMultiset, weights
from .errors import CheckFailed
from .rootsys import RootSystem, Weight, invariant_form


@dataclass(frozen=True)
class LineCohomology:
    """BWB outcome for one line bundle: all-degrees vanishing (singular shifted
    weight) or a single irreducible in one degree."""

    vanishes: bool
    degree: int | None = None
    weight: Weight | None = None

    @property
    def concentrated(self) -> bool:
        return not self.vanishes


def line_cohomology(rs: RootSystem, lam: Weight) -> LineCohomology:
    """Cohomology of the line bundle with weight lam on the full flag variety."""
    res = weyl.to_dominant(rs, lam)
    if res.singular:
        return LineCohomology(vanishes=True)
    return LineCohomology(vanishes=False, degree=res.length, weight=res.dominant)


class PotentialSupport:
    """Per-degree dominant-weight multisets bounding cohomology."""

    __slots__ = ("_by_degree",)

    def __init__(self, by_degree: dict[int, dict[Weight, int]]):
        self._by_degree = {k: dict(v) for k, v in sorted(by_degree.items()) if v}

    def degrees(self) -> tuple[int, ...]:
        return tuple(self._by_degree)

    def multiset(self, degree: int) -> WeightMultiset:
        return WeightMultiset(self._by_degree.get(degree, {}))

    def support(self, degree: int) -> frozenset[Weight]:
        return frozenset(self._by_degree.get(degree, {}))

    def set_view(self) -> dict[int, frozenset[Weight]]:
        return {k: frozenset(v) for k, v in self._by_degree.items()}

    def multiset_view(self) -> dict[int, dict[Weight, int]]:
        return {k: dict(v) for k, v in self._by_degree.items()}

    def __eq__(self, other) -> bool:
        if isinstance(other, PotentialSupport):
            return self._by_degree == other._by_degree
        return NotImplemented

    def __repr__(self) -> str:
        return f"PotentialSupport({self._by_degree!r})"


def _push_chunk(rs: RootSystem, items: list[tuple[Weight, int]]):
    walked = weyl.dot_dominantize_batch(rs, [w for w, _ in items])
    out: dict[int, dict[Weight, int]] = {}
    for (w, mult), res in zip(items, walked):
        if res is None:
            continue
        k, dom = res
        bucket = out.setdefault(k, {})
        bucket[dom] = bucket.get(dom, 0) + mult
    return out


def psupp(rs: RootSystem, expr: Expr | str | WeightMultiset, *,
          threads: int = 1) -> PotentialSupport:
    """Potential support of H^*(X, E): every weight of E pushed through BWB.

    Deterministic for any thread count: chunks are merged in submission order.
    """
    ws = expr if isinstance(expr, WeightMultiset) else weights(rs, expr)
    items = ws.sorted_items()
    acc: dict[int, dict[Weight, int]] = {}
    if threads <= 1 or len(items) < 64:
        chunks = [_push_chunk(rs, items)] if items else []
    else:
        size = max(32, (len(items) + threads - 1) // threads)
        parts = [items[i:i + size] for i in range(0, len(items), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda part: _push_chunk(rs, part), parts))
    for chunk in chunks:
        for k, bucket in chunk.items():
            tgt = acc.setdefault(k, {})
            for dom, mult in bucket.items():
                tgt[dom] = tgt.get(dom, 0) + mult
    return PotentialSupport(acc)


def kostant_check(rs: RootSystem, k: int) -> int:
    """Verify H^i(X, wedge^k n) is trivial^{#\\{l(w)=k\\}} exactly at i = k.

    Returns the verified count; raises CheckFailed on any deviation.
    """
    ps = psupp(rs, f"wedge^{k}(n)")
    expected = weyl.poincare_counts(rs).get(k, 0)
    view = ps.multiset_view()
    want = {k: {(0,) * rs.rank: expected}} if expected else {}
    if view != want:
        raise CheckFailed(
            f"wedge^{k}(n) potential support {view!r} != {want!r} for "
            f"{rs.family}{rs.rank}")
    return expected


@dataclass(frozen=True)
class DistinctRootsReport:
    subsets_checked: int
    exhaustive: bool
    violations: tuple[tuple[Weight, ...], ...]


def distinct_roots_check(rs: RootSystem, *, seed: int = 0,
                         samples: int = 2048) -> DistinctRootsReport:
    """Sums of distinct positive roots: -sum(S) never has nontrivial cohomology.

    For every subset S of the positive roots, the line bundle of -sum(S)
    either vanishes in all degrees or contributes the trivial module (its
    dominantization is 0).  Exhaustive when 2^{#roots} is small; otherwise
    a seeded sample of subsets.
    """
    n_roots = len(rs.positive_roots)
    roots = [r.fund_coords for r in rs.positive_roots]
    zero = (0,) * rs.rank
    violations: list[tuple[Weight, ...]] = []
    exhaustive = n_roots <= 15

    def check(subset) -> None:
        total = [0] * rs.rank
        for f in subset:
            for j in range(rs.rank):
                total[j] += f[j]
        lam = tuple(-t for t in total)
        res = line_cohomology(rs, lam)
        if not res.vanishes and res.weight != zero:
            violations.append(tuple(subset))

    if exhaustive:
        count = 0
        for size in range(n_roots + 1):
            for subset in combinations(roots, size):
                check(subset)
                count += 1
    else:
        rng = random.Random(seed)
        count = samples
        for _ in range(samples):
            mask = rng.getrandbits(n_roots)
            check([roots[i] for i in range(n_roots) if mask >> i & 1])
    return DistinctRootsReport(subsets_checked=count, exhaustive=exhaustive,
                               violations=tuple(violations))


def euler_line(rs: RootSystem, lam: Weight) -> int:
    """Euler characteristic of a line bundle: Weyl-dimension product formula
    at lam + rho (zero exactly when the shifted weight is singular)."""
    shifted = tuple(c + 1 for c in lam)
    num = Q(1)
    den = Q(1)
    for root in rs.positive_roots:
        rc = root.root_coords
        pairing_num = sum(rc[i] * rs.symmetrizer[i] * shifted[i] for i in range(rs.rank))
        pairing_den = sum(rc[i] * rs.symmetrizer[i] for i in range(rs.rank))
        num *= pairing_num
        den *= pairing_den
    val = num / den
    assert val.denominator == 1
    return int(val)


def euler_characteristic(rs: RootSystem, expr: Expr | str | WeightMultiset) -> int:
    """chi(X, E) = sum over weights of E of the line Euler characteristics."""
    ws = expr if isinstance(expr, WeightMultiset) else weights(rs, expr)
    return sum(mult * euler_line(rs, w) for w, mult in ws.sorted_items())


def euler_from_psupp(rs: RootSystem, ps: PotentialSupport) -> int:
    """Alternating sum over the potential support (Weyl dimensions).

    Equals euler_characteristic of the originating expression: both reorganize
    the same signed sum.
    """
    from .repthy import weyl_dim

    total = 0
    for k in ps.degrees():
        sign = -1 if k % 2 else 1
        for w, mult in ps.multiset(k).sorted_items():
            total += sign * mult * weyl_dim(rs, w)
    return total


def highest_root_shift_norm(rs: RootSystem) -> Q:
    """(theta+rho, theta+rho) - (rho, rho) for the highest root theta.

    In type A_{n-1} this equals 2n (the doubled Coxeter number)."""
    theta = rs.highest_root.fund_coords
    shifted = tuple(t + 1 for t in theta)
    return invariant_form(rs, shifted, shifted) - invariant_form(rs, rs.rho, rs.rho)
