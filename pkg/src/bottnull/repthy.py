"""Finite-dimensional representation combinatorics: dimensions, characters,
multiplicities, decompositions.

Two mechanisms with disjoint roles: multiplicities/decompositions use the
alternating Weyl-group sum (dot-action dominantization with sign), while full
irreducible characters use Freudenthal's recursion.  Both are exact.
"""

from __future__ import annotations

from fractions import Fraction as Q
from itertools import product

from . import weyl
from .bundles import Expr, WeightMultiset, dim as bundle_dim, weights
from .errors import NotAGModule, NotDominant, SizeCapExceeded
from .rootsys import (RootSystem, Weight, invariant_form,
                      weight_to_root_coords)

SIZE_CAP = 5_000_000


class FormalGModule:
    """Formal integer combination of irreducibles, keyed by highest weight.

    Multiplicities are usually positive; virtual (negative) entries can arise
    when decomposing Weyl-invariant multisets that are not genuine characters.
    """

    __slots__ = ("_mults",)

    def __init__(self, mults: dict[Weight, int] | None = None):
        self._mults = {w: m for w, m in (mults or {}).items() if m != 0}

    @property
    def mults(self) -> dict[Weight, int]:
        return dict(self._mults)

    def get(self, weight: Weight) -> int:
        return self._mults.get(weight, 0)

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self._mults.items())

    def dimension(self, rs: RootSystem) -> int:
        return sum(m * weyl_dim(rs, w) for w, m in self._mults.items())

    def support(self) -> frozenset[Weight]:
        return frozenset(self._mults)

    def __len__(self) -> int:
        return len(self._mults)

    def __bool__(self) -> bool:
        return bool(self._mults)

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalGModule):
            return self._mults == other._mults
        if isinstance(other, dict):
            return self._mults == other
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(f"{w}: {m}" for w, m in self.sorted_items())
        return f"FormalGModule({{{inner}}})"


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula for a dominant integral weight."""
    if any(c < 0 for c in lam):
        raise NotDominant(f"{lam} is not dominant")
    shifted = tuple(c + 1 for c in lam)
    num = Q(1)
    den = Q(1)
    for root in rs.positive_roots:
        rc = root.root_coords
        num *= sum(rc[i] * rs.symmetrizer[i] * shifted[i] for i in range(rs.rank))
        den *= sum(rc[i] * rs.symmetrizer[i] for i in range(rs.rank))
    val = num / den
    assert val.denominator == 1 and val > 0
    return int(val)


def _as_multiset(rs: RootSystem, expr: Expr | str | WeightMultiset) -> WeightMultiset:
    if isinstance(expr, WeightMultiset):
        return expr
    if bundle_dim(rs, expr) > SIZE_CAP:
        raise SizeCapExceeded(
            f"expression dimension exceeds the cap of {SIZE_CAP} multiset entries")
    return weights(rs, expr)


def _check_invariant(rs: RootSystem, ws: WeightMultiset) -> None:
    counts = ws.counts
    for w, m in counts.items():
        for i in range(1, rs.rank + 1):
            if counts.get(weyl.simple_reflection(rs, i, w), 0) != m:
                raise NotAGModule(
                    f"weight multiset is not Weyl-invariant at {w} (s_{i})")


def mult_in(rs: RootSystem, expr: Expr | str | WeightMultiset, mu: Weight) -> int:
    """Multiplicity of the irreducible with highest weight mu, by the literal
    alternating Weyl-group sum over dot translates."""
    if any(c < 0 for c in mu):
        raise NotDominant(f"{mu} is not dominant")
    ws = _as_multiset(rs, expr)
    _check_invariant(rs, ws)
    counts = ws.counts
    total = 0
    for word in weyl.enumerate_elements(rs):
        sign = -1 if len(word) % 2 else 1
        total += sign * counts.get(weyl.dot(rs, word, mu), 0)
    return total


def invariant_dim(rs: RootSystem, expr: Expr | str | WeightMultiset) -> int:
    """Dimension of the invariant subspace (multiplicity of the trivial)."""
    return mult_in(rs, expr, (0,) * rs.rank)


def decompose_multiset(rs: RootSystem, ws: WeightMultiset, *,
                       check: bool = True) -> FormalGModule:
    """Alternating dominantization pass: each weight lands on its dot-dominant
    representative with the sign of the walk length."""
    if check:
        _check_invariant(rs, ws)
    items = ws.sorted_items()
    walked = weyl.dot_dominantize_batch(rs, [w for w, _ in items])
    acc: dict[Weight, int] = {}
    for (w, m), res in zip(items, walked):
        if res is None:
            continue
        k, dom = res
        acc[dom] = acc.get(dom, 0) + (-m if k % 2 else m)
    return FormalGModule(acc)


def decompose(rs: RootSystem, expr: Expr | str | WeightMultiset) -> FormalGModule:
    """Decomposition into irreducibles of the G-module with the expression's
    weight multiset; sum of mult * weyl_dim equals the total dimension."""
    ws = _as_multiset(rs, expr)
    return decompose_multiset(rs, ws, check=True)


_CHAR_CACHE: dict[tuple[str, int, Weight], WeightMultiset] = {}


def _dominant_character(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """Freudenthal recursion: multiplicities of the dominant weights of L(lam)."""
    inv = weight_to_root_coords(rs, lam)
    bounds = [int(c) for c in inv]  # C^{-1} > 0 entrywise, so 0 <= c <= rc(lam)
    cols = rs.simple_fund_columns
    candidates = []
    for c in product(*(range(b + 1) for b in bounds)):
        mu = tuple(lam[i] - sum(c[j] * cols[j][i] for j in range(rs.rank))
                   for i in range(rs.rank))
        if all(x >= 0 for x in mu):
            candidates.append((sum(c), mu))
    candidates.sort()
    lam_norm = invariant_form(rs, tuple(x + 1 for x in lam),
                              tuple(x + 1 for x in lam))
    mults: dict[Weight, int] = {}
    for depth, mu in candidates:
        if depth == 0:
            mults[mu] = 1
            continue
        acc = Q(0)
        for root in rs.positive_roots:
            alpha = root.fund_coords
            k = 1
            while True:
                nu = tuple(mu[i] + k * alpha[i] for i in range(rs.rank))
                # stop once lam - nu leaves the positive root cone
                diff = weight_to_root_coords(
                    rs, tuple(lam[i] - nu[i] for i in range(rs.rank)))
                if any(d < 0 or d.denominator != 1 for d in diff):
                    break
                m_nu = mults.get(weyl.linear_dominant(rs, nu), 0)
                if m_nu:
                    acc += m_nu * invariant_form(rs, nu, alpha)
                k += 1
        mu_norm = invariant_form(rs, tuple(x + 1 for x in mu),
                                 tuple(x + 1 for x in mu))
        denom = lam_norm - mu_norm
        val = 2 * acc / denom
        assert val.denominator == 1 and val >= 0
        mults[mu] = int(val)
    return {w: m for w, m in mults.items() if m}


def irrep_character(rs: RootSystem, lam: Weight) -> WeightMultiset:
    """Full weight multiset of the irreducible L(lam) (Freudenthal + orbits)."""
    if any(c < 0 for c in lam):
        raise NotDominant(f"{lam} is not dominant")
    key = (rs.family, rs.rank, tuple(lam))
    cached = _CHAR_CACHE.get(key)
    if cached is not None:
        return cached
    out: dict[Weight, int] = {}
    for mu, m in _dominant_character(rs, lam).items():
        seen = {mu}
        frontier = [mu]
        while frontier:
            nxt = []
            for nu in frontier:
                for i in range(1, rs.rank + 1):
                    img = weyl.simple_reflection(rs, i, nu)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        for nu in seen:
            out[nu] = m
    ws = WeightMultiset(out)
    _CHAR_CACHE[key] = ws
    return ws
