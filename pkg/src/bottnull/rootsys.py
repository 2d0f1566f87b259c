"""Root-system data for the supported families.

Supported: A_rank for rank 1..7 (sl_{rank+1}) and B_2 (so_5).  Weights are
stored as integer tuples of fundamental coordinates; root coordinates are
exact ``Fraction`` tuples.  The Cartan matrix follows the convention
``cartan[i][j] = <alpha_j, alpha_i^vee>``, so column j holds the fundamental
coordinates of the simple root alpha_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import NonIntegralWeight, UnsupportedFamilyRank

Weight = tuple[int, ...]
RootCoords = tuple[Q, ...]

A_RANKS = range(1, 8)
B_RANKS = (2,)


@dataclass(frozen=True)
class Root:
    """A positive root in both coordinate systems."""

    root_coords: tuple[int, ...]
    fund_coords: Weight

    @property
    def height(self) -> int:
        return sum(self.root_coords)


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    if family == "A":
        rows = [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(rank)]
                for i in range(rank)]
        return tuple(tuple(r) for r in rows)
    # B2: alpha_1 short, alpha_2 long; <alpha_2, alpha_1^vee> = -2.
    return ((2, -2), (-1, 2))


def _positive_roots(cartan, rank):
    """Closure by root strings: level-by-level saturation from the simple roots."""
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    levels = {1: set(simple)}
    known = set(simple)
    height = 1
    while levels.get(height):
        nxt = set()
        for rc in levels[height]:
            for i in range(rank):
                # Pairing <beta, alpha_i^vee> from root coordinates (row i of cartan).
                pairing = sum(cartan[i][j] * rc[j] for j in range(rank))
                p = 0
                while tuple(c - (p + 1) * s for c, s in zip(rc, simple[i])) in known:
                    p += 1
                if p - pairing > 0:  # string extends above beta
                    up = tuple(c + s for c, s in zip(rc, simple[i]))
                    if up not in known:
                        nxt.add(up)
        if nxt:
            levels[height + 1] = nxt
            known |= nxt
        height += 1
    # Height, then leading simple-root index: alpha_1 before alpha_2, etc.
    return sorted(known, key=lambda rc: (sum(rc), tuple(-c for c in rc)))


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system descriptor for one supported family/rank."""

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    symmetrizer: tuple[int, ...]  # d_i with (alpha_i, alpha_j) = d_i * cartan[i][j]

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @property
    def dim_g(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    @cached_property
    def simple_fund_columns(self) -> tuple[Weight, ...]:
        """Fundamental coordinates of each simple root (Cartan column j)."""
        return tuple(tuple(self.cartan[i][j] for i in range(self.rank))
                     for j in range(self.rank))

    @cached_property
    def _cartan_inverse(self) -> tuple[tuple[Q, ...], ...]:
        n = self.rank
        aug = [[Q(self.cartan[i][j]) for j in range(n)]
               + [Q(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = Q(1) / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return tuple(tuple(row[n:]) for row in aug)

    def describe(self) -> dict:
        return {"family": self.family, "rank": self.rank}


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system, or raise UnsupportedFamilyRank."""
    if family == "A" and rank in A_RANKS:
        pass
    elif family == "B" and rank in B_RANKS:
        pass
    else:
        raise UnsupportedFamilyRank(
            f"unsupported root system {family}{rank}; "
            "supported: A1..A7 and B2")
    cartan = _cartan_matrix(family, rank)
    sym = (1,) * rank if family == "A" else (1, 2)
    roots = []
    for rc in _positive_roots(cartan, rank):
        fund = tuple(sum(cartan[i][j] * rc[j] for j in range(rank))
                     for i in range(rank))
        roots.append(Root(root_coords=rc, fund_coords=fund))
    return RootSystem(family=family, rank=rank, cartan=cartan,
                      positive_roots=tuple(roots), symmetrizer=sym)


def weight_to_root_coords(rs: RootSystem, weight: Sequence[int]) -> RootCoords:
    """Fundamental -> root coordinates (exact rationals)."""
    inv = rs._cartan_inverse
    return tuple(sum(inv[i][j] * weight[j] for j in range(rs.rank))
                 for i in range(rs.rank))


def root_to_weight(rs: RootSystem, coords: Sequence[Q | int]) -> Weight:
    """Root -> fundamental coordinates; raises NonIntegralWeight when fractional."""
    fund = [sum(Q(rs.cartan[i][j]) * Q(coords[j]) for j in range(rs.rank))
            for i in range(rs.rank)]
    if any(f.denominator != 1 for f in fund):
        raise NonIntegralWeight(f"root coordinates {tuple(map(str, coords))} "
                                "are not an integral weight")
    return tuple(int(f) for f in fund)


def invariant_form(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Q:
    """W-invariant symmetric form, normalized so short roots have length^2 = 2.

    (lambda, mu) = sum_i rc(mu)_i * d_i * fund(lambda)_i, where (omega_i, alpha_j)
    = d_j * delta_ij.
    """
    rc_mu = weight_to_root_coords(rs, mu)
    return sum(rc_mu[i] * rs.symmetrizer[i] * lam[i] for i in range(rs.rank))


def coroot_pairing(rs: RootSystem, weight: Sequence[int], root: Root) -> Q:
    """<weight, beta^vee> = 2 (weight, beta) / (beta, beta) for a positive root beta."""
    beta = root.fund_coords
    num = invariant_form(rs, tuple(weight), beta)
    den = invariant_form(rs, beta, beta)
    return 2 * num / den


def format_weight(weight: Sequence[int]) -> str:
    return "f:" + ",".join(str(c) for c in weight)


def format_root_coords(coords: Sequence[Q]) -> str:
    return "r:" + ",".join(str(c) for c in coords)


def parse_weight(rs: RootSystem, text: str) -> Weight:
    """Parse ``f:c1,...`` (fundamental, integers) or ``r:p/q,...`` (root coords)."""
    from .errors import InvalidWeight

    if text.startswith("f:"):
        try:
            coords = tuple(int(p) for p in text[2:].split(","))
        except ValueError:
            raise InvalidWeight(f"bad fundamental coordinates: {text!r}") from None
        if len(coords) != rs.rank:
            raise InvalidWeight(
                f"expected {rs.rank} coordinates, got {len(coords)}: {text!r}")
        return coords
    if text.startswith("r:"):
        try:
            coords = tuple(Q(p) for p in text[2:].split(","))
        except (ValueError, ZeroDivisionError):
            raise InvalidWeight(f"bad root coordinates: {text!r}") from None
        if len(coords) != rs.rank:
            raise InvalidWeight(
                f"expected {rs.rank} coordinates, got {len(coords)}: {text!r}")
        return root_to_weight(rs, coords)
    raise InvalidWeight(f"weight must start with 'f:' or 'r:': {text!r}")
