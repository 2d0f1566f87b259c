"""Weyl-group words, actions, chamber walks, and enumeration.

Words are tuples of 1-based simple-reflection indices, composed with the
rightmost letter applied first: ``act((1, 2), v) = s_1(s_2(v))``.  The
canonical word for an element is the one produced by the smallest-index
chamber walk on its rho-image.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import _kernels
from .errors import InputError
from .rootsys import RootSystem, Weight


def simple_reflection(rs: RootSystem, i: int, weight: Sequence[int]) -> Weight:
    """Apply s_i (1-based) in fundamental coordinates: v - v[i] * alpha_i."""
    col = rs.simple_fund_columns[i - 1]
    c = weight[i - 1]
    return tuple(v - c * a for v, a in zip(weight, col))


def act(rs: RootSystem, word: Sequence[int], weight: Sequence[int]) -> Weight:
    """Linear action of the word on a weight (rightmost letter first)."""
    v = tuple(weight)
    for i in reversed(word):
        v = simple_reflection(rs, i, v)
    return v


def dot(rs: RootSystem, word: Sequence[int], weight: Sequence[int]) -> Weight:
    """Dot action: w . v = w(v + rho) - rho."""
    shifted = tuple(c + 1 for c in weight)
    moved = act(rs, word, shifted)
    return tuple(c - 1 for c in moved)


@dataclass(frozen=True)
class DominanceResult:
    """Outcome of dominantizing ``weight + rho``.

    Singular: the shifted weight lies on a wall.  Regular: ``dominant ==
    dot(word, weight)`` with ``length == len(word)`` minimal.
    """

    singular: bool
    length: int | None = None
    word: tuple[int, ...] | None = None
    dominant: Weight | None = None

    @property
    def regular(self) -> bool:
        return not self.singular


def to_dominant(rs: RootSystem, weight: Sequence[int]) -> DominanceResult:
    """Chamber walk on ``weight + rho``, flipping the smallest negative index."""
    mu = [c + 1 for c in weight]
    letters: list[int] = []
    while True:
        for i in range(rs.rank):
            if mu[i] < 0:
                c = mu[i]
                col = rs.simple_fund_columns[i]
                for j in range(rs.rank):
                    mu[j] -= c * col[j]
                letters.append(i + 1)
                break
        else:
            break
    if 0 in mu:
        return DominanceResult(singular=True)
    dominant = tuple(c - 1 for c in mu)
    return DominanceResult(singular=False, length=len(letters),
                           word=tuple(reversed(letters)), dominant=dominant)


def reduce_word(rs: RootSystem, word: Sequence[int]) -> tuple[int, ...]:
    """Canonical reduced word of the element: chamber walk on its rho-image."""
    for i in word:
        if not 1 <= i <= rs.rank:
            raise InputError(f"letter {i} out of range 1..{rs.rank}")
    image = act(rs, word, rs.rho)
    return _canonical_word_from_image(rs, image)


def _canonical_word_from_image(rs: RootSystem, image: Weight) -> tuple[int, ...]:
    # If u(image) = rho with u = s_{c_k}...s_{c_1}, then the element sending
    # rho to image is u^{-1} = word (c_1, ..., c_k) in rightmost-first order.
    mu = list(image)
    letters: list[int] = []
    while True:
        for i in range(rs.rank):
            if mu[i] < 0:
                c = mu[i]
                col = rs.simple_fund_columns[i]
                for j in range(rs.rank):
                    mu[j] -= c * col[j]
                letters.append(i + 1)
                break
        else:
            break
    assert tuple(mu) == rs.rho
    return tuple(letters)


def length(rs: RootSystem, word: Sequence[int]) -> int:
    return len(reduce_word(rs, word))


def inversion_set(rs: RootSystem, word: Sequence[int]) -> frozenset[Weight]:
    """Positive roots inverted by the element, as fundamental coordinates.

    For a reduced word (i_1, ..., i_k): {alpha_{i_1}, s_{i_1} alpha_{i_2},
    s_{i_1} s_{i_2} alpha_{i_3}, ...}; input words are reduced first.
    """
    red = reduce_word(rs, word)
    out = []
    for t, i in enumerate(red):
        gamma = act(rs, red[:t], rs.simple_fund_columns[i - 1])
        out.append(gamma)
    return frozenset(out)


@lru_cache(maxsize=None)
def enumerate_elements(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """All Weyl-group elements as canonical words, sorted by (length, word)."""
    start = rs.rho
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(1, rs.rank + 1):
                if mu[i - 1] > 0:  # length increases
                    img = simple_reflection(rs, i, mu)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
        frontier = nxt
    words = [_canonical_word_from_image(rs, img) for img in seen]
    return tuple(sorted(words, key=lambda w: (len(w), w)))


def poincare_counts(rs: RootSystem) -> dict[int, int]:
    """Number of elements of each length (inversion-count distribution)."""
    counts: dict[int, int] = {}
    for w in enumerate_elements(rs):
        counts[len(w)] = counts.get(len(w), 0) + 1
    return counts


def order(rs: RootSystem) -> int:
    return len(enumerate_elements(rs))


def dot_dominantize_batch(
    rs: RootSystem, weights: Iterable[Weight]
) -> list[tuple[int, Weight] | None]:
    """Batch form of to_dominant without words: None (singular) or (length, dominant)."""
    return _kernels.dot_walk_batch(list(weights), rs.cartan)


def linear_dominant(rs: RootSystem, weight: Sequence[int]) -> Weight:
    """Dominant representative of the linear (unshifted) Weyl orbit."""
    mu = list(weight)
    while True:
        for i in range(rs.rank):
            if mu[i] < 0:
                c = mu[i]
                col = rs.simple_fund_columns[i]
                for j in range(rs.rank):
                    mu[j] -= c * col[j]
                break
        else:
            return tuple(mu)
