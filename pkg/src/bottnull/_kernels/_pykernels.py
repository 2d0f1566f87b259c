"""Pure-Python reference kernels.

Same signatures and exact same outputs as the compiled versions in
``_ckernels``; used when the extension is absent, disabled, or when inputs
fall outside the compiled encoding range.
"""

from __future__ import annotations

BACKEND = "pure"


def convolve(a: dict, b: dict) -> dict:
    """Minkowski convolution of weight multisets (tuple keys, int counts)."""
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for wa, ca in a.items():
        for wb, cb in b.items():
            key = tuple(x + y for x, y in zip(wa, wb))
            out[key] = get(key, 0) + ca * cb
    return out


def dot_walk_batch(weights: list, cartan) -> list:
    """Dominantize ``w + rho`` by simple reflections for each input weight.

    Returns one entry per input: ``None`` when the shifted weight is singular
    (hits a wall), else ``(length, dominant)`` where ``dominant`` is the
    rho-shifted dominant representative (i.e. the dot-action image under the
    unique Weyl element of that length).
    """
    rank = len(cartan)
    cols = [tuple(cartan[i][j] for i in range(rank)) for j in range(rank)]
    out = []
    for w in weights:
        mu = [c + 1 for c in w]
        length = 0
        while True:
            for i in range(rank):
                c = mu[i]
                if c < 0:
                    col = cols[i]
                    for j in range(rank):
                        mu[j] -= c * col[j]
                    length += 1
                    break
            else:
                break
        if 0 in mu:
            out.append(None)
        else:
            out.append((length, tuple(c - 1 for c in mu)))
    return out
