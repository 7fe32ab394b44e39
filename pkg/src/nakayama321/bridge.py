"""Kupisch series <-> Dyck path, via the top boundary of the AR quiver.

The module ``M(i, k)`` is drawn at ``(2i + k - 1, k - 1)``, so its level
equals its length and ``e_i A`` sits on the diagonal starting at ``(2i, 0)``.
The Dyck path is the upper envelope of the projectives.  Reading it back,
the ``(i+1)``-th down step sits at index ``2i + c_i - 1`` of the step word,
which makes both directions linear scans.
"""

from __future__ import annotations

from .dyck import DyckPath
from .nakayama import KupischSeries, _as_kupisch
from .perm import Permutation, bjs, bjs_inverse


def height_function(c) -> list[int]:
    """Boundary heights ``h(0), ..., h(2n)`` of the AR quiver."""
    c = _as_kupisch(c)
    n = c.simples - 1
    return [
        max(x - 2 * i for i in range(n + 1) if x - 2 * i >= 0 and c[i] >= x - 2 * i + 1)
        for x in range(2 * n + 1)
    ]


def kupisch_to_dyck(c) -> DyckPath:
    c = _as_kupisch(c)
    n = c.simples - 1
    steps = ["U"] * (2 * n)
    for i in range(n):
        steps[2 * i + c[i] - 1] = "D"
    return DyckPath("".join(steps))


def dyck_to_kupisch(path: DyckPath) -> KupischSeries:
    c = []
    i = 0
    for pos, step in enumerate(path.steps):
        if step == "D":
            c.append(pos - 2 * i + 1)
            i += 1
    c.append(1)
    return KupischSeries(tuple(c))


def algebra_for_permutation(p: Permutation) -> KupischSeries:
    """The Nakayama algebra attached to a 321-avoiding permutation."""
    return dyck_to_kupisch(bjs_inverse(p))


def permutation_for_algebra(c) -> Permutation:
    return bjs(kupisch_to_dyck(c))
