"""321-avoiding permutations and the Billey-Jockusch-Stanley bijection.

Permutations are one-line notation, 1-indexed: ``Permutation((4, 1, 2))``
sends 1 to 4, 2 to 1 and 3 to 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .dyck import AscentDescent, DyckPath, partial_code
from .errors import IdentityNotCovered, Not321Avoiding, ParseError


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ParseError(f"{list(images)} is not a permutation of 1..{len(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> int:
        """Image of the 1-based position ``i``."""
        return self.images[i - 1]

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def to_json(self) -> dict:
        exc = excedances(self)
        return {
            "n": self.n,
            "images": list(self.images),
            "excedance_locations": list(exc.locations),
            "excedance_values": list(exc.values),
            "fixed_points": fixed_points(self),
            "support_size": support_size(self),
            "connectivity": connectivity_set(self),
        }


class ExcedanceData(NamedTuple):
    locations: tuple[int, ...]
    values: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.locations)


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation separated by spaces and/or commas."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    try:
        return Permutation(tuple(int(t) for t in tokens))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"cannot parse permutation {text!r}") from None


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def is_321_avoiding(p: Permutation) -> bool:
    """True iff no ``i < j < k`` has ``p(i) > p(j) > p(k)``.

    Linear scan: position ``j`` is the middle of a 321 pattern exactly when
    some earlier value exceeds ``p(j)`` and some later value is below it.
    """
    images = p.images
    n = len(images)
    suffix_min = [n + 1] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix_min[j] = min(images[j], suffix_min[j + 1])
    prefix_max = 0
    for j, v in enumerate(images):
        if prefix_max > v > suffix_min[j + 1]:
            return False
        prefix_max = max(prefix_max, v)
    return True


def _require_321(p: Permutation) -> None:
    if not is_321_avoiding(p):
        raise Not321Avoiding(f"{p} contains the pattern 321")


def bjs(path: DyckPath) -> Permutation:
    """Billey-Jockusch-Stanley: values ``A+1`` at positions ``D``, rest increasing."""
    n = path.semilength
    if n == 0:
        return Permutation(())
    code = partial_code(path)
    images = [0] * n
    used = [False] * (n + 2)
    for value, pos in zip(code.A, code.D):
        images[pos - 1] = value + 1
        used[value + 1] = True
    free = (v for v in range(1, n + 1) if not used[v])
    for pos in range(n):
        if images[pos] == 0:
            images[pos] = next(free)
    return Permutation(tuple(images))


def excedances(p: Permutation) -> ExcedanceData:
    locs = tuple(i for i, v in enumerate(p.images, 1) if v > i)
    return ExcedanceData(locs, tuple(p[i] for i in locs))


def bjs_inverse(p: Permutation) -> DyckPath:
    """Rebuild the Dyck path from excedance locations and values.

    The identity has no excedances and is sent to ``u^n d^n``.
    """
    _require_321(p)
    n = p.n
    exc = excedances(p)
    if exc.r == 0:
        return DyckPath("U" * n + "D" * n)
    locs, vals = exc.locations, exc.values
    a = [vals[0] - 1]
    d = [locs[0]]
    for j in range(1, exc.r):
        a.append(vals[j] - vals[j - 1])
        d.append(locs[j] - locs[j - 1])
    a.append(n + 1 - vals[-1])
    d.append(n - locs[-1])
    return AscentDescent(tuple(a), tuple(d)).to_path()


def fixed_points(p: Permutation) -> int:
    return sum(1 for i, v in enumerate(p.images, 1) if v == i)


def fixed_points_formula(p: Permutation) -> int:
    """Fixed-point count of a 321-avoiding permutation from its excedances alone."""
    _require_321(p)
    exc = excedances(p)
    if exc.r == 0:
        return p.n
    locs, vals = exc.locations, exc.values
    total = locs[0] - 1 + p.n - vals[-1]
    for j in range(1, exc.r):
        total += max(locs[j] - vals[j - 1] - 1, 0)
    return total


def connectivity_set(p: Permutation) -> list[int]:
    """Indices ``i`` with ``p(k) < i`` for every ``k < i`` (so ``1`` always qualifies)."""
    out = []
    prefix_max = 0
    for i, v in enumerate(p.images, 1):
        if prefix_max < i:
            out.append(i)
        prefix_max = max(prefix_max, v)
    return out


def connectivity_formula(p: Permutation) -> int:
    """Size of the connectivity set of a non-identity 321-avoiding permutation."""
    _require_321(p)
    exc = excedances(p)
    if exc.r == 0:
        raise IdentityNotCovered("the connectivity formula needs at least one excedance")
    locs, vals = exc.locations, exc.values
    total = locs[0] + p.n - vals[-1]
    for j in range(1, exc.r):
        total += max(locs[j] - vals[j - 1], 0)
    return total


def block_number(p: Permutation) -> int:
    """Number of ``k`` with ``{p(1), ..., p(k)} = {1, ..., k}``."""
    count = 0
    prefix_max = 0
    for k, v in enumerate(p.images, 1):
        prefix_max = max(prefix_max, v)
        if prefix_max == k:
            count += 1
    return count


def support_size(p: Permutation) -> int:
    """Number of distinct simple transpositions in a reduced word of ``p``."""
    return p.n - block_number(p)


def partial_sums_check(p: Permutation) -> bool:
    """Prefix sums of the rebuilt path's runs recover the excedance data."""
    path = bjs_inverse(p)
    exc = excedances(p)
    if exc.r == 0:
        return path.steps == "U" * p.n + "D" * p.n
    code = partial_code(path)
    return code.A == tuple(v - 1 for v in exc.values) and code.D == exc.locations
