"""Dyck paths: parsing, ascent/descent runs, partial-sum codes and levels.

A path is stored as a string over ``"U"``/``"D"``.  Levels follow the
convention that the point ``(x, y)`` has level ``y + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple

from .errors import BadAlphabet, EmptyPath, NonLatticeWord

_STEP_MAP = {"U": "U", "u": "U", "1": "U", "D": "D", "d": "D", "0": "D"}


@dataclass(frozen=True)
class DyckPath:
    """A Dyck path of semilength ``n`` as a canonical ``"U"``/``"D"`` string."""

    steps: str

    def __post_init__(self):
        height = 0
        for pos, step in enumerate(self.steps):
            if step == "U":
                height += 1
            elif step == "D":
                height -= 1
                if height < 0:
                    raise NonLatticeWord(
                        f"path {self.steps!r} dips below the axis at step {pos + 1}"
                    )
            else:
                raise BadAlphabet(f"invalid step {step!r} in {self.steps!r}")
        if height != 0:
            raise NonLatticeWord(f"path {self.steps!r} is unbalanced")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        """Heights ``h(0), ..., h(2n)`` of the lattice points."""
        h = [0]
        for step in self.steps:
            h.append(h[-1] + (1 if step == "U" else -1))
        return h

    def to_json(self) -> dict:
        out = {"steps": self.steps, "semilength": self.semilength}
        if self.semilength == 0:
            out.update(a=[], d=[], A=[], D=[], k=[])
            return out
        dec = ascent_descent(self)
        code = partial_code(self)
        out.update(
            a=list(dec.a),
            d=list(dec.d),
            A=list(code.A),
            D=list(code.D),
            k=list(valley_levels(dec)),
        )
        return out


class AscentDescent(NamedTuple):
    """Maximal-run factorisation ``prod u^{a_i} d^{d_i}``."""

    a: tuple[int, ...]
    d: tuple[int, ...]

    @property
    def blocks(self) -> int:
        return len(self.a)

    def to_path(self) -> DyckPath:
        return DyckPath("".join("U" * x + "D" * y for x, y in zip(self.a, self.d)))


class PartialSumCode(NamedTuple):
    A: tuple[int, ...]
    D: tuple[int, ...]


def parse_path(text: str) -> DyckPath:
    """Parse a step word; accepts ``U``/``D`` in either case and ``1``/``0``."""
    text = text.strip()
    try:
        canonical = "".join(_STEP_MAP[ch] for ch in text)
    except KeyError as exc:
        raise BadAlphabet(f"invalid step {exc.args[0]!r} in {text!r}") from None
    return DyckPath(canonical)


def format_path(path: DyckPath) -> str:
    return path.steps


def ascent_descent(path: DyckPath) -> AscentDescent:
    steps = path.steps
    if not steps:
        raise EmptyPath("the empty path has no ascent/descent decomposition")
    a: list[int] = []
    d: list[int] = []
    pos, total = 0, len(steps)
    while pos < total:
        start = pos
        while pos < total and steps[pos] == "U":
            pos += 1
        a.append(pos - start)
        start = pos
        while pos < total and steps[pos] == "D":
            pos += 1
        d.append(pos - start)
    return AscentDescent(tuple(a), tuple(d))


def partial_code(path: DyckPath) -> PartialSumCode:
    """Prefix sums of the ascent and descent sequences, last block omitted."""
    dec = ascent_descent(path)
    A: list[int] = []
    D: list[int] = []
    sa = sd = 0
    for x, y in zip(dec.a[:-1], dec.d[:-1]):
        sa += x
        sd += y
        A.append(sa)
        D.append(sd)
    return PartialSumCode(tuple(A), tuple(D))


def valley_levels(decomp: AscentDescent) -> tuple[int, ...]:
    """``k_1 = 1`` and ``k_i = k_{i-1} + a_{i-1} - d_{i-1}``."""
    k = [1]
    for x, y in zip(decomp.a[:-1], decomp.d[:-1]):
        k.append(k[-1] + x - y)
    return tuple(k)


def peaks_and_levels(path: DyckPath) -> list[tuple[int, int]]:
    """Peak vertices as ``(x, level)`` pairs, left to right."""
    if not path.steps:
        raise EmptyPath("the empty path has no peaks")
    h = path.heights()
    steps = path.steps
    return [
        (x, h[x] + 1)
        for x in range(1, len(steps))
        if steps[x - 1] == "U" and steps[x] == "D"
    ]


def valleys_and_levels(path: DyckPath) -> list[tuple[int, int]]:
    h = path.heights()
    steps = path.steps
    return [
        (x, h[x] + 1)
        for x in range(1, len(steps))
        if steps[x - 1] == "D" and steps[x] == "U"
    ]


def enumerate_dyck(n: int, prefix: str = "") -> Iterator[DyckPath]:
    """Yield every Dyck path of semilength ``n`` extending ``prefix``.

    Paths come out in lexicographic order with ``U < D``.  The prefix lets
    callers split the search space into disjoint shards.
    """
    if n < 0:
        raise ValueError("semilength must be non-negative")
    ups = prefix.count("U")
    downs = len(prefix) - ups
    if len(prefix) > 2 * n or ups > n or any(
        prefix[:i].count("D") > prefix[:i].count("U") for i in range(1, len(prefix) + 1)
    ):
        return
    buf = list(prefix)

    def rec(ups: int, downs: int) -> Iterator[str]:
        if ups == n and downs == n:
            yield "".join(buf)
            return
        if ups < n:
            buf.append("U")
            yield from rec(ups + 1, downs)
            buf.pop()
        if downs < ups:
            buf.append("D")
            yield from rec(ups, downs + 1)
            buf.pop()

    for word in rec(ups, downs):
        yield DyckPath(word)


def dyck_prefixes(n: int, length: int) -> list[str]:
    """All prefixes of the given length occurring in Dyck paths of semilength ``n``."""
    length = min(length, 2 * n)
    out: list[str] = []

    def rec(word: str, ups: int, downs: int):
        if len(word) == length:
            out.append(word)
            return
        if ups < n:
            rec(word + "U", ups + 1, downs)
        if downs < ups:
            rec(word + "D", ups, downs + 1)

    rec("", 0, 0)
    return out


def path_sort_key(path: DyckPath | str) -> str:
    """Sort key realising the ``U < D`` order."""
    return str(path).translate(str.maketrans("UD", "01"))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
