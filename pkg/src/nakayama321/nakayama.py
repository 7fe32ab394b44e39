"""Homological arithmetic over Nakayama algebras with a linear quiver.

The algebra with ``n + 1`` simple modules has quiver ``0 -> 1 -> ... -> n``
and is determined by its Kupisch series ``c = [c_0, ..., c_n]`` where
``c_i`` is the length of the indecomposable projective ``e_i A``.  Every
indecomposable module is uniserial, written ``M(i, k) = e_i A / e_i J^k``:
top ``S_i``, socle ``S_{i+k-1}``, length ``k``.  All homological quantities
reduce to integer arithmetic on ``(i, k)``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .dyck import DyckPath, ascent_descent, valley_levels
from .errors import (
    BadModule,
    DropTooSteep,
    EntryBelowTwo,
    LastNotOne,
    OverhangsQuiver,
    ParseError,
    ZeroModule,
)
from .perm import Permutation, connectivity_formula, fixed_points_formula


class Module(NamedTuple):
    """Uniserial module ``M(top, length)``; length 0 is the zero module."""

    top: int
    length: int

    @property
    def socle(self) -> int:
        return self.top + self.length - 1

    def is_zero(self) -> bool:
        return self.length == 0

    def __str__(self) -> str:
        return "0" if self.length == 0 else f"M({self.top},{self.length})"


ZERO = Module(0, 0)


def _mod(top: int, length: int) -> Module:
    return ZERO if length == 0 else Module(top, length)


def parse_module(text: str) -> Module:
    text = text.strip()
    if text == "0":
        return ZERO
    m = re.fullmatch(r"M\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
    if not m:
        raise ParseError(f"cannot parse module {text!r}; expected 'M(i,k)' or '0'")
    return _mod(int(m.group(1)), int(m.group(2)))


@dataclass(frozen=True)
class KupischSeries:
    """Validated Kupisch series of a linear Nakayama algebra."""

    c: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.c)
        object.__setattr__(self, "c", c)
        if not c or c[-1] != 1:
            raise LastNotOne(f"last entry of {list(c)} must be 1")
        last = len(c) - 1
        for i, ci in enumerate(c[:-1]):
            if ci < 2:
                raise EntryBelowTwo(f"c_{i} = {ci} < 2 in {list(c)}")
            if c[i + 1] < ci - 1:
                raise DropTooSteep(f"c_{i + 1} = {c[i + 1]} < c_{i} - 1 in {list(c)}")
            if ci + i > last + 1:
                raise OverhangsQuiver(f"c_{i} + {i} > {last + 1} in {list(c)}")

    @property
    def simples(self) -> int:
        return len(self.c)

    def __len__(self) -> int:
        return len(self.c)

    def __getitem__(self, i: int) -> int:
        return self.c[i]

    def __iter__(self):
        return iter(self.c)

    def __str__(self) -> str:
        return ",".join(map(str, self.c))

    @cached_property
    def d(self) -> tuple[int, ...]:
        """Lengths ``d_j`` of the indecomposable injectives ``D(A e_j)``."""
        return _injective_dims_min_form(self.c)


def validate_kupisch(c: Iterable[int]) -> KupischSeries:
    return KupischSeries(tuple(c))


def parse_kupisch(text: str) -> KupischSeries:
    tokens = [t for t in re.split(r"[\s,\[\]]+", text.strip()) if t]
    try:
        values = tuple(int(t) for t in tokens)
    except ValueError:
        raise ParseError(f"cannot parse Kupisch series {text!r}") from None
    return KupischSeries(values)


def hereditary(simples: int) -> KupischSeries:
    """The path algebra ``[n+1, n, ..., 1]`` without relations."""
    return KupischSeries(tuple(range(simples, 0, -1)))


def _as_kupisch(c) -> KupischSeries:
    return c if isinstance(c, KupischSeries) else KupischSeries(tuple(c))


def _injective_dims_min_form(c: Sequence[int]) -> tuple[int, ...]:
    # d_j = min{k >= 1 : k >= c_{j-k}} with c_m = 0 for m < 0
    out = []
    for j in range(len(c)):
        k = 1
        while j - k >= 0 and c[j - k] > k:
            k += 1
        out.append(k)
    return tuple(out)


def injective_dims_max_form(c: Sequence[int]) -> tuple[int, ...]:
    """``d_j`` as the longest module ``M(a, j-a+1)`` that exists."""
    return tuple(
        max(j - a + 1 for a in range(j + 1) if c[a] >= j - a + 1) for j in range(len(c))
    )


def injective_dims(c) -> tuple[int, ...]:
    return _as_kupisch(c).d


def check_module(c, m: Module) -> Module:
    c = _as_kupisch(c)
    if m.length == 0:
        return ZERO
    if not 0 <= m.top < c.simples:
        raise BadModule(f"{m}: top {m.top} outside 0..{c.simples - 1}")
    if not 1 <= m.length <= c[m.top]:
        raise BadModule(f"{m}: length must lie in 1..c_{m.top} = {c[m.top]}")
    return m


def modules(c) -> list[Module]:
    """All nonzero indecomposable modules, ordered by top then length."""
    c = _as_kupisch(c)
    return [Module(i, k) for i in range(c.simples) for k in range(1, c[i] + 1)]


def projective(c, i: int) -> Module:
    return Module(i, _as_kupisch(c)[i])


def injective(c, j: int) -> Module:
    """``D(A e_j)``: the injective envelope of the simple ``S_j``."""
    dj = _as_kupisch(c).d[j]
    return Module(j - dj + 1, dj)


def simple(i: int) -> Module:
    return Module(i, 1)


def radical(c, i: int) -> Module:
    """``e_i J = M(i+1, c_i - 1)``; zero for the last vertex."""
    ci = _as_kupisch(c)[i]
    return _mod(i + 1, ci - 1)


def is_projective(c, m: Module) -> bool:
    return m.length == 0 or m.length == _as_kupisch(c)[m.top]


def is_injective(c, m: Module) -> bool:
    return m.length == 0 or m.length == _as_kupisch(c).d[m.socle]


def syzygy(c, m: Module) -> Module:
    """Kernel of the projective cover ``M(i, c_i) -> M(i, k)``."""
    c = _as_kupisch(c)
    i, k = m
    if k == 0 or k == c[i]:
        return ZERO
    return Module(i + k, c[i] - k)


def cosyzygy(c, m: Module) -> Module:
    """Cokernel of the injective envelope ``M(i, k) -> D(A e_{i+k-1})``."""
    c = _as_kupisch(c)
    i, k = m
    if k == 0:
        return ZERO
    dj = c.d[i + k - 1]
    if k == dj:
        return ZERO
    return Module(i + k - dj, dj - k)


def injective_coresolution(c, m: Module) -> list[Module]:
    """Terms ``I^0, I^1, ...`` of the minimal injective coresolution."""
    c = _as_kupisch(c)
    terms = []
    while m.length:
        terms.append(injective(c, m.socle))
        m = cosyzygy(c, m)
    return terms


def projective_resolution(c, m: Module) -> list[Module]:
    """Terms ``P_0, P_1, ...`` of the minimal projective resolution."""
    c = _as_kupisch(c)
    terms = []
    while m.length:
        terms.append(projective(c, m.top))
        m = syzygy(c, m)
    return terms


def inj_dim(c, m: Module) -> int:
    """Injective dimension; the zero module gets 0."""
    c = _as_kupisch(c)
    steps = 0
    m = cosyzygy(c, m)
    while m.length:
        steps += 1
        m = cosyzygy(c, m)
    return steps


def proj_dim(c, m: Module) -> int:
    c = _as_kupisch(c)
    steps = 0
    m = syzygy(c, m)
    while m.length:
        steps += 1
        m = syzygy(c, m)
    return steps


class IdClass(enum.Enum):
    INJECTIVE = "injective"
    DIM_ONE = "dim_one"
    DIM_AT_LEAST_TWO = "dim_at_least_two"


def id_at_most_one(c, m: Module) -> IdClass:
    """Classify ``id M(i, k)`` as 0, 1 or >= 2 from the ``d`` vector alone.

    ``M(i, k)`` is injective iff ``k = d_{i+k-1}``; otherwise it has
    injective dimension one iff ``d_{i+k-1} - k = d_{i-1}`` (``d_{-1} = 0``).
    """
    c = _as_kupisch(c)
    if m.length == 0:
        raise ZeroModule("the zero module has no injective-dimension class")
    i, k = m
    d = c.d
    dj = d[i + k - 1]
    if k == dj:
        return IdClass.INJECTIVE
    if dj - k == (d[i - 1] if i > 0 else 0):
        return IdClass.DIM_ONE
    return IdClass.DIM_AT_LEAST_TWO


def count_proj_inj_dim_one(c) -> int:
    """Number of indecomposable projectives of injective dimension exactly one."""
    c = _as_kupisch(c)
    return sum(
        1
        for i in range(c.simples)
        if id_at_most_one(c, projective(c, i)) is IdClass.DIM_ONE
    )


def count_inj_proj_dim_one(c) -> int:
    """Number of indecomposable injectives of projective dimension exactly one."""
    c = _as_kupisch(c)
    return sum(1 for j in range(c.simples) if proj_dim(c, injective(c, j)) == 1)


def radical_id_le_one_count(c) -> int:
    """Number of radicals ``e_s J`` with injective dimension at most one.

    ``e_s J = M(s+1, c_s - 1)`` is never injective when nonzero, and has
    injective dimension one iff ``d_{s+c_s-1} - c_s + 1 = d_s``.  The zero
    radical ``e_n J`` counts.
    """
    c = _as_kupisch(c)
    d = c.d
    total = 0
    for s, cs in enumerate(c.c):
        if cs == 1 or d[s + cs - 1] - cs + 1 == d[s]:
            total += 1
    return total


def injectives_with_radical_syzygy(c) -> list[Module]:
    """Injectives whose first syzygy is a nonzero radical ``e_s J``."""
    c = _as_kupisch(c)
    radicals = {radical(c, s) for s in range(c.simples)} - {ZERO}
    out = []
    for j in range(c.simples):
        inj = injective(c, j)
        if syzygy(c, inj) in radicals:
            out.append(inj)
    return out


def ext1_JJ_dim(c) -> int:
    """``dim Ext^1(J, J)`` as simples minus the radicals of id <= 1."""
    c = _as_kupisch(c)
    return c.simples - radical_id_le_one_count(c)


def hom_dim(ma: Module, mb: Module) -> int:
    """``dim Hom(M(a, b), M(c, d))``, which is 0 or 1 for uniserials."""
    if ma.length == 0 or mb.length == 0:
        return 0
    a, b = ma
    top, length = mb
    return int(top <= a <= top + length - 1 and top + length <= a + b)


def ext1_dim(c, ma: Module, mb: Module) -> int:
    """``dim Ext^1(ma, mb)`` from ``0 -> Omega ma -> P(ma) -> ma -> 0``."""
    c = _as_kupisch(c)
    if ma.length == 0 or mb.length == 0 or is_projective(c, ma):
        return 0
    return (
        hom_dim(syzygy(c, ma), mb)
        - hom_dim(projective(c, ma.top), mb)
        + hom_dim(ma, mb)
    )


def ext_dim(c, ma: Module, mb: Module, degree: int) -> int:
    """``dim Ext^l(ma, mb)`` by dimension shift along minimal syzygies."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    c = _as_kupisch(c)
    for _ in range(degree - 1):
        ma = syzygy(c, ma)
    return ext1_dim(c, ma, mb)


def ext1_JJ_dim_hom(c) -> int:
    """``dim Ext^1(J, J)`` summed over all pairs of radical summands."""
    c = _as_kupisch(c)
    rads = [radical(c, s) for s in range(c.simples)]
    return sum(ext1_dim(c, x, y) for x in rads for y in rads)


def global_dimension(c) -> int:
    c = _as_kupisch(c)
    return max(proj_dim(c, simple(i)) for i in range(c.simples))


def formula_P(path: DyckPath) -> int:
    """Closed count of injectives with projective dimension one, read off the path."""
    n = path.semilength
    if n == 0:
        return 0
    dec = ascent_descent(path)
    if dec.blocks == 1:
        return n
    k = valley_levels(dec)
    a, d = dec.a, dec.d
    middle = sum(max(d[i] - k[i] - 1, 0) for i in range(1, dec.blocks - 1))
    return d[0] - 1 + middle + a[-1] - 1


def formula_PP(path: DyckPath) -> int:
    """Closed count of radicals with id <= 1; ``u^n d^n`` gives ``n + 1``."""
    n = path.semilength
    if n == 0:
        return 1
    dec = ascent_descent(path)
    if dec.blocks == 1:
        return n + 1
    k = valley_levels(dec)
    a, d = dec.a, dec.d
    middle = sum(max(d[i] - k[i], 0) for i in range(1, dec.blocks - 1))
    return d[0] + middle + a[-1]


def formula_corollaryP(p: Permutation) -> int:
    # same closed form as the fixed-point formula
    return fixed_points_formula(p)


def formula_corollaryPP(p: Permutation) -> int:
    if p.is_identity():
        return p.n + 1
    return connectivity_formula(p) + 1


def algebra_stats(c) -> dict:
    c = _as_kupisch(c)
    return {
        "kupisch": list(c.c),
        "d": list(c.d),
        "gldim": global_dimension(c),
        "proj_id1": count_proj_inj_dim_one(c),
        "inj_pd1": count_inj_proj_dim_one(c),
        "radical_id_le1": radical_id_le_one_count(c),
        "dim_ext1_JJ": ext1_JJ_dim(c),
    }
