"""Subset and set-family machinery.

Sets over a ground set [n] = {1, ..., n} are stored as bitmasks: bit p-1 of
the mask encodes membership of point p.  Families are ordered tuples of such
sets over a common ground size.  On top of that this module provides the
antichain predicates, profile vectors, the dual family / completely
separating system correspondence, and the text and JSON formats.

Rows are plain Python ints, so there is no machine-word ceiling on the
ground size; the compact text format is the only place limited to n <= 15.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class DuplicateMemberError(ValueError):
    """A family contains the same set twice where distinct members are required."""


_COMPACT_DIGITS = "123456789abcdef"
_POINT_OF_CHAR = {c: i + 1 for i, c in enumerate(_COMPACT_DIGITS)}


def _mask_of_points(points: Iterable[int], n: int) -> int:
    mask = 0
    for p in points:
        if not 1 <= p <= n:
            raise ValueError(f"point {p} outside ground set [1, {n}]")
        mask |= 1 << (p - 1)
    return mask


def bits_of(mask: int) -> Iterator[int]:
    """Yield the points of a bitmask in ascending order."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length()
        mask ^= lsb


@dataclass(frozen=True)
class PointSet:
    """A subset of [n], stored as a bitmask (bit p-1 <-> point p)."""

    mask: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("ground size must be >= 0")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"set bits outside ground set [1, {self.n}]")

    @classmethod
    def of(cls, points: Iterable[int], n: int) -> "PointSet":
        return cls(_mask_of_points(points, n), n)

    def points(self) -> tuple[int, ...]:
        return tuple(bits_of(self.mask))

    def cardinality(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, p: int) -> bool:
        return 1 <= p <= self.n and bool(self.mask >> (p - 1) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def is_subset(self, other: "PointSet") -> bool:
        return self.mask & other.mask == self.mask

    def __repr__(self) -> str:
        return f"PointSet({{{','.join(map(str, self.points()))}}}, n={self.n})"


@dataclass(frozen=True)
class SetFamily:
    """An ordered list of subsets of [ground].

    Order matters: the dual indexes blocks by the position of each member.
    Duplicates are representable, but the antichain predicates reject them.
    """

    ground: int
    members: tuple[PointSet, ...]

    def __post_init__(self) -> None:
        if self.ground < 0:
            raise ValueError("ground size must be >= 0")
        for m in self.members:
            if m.n != self.ground:
                raise ValueError("all members must share the family's ground size")

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]], n: int) -> "SetFamily":
        return cls(n, tuple(PointSet.of(s, n) for s in sets))

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> "SetFamily":
        return cls(n, tuple(PointSet(m, n) for m in masks))

    def masks(self) -> tuple[int, ...]:
        return tuple(m.mask for m in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.members)

    def __getitem__(self, i: int) -> PointSet:
        return self.members[i]

    def has_duplicates(self) -> bool:
        return len(set(self.masks())) != len(self.members)

    def __repr__(self) -> str:
        return f"SetFamily(n={self.ground}, members={format_family(self)!r})"


@dataclass(frozen=True)
class KSpec:
    """The admissible member sizes K = {2 = k_1 < k_2 < ... < k_r}.

    2 is always present, 1 never; K \\ {2} must be nonempty (K = {2} makes
    the whole graph machinery degenerate and is rejected up front).
    """

    levels: tuple[int, ...]

    def __post_init__(self) -> None:
        lv = self.levels
        if len(lv) < 2:
            raise ValueError(
                "K must contain 2 and at least one level >= 3; "
                "K = {2} is rejected (its only maximal antichain is the full "
                "second level)"
            )
        if lv[0] != 2:
            raise ValueError("K must contain 2 as its smallest level (1 is never allowed)")
        if any(b <= a for a, b in zip(lv, lv[1:])):
            raise ValueError("K levels must be strictly increasing")

    @classmethod
    def of(cls, levels: Iterable[int]) -> "KSpec":
        return cls(tuple(sorted(set(levels))))

    @classmethod
    def parse(cls, text: str) -> "KSpec":
        try:
            levels = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError as exc:
            raise ValueError(f"cannot parse K from {text!r}") from exc
        return cls.of(levels)

    @property
    def kstar(self) -> int:
        """Smallest level above 2."""
        return self.levels[1]

    @property
    def l(self) -> int:
        """Largest level."""
        return self.levels[-1]

    def upper_levels(self) -> tuple[int, ...]:
        return self.levels[1:]

    def __contains__(self, k: int) -> bool:
        return k in self.levels

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.levels)) + "}"


# ---------------------------------------------------------------------------
# predicates


def _require_distinct(fam: SetFamily) -> None:
    if fam.has_duplicates():
        raise DuplicateMemberError("family has duplicate members; antichain predicates need distinct sets")


def is_antichain(fam: SetFamily) -> bool:
    """True iff no member is a subset of another (members must be distinct)."""
    _require_distinct(fam)
    masks = fam.masks()
    for a, b in combinations(masks, 2):
        inter = a & b
        if inter == a or inter == b:
            return False
    return True


def is_k_antichain(fam: SetFamily, kspec: KSpec) -> bool:
    """True iff fam is an antichain and every member size lies in K."""
    if any(m.cardinality() not in kspec.levels for m in fam):
        return False
    return is_antichain(fam)


def profile(fam: SetFamily) -> dict[int, int]:
    """Count members by cardinality: {k: p_k}, only for sizes present."""
    out: dict[int, int] = {}
    for m in fam:
        k = m.cardinality()
        out[k] = out.get(k, 0) + 1
    return dict(sorted(out.items()))


def dual(fam: SetFamily) -> SetFamily:
    """The dual family: n blocks over ground m = |fam|, X_i = {j : i in A_j}.

    Blocks are indexed by the input order of the members.  An empty family
    dualizes to n empty blocks over ground 0.
    """
    m = len(fam)
    blocks = []
    for i in range(fam.ground):
        bit = 1 << i
        block = 0
        for j, a in enumerate(fam.members):
            if a.mask & bit:
                block |= 1 << j
        blocks.append(block)
    return SetFamily.from_masks(blocks, m)


def is_css(fam: SetFamily) -> bool:
    """Completely separating system test over fam.ground.

    True iff for every ordered pair (a, b) of distinct ground points some
    block contains a but not b (applying this to both orders gives the
    usual two-block formulation).
    """
    n = fam.ground
    masks = fam.masks()
    # blocks containing each point, as a bitmask over block indices
    cols = []
    for i in range(n):
        bit = 1 << i
        col = 0
        for j, mk in enumerate(masks):
            if mk & bit:
                col |= 1 << j
        cols.append(col)
    for a in range(n):
        for b in range(n):
            if a != b and cols[a] & ~cols[b] == 0:
                return False
    return True


# ---------------------------------------------------------------------------
# text format
#
# Compact notation (n <= 15): one word per set, characters 1-9 then a-f for
# points 1..15, e.g. "1245,2367,16".  Braced notation works for any n:
# "{1,2,10},{3,4}".  The two may be mixed word by word; parsing an empty
# string gives the empty family.


def _parse_word(word: str, n: int) -> int:
    if word.startswith("{"):
        if not word.endswith("}"):
            raise ValueError(f"malformed braced set {word!r}")
        inner = word[1:-1].strip()
        if not inner:
            return 0
        try:
            pts = [int(tok) for tok in inner.split(",")]
        except ValueError as exc:
            raise ValueError(f"malformed braced set {word!r}") from exc
        return _mask_of_points(pts, n)
    mask = 0
    for ch in word:
        p = _POINT_OF_CHAR.get(ch.lower())
        if p is None:
            raise ValueError(f"bad character {ch!r} in compact set {word!r}")
        if p > n:
            raise ValueError(f"point {p} ({ch!r}) outside ground set [1, {n}]")
        bit = 1 << (p - 1)
        if mask & bit:
            raise ValueError(f"repeated point {p} in compact set {word!r}")
        mask |= bit
    return mask


def _split_words(text: str) -> list[str]:
    words = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced braces in family text")
        if ch == "," and depth == 0:
            words.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ValueError("unbalanced braces in family text")
    last = "".join(cur).strip()
    if last or words:
        words.append(last)
    return [w for w in words if w]


def parse_family(text: str, n: int) -> SetFamily:
    """Parse compact or braced family text over ground [n]."""
    return SetFamily.from_masks((_parse_word(w, n) for w in _split_words(text.strip())), n)


def format_family(fam: SetFamily) -> str:
    """Canonical text for a family: compact when n <= 15, braced otherwise."""
    words = []
    for m in fam:
        pts = m.points()
        if fam.ground <= 15:
            words.append("".join(_COMPACT_DIGITS[p - 1] for p in pts))
        else:
            words.append("{" + ",".join(map(str, pts)) + "}")
    return ",".join(words)


# ---------------------------------------------------------------------------
# JSON


def family_to_json(fam: SetFamily) -> dict:
    return {"n": fam.ground, "sets": [list(m.points()) for m in fam]}


def family_from_json(data: dict | str) -> SetFamily:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "n" not in data or "sets" not in data:
        raise ValueError('family JSON must be {"n": int, "sets": [[int, ...], ...]}')
    return SetFamily.of(data["sets"], int(data["n"]))
