"""Partitions confined to the (d+1) x (n-d) box indexing Schubert classes of G(d, P^n).

A partition is stored with exactly d+1 parts (trailing zeros explicit).  The
conjugate of a partition lives in the transposed box, which has w rows and
d+1 columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Box:
    """Rectangle with d+1 rows and w = n-d columns."""

    d: int
    w: int

    def __post_init__(self):
        if self.d < 0 or self.w < 0:
            raise ValueError(f"box needs d >= 0 and w >= 0, got d={self.d}, w={self.w}")

    @classmethod
    def from_dn(cls, d: int, n: int) -> "Box":
        return cls(d, n - d)

    @property
    def n(self) -> int:
        return self.d + self.w

    @property
    def rows(self) -> int:
        return self.d + 1

    @property
    def cells(self) -> int:
        """Cell count, equal to dim G(d, P^n)."""
        return (self.d + 1) * self.w

    def transpose(self) -> "Box":
        if self.w == 0:
            raise ValueError("a box with no columns has no transpose")
        return Box(self.w - 1, self.d + 1)

    def full(self) -> "BoxedPartition":
        return BoxedPartition((self.w,) * self.rows, self)

    def empty(self) -> "BoxedPartition":
        return BoxedPartition((0,) * self.rows, self)

    def __str__(self):
        return f"d={self.d},n={self.n}"


@dataclass(frozen=True)
class BoxedPartition:
    parts: tuple[int, ...]
    box: Box

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if len(parts) != self.box.rows:
            raise ValueError(f"partition {parts} needs exactly {self.box.rows} parts for box {self.box}")
        if parts and (parts[0] > self.box.w or parts[-1] < 0):
            raise ValueError(f"partition {parts} does not fit in box {self.box}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition {parts} is not non-increasing")

    @classmethod
    def padded(cls, parts: Sequence[int], box: Box) -> "BoxedPartition":
        """Build from a possibly short list of parts, padding with zeros."""
        parts = list(parts)
        while len(parts) > box.rows and parts[-1] == 0:
            parts.pop()
        if len(parts) > box.rows:
            raise ValueError(f"partition {tuple(parts)} has more than {box.rows} non-zero parts")
        return cls(tuple(parts) + (0,) * (box.rows - len(parts)), box)

    def __getitem__(self, i: int) -> int:
        # parts beyond d are zero by convention
        if i > self.box.d:
            return 0
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def nonzero_parts(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p)


def _same_box(lam: BoxedPartition, mu: BoxedPartition) -> Box:
    if lam.box != mu.box:
        raise ValueError(f"box mismatch: {lam.box} vs {mu.box}")
    return lam.box


def parse_box(text: str) -> Box:
    """Parse ``"d=3,n=9"`` (keys in any order)."""
    fields = {}
    for item in text.replace(" ", "").split(","):
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep or key not in ("d", "n"):
            raise ValueError(f"malformed box {text!r}; expected 'd=<int>,n=<int>'")
        try:
            fields[key] = int(value)
        except ValueError:
            raise ValueError(f"malformed box {text!r}; {key} is not an integer") from None
    if set(fields) != {"d", "n"}:
        raise ValueError(f"malformed box {text!r}; expected 'd=<int>,n=<int>'")
    if fields["n"] < fields["d"]:
        raise ValueError(f"box {text!r} has n < d")
    return Box.from_dn(fields["d"], fields["n"])


def parse_partition(text: str, box: Box) -> BoxedPartition:
    """Parse ``"5,2,2,1"``; short forms are padded with zeros."""
    text = text.strip().strip("()[]")
    if not text:
        return box.empty()
    try:
        parts = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return BoxedPartition.padded(parts, box)


def weight(lam: BoxedPartition) -> int:
    return lam.weight


def complement(lam: BoxedPartition) -> BoxedPartition:
    """Return the complementary partition (w - lam_d, ..., w - lam_0) in the same box."""
    w = lam.box.w
    return BoxedPartition(tuple(w - p for p in reversed(lam.parts)), lam.box)


def conjugate(lam: BoxedPartition) -> BoxedPartition:
    """Transpose the Young diagram.

    The result lives in the transposed box (w rows, d+1 columns); its i-th
    part counts the rows of ``lam`` longer than i.
    """
    tbox = lam.box.transpose()
    return BoxedPartition(tuple(sum(1 for p in lam.parts if p > i) for i in range(lam.box.w)), tbox)


def leq(lam: BoxedPartition, mu: BoxedPartition) -> bool:
    _same_box(lam, mu)
    return all(a <= b for a, b in zip(lam.parts, mu.parts))


def lt(lam: BoxedPartition, mu: BoxedPartition) -> bool:
    """Strict in every coordinate, zeros included."""
    _same_box(lam, mu)
    return all(a < b for a, b in zip(lam.parts, mu.parts))


def pair_condition_A(lam: BoxedPartition, mu: BoxedPartition) -> bool:
    """lam_i + mu_{d-i} < w for every i; same as lt(lam, complement(mu))."""
    box = _same_box(lam, mu)
    d, w = box.d, box.w
    return all(lam[i] + mu[d - i] < w for i in range(d + 1))


def pair_condition_B(lam: BoxedPartition, mu: BoxedPartition) -> bool:
    """lam_d = mu_d = 0 and lam_i + mu_{d-i-1} <= w for i < d.

    This is the strict comparison of the conjugates against the complement of
    the conjugate, read in the transposed box.
    """
    box = _same_box(lam, mu)
    d, w = box.d, box.w
    if lam[d] != 0 or mu[d] != 0:
        return False
    return all(lam[i] + mu[d - i - 1] <= w for i in range(d))


def descent_set(mu: BoxedPartition) -> frozenset[int]:
    return frozenset(j for j in range(mu.box.rows) if mu[j] > mu[j + 1])


def _check_descent(mu: BoxedPartition, j: int) -> None:
    if j not in descent_set(mu):
        raise ValueError(f"{j} is not a descent of {mu.parts}")


def mu_j(mu: BoxedPartition, j: int) -> BoxedPartition:
    """Enlarge ``mu`` at the descent j.

    If mu_j < w the first j+1 rows become mu_j + 1; if mu_j = w the first
    j+2 rows become w.  Rows further down are unchanged.
    """
    _check_descent(mu, j)
    box = mu.box
    w = box.w
    if mu[box.d] >= w:
        raise ValueError(f"{mu.parts} fills the last row of the box; enlargements are undefined")
    parts = list(mu.parts)
    if mu[j] < w:
        for i in range(j + 1):
            parts[i] = mu[j] + 1
    else:
        for i in range(j + 2):
            parts[i] = w
    return BoxedPartition(tuple(parts), box)


def delta_j(mu: BoxedPartition, j: int) -> int:
    """Connectivity defect of one descent; not clamped, may be negative."""
    _check_descent(mu, j)
    w = mu.box.w
    if mu[mu.box.d] >= w:
        raise ValueError(f"{mu.parts} fills the last row of the box; defect is undefined")
    if mu[j] < w:
        return mu_j(mu, j).weight - mu.weight - 1
    return w - 1 - mu[j + 1]


def delta_j_alternate(mu: BoxedPartition, j: int) -> int:
    """Sum over i < j of (mu_j - mu_i + 1); only meaningful when mu_j < w."""
    _check_descent(mu, j)
    return sum(mu[j] - mu[i] + 1 for i in range(j))


def delta(mu: BoxedPartition) -> int:
    return sum(max(delta_j(mu, j), 0) for j in sorted(descent_set(mu)))


def _descending(rows: int, cap: int, total: int | None) -> Iterator[tuple[int, ...]]:
    if rows == 0:
        if total is None or total == 0:
            yield ()
        return
    top = cap if total is None else min(cap, total)
    for first in range(top, -1, -1):
        if total is not None and first * rows < total:
            break
        rest = None if total is None else total - first
        for tail in _descending(rows - 1, first, rest):
            yield (first,) + tail


def enumerate_partitions(box: Box, weight: int | None = None) -> list[BoxedPartition]:
    """All partitions in ``box`` (of the given weight), lexicographically descending."""
    return [BoxedPartition(p, box) for p in _descending(box.rows, box.w, weight)]
