"""Exact arithmetic in the Chow ring of G(d, P^n) in the Schubert basis.

The production product expands the left factor by the Giambelli determinant
into words in special classes and evaluates each word with the Pieri rule.
``lr_oracle`` counts Littlewood-Richardson tableaux instead and shares none
of that machinery; it exists to cross-check ``multiply``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partitions import Box, BoxedPartition, complement, conjugate, enumerate_partitions, leq

Parts = tuple[int, ...]


def _canonical(terms: Mapping[BoxedPartition, int], box: Box) -> dict[BoxedPartition, int]:
    out = {}
    for lam, coeff in terms.items():
        if lam.box != box:
            raise ValueError(f"partition {lam.parts} lives in box {lam.box}, expected {box}")
        if coeff:
            out[lam] = int(coeff)
    # lexicographically descending, the enumeration order
    return dict(sorted(out.items(), key=lambda kv: kv[0].parts, reverse=True))


@dataclass(frozen=True)
class SchubertClass:
    """Integer combination of Schubert classes of one Grassmannian."""

    box: Box
    terms: dict[BoxedPartition, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _canonical(self.terms, self.box))

    @classmethod
    def basis(cls, lam: BoxedPartition, coeff: int = 1) -> "SchubertClass":
        return cls(lam.box, {lam: coeff})

    @classmethod
    def zero(cls, box: Box) -> "SchubertClass":
        return cls(box, {})

    @classmethod
    def from_parts(cls, box: Box, terms: Mapping[Sequence[int], int]) -> "SchubertClass":
        return cls(box, {BoxedPartition.padded(p, box): c for p, c in terms.items()})

    def _raw(self) -> dict[Parts, int]:
        return {lam.parts: c for lam, c in self.terms.items()}

    @classmethod
    def _from_raw(cls, box: Box, raw: Mapping[Parts, int]) -> "SchubertClass":
        return cls(box, {BoxedPartition(p, box): c for p, c in raw.items() if c})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "SchubertClass") -> "SchubertClass":
        _check_boxes(self.box, other.box)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchubertClass(self.box, out)

    def __neg__(self):
        return SchubertClass(self.box, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SchubertClass") -> "SchubertClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SchubertClass):
            return multiply(self, other)
        if isinstance(other, int):
            return SchubertClass(self.box, {lam: other * c for lam, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "SchubertClass":
        out = special(self.box, 0)
        for _ in range(k):
            out = multiply(out, self)
        return out

    def coefficient(self, lam: BoxedPartition) -> int:
        return self.terms.get(lam, 0)

    def codimensions(self) -> set[int]:
        return {lam.weight for lam in self.terms}

    def is_pure(self, codim: int | None = None) -> bool:
        """Zero is pure of every codimension."""
        codims = self.codimensions()
        if codim is None:
            return len(codims) <= 1
        return codims <= {codim}

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def degree(self) -> int:
        """Coefficient of the point class."""
        return self.coefficient(self.box.full())

    def support(self) -> list[BoxedPartition]:
        return list(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"SchubertClass({self.box}, 0)"
        body = " + ".join(f"{c}*s[{lam}]" for lam, c in self.terms.items())
        return f"SchubertClass({self.box}, {body})"


def _check_boxes(a: Box, b: Box) -> None:
    if a != b:
        raise ValueError(f"box mismatch: {a} vs {b}")


# --- special classes and the Pieri rule -------------------------------------


def special(box: Box, m: int) -> SchubertClass:
    if not 0 <= m <= box.w:
        raise ValueError(f"special class index {m} outside [0, {box.w}]")
    return SchubertClass.basis(BoxedPartition.padded([m], box))


def _horizontal_strips(parts: Parts, m: int, w: int) -> list[Parts]:
    """Partitions nu in the box with nu/parts a horizontal strip of m cells."""
    rows = len(parts)
    out = []

    def grow(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                out.append(tuple(acc))
            return
        ceiling = w if i == 0 else parts[i - 1]
        # the remaining rows can absorb at most this many cells
        room = sum((w if k == 0 else parts[k - 1]) - parts[k] for k in range(i + 1, rows))
        lo = max(0, left - room)
        for extra in range(min(left, ceiling - parts[i]), lo - 1, -1):
            acc.append(parts[i] + extra)
            grow(i + 1, left - extra, acc)
            acc.pop()

    grow(0, m, [])
    return out


def _pieri_raw(raw: Mapping[Parts, int], m: int, w: int) -> dict[Parts, int]:
    if m == 0:
        return dict(raw)
    out: dict[Parts, int] = defaultdict(int)
    for parts, c in raw.items():
        for nu in _horizontal_strips(parts, m, w):
            out[nu] += c
    return {k: v for k, v in out.items() if v}


def pieri(c: SchubertClass, m: int) -> SchubertClass:
    """Multiply by the special class sigma_m (horizontal strips, box-truncated)."""
    if not 0 <= m <= c.box.w:
        raise ValueError(f"special class index {m} outside [0, {c.box.w}]")
    return SchubertClass._from_raw(c.box, _pieri_raw(c._raw(), m, c.box.w))


def special_product(c: SchubertClass, ells: Iterable[int]) -> SchubertClass:
    """c * sigma_{l_0} * ... * sigma_{l_r} by repeated Pieri."""
    raw = c._raw()
    for m in ells:
        if not 0 <= m <= c.box.w:
            raise ValueError(f"special class index {m} outside [0, {c.box.w}]")
        raw = _pieri_raw(raw, m, c.box.w)
        if not raw:
            break
    return SchubertClass._from_raw(c.box, raw)


# --- Giambelli expansion and the general product -----------------------------


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=4096)
def _giambelli_words(parts: Parts, w: int) -> tuple[tuple[Parts, int], ...]:
    # det(h_{lam_i + j - i}); h_k vanishes for k < 0 and, in the Grassmannian, for k > w
    rows = len(parts)
    while rows and parts[rows - 1] == 0:
        rows -= 1
    words: dict[Parts, int] = defaultdict(int)
    perm: list[int] = []
    word: list[int] = []

    # row-by-row Laplace expansion; the matrix is banded so most columns are skipped
    def expand(i: int, used: int):
        if i == rows:
            words[tuple(sorted(word, reverse=True))] += _permutation_sign(perm)
            return
        for j in range(max(0, i - parts[i]), min(rows, w + i - parts[i] + 1)):
            if used >> j & 1:
                continue
            k = parts[i] + j - i
            perm.append(j)
            if k:
                word.append(k)
            expand(i + 1, used | 1 << j)
            if k:
                word.pop()
            perm.pop()

    expand(0, 0)
    return tuple((word, c) for word, c in sorted(words.items(), reverse=True) if c)


def giambelli_expand(lam: BoxedPartition) -> list[tuple[int, tuple[int, ...]]]:
    """Signed words in special classes whose Pieri evaluation is sigma_lam.

    Each entry is ``(coefficient, word)``; the empty word stands for the unit.
    """
    return [(c, word) for word, c in _giambelli_words(lam.parts, lam.box.w)]


def multiply(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    _check_boxes(a.box, b.box)
    w = a.box.w
    braw = b._raw()
    out: dict[Parts, int] = defaultdict(int)
    for lam, ca in a.terms.items():
        for word, cw in _giambelli_words(lam.parts, w):
            raw = braw
            for m in word:
                raw = _pieri_raw(raw, m, w)
                if not raw:
                    break
            for nu, c in raw.items():
                out[nu] += ca * cw * c
    return SchubertClass._from_raw(a.box, out)


# --- Littlewood-Richardson oracle -------------------------------------------


def _lr_count(outer: Parts, inner: Parts, content: Parts) -> int:
    """Number of LR tableaux of shape outer/inner and the given content."""
    cells = [(i, c) for i in range(len(outer)) for c in range(outer[i] - 1, inner[i] - 1, -1)]
    content = tuple(p for p in content if p)
    if len(cells) != sum(content):
        return 0
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(content) + 1)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, c = cells[k]
        total = 0
        for v in range(1, len(content) + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            right = filling.get((i, c + 1))
            if right is not None and v > right:
                continue
            above = filling.get((i - 1, c))
            if above is not None and v <= above:
                continue
            filling[(i, c)] = v
            counts[v] += 1
            total += place(k + 1)
            counts[v] -= 1
            del filling[(i, c)]
        return total

    return place(0)


def lr_oracle(lam: BoxedPartition, mu: BoxedPartition) -> SchubertClass:
    """sigma_lam * sigma_mu by brute-force Littlewood-Richardson tableau counts."""
    box = lam.box
    _check_boxes(box, mu.box)
    terms = {}
    for nu in enumerate_partitions(box, lam.weight + mu.weight):
        if not all(a >= b for a, b in zip(nu.parts, lam.parts)):
            continue
        count = _lr_count(nu.parts, lam.parts, mu.parts)
        if count:
            terms[nu] = count
    return SchubertClass(box, terms)


def lr_multiply(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    """Bilinear extension of ``lr_oracle``."""
    _check_boxes(a.box, b.box)
    out = SchubertClass.zero(a.box)
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            out = out + (ca * cb) * lr_oracle(lam, mu)
    return out


# --- pairing and nonvanishing predicates -------------------------------------


def component(c: SchubertClass, lam: BoxedPartition) -> int:
    """Coefficient of sigma_lam in c."""
    _check_boxes(c.box, lam.box)
    return c.coefficient(lam)


def nonzero_pair(lam: BoxedPartition, mu: BoxedPartition) -> bool:
    """sigma_lam * sigma_mu != 0 exactly when lam <= complement(mu)."""
    return leq(lam, complement(mu))


def nonzero_special_product(lam: BoxedPartition, ells: Sequence[int]) -> bool:
    """Whether sigma_{complement(lam)} * sigma_{l_0} ... sigma_{l_r} is non-zero.

    Prefix-sum test: l_0 + ... + l_i <= lam_0 + ... + lam_i for every i.
    """
    w = lam.box.w
    if any(not 0 <= m <= w for m in ells):
        raise ValueError(f"special indices {list(ells)} must lie in [0, {w}]")
    if any(a < b for a, b in zip(ells, ells[1:])):
        raise ValueError(f"special indices {list(ells)} must be non-increasing")
    lhs = rhs = 0
    for i, m in enumerate(ells):
        lhs += m
        rhs += lam[i]
        if lhs > rhs:
            return False
    return True


def sub_grassmannian_class(box: Box, c: int) -> SchubertClass:
    """Class sigma_{c,...,c} (d+1 copies) of G(d, M) for M of codimension c."""
    if not 0 <= c <= box.w:
        raise ValueError(f"codimension {c} outside [0, {box.w}]")
    return SchubertClass.basis(BoxedPartition((c,) * box.rows, box))


def transport(c: SchubertClass) -> SchubertClass:
    """Image of c under the duality G(d, P^n) -> G(n-d-1, P^n*): sigma_lam -> sigma_lam*."""
    tbox = c.box.transpose()
    return SchubertClass(tbox, {conjugate(lam): k for lam, k in c.terms.items()})


# --- classes on G x G ---------------------------------------------------------


def _canonical_bi(terms, box: Box):
    out = {}
    for (lam, mu), coeff in terms.items():
        if lam.box != box or mu.box != box:
            raise ValueError(f"bi-class terms must live in box {box}")
        if coeff:
            out[(lam, mu)] = int(coeff)
    return dict(sorted(out.items(), key=lambda kv: (kv[0][0].parts, kv[0][1].parts), reverse=True))


@dataclass(frozen=True)
class BiSchubertClass:
    """Integer combination of p1*sigma_lam . p2*sigma_mu on G(d,P^n) x G(d,P^n)."""

    box: Box
    terms: dict[tuple[BoxedPartition, BoxedPartition], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _canonical_bi(self.terms, self.box))

    @classmethod
    def external(cls, a: SchubertClass, b: SchubertClass) -> "BiSchubertClass":
        """p1*a . p2*b."""
        _check_boxes(a.box, b.box)
        return cls(a.box, {(lam, mu): ca * cb for lam, ca in a.terms.items() for mu, cb in b.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "BiSchubertClass") -> "BiSchubertClass":
        _check_boxes(self.box, other.box)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BiSchubertClass(self.box, out)

    def coefficient(self, lam: BoxedPartition, mu: BoxedPartition) -> int:
        return self.terms.get((lam, mu), 0)

    def codimensions(self) -> set[int]:
        return {lam.weight + mu.weight for lam, mu in self.terms}

    def is_pure(self, codim: int | None = None) -> bool:
        codims = self.codimensions()
        if codim is None:
            return len(codims) <= 1
        return codims <= {codim}

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def support(self) -> list[tuple[BoxedPartition, BoxedPartition]]:
        return list(self.terms)


def bi_multiply(f: BiSchubertClass, a: SchubertClass, b: SchubertClass) -> BiSchubertClass:
    """f . p1*a . p2*b, using the Kunneth product factorwise."""
    _check_boxes(f.box, a.box)
    _check_boxes(f.box, b.box)
    out = BiSchubertClass(f.box, {})
    for (lam, mu), c in f.terms.items():
        left = multiply(SchubertClass.basis(lam, c), a)
        if not left:
            continue
        right = multiply(SchubertClass.basis(mu), b)
        out = out + BiSchubertClass.external(left, right)
    return out


def omega_class(box: Box) -> BiSchubertClass:
    """Sum of p1*sigma_a . p2*sigma_b over pairs with a_i + b_{d-i} = w + 1."""
    if box.w < 1:
        raise ValueError("omega class needs w >= 1")
    d, w = box.d, box.w
    terms = {}
    for alpha in enumerate_partitions(box):
        if alpha[d] < 1:
            continue
        beta = BoxedPartition(tuple(w + 1 - alpha[d - i] for i in range(d + 1)), box)
        terms[(alpha, beta)] = 1
    return BiSchubertClass(box, terms)
