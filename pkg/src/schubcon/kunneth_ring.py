"""Chow ring of P^{n_1} x ... x P^{n_r} in the Kunneth monomial basis.

A multidegree m = (m_1, ..., m_r) stands for H_1^{m_1} ... H_r^{m_r}, where
H_i is the pullback of a hyperplane class of the i-th factor.  The
coefficient of m in the class of a subvariety X is the component [X]_m.

Index sets I are tuples of 1-based factor indices, as in the usual notation
n_I = sum of n_i over i in I.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from .certificate import Certificate

MAX_FACTORS = 16

MultiDegree = tuple[int, ...]
IndexSet = tuple[int, ...]


@dataclass(frozen=True)
class ProductSpace:
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise ValueError("a product space needs at least one factor")
        if any(n < 1 for n in dims):
            raise ValueError(f"factor dimensions must be positive, got {dims}")
        if len(dims) > MAX_FACTORS:
            raise ValueError(f"at most {MAX_FACTORS} factors are supported, got {len(dims)}")

    @property
    def r(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def n_I(self, I: IndexSet) -> int:
        return sum(self.dims[i - 1] for i in I)

    def subsets(self) -> Iterator[IndexSet]:
        """Every nonempty index set, by size and then lexicographically."""
        for k in range(1, self.r + 1):
            yield from combinations(range(1, self.r + 1), k)

    def slab(self, codim: int) -> list[MultiDegree]:
        """All multidegrees of total degree ``codim`` with m_i <= n_i, descending."""
        out: list[MultiDegree] = []

        def fill(i: int, left: int, acc: list[int]):
            if i == self.r:
                if left == 0:
                    out.append(tuple(acc))
                return
            room = sum(self.dims[i + 1:])
            for m in range(min(left, self.dims[i]), max(0, left - room) - 1, -1):
                acc.append(m)
                fill(i + 1, left - m, acc)
                acc.pop()

        fill(0, codim, [])
        return out

    def __str__(self):
        return " x ".join(f"P^{n}" for n in self.dims)


def _check_spaces(a: ProductSpace, b: ProductSpace) -> None:
    if a != b:
        raise ValueError(f"space mismatch: {a} vs {b}")


@dataclass(frozen=True)
class MultiProjClass:
    space: ProductSpace
    terms: dict[MultiDegree, int] = field(default_factory=dict)

    def __post_init__(self):
        out = {}
        for m, c in self.terms.items():
            m = tuple(int(x) for x in m)
            if len(m) != self.space.r:
                raise ValueError(f"multidegree {m} has the wrong length for {self.space}")
            if any(x < 0 or x > n for x, n in zip(m, self.space.dims)):
                raise ValueError(f"multidegree {m} is out of range for {self.space}")
            if c:
                out[m] = out.get(m, 0) + int(c)
        out = {m: c for m, c in out.items() if c}
        object.__setattr__(self, "terms", dict(sorted(out.items(), reverse=True)))

    @classmethod
    def monomial(cls, space: ProductSpace, m: Sequence[int], coeff: int = 1) -> "MultiProjClass":
        return cls(space, {tuple(m): coeff})

    @classmethod
    def hyperplane(cls, space: ProductSpace, i: int) -> "MultiProjClass":
        """H_i, with i 1-based."""
        return cls.monomial(space, [1 if k == i - 1 else 0 for k in range(space.r)])

    @classmethod
    def unit(cls, space: ProductSpace) -> "MultiProjClass":
        return cls.monomial(space, [0] * space.r)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "MultiProjClass") -> "MultiProjClass":
        _check_spaces(self.space, other.space)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiProjClass(self.space, out)

    def __mul__(self, other):
        if isinstance(other, MultiProjClass):
            return multiply_mp(self, other)
        if isinstance(other, int):
            return MultiProjClass(self.space, {m: other * c for m, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "MultiProjClass":
        out = MultiProjClass.unit(self.space)
        for _ in range(k):
            out = multiply_mp(out, self)
        return out

    def coefficient(self, m: Sequence[int]) -> int:
        return self.terms.get(tuple(m), 0)

    def codimensions(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_pure(self, codim: int | None = None) -> bool:
        codims = self.codimensions()
        if codim is None:
            return len(codims) <= 1
        return codims <= {codim}

    def codim(self) -> int:
        codims = self.codimensions()
        if len(codims) != 1:
            raise ValueError(f"class is not pure of a single codimension (codimensions {sorted(codims)})")
        return codims.pop()

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def support(self) -> list[MultiDegree]:
        return list(self.terms)


def multiply_mp(a: MultiProjClass, b: MultiProjClass) -> MultiProjClass:
    """Product in the Chow ring; monomials with some m_i > n_i vanish."""
    _check_spaces(a.space, b.space)
    dims = a.space.dims
    out: dict[MultiDegree, int] = defaultdict(int)
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            if all(x <= n for x, n in zip(m, dims)):
                out[m] += ca * cb
    return MultiProjClass(a.space, out)


def _check_index_set(space: ProductSpace, I: Sequence[int]) -> IndexSet:
    I = tuple(sorted(set(I)))
    if not I:
        raise ValueError("index set must be nonempty")
    if I[0] < 1 or I[-1] > space.r:
        raise ValueError(f"index set {I} out of range 1..{space.r}")
    return I


def proj_codim(c: MultiProjClass, I: Sequence[int]) -> int:
    """Codimension of the projection p_I(X) in P_I, for c = [X] with X irreducible.

    The minimum of sum_{i in I} m_i over the multidegrees carried by c.
    """
    I = _check_index_set(c.space, I)
    if not c:
        raise ValueError("the zero class is not the class of a subvariety")
    return min(sum(m[i - 1] for i in I) for m in c.terms)


def proj_dim(c: MultiProjClass, I: Sequence[int]) -> int:
    I = _check_index_set(c.space, I)
    return c.space.n_I(I) - proj_codim(c, I)


def projection_codims(c: MultiProjClass) -> dict[IndexSet, int]:
    return {I: proj_codim(c, I) for I in c.space.subsets()}


def support_admissible(c: MultiProjClass) -> Certificate:
    """Compare the support with the lattice points cut out by the projection inequalities.

    The expected support is every m of total degree codim(c), with
    0 <= m_i <= n_i, such that sum_{i in I} m_i >= codim p_I for all I.
    """
    if not c:
        raise ValueError("the zero class has no support to test")
    k = c.codim()
    codims = projection_codims(c)
    expected = [m for m in c.space.slab(k) if all(sum(m[i - 1] for i in I) >= a for I, a in codims.items())]
    support = set(c.terms)
    missing = [m for m in expected if m not in support]
    extra = sorted((m for m in support if m not in set(expected)), reverse=True)
    witnesses = [{"missing": list(m)} for m in missing] + [{"extra": list(m)} for m in extra]
    holds = not missing and not extra
    bounds = ", ".join(f"I={list(I)}: {a}" for I, a in codims.items())
    reason = (
        f"support equals the integer points cut out by the projection codimensions ({bounds})"
        if holds
        else f"support differs from the integer points cut out by the projection codimensions ({bounds})"
    )
    return Certificate(
        "prop3.1",
        holds,
        witnesses,
        ["irreducible (asserted by caller; the class alone cannot show it)"],
        reason,
    )


def hodge_check(c: MultiProjClass) -> Certificate:
    """Neighbour inequalities [X]_m^2 >= [X]_{m+e_a-e_b} [X]_{m-e_a+e_b}.

    Checked at every multidegree of the class's codimension (absent ones read
    as zero), not only on the support, so holes flanked by non-zero
    neighbours are reported.
    """
    if any(x < 0 for x in c.terms.values()):
        raise ValueError("negative coefficients: not the class of a subvariety")
    if not c:
        return Certificate("hodge", True, [], [], "zero class: nothing to check")
    k = c.codim()
    r = c.space.r
    violations = []
    for m in c.space.slab(k):
        for a in range(r):
            for b in range(a + 1, r):
                up = list(m)
                up[a] += 1
                up[b] -= 1
                down = list(m)
                down[a] -= 1
                down[b] += 1
                lhs = c.coefficient(m) ** 2
                if min(up[b], down[a]) < 0:
                    continue
                rhs = c.coefficient(up) * c.coefficient(down)
                if lhs < rhs:
                    violations.append({"m": list(m), "alpha": a + 1, "beta": b + 1, "lhs": lhs, "rhs": rhs})
    holds = not violations
    reason = "all neighbour inequalities hold" if holds else f"{len(violations)} neighbour inequalities fail"
    return Certificate("hodge", holds, violations, [], reason)


def encombrante_mp(c: MultiProjClass) -> bool:
    """Every multidegree of the class's codimension with m_i <= n_i is carried by c."""
    if not c:
        return False
    k = c.codim()
    return all(m in c.terms for m in c.space.slab(k))


def is_bonne(c: MultiProjClass, dim_Z: int) -> bool:
    """Every single-factor projection keeps the dimension of Z."""
    if not c:
        raise ValueError("the zero class is not the class of a subvariety")
    if c.codim() != c.space.dim - dim_Z:
        raise ValueError(f"class codimension {c.codim()} does not match dim {dim_Z} in {c.space}")
    return all(proj_dim(c, (i,)) == dim_Z for i in range(1, c.space.r + 1))
