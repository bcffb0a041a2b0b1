"""Checkers for the numeric hypotheses of the connectedness theorems.

Each checker takes class data for the varieties involved and returns a
:class:`Certificate`.  A false verdict is data, never an exception; errors
are reserved for malformed input (box or space mismatch, out-of-range
indices) and for internal cross-checks that disagree.

Multiprojective checkers derive projection dimensions from class supports,
which is only valid for irreducible varieties; that assumption is recorded
in every certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence, Union

from .certificate import Certificate, InconsistentData
from .kunneth_ring import IndexSet, MultiProjClass, ProductSpace, encombrante_mp, is_bonne, proj_dim
from .partitions import (
    Box,
    BoxedPartition,
    complement,
    conjugate,
    delta,
    descent_set,
    enumerate_partitions,
    mu_j,
    pair_condition_A,
    pair_condition_B,
)
from .schubert_ring import (
    BiSchubertClass,
    SchubertClass,
    multiply,
    special,
    special_product,
    sub_grassmannian_class,
    transport,
)

AnyClass = Union[SchubertClass, BiSchubertClass, MultiProjClass]
Ambient = Union[Box, ProductSpace]


@dataclass(frozen=True)
class VarietyData:
    """Class of (the closure of the image of) a variety, plus what the caller asserts about it.

    ``declared_dim`` defaults to the dimension read off a pure non-zero class.
    ``projection_dims`` optionally supplies dim p_I for multiprojective
    ambients; when given it must agree with the class support.
    """

    cls: AnyClass
    declared_dim: int | None = None
    irreducible: bool = True
    complete: bool = True
    projection_dims: Mapping[IndexSet, int] | None = None

    def __post_init__(self):
        total = self.ambient_dim
        if self.declared_dim is None:
            codims = self.cls.codimensions()
            if len(codims) != 1:
                raise ValueError("declared_dim is required for a zero or mixed class")
            object.__setattr__(self, "declared_dim", total - codims.pop())
        if not 0 <= self.declared_dim <= total:
            raise ValueError(f"declared dimension {self.declared_dim} outside [0, {total}]")
        if not self.cls.is_pure(total - self.declared_dim):
            raise ValueError(
                f"class codimensions {sorted(self.cls.codimensions())} do not match "
                f"declared dimension {self.declared_dim} (ambient dimension {total})"
            )
        if any(c < 0 for c in self.cls.terms.values()):
            raise ValueError("class of a variety must have non-negative coefficients")
        if self.projection_dims is not None:
            if not isinstance(self.cls, MultiProjClass):
                raise ValueError("projection_dims only make sense in a product of projective spaces")
            dims = {tuple(sorted(I)): int(v) for I, v in self.projection_dims.items()}
            object.__setattr__(self, "projection_dims", dims)
            for I, v in dims.items():
                derived = proj_dim(self.cls, I)
                if derived != v:
                    raise InconsistentData(f"supplied dim p_{list(I)} = {v} but the class support gives {derived}")

    @property
    def ambient(self) -> Ambient:
        return self.cls.space if isinstance(self.cls, MultiProjClass) else self.cls.box

    @property
    def ambient_dim(self) -> int:
        if isinstance(self.cls, MultiProjClass):
            return self.cls.space.dim
        if isinstance(self.cls, BiSchubertClass):
            return 2 * self.cls.box.cells
        return self.cls.box.cells

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.declared_dim

    def proj_dim(self, I: IndexSet) -> int:
        if self.projection_dims is not None and I in self.projection_dims:
            return self.projection_dims[I]
        return proj_dim(self.cls, I)


def _flags(*varieties: VarietyData) -> list[str]:
    out = []
    for name, v in zip("XYZ", varieties):
        out.append(f"{name} irreducible: {'asserted' if v.irreducible else 'NOT asserted'}")
        out.append(f"{name} complete: {'asserted' if v.complete else 'not asserted'}")
    return out


def _parts(lam: BoxedPartition) -> list[int]:
    return list(lam.parts)


def _terms(c: SchubertClass) -> list[dict[str, Any]]:
    return [{"partition": list(lam.parts), "coeff": k} for lam, k in c.terms.items()]


def _need_mp(*varieties: VarietyData) -> ProductSpace:
    spaces = set()
    for v in varieties:
        if not isinstance(v.cls, MultiProjClass):
            raise TypeError("this criterion needs classes on a product of projective spaces")
        spaces.add(v.cls.space)
    if len(spaces) != 1:
        raise ValueError(f"space mismatch: {sorted(map(str, spaces))}")
    return spaces.pop()


def _need_grass(*varieties: VarietyData) -> Box:
    boxes = set()
    for v in varieties:
        if not isinstance(v.cls, SchubertClass):
            raise TypeError("this criterion needs a class on a Grassmannian")
        boxes.add(v.cls.box)
    if len(boxes) != 1:
        raise ValueError(f"box mismatch: {sorted(map(str, boxes))}")
    return boxes.pop()


def _not_irreducible(criterion: str, *varieties: VarietyData) -> Certificate | None:
    bad = [name for name, v in zip("XYZ", varieties) if not v.irreducible]
    if not bad:
        return None
    return Certificate(
        criterion,
        False,
        [],
        _flags(*varieties),
        f"{', '.join(bad)} not asserted irreducible; projection dimensions cannot be read from classes",
    )


def _empty(criterion: str, *varieties: VarietyData) -> Certificate | None:
    bad = [name for name, v in zip("XYZ", varieties) if not v.cls]
    if not bad:
        return None
    return Certificate(criterion, False, [], _flags(*varieties), f"{', '.join(bad)} has the zero class")


def _precheck(criterion: str, *varieties: VarietyData) -> Certificate | None:
    # certificates are falsy when they fail, so compare against None explicitly
    early = _not_irreducible(criterion, *varieties)
    if early is None:
        early = _empty(criterion, *varieties)
    return early


# --- products of projective spaces -------------------------------------------


def _pairwise_projections(criterion: str, X: VarietyData, Y: VarietyData, strict: bool) -> Certificate:
    space = _need_mp(X, Y)
    early = _precheck(criterion, X, Y)
    if early is not None:
        return early
    witnesses = []
    for I in space.subsets():
        dx, dy, n = X.proj_dim(I), Y.proj_dim(I), space.n_I(I)
        witnesses.append({"I": list(I), "dim_X": dx, "dim_Y": dy, "n_I": n, "margin": dx + dy - n, "strict": strict})
    failing = [w["I"] for w in witnesses if w["margin"] < (1 if strict else 0)]
    rel = ">" if strict else ">="
    if failing:
        reason = f"dim p_I(X) + dim p_I(Y) {rel} n_I fails for I in {failing}"
    else:
        reason = f"dim p_I(X) + dim p_I(Y) {rel} n_I for every nonempty I"
    return Certificate(criterion, not failing, witnesses, _flags(X, Y), reason)


def check_th22(X: VarietyData, Y: VarietyData, strict: bool = True) -> Certificate:
    """Projection-dimension inequalities for the fibre product of X and Y.

    ``strict`` selects the connectedness/irreducibility hypothesis (>);
    otherwise the non-emptiness hypothesis (>=).
    """
    return _pairwise_projections("th2.2", X, Y, strict)


def check_cor23(X: VarietyData, Y: VarietyData) -> Certificate:
    """Same inequalities as th2.2 (strict) with Y a subvariety of P."""
    return _pairwise_projections("cor2.3", X, Y, True)


def check_cor24(X: VarietyData) -> Certificate:
    space = _need_mp(X)
    early = _precheck("cor2.4", X)
    if early is not None:
        return early
    witnesses = [{"I": list(I), "dim_X": X.proj_dim(I), "n_I": space.n_I(I)} for I in space.subsets()]
    failing = [w["I"] for w in witnesses if 2 * w["dim_X"] <= w["n_I"]]
    reason = "2 dim p_I(X) > n_I for every I" if not failing else f"2 dim p_I(X) > n_I fails for I in {failing}"
    return Certificate("cor2.4", not failing, witnesses, _flags(X), reason)


def check_prop26(Z: VarietyData) -> Certificate:
    """Encombrance of Z through projection dimensions, cross-checked against the full-slab test."""
    space = _need_mp(Z)
    early = _precheck("prop2.6", Z)
    if early is not None:
        return early
    dim = Z.declared_dim
    witnesses = [
        {"I": list(I), "dim_Z_I": Z.proj_dim(I), "dim_Z": dim, "n_I": space.n_I(I)} for I in space.subsets()
    ]
    failing = [w["I"] for w in witnesses if w["dim_Z_I"] != min(dim, w["n_I"])]
    holds = not failing
    slab = encombrante_mp(Z.cls)
    if slab != holds:
        raise InconsistentData(
            f"projection route says {holds} but the full-slab route says {slab}; "
            "the class cannot be that of an irreducible subvariety"
        )
    reason = (
        "dim p_I(Z) = min(dim Z, n_I) for every I; the class carries every multidegree of its codimension"
        if holds
        else f"dim p_I(Z) = min(dim Z, n_I) fails for I in {failing}"
    )
    return Certificate("prop2.6", holds, witnesses, _flags(Z), reason)


def check_prop27(X: VarietyData, Z: VarietyData, variant: str) -> Certificate:
    if variant not in ("a", "b"):
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    criterion = f"prop2.7{variant}"
    space = _need_mp(X, Z)
    early = _precheck(criterion, X, Z)
    if early is not None:
        return early
    header = {"dim_fX": X.declared_dim, "codim_Z": Z.codim, "header_ok": X.declared_dim > Z.codim}
    if not header["header_ok"]:
        return Certificate(
            criterion, False, [header], _flags(X, Z), f"dim f(X) = {X.declared_dim} is not > codim Z = {Z.codim}"
        )
    singles = {i: X.proj_dim((i,)) for i in range(1, space.r + 1)}
    if variant == "a":
        enc = encombrante_mp(Z.cls)
        missing = [list(m) for m in space.slab(Z.codim) if m not in Z.cls.terms]
        witness = {**header, "encombrante": enc, "missing": missing, "single_dims_fX": list(singles.values())}
        holds = enc and all(v > 0 for v in singles.values())
        reason = (
            "Z is encombrante and every dim p_i f(X) > 0"
            if holds
            else ("Z is not encombrante" if not enc else "some dim p_i f(X) = 0")
        )
    else:
        bonne = is_bonne(Z.cls, Z.declared_dim)
        zdims = [Z.proj_dim((i,)) for i in range(1, space.r + 1)]
        witness = {**header, "bonne": bonne, "single_dims_Z": zdims, "dim_Z": Z.declared_dim}
        holds = bonne
        reason = "Z is bonne: every dim p_i(Z) = dim Z" if holds else "Z is not bonne"
    return Certificate(criterion, holds, [witness], _flags(X, Z), reason)


def check_th13(X: VarietyData, codims: Sequence[int], strict: bool = False) -> Certificate:
    """Hypotheses for general linear sections L_1 x ... x L_r with the given codimensions.

    Part 1 (``strict=False``): dim p_I(X) >= sum_{i in I} codim L_i for all I.
    Part 2 (``strict=True``): additionally > for every I meeting
    J = {i : codim L_i > 0}.
    """
    space = _need_mp(X)
    codims = [int(c) for c in codims]
    if len(codims) != space.r or any(not 0 <= c <= n for c, n in zip(codims, space.dims)):
        raise ValueError(f"codims {codims} must give one value in [0, n_i] per factor of {space}")
    early = _precheck("th1.3", X)
    if early is not None:
        return early
    J = {i + 1 for i, c in enumerate(codims) if c > 0}
    witnesses = []
    for I in space.subsets():
        need_strict = strict and bool(J & set(I))
        witnesses.append(
            {
                "I": list(I),
                "dim_X": X.proj_dim(I),
                "codim_sum": sum(codims[i - 1] for i in I),
                "strict": need_strict,
            }
        )
    failing = [
        w["I"] for w in witnesses if w["dim_X"] < w["codim_sum"] + (1 if w["strict"] else 0)
    ]
    part = "part 2" if strict else "part 1"
    reason = (
        f"{part} inequalities hold for every I" if not failing else f"{part} inequalities fail for I in {failing}"
    )
    return Certificate("th1.3", not failing, witnesses, _flags(X), reason)


# --- Grassmannians ------------------------------------------------------------


def check_hansen(X_dim: int, box: Box) -> Certificate:
    """Hansen's hypothesis for the diagonal of G x G, in both printed forms.

    The verdict follows the ``dim f(X) < n`` form; the ``codim f(X) < n``
    form is reported alongside and any disagreement is flagged.
    """
    total = 2 * box.cells
    if not 0 <= X_dim <= total:
        raise ValueError(f"dim f(X) = {X_dim} outside [0, {total}]")
    codim = total - X_dim
    dim_form = X_dim < box.n
    codim_form = codim < box.n
    witness = {
        "dim_fX": X_dim,
        "codim_fX": codim,
        "n": box.n,
        "dim_form": dim_form,
        "codim_form": codim_form,
        "disagree": dim_form != codim_form,
    }
    reason = f"dim f(X) < n is {dim_form}; codim f(X) < n is {codim_form}"
    if dim_form != codim_form:
        reason += " (the two forms disagree on this input)"
    return Certificate("hansen", dim_form, [witness], [], reason)


def _qualifying_pairs(pairs) -> list[dict[str, Any]]:
    out = []
    for lam, mu in pairs:
        if pair_condition_A(lam, mu):
            out.append({"lambda": _parts(lam), "mu": _parts(mu), "condition": "A"})
        elif pair_condition_B(lam, mu):
            out.append({"lambda": _parts(lam), "mu": _parts(mu), "condition": "B"})
    return out


def check_th71(F: VarietyData) -> Certificate:
    """Is there a supported pair (lam, mu) of [f(X)] with lam < complement(mu), or the conjugate version?

    The coefficient of p1*sigma_lam . p2*sigma_mu in the class is the
    pairing against p1*sigma_{complement lam} . p2*sigma_{complement mu}.
    By the monotonicity of non-vanishing, it is enough to scan the support.
    """
    if not isinstance(F.cls, BiSchubertClass):
        raise TypeError("th7.1 needs a class on G(d,P^n) x G(d,P^n)")
    if not F.cls.is_nonnegative():
        raise ValueError("class of a variety must have non-negative coefficients")
    witnesses = _qualifying_pairs(F.cls.terms)
    for w in witnesses:
        lam = BoxedPartition(tuple(w["lambda"]), F.cls.box)
        mu = BoxedPartition(tuple(w["mu"]), F.cls.box)
        w["coeff"] = F.cls.coefficient(lam, mu)
    if not F.cls:
        reason = "zero class"
    elif witnesses:
        reason = f"{len(witnesses)} supported pairs satisfy one of the two pair conditions"
    else:
        reason = "no supported pair satisfies lam_i + mu_(d-i) < w, nor the conjugate condition"
    return Certificate("th7.1", bool(witnesses), witnesses, _flags(F), reason)


def check_cor73(X: VarietyData, Y: VarietyData, criterion: str = "cor7.3") -> Certificate:
    """[X] . [Y] . (sigma_{1,...,1} + sigma_w) != 0, computed two ways.

    Direct route: the triple product.  Witness route: a pair (lam, mu) in the
    supports with lam < complement(mu) or its conjugate analogue.  The two
    must agree.
    """
    box = _need_grass(X, Y)
    if box.w < 1:
        raise ValueError("the criterion needs n - d >= 1")
    if not X.cls.is_nonnegative() or not Y.cls.is_nonnegative():
        raise ValueError("classes must have non-negative coefficients")
    extra = sub_grassmannian_class(box, 1) + special(box, box.w)
    product = multiply(multiply(X.cls, Y.cls), extra)
    witnesses = _qualifying_pairs((lam, mu) for lam in X.cls.terms for mu in Y.cls.terms)
    if bool(product) != bool(witnesses):
        raise InconsistentData(
            f"triple product {'non-zero' if product else 'zero'} but pair search found {len(witnesses)} pairs"
        )
    for w in witnesses:
        w["coeff_X"] = X.cls.coefficient(BoxedPartition(tuple(w["lambda"]), box))
        w["coeff_Y"] = Y.cls.coefficient(BoxedPartition(tuple(w["mu"]), box))
    summary = {"product": _terms(product)}
    if product:
        reason = "[X].[Y].(sigma_{1,...,1} + sigma_w) is non-zero"
    else:
        reason = "[X].[Y].(sigma_{1,...,1} + sigma_w) = 0"
    return Certificate(criterion, bool(product), witnesses + [summary], _flags(X, Y), reason)


def check_cor74(X: VarietyData) -> Certificate:
    return check_cor73(X, X, criterion="cor7.4")


def check_grass_encombrante(Z: VarietyData) -> Certificate:
    box = _need_grass(Z)
    if not Z.cls:
        return Certificate("encombrante", False, [], _flags(Z), "zero class")
    missing = [_parts(lam) for lam in enumerate_partitions(box, Z.codim) if lam not in Z.cls.terms]
    holds = not missing
    reason = (
        f"every partition of weight {Z.codim} appears in the class"
        if holds
        else f"{len(missing)} partitions of weight {Z.codim} are missing from the class"
    )
    return Certificate("encombrante", holds, [{"codim": Z.codim, "missing": missing}], _flags(Z), reason)


def check_cor75(X: VarietyData, Z: VarietyData) -> Certificate:
    """Preimage of Z under a map with encombrante image.

    Branch 1: dim Z > codim f(X) + d and [Z] . sigma_{1,...,1} != 0.
    Branch 2: dim Z > codim f(X) + w - 1 and [Z] . sigma_w != 0.
    """
    box = _need_grass(X, Z)
    enc = check_grass_encombrante(X)
    if not enc.holds:
        return Certificate("cor7.5", False, enc.witnesses, _flags(X, Z), f"f(X) is not encombrante: {enc.reason}")
    witnesses = []
    for branch, bound, cls in (
        (1, X.codim + box.d, sub_grassmannian_class(box, 1)),
        (2, X.codim + box.w - 1, special(box, box.w)),
    ):
        product = multiply(Z.cls, cls)
        witnesses.append(
            {
                "branch": branch,
                "dim_Z": Z.declared_dim,
                "bound": bound,
                "dim_ok": Z.declared_dim > bound,
                "product_nonzero": bool(product),
                "holds": Z.declared_dim > bound and bool(product),
            }
        )
    passing = [w["branch"] for w in witnesses if w["holds"]]
    reason = f"branch {passing[0]} applies" if passing else "neither branch applies"
    return Certificate("cor7.5", bool(passing), witnesses, _flags(X, Z), reason)


def check_th81(F: VarietyData, mu: BoxedPartition, dual: bool = False) -> Certificate:
    """[f(X)] . sigma_{mu^(j)} != 0 for every descent j of mu.

    With ``dual=True`` the test runs on the transported class and the
    conjugate partition in the transposed box; witnesses report the
    enlarged partitions conjugated back to the original box.
    """
    box = _need_grass(F)
    if mu.box != box:
        raise ValueError(f"box mismatch: {mu.box} vs {box}")
    if box.cells - mu.weight <= 0:
        raise ValueError(f"the Schubert variety of {mu.parts} is a point; the criterion needs dimension > 0")
    cls, target = F.cls, mu
    if dual:
        cls, target = transport(F.cls), conjugate(mu)
    witnesses = []
    for j in sorted(descent_set(target)):
        enlarged = mu_j(target, j)
        product = multiply(cls, SchubertClass.basis(enlarged))
        shown = conjugate(enlarged) if dual else enlarged
        witnesses.append({"j": j, "mu_j": _parts(shown), "nonzero": bool(product), "product": _terms(product)})
    failing = [w["mu_j"] for w in witnesses if not w["nonzero"]]
    holds = not failing
    side = "dual " if dual else ""
    reason = (
        f"{side}condition holds: [f(X)] meets every sigma_(mu^(j))"
        if holds
        else f"{side}condition fails: [f(X)] . sigma_(mu^(j)) = 0 for {failing}"
    )
    return Certificate("th8.1", holds, witnesses, _flags(F), reason)


def check_cor83(F: VarietyData, mu: BoxedPartition) -> Certificate:
    """dim Sigma_mu > codim f(X) + delta(mu), for encombrante f(X)."""
    box = _need_grass(F)
    if mu.box != box:
        raise ValueError(f"box mismatch: {mu.box} vs {box}")
    enc = check_grass_encombrante(F)
    if not enc.holds:
        return Certificate("cor8.3", False, enc.witnesses, _flags(F), f"f(X) is not encombrante: {enc.reason}")
    dim_sigma = box.cells - mu.weight
    if mu[box.d] >= box.w:
        witness = {"dim_sigma": dim_sigma, "codim_F": F.codim, "delta": None}
        return Certificate("cor8.3", False, [witness], _flags(F), "mu fills the box: its Schubert variety is a point")
    dlt = delta(mu)
    holds = dim_sigma > F.codim + dlt
    witness = {"dim_sigma": dim_sigma, "codim_F": F.codim, "delta": dlt}
    rel = ">" if holds else "<="
    reason = f"dim Sigma_mu = {dim_sigma} {rel} codim f(X) + delta(mu) = {F.codim + dlt}"
    return Certificate("cor8.3", holds, [witness], _flags(F), reason)


def _th84_words(ells: Sequence[int], w: int) -> tuple[int, list[int] | None, list[int] | None]:
    s = sum(1 for m in ells if m == w)
    first = [w] * s + [ells[s] + 1] + list(ells[s + 1:]) if s < len(ells) else None
    second = [w] * (s + 1) if s > 0 else None
    return s, first, second


def _th84_prefix_route(F: SchubertClass, ells: Sequence[int], s: int):
    """Witness search in prefix-sum form; returns (lam or None, lam' or None)."""
    box = F.box
    lam_hit = None
    if s < len(ells):
        for lam in F.terms:
            bar = complement(lam)
            lhs = rhs = 0
            ok = True
            for i, m in enumerate(ells):
                lhs += m
                rhs += bar[i]
                if lhs > rhs or (i >= s and lhs == rhs):
                    ok = False
                    break
            if ok:
                lam_hit = lam
                break
    lam2_hit = None
    if s > 0 and s <= box.d:
        lam2_hit = next((lam for lam in F.terms if lam[box.d - s] == 0), None)
    return lam_hit, lam2_hit


def check_th84(F: VarietyData, ells: Sequence[int]) -> Certificate:
    """Preimages of intersections of special Schubert varieties of codimensions l_0 >= ... >= l_r.

    With s the number of l_i equal to w, the hypothesis asks for
    [f(X)] . sigma_w^s . sigma_{l_s + 1} . sigma_{l_(s+1)} ... sigma_{l_r} != 0 when s <= r
    and [f(X)] . sigma_w^(s+1) != 0 when s > 0.  Both conditions are also
    evaluated as prefix-sum inequalities over the support of the class, and
    the two routes must agree.
    """
    box = _need_grass(F)
    ells = [int(m) for m in ells]
    if any(not 0 <= m <= box.w for m in ells):
        raise ValueError(f"codimensions {ells} must lie in [0, {box.w}]")
    if any(a < b for a, b in zip(ells, ells[1:])):
        raise ValueError(f"codimensions {ells} must be non-increasing")
    s, first, second = _th84_words(ells, box.w)
    product_first = special_product(F.cls, first) if first is not None else None
    product_second = special_product(F.cls, second) if second is not None else None
    ok_first = first is None or bool(product_first)
    ok_second = second is None or bool(product_second)

    lam_hit, lam2_hit = _th84_prefix_route(F.cls, ells, s)
    prefix_first = first is None or lam_hit is not None
    prefix_second = second is None or lam2_hit is not None
    if (ok_first, ok_second) != (prefix_first, prefix_second):
        raise InconsistentData(
            f"product route gives {(ok_first, ok_second)} but prefix-sum route gives {(prefix_first, prefix_second)}"
        )
    witnesses = [{"s": s, "ell": ells, "w": box.w}]
    if first is not None:
        witnesses.append(
            {
                "condition": "first",
                "word": first,
                "nonzero": ok_first,
                "lambda": _parts(lam_hit) if lam_hit is not None else None,
            }
        )
    if second is not None:
        witnesses.append(
            {
                "condition": "second",
                "word": second,
                "nonzero": ok_second,
                "lambda_prime": _parts(lam2_hit) if lam2_hit is not None else None,
            }
        )
    holds = ok_first and ok_second
    if first is None and second is None:
        reason = "no special Schubert conditions: vacuous"
    elif holds:
        reason = "every required product is non-zero"
    else:
        failing = [name for name, ok in (("first", ok_first), ("second", ok_second)) if not ok]
        reason = f"required product(s) vanish: {failing}"
    return Certificate("th8.4", holds, witnesses, _flags(F), reason)


def check_bertini62(F: VarietyData, l: int) -> Certificate:
    """[f(X)] . [G(d, M)] != 0 for M of dimension l - 1.

    A non-zero intersection number is sufficient for f(X) to meet G(d, M)
    for general M; it is used here as a numeric proxy for that hypothesis.
    """
    box = _need_grass(F)
    if not box.d < l <= box.n:
        raise ValueError(f"l = {l} must satisfy {box.d} < l <= {box.n}")
    c = box.n - l + 1
    product = multiply(F.cls, sub_grassmannian_class(box, c))
    witness = {"l": l, "c": c, "nonzero": bool(product), "product": _terms(product)}
    reason = (
        f"[f(X)] . sigma_({c},...,{c}) is non-zero (sufficient for f(X) to meet G(d,M), dim M = {l - 1})"
        if product
        else f"[f(X)] . sigma_({c},...,{c}) = 0; the class proxy does not certify the hypothesis"
    )
    return Certificate("bertini6.2", bool(product), [witness], _flags(F), reason)


# --- re-verification ------------------------------------------------------------


def recheck(cert: Certificate, box: Box | None = None) -> bool:
    """Re-derive the verdict of a certificate from its witnesses alone.

    Grassmannian pair criteria need the ``box`` to re-evaluate the pair
    conditions.  Raises ``ValueError`` for criteria with nothing to re-derive.
    """
    c, ws = cert.criterion, cert.witnesses
    if c in ("th2.2", "cor2.3"):
        return bool(ws) and all(w["margin"] >= (1 if w["strict"] else 0) for w in ws)
    if c == "cor2.4":
        return bool(ws) and all(2 * w["dim_X"] > w["n_I"] for w in ws)
    if c == "prop2.6":
        return bool(ws) and all(w["dim_Z_I"] == min(w["dim_Z"], w["n_I"]) for w in ws)
    if c == "prop2.7a":
        w = ws[0]
        return w["dim_fX"] > w["codim_Z"] and not w.get("missing", [1]) and all(v > 0 for v in w["single_dims_fX"])
    if c == "prop2.7b":
        w = ws[0]
        return w["dim_fX"] > w["codim_Z"] and all(v == w["dim_Z"] for v in w.get("single_dims_Z", [-1]))
    if c == "th1.3":
        return bool(ws) and all(w["dim_X"] >= w["codim_sum"] + (1 if w["strict"] else 0) for w in ws)
    if c == "hansen":
        return ws[0]["dim_fX"] < ws[0]["n"]
    if c in ("th7.1", "cor7.3", "cor7.4"):
        if box is None:
            raise ValueError("pair criteria need the box to recheck")
        pairs = [w for w in ws if "lambda" in w]
        for w in pairs:
            lam = BoxedPartition(tuple(w["lambda"]), box)
            mu = BoxedPartition(tuple(w["mu"]), box)
            cond = pair_condition_A if w["condition"] == "A" else pair_condition_B
            if not cond(lam, mu):
                return False
        return bool(pairs)
    if c == "encombrante":
        return bool(ws) and not ws[0]["missing"]
    if c == "cor7.5":
        return any(w.get("dim_Z", -1) > w.get("bound", 0) and w.get("product_nonzero") for w in ws)
    if c == "th8.1":
        return all(bool(w["product"]) for w in ws)
    if c == "cor8.3":
        w = ws[0]
        return w.get("delta") is not None and w["dim_sigma"] > w["codim_F"] + w["delta"]
    if c == "th8.4":
        return all(w["nonzero"] for w in ws[1:])
    if c == "bertini6.2":
        return bool(ws[0]["product"])
    raise ValueError(f"no recheck for criterion {c!r}")
