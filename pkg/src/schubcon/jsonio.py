"""JSON readers and writers for classes, varieties and check requests."""

from __future__ import annotations

from typing import Any, Callable

from .certificate import Certificate
from .connectivity import (
    VarietyData,
    check_bertini62,
    check_cor23,
    check_cor24,
    check_cor73,
    check_cor74,
    check_cor75,
    check_cor83,
    check_hansen,
    check_prop26,
    check_prop27,
    check_th13,
    check_th22,
    check_th71,
    check_th81,
    check_th84,
)
from .kunneth_ring import MultiProjClass, ProductSpace
from .partitions import Box, BoxedPartition, parse_box
from .schubert_ring import BiSchubertClass, SchubertClass


def _require(doc: Any, key: str, where: str) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise ValueError(f"{where}: missing key {key!r}")
    return doc[key]


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{where}: expected an integer, got {value!r}")
    return value


def _int_list(value: Any, where: str) -> list[int]:
    if not isinstance(value, list):
        raise ValueError(f"{where}: expected a list of integers, got {value!r}")
    return [_int(v, where) for v in value]


def box_to_json(box: Box) -> dict[str, int]:
    return {"d": box.d, "n": box.n}


def box_from_json(doc: Any) -> Box:
    if isinstance(doc, str):
        return parse_box(doc)
    d = _int(_require(doc, "d", "box"), "box.d")
    n = _int(_require(doc, "n", "box"), "box.n")
    if n < d:
        raise ValueError(f"box has n={n} < d={d}")
    return Box.from_dn(d, n)


def space_from_json(doc: Any) -> ProductSpace:
    if isinstance(doc, str):
        return ProductSpace(tuple(int(t) for t in doc.split(",") if t.strip()))
    if isinstance(doc, list):
        return ProductSpace(tuple(_int_list(doc, "space")))
    return ProductSpace(tuple(_int_list(_require(doc, "dims", "space"), "space.dims")))


def class_to_json(c: SchubertClass | BiSchubertClass | MultiProjClass) -> dict[str, Any]:
    if isinstance(c, MultiProjClass):
        return {
            "space": {"dims": list(c.space.dims)},
            "terms": [{"m": list(m), "coeff": k} for m, k in c.terms.items()],
        }
    if isinstance(c, BiSchubertClass):
        return {
            "box": box_to_json(c.box),
            "terms": [{"lambda": list(lam.parts), "mu": list(mu.parts), "coeff": k} for (lam, mu), k in c.terms.items()],
        }
    return {
        "box": box_to_json(c.box),
        "terms": [{"partition": list(lam.parts), "coeff": k} for lam, k in c.terms.items()],
    }


def class_from_json(doc: Any, box: Box | None = None) -> SchubertClass | BiSchubertClass | MultiProjClass:
    """Read any of the three class formats; ``box`` fills in a missing box key."""
    terms = _require(doc, "terms", "class")
    if not isinstance(terms, list):
        raise ValueError("class.terms must be a list")
    if "space" in doc:
        space = space_from_json(doc["space"])
        out: dict = {}
        for t in terms:
            m = tuple(_int_list(_require(t, "m", "term"), "term.m"))
            out[m] = out.get(m, 0) + _int(_require(t, "coeff", "term"), "term.coeff")
        return MultiProjClass(space, out)
    if "box" in doc:
        box = box_from_json(doc["box"])
    if box is None:
        raise ValueError("class has no box and none was given")
    if terms and "lambda" in terms[0]:
        bi: dict = {}
        for t in terms:
            lam = BoxedPartition.padded(_int_list(_require(t, "lambda", "term"), "term.lambda"), box)
            mu = BoxedPartition.padded(_int_list(_require(t, "mu", "term"), "term.mu"), box)
            bi[(lam, mu)] = bi.get((lam, mu), 0) + _int(_require(t, "coeff", "term"), "term.coeff")
        return BiSchubertClass(box, bi)
    single: dict = {}
    for t in terms:
        lam = BoxedPartition.padded(_int_list(_require(t, "partition", "term"), "term.partition"), box)
        single[lam] = single.get(lam, 0) + _int(_require(t, "coeff", "term"), "term.coeff")
    return SchubertClass(box, single)


def variety_from_json(doc: Any, box: Box | None = None) -> VarietyData:
    """``{"class": ..., "dim": int?, "irreducible": bool?, "complete": bool?, "projection_dims": [...]?}``."""
    cls = class_from_json(_require(doc, "class", "variety"), box)
    dim = doc.get("dim")
    if dim is not None:
        dim = _int(dim, "variety.dim")
    proj = None
    if doc.get("projection_dims") is not None:
        proj = {}
        for entry in doc["projection_dims"]:
            I = tuple(_int_list(_require(entry, "I", "projection_dims"), "projection_dims.I"))
            proj[I] = _int(_require(entry, "dim", "projection_dims"), "projection_dims.dim")
    return VarietyData(
        cls,
        declared_dim=dim,
        irreducible=bool(doc.get("irreducible", True)),
        complete=bool(doc.get("complete", True)),
        projection_dims=proj,
    )


def _partition_in(F: VarietyData, value: Any, where: str) -> BoxedPartition:
    return BoxedPartition.padded(_int_list(value, where), F.cls.box)


def _v(inputs: dict, key: str) -> VarietyData:
    return variety_from_json(_require(inputs, key, "inputs"))


CHECKS: dict[str, Callable[[dict], Certificate]] = {
    "th2.2": lambda i: check_th22(_v(i, "X"), _v(i, "Y"), bool(i.get("strict", True))),
    "cor2.3": lambda i: check_cor23(_v(i, "X"), _v(i, "Y")),
    "cor2.4": lambda i: check_cor24(_v(i, "X")),
    "prop2.6": lambda i: check_prop26(_v(i, "Z")),
    "prop2.7a": lambda i: check_prop27(_v(i, "X"), _v(i, "Z"), "a"),
    "prop2.7b": lambda i: check_prop27(_v(i, "X"), _v(i, "Z"), "b"),
    "th1.3": lambda i: check_th13(
        _v(i, "X"), _int_list(_require(i, "codims", "inputs"), "codims"), bool(i.get("strict", False))
    ),
    "hansen": lambda i: check_hansen(_int(_require(i, "dim", "inputs"), "dim"), box_from_json(_require(i, "box", "inputs"))),
    "th7.1": lambda i: check_th71(_v(i, "F")),
    "cor7.3": lambda i: check_cor73(_v(i, "X"), _v(i, "Y")),
    "cor7.4": lambda i: check_cor74(_v(i, "X")),
    "cor7.5": lambda i: check_cor75(_v(i, "X"), _v(i, "Z")),
    "th8.1": lambda i: _th81(i),
    "cor8.3": lambda i: _cor83(i),
    "th8.4": lambda i: check_th84(_v(i, "F"), _int_list(_require(i, "ell", "inputs"), "ell")),
    "bertini6.2": lambda i: check_bertini62(_v(i, "F"), _int(_require(i, "l", "inputs"), "l")),
}


def _th81(inputs: dict) -> Certificate:
    F = _v(inputs, "F")
    mu = _partition_in(F, _require(inputs, "mu", "inputs"), "mu")
    return check_th81(F, mu, dual=bool(inputs.get("dual", False)))


def _cor83(inputs: dict) -> Certificate:
    F = _v(inputs, "F")
    return check_cor83(F, _partition_in(F, _require(inputs, "mu", "inputs"), "mu"))


def run_check(criterion: str, inputs: Any) -> Certificate:
    if criterion not in CHECKS:
        raise ValueError(f"unknown criterion {criterion!r}; expected one of {sorted(CHECKS)}")
    if not isinstance(inputs, dict):
        raise ValueError("inputs must be a JSON object")
    return CHECKS[criterion](inputs)
