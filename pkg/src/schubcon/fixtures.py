"""Closed-form class data for the two classical non-connected examples."""

from __future__ import annotations

from .connectivity import VarietyData
from .partitions import Box, BoxedPartition
from .schubert_ring import BiSchubertClass, SchubertClass, sub_grassmannian_class


def hansen_harris(n: int, d: int) -> tuple[VarietyData, VarietyData]:
    """Image of the incidence variety over a smooth conic, and G(d, H) for a hyperplane H.

    [f(X)] = 2 sigma_(n-d-1); [Y] = sigma_(1,...,1) with d+1 ones, the class of G(d, H).
    The preimage of Y is disconnected when d < n-1.
    """
    if not 0 < d < n - 1:
        raise ValueError(f"need 0 < d < n-1, got n={n}, d={d}")
    box = Box.from_dn(d, n)
    fx = SchubertClass.basis(BoxedPartition.padded([box.w - 1], box), 2)
    return VarietyData(fx), VarietyData(sub_grassmannian_class(box, 1))


def quadric(d: int, r: int) -> tuple[VarietyData, VarietyData]:
    """d-planes on a smooth quadric in P^(d+2r), and a Schubert variety of planes meeting L in dim >= r-1.

    [X] = 2^(d+1) sigma_(d+1,d,...,1); [Y] = sigma_(r,...,r) with r parts.
    """
    if not (d > 0 and d + 2 <= 2 * r and r <= d + 1):
        raise ValueError(f"need d > 0 and d/2 + 1 <= r <= d + 1, got d={d}, r={r}")
    box = Box(d, 2 * r)
    x = SchubertClass.basis(BoxedPartition(tuple(range(d + 1, 0, -1)), box), 2 ** (d + 1))
    y = SchubertClass.basis(BoxedPartition.padded([r] * r, box))
    return VarietyData(x), VarietyData(y)


def product_variety(X: VarietyData, Y: VarietyData) -> VarietyData:
    """X x Y mapped to G x G factorwise."""
    return VarietyData(BiSchubertClass.external(X.cls, Y.cls))
