"""Schubert calculus on Grassmannians, Kunneth classes on products of projective spaces, and
certificate checkers for connectedness hypotheses stated in terms of those classes."""

from .certificate import Certificate, InconsistentData
from .kunneth_ring import MultiProjClass, ProductSpace
from .partitions import Box, BoxedPartition, parse_box, parse_partition
from .schubert_ring import BiSchubertClass, SchubertClass, multiply

__all__ = [
    "BiSchubertClass",
    "Box",
    "BoxedPartition",
    "Certificate",
    "InconsistentData",
    "MultiProjClass",
    "ProductSpace",
    "SchubertClass",
    "multiply",
    "parse_box",
    "parse_partition",
]
