"""Intersection subgroup graphs of finite groups and certified graph-class recognition."""
from .classes import CLASS_NAMES, ClassCertificate, classify, verify_certificate
from .graphs import (
    SimpleGraph,
    complement,
    cyclic_intersection_graph,
    induced_subgraph,
    intersection_subgroup_graph,
    z_fragment_graph,
)
from .groups import GroupTable, build_group, parse_spec
from .lattice import SubgroupLattice, enumerate_subgroups, structural_profile

__version__ = "0.1.0"

__all__ = [
    "CLASS_NAMES",
    "ClassCertificate",
    "GroupTable",
    "SimpleGraph",
    "SubgroupLattice",
    "build_group",
    "classify",
    "complement",
    "cyclic_intersection_graph",
    "enumerate_subgroups",
    "induced_subgraph",
    "intersection_subgroup_graph",
    "parse_spec",
    "structural_profile",
    "verify_certificate",
    "z_fragment_graph",
]
