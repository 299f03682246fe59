"""Crystals of symmetrizable Kac-Moody algebras modelled by rigged configurations."""

from .cartan import (
    CartanMatrix,
    Symmetrizer,
    Weight,
    fundamental_coordinates,
    named,
    pairing,
    parse_cartan,
    positive_roots,
    symmetrize,
    validate,
    weyl_dimension,
)
from .explorer import CrystalGraph, export_dot, export_json, generate, isomorphic, parse_json
from .folding import (
    FoldedDiagram,
    build_folding,
    check_virtualization,
    devirtualize,
    is_in_virtual_image,
    root_embed,
    verify_folding,
    virtual_e,
    virtual_f,
    virtualize,
    weight_embed,
)
from .rigged import RiggedConfiguration, RiggedPartition, RiggedString
from .tensor import Decomposition, TensorElement, highest_weight_scan, lr_decompose

__version__ = "0.1.0"
