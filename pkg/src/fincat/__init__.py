"""Finite categories with hom-setoids: laws, adjunctions, limits, monoidal
structure, setoid constructions and a small description language."""
from .category import (
    Arrow,
    CompositionError,
    FinCategory,
    LawReport,
    StructuralError,
    Violation,
    check_category_laws,
    compose,
    equiv,
    op,
    product_category,
    slice_category,
    standard_category,
    structurally_equal,
)
from .transfor import FinFunctor, NatTrans, check_functor, check_natural, functor_category, kleisli_category
from .adjoint import Adjunction, check_adjunction, hom_iso_of_adjunction
from .limits import brute_force_limit, find_terminal, find_initial, limit_from_products_equalizers
from .monoidal import MonoidalStructure, check_monoidal, check_closed_monoidal
from .setoidcat import FinSetoid, yoneda_check

__version__ = "0.1.0"
