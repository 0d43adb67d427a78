"""Finite L-algebras: verification, classification and enumeration."""

from .core import (
    ShapeError,
    Table,
    VerifyReport,
    apply_perm,
    are_isomorphic,
    as_table,
    automorphism_group,
    canonical_form,
    dense_elements,
    is_discrete,
    is_l_algebra,
    is_linear,
    is_regular,
    is_semiregular,
    natural_order,
    smallest_invariant,
    verify_hilbert,
    verify_l_algebra,
    wedge_dot,
)
from .db import db_count, db_dedup, db_filter, parse, parse_record, serialize
from .linear import bell, decompose_linear, enumerate_linear, extend_linear
from .posets import enumerate_posets, is_diamond, poset_automorphisms
from .rmatrices import enumerate_rmatrices
from .search import (
    SearchCase,
    enumerate_class,
    enumerate_diamond,
    enumerate_discrete,
    enumerate_general,
    enumerate_on_poset,
    search_cases,
)
from .semilattices import (
    ClosureMap,
    enumerate_3approx,
    has_restricted_semimodularity,
    verify_closure,
)
from .young import (
    enumerate_young,
    lalgebra_to_young,
    young_canonical,
    young_to_lalgebra,
)

__version__ = "0.1.0"
