"""Exact pseudocentre computations for finite permutation groups.

The pseudocentre of a group is the intersection of the normal closures of
the centralizers of its elements; it always contains the centre.  This
package computes it exactly for explicit finite permutation groups, along
with the ascending series it generates, and ships a corpus of named checks
covering symmetric and alternating groups, wreath products with cyclic
base, linear and affine groups over prime fields, unitriangular groups,
and the supporting Fibonacci/Chebyshev integer identities.
"""

from .errors import (
    CapacityExceeded,
    DegreeMismatch,
    InvalidParameter,
    NotAMember,
    NotNormal,
    PgtError,
)
from .perms import Permutation, commutator_elem, compose, conjugate, identity, inverse
from .groups import PermGroup, SubgroupSet
from .pseudo import (
    PseudoReport,
    PseudoSeries,
    is_pseudocentral,
    pseudo_report,
    pseudocentre,
    pseudocentre_naive,
    pseudonilpotent_class,
    upper_pseudocentral_series,
)
from .specdsl import SpecError, SpecSemanticError, SpecSyntaxError, build, parse_spec, render

__version__ = "0.1.0"

__all__ = [
    "CapacityExceeded",
    "DegreeMismatch",
    "InvalidParameter",
    "NotAMember",
    "NotNormal",
    "Permutation",
    "PermGroup",
    "PgtError",
    "PseudoReport",
    "PseudoSeries",
    "SpecError",
    "SpecSemanticError",
    "SpecSyntaxError",
    "SubgroupSet",
    "build",
    "commutator_elem",
    "compose",
    "conjugate",
    "identity",
    "inverse",
    "is_pseudocentral",
    "parse_spec",
    "pseudo_report",
    "pseudocentre",
    "pseudocentre_naive",
    "pseudonilpotent_class",
    "render",
    "upper_pseudocentral_series",
    "__version__",
]
