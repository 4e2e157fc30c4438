"""Shapes of Hamiltonian paths and cycles on regularly spaced points, up to symmetry."""

from .burnside import OrbitReport, burnside_count, canonical_rep, enumerate_classes, fixed_count_scan
from .errors import HamorbitError
from .formulas import class_count, component_sums, double_factorial, euler_phi, prime_class_count, totient_sum
from .groups import (
    EquivKind,
    GraphKind,
    GroupElement,
    Mode,
    ShapeKey,
    apply,
    compose,
    elements,
    equivalent_shapes,
    shape_key,
    similar_shapes,
    transform_shape,
)
from .perms import PermString, all_strings, strings_with_prefix, validate
from .render import layout, render_gallery, render_shape

__version__ = "0.1.0"
