"""Dihedral branched covers: signature defects of 3-colored knots and trisection data."""

from .covers import CoverError, build_cover, linking_block, linking_number
from .defect import (
    AnchorPath, DefectError, DefectReport, KernelSelection, Monodromy,
    assemble_kernel_matrix, compute_defect, cover_signature, monodromy,
    ribbon_obstruction_check, select_kernel_curves, signature, transfer_defects,
)
from .diagram import (
    DiagramCode, DiagramError, FoxColoring, determinant_from_form,
    enumerate_colorings, parse_diagram_code, validate_coloring,
)
from .seifert import (
    CharacteristicKnot, SeifertForm, find_characteristic_knots, self_linking,
    symmetrize, tristram_levine,
)

from .shadows import (
    BranchColoring, ShadowError, ShadowWord, TorusCurveClass, identify_genus_one,
    lift_shadow_word, meridian_status, parse_shadow_word,
)
from .trisect import (
    EulerData, TrisectionError, TrisectionParams, euler_char_cover,
    lift_trisection_params, validate_triplane,
)

__version__ = "0.1.0"
