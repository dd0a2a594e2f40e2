"""First-order formulas over ``{+, *, 0, 1, <}`` and their bounded evaluation."""

from .catalog import AXIOMS, DEFINITIONS, EXTRAS, PA_MINUS, axiom_catalog, expand, lookup
from .evaluate import (
    Budget,
    StructureReport,
    TriBool,
    Verdict,
    certify,
    check_structure,
    eval_bounded,
    eval_term,
)
from .structures import (
    Structure,
    finite_naturals,
    get_structure,
    natural_numbers,
    parse_element,
    qz_cone,
    zx_cone,
)
from .syntax import parse, parse_term, pretty, pretty_term
