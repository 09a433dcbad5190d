"""Descent-cycling workbench for GL_n Schubert problems.

Permutation combinatorics, an exact Schubert-polynomial oracle built from
divided-difference operators, the descent-cycling move system with replayable
certificates, full enumeration and component analysis of the Schubert-problem
graph, Monk-rule evaluation with constructive move proofs, and exact witness
flag reconstruction.
"""

from descyc.perm import (
    bruhat_leq,
    code,
    code_to_perm,
    covered_by_list,
    descent_set,
    identity,
    is_grassmannian,
    length,
    long_element,
    parse_perm,
    right_mult_s,
    w0_complement,
)
from descyc.poly import Poly, YPoly, divided_difference
from descyc.problems import (
    DcMove,
    DcPath,
    SchubertProblem,
    apply_move,
    bruhat_vanishing_check,
    dc_path,
    is_dc_trivial,
    legal_moves,
    stabilize,
)
from descyc.schubert import (
    equivariant_dc_check,
    expand_in_schubert_basis,
    schubert_polynomial,
    structure_constant,
    symmetric_number,
)

__version__ = "0.1.0"

__all__ = [
    "bruhat_leq", "code", "code_to_perm", "covered_by_list", "descent_set",
    "identity", "is_grassmannian", "length", "long_element", "parse_perm",
    "right_mult_s", "w0_complement",
    "Poly", "YPoly", "divided_difference",
    "DcMove", "DcPath", "SchubertProblem", "apply_move",
    "bruhat_vanishing_check", "dc_path", "is_dc_trivial", "legal_moves",
    "stabilize",
    "equivariant_dc_check", "expand_in_schubert_basis", "schubert_polynomial",
    "structure_constant", "symmetric_number",
]
