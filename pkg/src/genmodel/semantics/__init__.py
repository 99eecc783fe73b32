"""Finite multi-sorted structures, satisfaction, atomic diagrams, class enumeration and isomorphism search."""
from .errors import SemanticsError, StructureError, UnsupportedFormula
from .structure import (
    MultiStructure, SigmaNu, evaluate, atomic_sentences, realized_literals, holds_by_literals, parse_structure,
    render_structure,
)
from .enumeration import ClassSpec, enumerate_class, count_class
from .isomorphism import MultiMap, find_multisorted_iso, merge_sorts, merged_signature, distinguishing_sentence

__all__ = [
    'SemanticsError', 'StructureError', 'UnsupportedFormula',
    'MultiStructure', 'SigmaNu', 'evaluate', 'atomic_sentences', 'realized_literals', 'holds_by_literals',
    'parse_structure', 'render_structure',
    'ClassSpec', 'enumerate_class', 'count_class',
    'MultiMap', 'find_multisorted_iso', 'merge_sorts', 'merged_signature', 'distinguishing_sentence',
]
