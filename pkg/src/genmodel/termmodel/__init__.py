"""Term models of maximal sets of literals, their verification and the ⋁⋀ counterexample."""
from .errors import TermModelError, NotMaximal, IllFormed, MissingConjunct
from .model import (
    Defect, WelldefinedReport, TermModel, build_term_model, verify_welldefined, equality_defects, congruence_defects,
)
from .verdict import Evidence, Verdict, verify_andor, conjunct_specs, density_truth
from .counterexample import Refutation, CounterexampleReport, refute_oror, oror_signature, oror_disjunct

__all__ = [
    'TermModelError', 'NotMaximal', 'IllFormed', 'MissingConjunct',
    'Defect', 'WelldefinedReport', 'TermModel', 'build_term_model', 'verify_welldefined', 'equality_defects',
    'congruence_defects',
    'Evidence', 'Verdict', 'verify_andor', 'conjunct_specs', 'density_truth',
    'Refutation', 'CounterexampleReport', 'refute_oror', 'oror_signature', 'oror_disjunct',
]
