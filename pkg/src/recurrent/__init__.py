"""Integers whose small divisors follow an integer recurrence of order at most two."""

__version__ = "0.1.0"

from .arithmetic import DivisorProfile, Factorization, divisor_profile, factorize, is_prime
from .classifier import Category, Classification, Mode, Tag, classify, is_recurrent_fast
from .enumerator import generate_families, read_bfile, reconcile, sweep, write_bfile
from .errors import DomainError, ParseError, RecurrentError, ResourceError
from .oracle import OracleVerdict, is_recurrent
from .recfit import AffineSolutionSet, LinearEquation, closed_form_d, fit_order2, intersect, solve_line

__all__ = [
    "AffineSolutionSet", "Category", "Classification", "DivisorProfile", "DomainError",
    "Factorization", "LinearEquation", "Mode", "OracleVerdict", "ParseError", "RecurrentError",
    "ResourceError", "Tag", "classify", "closed_form_d", "divisor_profile", "factorize",
    "fit_order2", "generate_families", "intersect", "is_prime", "is_recurrent",
    "is_recurrent_fast", "read_bfile", "reconcile", "solve_line", "sweep", "write_bfile",
]
