"""Truncated q-series, theta-function dissections and partition congruences."""

from .catalog import CATALOG, FamilyParams, admissible_j, family_claims, regression_grid
from .claims import CongruenceClaim, ScanResult
from .coverage import kmj_cover_check, representable_check, uniqueness_check
from .dissection import disjointness_check, f_dissection, psi_dissection, support_classes
from .engine import SearchConfig, search_congruences, verify_claim, verify_claims
from .errors import HypothesisViolation, RegulusError, SpecParseError, TruncationBudgetExceeded
from .partitions import PartitionFunction, coefficients_at, exact_value, function_series
from .series import Series, make_series

__version__ = "0.1.0"
