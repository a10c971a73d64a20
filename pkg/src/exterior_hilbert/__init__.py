"""Hilbert series of exterior algebras modulo a principal ideal (f)."""

from .bounds import BoundReport, equality_diagnostic, lower_bound
from .certificates import cyclic_form, h_form, verify_certificate, vinberg_forms
from .fields import DEFAULT_PRIME, GF, QQ, FieldScalar, PrimeField, RationalField
from .forms import ExteriorForm, format_form, parse_form
from .maps import Basis, MiddleClass, build_matrix, kernel_basis, middle_map_class, rank
from .sampler import TrialConfig, random_form, scan, verify_minimal
from .series import (ann_mod_ideal_hf, even_minimal_series, hilbert_series_ann_quotient,
                     hilbert_series_quotient, truncate_positive)

__version__ = "0.1.0"
