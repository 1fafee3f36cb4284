"""Pointed Hopf algebras U(D) attached to generic data of finite Cartan type."""

from .datum import (
    GenericDatum,
    InvalidDatum,
    ValidationReport,
    a1_datum,
    a1xa1_datum,
    a2_datum,
    b2_datum,
    normalize_linking,
    permute_datum,
    uqsl2_datum,
    validate_datum,
)
from .pbw import CompletionDiverged, PBWElement, RewriteSystem, UnsupportedType, build_rewrite_system, format_pbw
