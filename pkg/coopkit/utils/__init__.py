from .logging import setup_logging
from .validators import validate_identifier, validate_dyadic, parse_fraction
from .formatters import format_scalar, format_assignment, format_json

__all__ = [
    'setup_logging',
    'validate_identifier',
    'validate_dyadic',
    'parse_fraction',
    'format_scalar',
    'format_assignment',
    'format_json',
]
