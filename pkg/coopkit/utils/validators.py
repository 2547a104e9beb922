import re
from fractions import Fraction
from typing import Optional, Union

IDENTIFIER_PATTERN = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')
FRACTION_PATTERN = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$')


def validate_identifier(name: str) -> bool:
    """Validate a propositional variable name"""
    return isinstance(name, str) and bool(IDENTIFIER_PATTERN.match(name))


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def validate_dyadic(value: Fraction) -> bool:
    """Check that a rational has a power-of-two denominator"""
    return is_power_of_two(Fraction(value).denominator)


def parse_fraction(text: Union[str, int, Fraction]) -> Optional[Fraction]:
    """Parse '3/4', '-2' or an int into a Fraction; None when malformed"""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        return None
    match = FRACTION_PATTERN.match(text)
    if not match:
        return None
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        return None
    return Fraction(int(numerator), int(denominator or 1))


def validate_table(table, size: int) -> bool:
    """Validate a size x size operation table over 0..size-1"""
    if not isinstance(table, list) or len(table) != size:
        return False
    for row in table:
        if not isinstance(row, list) or len(row) != size:
            return False
        if not all(isinstance(v, int) and 0 <= v < size for v in row):
            return False
    return True
