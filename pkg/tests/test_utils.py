import json
from fractions import Fraction

import pytest

from coopkit.algebra import Dyadic
from coopkit.config import Settings
from coopkit.utils import format_assignment, format_json, format_scalar, parse_fraction, setup_logging, validate_identifier
from coopkit.utils.metrics import metrics, track_duration


@pytest.mark.parametrize(
    "value, text",
    [(Fraction(3, 4), "3/4"), (Fraction(2), "2"), (Dyadic(3, 3), "3/8"), (5, "5")],
)
def test_format_scalar(value, text):
    assert format_scalar(value) == text


def test_format_assignment_sorts_names():
    assert format_assignment({"Q": Fraction(0), "P": Fraction(1, 2)}) == "P=1/2, Q=0"


def test_format_json_is_sorted_and_exact():
    text = format_json({"b": Fraction(1, 3), "a": frozenset({2, 1}), "c": (Dyadic(1, 1),)})
    assert list(json.loads(text)) == ["a", "b", "c"]
    assert json.loads(text)["a"] == [1, 2]
    assert json.loads(text)["b"] == "1/3"
    assert json.loads(text)["c"] == ["1/2"]


@pytest.mark.parametrize(
    "text, value",
    [("3/4", Fraction(3, 4)), (" -2 ", Fraction(-2)), ("1 / 8", Fraction(1, 8)), ("1/0", None), ("x", None), (7, Fraction(7))],
)
def test_parse_fraction(text, value):
    assert parse_fraction(text) == value


def test_identifiers():
    assert validate_identifier("P1_a")
    assert not validate_identifier("1P")
    assert not validate_identifier("")


def test_settings_read_the_environment(monkeypatch):
    monkeypatch.setenv("COOPKIT_SAMPLE_COUNT", "250")
    monkeypatch.setenv("COOPKIT_DEFAULT_FORMAT", "json")
    loaded = Settings(_env_file=None)
    assert loaded.SAMPLE_COUNT == 250
    assert loaded.DEFAULT_FORMAT == "json"
    assert loaded.enumeration_bound == min(loaded.ENUMERATION_MAX_SIZE, loaded.ENUMERATION_HARD_LIMIT)


def test_settings_reject_bad_values(monkeypatch):
    monkeypatch.setenv("COOPKIT_DEFAULT_FORMAT", "yaml")
    with pytest.raises(ValueError):
        Settings(_env_file=None)


def test_log_file_and_error_file(tmp_path):
    log_file = tmp_path / "coopkit.log"
    logger = setup_logging("DEBUG", str(log_file))
    logger.error("boom")
    logger.remove()
    assert "boom" in log_file.read_text()
    assert "boom" in (tmp_path / "coopkit.errors.log").read_text()
    setup_logging("WARNING", "")


def test_track_duration_counts_errors():
    @track_duration("exploding", "tests")
    def explode():
        raise KeyError("x")

    with pytest.raises(KeyError):
        explode()
    text = metrics.get_metrics()
    assert 'coopkit_errors_total{error_type="KeyError",component="tests"}' in text
    assert 'operation="exploding"' in text
