import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from symphom import chainalg, formats, symplin
from symphom.actions import ActionValue, parse_action, parse_rational
from symphom.config import RunConfig, Tolerances

DATA = __import__("pathlib").Path(__file__).resolve().parent.parent / "data"


# ------------------------------------------------------------ actions


@pytest.mark.parametrize(
    "text,coeff",
    [("3/2pi", Fraction(3, 2)), ("3/2*pi", Fraction(3, 2)), ("pi", 1), ("-pi", -1), ("0.9pi", Fraction(9, 10))],
)
def test_parse_exact(text, coeff):
    a = parse_action(text)
    assert a.exact and a.coeff == coeff


def test_parse_inexact_and_unbounded():
    a = parse_action("2.83")
    assert not a.exact and float(a) == 2.83
    assert parse_action("inf") is None and parse_action("-inf") is None
    with pytest.raises(ValueError):
        parse_action("3/2")
    with pytest.raises(ValueError):
        parse_rational("abc")


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_exact_order_and_arithmetic(p, q):
    a, b = ActionValue.pi(p), ActionValue.pi(q)
    assert (a < b) == (p < q) and (a == b) == (p == q)
    assert (a + b).coeff == p + q and (a - b).coeff == p - q
    assert parse_action(f"{p}*pi") == a


def test_mixed_comparison():
    assert ActionValue(real=3.0) < ActionValue.pi(1) < ActionValue(real=3.2)
    assert ActionValue.pi(1).to_json() == {"exact": True, "pi_coeff": "1", "decimal": pytest.approx(3.14159265)}


# ------------------------------------------------------------ config


def test_tolerances_positive():
    with pytest.raises(ValueError):
        Tolerances(cross=0.0)
    assert Tolerances().with_overrides(cross=0.1, ker=None).cross == 0.1


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(horizon=ActionValue.pi(0))
    with pytest.raises(ValueError):
        RunConfig(fmt="xml")


# ------------------------------------------------------------ files


def test_load_rotation_file():
    p, tol = formats.load_path(DATA / "rotation_3half.json")
    assert symplin.rs_index(p, tol).value == 3


def test_load_previous_left_factor():
    doc = {
        "dim_half": 1,
        "segments": [
            {"kind": "rotation", "rate": "1/2pi"},
            {"kind": "exp_const", "generator": [["1", "0"], ["0", "1"]], "left": "previous"},
        ],
    }
    p, tol = formats.load_path(doc)
    assert len(p.segments) == 2
    assert np.allclose(p(0.5), p.segments[0].matrix(1.0))


def test_load_sampled_segment():
    grid = np.linspace(0, 1, 401)
    mats = [symplin.rotation(1.5 * np.pi)(t).tolist() for t in grid]
    doc = {"dim_half": 1, "segments": [{"kind": "sampled", "grid": grid.tolist(), "matrices": mats}]}
    p, tol = formats.load_path(doc)
    assert symplin.cz_index(p, tol) == 3


def test_file_tolerances_override():
    doc = {"dim_half": 1, "segments": [{"kind": "rotation", "rate": "1"}], "tolerances": {"cross": "1e-6"}}
    _, tol = formats.load_path(doc)
    assert tol.cross == 1e-6 and tol.ker == Tolerances().ker


@pytest.mark.parametrize(
    "doc",
    [
        {"segments": []},
        {"dim_half": 0, "segments": [{"kind": "rotation", "rate": "1"}]},
        {"dim_half": 1, "segments": [{"kind": "spiral"}]},
        {"dim_half": 1, "segments": [{"kind": "rotation"}]},
        {"dim_half": 1, "segments": [{"kind": "exp_const", "generator": [[1, 0], [0, 1]], "left": "previous"}]},
        {"dim_half": 1, "segments": [{"kind": "rotation", "rate": "1"}], "tolerances": {"foo": 1}},
    ],
)
def test_bad_path_documents(doc):
    with pytest.raises(formats.FormatError):
        formats.load_path(doc)


def test_malformed_json():
    with pytest.raises(formats.FormatError):
        formats.load_path(DATA / "malformed.json")


def test_complex_round_trip():
    C = formats.load_complex(DATA / "interval.json")
    again = formats.load_complex(json.loads(json.dumps(formats.complex_to_json(C))))
    assert again.generators == C.generators and again.differential == C.differential
    assert chainalg.homology(C) == chainalg.HomologyTable.free({1: 1})


def test_morse_files():
    H = chainalg.morse_homology(formats.load_morse(DATA / "torus_morse.json"))
    assert H == chainalg.HomologyTable.free({0: 1, 1: 2, 2: 1})
    with pytest.raises(chainalg.ComplexError):
        formats.load_morse(DATA / "bad_morse.json")
