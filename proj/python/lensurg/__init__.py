"""Python access to the lens space surgery classification core."""

import json
from fractions import Fraction

from ._core import (  # noqa: F401
    DomainError,
    associated_relation,
    check_alternating,
    check_pos,
    d_lens,
    dual_class,
    genus,
    grid_ascii,
    match_all,
    table_csv,
    torsion_sequence,
    underline_involution,
    verify,
)
from . import _core


def delta(p, k, route="phi"):
    """Symmetrized Alexander coefficients as {exponent: Fraction}."""
    raw = _core._delta_json(p, k) if route == "phi" else _core._delta_torus_json(p, k)
    data = json.loads(raw)
    return {e: Fraction(num, den) for e, num, den in data["coeffs"]}


def decompose(p, k1):
    return json.loads(_core._decompose_json(p, k1))


def classify(p, k):
    return json.loads(_core._classify_json(p, k))


def enumerate_classes(p_max, filters="", threads=0):
    text = _core._enumerate_jsonl(p_max, filters, threads)
    return [json.loads(line) for line in text.splitlines() if line]
