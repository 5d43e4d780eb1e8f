"""Spectral pairs and the Hertling defect of plane curve singularities, exactly.

Inputs are diagrams (dicts with vertices/edges/arrows), polygons (a list of
[p, q, k] faces, or {"faces": ...} / {"vertices": ...}) or chain strings such
as "(1,2)[1,1]-(3,1)[1]".  Rational outputs are fractions.Fraction.
"""

import json
from collections import Counter
from fractions import Fraction

from . import _core
from ._core import InconsistencyError, ValidationError

__all__ = [
    "InconsistencyError",
    "ValidationError",
    "brieskorn_spectrum",
    "cli",
    "decompose",
    "global_defect",
    "hertling",
    "lattice_spectrum",
    "max_spectral",
    "milnor_number",
    "naive_defect",
    "random_diagram",
    "random_polygon",
    "spectral_pairs",
    "spectrum",
    "to_diagram",
]


def _text(obj):
    return json.dumps(obj)


def _bag(rows):
    return Counter({Fraction(a): c for a, c in rows})


def spectrum(obj):
    """Spectrum as a Counter {Fraction: multiplicity}."""
    return _bag(_core.spectrum(_text(obj)))


def spectral_pairs(obj):
    """Spectral pairs as a Counter {(Fraction, weight): multiplicity}."""
    return Counter({(Fraction(a), w): c for a, w, c in _core.spectral_pairs(_text(obj))})


def milnor_number(obj):
    return _core.milnor_number(_text(obj))


def max_spectral(obj):
    """(alpha_max, name of the vertex the walk stopped at)."""
    a, name = _core.max_spectral(_text(obj))
    return Fraction(a), name


def _fractions(report):
    for key in ("defect", "direct_defect", "S", "alpha_max", "alpha_min", "variance", "bound"):
        report[key] = Fraction(report[key])
    for t in report["edge_terms"]:
        t["E"] = Fraction(t["E"])
        if "C" in t:
            t["C"] = Fraction(t["C"])
    return report


def global_defect(obj):
    return _fractions(json.loads(_core.global_defect(_text(obj))))


def hertling(obj):
    return _fractions(json.loads(_core.hertling(_text(obj))))


def decompose(obj):
    """List of (coefficient, faces)."""
    return [(t["coef"], [tuple(f) for f in t["faces"]]) for t in json.loads(_core.decompose(_text(obj)))]


def naive_defect(obj):
    return Fraction(_core.naive_defect(_text(obj)))


def brieskorn_spectrum(p, q):
    return _bag(_core.brieskorn_spectrum(p, q))


def lattice_spectrum(polygon):
    return _bag(_core.lattice_spectrum(_text(polygon)))


def to_diagram(polygon):
    return json.loads(_core.to_diagram(_text(polygon)))


def random_diagram(seed, depth):
    return json.loads(_core.random_diagram(seed, depth))


def random_polygon(seed, max_faces=4, max_entry=6):
    return json.loads(_core.random_polygon(seed, max_faces, max_entry))["faces"]


def cli(*args):
    """Run the command line in process; returns (exit code, stdout, stderr)."""
    return _core.cli([str(a) for a in args])
