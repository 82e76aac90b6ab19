"""Exact checks for determinantal ideals and Rees/symmetric algebra presentations.

Every function accepts the same matrix-spec document the ``rees-check`` CLI
reads from ``--input`` files::

    {"characteristic": 32003, "vars": ["x", "y"],
     "matrix": [["x", "y", "0"], ["0", "x", "y"]], "label": "optional"}

Specs may be passed as a dict or a JSON string; reports come back as parsed
JSON objects.
"""

import json as _json

from ._core import (
    InputError,
    TimeoutError,
    strand_ranks,
)
from . import _core as __core


def _spec_text(spec):
    return spec if isinstance(spec, str) else _json.dumps(spec)


def check_theorem1(spec, jobs=1):
    """Report the equivalence between minor-ideal grades and the form grade."""
    return _json.loads(__core.check_theorem1(_spec_text(spec), jobs))


def check_theorem2(spec, jobs=1):
    """Report the linear-type equivalence for an m x (m+1) matrix."""
    return _json.loads(__core.check_theorem2(_spec_text(spec), jobs))


def grade_profile(spec, jobs=1):
    """List ``{"k": k, "grade": str}`` for every minor ideal I_k(M)."""
    return _json.loads(__core.grade_profile(_spec_text(spec), jobs))


def rees_generators(spec):
    """Reduced generating set of the Rees kernel, as polynomial strings."""
    return __core.rees_generators(_spec_text(spec))


def koszul_strand(spec, degree):
    """Boundary matrices of one graded strand, with basis labels."""
    return _json.loads(__core.koszul_strand(_spec_text(spec), degree))


def resolve_power(spec, r, jobs=1):
    """Certified free resolution of the r-th power of the maximal-minor ideal."""
    return _json.loads(__core.resolve_power(_spec_text(spec), r, jobs))


def groebner_basis(spec, gens, order="grevlex"):
    """Reduced Groebner basis of ``gens`` in the spec's base ring."""
    return __core.groebner_basis(_spec_text(spec), list(gens), order)


__all__ = [
    "InputError",
    "TimeoutError",
    "check_theorem1",
    "check_theorem2",
    "grade_profile",
    "groebner_basis",
    "koszul_strand",
    "rees_generators",
    "resolve_power",
    "strand_ranks",
]
