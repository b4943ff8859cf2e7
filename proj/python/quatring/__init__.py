"""Ringset decision procedures over the Lipschitz and Hurwitz quaternion orders.

Thin wrappers over the compiled core: set payloads are strings of
comma-separated quaternion literals ("i,-i" or "(1+i+j+k)/2"), and results
come back as plain dicts mirroring the CLI's --json output.
"""

import json as _json

from ._core import (
    check_prop56,
    classify_json,
    enumerate_json,
    gamma_json,
    oracle_json,
    reduce_json,
    separator_json,
    tn_example_str,
)

__all__ = [
    "classify",
    "oracle",
    "reduce",
    "gamma",
    "separator",
    "enumerate_class",
    "tn_example",
    "check_prop56",
]


def classify(payload, ring="L"):
    """Decide the ringset property; returns the full verdict dict."""
    return _json.loads(classify_json(payload, ring))


def oracle(payload, ring="L", gamma_cap=16):
    """Decide by brute force over cosets; independent of classify()."""
    return _json.loads(oracle_json(payload, ring, gamma_cap))


def reduce(payload, ring="L"):
    """Write a single-class set as a + n*T with T reduced."""
    return _json.loads(reduce_json(payload, ring))


def gamma(payload, ring="L"):
    """Difference gcd of the set plus a certifying integer combination."""
    return _json.loads(gamma_json(payload, ring))


def separator(payload_s, payload_t, ring="L"):
    """Central polynomial vanishing on the first set and 1 on the second."""
    return _json.loads(separator_json(payload_s, payload_t, ring))


def enumerate_class(ring="L", root=None, trace=None, norm=None):
    """All order elements sharing one minimal polynomial."""
    return _json.loads(enumerate_json(ring, root, trace, norm))


def tn_example(n):
    """The block T_n of the infinite ringset family, as literal strings."""
    return [tok.strip() for tok in tn_example_str(n).split(",")]
