"""Exact checkers for Pareto axioms and utilitarian representations of
incomplete expected-utility preferences over lotteries.

Every function accepts documents as dicts or JSON text and returns plain
dicts; rationals are encoded as integers or "p/q" strings, never floats.
"""

import json as _json

from paretocheck import _core

__all__ = [
    "aggregate",
    "check_axiom",
    "check_condition",
    "equiv",
    "no_conflict_pair",
    "normalize_set",
    "oracle",
    "verify_certificate",
]


def _text(document):
    if isinstance(document, str):
        return document
    return _json.dumps(document)


def check_axiom(profile, axiom):
    """Decide an axiom exactly; the report carries a verified witness pair
    when violated."""
    return _json.loads(_core.check_axiom_json(_text(profile), axiom))


def check_condition(profile, condition, strict=False):
    """Decide a representation condition: theorem1, pareto, prop1 (with
    optional strict open-cone mode), or prop2."""
    return _json.loads(
        _core.check_condition_json(_text(profile), condition, strict)
    )


def oracle(profile, axiom, denominator=5):
    """Extensional grid scan of every ordered lottery pair with
    denominator-D probabilities."""
    return _json.loads(_core.oracle_json(_text(profile), axiom, denominator))


def aggregate(agents, rule, weights=None):
    """Build a social set document by the minkowski or union-hull rule."""
    weights_text = "" if weights is None else _json.dumps(weights)
    return _json.loads(_core.aggregate_json(_text(agents), rule, weights_text))


def equiv(left, right):
    """Decide whether two set documents induce the same relation."""
    return _json.loads(_core.equiv_json(_text(left), _text(right)))


def normalize_set(set_document):
    """Canonicalize every vertex to mean zero and range one."""
    return _json.loads(_core.normalize_set_json(_text(set_document)))


def verify_certificate(profile, axiom, l, lp):
    """Re-verify one ordered lottery pair against the axiom's violation
    predicate; lotteries are lists of rationals."""
    return _core.verify_certificate_json(
        _text(profile), axiom, _json.dumps(l), _json.dumps(lp)
    )


def no_conflict_pair(profile):
    """First outcome pair unanimously strictly ranked by every individual
    utility, or None."""
    result = _json.loads(_core.no_conflict_pair_json(_text(profile)))
    return result["no_conflict_pair"]
