"""Monogenicity of even sextics: Python bindings for the evenmono library."""

import json

from . import _evenmono
from ._evenmono import EvenmonoError

__all__ = [
    "EvenmonoError",
    "analyze",
    "classify",
    "d6_shape",
    "discriminant",
    "factorize",
    "is_irreducible",
    "is_monogenic",
    "parse_poly",
    "real_cyclotomic_minpoly",
    "search",
    "shifted_variant",
    "verify",
]


def _strs(coeffs):
    return [str(int(c)) for c in coeffs]


def _ints(coeffs):
    return [int(c) for c in coeffs]


def parse_poly(text):
    """Ascending integer coefficients of a polynomial expression."""
    return _ints(_evenmono.parse_poly(text))


def analyze(text, cross_check=200):
    """Full report for one polynomial, as a dict with the JSONL schema."""
    return json.loads(_evenmono.analyze_jsonl(text, cross_check))


def discriminant(coeffs):
    return int(_evenmono.discriminant(_strs(coeffs)))


def is_irreducible(coeffs):
    return _evenmono.is_irreducible(_strs(coeffs))


def is_monogenic(coeffs):
    """(status, failing_prime or None) for a monic integer polynomial."""
    status, prime = _evenmono.is_monogenic(_strs(coeffs))
    return status, None if prime is None else int(prime)


def factorize(n):
    """(sign, [(p, e), ...], cofactor)."""
    sign, factors, cofactor = _evenmono.factorize(str(int(n)))
    return sign, [(int(p), e) for p, e in factors], int(cofactor)


def classify(a, b, c, cross_check=0):
    """(group, certainty) of x^6 + a x^4 + b x^2 + c."""
    return _evenmono.classify(str(a), str(b), str(c), cross_check)


def d6_shape(a, b, c):
    return [tuple(int(v) for v in p) for p in _evenmono.d6_shape(str(a), str(b), str(c))]


def real_cyclotomic_minpoly(d):
    return _ints(_evenmono.real_cyclotomic_minpoly(d))


def shifted_variant(h, t, negate=False):
    return _ints(_evenmono.shifted_variant(_strs(h), t, negate))


def search(mode, bounds, filters=(), jobs=1):
    """Records of a box search (bounds a, b, c) or shape search (bounds m, n, c)."""
    text = _evenmono.search_jsonl(mode, list(bounds), list(filters), jobs)
    return [json.loads(line) for line in text.splitlines()]


def verify(name, **kwargs):
    """Run one of thm1.1, lem1.2, thm4.1, lem4.2; returns a dict with 'passed'."""
    if name == "thm1.1":
        return _evenmono.verify_thm_1_1(kwargs.get("bound", 60), kwargs.get("jobs", 1))
    if name == "lem1.2":
        return _evenmono.verify_lem_1_2(kwargs.get("frobenius_primes", 500))
    if name == "thm4.1":
        return _evenmono.verify_thm_4_1(kwargs.get("max_b", 500))
    if name == "lem4.2":
        return _evenmono.verify_lem_4_2(kwargs.get("bound", 40), kwargs.get("quintic_bound", 6), kwargs.get("jobs", 1))
    raise EvenmonoError(f"unknown verification: {name}")
