"""Modified continuants of index tuples.

K(k_1, ..., k_r) is the tridiagonal determinant with k_1..k_r on the
diagonal and -1 on both off-diagonals.  It satisfies the two-term
recurrence

    K_{-1} = 0,  K_0 = 1,  K_i = k_i * K_{i-1} - K_{i-2},

which is how everything here computes it.  Unlike classical continuants
(`+` in the recurrence) these can vanish or go negative; they track how
denominators of consecutive Farey fractions propagate, so all arithmetic
is arbitrary precision.

Besides the recurrence this module carries a registry of closed forms
for structured tuples (plateaus of 2s, alternating 4,1 / 1,4 runs, and
their decorated combinations), each keyed by its template string.
"""

from __future__ import annotations

from .tuples import TupleSpec, as_indices


def continuant(t) -> int:
    """K_r of the tuple; the empty tuple gives K_0 = 1."""
    p_prev, p = 0, 1
    for k in as_indices(t):
        p_prev, p = p, k * p - p_prev
    return p


def continuant_pair(t) -> tuple[int, int]:
    """(K_r of the tuple, K_{r-1} of its length-(r-1) prefix).

    Requires r >= 1; one pass over the tuple instead of two.
    """
    ks = as_indices(t)
    if not ks:
        raise ValueError("continuant_pair needs a non-empty tuple")
    p_prev, p = 0, 1
    for k in ks:
        p_prev, p = p, k * p - p_prev
    return p, p_prev


def continuant_prefixes(t) -> list[int]:
    """[K_0, K_1, ..., K_r] over the prefixes of the tuple."""
    out = [1]
    p_prev, p = 0, 1
    for k in as_indices(t):
        p_prev, p = p, k * p - p_prev
        out.append(p)
    return out


# ---------------------------------------------------------------------------
# Closed-form families.
#
# Each entry maps a template string to (parameter names, expansion, value).
# Parameters: a, b, c are free index values; m, n are repeat counts >= 0.
# The registry is exercised against the recurrence over a full parameter
# grid in the test suite.
# ---------------------------------------------------------------------------

def _family(params, expand, value):
    return {"params": tuple(params), "expand": expand, "value": value}


CLOSED_FORMS: dict[str, dict] = {
    "2^n": _family(
        "n",
        lambda n: (2,) * n,
        lambda n: n + 1),
    "a,2^n": _family(
        "an",
        lambda a, n: (a,) + (2,) * n,
        lambda a, n: (a - 1) * n + a),
    "2^n,a": _family(
        "an",
        lambda a, n: (2,) * n + (a,),
        lambda a, n: (a - 1) * n + a),
    "a,2^n,b": _family(
        "abn",
        lambda a, b, n: (a,) + (2,) * n + (b,),
        lambda a, b, n: (a - 1) * (b - 1) * n + a * b - 1),
    "2^n,b,c": _family(
        "bcn",
        lambda b, c, n: (2,) * n + (b, c),
        lambda b, c, n: (b * c - c - 1) * n + b * c - 1),
    "a,2^n,b,c": _family(
        "abcn",
        lambda a, b, c, n: (a,) + (2,) * n + (b, c),
        lambda a, b, c, n: (a - 1) * (b * c - c - 1) * n + a * b * c - a - c),
    "(4,1)^n": _family(
        "n",
        lambda n: (4, 1) * n,
        lambda n: 2 * n + 1),
    "a,(4,1)^n": _family(
        "an",
        lambda a, n: (a,) + (4, 1) * n,
        lambda a, n: (2 * a - 1) * n + a),
    "a,(1,4)^n": _family(
        "an",
        lambda a, n: (a,) + (1, 4) * n,
        lambda a, n: 2 * (a - 2) * n + a),
    "(4,1)^n,b": _family(
        "bn",
        lambda b, n: (4, 1) * n + (b,),
        lambda b, n: 2 * (b - 2) * n + b),
    "(1,4)^n,b": _family(
        "bn",
        lambda b, n: (1, 4) * n + (b,),
        lambda b, n: (2 * b - 1) * n + b),
    "a,(4,1)^n,b": _family(
        "abn",
        lambda a, b, n: (a,) + (4, 1) * n + (b,),
        lambda a, b, n: (2 * a - 1) * (b - 2) * n + a * b - 1),
    "a,(1,4)^n,b": _family(
        "abn",
        lambda a, b, n: (a,) + (1, 4) * n + (b,),
        lambda a, b, n: (a - 2) * (2 * b - 1) * n + a * b - 1),
    "(4,1)^n,b,c": _family(
        "bcn",
        lambda b, c, n: (4, 1) * n + (b, c),
        lambda b, c, n: 2 * (b * c - 2 * c - 1) * n + b * c - 1),
    "a,(4,1)^n,b,c": _family(
        "abcn",
        lambda a, b, c, n: (a,) + (4, 1) * n + (b, c),
        lambda a, b, c, n: (2 * a - 1) * (b * c - 2 * c - 1) * n + a * b * c - a - c),
    "(4,1)^n,3,2^m": _family(
        "mn",
        lambda m, n: (4, 1) * n + (3,) + (2,) * m,
        lambda m, n: 2 * (m + n + 1) + 1),
    "a,(4,1)^n,3,2^m": _family(
        "amn",
        lambda a, m, n: (a,) + (4, 1) * n + (3,) + (2,) * m,
        lambda a, m, n: (2 * a - 1) * (m + n + 1) + a),
    "(4,1)^n,3,2^m,c": _family(
        "cmn",
        lambda c, m, n: (4, 1) * n + (3,) + (2,) * m + (c,),
        lambda c, m, n: 2 * (c - 1) * (m + n + 1) + c + 1),
    "a,(4,1)^n,3,2^m,c": _family(
        "acmn",
        lambda a, c, m, n: (a,) + (4, 1) * n + (3,) + (2,) * m + (c,),
        lambda a, c, m, n: (2 * a - 1) * (c - 1) * (m + n + 1) + a * c + a - 1),
    "(1,4)^n,1,3,2^m": _family(
        "mn",
        lambda m, n: (1, 4) * n + (1, 3) + (2,) * m,
        lambda m, n: m + n + 2),
    "a,(1,4)^n,1,3": _family(
        "an",
        lambda a, n: (a,) + (1, 4) * n + (1, 3),
        lambda a, n: (a - 2) * n + 2 * a - 3),
    "(1,4)^n,1,3,2^m,c": _family(
        "cmn",
        lambda c, m, n: (1, 4) * n + (1, 3) + (2,) * m + (c,),
        lambda c, m, n: (c - 1) * (m + n + 1) + c),
    "a,(1,4)^n,1,3,2^m,c": _family(
        "acmn",
        lambda a, c, m, n: (a,) + (1, 4) * n + (1, 3) + (2,) * m + (c,),
        lambda a, c, m, n: (a - 2) * (c - 1) * (m + n + 1) + a * c - c - 1),
    # the "one spike with 1s beside it, 2s elsewhere" shapes
    "2^m,1,a": _family(
        "am",
        lambda a, m: (2,) * m + (1, a),
        lambda a, m: a - m - 1),
    "2^m,1,a,1": _family(
        "am",
        lambda a, m: (2,) * m + (1, a, 1),
        lambda a, m: a - m - 2),
    "2^m,1,a,1,2^n": _family(
        "amn",
        lambda a, m, n: (2,) * m + (1, a, 1) + (2,) * n,
        lambda a, m, n: a - (m + n + 2)),
}

_PARAM_ORDER = "abcmn"


def closed_form_tuple(family: str, **params) -> TupleSpec:
    """The expanded tuple a closed-form family describes at these parameters."""
    spec = CLOSED_FORMS.get(family)
    if spec is None:
        raise ValueError(f"unknown closed-form family {family!r}; "
                         f"known: {', '.join(sorted(CLOSED_FORMS))}")
    _check_params(family, spec, params)
    args = [params[p] for p in spec["params"]]
    return TupleSpec.from_indices(spec["expand"](*args))


def closed_form(family: str, **params) -> int:
    """Evaluate a registered continuant closed form.

    ``closed_form("a,2^n", a=3, n=4)`` = 11, matching
    ``continuant((3, 2, 2, 2, 2))``.
    """
    spec = CLOSED_FORMS.get(family)
    if spec is None:
        raise ValueError(f"unknown closed-form family {family!r}; "
                         f"known: {', '.join(sorted(CLOSED_FORMS))}")
    _check_params(family, spec, params)
    args = [params[p] for p in spec["params"]]
    return spec["value"](*args)


def _check_params(family, spec, params):
    need = set(spec["params"])
    got = set(params)
    if need != got:
        raise ValueError(f"family {family!r} takes parameters "
                         f"{sorted(need, key=_PARAM_ORDER.index)}, got {sorted(got)}")
    for name in ("m", "n"):
        if name in params and params[name] < 0:
            raise ValueError(f"repeat count {name} must be >= 0")
    for name in ("a", "b", "c"):
        if name in params and params[name] < 1:
            raise ValueError(f"index value {name} must be >= 1")
