"""Exact limiting gap proportions.

The proportion nu(r; D, c0) of r-step gaps is assembled from the
degenerate sets of `enumeration`: a multiplicity factor times the sum of
the region areas, where the finite part contributes exact rationals and
each slot family contributes a residue-class tail of single-slice areas.
Those tails live in the vector space spanned by 1, pi/sqrt(3), ln 3 and
ln 2 over the rationals, so every supported value is carried exactly as a
`SymbolicValue` with four rational coefficients.

An independent closed-form route covers the same ground: a stored
symbolic list for small r, five-term rational blocks for modulus 3 from
r = 8 on, and a single rational formula for modulus 2 from r = 5 on.
Route agreement is a core test invariant, not an implementation detail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Optional, Tuple

from . import reference
from .enumeration import CongruenceSpec, DegenerateSet, degenerate_set, degenerate_table
from .geometry import single_slice_area

_ZERO = Fraction(0)


@dataclass(frozen=True)
class SymbolicValue:
    """An exact value q1 + qp*pi/sqrt(3) + q3*ln(3) + q2*ln(2)."""

    rational: Fraction = _ZERO
    pi_sqrt3: Fraction = _ZERO
    ln3: Fraction = _ZERO
    ln2: Fraction = _ZERO

    @property
    def is_rational(self) -> bool:
        return self.pi_sqrt3 == 0 and self.ln3 == 0 and self.ln2 == 0

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self.render()} is not rational")
        return self.rational

    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.rational, self.pi_sqrt3, self.ln3, self.ln2)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        return SymbolicValue(self.rational + o.rational,
                             self.pi_sqrt3 + o.pi_sqrt3,
                             self.ln3 + o.ln3,
                             self.ln2 + o.ln2)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        return SymbolicValue(self.rational - o.rational,
                             self.pi_sqrt3 - o.pi_sqrt3,
                             self.ln3 - o.ln3,
                             self.ln2 - o.ln2)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, scalar):
        if isinstance(scalar, SymbolicValue):
            raise TypeError("products of symbolic values leave the basis")
        s = Fraction(scalar)
        return SymbolicValue(self.rational * s, self.pi_sqrt3 * s,
                             self.ln3 * s, self.ln2 * s)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    # -- numerics ------------------------------------------------------------

    def approx(self) -> Tuple[Fraction, Fraction]:
        """(rational approximation, rigorous error bound)."""
        consts = _constants()
        val = (self.rational
               + self.pi_sqrt3 * consts["pi_sqrt3"]
               + self.ln3 * consts["ln3"]
               + self.ln2 * consts["ln2"])
        err = (abs(self.pi_sqrt3) + abs(self.ln3) + abs(self.ln2)) * _CONST_ERR
        return val, err

    def render(self) -> str:
        """Human-readable exact form, e.g. ``6 - 2*pi/sqrt(3) - 2*ln(3)``."""
        parts = []
        for coef, name in ((self.rational, None), (self.pi_sqrt3, "pi/sqrt(3)"),
                           (self.ln3, "ln(3)"), (self.ln2, "ln(2)")):
            if coef == 0:
                continue
            mag = abs(coef)
            if name is None:
                text = str(mag)
            elif mag == 1:
                text = name
            else:
                text = f"{mag}*{name}"
            parts.append(("- " if coef < 0 else "+ ") + text)
        if not parts:
            return "0"
        first = parts[0]
        out = ("-" + first[2:]) if first.startswith("- ") else first[2:]
        return " ".join([out] + parts[1:])

    def as_json(self) -> dict:
        return {
            "rational": str(self.rational),
            "pi_sqrt3": str(self.pi_sqrt3),
            "ln3": str(self.ln3),
            "ln2": str(self.ln2),
        }


def _coerce(x) -> SymbolicValue:
    if isinstance(x, SymbolicValue):
        return x
    return SymbolicValue(Fraction(x))


def symbolic(rational=0, pi_sqrt3=0, ln3=0, ln2=0) -> SymbolicValue:
    return SymbolicValue(Fraction(rational), Fraction(pi_sqrt3),
                         Fraction(ln3), Fraction(ln2))


# ---------------------------------------------------------------------------
# embedded constants with a startup series cross-check
# ---------------------------------------------------------------------------

#: The embedded 60-digit literals are truncations; treat them as accurate
#: to 58 digits when propagating error bounds.
_CONST_ERR = Fraction(1, 10 ** 58)

_CONSTANT_CACHE: Optional[Dict[str, Fraction]] = None


def _constants() -> Dict[str, Fraction]:
    global _CONSTANT_CACHE
    if _CONSTANT_CACHE is None:
        vals = {name: Fraction(text)
                for name, text in reference.CONSTANT_DIGITS.items()}
        _series_cross_check(vals)
        _CONSTANT_CACHE = vals
    return _CONSTANT_CACHE


def _series_cross_check(vals: Dict[str, Fraction]) -> None:
    """Recompute each constant from an independent series to >= 40 digits.

    Guards the embedded literals against transcription slips.  All three
    series have exact rational partial sums with elementary tail bounds.
    """
    tol = Fraction(1, 10 ** 40)

    # pi/sqrt(3) = 2 * arctan(1/sqrt(3)) * sqrt(3)/sqrt(3) form:
    # 2 * sum_{k>=0} (-1)^k / ((2k+1) 3^k); alternating, tail < next term
    s = _ZERO
    K = 95
    for k in range(K + 1):
        s += Fraction((-1) ** k, (2 * k + 1) * 3 ** k)
    s *= 2
    if abs(vals["pi_sqrt3"] - s) > tol + Fraction(2, (2 * K + 3) * 3 ** (K + 1)):
        raise RuntimeError("embedded pi/sqrt(3) literal fails the series check")

    # ln 3 = 2 artanh(1/2) = sum_{k>=0} 1/((2k+1) 4^k); tail < 4/(3(2K+3)4^(K+1))
    s = _ZERO
    K = 75
    for k in range(K + 1):
        s += Fraction(1, (2 * k + 1) * 4 ** k)
    if abs(vals["ln3"] - s) > tol + Fraction(4, 3 * (2 * K + 3) * 4 ** (K + 1)):
        raise RuntimeError("embedded ln(3) literal fails the series check")

    # ln 2 = 2 artanh(1/3) = (2/3) sum_{k>=0} 1/((2k+1) 9^k)
    s = _ZERO
    K = 55
    for k in range(K + 1):
        s += Fraction(1, (2 * k + 1) * 9 ** k)
    s *= Fraction(2, 3)
    tail = Fraction(2, 3) * Fraction(9, 8 * (2 * K + 3) * 9 ** (K + 1))
    if abs(vals["ln2"] - s) > tol + tail:
        raise RuntimeError("embedded ln(2) literal fails the series check")


# ---------------------------------------------------------------------------
# residue-class tails of single-slice areas
# ---------------------------------------------------------------------------

#: Full class sums sum_{k >= anchor, k ≡ anchor (mod d)} 4/(k(k+1)(k+2))
#: for every anchor in [2, d+1].  (3,5) is kept for readability; it equals
#: (3,2) minus the k=2 term.
_BASE_CLASS_SUMS: Dict[Tuple[int, int], SymbolicValue] = {
    (3, 2): symbolic(-2, 0, 2, 0),
    (3, 3): symbolic(3, -1, -1, 0),
    (3, 4): symbolic(Fraction(-2, 3), 1, -1, 0),
    (3, 5): symbolic(Fraction(-13, 6), 0, 2, 0),
    (2, 2): symbolic(3, 0, 0, -4),
    (2, 3): symbolic(Fraction(-8, 3), 0, 0, 4),
}


def tail_sum(d: int, a: int, k_min: int) -> SymbolicValue:
    """Sum of the single-slice areas over k >= k_min, k ≡ a (mod d).

    The k = 1 slice has area 1/6 (the split slice at the triangle's top);
    for every k >= 2 the slice area is 4/(k(k+1)(k+2)).  The result is the
    exact class-sum constant minus the rational partial sum below k_min.
    """
    if d not in (2, 3):
        raise ValueError(f"symbolic class tails support modulus 2 and 3, not {d}")
    if not 0 <= a < d:
        raise ValueError(f"residue {a} out of range for modulus {d}")
    if k_min < 1:
        raise ValueError("k_min must be >= 1")
    lo = max(k_min, 2)
    first = lo + ((a - lo) % d)
    anchor = 2 + ((first - 2) % d)
    val = _BASE_CLASS_SUMS[(d, anchor)]
    k = anchor
    while k < first:
        val = val - single_slice_area(k)
        k += d
    if k_min == 1 and a == 1 % d:
        val = val + Fraction(1, 6)
    return val


# ---------------------------------------------------------------------------
# results and the two routes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NuResult:
    """One computed proportion with its provenance route."""

    r: int
    D: int
    c0: int
    value: SymbolicValue
    route: str  # "enumeration" | "closed_form"

    def numeric(self, digits: int = 15, mode: str = "half_up") -> str:
        return numeric_eval(self.value, digits, mode)[0]

    def as_json(self, digits: int = 15) -> dict:
        decimal, bound = numeric_eval(self.value, digits)
        return {
            "r": self.r,
            "D": self.D,
            "c0": self.c0,
            "exact": self.value.as_json(),
            "decimal": decimal,
            "error_bound": bound,
            "route": self.route,
        }


def _euler_phi(n: int) -> int:
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def multiplicity_factor(D: int, c0: int = 0) -> Fraction:
    """The prefactor turning a summed area into a proportion.

    (2/D) * (delta/phi(delta)) * #{admissible c1}, where delta = gcd(c0, D)
    and c1 runs over residues with gcd(D, c0, c1) = 1, c1 != c0 (mod D).
    For both supported moduli at c0 = 0 this evaluates to 2.
    """
    delta = gcd(c0, D)
    n_c1 = sum(1 for c1 in range(D)
               if gcd(gcd(D, c0), c1) == 1 and (c1 - c0) % D != 0)
    return Fraction(2, D) * Fraction(delta, _euler_phi(delta)) * n_c1


#: Family tails switch from explicit member areas to the symbolic class
#: sum at the first class member >= this (comfortably past every
#: catalogued stabilization threshold).
_TAIL_SWITCH = 13


def _family_contribution(fam) -> SymbolicValue:
    switch = max(fam.stable_from, _TAIL_SWITCH)
    first_tail = fam.k_min + ((switch - fam.k_min + fam.modulus - 1)
                              // fam.modulus) * fam.modulus
    if fam.area_of(first_tail) != single_slice_area(first_tail):
        raise RuntimeError(f"family {fam.template()} area rule broken at "
                           f"k={first_tail}")
    total = _coerce(sum((fam.area_of(k) for k in fam.members_below(first_tail - 1)),
                        _ZERO))
    return total + tail_sum(fam.modulus, fam.residue, first_tail)


def nu_from_degenerate_set(ds: DegenerateSet) -> NuResult:
    """Assemble the proportion from an exact degenerate-set decomposition."""
    if ds.bounded:
        raise ValueError("assembly needs the exact decomposition, not a "
                         "bounded search")
    total = _coerce(ds.finite_area())
    for fam in ds.families:
        total = total + _family_contribution(fam)
    value = total * multiplicity_factor(ds.spec.D, ds.spec.c0)
    return NuResult(ds.r, ds.spec.D, ds.spec.c0, value, "enumeration")


def nu_from_enumeration(r: int, D: int, c0: int = 0) -> NuResult:
    """The proportion via the full set-construction pipeline."""
    if c0 != 0 or D not in (2, 3):
        raise ValueError("exact assembly supports modulus 2 or 3 with base "
                         "residue 0; see nu_bounded_interval for the rest")
    return nu_from_degenerate_set(degenerate_set(r, CongruenceSpec(D, 0, 1)))


def nu_enumeration_table(r_max: int, D: int, c0: int = 0) -> Dict[int, NuResult]:
    """Proportions for r = 1..r_max from one shared set-construction walk."""
    if c0 != 0 or D not in (2, 3):
        raise ValueError("exact assembly supports modulus 2 or 3 with base "
                         "residue 0")
    table = degenerate_table(r_max, CongruenceSpec(D, 0, 1))
    return {r: nu_from_degenerate_set(table[r]) for r in range(1, r_max + 1)}


def nu_bounded_interval(r: int, c: CongruenceSpec, k_max: int
                        ) -> Tuple[Fraction, Fraction]:
    """(lower bound, width) for congruence data without symbolic closure.

    The lower bound counts all degenerate tuples with entries <= k_max;
    the width covers the possible slot families, each of which adds at
    most sum_{k > k_max} 4/k^3 < 2/k_max^2, with at most r slot positions.
    """
    ds = degenerate_set(r, c, k_max=k_max)
    lo = ds.finite_area() * multiplicity_factor(c.D, c.c0)
    width = (multiplicity_factor(c.D, c.c0) * r * c.D
             * Fraction(2, k_max ** 2))
    return lo, width


# five-term rational blocks: nu(5m+i) = sum_j block(i, j, m) for r >= 8
_BLOCK_COUNTS = {0: 2, 1: 2, 2: 2, 3: 3, 4: 2}


def closed_block(i: int, j: int, m: int) -> Fraction:
    """The j-th rational block at r = 5m + i (valid for r >= 8)."""
    if i not in _BLOCK_COUNTS or not 1 <= j <= _BLOCK_COUNTS[i]:
        raise ValueError(f"no block ({i}, {j})")
    if 5 * m + i < 8:
        raise ValueError("blocks cover r = 5m + i >= 8")
    if i == 0:
        if j == 1:
            return Fraction(6 * (8 * m - 1),
                            (3 * m - 1) * (6 * m - 1) * (12 * m - 1) * (12 * m + 1))
        return Fraction(2, (6 * m - 1) * (6 * m + 1) * (12 * m - 1))
    if i == 1:
        if j == 1:
            return Fraction(6 * (8 * m + 1),
                            (3 * m + 1) * (6 * m + 1) * (12 * m - 1) * (12 * m + 1))
        return Fraction(2, (6 * m - 1) * (6 * m + 1) * (12 * m + 1))
    if i == 2:
        if j == 1:
            return Fraction(6 * (4 * m + 1),
                            (3 * m + 1) * (6 * m + 1) * (12 * m + 1) * (12 * m + 5))
        return Fraction(2 * (9 * m + 4),
                        3 * (2 * m + 1) * (3 * m + 1) * (6 * m + 1) * (12 * m + 7))
    if i == 3:
        if j == 1:
            return Fraction(6 * (2 * m + 1),
                            (3 * m + 1) * (3 * m + 2) * (12 * m + 5) * (12 * m + 7))
        if j == 2:
            return Fraction(2, 3 * (2 * m + 1) * (6 * m + 1) * (12 * m + 5))
        return Fraction(2, 3 * (2 * m + 1) * (6 * m + 5) * (12 * m + 7))
    if j == 1:
        return Fraction(6 * (4 * m + 3),
                        (3 * m + 2) * (6 * m + 5) * (12 * m + 7) * (12 * m + 11))
    return Fraction(2 * (9 * m + 5),
                    3 * (2 * m + 1) * (3 * m + 2) * (6 * m + 5) * (12 * m + 5))


def nu_closed_form(r: int, D: int, c0: int = 0) -> NuResult:
    """The proportion via the closed formulas (independent of enumeration)."""
    if c0 != 0 or D not in (2, 3):
        raise ValueError("closed forms cover modulus 2 and 3 with base "
                         "residue 0")
    if r < 1:
        raise ValueError("need r >= 1")
    if D == 3:
        if r <= 7:
            value = SymbolicValue(*map(Fraction, reference.SMALL_NU_D3[r]))
        else:
            m, i = divmod(r, 5)
            total = sum(closed_block(i, j, m)
                        for j in range(1, _BLOCK_COUNTS[i] + 1))
            value = _coerce(total)
    else:
        if r <= 3:
            value = SymbolicValue(*map(Fraction, reference.SMALL_NU_D2[r]))
        elif r == 4:
            value = _coerce(Fraction(2, 45))
        else:
            value = _coerce(Fraction(8, (2 * r - 3) * (2 * r - 1) * (2 * r + 1)))
    return NuResult(r, D, c0, value, "closed_form")


# ---------------------------------------------------------------------------
# decimal rendering
# ---------------------------------------------------------------------------

def _as_fraction(x) -> Fraction:
    if isinstance(x, SymbolicValue):
        return x.approx()[0]
    return Fraction(x)


def render_fixed(x, places: int, mode: str = "half_up") -> str:
    """Fixed-point rendering of a positive value to ``places`` decimals."""
    if mode not in ("trunc", "half_up", "half_even"):
        raise ValueError(f"unknown rounding mode {mode!r}")
    fr = _as_fraction(x)
    if fr < 0:
        raise ValueError("fixed rendering expects a non-negative value")
    scaled = fr * 10 ** places
    q, rem = divmod(scaled.numerator, scaled.denominator)
    if mode == "half_up":
        q += 1 if 2 * rem >= scaled.denominator else 0
    elif mode == "half_even":
        if 2 * rem > scaled.denominator or (2 * rem == scaled.denominator
                                            and q % 2 == 1):
            q += 1
    s = str(q).rjust(places + 1, "0")
    return s[:-places] + "." + s[-places:]


def sig_round(x, sig: int, mode: str = "half_up") -> str:
    """Rendering of a positive value to ``sig`` significant digits."""
    if mode not in ("trunc", "half_up", "half_even"):
        raise ValueError(f"unknown rounding mode {mode!r}")
    if sig < 1:
        raise ValueError("need at least one significant digit")
    fr = _as_fraction(x)
    if fr <= 0:
        raise ValueError("significant-digit rendering expects a positive value")
    e = 0
    while Fraction(10) ** e > fr:
        e -= 1
    while Fraction(10) ** (e + 1) <= fr:
        e += 1
    scaled = fr * Fraction(10) ** (sig - 1 - e)
    q, rem = divmod(scaled.numerator, scaled.denominator)
    if mode == "half_up":
        q += 1 if 2 * rem >= scaled.denominator else 0
    elif mode == "half_even":
        if 2 * rem > scaled.denominator or (2 * rem == scaled.denominator
                                            and q % 2 == 1):
            q += 1
    s = str(q)
    if len(s) > sig:  # rounding carried into a new leading digit
        e += 1
        s = s[:-1]
    if e < 0:
        return "0." + "0" * (-e - 1) + s
    if e + 1 >= len(s):  # fewer rendered digits than integer places
        return s + "0" * (e + 1 - len(s))
    return s[: e + 1] + "." + s[e + 1:]


def numeric_eval(v: SymbolicValue, digits: int = 15, mode: str = "half_up"
                 ) -> Tuple[str, str]:
    """(decimal string to ``digits`` significant digits, error bound).

    The bound covers both the embedded-constant error and the final
    rounding step; digits are capped at 50 so the 60-digit literals keep
    a comfortable margin.
    """
    if not 1 <= digits <= 50:
        raise ValueError("digits must be in 1..50")
    approx, err = v.approx()
    if approx <= 0:
        raise ValueError("numeric evaluation expects a positive value")
    text = sig_round(approx, digits, mode)
    # half an ulp of the last rendered digit, plus the approximation error
    e = 0
    while Fraction(10) ** e > approx:
        e -= 1
    while Fraction(10) ** (e + 1) <= approx:
        e += 1
    bound = err + Fraction(1, 2) * Fraction(10) ** (e - digits + 1)
    return text, f"{float(bound):.1e}"


# ---------------------------------------------------------------------------
# normalization tail bounds
# ---------------------------------------------------------------------------

def normalization_tail_bound() -> Fraction:
    """Rigorous bound for 1 - sum_{r<=200} nu(r; 3, 0).

    The blocks at scale m sum below (1/9) m^-3, so the tail past r = 200
    is at most the exact partial block at m = 40 (i = 1..4) plus
    (1/9) * sum_{m>=41} m^-3 < (1/9) * 2/81^2 by midpoint comparison.
    """
    blk = sum(closed_block(i, j, 40)
              for i in range(1, 5) for j in range(1, _BLOCK_COUNTS[i] + 1))
    return blk + Fraction(1, 9) * Fraction(2, 81 * 81)


def weighted_tail_bound() -> Fraction:
    """Rigorous bound for 4 - sum_{r<=200} (r+1) nu(r; 3, 0)."""
    blk = sum((5 * 40 + i + 1) * closed_block(i, j, 40)
              for i in range(1, 5) for j in range(1, _BLOCK_COUNTS[i] + 1))
    return blk + (Fraction(5, 9) + Fraction(6, 9 * 41)) * Fraction(1, 40)
