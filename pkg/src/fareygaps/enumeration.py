"""Degenerate index tuples: exact set construction, spike families, trees.

A walk through the gap indices k_1, k_2, ... moves the denominator residue
(mod D) through the values c1*K_i - c0*K_{i-1}, where the K_i are the
modified continuants of the tuple.  A tuple is *degenerate* when that value
returns to the base residue c0 for the first time exactly at the last step;
degenerate tuples with a non-empty index region are the combinatorial
support of the limiting gap distribution.

For every length r the degenerate set splits into

* a finite part whose entries are bounded by ``4r + 1``, and
* finitely many *slot families*: templates ``prefix + (k,) + suffix`` with
  one unbounded slot ranging over an arithmetic progression.  The slot's
  neighbours are forced to 1 and everything else to 2 (regions whose tuple
  contains a large entry are thin slivers, and only that shape survives),
  so prefixes are of the form ``(2,)*a + (1,)`` and suffixes mirror them.

`degenerate_set` returns the exact decomposition for modulus 2 or 3 with
base residue 0, or a plain bounded search for any other congruence data.
`build_tree` expands the generation tree under a seed tuple, and
`leaf_area` evaluates the catalogued closed forms for the degenerate
leaves of the three recurring subtrees (seeds A=(2,4), B=(5,1), C=(1,2)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain
from math import gcd
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .continuants import continuant
from .geometry import (
    FAREY_TRIANGLE,
    ConvexRegion,
    HalfPlane,
    area,
    is_empty,
    single_slice_area,
)
from .tuples import TupleSpec, as_indices

DEGENERATE = "degenerate"
LIVE = "live"
REJECTED = "rejected"

#: Nodes whose child scan is still open at this index are treated as
#: carrying an unbounded slot family (build_tree refuses to expand them
#: unless given an explicit max_index).
_OPEN_SCAN_GUARD = 512


@dataclass(frozen=True)
class CongruenceSpec:
    """Residue data steering the admissibility walk.

    ``D`` is the modulus, ``c0`` the base residue the walk must avoid and
    finally hit, ``c1`` the residue of the first denominator after the
    base one.  Requires gcd(D, c0, c1) = 1 and c1 != c0 (mod D); the
    derived ``delta = gcd(c0, D)`` controls which denominators can carry
    the base residue at all.
    """

    D: int
    c0: int = 0
    c1: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.D, int) or self.D < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.D!r}")
        if not (0 <= self.c0 < self.D and 0 <= self.c1 < self.D):
            raise ValueError(
                f"residues must lie in [0, {self.D}), got c0={self.c0}, c1={self.c1}")
        if gcd(gcd(self.D, self.c0), self.c1) != 1:
            raise ValueError("gcd(D, c0, c1) must be 1")
        if (self.c1 - self.c0) % self.D == 0:
            raise ValueError("c1 must differ from c0 mod D")

    @property
    def delta(self) -> int:
        return gcd(self.c0, self.D)

    def hits(self, K_i: int, K_im1: int) -> bool:
        """Does the walk value at (K_i, K_{i-1}) equal the base residue?"""
        return (self.c1 * K_i - self.c0 * K_im1 - self.c0) % self.D == 0


def admissibility_check(t, c: CongruenceSpec) -> str:
    """Classify a tuple as ``degenerate``, ``live`` or ``rejected``.

    Degenerate: the walk first returns to the base residue exactly at the
    final index.  Live: it never returns.  Rejected: it returns too early.
    Region emptiness is deliberately not consulted here.
    """
    ks = as_indices(t)
    if not ks:
        raise ValueError("admissibility needs at least one index")
    p_prev, p = 0, 1
    for i, k in enumerate(ks, start=1):
        p_prev, p = p, k * p - p_prev
        if c.hits(p, p_prev):
            return DEGENERATE if i == len(ks) else REJECTED
    return LIVE


# ---------------------------------------------------------------------------
# slot families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TupleFamily:
    """One unbounded-slot template ``prefix + (k,) + suffix``.

    Members run over ``k ≡ residue (mod modulus)``, ``k >= k_min``; each
    member is degenerate with non-empty region and final continuant
    ``k - offset``.  From ``stable_from`` on the member area equals the
    single-slice area 4/(k(k+1)(k+2)); the finitely many class members
    below that threshold carry their exact areas in ``exceptional_areas``.
    """

    prefix: Tuple[int, ...]
    suffix: Tuple[int, ...]
    residue: int
    modulus: int
    k_min: int
    offset: int
    stable_from: int
    exceptional_areas: Tuple[Tuple[int, Fraction], ...] = ()

    @property
    def slot_position(self) -> int:
        return len(self.prefix)

    @property
    def r(self) -> int:
        return len(self.prefix) + 1 + len(self.suffix)

    def member(self, k: int) -> Tuple[int, ...]:
        if k < self.k_min or k % self.modulus != self.residue:
            raise ValueError(
                f"k={k} is not in the progression {self.residue} mod "
                f"{self.modulus}, k >= {self.k_min}")
        return self.prefix + (k,) + self.suffix

    def members_below(self, bound: int) -> Iterator[int]:
        """Slot values of the members with k <= bound, ascending."""
        return iter(range(self.k_min, bound + 1, self.modulus))

    def contains(self, t) -> bool:
        ks = as_indices(t)
        if len(ks) != self.r:
            return False
        slot = ks[self.slot_position]
        return (ks[: self.slot_position] == self.prefix
                and ks[self.slot_position + 1:] == self.suffix
                and slot >= self.k_min
                and slot % self.modulus == self.residue)

    def area_of(self, k: int) -> Fraction:
        self.member(k)  # validates
        for kk, a in self.exceptional_areas:
            if kk == k:
                return a
        return single_slice_area(k)

    def final_continuant(self, k: int) -> int:
        return k - self.offset

    def template(self) -> str:
        parts = [str(v) for v in self.prefix] + ["k"] + [str(v) for v in self.suffix]
        return ",".join(parts)

    def progression(self) -> str:
        return f"{self.residue} mod {self.modulus}"

    def area_rule(self) -> str:
        rule = f"4/(k*(k+1)*(k+2)) for k >= {self.stable_from}"
        if self.exceptional_areas:
            extras = "; ".join(f"area({k}) = {a}" for k, a in self.exceptional_areas)
            rule += "; " + extras
        return rule

    def as_json(self) -> dict:
        return {
            "template": self.template(),
            "progression": self.progression(),
            "k_min": self.k_min,
            "area_rule": self.area_rule(),
        }


def _slot_shapes(r: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All (prefix, suffix) spike shapes of total length r - 1."""
    for lead_len in range(0, r):
        tail_len = r - 1 - lead_len
        lead = (2,) * (lead_len - 1) + (1,) if lead_len else ()
        tail = (1,) + (2,) * (tail_len - 1) if tail_len else ()
        yield lead, tail


def _family_classes(lead, tail, c: CongruenceSpec, r: int) -> List[int]:
    """Slot residues (mod D) whose walk first hits the base exactly at r."""
    out = []
    for cls in range(c.D):
        p_prev, p = 0, 1
        hit_at = None
        for i, kmod in enumerate(chain(lead, (cls,), tail), start=1):
            p_prev, p = p % c.D, (kmod * p - p_prev) % c.D
            if c.hits(p, p_prev):
                hit_at = i
                break
        if hit_at == r:
            out.append(cls)
    return out


def _instantiate_family(lead, tail, cls, r, c: CongruenceSpec) -> Optional[TupleFamily]:
    """Locate k_min, offset and the stabilization data for one shape/class.

    Returns None when the congruence class is geometrically vacant (no
    non-empty member within the scan window).
    """
    d = c.D
    k = cls if cls >= 1 else d
    scan_cap = 4 * r + 2 + 3 * d
    k_min = None
    while k <= scan_cap:
        if not is_empty(lead + (k,) + tail):
            k_min = k
            break
        k += d
    if k_min is None:
        return None

    k1 = continuant(lead + (k_min,) + tail)
    k2 = continuant(lead + (k_min + d,) + tail)
    if k2 - k1 != d:
        raise RuntimeError(
            f"slot family {lead}+k+{tail} does not have a unit-slope continuant")
    offset = k_min - k1

    # scan for the first class member from which the area sticks to the
    # single-slice value (three consecutive agreements demanded)
    exceptions: List[Tuple[int, Fraction]] = []
    streak_start = None
    stable_from = None
    k = k_min
    while k <= k_min + 40 * d:
        a = area(lead + (k,) + tail)
        if a == single_slice_area(k):
            if streak_start is None:
                streak_start = k
            if k >= streak_start + 2 * d:
                stable_from = streak_start
                break
        else:
            streak_start = None
            exceptions.append((k, a))
        k += d
    if stable_from is None:
        raise RuntimeError(f"family {lead}+k+{tail} did not stabilize")

    fam = TupleFamily(lead, tail, k_min % d, d, k_min, offset, stable_from,
                      tuple(exceptions))

    # verify three instantiations before emitting (guards misclassification)
    deep = k_min + ((max(4 * r + 1 - k_min, 0)) // d + 1) * d
    for kk in (k_min, k_min + d, deep):
        t = fam.member(kk)
        if admissibility_check(t, c) != DEGENERATE or is_empty(t):
            raise RuntimeError(f"family member {t} failed verification")
        if continuant(t) != kk - offset:
            raise RuntimeError(f"family member {t} breaks the continuant rule")
    return fam


def slot_families(r: int, c: CongruenceSpec) -> List[TupleFamily]:
    """All slot families at length r, ordered by slot position."""
    fams = []
    for lead, tail in _slot_shapes(r):
        for cls in _family_classes(lead, tail, c, r):
            fam = _instantiate_family(lead, tail, cls, r, c)
            if fam is not None:
                fams.append(fam)
    fams.sort(key=lambda f: (f.slot_position, f.residue))
    return fams


# ---------------------------------------------------------------------------
# depth-first construction of the degenerate sets
# ---------------------------------------------------------------------------

class _Node:
    """A live prefix in the walk: indices, region, continuant state."""

    __slots__ = ("ks", "reg", "p_prev", "p", "q_prev", "q")

    def __init__(self, ks, reg, p_prev, p, q_prev, q):
        self.ks = ks
        self.reg = reg
        self.p_prev = p_prev
        self.p = p
        self.q_prev = q_prev
        self.q = q

    def extend(self, k: int) -> "_Node":
        p_new = k * self.p - self.p_prev
        q_new = k * self.q - self.q_prev
        reg = self.reg.clip(HalfPlane(-q_new, p_new, 1))
        if not reg.empty:
            reg = reg.clip(HalfPlane(q_new + self.q, -(p_new + self.p), -1,
                                     strict=True))
        return _Node(self.ks + (k,), reg, self.p, p_new, self.q, q_new)


def _root() -> _Node:
    # q seeds chosen so that the uniform recurrence gives Q_1 = 1 for any k
    return _Node((), FAREY_TRIANGLE, 0, 1, -1, 0)


def _seed_node(ks: Sequence[int]) -> _Node:
    node = _root()
    for k in ks:
        node = node.extend(k)
    return node


def _children(node: _Node, cap: int) -> Iterator[_Node]:
    """Non-empty one-index extensions, k ascending.

    The slot values with non-empty region form a contiguous interval, so
    the scan runs from 1 to the first emptiness after a non-empty child
    (or to ``cap``, whichever comes first).
    """
    seen = False
    for k in range(1, cap + 1):
        child = node.extend(k)
        if child.reg.empty:
            if seen:
                return
            continue
        seen = True
        yield child


def _collect_levels(c: CongruenceSpec, r_max: int, cap: int) -> Dict[int, List[tuple]]:
    """Degenerate tuples with entries <= cap, grouped by length <= r_max."""
    levels: Dict[int, List[tuple]] = {j: [] for j in range(1, r_max + 1)}
    stack = [_root()]
    while stack:
        node = stack.pop()
        depth = len(node.ks) + 1
        for child in _children(node, cap):
            if c.hits(child.p, node.p):
                levels[depth].append(child.ks)
            elif depth < r_max:
                stack.append(child)
    for j in levels:
        levels[j].sort()
    return levels


@dataclass(frozen=True)
class DegenerateSet:
    """Exact (or bounded) decomposition of one degenerate set."""

    r: int
    spec: CongruenceSpec
    finite: Tuple[Tuple[int, ...], ...]
    families: Tuple[TupleFamily, ...]
    bounded: bool = False
    k_max: Optional[int] = None

    def finite_area(self) -> Fraction:
        return sum((area(t) for t in self.finite), Fraction(0))

    def members_with_entries_below(self, bound: int) -> List[Tuple[int, ...]]:
        """Finite tuples plus family members with slot <= bound."""
        out = [t for t in self.finite if max(t) <= bound]
        for fam in self.families:
            out.extend(fam.member(k) for k in fam.members_below(bound))
        return sorted(out)

    def as_json(self) -> dict:
        return {
            "r": self.r,
            "D": self.spec.D,
            "c0": self.spec.c0,
            "finite": [TupleSpec.from_indices(t).render() for t in self.finite],
            "families": [f.as_json() for f in self.families],
        }


def _split_levels(levels, fams_by_r, c, r_values, bounded, k_max):
    out = {}
    for r in r_values:
        fams = fams_by_r.get(r, [])
        finite = []
        for t in levels[r]:
            matching = [f for f in fams if f.contains(t)]
            if len(matching) > 1:
                raise RuntimeError(f"tuple {t} matched by several families")
            if not matching:
                finite.append(t)
        if not bounded:
            wide = [t for t in finite if max(t) > 4 * r + 1]
            if wide:
                raise RuntimeError(
                    f"tuples {wide} exceed the finite-part bound 4r+1 without "
                    f"a matching slot family — family discovery is incomplete")
        out[r] = DegenerateSet(r, c, tuple(finite), tuple(fams), bounded, k_max)
    return out


def degenerate_set(r: int, c: CongruenceSpec, *, k_max: Optional[int] = None) -> DegenerateSet:
    """The degenerate set at length r.

    Exact mode (``k_max`` omitted) is available for modulus 2 or 3 with
    base residue 0: the result is the full decomposition into a finite
    part and slot families.  Any other congruence data requires ``k_max``
    and returns the plain bounded search (no family closure).
    """
    return degenerate_table(r, c, k_max=k_max)[r]


def degenerate_table(r_max: int, c: CongruenceSpec, *,
                     k_max: Optional[int] = None) -> Dict[int, DegenerateSet]:
    """Degenerate sets for every length 1..r_max from one shared walk."""
    if r_max < 1:
        raise ValueError("need r >= 1")
    if k_max is None:
        if c.D not in (2, 3) or c.c0 != 0:
            raise ValueError(
                "exact enumeration is supported for modulus 2 or 3 with base "
                "residue 0; pass k_max=... for a bounded search")
        cap = 4 * r_max + 1 + 2 * c.D
        levels = _collect_levels(c, r_max, cap)
        fams_by_r = {r: slot_families(r, c) for r in range(1, r_max + 1)}
        return _split_levels(levels, fams_by_r, c, range(1, r_max + 1), False, None)
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    levels = _collect_levels(c, r_max, k_max)
    return _split_levels(levels, {}, c, range(1, r_max + 1), True, k_max)


# ---------------------------------------------------------------------------
# generation trees
# ---------------------------------------------------------------------------

@dataclass
class TreeNode:
    indices: Tuple[int, ...]
    status: str
    area: Fraction
    children: List["TreeNode"] = field(default_factory=list)
    expanded: bool = False   # True when the child interval was fully scanned

    @property
    def depth(self) -> int:
        return len(self.indices)

    def label(self) -> str:
        return TupleSpec.from_indices(self.indices).render()


@dataclass
class TupleTree:
    """Breadth-first expansion of the live descendants of a seed tuple."""

    seed: Tuple[int, ...]
    spec: CongruenceSpec
    depth: int
    root: TreeNode

    def nodes(self) -> Iterator[TreeNode]:
        queue = [self.root]
        while queue:
            node = queue.pop(0)
            yield node
            queue.extend(node.children)

    def leaves(self) -> List[TreeNode]:
        return [n for n in self.nodes() if not n.children]

    def degenerate_leaves(self) -> List[TreeNode]:
        return [n for n in self.nodes() if n.status == DEGENERATE]

    def find(self, t) -> Optional[TreeNode]:
        ks = as_indices(t)
        for node in self.nodes():
            if node.indices == ks:
                return node
        return None

    def conservation_violations(self) -> List[Tuple[tuple, Fraction, Fraction]]:
        """Expanded nodes whose children areas do not sum to the node area."""
        bad = []
        for node in self.nodes():
            if not node.expanded:
                continue
            child_sum = sum((ch.area for ch in node.children), Fraction(0))
            if child_sum != node.area:
                bad.append((node.indices, node.area, child_sum))
        return bad

    def to_dot(self) -> str:
        lines = [
            "digraph tupletree {",
            "  rankdir=TB;",
            '  node [fontname="Helvetica", shape=ellipse];',
        ]
        ids: Dict[int, str] = {}
        for n, node in enumerate(self.nodes()):
            ids[id(node)] = name = f"n{n}"
            marker = "○" if node.status == DEGENERATE else "∗"
            label = f"{marker} {node.label()}\\n{node.area}"
            extra = ", peripheries=2" if node.status == DEGENERATE else ""
            lines.append(f'  {name} [label="{label}"{extra}];')
        for node in self.nodes():
            for ch in node.children:
                lines.append(f"  {ids[id(node)]} -> {ids[id(ch)]};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_svg(self) -> str:
        """A simple layered drawing: one row per depth, leaves evenly spaced."""
        xs: Dict[int, float] = {}
        next_leaf = [0.0]

        def place(node: TreeNode) -> float:
            if not node.children:
                xs[id(node)] = next_leaf[0]
                next_leaf[0] += 1.0
            else:
                child_xs = [place(ch) for ch in node.children]
                xs[id(node)] = sum(child_xs) / len(child_xs)
            return xs[id(node)]

        place(self.root)
        width = max(next_leaf[0], 1.0)
        depths = [n.depth for n in self.nodes()]
        d_lo, d_hi = min(depths), max(depths)
        rows = max(d_hi - d_lo, 1)
        px_x, px_y, margin = 160, 110, 60

        def coords(node: TreeNode) -> Tuple[float, float]:
            return (margin + xs[id(node)] * px_x,
                    margin + (node.depth - d_lo) * px_y)

        w = int(2 * margin + (width - 1) * px_x + 1)
        h = int(2 * margin + rows * px_y + 1)
        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">',
            f'<rect width="{w}" height="{h}" fill="white"/>',
        ]
        for node in self.nodes():
            x0, y0 = coords(node)
            for ch in node.children:
                x1, y1 = coords(ch)
                out.append(f'<line x1="{x0:.1f}" y1="{y0:.1f}" x2="{x1:.1f}" '
                           f'y2="{y1:.1f}" stroke="#888"/>')
        for node in self.nodes():
            x0, y0 = coords(node)
            degenerate = node.status == DEGENERATE
            out.append(f'<circle cx="{x0:.1f}" cy="{y0:.1f}" r="7" fill="white" '
                       f'stroke="black"/>')
            if degenerate:
                out.append(f'<circle cx="{x0:.1f}" cy="{y0:.1f}" r="11" '
                           f'fill="none" stroke="black"/>')
            marker = "○" if degenerate else "∗"
            out.append(f'<text x="{x0:.1f}" y="{y0 - 16:.1f}" font-size="12" '
                       f'text-anchor="middle" font-family="Helvetica">'
                       f'{marker} {node.label()}</text>')
            out.append(f'<text x="{x0:.1f}" y="{y0 + 26:.1f}" font-size="10" '
                       f'text-anchor="middle" font-family="Helvetica" '
                       f'fill="#555">{node.area}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def build_tree(seed, c: CongruenceSpec, depth: int, *,
               max_index: Optional[int] = None) -> TupleTree:
    """Expand the generation tree under a live seed to the given depth.

    Children of a live node are all one-index extensions with non-empty
    region; degenerate nodes are leaves.  Nodes carrying an unbounded slot
    (the child scan stays non-empty past the guard) raise unless a
    ``max_index`` truncation is supplied.
    """
    ks = as_indices(seed)
    if depth < len(ks):
        raise ValueError("depth must be at least the seed length")
    status = admissibility_check(ks, c)
    if status != LIVE:
        raise ValueError(f"seed {ks} is {status}; build_tree needs a live seed")
    node0 = _seed_node(ks)
    if node0.reg.empty:
        raise ValueError(f"seed {ks} has an empty region")

    root = TreeNode(ks, LIVE, node0.reg.area)
    queue: List[Tuple[_Node, TreeNode]] = [(node0, root)]
    while queue:
        walk, tnode = queue.pop(0)
        if tnode.status == DEGENERATE or tnode.depth >= depth:
            continue
        cap = max_index if max_index is not None else _OPEN_SCAN_GUARD
        children = list(_children(walk, cap))
        if (max_index is None and children
                and children[-1].ks[-1] == _OPEN_SCAN_GUARD):
            raise ValueError(
                f"node {tnode.indices} carries an unbounded child family; "
                f"pass max_index=... to truncate the expansion")
        tnode.expanded = max_index is None or not children \
            or children[-1].ks[-1] < max_index
        for child in children:
            status = DEGENERATE if c.hits(child.p, walk.p) else LIVE
            ch = TreeNode(child.ks, status, child.reg.area)
            tnode.children.append(ch)
            queue.append((child, ch))
    return TupleTree(ks, c, depth, root)


# ---------------------------------------------------------------------------
# closed forms for the leaves of the three recurring subtrees
# ---------------------------------------------------------------------------

def _F(num: int, den: int) -> Fraction:
    return Fraction(num, den)


def _a_leaf(n: int, w: int) -> Tuple[tuple, Fraction]:
    if n < 1 or w not in range(1, 6):
        raise ValueError(f"seed-A leaves need n >= 1 and w in 1..5, got {(n, w)}")
    t = (2,) + (4, 1) * n + (3,) + (2,) * (3 * n - 3 + w) + (1,)
    forms = {
        1: _F(1, 2 * (6 * n - 1) * (6 * n + 1) * (12 * n + 1)),
        2: _F(3 * (4 * n + 1),
              2 * (3 * n + 1) * (6 * n + 1) * (12 * n + 1) * (12 * n + 5)),
        3: _F(3 * (2 * n + 1),
              2 * (3 * n + 1) * (3 * n + 2) * (12 * n + 5) * (12 * n + 7)),
        4: _F(3 * (4 * n + 3),
              2 * (3 * n + 2) * (6 * n + 5) * (12 * n + 7) * (12 * n + 11)),
        5: _F(1, 2 * (6 * n + 5) * (6 * n + 7) * (12 * n + 11)),
    }
    return t, forms[w]


def _b_leaf(n: int, w: int) -> Tuple[tuple, Fraction]:
    if w not in range(3, 9) or n < 0 or (n == 0 and w != 8):
        raise ValueError(
            f"seed-B leaves need w in 3..8 with n >= 1 (or n=0, w=8), got {(n, w)}")
    t = (5,) + (1, 4) * n + (1, 3) + (2,) * (3 * n - 4 + w) + (1,)
    forms = {
        3: _F(1, 6 * (2 * n + 1) * (6 * n + 1) * (12 * n + 5)),
        4: _F(9 * n + 5,
              6 * (2 * n + 1) * (3 * n + 2) * (6 * n + 5) * (12 * n + 5)),
        5: _F(3 * (8 * n + 7),
              2 * (3 * n + 2) * (6 * n + 5) * (12 * n + 11) * (12 * n + 13)),
        6: _F(3 * (8 * n + 9),
              2 * (3 * n + 4) * (6 * n + 7) * (12 * n + 11) * (12 * n + 13)),
        7: _F(9 * n + 13,
              6 * (2 * n + 3) * (3 * n + 4) * (6 * n + 7) * (12 * n + 19)),
        8: _F(1, 6 * (2 * n + 3) * (6 * n + 11) * (12 * n + 19)),
    }
    return t, forms[w]


def c_leaf_entries(n_twos: int) -> List[Tuple[tuple, Fraction, int]]:
    """Degenerate leaves under seed (1,2) with a stalk of ``n_twos`` 2s.

    Returns (tuple, area, level) triples.  The pattern depends on the
    residue of the stalk length mod 3; only pattern-valid entries are
    produced (block exponents must be non-negative).
    """
    if n_twos < 1:
        raise ValueError("the stalk needs at least one 2")
    m, res = divmod(n_twos, 3)
    pre = (1,) + (2,) * n_twos + (3,)
    out: List[Tuple[tuple, Fraction, int]] = []
    if res == 0 and m >= 1:
        out.append((pre + (1, 4) * (m - 1) + (1, 5),
                    _F(9 * m + 4,
                       6 * (2 * m + 1) * (3 * m + 1) * (6 * m + 1) * (12 * m + 7)),
                    5 * m + 2))
        out.append((pre + (1, 4) * m + (2,),
                    _F(3 * (2 * m + 1),
                       2 * (3 * m + 1) * (3 * m + 2) * (12 * m + 5) * (12 * m + 7)),
                    5 * m + 3))
        out.append((pre + (1, 4) * m + (1, 5),
                    _F(9 * m + 5,
                       6 * (2 * m + 1) * (3 * m + 2) * (6 * m + 5) * (12 * m + 5)),
                    5 * m + 4))
    elif res == 1 and m >= 1:
        out.append((pre + (1, 4) * (m - 1) + (1, 5),
                    _F(1, 6 * (2 * m + 1) * (6 * m + 5) * (12 * m + 7)),
                    5 * m + 3))
        out.append((pre + (1, 4) * m + (2,),
                    _F(3 * (4 * m + 3),
                       2 * (3 * m + 2) * (6 * m + 5) * (12 * m + 7) * (12 * m + 11)),
                    5 * m + 4))
        out.append((pre + (1, 4) * m + (1, 5),
                    _F(3 * (8 * m + 7),
                       2 * (3 * m + 2) * (6 * m + 5) * (12 * m + 11) * (12 * m + 13)),
                    5 * m + 5))
        out.append((pre + (1, 4) * (m + 1) + (2,),
                    _F(1, 2 * (6 * m + 5) * (6 * m + 7) * (12 * m + 13)),
                    5 * m + 6))
    elif res == 2:
        if m >= 1:
            out.append((pre + (1, 4) * m + (2,),
                        _F(1, 2 * (6 * m + 5) * (6 * m + 7) * (12 * m + 11)),
                        5 * m + 5))
            out.append((pre + (1, 4) * m + (1, 5),
                        _F(3 * (8 * m + 9),
                           2 * (3 * m + 4) * (6 * m + 7) * (12 * m + 11) * (12 * m + 13)),
                        5 * m + 6))
        out.append((pre + (1, 4) * (m + 1) + (2,),
                    _F(3 * (4 * m + 5),
                       2 * (3 * m + 4) * (6 * m + 7) * (12 * m + 13) * (12 * m + 17)),
                    5 * m + 7))
        out.append((pre + (1, 4) * (m + 1) + (1, 5),
                    _F(1, 6 * (2 * m + 3) * (6 * m + 7) * (12 * m + 17)),
                    5 * m + 8))
    return out


def leaf_tuple(family: str, n: int, w: int) -> TupleSpec:
    """The degenerate leaf tuple of one recurring subtree.

    ``family`` is "A" (seed (2,4)), "B" (seed (5,1)) or "C" (seed (1,2)).
    For A and B, ``n`` counts the (4,1)/(1,4) blocks and the leaf sits at
    level 5n + w.  For C, ``n`` is the stalk length (number of leading 2s)
    and ``w`` is the absolute level of the leaf.
    """
    t, _ = _leaf(family, n, w)
    return TupleSpec.from_indices(t)


def leaf_area(family: str, n: int, w: int) -> Fraction:
    """Closed-form area of the leaf addressed as in `leaf_tuple`."""
    _, a = _leaf(family, n, w)
    return a


def _leaf(family: str, n: int, w: int) -> Tuple[tuple, Fraction]:
    if family == "A":
        return _a_leaf(n, w)
    if family == "B":
        return _b_leaf(n, w)
    if family == "C":
        for t, a, level in c_leaf_entries(n):
            if level == w:
                return t, a
        raise ValueError(f"no seed-C leaf at level {w} for stalk length {n}")
    raise ValueError(f"family must be A, B or C, got {family!r}")


def pentagon_witness(n: int) -> Tuple[int, ...]:
    """A tuple family whose region has five vertices (n >= 1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return (5,) + (1, 4) * n + (1, 3) + (2,) * (3 * n)


# ---------------------------------------------------------------------------
# closed forms for recurring internal nodes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NodeAreaForm:
    """A catalogued internal-node family with its exact area formula."""

    label: str
    indices: Callable[[int], tuple]
    area_form: Callable[[int], Fraction]
    n_min: int = 1


NODE_AREA_FORMS: Tuple[NodeAreaForm, ...] = (
    NodeAreaForm("2,(4,1)^n",
                 lambda n: (2,) + (4, 1) * n,
                 lambda n: _F(1, 6 * (6 * n - 1) * (6 * n + 1))),
    NodeAreaForm("2,(4,1)^n,3",
                 lambda n: (2,) + (4, 1) * n + (3,),
                 lambda n: _F(6 * (2 * n + 1),
                              (6 * n - 1) * (6 * n + 1) * (6 * n + 5) * (6 * n + 7))),
    NodeAreaForm("2,(4,1)^n,4",
                 lambda n: (2,) + (4, 1) * n + (4,),
                 lambda n: _F(1, 6 * (6 * n + 5) * (6 * n + 7))),
    NodeAreaForm("5,(1,4)^n",
                 lambda n: (5,) + (1, 4) * n,
                 lambda n: _F(1, 3 * (6 * n + 1) * (6 * n + 5))),
    NodeAreaForm("5,(1,4)^n,1",
                 lambda n: (5,) + (1, 4) * n + (1,),
                 lambda n: _F(1, 3 * (6 * n + 1) * (6 * n + 5))),
    NodeAreaForm("5,(1,4)^n,1,3",
                 lambda n: (5,) + (1, 4) * n + (1, 3),
                 lambda n: _F(24 * (n + 1),
                              (6 * n + 1) * (6 * n + 5) * (6 * n + 7) * (6 * n + 11))),
    NodeAreaForm("1,2^n",
                 lambda n: (1,) + (2,) * n,
                 lambda n: _F(1, 2 * (2 * n + 1) * (2 * n + 3))),
)
