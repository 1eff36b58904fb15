"""Intervals [u, v]_T of the absolute order and their lattice audit.

Only intervals of reflection-length height <= 3 are built.  In height 3
the only way a bounded poset fails to be a lattice is a bowtie: two atoms
both lying under two distinct coatoms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import INF, CoxeterSystem, Element
from .errors import CapExceeded, DomainError, InvariantViolation
from .reflections import absolute_le, as_reflection, enumerate_reflections, is_reflection, tlen


class UnsupportedHeight(DomainError):
    pass


@dataclass
class IntervalPoset:
    bottom: Element
    top: Element
    elements: list
    rank_of: dict
    covers: set
    complete: bool
    cutoff: int | None = None
    _up: dict = field(default=None, repr=False, compare=False)
    _down: dict = field(default=None, repr=False, compare=False)

    @property
    def height(self):
        return self.rank_of[self.top]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.rank_of

    def layer(self, k):
        return sorted(x for x in self.elements if self.rank_of[x] == k)

    def rank_sizes(self):
        return tuple(len(self.layer(k)) for k in range(self.height + 1))

    def upper_covers(self, x):
        return sorted(b for a, b in self.covers if a == x)

    def lower_covers(self, x):
        return sorted(a for a, b in self.covers if b == x)

    def _closures(self):
        if self._up is None:
            above = {x: {x} for x in self.elements}
            below = {x: {x} for x in self.elements}
            # one pass per rank, top down / bottom up
            order = sorted(self.elements, key=lambda x: -self.rank_of[x])
            for x in order:
                for y in self.upper_covers(x):
                    above[x] |= above[y]
            for x in reversed(order):
                for y in self.lower_covers(x):
                    below[x] |= below[y]
            self._up, self._down = above, below
        return self._up, self._down

    def le(self, a, b):
        return b in self._closures()[0][a]

    def up_set(self, a):
        return self._closures()[0][a]

    def down_set(self, a):
        return self._closures()[1][a]


@dataclass(frozen=True)
class BowtieWitness:
    low: tuple   # (t1, t2)
    high: tuple  # (w1, w2)


@dataclass(frozen=True)
class LatticeReport:
    is_lattice: bool
    witness: tuple | None = None
    missing: str | None = None   # "meet" or "join" for the witness pair
    bounded_evidence: bool = False

    def summary(self):
        s = "lattice: %s" % ("true" if self.is_lattice else "false")
        if self.bounded_evidence:
            s += " (bounded evidence)"
        return s


def is_finite_group(W: CoxeterSystem) -> bool:
    if "finite" not in W.memo:
        try:
            W.enumerate_ball(INF)
            W.memo["finite"] = True
        except CapExceeded:
            W.memo["finite"] = False
    return W.memo["finite"]


def all_reflections_if_finite(W: CoxeterSystem):
    if not is_finite_group(W):
        return None
    out = [x for x in W.enumerate_ball(INF) if is_reflection(W, x)]
    return [as_reflection(W, x) for x in out]


def build_interval(W: CoxeterSystem, u: Element, v: Element, cutoff=None,
                   mode="crosscheck", validate=True) -> IntervalPoset:
    """[u, v]_T, built as x -> u x of [1, u^-1 v]_T.

    In a finite group the interval is complete and ``cutoff`` is ignored.
    Otherwise atoms are searched among reflections of length <= ``cutoff``
    and the result is flagged incomplete.  With ``validate`` the atoms under each rank-2
    element are re-derived independently as the reflections t with
    t x a reflection.
    """
    if not absolute_le(W, u, v, mode):
        raise DomainError(f"build_interval: {W.format_word(u.nf)!r} is not <=_T {W.format_word(v.nf)!r}")
    wbar = W.product(W.inverse(u), v)
    h = tlen(W, wbar, mode)
    if h > 3:
        raise UnsupportedHeight(f"build_interval: l_T(u^-1 v) = {h} > 3 is not supported")
    refls = all_reflections_if_finite(W)
    complete = refls is not None
    if refls is None:
        if cutoff is None:
            raise DomainError("build_interval: the group is infinite, a cutoff is required")
        refls = enumerate_reflections(W, cutoff)
    identity = Element(())
    rank_of = {identity: 0, wbar: h}
    if h >= 2:
        atoms = [r.elem for r in refls if absolute_le(W, r.elem, wbar, mode)]
        for t in atoms:
            rank_of[t] = 1
    if h == 3:
        for t, t2 in combinations(atoms, 2):
            for x in (W.product(t, t2), W.product(t2, t)):
                if x not in rank_of and absolute_le(W, x, wbar, mode):
                    rank_of[x] = 2
    covers = set()
    by_rank = {}
    for x, k in rank_of.items():
        by_rank.setdefault(k, []).append(x)
    for k in range(h):
        for x in by_rank.get(k, []):
            for y in by_rank.get(k + 1, []):
                if k == 0 or k + 1 == h or absolute_le(W, x, y, mode):
                    covers.add((x, y))
    if validate and h == 3:
        for x in by_rank.get(2, []):
            below = {a for a, b in covers if b == x}
            direct = {t for t in by_rank.get(1, []) if is_reflection(W, W.product(t, x))}
            if below != direct:
                raise InvariantViolation(
                    f"build_interval: atoms below {W.format_word(x.nf)!r} disagree between "
                    "reflection-length arithmetic and the dihedral criterion")
    shift = (lambda x: x) if u.is_identity() else (lambda x: W.product(u, x))
    rank_of = {shift(x): k for x, k in rank_of.items()}
    covers = {(shift(a), shift(b)) for a, b in covers}
    elements = sorted(rank_of, key=lambda x: (rank_of[x], x.sort_key()))
    return IntervalPoset(shift(identity), shift(wbar), elements, rank_of, covers,
                         complete, None if complete else cutoff)


def meet_join(p: IntervalPoset, a, b, which="join"):
    """Unique minimal upper bound (join) / maximal lower bound (meet), or None."""
    for x in (a, b):
        if x not in p:
            raise DomainError(f"meet_join: {x!r} is not in the poset")
    if which == "join":
        bounds = p.up_set(a) & p.up_set(b)
        best = [x for x in bounds if not any(y != x and p.le(y, x) for y in bounds)]
    elif which == "meet":
        bounds = p.down_set(a) & p.down_set(b)
        best = [x for x in bounds if not any(y != x and p.le(x, y) for y in bounds)]
    else:
        raise DomainError(f"meet_join: which must be 'meet' or 'join', got {which!r}")
    return best[0] if len(best) == 1 else None


def find_bowties(p: IntervalPoset) -> list:
    if p.height != 3:
        raise UnsupportedHeight(f"find_bowties: poset has height {p.height}, expected 3")
    atoms = p.layer(1)
    up = {t: set(p.upper_covers(t)) for t in atoms}
    out = []
    for t1, t2 in combinations(atoms, 2):
        common = sorted(up[t1] & up[t2])
        for w1, w2 in combinations(common, 2):
            out.append(BowtieWitness((t1, t2), (w1, w2)))
    return out


def check_lattice(p: IntervalPoset) -> LatticeReport:
    """Every pair has a meet and a join.

    On a truncated interval the verdict only covers the elements present
    and is labelled as bounded evidence.
    """
    elems = p.elements
    for a, b in combinations(elems, 2):
        for which in ("meet", "join"):
            if meet_join(p, a, b, which) is None:
                return LatticeReport(False, (a, b), which, not p.complete)
    return LatticeReport(True, None, None, not p.complete)


def to_dot(W: CoxeterSystem, p: IntervalPoset, name="interval") -> str:
    """Hasse diagram in Graphviz DOT, one ``rank=same`` group per rank."""
    ids = {x: "n%d" % i for i, x in enumerate(p.elements)}
    lines = ["digraph %s {" % name, "  rankdir=BT;"]
    for k in range(p.height + 1):
        lines.append("  { rank=same;")
        for x in p.layer(k):
            label = W.format_word(x.nf) or "e"
            lines.append('    %s [label="%s"];' % (ids[x], label))
        lines.append("  }")
    for a, b in sorted(p.covers, key=lambda e: (p.elements.index(e[0]), p.elements.index(e[1]))):
        lines.append("  %s -> %s;" % (ids[a], ids[b]))
    lines.append("}")
    return "\n".join(lines) + "\n"
