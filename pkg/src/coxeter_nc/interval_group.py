"""Divisor balance of [1, w]_T and the interval-group presentation.

The presentation has one generator per nonidentity element of the
interval and a relation a b = c for every length-additive product
inside it.  When the interval is a balanced lattice this is the standard
presentation of a quasi-Garside group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .absolute_order import IntervalPoset, UnsupportedHeight, check_lattice, is_finite_group
from .core import INF, CoxeterSystem, Element
from .errors import DomainError
from .reflections import tlen


@dataclass(frozen=True)
class DivisorReport:
    balanced: bool
    left: frozenset
    right: frozenset
    complete: bool


@dataclass(frozen=True)
class Presentation:
    generators: tuple   # Elements, ShortLex sorted; generator i is generators[i]
    relations: tuple    # (i, j, k), 0-based: g_i g_j = g_k
    complete: bool = True

    def serialize(self, W: CoxeterSystem) -> str:
        lines = ["generators: %d" % len(self.generators)]
        for i, g in enumerate(self.generators, start=1):
            lines.append("g%d := %s" % (i, W.format_word(g.nf)))
        lines.append("relations:")
        for i, j, k in self.relations:
            lines.append("g%d g%d = g%d" % (i + 1, j + 1, k + 1))
        return "\n".join(lines) + "\n"


def divisor_balance(W: CoxeterSystem, w: Element, cutoff=None, mode="crosscheck") -> DivisorReport:
    """Compare left and right divisors of w in the absolute order.

    Candidates are the whole group when it is finite, else all elements
    of length <= ``cutoff`` (and the report is marked incomplete).
    """
    h = tlen(W, w, mode)
    if h > 3:
        raise UnsupportedHeight(f"divisor_balance: l_T(w) = {h} > 3 is not supported")
    if is_finite_group(W):
        candidates, complete = W.enumerate_ball(INF), True
    else:
        if cutoff is None:
            raise DomainError("divisor_balance: the group is infinite, a cutoff is required")
        candidates, complete = W.enumerate_ball(cutoff), False
    left, right = set(), set()
    for u in candidates:
        lu = tlen(W, u, mode)
        if lu > h:
            continue
        inv = W.inverse(u)
        if lu + tlen(W, W.product(inv, w), mode) == h:
            left.add(u)
        if tlen(W, W.product(w, inv), mode) + lu == h:
            right.add(u)
    return DivisorReport(left == right, frozenset(left), frozenset(right), complete)


def emit_presentation(W: CoxeterSystem, p: IntervalPoset, allow_truncated=False) -> Presentation:
    if not p.bottom.is_identity():
        raise DomainError("emit_presentation: interval must start at the identity")
    if not p.complete and not allow_truncated:
        raise DomainError("emit_presentation: interval is truncated; refusing to present it as complete")
    report = check_lattice(p)
    if not report.is_lattice:
        a, b = report.witness
        raise DomainError(
            f"emit_presentation: not a lattice, no {report.missing} for "
            f"{W.format_word(a.nf)!r} and {W.format_word(b.nf)!r}")
    gens = sorted(x for x in p.elements if not x.is_identity())
    index = {g: i for i, g in enumerate(gens)}
    rels = []
    for i, a in enumerate(gens):
        for j, b in enumerate(gens):
            c = W.product(a, b)
            k = index.get(c)
            if k is not None and p.rank_of[a] + p.rank_of[b] == p.rank_of[c]:
                rels.append((i, j, k))
    return Presentation(tuple(gens), tuple(rels), p.complete)


def atom_chain(W: CoxeterSystem, p: IntervalPoset, x: Element) -> list:
    """Atoms t_1, ..., t_r with x = t_1 ... t_r read off a maximal chain of [1, x]."""
    chain = [x]
    while not chain[-1].is_identity():
        below = p.lower_covers(chain[-1])
        if not below:
            raise DomainError(f"atom_chain: {W.format_word(chain[-1].nf)!r} has no lower cover")
        chain.append(below[0])
    chain.reverse()
    return [W.product(W.inverse(a), b) for a, b in zip(chain, chain[1:])]
