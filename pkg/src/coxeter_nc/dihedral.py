"""Maximal dihedral reflection subgroups.

For w a product of two distinct reflections, R_w is the set of
reflections t with t*w again a reflection.  R_w is the reflection set of
the unique maximal dihedral reflection subgroup W(t, t') containing any
two reflections whose product is w.  Membership is always decided by
that product test; nothing here generates subgroups by closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import CoxeterSystem, Element
from .errors import DomainError, InvariantViolation
from .reflections import (
    Reflection,
    enumerate_reflections,
    inversion_set,
    is_reflection,
    reflection_from_word,
)


class PreconditionError(DomainError):
    """One or more hypotheses of an operation do not hold."""

    def __init__(self, op, failures):
        self.failures = list(failures)
        super().__init__(f"{op}: " + "; ".join(self.failures))


class BoundTooSmall(DomainError):
    pass


@dataclass(frozen=True)
class RankTwoElement:
    elem: Element
    factorization: tuple  # (t, t'), distinct reflections with t*t' = elem


def rank_two(W: CoxeterSystem, t, t_prime) -> RankTwoElement:
    """Package w = t t' for distinct reflections t, t'."""
    t = t if isinstance(t, Reflection) else reflection_from_word(W, t.nf)
    t_prime = t_prime if isinstance(t_prime, Reflection) else reflection_from_word(W, t_prime.nf)
    if t == t_prime:
        raise DomainError(f"rank_two: reflections must be distinct, got {list(t.nf)} twice")
    return RankTwoElement(W.product(t.elem, t_prime.elem), (t, t_prime))


@dataclass
class MaxDihedral:
    """Truncated view of W_w = W(t, t').

    ``known_reflections`` holds exactly the members of R_w of length at
    most ``exhausted_to``; R_w itself may be infinite.
    """

    W: CoxeterSystem = field(repr=False)
    core: RankTwoElement
    known_reflections: set = field(default_factory=set)
    canonical_pair: tuple | None = None
    exhausted_to: int = 0

    def extend(self, max_len):
        if max_len > self.exhausted_to:
            for r in enumerate_reflections(self.W, max_len):
                if r.length > self.exhausted_to and refl_in_max_dihedral(self.W, r, self.core):
                    self.known_reflections.add(r)
            self.exhausted_to = max_len
        return self

    def __contains__(self, x):
        if isinstance(x, Reflection):
            x = x.elem
        return member_max_dihedral(self.W, x, self.core)

    def sorted_reflections(self):
        return sorted(self.known_reflections)


def alternating_exponent(W: CoxeterSystem, w: Element, s: int, t: int) -> int:
    """n >= 1 with (s t)^n a reduced word of w.

    Hypotheses: w' = s w t has l(w) = l(w') + 2, and s w', w' t are
    reflections.  Every failing hypothesis is listed in the error.
    """
    W.check_word((s, t))
    gs, gt = Element((s,)), Element((t,))
    w_prime = W.product(gs, w, gt)
    failures = []
    if w.length != w_prime.length + 2:
        failures.append(f"l(w) = {w.length} but l(s w t) = {w_prime.length}, not l(w) - 2")
    if not is_reflection(W, W.product(gs, w_prime)):
        failures.append("s w' is not a reflection")
    if not is_reflection(W, W.product(w_prime, gt)):
        failures.append("w' t is not a reflection")
    if failures:
        raise PreconditionError("alternating_exponent", failures)
    if s == t:
        raise InvariantViolation("alternating_exponent: hypotheses hold but s == t")
    for n in range(1, w.length // 2 + 1):
        word = (s, t) * n
        if W.normal_form(word) == w:
            if not W.is_reduced(word):
                raise InvariantViolation(f"alternating_exponent: (st)^{n} equals w but is not reduced")
            return n
    raise InvariantViolation(
        f"alternating_exponent: no n <= {w.length // 2} with (st)^n = {W.format_word(w.nf)!r}")


def refl_in_max_dihedral(W: CoxeterSystem, t, w: RankTwoElement) -> bool:
    """t in R_w, i.e. t * w is a reflection."""
    elem = t.elem if isinstance(t, Reflection) else t
    return is_reflection(W, W.product(elem, w.elem))


def member_max_dihedral(W: CoxeterSystem, x: Element, w: RankTwoElement) -> bool:
    if x.is_identity():
        return True
    if is_reflection(W, x):
        return refl_in_max_dihedral(W, x, w)
    # a rotation of W_w times a reflection of W_w is a reflection of W_w
    r = w.factorization[0].elem
    y = W.product(r, x)
    return is_reflection(W, y) and refl_in_max_dihedral(W, y, w)


def enumerate_R_w(W: CoxeterSystem, w: RankTwoElement, max_len: int) -> MaxDihedral:
    if max_len < 1:
        raise DomainError(f"enumerate_R_w: max_len must be >= 1, got {max_len}")
    return MaxDihedral(W, w).extend(max_len)


def max_dihedral(W: CoxeterSystem, t, t_prime, max_len: int) -> MaxDihedral:
    """Handle on W(t, t')."""
    return enumerate_R_w(W, rank_two(W, t, t_prime), max_len)


def dihedral_reflections(W: CoxeterSystem, a: Reflection, b: Reflection, max_count: int) -> list:
    """Reflections (ab)^k a of the subgroup <a, b>, in dihedral-length order.

    Stops early once the list closes up (finite order); otherwise
    returns ``max_count`` of them.
    """
    out, seen = [], set()
    ab, ba = W.product(a.elem, b.elem), W.product(b.elem, a.elem)
    p, q = a.elem, b.elem
    while len(out) < max_count:
        fresh = [x for x in (p, q) if x not in seen]
        if not fresh:
            break
        for x in fresh:
            seen.add(x)
            out.append(x)
        p, q = W.product(ab, p), W.product(ba, q)
    return out[:max_count]


def canonical_pair(W: CoxeterSystem, w, max_len: int) -> tuple:
    """The canonical simple reflections of W_w.

    A reflection r of W_w is canonical iff it is the only reflection of
    W_w among its own left inversions.  Inversions are tested with the
    exact membership criterion, so long inversions beyond ``max_len``
    cannot slip through.
    """
    handle = w if isinstance(w, MaxDihedral) else enumerate_R_w(W, w, max_len)
    handle.extend(max_len)
    known = handle.known_reflections
    if len(known) < 2:
        raise BoundTooSmall(
            f"canonical_pair: only {len(known)} reflections of W_w up to length {max_len}")
    cands = []
    for r in sorted(known):
        inv = inversion_set(W, r.elem)
        if all(q == r or not refl_in_max_dihedral(W, q, handle.core) for q in inv.members):
            cands.append(r)
    if len(cands) != 2:
        raise BoundTooSmall(
            f"canonical_pair: found {len(cands)} canonical candidates up to length {max_len}; "
            "bound too small or inconsistent, retry with a larger max_len")
    r1, r2 = cands
    generated = set(dihedral_reflections(W, r1, r2, 2 * max_len + 2))
    missing = [r for r in known if r.elem not in generated]
    if missing:
        raise InvariantViolation(
            f"canonical_pair: {[list(r.nf) for r in missing]} not generated by the canonical pair")
    handle.canonical_pair = (r1, r2)
    return (r1, r2)


def is_rotation_witness(W: CoxeterSystem, x: Element) -> bool:
    """True if s * x is a reflection for every generator s (and x != 1).

    Such x exist only when the system has rank 2.
    """
    if x.is_identity():
        return False
    return all(is_reflection(W, W.product(g, x)) for g in W.generators)
