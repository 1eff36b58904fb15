"""Reflections, inversion sets, reflection length and the absolute order.

A reflection is certified by a palindromic reduced word: if
``t_1 ... t_{2n+1}`` is any reduced word of a reflection, then the word
``t_1 ... t_{n+1} t_n ... t_1`` is a reduced word of the same element.
Testing an odd-length element therefore costs one normal-form comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import IDENTITY, CoxeterSystem, Element
from .errors import DomainError, InvariantViolation

MODES = ("recursive", "oracle", "crosscheck")


class NotReducedError(DomainError):
    pass


class EvenLengthError(DomainError):
    pass


class NotAReflectionError(DomainError):
    pass


@dataclass(frozen=True)
class Reflection:
    """An element of T together with a palindromic reduced word for it."""

    elem: Element
    palindrome: tuple = field(compare=False)

    @property
    def length(self):
        return self.elem.length

    @property
    def nf(self):
        return self.elem.nf

    def __lt__(self, other):
        return self.elem < other.elem

    def __repr__(self):
        return "Reflection(%s)" % (list(self.elem.nf),)


@dataclass(frozen=True)
class InversionSet:
    owner: Element
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, r):
        return r in self.members

    def __iter__(self):
        return iter(sorted(self.members))


@dataclass(frozen=True)
class TLengthResult:
    value: int
    witness: tuple
    mode: str
    bound: int | None = None


def _fold(word):
    n = len(word) // 2
    return tuple(word[:n + 1]) + tuple(reversed(word[:n]))


def as_reflection(W: CoxeterSystem, a: Element):
    """Return a :class:`Reflection` for ``a`` if it lies in T, else None."""
    cache = W.memo.setdefault("reflection", {})
    if a.nf in cache:
        return cache[a.nf]
    res = None
    if a.length % 2 == 1:
        pal = _fold(a.nf)
        if W.normal_form(pal) == a:
            res = Reflection(a, pal)
    cache[a.nf] = res
    return res


def is_reflection(W: CoxeterSystem, a: Element) -> bool:
    return as_reflection(W, a) is not None


def palindromize(W: CoxeterSystem, word) -> tuple:
    """Fold a reduced word of a reflection into a palindromic one."""
    word = W.check_word(word)
    if len(word) % 2 == 0:
        raise EvenLengthError(f"palindromize: word {W.format_word(word)!r} has even length")
    if not W.is_reduced(word):
        raise NotReducedError(f"palindromize: word {W.format_word(word)!r} is not reduced")
    pal = _fold(word)
    if W.normal_form(pal) != W.normal_form(word):
        raise NotAReflectionError(f"palindromize: {W.format_word(word)!r} is not a reflection")
    return pal


def reflection_from_word(W: CoxeterSystem, word) -> Reflection:
    r = as_reflection(W, W.normal_form(word))
    if r is None:
        raise NotAReflectionError(f"{W.format_word(word)!r} is not a reflection")
    return r


def enumerate_reflections(W: CoxeterSystem, max_len) -> list:
    """All reflections t with l(t) <= max_len, sorted ShortLex.

    Breadth-first conjugation closure of S: every reflection of length
    2k+1 is s t' s for a reflection t' of length 2k-1, so pruning by
    length loses nothing.
    """
    if max_len < 1:
        raise DomainError(f"enumerate_reflections: max_len must be >= 1, got {max_len}")
    cache = W.memo.setdefault("reflections", {})
    if max_len in cache:
        return cache[max_len]
    found = {g: Reflection(g, g.nf) for g in W.generators}
    frontier = list(found.values())
    while frontier:
        nxt = []
        for r in frontier:
            for s in range(W.rank):
                g = Element((s,))
                u = W.product(g, r.elem, g)
                if u.length <= max_len and u not in found:
                    if u.length == r.length + 2:
                        ref = Reflection(u, (s,) + r.palindrome + (s,))
                    else:
                        ref = as_reflection(W, u)
                    found[u] = ref
                    nxt.append(ref)
                    if len(found) > W.max_ball:
                        from .errors import CapExceeded
                        raise CapExceeded(
                            f"enumerate_reflections: more than {W.max_ball} reflections "
                            f"of length <= {max_len}")
        frontier = nxt
    out = sorted(found.values())
    cache[max_len] = out
    return out


def prefix_reflections(W: CoxeterSystem, word) -> list:
    """t_i = s_1 ... s_i ... s_1 for each position of a word."""
    out = []
    for i in range(len(word)):
        pal = tuple(word[:i + 1]) + tuple(reversed(word[:i]))
        out.append(Reflection(W.normal_form(pal), pal))
    return out


def inversion_set(W: CoxeterSystem, a: Element, word=None) -> InversionSet:
    """Left inversions of ``a`` built from ``word`` (default: its normal form).

    The result does not depend on which reduced word is used.
    """
    word = a.nf if word is None else W.check_word(word)
    if word != a.nf and W.normal_form(word) != a:
        raise DomainError(f"inversion_set: {W.format_word(word)!r} is not a word for {a!r}")
    if len(word) != a.length:
        raise NotReducedError(f"inversion_set: {W.format_word(word)!r} is not reduced")
    return InversionSet(a, frozenset(prefix_reflections(W, word)))


# -- reflection length ---------------------------------------------------

def _recursive(W, a):
    """1 + min over left inversions t of l_T(t a), evaluated by deepening.

    Left multiplication by the i-th prefix reflection deletes the i-th
    letter of the normal form.  Asking "is l_T(x) <= k?" for increasing
    k (same parity as l(x)) visits far fewer subwords than computing the
    full minimum at every node.
    """
    exact = W.memo.setdefault("tlen_rec", {(): (0, ())})
    hit = exact.get(a.nf)
    if hit is not None:
        return hit
    fails = W.memo.setdefault("tlen_rec_fail", {})  # nf -> largest k known to fail

    def within(x, k):
        known = exact.get(x.nf)
        if known is not None:
            return known[1] if known[0] <= k else None
        if fails.get(x.nf, -1) >= k or k < x.length % 2:
            return None
        if x.length % 2:
            r = as_reflection(W, x)
            if r is not None:
                exact[x.nf] = (1, (r.palindrome,))
                return exact[x.nf][1]
            if k == 1:
                fails[x.nf] = 1
                return None
        word = x.nf
        for i in range(len(word)):
            rest = within(W.delete_letter(x, i), k - 1)
            if rest is not None:
                return (word[:i + 1] + tuple(reversed(word[:i])),) + rest
        fails[x.nf] = max(fails.get(x.nf, -1), k)
        return None

    k = a.length % 2
    while True:
        found = within(a, k)
        if found is not None:
            exact[a.nf] = (len(found), found)
            return exact[a.nf]
        k += 2


def _oracle(W, a, bound):
    """Least k with a a product of k reflections of length <= bound.

    Iterative deepening, stepping k by 2 from l(a) mod 2 since the sign
    character forces l_T(a) = l(a) mod 2.  Always terminates by
    k = l(a): the letters of nf(a) are such a factorization.
    """
    refls = enumerate_reflections(W, bound)
    by_elem = {r.elem: r for r in refls}
    failed = W.memo.setdefault(("tlen_oracle_fail", bound), set())

    def search(x, k):
        if k == 0:
            return () if x.is_identity() else None
        if k == 1:
            r = by_elem.get(x)
            return (r,) if r is not None else None
        if (x.nf, k) in failed:
            return None
        for r in refls:
            rest = search(W.product(r.elem, x), k - 1)
            if rest is not None:
                return (r,) + rest
        failed.add((x.nf, k))
        return None

    k = a.length % 2
    while True:
        found = search(a, k)
        if found is not None:
            return found
        k += 2


def reflection_length(W: CoxeterSystem, a: Element, mode="crosscheck", bound=None) -> TLengthResult:
    """l_T(a), the least number of reflections with product a.

    ``recursive`` deletes one letter of the normal form at a time (each
    deletion is left multiplication by an inversion) and memoizes.
    ``oracle`` searches products of reflections of length <= ``bound``
    (default 2 l(a) - 1).  ``crosscheck`` runs both and raises
    :class:`InvariantViolation` if they disagree.
    """
    if mode not in MODES:
        raise DomainError(f"reflection_length: unknown mode {mode!r}")
    W._check_element(a)
    if bound is None:
        bound = max(1, 2 * a.length - 1)
    rec = orc = None
    if mode in ("recursive", "crosscheck"):
        value, pals = _recursive(W, a)
        rec = TLengthResult(value, tuple(reflection_from_word(W, p) for p in pals), "recursive")
    if mode in ("oracle", "crosscheck"):
        cache = W.memo.setdefault(("tlen_oracle", bound), {})
        wit = cache.get(a.nf)
        if wit is None:
            wit = cache[a.nf] = _oracle(W, a, bound)
        orc = TLengthResult(len(wit), wit, "oracle", bound)
    if mode == "recursive":
        return rec
    if mode == "oracle":
        return orc
    if rec.value != orc.value:
        raise InvariantViolation(
            f"reflection_length: recursive gives {rec.value} but oracle (bound {bound}) "
            f"gives {orc.value} for {W.format_word(a.nf)!r}")
    return TLengthResult(rec.value, rec.witness, "crosscheck", bound)


def tlen(W: CoxeterSystem, a: Element, mode="crosscheck") -> int:
    return reflection_length(W, a, mode).value


def absolute_le(W: CoxeterSystem, u: Element, v: Element, mode="crosscheck") -> bool:
    """u <=_T v, i.e. l_T(u) + l_T(u^-1 v) = l_T(v)."""
    if u.is_identity() or u == v:
        return True
    rest = W.product(W.inverse(u), v)
    return tlen(W, u, mode) + tlen(W, rest, mode) == tlen(W, v, mode)
