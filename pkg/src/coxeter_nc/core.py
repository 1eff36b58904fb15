"""Coxeter systems and the word problem by braid moves.

Elements are stored by their ShortLex-least reduced word.  Equality of
group elements is decided with Tits' theorem: two reduced words represent
the same element iff they are connected by braid moves, and a word is
reduced iff no word in its braid closure has two equal adjacent letters.
No root system or matrix representation is used anywhere.

Generators are 0-based internally.  Files and the command line use
1-based indices (or declared names); see :func:`parse_word`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, DomainError, ParseError

INF = math.inf

DEFAULT_MAX_CLOSURE = 10**6
DEFAULT_MAX_BALL = 10**5

Word = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class Element:
    """A group element, identified by its ShortLex normal form."""

    nf: tuple

    @property
    def length(self) -> int:
        return len(self.nf)

    def __len__(self):
        return len(self.nf)

    def sort_key(self):
        return (len(self.nf), self.nf)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def is_identity(self):
        return not self.nf

    def __repr__(self):
        return "Element(%s)" % (list(self.nf),)


IDENTITY = Element(())


def shortlex_key(word):
    return (len(word), tuple(word))


def has_adjacent_repeat(word) -> bool:
    return any(word[i] == word[i + 1] for i in range(len(word) - 1))


class CoxeterSystem:
    """A Coxeter system (W, S) given by its bond matrix.

    ``bonds[i][j]`` is the order of ``s_i s_j``; ``math.inf`` marks an
    infinite bond.  The instance owns the memo tables for braid closures
    and multiplication by generators; they are only ever filled with
    deterministic values, so sharing an instance between threads cannot
    change any result.
    """

    def __init__(self, bonds, names=None, *, max_closure=DEFAULT_MAX_CLOSURE,
                 max_ball=DEFAULT_MAX_BALL):
        bonds = [[INF if b == INF else int(b) for b in row] for row in bonds]
        n = len(bonds)
        if n < 1:
            raise DomainError("a Coxeter system needs rank >= 1")
        for i, row in enumerate(bonds):
            if len(row) != n:
                raise DomainError(f"bond matrix row {i + 1} has {len(row)} entries, expected {n}")
        for i in range(n):
            if bonds[i][i] != 1:
                raise DomainError(f"diagonal bond at ({i + 1}, {i + 1}) must be 1")
            for j in range(n):
                if i == j:
                    continue
                if bonds[i][j] != bonds[j][i]:
                    raise DomainError(f"bond matrix not symmetric at ({i + 1}, {j + 1})")
                if bonds[i][j] < 2:
                    raise DomainError(f"off-diagonal bond at ({i + 1}, {j + 1}) must be >= 2 or infinite")
        if names is not None:
            names = [str(x) for x in names]
            if len(names) != n:
                raise DomainError(f"expected {n} generator names, got {len(names)}")
            if len(set(names)) != n:
                raise DomainError("generator names must be distinct")
        self.rank = n
        self.bonds = tuple(tuple(row) for row in bonds)
        self.names = tuple(names) if names is not None else None
        self.max_closure = max_closure
        self.max_ball = max_ball

        # finite bonds only; an infinite bond admits no braid move
        self._alt = {}
        for a in range(n):
            for b in range(n):
                m = self.bonds[a][b]
                if a != b and m != INF:
                    self._alt[a, b] = (m, tuple(a if k % 2 == 0 else b for k in range(m)))

        self._closure = {}      # nf -> frozenset of reduced words
        self._word_memo = {}    # arbitrary word -> Element
        # descent engine: nf -> left descent set, and (s, nf) -> s*x
        self._ldesc = {(): frozenset()}
        self._lmul = {}
        self._inv = {}          # nf -> Element
        # per-system memo tables for the modules built on top of this one
        self.memo = {}

    def __repr__(self):
        return "CoxeterSystem(rank=%d, bonds=%r)" % (self.rank, self.bonds)

    def __eq__(self, other):
        return (isinstance(other, CoxeterSystem) and self.bonds == other.bonds
                and self.names == other.names)

    def __hash__(self):
        return hash((self.bonds, self.names))

    @property
    def generators(self):
        return [Element((s,)) for s in range(self.rank)]

    def bond(self, s, t):
        return self.bonds[s][t]

    def is_finite_type_dihedral(self):
        return self.rank == 2 and self.bonds[0][1] != INF

    # -- words ---------------------------------------------------------

    def check_word(self, word) -> tuple:
        word = tuple(word)
        for x in word:
            if not isinstance(x, int) or not 0 <= x < self.rank:
                raise DomainError(f"letter {x!r} is not a generator index in [0, {self.rank})")
        return word

    def label(self, s: int) -> str:
        return self.names[s] if self.names else str(s + 1)

    def format_word(self, word) -> str:
        return " ".join(self.label(s) for s in word)

    def _braid_neighbours(self, word):
        n = len(word)
        for i in range(n - 1):
            a, b = word[i], word[i + 1]
            if a == b:
                continue
            entry = self._alt.get((a, b))
            if entry is None:
                continue
            m, pattern = entry
            if i + m > n or word[i:i + m] != pattern:
                continue
            yield word[:i] + self._alt[b, a][1] + word[i + m:]

    def braid_closure(self, word) -> frozenset:
        """All words reachable from ``word`` by braid moves."""
        word = self.check_word(word)
        seen = {word}
        queue = deque([word])
        while queue:
            w = queue.popleft()
            for v in self._braid_neighbours(w):
                if v not in seen:
                    seen.add(v)
                    if len(seen) > self.max_closure:
                        raise CapExceeded(
                            f"braid_closure: closure of {self.format_word(word)!r} "
                            f"exceeds {self.max_closure} words")
                    queue.append(v)
        return frozenset(seen)

    def reduced_expressions(self, a: Element) -> frozenset:
        """The set of all reduced words of ``a`` (its braid closure)."""
        closure = self._closure.get(a.nf)
        if closure is None:
            closure = self.braid_closure(a.nf)
            self._closure[a.nf] = closure
        return closure

    # -- multiplication ------------------------------------------------
    #
    # Left multiplication runs on left descent sets.  For z = s*y with
    # l(z) = l(y) + 1 and t != s, t is a left descent of z iff m(s, t) is
    # finite and y has a reduced word starting with the alternating word
    # t s t ... of length m(s, t) - 1 (both s and t are descents exactly
    # when z starts with the longest element of <s, t>).  ShortLex normal
    # forms follow from nf(x) = a . nf(a*x) with a = min left descent.

    def _check_element(self, a: Element) -> frozenset:
        desc = self._ldesc.get(a.nf)
        if desc is None:
            if self.normal_form(a.nf) != a:
                raise DomainError(f"{list(a.nf)} is not a ShortLex normal form in this system")
            desc = self._ldesc[a.nf]
        return desc

    def left_descents(self, a: Element) -> frozenset:
        return self._check_element(a)

    def _has_alternating_prefix(self, y: Element, first: int, other: int, k: int) -> bool:
        letters = (first, other)
        for i in range(k):
            s = letters[i % 2]
            if s not in self._ldesc[y.nf]:
                return False
            y = self.lmul(s, y)
        return True

    def lmul(self, s: int, x: Element) -> Element:
        """Return s_s * x."""
        key = (s, x.nf)
        res = self._lmul.get(key)
        if res is not None:
            return res
        if s in self._check_element(x):
            res = self._descend(s, x.nf[0], Element(x.nf[1:]))
        else:
            res = self._up(s, x)
        self._lmul[key] = res
        return res

    def _descend(self, t: int, a: int, ax: Element) -> Element:
        """t*x for a left descent t of x, given another descent a and a*x.

        With both a and t descents, x = w0(a, t) * x'' reduced, where
        a*x = (t a t ...)_{m-1} x''; then t*x = (a t a ...)_{m-1} x''.
        """
        if t == a:
            return ax
        m = self._alt[a, t][0]
        rest = ax
        for i in range(m - 1):
            rest = self.lmul((t, a)[i % 2], rest)
        for i in reversed(range(m - 1)):
            rest = self.lmul((a, t)[i % 2], rest)
        return rest

    def _up(self, s: int, y: Element) -> Element:
        desc = {s}
        for t in range(self.rank):
            if t == s:
                continue
            entry = self._alt.get((s, t))
            if entry is not None and self._has_alternating_prefix(y, t, s, entry[0] - 1):
                desc.add(t)
        a = min(desc)
        if a == s:
            nf = (s,) + y.nf
        else:
            nf = (a,) + self._descend(a, s, y).nf
        z = Element(nf)
        if nf not in self._ldesc:
            self._ldesc[nf] = frozenset(desc)
        self._lmul[s, nf] = y
        return z

    def delete_letter(self, a: Element, i: int) -> Element:
        """Element of nf(a) with its i-th letter removed.

        Suffixes of a ShortLex normal form are normal forms, so only the
        prefix has to be multiplied back on.
        """
        word = a.nf
        res = Element(word[i + 1:])
        for s in reversed(word[:i]):
            res = self.lmul(s, res)
        return res

    def mul_gen(self, a: Element, s: int) -> Element:
        """Return a * s_s."""
        return self.product(a, Element((s,)))

    def normal_form(self, word) -> Element:
        word = self.check_word(word)
        elem = self._word_memo.get(word)
        if elem is not None:
            return elem
        elem = IDENTITY
        for s in reversed(word):
            elem = self.lmul(s, elem)
        self._word_memo[word] = elem
        return elem

    def tits_normal_form(self, word) -> Element:
        """Normal form by literal Tits reduction.

        Take the braid closure; if some member has an adjacent equal pair,
        delete it and start again; otherwise return the ShortLex minimum.
        Slower than :meth:`normal_form`, kept as an independent route.
        """
        word = self.check_word(word)
        while True:
            closure = self.braid_closure(word)
            for w in sorted(closure):
                hit = next((i for i in range(len(w) - 1) if w[i] == w[i + 1]), None)
                if hit is not None:
                    word = w[:hit] + w[hit + 2:]
                    break
            else:
                return Element(min(closure))

    def is_reduced(self, word) -> bool:
        word = self.check_word(word)
        return self.normal_form(word).length == len(word)

    def element(self, word) -> Element:
        return self.normal_form(word)

    def product(self, *elems: Element) -> Element:
        res = IDENTITY
        for e in reversed(elems):
            for s in reversed(e.nf):
                res = self.lmul(s, res)
        return res

    def inverse(self, a: Element) -> Element:
        res = self._inv.get(a.nf)
        if res is None:
            res = IDENTITY
            for s in a.nf:
                res = self.lmul(s, res)
            self._inv[a.nf] = res
            self._inv.setdefault(res.nf, a)
        return res

    def conjugate(self, w: Element, x: Element) -> Element:
        """w x w^-1"""
        return self.product(w, x, self.inverse(w))

    def right_descents(self, a: Element) -> frozenset:
        return self.left_descents(self.inverse(a))

    # -- enumeration ---------------------------------------------------

    def enumerate_ball(self, radius=INF, max_elements=None) -> list:
        """All elements of length <= radius, sorted ShortLex.

        ``radius=INF`` returns the whole group when it is finite; an
        infinite group trips the element cap instead of hanging.
        """
        if radius != INF and (radius < 0 or int(radius) != radius):
            raise DomainError(f"enumerate_ball: radius must be a nonnegative integer, got {radius!r}")
        cap = self.max_ball if max_elements is None else max_elements
        out = [IDENTITY]
        layer = [IDENTITY]
        k = 0
        while layer and k < radius:
            nxt = set()
            for x in layer:
                for s in range(self.rank):
                    if s not in self._ldesc[x.nf]:
                        nxt.add(self.lmul(s, x))
            layer = sorted(nxt)
            out.extend(layer)
            if len(out) > cap:
                raise CapExceeded(
                    f"enumerate_ball: more than {cap} elements within radius {radius}; "
                    "the group is (or may be) infinite")
            k += 1
        return out

    def order(self, max_elements=None) -> int:
        return len(self.enumerate_ball(INF, max_elements))


# -- parsing -----------------------------------------------------------

def _significant_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_coxeter_matrix(text: str, **caps) -> CoxeterSystem:
    """Parse the plain-text Coxeter matrix format.

    First significant line is the rank n, followed by n rows of n
    integers (0 meaning infinity), optionally followed by
    ``names: a b c``.  Lines starting with ``#`` are ignored.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError("empty Coxeter matrix file")
    _, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"rank line {head!r} is not an integer", row=0) from None
    if n < 1:
        raise ParseError(f"rank must be >= 1, got {n}", row=0)
    rows = lines[1:1 + n]
    if len(rows) < n:
        raise ParseError(f"rank mismatch: expected {n} matrix rows, found {len(rows)}")
    matrix = []
    for i, (_, line) in enumerate(rows, start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"rank mismatch: expected {n} entries, found {len(tokens)}", row=i)
        row = []
        for j, tok in enumerate(tokens, start=1):
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"malformed integer {tok!r}", row=i, col=j) from None
            if v < 0:
                raise ParseError(f"negative entry {v}", row=i, col=j)
            row.append(v)
        matrix.append(row)
    for i in range(n):
        if matrix[i][i] != 1:
            raise ParseError(f"diagonal entry must be 1, got {matrix[i][i]}", row=i + 1, col=i + 1)
        for j in range(n):
            if i == j:
                continue
            if matrix[i][j] == 1:
                raise ParseError("off-diagonal entry 1 is not allowed", row=i + 1, col=j + 1)
            if matrix[i][j] != matrix[j][i]:
                raise ParseError(
                    f"matrix not symmetric: {matrix[i][j]} vs {matrix[j][i]}", row=i + 1, col=j + 1)
    names = None
    rest = lines[1 + n:]
    if rest:
        lineno, line = rest[0]
        if len(rest) > 1 or not line.startswith("names:"):
            raise ParseError(f"unexpected trailing content on line {lineno}: {line!r}")
        names = line[len("names:"):].split()
        if len(names) != n:
            raise ParseError(f"rank mismatch: expected {n} names, found {len(names)}")
        if len(set(names)) != n:
            raise ParseError("generator names must be distinct")
    bonds = [[INF if v == 0 else v for v in row] for row in matrix]
    return CoxeterSystem(bonds, names, **caps)


def format_coxeter_matrix(sys: CoxeterSystem) -> str:
    lines = [str(sys.rank)]
    for row in sys.bonds:
        lines.append(" ".join("0" if b == INF else str(b) for b in row))
    if sys.names:
        lines.append("names: " + " ".join(sys.names))
    return "\n".join(lines) + "\n"


def parse_word(sys: CoxeterSystem, text: str) -> tuple:
    """Whitespace-separated 1-based indices or declared names -> 0-based word."""
    word = []
    for tok in text.split():
        if sys.names and tok in sys.names:
            word.append(sys.names.index(tok))
            continue
        try:
            k = int(tok)
        except ValueError:
            raise ParseError(f"unknown generator {tok!r}") from None
        if not 1 <= k <= sys.rank:
            raise ParseError(f"generator index {k} out of range 1..{sys.rank}")
        word.append(k - 1)
    return tuple(word)


# -- standard systems --------------------------------------------------

def _from_edges(n, edges, default=2):
    m = [[1 if i == j else default for j in range(n)] for i in range(n)]
    for i, j, v in edges:
        m[i][j] = m[j][i] = v
    return m


def type_A(n, **caps) -> CoxeterSystem:
    return CoxeterSystem(_from_edges(n, [(i, i + 1, 3) for i in range(n - 1)]), **caps)


def type_B(n, **caps) -> CoxeterSystem:
    edges = [(i, i + 1, 3) for i in range(n - 2)] + [(n - 2, n - 1, 4)]
    return CoxeterSystem(_from_edges(n, edges), **caps)


def type_H3(**caps) -> CoxeterSystem:
    return CoxeterSystem(_from_edges(3, [(0, 1, 5), (1, 2, 3)]), **caps)


def dihedral(m, **caps) -> CoxeterSystem:
    """I_2(m); pass ``math.inf`` for the infinite dihedral group."""
    return CoxeterSystem(_from_edges(2, [(0, 1, m)]), **caps)


def affine_A2(**caps) -> CoxeterSystem:
    return CoxeterSystem(_from_edges(3, [(0, 1, 3), (1, 2, 3), (0, 2, 3)]), **caps)


def triangle(p, q, r, **caps) -> CoxeterSystem:
    return CoxeterSystem(_from_edges(3, [(0, 1, p), (1, 2, q), (0, 2, r)]), **caps)


def coxeter_element(sys: CoxeterSystem, order: Sequence[int] | None = None) -> Element:
    order = range(sys.rank) if order is None else order
    if sorted(order) != list(range(sys.rank)):
        raise DomainError(f"a Coxeter element uses each generator exactly once, got {list(order)}")
    return sys.normal_form(tuple(order))


def words_of_elements(elems: Iterable[Element]):
    return [e.nf for e in elems]
