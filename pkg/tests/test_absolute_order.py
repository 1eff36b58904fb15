from itertools import permutations

import pytest

from coxeter_nc.absolute_order import (
    IntervalPoset,
    UnsupportedHeight,
    build_interval,
    check_lattice,
    find_bowties,
    meet_join,
    to_dot,
)
from coxeter_nc.core import IDENTITY, Element, coxeter_element, dihedral, type_A, type_B, type_H3
from coxeter_nc.errors import DomainError

from conftest import w
from oracles import FiniteCoxeterOracle


def E(W, *letters):
    return W.normal_form(w(*letters))


def bowtie_fixture():
    e, a, b = Element(()), Element((0,)), Element((1,))
    x, y, top = Element((0, 1)), Element((1, 0)), Element((0, 1, 0))
    rank_of = {e: 0, a: 1, b: 1, x: 2, y: 2, top: 3}
    covers = {(e, a), (e, b), (a, x), (a, y), (b, x), (b, y), (x, top), (y, top)}
    elements = sorted(rank_of, key=lambda z: (rank_of[z], z.sort_key()))
    return IntervalPoset(e, top, elements, rank_of, covers, True)


# -- construction --------------------------------------------------------

def test_interval_a2(A2):
    p = build_interval(A2, IDENTITY, E(A2, 1, 2))
    assert len(p) == 5 and p.rank_sizes() == (1, 3, 1)
    assert p.complete


@pytest.mark.parametrize("W, size, ranks", [
    (type_A(3), 14, (1, 6, 6, 1)),
    (type_B(3), 20, (1, 9, 9, 1)),
    (type_H3(), 32, (1, 15, 15, 1)),
], ids=["A3", "B3", "H3"])
def test_noncrossing_counts_against_oracle(W, size, ranks):
    c = coxeter_element(W)
    p = build_interval(W, IDENTITY, c)
    assert len(p) == size and p.rank_sizes() == ranks
    O = FiniteCoxeterOracle(W.bonds)
    brute = O.interval(O.elem(c.nf))
    assert len(brute) == size
    assert {W.normal_form(O.word[x]) for x in brute} == set(p.elements)
    for x, k in brute.items():
        assert p.rank_of[W.normal_form(O.word[x])] == k


@pytest.mark.parametrize("m", range(2, 8))
def test_dihedral_interval(m):
    W = dihedral(m)
    p = build_interval(W, IDENTITY, E(W, 1, 2))
    assert len(p) == m + 2
    assert check_lattice(p).is_lattice


def test_affine_interval_truncation(A2aff):
    c = coxeter_element(A2aff)
    p9 = build_interval(A2aff, IDENTITY, c, cutoff=9)
    p11 = build_interval(A2aff, IDENTITY, c, cutoff=11)
    assert not p9.complete and p9.cutoff == 9
    assert p9.rank_sizes() == (1, 12, 13, 1)
    assert p11.rank_sizes() == (1, 14, 15, 1)
    assert set(p9.layer(1)) < set(p11.layer(1))


def test_infinite_group_needs_cutoff(A2aff):
    with pytest.raises(DomainError):
        build_interval(A2aff, IDENTITY, coxeter_element(A2aff))


def test_build_interval_rejects_incomparable(A3):
    with pytest.raises(DomainError):
        build_interval(A3, E(A3, 1, 3), E(A3, 1, 2))


def test_height_four_rejected():
    W = type_A(4)
    with pytest.raises(UnsupportedHeight):
        build_interval(W, IDENTITY, coxeter_element(W))


# -- meets and joins -----------------------------------------------------

def test_meet_join_examples(A2, A3):
    p = build_interval(A2, IDENTITY, E(A2, 1, 2))
    s1, s2 = E(A2, 1), E(A2, 2)
    assert meet_join(p, s1, s2, "meet") == IDENTITY
    assert meet_join(p, s1, s2, "join") == E(A2, 1, 2)
    q = build_interval(A3, IDENTITY, coxeter_element(A3))
    assert meet_join(q, E(A3, 1), E(A3, 3), "join") == E(A3, 1, 3)
    with pytest.raises(DomainError):
        meet_join(p, s1, E(A2, 1, 2, 1, 2), "join")
    with pytest.raises(DomainError):
        meet_join(p, s1, s2, "sup")


# -- bowties and the lattice audit ---------------------------------------

def test_bowtie_fixture():
    p = bowtie_fixture()
    found = find_bowties(p)
    assert len(found) == 1
    report = check_lattice(p)
    assert not report.is_lattice and report.witness is not None
    a, b = report.witness
    assert meet_join(p, a, b, report.missing) is None


@pytest.mark.parametrize("W", [type_A(3), type_B(3), type_H3()], ids=["A3", "B3", "H3"])
def test_lattice_and_bowtie_free(W):
    p = build_interval(W, IDENTITY, coxeter_element(W))
    assert find_bowties(p) == []
    report = check_lattice(p)
    assert report.is_lattice and not report.bounded_evidence


def test_find_bowties_needs_height_three(A2):
    with pytest.raises(UnsupportedHeight):
        find_bowties(build_interval(A2, IDENTITY, E(A2, 1, 2)))


def test_truncated_verdict_is_bounded_evidence(A2aff):
    p = build_interval(A2aff, IDENTITY, coxeter_element(A2aff), cutoff=9)
    assert find_bowties(p) == []
    report = check_lattice(p)
    assert report.is_lattice and report.bounded_evidence
    assert "bounded evidence" in report.summary()


# -- invariances ---------------------------------------------------------

def test_translation_invariance(A3):
    c = coxeter_element(A3)
    base = build_interval(A3, IDENTITY, c)
    for u in base.elements:
        p = build_interval(A3, u, c)
        q = build_interval(A3, IDENTITY, A3.product(A3.inverse(u), c))
        shifted = {A3.product(u, x): k for x, k in q.rank_of.items()}
        assert p.rank_of == shifted
        assert p.covers == {(A3.product(u, a), A3.product(u, b)) for a, b in q.covers}


@pytest.mark.parametrize("W", [type_A(3), type_B(3)], ids=["A3", "B3"])
def test_conjugation_isomorphism(W):
    c = coxeter_element(W)
    p = build_interval(W, IDENTITY, c)
    for x in W.enumerate_ball():
        conj = lambda y: W.product(x, y, W.inverse(x))
        q = build_interval(W, IDENTITY, conj(c))
        assert {conj(y): k for y, k in p.rank_of.items()} == q.rank_of
        assert {(conj(a), conj(b)) for a, b in p.covers} == q.covers


@pytest.mark.parametrize("W", [type_A(3), type_B(3), type_H3()], ids=["A3", "B3", "H3"])
def test_all_coxeter_elements_same_shape(W):
    shapes = {build_interval(W, IDENTITY, coxeter_element(W, o)).rank_sizes()
              for o in permutations(range(3))}
    assert len(shapes) == 1
    r = shapes.pop()
    assert r[1] == r[2]


# -- DOT -----------------------------------------------------------------

def test_dot_export(A3):
    p = build_interval(A3, IDENTITY, coxeter_element(A3))
    dot = to_dot(A3, p)
    assert dot.startswith("digraph interval {")
    assert dot.count("[label=") == 14
    assert dot.count("->") == len(p.covers)
    assert to_dot(A3, p) == dot
