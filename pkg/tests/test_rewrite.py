"""Rule construction, normal forms, bounded reduction, PBW enumeration,
dimension and word counts, and the oracle cross-checks."""

import random

import pytest

from pbw.algebra import NCPoly
from pbw.criterion import bracket_table
from pbw.oracle import quotient_rank
from pbw.presets import build_preset
from pbw.rewrite import (
    build_rules,
    dimension,
    hilbert,
    is_irreducible_word,
    normal_form,
    pbw_monomials,
    pbw_words,
    prec_diamond_cmp,
    reduce_bounded,
)
from pbw.words import prec_cmp, xlen


def rules_for(name, **kw):
    p = build_preset(name, **kw)
    return p, build_rules(p.datum, bracket_table(p.datum))


def test_build_rules_examples():
    _, rs = rules_for("quantum_plane")
    assert list(rs.pair_rhs) == [((1,), (2,))]
    assert not rs.power_rhs
    d = rs.datum
    assert rs.pair_rhs[((1,), (2,))] == d.monomial(((2,), (1,))).scale(d.q_uv((1,), (2,)))

    _, rs = rules_for("taft")
    assert not rs.pair_rhs
    assert rs.power_rhs[(1,)].is_zero()

    _, rs = rules_for("lifting_a2_1a")
    assert sorted(rs.pair_rhs) == [((1,), (1, 2)), ((1,), (2,)), ((1, 2), (2,))]
    assert sorted(rs.power_rhs) == [(1,), (1, 2), (2,)]


def test_build_rules_rejects_incompatible_rhs():
    p = build_preset("quantum_plane")
    d = p.datum
    bad_table = {((1,), (2,)): d.monomial(((1,), (2,)))}  # the lhs itself
    with pytest.raises(ValueError):
        build_rules(d, bad_table)


def test_prec_diamond_examples():
    g, h = (0,), (1,)
    assert prec_diamond_cmp((((2,), (1,)), g), (((1,), (2,)), h)) < 0
    assert prec_diamond_cmp((((1,),), g), (((1,), (2,)), h)) < 0  # shorter
    assert prec_diamond_cmp((((1, 2),), g), (((1, 2),), h)) == 0  # group part ignored


def test_normal_form_examples():
    p, rs = rules_for("nichols_a1", N=3)
    d = p.datum
    x = d.letter((1,))
    assert normal_form(rs, d.mul_many(x, x, x)).is_zero()

    p, rs = rules_for("radford", N=2)
    d = p.datum
    x = d.letter((1,))
    nf = normal_form(rs, d.mul(x, x))
    assert nf == d.unit() - d.group_like(d.group.element((2,)))

    p, rs = rules_for("quantum_plane")
    d = p.datum
    nf = normal_form(rs, d.mul(d.letter((1,)), d.letter((2,))))
    assert nf == d.monomial(((2,), (1,))).scale(d.q_uv((1,), (2,)))

    p, rs = rules_for("weyl")
    d = p.datum
    nf = normal_form(rs, d.mul(d.letter((1,)), d.letter((2,))))
    assert nf == d.monomial(((2,), (1,))) + d.unit()


def test_normal_form_is_idempotent():
    p, rs = rules_for("uq_sl2")
    d = p.datum
    rng = random.Random(61)
    letters = list(d.L)
    for _ in range(25):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(0, 5)))
        a = d.monomial(word, (rng.randrange(3),), d.field.root(rng.randrange(3)))
        nf = normal_form(rs, a)
        assert normal_form(rs, nf) == nf


def test_rewrite_steps_strictly_decrease():
    p, rs = rules_for("lifting_a2_2b")
    d = p.datum
    rng = random.Random(67)
    letters = list(d.L)
    for _ in range(40):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(1, 5)))
        site = rs.find_site(word)
        if site is None:
            continue
        repl = rs.rewrite_at(word, d.group.identity(), site)
        for U, _g in repl.terms:
            assert prec_cmp(U, word) < 0


def test_normal_form_multiplicative_on_confluent_system():
    p, rs = rules_for("lifting_a2_4a")
    d = p.datum
    rng = random.Random(71)
    letters = list(d.L)
    for _ in range(15):
        a = d.monomial(tuple(rng.choice(letters) for _ in range(rng.randint(0, 3))), (rng.randrange(12),))
        b = d.monomial(tuple(rng.choice(letters) for _ in range(rng.randint(0, 3))), (rng.randrange(12),))
        assert normal_form(rs, d.mul(a, b)) == normal_form(rs, d.mul(normal_form(rs, a), normal_form(rs, b)))


def test_reduce_bounded():
    p, rs = rules_for("uq_sl2")
    d = p.datum
    assert reduce_bounded(rs, NCPoly.zero(), ((1,), (2,))).is_zero()
    # a rule element placed below the bound reduces to zero
    elem = d.monomial(((1,), (2,))) - rs.pair_rhs[((1,), (2,))]
    assert reduce_bounded(rs, elem, ((1,), (2,), (2,))).is_zero()
    # sites at or beyond the bound are left alone
    blocked = reduce_bounded(rs, d.monomial(((1,), (2,))), ((1,), (2,)))
    assert blocked == d.monomial(((1,), (2,)))


def test_pbw_words_match_irreducibility():
    p, rs = rules_for("uq_sl2")
    letters = sorted(rs.datum.L)
    produced = set(pbw_words(rs, 8))

    frontier = [()]
    everything = [()]
    while frontier:
        frontier = [w + (l,) for w in frontier for l in letters if xlen(w) + len(l) <= 8]
        everything.extend(frontier)
    expected = {w for w in everything if is_irreducible_word(rs, w)}
    assert produced == expected


def test_pbw_monomials_carry_every_group_element():
    p, rs = rules_for("taft", N=2)
    monos = list(pbw_monomials(rs))
    assert len(monos) == 4
    assert {g for _w, g in monos} == {(0,), (1,)}


def test_dimension_examples():
    for name, kw, expected in [
        ("taft", {"N": 3}, 9),
        ("uq_sl2", {"N": 3}, 27),
        ("quantum_plane", {}, None),
    ]:
        _, rs = rules_for(name, **kw)
        assert dimension(rs) == expected


def test_hilbert_quantum_plane():
    _, rs = rules_for("quantum_plane")
    assert hilbert(rs, 5) == [1, 2, 3, 4, 5, 6]


def test_hilbert_counts_irreducible_words_by_length():
    for name in ("uq_sl2", "lifting_a2_2b", "b2_scaffold"):
        _, rs = rules_for(name)
        coeffs = hilbert(rs, 6)
        counted = [0] * 7
        for w in pbw_words(rs, 6):
            counted[xlen(w)] += 1
        assert coeffs == counted


def test_oracle_matches_pbw_count_on_finite_presets():
    cases = [
        ("taft", {"N": 2}), ("taft", {"N": 3}), ("taft", {"N": 4}),
        ("radford", {"N": 2}), ("radford", {"N": 3}),
        ("book", {}), ("uq_sl2", {"N": 3}),
        ("nichols_a1xa1", {}), ("lifting_a1xa1", {"N": 2}),
    ]
    for name, kw in cases:
        p, rs = rules_for(name, **kw)
        count = dimension(rs)
        assert count == p.expected_dimension
        assert count <= 200
        assert quotient_rank(p.datum) == count, name
