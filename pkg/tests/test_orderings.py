"""KBO properties: ground totality, stability, subterm, transitivity."""

import random

from satind.orderings import EQUAL, GREATER, INCOMPARABLE, LESS, KBO
from satind.terms import app, apply_subst, num, subterms, var

from helpers import nat_signature, plain_signature, random_term


def test_subterm_property_suc():
    sig, nat = nat_signature()
    kbo = KBO(sig)
    x = var(0, nat)
    assert kbo.compare(app(sig.symbols["suc"], (x,)), x) == GREATER


def test_paper_multiclause_ordering_fact():
    # add(half(sk), half(sk)) > sk holds for any simplification ordering
    sig, nat = nat_signature()
    kbo = KBO(sig)
    sk = app(sig.fresh_skolem((), nat))
    t = app(sig.symbols["add"],
            (app(sig.symbols["half"], (sk,)), app(sig.symbols["half"], (sk,))))
    assert kbo.compare(t, sk) == GREATER


def test_add_commuted_incomparable():
    # frozen from a direct transcription of the KBO definition: equal weight,
    # equal head, first argument pair x vs y is variable-incomparable
    sig, nat = nat_signature()
    kbo = KBO(sig)
    x, y = var(0, nat), var(1, nat)
    add = sig.symbols["add"]
    assert kbo.compare(app(add, (x, y)), app(add, (y, x))) == INCOMPARABLE


def test_ground_totality_random():
    sig, u = plain_signature()
    kbo = KBO(sig)
    rng = random.Random(23)
    for _ in range(1000):
        s = random_term(rng, sig, u, ground=True)
        t = random_term(rng, sig, u, ground=True)
        assert kbo.compare(s, t) in (GREATER, LESS, EQUAL)


def test_stability_under_substitution_random():
    sig, u = plain_signature()
    kbo = KBO(sig)
    rng = random.Random(29)
    found = 0
    while found < 1000:
        s = random_term(rng, sig, u)
        t = random_term(rng, sig, u)
        if kbo.compare(s, t) != GREATER:
            continue
        sub = {v: random_term(rng, sig, u, depth=2) for v in range(3)}
        assert kbo.compare(apply_subst(s, sub), apply_subst(t, sub)) == GREATER
        found += 1


def test_subterm_property_random():
    sig, u = plain_signature()
    kbo = KBO(sig)
    rng = random.Random(31)
    for _ in range(400):
        t = random_term(rng, sig, u)
        for pos, s in subterms(t):
            if pos:
                assert kbo.compare(t, s) == GREATER


def test_transitivity_ground_random():
    sig, u = plain_signature()
    kbo = KBO(sig)
    rng = random.Random(37)
    for _ in range(300):
        a = random_term(rng, sig, u, ground=True)
        b = random_term(rng, sig, u, ground=True)
        c = random_term(rng, sig, u, ground=True)
        if kbo.compare(a, b) == GREATER and kbo.compare(b, c) == GREATER:
            assert kbo.compare(a, c) == GREATER


def test_irreflexive_and_antisymmetric():
    sig, u = plain_signature()
    kbo = KBO(sig)
    rng = random.Random(41)
    for _ in range(300):
        s = random_term(rng, sig, u)
        t = random_term(rng, sig, u)
        assert kbo.compare(s, s) == EQUAL
        if kbo.compare(s, t) == GREATER:
            assert kbo.compare(t, s) == LESS


def test_numerals_by_magnitude():
    sig, _ = plain_signature()
    kbo = KBO(sig)
    assert kbo.compare(num(5), num(-3)) == GREATER
    assert kbo.compare(num(-5), num(3)) == GREATER
    assert kbo.compare(num(2), num(2)) == EQUAL
    # skolems outweigh numerals at equal weight
    sk = app(sig.fresh_skolem((), sig.int_sort))
    assert kbo.compare(sk, num(1000)) == GREATER


def test_definition_orientations():
    sig, nat = nat_signature()
    kbo = KBO(sig)
    add, suc, half, zero = (sig.symbols[n] for n in ("add", "suc", "half", "zero"))
    z, y = var(0, nat), var(1, nat)
    lhs = app(add, (app(suc, (z,)), y))
    rhs = app(suc, (app(add, (z, y)),))
    assert kbo.compare(lhs, rhs) == GREATER
    lhs2 = app(half, (app(suc, (app(suc, (z,)),)),))
    rhs2 = app(suc, (app(half, (z,)),))
    assert kbo.compare(lhs2, rhs2) == GREATER
    assert kbo.compare(app(add, (app(zero), y)), y) == GREATER


def test_maximal_literals():
    sig, nat = nat_signature()
    kbo = KBO(sig)
    from satind.terms import lit_eq, literal
    sk = app(sig.fresh_skolem((), nat))
    small = literal(True, sig.symbols["even"], (sk,))
    big = lit_eq(app(sig.symbols["add"], (sk, sk)), sk, False)
    assert kbo.maximal_literals([small, big]) == (big,)
