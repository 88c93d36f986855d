"""Unification, matching, replacement and clause normalization."""

import random

import pytest

from satind.terms import (Clause, app, apply_subst, lit_eq, match, num,
                          occurrences, replace_occurrences, subterm_at,
                          unify, var)

from helpers import nat_signature, plain_signature, random_term


def test_unify_disjoint_variables():
    sig, u = plain_signature()
    f, a, b = sig.symbols["g"], sig.symbols["a"], sig.symbols["b"]
    x, y = var(0, u), var(1, u)
    s = app(f, (x, app(a)))
    t = app(f, (app(b), y))
    theta = unify(s, t)
    assert theta == {0: app(b), 1: app(a)}


def test_unify_occurs_check():
    sig, u = plain_signature()
    f = sig.symbols["f"]
    x = var(0, u)
    assert unify(x, app(f, (x,))) is None


def test_unify_pattern_binding():
    sig, nat = nat_signature()
    add, suc = sig.symbols["add"], sig.symbols["suc"]
    z, y, x, w = var(0, nat), var(1, nat), var(2, nat), var(3, nat)
    s = app(add, (app(suc, (z,)), y))
    t = app(add, (x, w))
    theta = unify(s, t)
    assert apply_subst(s, theta) is apply_subst(t, theta)
    assert theta[2] is app(suc, (z,)) or theta[2] is app(suc, (theta[0],))


def test_unify_sort_mismatch_is_failure():
    sig, nat = nat_signature()
    x = var(0, nat)
    assert unify(x, num(3)) is None


def test_unify_soundness_random():
    # whenever unify succeeds, both instances are identical (hash-consed)
    sig, u = plain_signature()
    rng = random.Random(7)
    successes = 0
    for _ in range(1000):
        s = random_term(rng, sig, u)
        t = random_term(rng, sig, u)
        theta = unify(s, t)
        if theta is not None:
            successes += 1
            assert apply_subst(s, theta) is apply_subst(t, theta)
            # idempotence
            for v, tm in theta.items():
                assert apply_subst(tm, theta) is tm
    assert successes > 50


def test_unify_generality_random():
    # any independently built unifier factors through the mgu by matching
    sig, u = plain_signature()
    rng = random.Random(11)
    checked = 0
    while checked < 1000:
        s = random_term(rng, sig, u, depth=3)
        t = random_term(rng, sig, u, depth=3)
        theta = unify(s, t)
        if theta is None:
            continue
        ext = {v: random_term(rng, sig, u, depth=2, ground=True)
               for v in range(4)}
        eta = {v: apply_subst(apply_subst(var(v, u), theta), ext)
               for v in set(list(theta) + list(s.vars) + list(t.vars))}
        inst_s = apply_subst(s, eta)
        # eta = theta . mu for the mu found by matching s.theta onto s.eta
        mu = match(apply_subst(s, theta), inst_s)
        assert mu is not None
        assert apply_subst(apply_subst(s, theta), mu) is inst_s
        checked += 1


def test_match_basic():
    sig, nat = nat_signature()
    add, zero, half, suc = (sig.symbols[n] for n in ("add", "zero", "half", "suc"))
    sk = sig.fresh_skolem((), nat)
    y, z = var(0, nat), var(1, nat)
    pat = app(add, (app(zero), y))
    tgt = app(add, (app(zero), app(half, (app(sk),))))
    assert match(pat, tgt) == {0: app(half, (app(sk),))}
    assert match(pat, app(add, (app(suc, (z,)), y))) is None
    assert match(y, y) == {}


def test_match_leaves_target_variables_alone():
    sig, u = plain_signature()
    g = sig.symbols["g"]
    x, y = var(0, u), var(1, u)
    theta = match(app(g, (x, x)), app(g, (y, y)))
    assert theta == {0: y}


def test_replace_occurrences_all_and_subset():
    sig, nat = nat_signature()
    add, half = sig.symbols["add"], sig.symbols["half"]
    sk = app(sig.fresh_skolem((), nat))
    x = var(0, nat)
    t = app(add, (app(half, (sk,)), app(half, (sk,))))
    assert replace_occurrences(t, sk, "all", x) is \
        app(add, (app(half, (x,)), app(half, (x,))))
    t2 = app(add, (sk, sk))
    assert replace_occurrences(t2, sk, [(0,)], x) is app(add, (x, sk))
    # zero occurrences selected: identity
    assert replace_occurrences(t2, sk, [], x) is t2


def test_replace_occurrences_bad_position_faults():
    sig, nat = nat_signature()
    add = sig.symbols["add"]
    sk = app(sig.fresh_skolem((), nat))
    zero = app(sig.symbols["zero"])
    t = app(add, (sk, zero))
    with pytest.raises(ValueError):
        replace_occurrences(t, sk, [(1,)], zero)


def test_occurrences_positions():
    sig, nat = nat_signature()
    add, half = sig.symbols["add"], sig.symbols["half"]
    sk = app(sig.fresh_skolem((), nat))
    lit = lit_eq(sk, app(add, (app(half, (sk,)), app(half, (sk,)))), False)
    occ = occurrences(lit, sk)
    assert sorted(occ) == [(0,), (1, 0, 0), (1, 1, 0)]
    assert subterm_at(lit.args[1], (0, 0)) is sk


def test_wellsortedness_preserved_random():
    sig, u = plain_signature()
    rng = random.Random(13)
    for _ in range(300):
        s = random_term(rng, sig, u)
        t = random_term(rng, sig, u, ground=True)
        sub = {0: t}
        r = apply_subst(s, sub)
        assert r.sort is s.sort  # app() would have raised otherwise


def test_ground_detection_matches_scan():
    sig, u = plain_signature()
    rng = random.Random(17)
    for _ in range(500):
        t = random_term(rng, sig, u)

        def scan(x):
            if x.is_var:
                return False
            return all(scan(a) for a in x.args)

        assert t.ground == scan(t)


def test_clause_normalization_dedups_and_renumbers():
    sig, u = plain_signature()
    p = sig.symbols["p"]
    from satind.terms import literal
    x9 = var(9, u)
    l1 = literal(True, p, (x9,))
    c = Clause([l1, l1, literal(False, p, (var(4, u),))])
    assert len(c.lits) == 2
    vids = sorted(v for l in c.lits for a in l.args for v in a.vars)
    assert vids == [0, 1]


def test_clause_variants_get_same_form():
    sig, u = plain_signature()
    g = sig.symbols["g"]
    from satind.terms import literal
    q = sig.symbols["q"]
    c1 = Clause([literal(True, q, (var(3, u), var(8, u)))])
    c2 = Clause([literal(True, q, (var(0, u), var(5, u)))])
    assert c1.lits == c2.lits
    assert g  # silence linter
