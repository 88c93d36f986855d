"""Shared fixtures: tiny signatures and random term generators."""

from __future__ import annotations

import random

from satind.terms import (CONSTRUCTOR, TERM_ALGEBRA, Signature, app, num, var)


def nat_signature():
    """nat = zero | suc(pre nat), plus add/even/half as in the running example."""
    sig = Signature()
    nat = sig.add_sort("nat", TERM_ALGEBRA)
    sig.declare_constructor("zero", (), nat)
    sig.declare_constructor("suc", (nat,), nat, destructor_names=("pre",))
    sig.declare("add", (nat, nat), nat)
    sig.declare("even", (nat,), sig.bool_sort)
    sig.declare("half", (nat,), nat)
    return sig, nat


def plain_signature():
    """Uninterpreted symbols for unification/ordering fuzzing."""
    sig = Signature()
    u = sig.add_sort("u")
    sig.declare("a", (), u)
    sig.declare("b", (), u)
    sig.declare("c", (), u)
    sig.declare("f", (u,), u)
    sig.declare("g", (u, u), u)
    sig.declare("h", (u, u, u), u)
    sig.declare("p", (u,), sig.bool_sort)
    sig.declare("q", (u, u), sig.bool_sort)
    return sig, u


def random_term(rng: random.Random, sig, sort, depth=4, nvars=3, ground=False):
    choices = [f for f in sig.decl_order
               if f.result is sort and not f.is_predicate]
    leaves = [f for f in choices if f.arity == 0]
    if depth <= 0 or rng.random() < 0.3:
        if not ground and rng.random() < 0.5:
            return var(rng.randrange(nvars), sort)
        if leaves:
            return app(rng.choice(leaves))
        return var(rng.randrange(nvars), sort)
    f = rng.choice(choices)
    return app(f, [random_term(rng, sig, s, depth - 1, nvars, ground)
                   for s in f.arg_sorts])


def random_ground_term(rng, sig, sort, depth=4):
    return random_term(rng, sig, sort, depth, ground=True)
