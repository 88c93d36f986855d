"""Knuth-Bendix simplification ordering.

All symbol weights are 1 and the variable weight is 1, so the weight of a
term is its symbol count.  Precedence follows declaration order (later
declared = greater), with Skolem symbols in a strictly higher class and
numerals in a strictly lower class, tie-broken by magnitude then value.
Literal and clause comparison are the standard multiset extensions.
"""

from __future__ import annotations

import random

from .terms import Clause, Literal, Signature, Term, app

GREATER = 1
LESS = -1
EQUAL = 0
INCOMPARABLE = 2


class KBO:
    """Comparison engine over one signature.

    seed permutes the precedence of non-Skolem, non-interpreted symbols;
    seed 0 keeps declaration order.
    """

    def __init__(self, sig: Signature, seed: int = 0):
        self.sig = sig
        self.seed = seed
        self._perm: dict[int, int] = {}
        if seed:
            user = [f for f in sig.decl_order if f.role not in ("skolem",)]
            order = list(range(len(user)))
            random.Random(seed).shuffle(order)
            for f, k in zip(user, order):
                self._perm[id(f)] = k

    def _prec(self, t: Term):
        if t.is_num:
            return (0, abs(t.value), t.value)
        f = t.functor
        idx = self._perm.get(id(f), f.decl_index)
        return (1 + f.prec_class, idx)

    def compare(self, s: Term, t: Term) -> int:
        if s is t:
            return EQUAL
        if self.greater(s, t):
            return GREATER
        if self.greater(t, s):
            return LESS
        return INCOMPARABLE

    def greater(self, s: Term, t: Term) -> bool:
        if s is t:
            return False
        if s.is_var:
            return False
        if t.is_var:
            # subterm property: s > x iff x occurs in s
            return t.vid in s.vars
        for v, n in t.vars.items():
            if s.vars.get(v, 0) < n:
                return False
        if s.weight != t.weight:
            return s.weight > t.weight
        ps, pt = self._prec(s), self._prec(t)
        if ps != pt:
            return ps > pt
        if s.is_num:  # equal numerals are identical, handled above
            return False
        for a, b in zip(s.args, t.args):
            if a is b:
                continue
            return self.greater(a, b)
        return False

    # -- literal and clause extensions ------------------------------------

    def _lit_multiset(self, l: Literal) -> list[Term]:
        if l.is_eq:
            a, b = l.args
            return [a, b] if l.positive else [a, a, b, b]
        atom = app(l.pred, l.args)  # pseudo-term, ordering-internal only
        return [atom] if l.positive else [atom, atom]

    def compare_literals(self, l1: Literal, l2: Literal) -> int:
        if l1 is l2:
            return EQUAL
        return self.compare_multisets(self._lit_multiset(l1),
                                      self._lit_multiset(l2), self.compare)

    def compare_multisets(self, ms: list, mt: list, cmp) -> int:
        ms, mt = list(ms), list(mt)
        i = 0
        while i < len(ms):  # cancel identical elements
            x = ms[i]
            hit = next((j for j, y in enumerate(mt) if y is x), None)
            if hit is None:
                i += 1
            else:
                ms.pop(i)
                mt.pop(hit)
        if not ms and not mt:
            return EQUAL
        if not ms:
            return LESS
        if not mt:
            return GREATER
        if all(any(cmp(a, b) == GREATER for a in ms) for b in mt):
            return GREATER
        if all(any(cmp(b, a) == GREATER for b in mt) for a in ms):
            return LESS
        return INCOMPARABLE

    def compare_clauses(self, c1: Clause, c2: Clause) -> int:
        return self.compare_multisets(list(c1.lits), list(c2.lits),
                                      self.compare_literals)

    def maximal_literals(self, lits) -> tuple[Literal, ...]:
        out = []
        for l in lits:
            if not any(self.compare_literals(m, l) == GREATER
                       for m in lits if m is not l):
                out.append(l)
        return tuple(out)
