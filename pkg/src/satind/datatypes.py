"""Term-algebra reasoning.

Injectivity/distinctness as simplification steps, eager exhaustiveness
axioms for sorts with declared destructors, extraction of recursive
definition structure (headers, recursive calls, inductive argument
positions), and rewriting with function definitions in their intended
orientation.
"""

from __future__ import annotations

from typing import Optional

from .terms import (Clause, Signature, Term, app, apply_subst, contains,
                    literal, lit_subterms, match_seq, subterms, var)


def is_constructor_term(t: Term) -> bool:
    """Only constructors and variables, the paper's notion of a TA term."""
    if t.is_var:
        return True
    if t.is_num:
        return False
    return t.functor.is_constructor and all(is_constructor_term(a)
                                            for a in t.args)


def is_pattern_term(t: Term) -> bool:
    """Patterns allowed in definition headers: TA terms or numerals."""
    return t.is_num or is_constructor_term(t)


def proper_subterm(s: Term, t: Term) -> bool:
    return s is not t and contains(t, s)


# ---------------------------------------------------------------------------
# Injectivity and distinctness

UNCHANGED = "unchanged"
DELETED = "deleted"
CHANGED = "changed"


def injectivity_distinctness(lits):
    """One rewriting pass over constructor equalities.

    Returns (UNCHANGED, None), (DELETED, None) when a true literal makes the
    clause redundant, or (CHANGED, list-of-literal-tuples): several tuples
    only for the positive unit case, which splits into argument equalities.
    """
    lits = tuple(lits)
    for i, l in enumerate(lits):
        if l.pred is not None:
            continue
        a, b = l.args
        if not (a.is_app and b.is_app):
            continue
        fa, fb = a.functor, b.functor
        if not (fa.is_constructor and fb.is_constructor):
            continue
        if fa is fb:
            if a is b:
                continue  # handled by evaluation
            pairs = [(x, y) for x, y in zip(a.args, b.args) if x is not y]
            if not l.positive:
                new = lits[:i] + tuple(literal(False, None, (x, y))
                                       for x, y in pairs) + lits[i + 1:]
                return CHANGED, [new]
            if len(lits) == 1:
                return CHANGED, [(literal(True, None, (x, y)),)
                                 for x, y in pairs]
            continue
        # distinct constructors of the same sort
        if l.positive:
            new = lits[:i] + lits[i + 1:]
            return CHANGED, [new]
        return DELETED, None
    return UNCHANGED, None


def exhaustiveness_axioms(sig: Signature) -> list[Clause]:
    """x = c1(d11(x),...) v ... v x = ck(...) per qualifying TA sort.

    A sort qualifies when every non-nullary constructor has a full
    destructor list; added eagerly at problem setup.
    """
    out = []
    for sname, ctors in sig.constructors.items():
        ok = True
        for c in ctors:
            if c.arity and (c.name not in sig.destructors
                            or any(d is None for d in sig.destructors[c.name])):
                ok = False
                break
        if not ok or not ctors:
            continue
        sort = ctors[0].result
        x = var(0, sort)
        lits = []
        for c in ctors:
            if c.arity:
                dtors = sig.destructors[c.name]
                rhs = app(c, [app(d, (x,)) for d in dtors])
            else:
                rhs = app(c)
            lits.append(literal(True, None, (x, rhs)))
        out.append(Clause(lits, rule="ta_exhaustiveness",
                          note={"sort": sname}))
    return out


# ---------------------------------------------------------------------------
# Recursive definitions

class Branch:
    """One defining equation: f(header_args) = body when guards hold.

    Function branches carry a Term body.  Predicate branches carry either
    body_bool (truth-constant definition like even(zero)) or body_lit (a
    literal over the header variables, like even(suc z) <-> not even(z));
    those two drive literal-level rewriting.
    """

    __slots__ = ("header_args", "body", "guards", "rec_calls", "clause",
                 "body_lit", "body_bool")

    def __init__(self, header_args, body, guards=(), rec_calls=(),
                 clause=None, body_lit=None, body_bool=None):
        self.header_args = tuple(header_args)
        self.body = body             # Term, or None for predicate branches
        self.guards = tuple(guards)  # literals that must hold
        self.rec_calls = tuple(rec_calls)  # argument tuples of inner calls
        self.clause = clause
        self.body_lit = body_lit
        self.body_bool = body_bool


class RecursiveDefinition:
    __slots__ = ("symbol", "branches", "inductive_positions")

    def __init__(self, symbol, branches):
        self.symbol = symbol
        self.branches = tuple(branches)
        self.inductive_positions = self._inductive_positions()

    def _inductive_positions(self) -> frozenset:
        if not any(b.rec_calls for b in self.branches):
            return frozenset()
        out = []
        for i in range(self.symbol.arity):
            good = True
            for b in self.branches:
                h = b.header_args[i]
                if not is_constructor_term(h) or not h.sort.is_term_algebra:
                    good = False
                    break
                for call in b.rec_calls:
                    if not proper_subterm(call[i], h):
                        good = False
                        break
                if not good:
                    break
            if good:
                out.append(i)
        return frozenset(out)

    @property
    def base_branches(self):
        return [b for b in self.branches if not b.rec_calls]

    @property
    def step_branches(self):
        return [b for b in self.branches if b.rec_calls]

    def __repr__(self):
        return "def %s (%d branches, inductive %s)" % (
            self.symbol.name, len(self.branches),
            sorted(self.inductive_positions))


def _calls_of(sym, t: Term):
    return [u.args for _, u in subterms(t) if u.is_app and u.functor is sym]


def extract_recursive_definitions(clauses, sig: Signature) \
        -> list[RecursiveDefinition]:
    """Recognize definitions from clauses of shape f(patterns)=body v guards.

    Guards are the complements of the clause's remaining literals.  A symbol
    qualifies if at least one such clause exists and it is not interpreted,
    a constructor, a destructor or a Skolem.
    """
    from .terms import complement
    branches: dict = {}
    for c in clauses:
        eqs = [l for l in c.lits if l.pred is None and l.positive]
        if len(eqs) != 1:
            continue
        eq = eqs[0]
        others = [l for l in c.lits if l is not eq]
        for lhs, rhs in ((eq.args[0], eq.args[1]), (eq.args[1], eq.args[0])):
            if not lhs.is_app:
                continue
            f = lhs.functor
            if f.role not in ("plain", "defined"):
                continue
            if not all(is_pattern_term(a) for a in lhs.args):
                continue
            if contains(rhs, lhs):
                continue
            hv = set()
            for a in lhs.args:
                hv.update(a.vars)
            ov = set(rhs.vars)
            for l in others:
                for a in l.args:
                    ov.update(a.vars)
            if not ov <= hv:
                continue
            branches.setdefault(id(f), (f, []))[1].append(
                Branch(lhs.args, rhs,
                       guards=tuple(complement(l) for l in others),
                       rec_calls=tuple(_calls_of(f, rhs)), clause=c))
            break
    out = []
    for f, bs in branches.values():
        f.role = "defined" if f.role == "plain" else f.role
        out.append(RecursiveDefinition(f, bs))
    return out


# ---------------------------------------------------------------------------
# Definition rewriting (intended orientation, guard-checked)

def definition_rewrite_step(lits, defs, guard_entailed, arith,
                            skip_clause=None):
    """Rewrite one definition redex (leftmost literal first).

    guard_entailed(lit) returns the unit Clause entailing a ground guard
    instance, True for trivially valid ones, or None.  Returns
    (new_lits, def_clause, guard_premises) where new_lits is None when a
    literal rewrote to true (the clause is redundant), or None when no
    redex fires.
    """
    from .terms import complement, lit_apply, lit_replace_at
    by_symbol = {}
    for d in defs:
        by_symbol[id(d.symbol)] = d
    for i, l in enumerate(lits):
        # predicate-definition rewriting on the literal's own atom
        d = by_symbol.get(id(l.pred)) if l.pred is not None else None
        if d is not None:
            for b in d.branches:
                if b.body_lit is None and b.body_bool is None:
                    continue
                theta = _match_args(b.header_args, l.args)
                if theta is None:
                    continue
                prem, ok = _check_guards(b, theta, guard_entailed)
                if not ok:
                    continue
                if b.body_bool is not None:
                    if b.body_bool == l.positive:
                        return None, b.clause, prem  # literal true
                    new = tuple(lits[:i]) + tuple(lits[i + 1:])
                    return new, b.clause, prem
                nl = lit_apply(b.body_lit, theta)
                if not l.positive:
                    nl = complement(nl)
                new = tuple(lits[:i]) + (nl,) + tuple(lits[i + 1:])
                return new, b.clause, prem
        for pos, sub in lit_subterms(l):
            if not sub.is_app:
                continue
            d = by_symbol.get(id(sub.functor))
            if d is None:
                continue
            for b in d.branches:
                if b.body is None or b.clause is None:
                    continue
                if b.clause is skip_clause:
                    continue
                theta = _match_args(b.header_args, sub.args)
                if theta is None:
                    continue
                prem, ok = _check_guards(b, theta, guard_entailed)
                if not ok:
                    continue
                new_sub = arith.normalize_term(apply_subst(b.body, theta))
                if new_sub is sub:
                    continue
                nl = lit_replace_at(l, pos, new_sub)
                new = tuple(lits[:i]) + (nl,) + tuple(lits[i + 1:])
                return new, b.clause, prem
    return None


def _check_guards(b, theta, guard_entailed):
    prem = []
    for g in b.guards:
        gi = literal(g.positive, g.pred,
                     [apply_subst(a, theta) for a in g.args])
        if not gi.ground:
            return prem, False
        ent = guard_entailed(gi)
        if ent is None:
            return prem, False
        if ent is not True:
            prem.append(ent)
    return prem, True


def _match_args(patterns, args) -> Optional[dict]:
    return match_seq(list(zip(patterns, args)))
