"""First-order formulas and transformation to clausal normal form.

The pipeline is NNF -> rectify -> Skolemize -> distribute, with a naming
guard: when plain distribution of a disjunction would exceed the clause
threshold, the offending disjunct is named by a fresh predicate over its
free variables.  Integer comparisons need no special negation handling
because s<=t is already stored as the negative literal not(t<s).
"""

from __future__ import annotations

from .terms import (Clause, Literal, Signature, Sort, Term, app, complement,
                    is_tautology, lit_apply, var)

NAMING_THRESHOLD = 32


class Formula:
    __slots__ = ()

    def __repr__(self):
        return formula_to_str(self)


class FTrue(Formula):
    __slots__ = ()


class FFalse(Formula):
    __slots__ = ()


TRUE = FTrue()
FALSE = FFalse()


class FAtom(Formula):
    __slots__ = ("lit",)

    def __init__(self, lit: Literal):
        self.lit = lit


class FNot(Formula):
    __slots__ = ("sub",)

    def __init__(self, sub: Formula):
        self.sub = sub


class FAnd(Formula):
    __slots__ = ("subs",)

    def __init__(self, subs):
        self.subs = tuple(subs)


class FOr(Formula):
    __slots__ = ("subs",)

    def __init__(self, subs):
        self.subs = tuple(subs)


class FImplies(Formula):
    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs, rhs):
        self.lhs = lhs
        self.rhs = rhs


class FIff(Formula):
    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs, rhs):
        self.lhs = lhs
        self.rhs = rhs


class FQuant(Formula):
    __slots__ = ("is_forall", "v", "body")

    def __init__(self, is_forall: bool, v: Term, body: Formula):
        assert v.is_var
        self.is_forall = is_forall
        self.v = v
        self.body = body


def forall(v, body):
    return FQuant(True, v, body)


def exists(v, body):
    return FQuant(False, v, body)


def forall_all(vs, body):
    for v in reversed(list(vs)):
        body = FQuant(True, v, body)
    return body


def conj(subs) -> Formula:
    flat = []
    for s in subs:
        if isinstance(s, FTrue):
            continue
        if isinstance(s, FFalse):
            return FALSE
        if isinstance(s, FAnd):
            flat.extend(s.subs)
        else:
            flat.append(s)
    if not flat:
        return TRUE
    if len(flat) == 1:
        return flat[0]
    return FAnd(flat)


def disj(subs) -> Formula:
    flat = []
    for s in subs:
        if isinstance(s, FFalse):
            continue
        if isinstance(s, FTrue):
            return TRUE
        if isinstance(s, FOr):
            flat.extend(s.subs)
        else:
            flat.append(s)
    if not flat:
        return FALSE
    if len(flat) == 1:
        return flat[0]
    return FOr(flat)


def implies(a, b) -> Formula:
    return FImplies(a, b)


def free_vars(f: Formula, bound=frozenset()) -> dict[int, Term]:
    """Free variables of f as vid -> variable term, in occurrence order."""
    out: dict[int, Term] = {}

    def walk(g, bnd):
        if isinstance(g, FAtom):
            for a in g.lit.args:
                for v in a.vars:
                    if v not in bnd and v not in out:
                        out[v] = var(v, _var_sort(a, v))
        elif isinstance(g, FNot):
            walk(g.sub, bnd)
        elif isinstance(g, (FAnd, FOr)):
            for s in g.subs:
                walk(s, bnd)
        elif isinstance(g, (FImplies, FIff)):
            walk(g.lhs, bnd)
            walk(g.rhs, bnd)
        elif isinstance(g, FQuant):
            walk(g.body, bnd | {g.v.vid})

    walk(f, set(bound))
    return out


def _var_sort(t: Term, vid: int) -> Sort:
    if t.is_var and t.vid == vid:
        return t.sort
    for a in t.args:
        if vid in a.vars:
            return _var_sort(a, vid)
    raise KeyError(vid)


def subst_formula(f: Formula, sub: dict) -> Formula:
    """Apply a substitution; quantified variables are assumed distinct."""
    if isinstance(f, (FTrue, FFalse)):
        return f
    if isinstance(f, FAtom):
        return FAtom(lit_apply(f.lit, sub))
    if isinstance(f, FNot):
        return FNot(subst_formula(f.sub, sub))
    if isinstance(f, FAnd):
        return FAnd([subst_formula(s, sub) for s in f.subs])
    if isinstance(f, FOr):
        return FOr([subst_formula(s, sub) for s in f.subs])
    if isinstance(f, FImplies):
        return FImplies(subst_formula(f.lhs, sub), subst_formula(f.rhs, sub))
    if isinstance(f, FIff):
        return FIff(subst_formula(f.lhs, sub), subst_formula(f.rhs, sub))
    if isinstance(f, FQuant):
        inner = {k: v for k, v in sub.items() if k != f.v.vid}
        return FQuant(f.is_forall, f.v, subst_formula(f.body, inner))
    raise TypeError(f)


def count_subformulas(f: Formula) -> int:
    if isinstance(f, (FTrue, FFalse, FAtom)):
        return 1
    if isinstance(f, FNot):
        return 1 + count_subformulas(f.sub)
    if isinstance(f, (FAnd, FOr)):
        return 1 + sum(count_subformulas(s) for s in f.subs)
    if isinstance(f, (FImplies, FIff)):
        return 1 + count_subformulas(f.lhs) + count_subformulas(f.rhs)
    if isinstance(f, FQuant):
        return 1 + count_subformulas(f.body)
    raise TypeError(f)


def formula_to_str(f: Formula) -> str:
    from .terms import lit_to_str, term_to_str
    if isinstance(f, FTrue):
        return "true"
    if isinstance(f, FFalse):
        return "false"
    if isinstance(f, FAtom):
        return lit_to_str(f.lit)
    if isinstance(f, FNot):
        return "(not %s)" % formula_to_str(f.sub)
    if isinstance(f, FAnd):
        return "(and %s)" % " ".join(formula_to_str(s) for s in f.subs)
    if isinstance(f, FOr):
        return "(or %s)" % " ".join(formula_to_str(s) for s in f.subs)
    if isinstance(f, FImplies):
        return "(=> %s %s)" % (formula_to_str(f.lhs), formula_to_str(f.rhs))
    if isinstance(f, FIff):
        return "(iff %s %s)" % (formula_to_str(f.lhs), formula_to_str(f.rhs))
    if isinstance(f, FQuant):
        q = "forall" if f.is_forall else "exists"
        return "(%s ((%s %s)) %s)" % (q, term_to_str(f.v), f.v.sort.name,
                                      formula_to_str(f.body))
    raise TypeError(f)


class Clausifier:
    """Turns closed formulas into equisatisfiable clause sets.

    Skolem symbols are registered in the signature with the skolem role;
    two runs never reuse a Skolem name (the signature counter is global).
    """

    def __init__(self, sig: Signature):
        self.sig = sig
        self._rename_count = 0
        self.last_skolems: list = []

    def clausify(self, f: Formula, rule="clausify", premises=(),
                 goal_dist=None, note=None) -> list[Clause]:
        self.last_skolems = []
        self._extra: list[tuple] = []
        g = self._nnf(f, True)
        g = self._rectify(g, {})
        g = self._skolemize(g, [])
        use_naming = count_subformulas(f) > NAMING_THRESHOLD
        litsets = self._distribute(g, use_naming) + self._extra
        out = []
        seen = set()
        for lits in litsets:
            if is_tautology(lits):
                continue
            c = Clause(lits, rule=rule, premises=premises,
                       goal_dist=goal_dist, note=note)
            key = c.lits
            if key in seen:
                continue
            seen.add(key)
            out.append(c)
        return out

    def negate_goal(self, f: Formula) -> list[Clause]:
        return self.clausify(FNot(f), rule="negated_goal", goal_dist=0)

    # -- pipeline ----------------------------------------------------------

    def _nnf(self, f: Formula, pos: bool) -> Formula:
        if isinstance(f, FTrue):
            return TRUE if pos else FALSE
        if isinstance(f, FFalse):
            return FALSE if pos else TRUE
        if isinstance(f, FAtom):
            return f if pos else FAtom(complement(f.lit))
        if isinstance(f, FNot):
            return self._nnf(f.sub, not pos)
        if isinstance(f, FAnd):
            subs = [self._nnf(s, pos) for s in f.subs]
            return conj(subs) if pos else disj(subs)
        if isinstance(f, FOr):
            subs = [self._nnf(s, pos) for s in f.subs]
            return disj(subs) if pos else conj(subs)
        if isinstance(f, FImplies):
            if pos:
                return disj([self._nnf(f.lhs, False), self._nnf(f.rhs, True)])
            return conj([self._nnf(f.lhs, True), self._nnf(f.rhs, False)])
        if isinstance(f, FIff):
            a, na = self._nnf(f.lhs, True), self._nnf(f.lhs, False)
            b, nb = self._nnf(f.rhs, True), self._nnf(f.rhs, False)
            if pos:
                return conj([disj([na, b]), disj([nb, a])])
            return conj([disj([a, b]), disj([na, nb])])
        if isinstance(f, FQuant):
            body = self._nnf(f.body, pos)
            return FQuant(f.is_forall if pos else not f.is_forall, f.v, body)
        raise TypeError(f)

    def _fresh_vid(self) -> int:
        self._rename_count += 1
        return 10_000_000 + self._rename_count

    def _rectify(self, f: Formula, ren: dict) -> Formula:
        if isinstance(f, (FTrue, FFalse)):
            return f
        if isinstance(f, FAtom):
            return FAtom(lit_apply(f.lit, ren)) if ren else f
        if isinstance(f, FAnd):
            return FAnd([self._rectify(s, ren) for s in f.subs])
        if isinstance(f, FOr):
            return FOr([self._rectify(s, ren) for s in f.subs])
        if isinstance(f, FQuant):
            nv = var(self._fresh_vid(), f.v.sort)
            ren2 = dict(ren)
            ren2[f.v.vid] = nv
            return FQuant(f.is_forall, nv, self._rectify(f.body, ren2))
        raise TypeError("rectify expects NNF, got %r" % f)

    def _skolemize(self, f: Formula, scope: list) -> Formula:
        if isinstance(f, (FTrue, FFalse, FAtom)):
            return f
        if isinstance(f, FAnd):
            return FAnd([self._skolemize(s, scope) for s in f.subs])
        if isinstance(f, FOr):
            return FOr([self._skolemize(s, scope) for s in f.subs])
        if isinstance(f, FQuant):
            if f.is_forall:
                scope.append(f.v)
                body = self._skolemize(f.body, scope)
                scope.pop()
                return body  # universals become free variables
            sk = self.sig.fresh_skolem(tuple(v.sort for v in scope), f.v.sort)
            self.last_skolems.append(sk)
            skt = app(sk, tuple(scope))
            body = subst_formula(f.body, {f.v.vid: skt})
            return self._skolemize(body, scope)
        raise TypeError(f)

    def _distribute(self, f: Formula, use_naming: bool) -> list[tuple]:
        if isinstance(f, FTrue):
            return []
        if isinstance(f, FFalse):
            return [()]
        if isinstance(f, FAtom):
            return [(f.lit,)]
        if isinstance(f, FAnd):
            out = []
            for s in f.subs:
                out.extend(self._distribute(s, use_naming))
            return out
        if isinstance(f, FOr):
            parts = [self._distribute(s, use_naming) for s in f.subs]
            total = 1
            for p in parts:
                total *= max(len(p), 1)
            if use_naming and total > NAMING_THRESHOLD:
                parts = [self._name_if_large(p, s)
                         for p, s in zip(parts, f.subs)]
            acc: list[tuple] = [()]
            for p in parts:
                acc = [a + b for a in acc for b in p]
            return acc
        raise TypeError(f)

    def _name_if_large(self, clauses: list[tuple], src: Formula) -> list[tuple]:
        if len(clauses) <= 2:
            return clauses
        from .terms import literal
        fv = free_vars(src)
        p = self.sig.fresh_predicate("df", tuple(v.sort for v in fv.values()))
        plit = literal(True, p, tuple(fv.values()))
        nplit = complement(plit)
        # definition clauses: ~p v C for each clause C of the named disjunct
        self._extra.extend((nplit,) + c for c in clauses)
        return [(plit,)]
