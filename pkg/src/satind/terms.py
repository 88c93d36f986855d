"""Multi-sorted first-order syntax.

Sorts, signatures, hash-consed terms, literals, clauses, substitutions,
unification, matching and occurrence/position machinery.  Terms and literals
are perfectly shared: structural equality is object identity, which keeps
clause operations and indexing cheap.
"""

from __future__ import annotations

from typing import Iterator, Optional

TERM_ALGEBRA = "term-algebra"
INTEGER = "integer"
BOOLEAN = "boolean"
UNINTERPRETED = "uninterpreted"


class SortError(Exception):
    """An ill-sorted term, literal or formula was about to be built."""


class Sort:
    __slots__ = ("name", "kind")

    def __init__(self, name: str, kind: str = UNINTERPRETED):
        self.name = name
        self.kind = kind

    def __repr__(self):
        return self.name

    @property
    def is_term_algebra(self) -> bool:
        return self.kind == TERM_ALGEBRA

    @property
    def is_int(self) -> bool:
        return self.kind == INTEGER


# Int and Bool are shared across all signatures so that numerals (which are
# interned globally) carry the one Int sort.
INT = Sort("Int", INTEGER)
BOOL = Sort("Bool", BOOLEAN)


# Roles a function symbol can play.
PLAIN = "plain"
CONSTRUCTOR = "constructor"
DESTRUCTOR = "destructor"
SKOLEM = "skolem"
INTERPRETED = "interpreted"
DEFINED = "defined"


class FunctionSymbol:
    """A declared function or predicate symbol (predicates return Bool).

    Symbols compare by identity and belong to exactly one signature; the
    declaration index drives the KBO precedence.
    """

    __slots__ = ("name", "arg_sorts", "result", "role", "ctor", "dtor_index",
                 "decl_index", "prec_class")

    def __init__(self, name, arg_sorts, result, role=PLAIN, ctor=None,
                 dtor_index=None, decl_index=0):
        self.name = name
        self.arg_sorts = tuple(arg_sorts)
        self.result = result
        self.role = role
        self.ctor = ctor              # for destructors: the constructor
        self.dtor_index = dtor_index  # for destructors: projected argument
        self.decl_index = decl_index
        # precedence classes: interpreted < plain/ctor/... < skolem
        self.prec_class = 2 if role == SKOLEM else 1

    @property
    def arity(self) -> int:
        return len(self.arg_sorts)

    @property
    def is_predicate(self) -> bool:
        return self.result.kind == BOOLEAN

    @property
    def is_constructor(self) -> bool:
        return self.role == CONSTRUCTOR

    def __repr__(self):
        return self.name


class Signature:
    """Sorts and symbols of one problem.

    The fixed integer symbols (+, -, *, unary -, <) and the Int/Bool sorts
    are always present.  Mutation after problem load is limited to Skolem
    and fresh-predicate registration (clausification, induction schemas).
    """

    def __init__(self):
        self.sorts: dict[str, Sort] = {}
        self.symbols: dict[str, FunctionSymbol] = {}
        self.decl_order: list[FunctionSymbol] = []
        self.constructors: dict[str, list[FunctionSymbol]] = {}
        self.destructors: dict[str, list[Optional[FunctionSymbol]]] = {}
        self._fresh_count = 0
        self.sorts["Int"] = INT
        self.sorts["Bool"] = BOOL
        self.int_sort = INT
        self.bool_sort = BOOL
        i = self.int_sort
        self.plus = self.declare("+", (i, i), i, role=INTERPRETED)
        self.minus = self.declare("-", (i, i), i, role=INTERPRETED)
        self.times = self.declare("*", (i, i), i, role=INTERPRETED)
        self.uminus = self.declare("u-", (i,), i, role=INTERPRETED)
        self.less = self.declare("<", (i, i), self.bool_sort, role=INTERPRETED)

    def add_sort(self, name: str, kind: str = UNINTERPRETED) -> Sort:
        if name in self.sorts:
            if self.sorts[name].kind != kind:
                raise SortError("sort %s redeclared with different kind" % name)
            return self.sorts[name]
        s = Sort(name, kind)
        self.sorts[name] = s
        return s

    def declare(self, name, arg_sorts, result, role=PLAIN, ctor=None,
                dtor_index=None) -> FunctionSymbol:
        if name in self.symbols:
            raise SortError("symbol %s declared twice" % name)
        f = FunctionSymbol(name, arg_sorts, result, role, ctor, dtor_index,
                           decl_index=len(self.decl_order))
        self.symbols[name] = f
        self.decl_order.append(f)
        if role == CONSTRUCTOR:
            self.constructors.setdefault(result.name, []).append(f)
        return f

    def declare_constructor(self, name, arg_sorts, sort,
                            destructor_names=None) -> FunctionSymbol:
        c = self.declare(name, arg_sorts, sort, role=CONSTRUCTOR)
        dtors: list[Optional[FunctionSymbol]] = []
        if destructor_names:
            for i, dname in enumerate(destructor_names):
                if dname is None:
                    dtors.append(None)
                else:
                    dtors.append(self.declare(dname, (sort,), arg_sorts[i],
                                              role=DESTRUCTOR, ctor=c,
                                              dtor_index=i))
        else:
            dtors = [None] * len(arg_sorts)
        self.destructors[name] = dtors
        return c

    def fresh_skolem(self, arg_sorts, result) -> FunctionSymbol:
        while True:
            name = "sk%d" % self._fresh_count
            self._fresh_count += 1
            if name not in self.symbols:
                return self.declare(name, arg_sorts, result, role=SKOLEM)

    def fresh_predicate(self, prefix, arg_sorts) -> FunctionSymbol:
        while True:
            name = "%s_%d" % (prefix, self._fresh_count)
            self._fresh_count += 1
            if name not in self.symbols:
                return self.declare(name, arg_sorts, self.bool_sort)

    def base_constructors(self, sort: Sort) -> list[FunctionSymbol]:
        return [c for c in self.constructors.get(sort.name, ())
                if not recursive_positions(c)]

    def validate_term_algebras(self):
        for sname, ctors in self.constructors.items():
            if not ctors:
                raise SortError("term-algebra sort %s has no constructors" % sname)
            if not any(not recursive_positions(c) for c in ctors):
                raise SortError("sort %s has no base constructor" % sname)


def recursive_positions(c: FunctionSymbol) -> tuple[int, ...]:
    """Argument positions of a constructor that carry its own sort."""
    return tuple(i for i, s in enumerate(c.arg_sorts) if s is c.result)


# ---------------------------------------------------------------------------
# Hash-consed terms

_EMPTY_VARS: dict = {}


class Term:
    """A variable, an integer numeral, or a function application.

    Never construct directly; use var()/num()/app() which intern, so `is`
    coincides with structural equality.
    """

    __slots__ = ("functor", "args", "sort", "vid", "value", "ground",
                 "weight", "vars")

    @property
    def is_var(self) -> bool:
        return self.vid is not None

    @property
    def is_num(self) -> bool:
        return self.value is not None

    @property
    def is_app(self) -> bool:
        return self.vid is None and self.value is None

    @property
    def is_const(self) -> bool:
        return self.is_app and not self.args

    def __repr__(self):
        return term_to_str(self)


# The hash-cons table.  CPython dict operations are atomic under the GIL;
# one prover instance per thread keeps this uncontended in practice.
_TERMS: dict = {}
_LITS: dict = {}


def clear_intern_tables():
    _TERMS.clear()
    _LITS.clear()


def var(vid: int, sort: Sort) -> Term:
    key = (1, vid, id(sort))
    t = _TERMS.get(key)
    if t is None:
        t = Term.__new__(Term)
        t.functor = None
        t.args = ()
        t.sort = sort
        t.vid = vid
        t.value = None
        t.ground = False
        t.weight = 1
        t.vars = {vid: 1}
        _TERMS[key] = t
    return t


def num(value: int) -> Term:
    key = (2, value)
    t = _TERMS.get(key)
    if t is None:
        t = Term.__new__(Term)
        t.functor = None
        t.args = ()
        t.sort = INT
        t.vid = None
        t.value = value
        t.ground = True
        t.weight = 1
        t.vars = _EMPTY_VARS
        _TERMS[key] = t
    return t


def app(f: FunctionSymbol, args=()) -> Term:
    args = tuple(args)
    key = (3, id(f)) + tuple(map(id, args))
    t = _TERMS.get(key)
    if t is None:
        if len(args) != f.arity:
            raise SortError("arity mismatch for %s" % f.name)
        for a, s in zip(args, f.arg_sorts):
            if not same_sort(a.sort, s):
                raise SortError("ill-sorted argument %r : %r to %s (wants %r)"
                                % (a, a.sort, f.name, s))
        t = Term.__new__(Term)
        t.functor = f
        t.args = args
        t.sort = f.result
        t.vid = None
        t.value = None
        t.ground = all(a.ground for a in args)
        t.weight = 1 + sum(a.weight for a in args)
        if t.ground:
            t.vars = _EMPTY_VARS
        else:
            vs: dict = {}
            for a in args:
                for v, n in a.vars.items():
                    vs[v] = vs.get(v, 0) + n
            t.vars = vs
        _TERMS[key] = t
    return t


def same_sort(a: Sort, b: Sort) -> bool:
    return a is b or (a.name == b.name and a.kind == b.kind)


def subterms(t: Term) -> Iterator[tuple[tuple[int, ...], Term]]:
    """All subterm occurrences with their positions, preorder, root first."""
    stack = [((), t)]
    while stack:
        pos, s = stack.pop()
        yield pos, s
        for i in range(len(s.args) - 1, -1, -1):
            stack.append((pos + (i,), s.args[i]))


def subterm_at(t: Term, pos) -> Term:
    for i in pos:
        t = t.args[i]
    return t


def replace_at(t: Term, pos, new: Term) -> Term:
    if not pos:
        return new
    i = pos[0]
    args = list(t.args)
    args[i] = replace_at(args[i], pos[1:], new)
    return app(t.functor, args)


def contains(t: Term, s: Term) -> bool:
    if t is s:
        return True
    return any(contains(a, s) for a in t.args)


# ---------------------------------------------------------------------------
# Substitutions

def apply_subst(t: Term, sub: dict) -> Term:
    if t.ground or not sub:
        return t
    if t.is_var:
        return sub.get(t.vid, t)
    if all(v not in sub for v in t.vars):
        return t
    return app(t.functor, [apply_subst(a, sub) for a in t.args])


def _deref(t: Term, sub: dict) -> Term:
    while t.is_var and t.vid in sub:
        t = sub[t.vid]
    return t


def _occurs(vid: int, t: Term, sub: dict) -> bool:
    stack = [t]
    while stack:
        u = _deref(stack.pop(), sub)
        if u.is_var:
            if u.vid == vid:
                return True
        else:
            stack.extend(u.args)
    return False


def _resolve(sub: dict) -> dict:
    """Flatten a triangular substitution into an idempotent one."""
    return {v: _walk(sub[v], sub) for v in sub}


def _walk(t: Term, sub: dict) -> Term:
    t = _deref(t, sub)
    if t.is_var or t.ground:
        return t
    return app(t.functor, [_walk(a, sub) for a in t.args])


def unify(s: Term, t: Term, sub: Optional[dict] = None) -> Optional[dict]:
    """Most general unifier of s and t, or None.

    Returns an idempotent substitution theta with s.theta == t.theta; sort
    clashes and occurs-check failures return None rather than raising.
    """
    work = [(s, t)]
    binds: dict = dict(sub) if sub else {}
    while work:
        a, b = work.pop()
        a = _deref(a, binds)
        b = _deref(b, binds)
        if a is b:
            continue
        if a.is_var:
            if not same_sort(a.sort, b.sort) or _occurs(a.vid, b, binds):
                return None
            binds[a.vid] = b
        elif b.is_var:
            if not same_sort(a.sort, b.sort) or _occurs(b.vid, a, binds):
                return None
            binds[b.vid] = a
        elif a.is_num or b.is_num:
            return None  # distinct numerals, or numeral vs application
        elif a.functor is not b.functor:
            return None
        else:
            work.extend(zip(a.args, b.args))
    return _resolve(binds)


def match_seq(pairs, sub: Optional[dict] = None) -> Optional[dict]:
    """Simultaneous one-sided unification of (pattern, target) pairs.

    Identity bindings are kept so repeated extension stays consistent;
    they are harmless under apply_subst.
    """
    work = list(pairs)
    binds: dict = dict(sub) if sub else {}
    while work:
        p, t = work.pop()
        if p.is_var:
            bound = binds.get(p.vid)
            if bound is None:
                if not same_sort(p.sort, t.sort):
                    return None
                binds[p.vid] = t
            elif bound is not t:
                return None
        elif p is t and p.ground:
            continue
        elif p.is_num or t.is_num:
            return None
        elif p.functor is not t.functor:
            return None
        else:
            work.extend(zip(p.args, t.args))
    return binds


def match(pattern: Term, target: Term) -> Optional[dict]:
    """theta with pattern.theta == target; target variables untouched."""
    binds = match_seq([(pattern, target)])
    if binds is None:
        return None
    return {v: t for v, t in binds.items() if not (t.is_var and t.vid == v)}


# ---------------------------------------------------------------------------
# Literals

class Literal:
    """An equality or predicate atom with a polarity, hash-consed.

    pred is None for equality literals (args are the two sides).  Integer
    comparisons use the interpreted `<` predicate only: s<=t is stored as
    the negative literal not(t<s).
    """

    __slots__ = ("positive", "pred", "args", "ground", "weight")

    @property
    def is_eq(self) -> bool:
        return self.pred is None

    def __repr__(self):
        return lit_to_str(self)


def literal(positive: bool, pred: Optional[FunctionSymbol], args) -> Literal:
    args = tuple(args)
    key = (positive, id(pred)) + tuple(map(id, args))
    l = _LITS.get(key)
    if l is None:
        if pred is None:
            if len(args) != 2 or not same_sort(args[0].sort, args[1].sort):
                raise SortError("equality needs two same-sorted terms: %r" % (args,))
        else:
            if not pred.is_predicate:
                raise SortError("%s is not a predicate" % pred.name)
            if len(args) != pred.arity:
                raise SortError("arity mismatch for %s" % pred.name)
            for a, s in zip(args, pred.arg_sorts):
                if not same_sort(a.sort, s):
                    raise SortError("ill-sorted argument to %s" % pred.name)
        l = Literal.__new__(Literal)
        l.positive = positive
        l.pred = pred
        l.args = args
        l.ground = all(a.ground for a in args)
        l.weight = sum(a.weight for a in args) + (0 if pred is None else 1)
        _LITS[key] = l
    return l


def lit_eq(lhs: Term, rhs: Term, positive: bool = True) -> Literal:
    return literal(positive, None, (lhs, rhs))


_COMPL: dict = {}


def complement(l: Literal) -> Literal:
    c = _COMPL.get(id(l))
    if c is None:
        c = literal(not l.positive, l.pred, l.args)
        _COMPL[id(l)] = c
    return c


def lit_vars(l: Literal) -> dict:
    if l.ground:
        return _EMPTY_VARS
    vs: dict = {}
    for a in l.args:
        for v, n in a.vars.items():
            vs[v] = vs.get(v, 0) + n
    return vs


def lit_apply(l: Literal, sub: dict) -> Literal:
    if l.ground or not sub:
        return l
    return literal(l.positive, l.pred, [apply_subst(a, sub) for a in l.args])


def lit_subterms(l: Literal) -> Iterator[tuple[tuple[int, ...], Term]]:
    """Subterm occurrences of a literal; positions start with the arg index."""
    for i, a in enumerate(l.args):
        for pos, s in subterms(a):
            yield (i,) + pos, s


def lit_replace_at(l: Literal, pos, new: Term) -> Literal:
    args = list(l.args)
    args[pos[0]] = replace_at(args[pos[0]], pos[1:], new)
    return literal(l.positive, l.pred, args)


# ---------------------------------------------------------------------------
# Occurrence replacement (E[s] -> E[t] at selected positions)

def occurrences(expr, s: Term) -> list[tuple[int, ...]]:
    """Positions of all occurrences of s in a Term or Literal."""
    if isinstance(expr, Literal):
        return [pos for pos, u in lit_subterms(expr) if u is s]
    return [pos for pos, u in subterms(expr) if u is s]


def replace_occurrences(expr, s: Term, positions, t: Term):
    """Replace exactly the selected occurrences of s in expr by t.

    positions is an iterable of position tuples or the string "all".
    Addressing a position not holding s is a fault (ValueError).
    """
    if positions == "all":
        positions = occurrences(expr, s)
    out = expr
    for pos in sorted(positions, reverse=True):
        if isinstance(expr, Literal):
            cur = subterm_at(expr.args[pos[0]], pos[1:])
        else:
            cur = subterm_at(expr, pos)
        if cur is not s:
            raise ValueError("position %r does not hold %r" % (pos, s))
        if isinstance(out, Literal):
            out = lit_replace_at(out, pos, t)
        else:
            out = replace_at(out, pos, t)
    return out


# ---------------------------------------------------------------------------
# Clauses

class Clause:
    """A multiset of literals plus saturation bookkeeping.

    Literals are deduplicated and canonically ordered at construction;
    variables are renumbered from 0 in order of first occurrence so that
    variants mostly coincide syntactically.
    """

    __slots__ = ("lits", "cid", "age", "depth", "goal_dist", "rule",
                 "premises", "note", "tag", "selected", "alive", "weight",
                 "akeys", "theory", "pure", "maxvid")

    def __init__(self, lits, rule="input", premises=(), age=0, depth=0,
                 goal_dist=None, note=None, tag=None):
        self.lits = normalize_lits(lits)
        self.cid = -1
        self.age = age
        self.depth = depth
        self.goal_dist = goal_dist  # None means "infinite"
        self.rule = rule
        self.premises = tuple(premises)
        self.note = note
        self.tag = tag
        self.selected = ()
        self.alive = True
        self.weight = sum(l.weight for l in self.lits)
        self.akeys = frozenset((id(l.pred), l.positive) for l in self.lits)
        self.theory = rule == "int_order_axiom"
        self.pure = all(_pure_arith_lit(l) for l in self.lits)
        self.maxvid = self.max_vid()

    @property
    def is_empty(self) -> bool:
        return not self.lits

    @property
    def is_unit(self) -> bool:
        return len(self.lits) == 1

    @property
    def ground(self) -> bool:
        return all(l.ground for l in self.lits)

    def max_vid(self) -> int:
        m = -1
        for l in self.lits:
            for v in lit_vars(l):
                if v > m:
                    m = v
        return m

    def __repr__(self):
        return clause_to_str(self)


_LIT_KEYS: dict = {}


def _pure_arith_term(t: Term) -> bool:
    if t.is_var or t.is_num:
        return True
    f = t.functor
    if f.role == "interpreted":
        return all(_pure_arith_term(a) for a in t.args)
    return f.role == "skolem" and not t.args


def _pure_arith_lit(l: Literal) -> bool:
    """Integer comparison or equality over numerals, variables, Skolem
    constants and arithmetic operators only."""
    if l.pred is not None and l.pred.role != "interpreted":
        return False
    if l.pred is None and not l.args[0].sort.is_int:
        return False
    return all(_pure_arith_term(a) for a in l.args)


def _lit_sort_key(l: Literal):
    # Variable-name insensitive structural key, so canonical variable
    # renumbering afterwards is stable across variants.  Memoized: literals
    # are interned and clause construction is hot.
    k = _LIT_KEYS.get(id(l))
    if k is None:
        k = (l.weight, not l.positive,
             l.pred.name if l.pred else "=", _skeleton(l))
        _LIT_KEYS[id(l)] = k
    return k


def _skeleton(l: Literal) -> str:
    parts = []

    def walk(t):
        if t.is_var:
            parts.append("?" + t.sort.name)
        elif t.is_num:
            parts.append(str(t.value))
        else:
            parts.append(t.functor.name)
            for a in t.args:
                walk(a)

    for a in l.args:
        walk(a)
    return " ".join(parts)


def normalize_lits(lits) -> tuple[Literal, ...]:
    uniq: dict = {}
    for l in lits:
        uniq[id(l)] = l
    ordered = sorted(uniq.values(), key=_lit_sort_key)
    remap: dict = {}
    out = []
    for l in ordered:
        out.append(_renumber_lit(l, remap))
    return tuple(out)


def _renumber_lit(l: Literal, remap: dict) -> Literal:
    if l.ground:
        return l
    return literal(l.positive, l.pred, [_renumber_term(a, remap) for a in l.args])


def _renumber_term(t: Term, remap: dict) -> Term:
    if t.ground:
        return t
    if t.is_var:
        nv = remap.get(t.vid)
        if nv is None:
            nv = var(len(remap), t.sort)
            remap[t.vid] = nv
        return nv
    return app(t.functor, [_renumber_term(a, remap) for a in t.args])


def shift_lits(lits, offset: int):
    """Rename variables apart by adding an offset to every variable id."""
    if offset == 0:
        return tuple(lits)
    out = []
    for l in lits:
        if l.ground:
            out.append(l)
        else:
            out.append(literal(l.positive, l.pred,
                               [_shift_term(a, offset) for a in l.args]))
    return tuple(out)


def _shift_term(t: Term, offset: int) -> Term:
    if t.ground:
        return t
    if t.is_var:
        return var(t.vid + offset, t.sort)
    return app(t.functor, [_shift_term(a, offset) for a in t.args])


def is_tautology(lits) -> bool:
    seen = set()
    for l in lits:
        if l.is_eq and l.positive and l.args[0] is l.args[1]:
            return True
        if id(complement(l)) in seen:
            return True
        seen.add(id(l))
    return False


# ---------------------------------------------------------------------------
# Printing (s-expression style, parseable by the frontend's term reader)

def term_to_str(t: Term) -> str:
    if t.is_var:
        return "?x%d" % t.vid
    if t.is_num:
        return str(t.value)
    if not t.args:
        return t.functor.name
    return "(%s %s)" % (t.functor.name, " ".join(term_to_str(a) for a in t.args))


def lit_to_str(l: Literal, pretty: bool = False) -> str:
    if l.pred is None:
        atom = "(= %s %s)" % (term_to_str(l.args[0]), term_to_str(l.args[1]))
    else:
        if l.args:
            atom = "(%s %s)" % (l.pred.name,
                                " ".join(term_to_str(a) for a in l.args))
        else:
            atom = l.pred.name
    if pretty and l.pred is not None and l.pred.name == "<" and not l.positive:
        # not(a < b) displays as b <= a
        return "(<= %s %s)" % (term_to_str(l.args[1]), term_to_str(l.args[0]))
    return atom if l.positive else "(not %s)" % atom


def clause_to_str(c: Clause, pretty: bool = False) -> str:
    if not c.lits:
        return "false"
    if len(c.lits) == 1:
        return lit_to_str(c.lits[0], pretty)
    return "(or %s)" % " ".join(lit_to_str(l, pretty) for l in c.lits)
