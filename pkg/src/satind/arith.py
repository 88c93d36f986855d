"""Ground integer evaluation, literal normalization, order axioms and
cancellation.

Every integer-sorted term has a canonical linear-polynomial form: an integer
constant plus monomials (non-arithmetic terms) with integer coefficients.
Comparisons use the single interpreted predicate `<`; s<=t is the negative
literal not(t<s), so complements never need theory-side rewriting.
"""

from __future__ import annotations

from typing import Optional, Union

from .terms import (Clause, Literal, Signature, Term, app, literal, num, var)


class LinearPolynomial:
    """constant + sum(coeff_i * monomial_i); zero coefficients are dropped."""

    __slots__ = ("const", "monomials")

    def __init__(self, const: int = 0, monomials: Optional[dict] = None):
        self.const = const
        self.monomials: dict[Term, int] = {}
        if monomials:
            for m, c in monomials.items():
                if c:
                    self.monomials[m] = c

    def add(self, other: "LinearPolynomial", factor: int = 1) -> "LinearPolynomial":
        mono = dict(self.monomials)
        for m, c in other.monomials.items():
            nc = mono.get(m, 0) + factor * c
            if nc:
                mono[m] = nc
            else:
                mono.pop(m, None)
        return LinearPolynomial(self.const + factor * other.const, mono)

    def scale(self, k: int) -> "LinearPolynomial":
        if k == 0:
            return LinearPolynomial(0)
        return LinearPolynomial(self.const * k,
                                {m: c * k for m, c in self.monomials.items()})

    @property
    def is_const(self) -> bool:
        return not self.monomials

    def __eq__(self, other):
        return (self.const == other.const
                and self.monomials == other.monomials)

    def __hash__(self):
        return hash((self.const, frozenset(self.monomials.items())))


def _term_key(t: Term):
    if t.is_var:
        return (0, t.vid)
    if t.is_num:
        return (1, t.value)
    return (2, t.weight, t.functor.name,
            tuple(_term_key(a) for a in t.args))


class IntArith:
    """Arithmetic normalization bound to one signature's symbols."""

    def __init__(self, sig: Signature):
        self.sig = sig
        self._lit_memo: dict = {}

    # -- polynomial form ----------------------------------------------------

    def poly(self, t: Term) -> LinearPolynomial:
        if t.is_num:
            return LinearPolynomial(t.value)
        if t.is_var:
            return LinearPolynomial(0, {t: 1})
        f = t.functor
        sig = self.sig
        if f is sig.plus:
            return self.poly(t.args[0]).add(self.poly(t.args[1]))
        if f is sig.minus:
            return self.poly(t.args[0]).add(self.poly(t.args[1]), -1)
        if f is sig.uminus:
            return self.poly(t.args[0]).scale(-1)
        if f is sig.times:
            a = self.poly(t.args[0])
            b = self.poly(t.args[1])
            if a.is_const:
                return b.scale(a.const)
            if b.is_const:
                return a.scale(b.const)
            # non-linear product stays an opaque monomial
            return LinearPolynomial(0, {self._monomial(t): 1})
        return LinearPolynomial(0, {self._monomial(t): 1})

    def _monomial(self, t: Term) -> Term:
        # normalize argument subterms so equal monomials coincide
        if not t.args:
            return t
        return app(t.functor, [self.normalize_term(a) for a in t.args])

    def render(self, p: LinearPolynomial) -> Term:
        parts = []
        for m in sorted(p.monomials, key=_term_key):
            c = p.monomials[m]
            parts.append(m if c == 1 else app(self.sig.times, (num(c), m)))
        acc = None
        for piece in parts:
            acc = piece if acc is None else app(self.sig.plus, (acc, piece))
        if acc is None:
            return num(p.const)
        if p.const:
            acc = app(self.sig.plus, (acc, num(p.const)))
        return acc

    def normalize_term(self, t: Term) -> Term:
        """Canonical form: polynomial rendering for integer-sorted subterms."""
        if t.is_var or t.is_num:
            return t
        if t.sort.is_int:
            return self.render(self.poly(t))
        if not t.args:
            return t
        return app(t.functor, [self.normalize_term(a) for a in t.args])

    # -- literal evaluation ---------------------------------------------------

    def is_int_literal(self, l: Literal) -> bool:
        if l.pred is self.sig.less:
            return True
        return l.pred is None and l.args[0].sort.is_int

    def evaluate_ground(self, l: Literal) -> Union[bool, Literal]:
        """Fold numerals, decide fully-numeral atoms, else normalize arguments.

        Returns the truth of the literal (True/False) or the literal with
        normalized arguments.
        """
        if not self.is_int_literal(l):
            nargs = tuple(self.normalize_term(a) for a in l.args)
            if nargs != l.args:
                l = literal(l.positive, l.pred, nargs)
            if l.pred is None and l.args[0] is l.args[1]:
                return l.positive
            return l
        pa = self.poly(l.args[0])
        pb = self.poly(l.args[1])
        if pa.is_const and pb.is_const:
            holds = pa.const < pb.const if l.pred is not None else \
                pa.const == pb.const
            return holds == l.positive
        if pa == pb:
            # t<t is false, t=t is true
            return l.positive if l.pred is None else not l.positive
        nl = literal(l.positive, l.pred, (self.render(pa), self.render(pb)))
        return nl

    def cancel(self, l: Literal) -> Union[bool, Literal]:
        """Subtract the common monomial mass from both sides.

        The result has only nonnegative coefficients on each side:
        l ∘ r becomes N ∘ P where P-N = r-l.  Fully cancelled atoms are
        decided (0=0 true, 0<0 false), respecting the literal's polarity.
        """
        if not self.is_int_literal(l):
            return l
        diff = self.poly(l.args[1]).add(self.poly(l.args[0]), -1)
        pos = LinearPolynomial(max(diff.const, 0),
                               {m: c for m, c in diff.monomials.items() if c > 0})
        neg = LinearPolynomial(max(-diff.const, 0),
                               {m: -c for m, c in diff.monomials.items() if c < 0})
        if pos.is_const and neg.is_const and pos.const == 0 and neg.const == 0:
            holds = True if l.pred is None else False  # 0=0 / 0<0
            return holds == l.positive
        if pos.is_const and neg.is_const:
            holds = (neg.const == pos.const) if l.pred is None else \
                (neg.const < pos.const)
            return holds == l.positive
        return literal(l.positive, l.pred, (self.render(neg), self.render(pos)))

    def normalize_literal(self, l: Literal) -> Union[bool, Literal]:
        """evaluate_ground plus, for ground literals, cancellation.

        Memoized per interned literal; this sits on the clause-construction
        hot path.
        """
        r = self._lit_memo.get(id(l))
        if r is None:
            r = self.evaluate_ground(l)
            if isinstance(r, Literal) and r.ground:
                r = self.cancel(r)
            self._lit_memo[id(l)] = r
        return r

    # -- comparison builders ---------------------------------------------------

    def lt(self, a: Term, b: Term) -> Literal:
        return literal(True, self.sig.less, (a, b))

    def leq(self, a: Term, b: Term) -> Literal:
        return literal(False, self.sig.less, (b, a))

    def succ(self, t: Term) -> Term:
        return self.normalize_term(app(self.sig.plus, (t, num(1))))

    def pred_term(self, t: Term) -> Term:
        return self.normalize_term(app(self.sig.minus, (t, num(1))))

    # -- axioms ---------------------------------------------------------------

    def order_axioms(self, scales=()) -> list[Clause]:
        """The fixed linear-order clause set over < (with <= as negated <).

        Totality, antisymmetry/trichotomy, the four transitivity shapes,
        discreteness, irreflexivity, monotonicity of + with respect to both
        comparisons, and scaling monotonicity for the positive numerals the
        problem mentions.  Each clause is valid over the integers; the
        scaling forms replace two-premise addition, whose pairwise products
        flood saturation with the whole positive cone of derived facts.
        """
        i = self.sig.int_sort
        x, y, z = (var(k, i) for k in range(3))
        lt, leq = self.lt, self.leq
        one = num(1)

        def plus(a, b):
            return app(self.sig.plus, (a, b))

        def eq(a, b):
            return literal(True, None, (a, b))

        def times(k, a):
            return app(self.sig.times, (num(k), a))

        axioms = [
            ("totality", [leq(x, y), leq(y, x)]),
            ("trichotomy", [lt(x, y), lt(y, x), eq(x, y)]),
            ("trans_leq_leq", [lt(y, x), lt(z, y), leq(x, z)]),
            ("trans_lt_lt", [leq(y, x), leq(z, y), lt(x, z)]),
            ("trans_leq_lt", [lt(y, x), leq(z, y), lt(x, z)]),
            ("trans_lt_leq", [leq(y, x), lt(z, y), lt(x, z)]),
            ("discrete_up", [leq(y, x), leq(plus(x, one), y)]),
            ("discrete_down", [lt(y, x), lt(x, plus(y, one))]),
            ("irreflexivity", [leq(x, x)]),
            ("mono_add_leq", [lt(y, x), leq(plus(x, z), plus(y, z))]),
            ("mono_add_lt", [leq(y, x), lt(plus(x, z), plus(y, z))]),
        ]
        for k in sorted(set(scales)):
            if k >= 2:
                axioms.append(("scale_lt_%d" % k,
                               [leq(y, x), lt(times(k, x), times(k, y))]))
                axioms.append(("scale_leq_%d" % k,
                               [lt(y, x), leq(times(k, x), times(k, y))]))
        out = []
        for name, lits in axioms:
            out.append(Clause(lits, rule="int_order_axiom", note={"axiom": name}))
        return out
