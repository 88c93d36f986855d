"""Given-clause saturation (Discount loop) over the superposition calculus.

Generating rules are implemented exactly as in the calculus figure: binary
resolution, superposition into non-equality and equality literals with the
term-ordering side conditions, equality resolution and equality factoring.
Forward simplification covers evaluation/cancellation of integer literals,
constructor injectivity/distinctness, demodulation by oriented unit
equalities, resolution against unit complements, guarded definition
rewriting and subsumption.  Passive clauses are not revisited (no backward
simplification except backward subsumption).
"""

from __future__ import annotations

import heapq
import time

from .arith import IntArith
from .datatypes import (CHANGED, DELETED, definition_rewrite_step,
                        exhaustiveness_axioms, extract_recursive_definitions,
                        injectivity_distinctness)
from .orderings import EQUAL, GREATER, KBO
from .terms import (Clause, Literal, apply_subst, complement, is_tautology,
                    lit_apply, lit_replace_at, lit_subterms, literal,
                    match_seq, num, shift_lits, subterm_at, unify)


# generating-rule products above this symbol count are discarded (and the
# incompleteness flag set); induction products are not capped, and the
# desk-scale proofs stay far below this
MAX_PRODUCT_WEIGHT = 30


class Stats:
    def __init__(self):
        self.generated = 0
        self.activated = 0
        self.deleted = 0
        self.subsumed = 0
        self.induction = {}

    def count_induction(self, rule):
        self.induction[rule] = self.induction.get(rule, 0) + 1

    @property
    def induction_total(self):
        return sum(self.induction.values())

    def brief(self):
        ind = ",".join("%s=%d" % kv for kv in sorted(self.induction.items()))
        return ("generated=%d activated=%d subsumed=%d induction=%d%s"
                % (self.generated, self.activated, self.subsumed,
                   self.induction_total, (" [%s]" % ind) if ind else ""))


class Result:
    def __init__(self, verdict, reason="", empty_clause=None, prover=None):
        self.verdict = verdict          # unsat | sat | unknown
        self.reason = reason            # saturated | resource-out | ""
        self.empty_clause = empty_clause
        self.prover = prover

    def __repr__(self):
        return self.verdict + (("(%s)" % self.reason) if self.reason else "")


def _atom_key(l: Literal):
    return (id(l.pred), l.positive)


class Prover:
    def __init__(self, sig, clauses, options, definitions=None):
        self.sig = sig
        self.opts = options
        self.kbo = KBO(sig, options.ordering_seed)
        self.arith = IntArith(sig)
        self.clauses: list[Clause] = []
        self.passive_age: list = []
        self.passive_weight: list = []
        self.in_passive: set = set()
        self.active: dict[int, Clause] = {}
        self.atom_index: dict = {}       # (pred,pol) -> [(clause, lit)]
        self.subterm_index: dict = {}    # head key -> [(clause, lit, pos, sub)]
        self.eq_sources: dict = {}       # head key of l -> [(clause, lit, l, r)]
        self.demod_units: dict = {}      # head key of l -> [(l, r, clause)]
        self.unit_clauses: list = []     # active unit clauses
        self.unit_index: dict = {}       # (pred,pol) -> [unit Clause]
        self.ground_units: dict = {}     # id(normalized lit) -> clause
        self.stats = Stats()
        self.seen_forms: set = set()
        self.fact_bounds: dict = {}   # (monomials, lb|ub) -> best constant
        self._shift_cache: dict = {}
        self._pick = 0
        self.start_time = None
        self.induction = None            # attached by prove()
        self.ta_present = any(s.is_term_algebra for s in sig.sorts.values())
        self.int_present = any(self._uses_int(c) for c in clauses)
        self.incomplete = self.ta_present or self.int_present or \
            options.induction != "none"

        self.definitions = list(definitions or [])
        found = extract_recursive_definitions(clauses, sig)
        known = {id(d.symbol) for d in self.definitions}
        self.definitions += [d for d in found if id(d.symbol) not in known]
        self.scales = self._input_scales(clauses)

        for c in clauses:
            self.register(c)
            self.push_passive(c)
        if self.ta_present:
            for c in exhaustiveness_axioms(sig):
                self.register(c)
                self.push_passive(c)
        if self.int_present:
            # order axioms are active from the start: they never resolve
            # with each other, and queueing them starves every ground chain
            for c in self.arith.order_axioms(self.scales):
                self.register(c)
                self.activate(c)

    def _uses_int(self, c: Clause) -> bool:
        for l in c.lits:
            if l.pred is self.sig.less:
                return True
            if any(self._term_uses_int(a) for a in l.args):
                return True
        return False

    def _term_uses_int(self, t) -> bool:
        if t.sort.is_int:
            return True
        return any(self._term_uses_int(a) for a in t.args)

    def _input_scales(self, clauses) -> list[int]:
        """Positive input numerals >= 2, smallest first, for the scaling
        monotonicity axioms."""
        seen = set()
        for c in clauses:
            for l in c.lits:
                for _, t in lit_subterms(l):
                    if t.is_num and abs(t.value) >= 2:
                        seen.add(abs(t.value))
        return sorted(seen)[:6]

    # -- clause store -------------------------------------------------------

    def register(self, c: Clause) -> Clause:
        c.cid = len(self.clauses)
        c.age = c.cid
        self.clauses.append(c)
        self.stats.generated += 1
        if c.is_unit and c.lits[0].ground:
            nl = self.arith.normalize_literal(c.lits[0])
            if isinstance(nl, Literal):
                self.ground_units.setdefault(id(nl), c)
        return c

    def push_passive(self, c: Clause):
        self.in_passive.add(c.cid)
        heapq.heappush(self.passive_age, (c.age, c.cid))
        # deeply nested induction descendants wait behind shallow clauses of
        # the same size (the worked proofs need depth <= 2); units jump
        # ahead (they simplify and close chains); multi-literal pure
        # arithmetic case splits wait behind structure-bearing clauses
        key = c.weight + 8 * max(0, c.depth - 2)
        if len(c.lits) == 1:
            key = max(key - 6, 0)
        elif c.pure and not c.theory:
            key += 6
        heapq.heappush(self.passive_weight, (key, c.cid))

    def pop_passive(self):
        ratio = max(self.opts.age_weight_ratio, 0)
        while self.in_passive:
            use_age = ratio == 0 or self._pick % (ratio + 1) == ratio
            heap = self.passive_age if use_age else self.passive_weight
            alt = self.passive_weight if use_age else self.passive_age
            src = heap if heap else alt
            if not src:
                return None
            _, cid = heapq.heappop(src)
            if cid in self.in_passive:
                self.in_passive.discard(cid)
                self._pick += 1
                c = self.clauses[cid]
                if c.alive:
                    return c
        return None

    # -- guard entailment (definition rewriting) -----------------------------

    def guard_entailed(self, lit: Literal):
        nl = self.arith.normalize_literal(lit)
        if nl is True:
            return True
        if nl is False or not isinstance(nl, Literal):
            return None
        return self.ground_units.get(id(nl))

    # -- forward simplification ----------------------------------------------

    def forward_simplify(self, c: Clause):
        """Simplify to fixpoint.  Returns (clause-or-None, extra clauses).

        None means the clause became redundant (true literal, tautology or
        subsumed).  Extras arise from positive constructor-equality splits.
        """
        extras = []
        cur = c
        for _ in range(100):
            step = self._simplify_once(cur)
            if step is None:
                return None, extras
            nxt, more = step
            extras.extend(more)
            if nxt is cur:
                break
            cur = nxt
        if is_tautology(cur.lits):
            return None, extras
        if self._bound_redundant(cur):
            return None, extras
        return cur, extras

    def _bound_view(self, c: Clause):
        """(primitive monomial key, lb|ub, value) for a ground unit
        comparison: 0 < g*M + c normalizes to a bound on the gcd-reduced,
        sign-canonical monomial combination M, so scalar multiples of the
        same fact share one registry entry."""
        if not (c.is_unit and c.ground):
            return None
        l = c.lits[0]
        if l.pred is not self.sig.less:
            return None
        d = self.arith.poly(l.args[1]).add(self.arith.poly(l.args[0]), -1)
        if not d.monomials:
            return None
        from math import ceil, floor, gcd
        g = 0
        for k in d.monomials.values():
            g = gcd(g, abs(k))
        items = sorted(d.monomials.items(), key=lambda mk: id(mk[0]))
        sign = 1 if items[0][1] > 0 else -1
        key = frozenset((id(m), sign * k // g) for m, k in items)
        if l.positive:
            kind, v = "lb", 1 - d.const     # 0 < g*M + c  means  g*M >= 1-c
        else:
            kind, v = "ub", -d.const        # not(...)     means  g*M <= -c
        if kind == "lb":
            v = ceil(v / g)
        else:
            v = floor(v / g)
        if sign < 0:
            kind = "ub" if kind == "lb" else "lb"
            v = -v
        return key, kind, v

    def _bound_redundant(self, c: Clause) -> bool:
        """A ground atomic bound implied by a registered stronger one is
        redundant (numeral-climbing chains die here)."""
        view = self._bound_view(c)
        if view is None:
            return False
        key, kind, value = view
        best = self.fact_bounds.get((key, kind))
        if best is None:
            return False
        return best >= value if kind == "lb" else best <= value

    def _simplify_once(self, c: Clause):
        # integer evaluation and ground cancellation
        lits = []
        changed = False
        for l in c.lits:
            r = self.arith.normalize_literal(l)
            if r is True:
                return None
            if r is False:
                changed = True
                continue
            if r is not l:
                changed = True
            lits.append(r)
        if changed:
            return self._simp_clause(lits, "arith", (c.cid,), c), []
        # constructor injectivity / distinctness
        verdict, payload = injectivity_distinctness(c.lits)
        if verdict == DELETED:
            return None
        if verdict == CHANGED:
            outs = [self._simp_clause(ls, "ta_simp", (c.cid,), c)
                    for ls in payload]
            return outs[0], outs[1:]
        # demodulation with oriented active unit equalities
        d = self._demodulate(c)
        if d is not None:
            return d, []
        # resolve against unit complements
        u = self._unit_simplify(c)
        if u is not None:
            return u, []
        # definition rewriting in the intended orientation
        if self.opts.function_definition_rewriting and self.definitions:
            r = definition_rewrite_step(c.lits, self.definitions,
                                        self.guard_entailed, self.arith,
                                        skip_clause=self._source_def(c))
            if r is not None:
                new_lits, def_clause, guard_prem = r
                if new_lits is None:
                    return None  # a literal rewrote to true
                prem = (c.cid,) + ((def_clause.cid,) if def_clause else ()) \
                    + tuple(p.cid for p in guard_prem)
                return self._simp_clause(new_lits, "def_rewrite", prem, c), []
        return c, []

    def _simp_clause(self, lits, rule, premises, src) -> Clause:
        nc = Clause(lits, rule=rule, premises=premises, depth=src.depth,
                    goal_dist=src.goal_dist, tag=src.tag)
        nc.theory = src.theory
        return self.register(nc)

    def _source_def(self, c: Clause):
        for d in self.definitions:
            for b in d.branches:
                if b.clause is c:
                    return c
        return None

    def _demodulate(self, c: Clause):
        for i, l in enumerate(c.lits):
            for pos, sub in lit_subterms(l):
                if sub.is_var or sub.is_num:
                    continue
                for (lhs, rhs, uc) in self.demod_units.get(id(sub.functor), ()):
                    if uc is c or not uc.alive:
                        continue
                    theta = match_seq([(lhs, sub)])
                    if theta is None:
                        continue
                    rt = apply_subst(rhs, theta)
                    lt = sub
                    if self.kbo.compare(lt, rt) != GREATER:
                        continue
                    nl = lit_replace_at(l, pos, rt)
                    lits = c.lits[:i] + (nl,) + c.lits[i + 1:]
                    return self._simp_clause(lits, "demod", (c.cid, uc.cid), c)
        return None

    def _unit_simplify(self, c: Clause):
        for i, l in enumerate(c.lits):
            target = complement(l)
            for uc in self.unit_index.get(_atom_key(target), ()):
                if not uc.alive or uc is c:
                    continue
                ul = uc.lits[0]
                orders = [tuple(zip(ul.args, target.args))]
                if ul.pred is None:
                    orders.append(((ul.args[0], target.args[1]),
                                   (ul.args[1], target.args[0])))
                if any(match_seq(list(o)) is not None for o in orders):
                    lits = c.lits[:i] + c.lits[i + 1:]
                    return self._simp_clause(lits, "unit_resolve",
                                             (c.cid, uc.cid), c)
        return None

    # -- subsumption ----------------------------------------------------------

    def subsumes(self, c: Clause, d: Clause) -> bool:
        if len(c.lits) > len(d.lits) or not c.akeys <= d.akeys:
            return False
        return _subsume_lits(c.lits, d.lits)

    def forward_subsumed(self, c: Clause) -> bool:
        nlits, akeys, lits = len(c.lits), c.akeys, c.lits
        for a in self.active.values():
            if a.alive and len(a.lits) <= nlits and a.akeys <= akeys \
                    and _subsume_lits(a.lits, lits):
                return True
        return False

    def backward_subsume(self, c: Clause):
        # active only; passive clauses meet forward subsumption when selected
        nlits, akeys, lits = len(c.lits), c.akeys, c.lits
        for a in list(self.active.values()):
            if a.alive and a is not c and nlits <= len(a.lits) \
                    and akeys <= a.akeys and _subsume_lits(lits, a.lits):
                a.alive = False
                del self.active[a.cid]
                self.stats.subsumed += 1

    # -- activation and indexing ----------------------------------------------

    def activate(self, c: Clause):
        if self.opts.literal_selection == "maximal":
            c.selected = self.kbo.maximal_literals(c.lits)
        else:
            c.selected = c.lits
        self.active[c.cid] = c
        self.stats.activated += 1
        view = self._bound_view(c)
        if view is not None:
            key, kind, value = view
            best = self.fact_bounds.get((key, kind))
            if best is None or (value > best if kind == "lb" else value < best):
                self.fact_bounds[(key, kind)] = value
        for l in c.selected:
            self.atom_index.setdefault(_atom_key(l), []).append((c, l))
            for pos, sub in lit_subterms(l):
                if sub.is_var:
                    continue
                key = id(sub.functor) if sub.is_app else ("num", sub.value)
                self.subterm_index.setdefault(key, []).append((c, l, pos, sub))
            if l.positive and l.pred is None:
                a, b = l.args
                for lhs, rhs in ((a, b), (b, a)):
                    if lhs.is_var:
                        continue
                    if self.kbo.compare(rhs, lhs) == GREATER:
                        continue
                    key = id(lhs.functor) if lhs.is_app else ("num", lhs.value)
                    self.eq_sources.setdefault(key, []).append((c, l, lhs, rhs))
        if c.is_unit:
            self.unit_clauses.append(c)
            self.unit_index.setdefault(_atom_key(c.lits[0]), []).append(c)
            l = c.lits[0]
            if l.positive and l.pred is None:
                a, b = l.args
                for lhs, rhs in ((a, b), (b, a)):
                    if lhs.is_var or lhs.is_num:
                        continue
                    if self.kbo.compare(lhs, rhs) == GREATER:
                        self.demod_units.setdefault(id(lhs.functor), []) \
                            .append((lhs, rhs, c))

    # -- generating inferences --------------------------------------------------

    def generate(self, g: Clause) -> list[Clause]:
        self._shift_cache.clear()
        out = []
        out += self._resolutions(g)
        out += self._superpositions(g)
        out += self._eq_resolutions(g)
        out += self._eq_factorings(g)
        out += self._int_ground_inferences(g)
        return out

    # -- ground integer chaining -------------------------------------------

    def _fact_info(self, l: Literal):
        """A ground comparison literal as (polynomial, lower bound):
        the literal states poly >= lo over the integers."""
        if l.pred is not self.sig.less or not l.ground:
            return None
        pa, pb = self.arith.poly(l.args[0]), self.arith.poly(l.args[1])
        if l.positive:
            return pb.add(pa, -1), 1    # a < b:  b-a >= 1
        return pa.add(pb, -1), 0        # not(a<b):  a-b >= 0

    def _fact_clause(self, poly, lo, rule, premises):
        # poly >= lo in the not(<) encoding; normalization canonicalizes
        lit = literal(False, self.sig.less,
                      (self.arith.render(poly), num(lo)))
        return self._product([lit], rule, premises)

    def _int_ground_inferences(self, g: Clause) -> list[Clause]:
        """Scaling, integer tightening and pairwise addition of ground unit
        comparisons.  Each product is a valid integer consequence of its
        premises (derivable by resolution through the order axioms); doing
        it directly spares the multi-hop queue latency of axiom chains."""
        if not self.int_present or not (g.is_unit and g.ground):
            return []
        info = self._fact_info(g.lits[0])
        if info is None:
            return []
        p, lo = info
        out = []
        for k in self.scales:
            out.append(self._fact_clause(p.scale(k), k * lo,
                                         "int_scale", (g,)))
        if g.lits[0].positive:
            # a < b tightens to a+1 <= b, i.e. the same poly with lo kept
            # but rendered non-strictly; cancellation normalizes the rest
            out.append(self._fact_clause(p, lo, "int_tighten", (g,)))
        for uc in self.unit_clauses:
            if not uc.alive or uc is g or not uc.lits[0].ground:
                continue
            vinfo = self._fact_info(uc.lits[0])
            if vinfo is None:
                continue
            q, qlo = vinfo
            # only additions where some monomial cancels make progress
            if not any(q.monomials.get(m, 0) * k < 0
                       for m, k in p.monomials.items()):
                continue
            out.append(self._fact_clause(p.add(q), lo + qlo,
                                         "int_combine", (g, uc)))
        return out

    def _partner_lits(self, g, d):
        """Rename d's literals apart from g (cached per activation)."""
        if d.ground:
            return d.lits
        off = g.maxvid + 1
        if off <= 0:
            return d.lits
        key = (id(d), off)
        hit = self._shift_cache.get(key)
        if hit is None:
            hit = shift_lits(d.lits, off)
            self._shift_cache[key] = hit
        return hit

    def _resolutions(self, g: Clause) -> list[Clause]:
        out = []
        for l in g.selected:
            target = complement(l)
            for (d, dl) in self.atom_index.get(_atom_key(target), ()):
                if not d.alive or _arith_noise(g, d):
                    continue
                dlits = self._partner_lits(g, d)
                dl2 = dlits[d.lits.index(dl)]
                orders = [tuple(zip(l.args, dl2.args))]
                if l.pred is None:
                    orders.append(((l.args[0], dl2.args[1]),
                                   (l.args[1], dl2.args[0])))
                for o in orders:
                    theta = _unify_seq(o)
                    if theta is None:
                        continue
                    lits = [lit_apply(x, theta) for x in g.lits if x is not l]
                    lits += [lit_apply(x, theta) for x in dlits if x is not dl2]
                    out.append(self._product(lits, "resolution", (g, d)))
                    break
        return [c for c in out if c is not None]

    def _superpositions(self, g: Clause) -> list[Clause]:
        out = []
        # g as the equality source
        for l in g.selected:
            if not (l.positive and l.pred is None):
                continue
            a, b = l.args
            for lhs, rhs in ((a, b), (b, a)):
                if lhs.is_var:
                    continue
                if self.kbo.compare(rhs, lhs) == GREATER:
                    continue
                key = id(lhs.functor) if lhs.is_app else ("num", lhs.value)
                for (d, dl, pos, sub) in self.subterm_index.get(key, ()):
                    if not d.alive or _arith_noise(g, d) \
                            or _quick_clash(lhs, sub):
                        continue
                    out.append(self._superpose(g, l, lhs, rhs, d, dl, pos,
                                               source_is_given=True))
        # g as the target
        for l in g.selected:
            for pos, sub in lit_subterms(l):
                if sub.is_var:
                    continue
                key = id(sub.functor) if sub.is_app else ("num", sub.value)
                for (d, dl, lhs, rhs) in self.eq_sources.get(key, ()):
                    if not d.alive or d is g or _arith_noise(g, d) \
                            or _quick_clash(lhs, sub):
                        continue  # the g-as-source pass already covered g,g
                    out.append(self._superpose(d, dl, lhs, rhs, g, l, pos,
                                               source_is_given=False))
        return [c for c in out if c is not None]

    def _superpose(self, sc, sl, lhs, rhs, tc, tl, pos, source_is_given):
        """One superposition attempt: rewrite tc's literal tl at pos."""
        if source_is_given:
            tlits = self._partner_lits(sc, tc)
            slits = sc.lits
            tl2 = tlits[tc.lits.index(tl)]
            sl2, lhs2, rhs2 = sl, lhs, rhs
        else:
            slits = self._partner_lits(tc, sc)
            tlits = tc.lits
            idx = sc.lits.index(sl)
            sl2 = slits[idx]
            # recover the renamed sides
            a2, b2 = sl2.args
            if (lhs is sl.args[0]) and (rhs is sl.args[1]):
                lhs2, rhs2 = a2, b2
            else:
                lhs2, rhs2 = b2, a2
            tl2 = tl
        sub = subterm_at(tl2.args[pos[0]], pos[1:])
        theta = unify(lhs2, sub)
        if theta is None:
            return None
        lt, rt = apply_subst(lhs2, theta), apply_subst(rhs2, theta)
        if self.kbo.compare(rt, lt) in (GREATER, EQUAL):
            return None
        if tl2.pred is None:
            side = tl2.args[pos[0]]
            other = tl2.args[1 - pos[0]]
            st = apply_subst(side, theta)
            ot = apply_subst(other, theta)
            if self.kbo.compare(ot, st) in (GREATER, EQUAL):
                return None
        nl = lit_replace_at(tl2, pos, rhs2)
        lits = [lit_apply(nl, theta)]
        lits += [lit_apply(x, theta) for x in tlits if x is not tl2]
        lits += [lit_apply(x, theta) for x in slits if x is not sl2]
        return self._product(lits, "superposition", (sc, tc))

    def _eq_resolutions(self, g: Clause) -> list[Clause]:
        out = []
        for l in g.selected:
            if l.pred is not None or l.positive:
                continue
            theta = unify(l.args[0], l.args[1])
            if theta is None:
                continue
            lits = [lit_apply(x, theta) for x in g.lits if x is not l]
            out.append(self._product(lits, "eq_resolution", (g,)))
        return [c for c in out if c is not None]

    def _eq_factorings(self, g: Clause) -> list[Clause]:
        out = []
        poseqs = [l for l in g.lits if l.positive and l.pred is None]
        for l1 in poseqs:
            if l1 not in g.selected:
                continue
            for l2 in poseqs:
                if l2 is l1:
                    continue
                for s, t in ((l1.args[0], l1.args[1]), (l1.args[1], l1.args[0])):
                    for s2, t2 in ((l2.args[0], l2.args[1]),
                                   (l2.args[1], l2.args[0])):
                        theta = unify(s, s2)
                        if theta is None:
                            continue
                        st = apply_subst(s, theta)
                        tt = apply_subst(t, theta)
                        t2t = apply_subst(t2, theta)
                        if self.kbo.compare(tt, st) in (GREATER, EQUAL):
                            continue
                        if self.kbo.compare(t2t, tt) in (GREATER, EQUAL):
                            continue
                        lits = [literal(True, None, (st, tt)),
                                literal(False, None, (tt, t2t))]
                        lits += [lit_apply(x, theta) for x in g.lits
                                 if x is not l1 and x is not l2]
                        out.append(self._product(lits, "eq_factoring", (g,)))
        return [c for c in out if c is not None]

    def _unit_chain(self, p: Clause) -> list[Clause]:
        """Unit-resulting continuation for theory-axiom instantiations:
        resolve the fresh product's remaining literals against active units
        right away instead of waiting a queue round trip, so the ground
        integer chains collapse into a few activations.  One unit per
        literal, oldest first."""
        if p.is_unit or len(p.lits) > 4:
            return []
        if not any(self.clauses[q].theory for q in p.premises):
            return []
        out = []
        for l in p.lits:
            target = complement(l)
            for uc in reversed(self.unit_index.get(_atom_key(target), ())):
                if not uc.alive:
                    continue
                ulits = self._partner_lits(p, uc)
                ul2 = ulits[0]
                orders = [tuple(zip(ul2.args, target.args))]
                if ul2.pred is None:
                    orders.append(((ul2.args[0], target.args[1]),
                                   (ul2.args[1], target.args[0])))
                for o in orders:
                    theta = _unify_seq(o)
                    if theta is None:
                        continue
                    lits = [lit_apply(x, theta) for x in p.lits if x is not l]
                    out.append(self._product(lits, "resolution", (p, uc)))
                    break
                if len(out) >= 16:
                    return out
        return out

    def _product(self, lits, rule, premises):
        out = []
        for l in lits:
            r = self.arith.normalize_literal(l)
            if r is True:
                return None
            if r is False:
                continue
            out.append(r)
        if is_tautology(out):
            return None
        weight = sum(l.weight for l in out)
        if weight > MAX_PRODUCT_WEIGHT:
            self.incomplete = True
            return None
        gd = [p.goal_dist for p in premises if p.goal_dist is not None]
        c = Clause(out, rule=rule, premises=tuple(p.cid for p in premises),
                   depth=max(p.depth for p in premises),
                   goal_dist=(min(gd) + 1) if gd else None,
                   tag=_inherit_tag(premises))
        if c.pure and not c.ground and c.lits:
            # pure non-ground lemmas (x+s>=x and friends) only feed
            # coefficient-climbing compositions; the useful arithmetic is
            # ground facts meeting the axioms
            self.incomplete = True
            return None
        return c

    # -- the loop ---------------------------------------------------------------

    def saturate(self) -> Result:
        self.start_time = time.monotonic()
        opts = self.opts
        while True:
            if opts.time_limit and time.monotonic() - self.start_time > opts.time_limit:
                return Result("unknown", "resource-out", prover=self)
            if opts.max_clauses and len(self.clauses) > opts.max_clauses:
                return Result("unknown", "resource-out", prover=self)
            g = self.pop_passive()
            if g is None:
                if self.incomplete:
                    return Result("unknown", "saturated", prover=self)
                return Result("sat", "saturated", prover=self)
            g2, extras = self.forward_simplify(g)
            for e in extras:
                if e.is_empty:
                    return Result("unsat", empty_clause=e, prover=self)
                self.push_passive(e)
            if g2 is None:
                self.stats.deleted += 1
                continue
            if g2.is_empty:
                return Result("unsat", empty_clause=g2, prover=self)
            if self.forward_subsumed(g2):
                self.stats.subsumed += 1
                continue
            self.backward_subsume(g2)
            self.activate(g2)
            products = self.generate(g2)
            if self.induction is not None:
                products += self.induction.products_for(g2)
            work = list(products)
            while work:
                p = work.pop(0)
                if p is None:
                    continue
                if p.lits and p.lits in self.seen_forms:
                    continue
                self.seen_forms.add(p.lits)
                if p.cid < 0:
                    self.register(p)
                if p.is_empty:
                    return Result("unsat", empty_clause=p, prover=self)
                self.push_passive(p)
                work.extend(self._unit_chain(p))


def _inherit_tag(premises):
    for p in premises:
        if p.tag is not None:
            return p.tag
    return None


def _arith_noise(g, d):
    """Pairings that only breed the ground comparison soup.

    Two axioms never resolve (the axiom set is satisfiable on its own).
    Ground unit comparisons meet the axioms only through the trichotomy
    case split; their other consequences come from the direct ground
    inferences (scale/tighten/combine).  Axioms never instantiate from
    variable-laden pure chains, and two derived pure clauses never resolve
    directly."""
    if g.theory and d.theory:
        return True
    if g.theory:
        return _axiom_blocks(g, d)
    if d.theory:
        return _axiom_blocks(d, g)
    return g.pure and d.pure


def _axiom_blocks(ax, d):
    if d.pure and not d.ground:
        return True
    if d.is_unit and d.ground and d.lits[0].pred is not None \
            and (ax.note or {}).get("axiom") != "trichotomy":
        return True
    return False


def _quick_clash(a, b) -> bool:
    """Cheap non-unifiability check (no bindings, so renaming-safe)."""
    if a.is_var or b.is_var:
        return False
    if a.is_num:
        return not (b.is_num and b.value == a.value)
    if b.is_num:
        return True
    if a.functor is not b.functor:
        return True
    for x, y in zip(a.args, b.args):
        if _quick_clash(x, y):
            return True
    return False


def _unify_seq(pairs):
    theta = None
    for a, b in pairs:
        theta = unify(a, b, theta)
        if theta is None:
            return None
    return theta if theta is not None else {}


def _subsume_lits(clits, dlits) -> bool:
    used = [False] * len(dlits)

    def go(i, binds):
        if i == len(clits):
            return True
        cl = clits[i]
        for j, dl in enumerate(dlits):
            if used[j] or dl.positive != cl.positive or dl.pred is not cl.pred:
                continue
            orders = [tuple(zip(cl.args, dl.args))]
            if cl.pred is None:
                orders.append(((cl.args[0], dl.args[1]),
                               (cl.args[1], dl.args[0])))
            for o in orders:
                b2 = match_seq(list(o), binds)
                if b2 is None:
                    continue
                used[j] = True
                if go(i + 1, b2):
                    return True
                used[j] = False
        return False

    return go(0, {})
