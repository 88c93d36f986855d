"""Induction inference rules for the saturation loop.

Covers single-clause induction with structural, destructor-based
well-founded, less-predicate and recursive-definition schemas, multi-clause
induction, induction with generalization (occurrence masks), induction
hypothesis rewriting, and the integer rules (upward/downward with a bound
premise, strict variants with weakened conclusions, intervals and default
bound 0).

A rule application does not add the clausified schema itself: it adds
cnf(not premise) with the target clause's side literals attached, which is
the result of binary-resolving the schema's conclusion literal against the
induction literal (and bound guards against the bound premises).
"""

from __future__ import annotations

from itertools import combinations

from .formulas import (FAtom, FNot, Formula, conj, exists, forall, forall_all,
                       implies)
from .orderings import EQUAL, GREATER
from .terms import (Clause, Literal, Term, app, complement, is_tautology,
                    literal, lit_subterms, num, occurrences,
                    replace_occurrences, subterms, var)


class InductionApplication:
    """One candidate application: the induction literal L-bar[t], the ground
    induction term, the premise clauses and the schema to instantiate."""

    __slots__ = ("induction_lit", "term", "premises", "schema_kind",
                 "mask", "definition", "position", "bounds", "sides",
                 "strictness")

    def __init__(self, induction_lit, term, premises, schema_kind,
                 mask="all", definition=None, position=None, bounds=(),
                 sides=(), strictness=None):
        self.induction_lit = induction_lit
        self.term = term
        self.premises = tuple(premises)   # first contains induction_lit
        self.schema_kind = schema_kind
        self.mask = mask                  # "all" or tuple of positions
        self.definition = definition
        self.position = position
        self.bounds = tuple(bounds)       # [(bound_term, unit_clause)]
        self.sides = tuple(sides)         # [(clause, literal)] extra premises
        self.strictness = strictness      # interval variants: (lo, hi)


# ---------------------------------------------------------------------------
# Schema premise builders.  `inst` maps a term u to the formula L[u]; `fresh`
# yields fresh variable ids.  The returned formula is the F of F -> forall x.L[x].

def structural_premise(sig, sort, inst, fresh) -> Formula:
    parts = []
    for c in sig.constructors[sort.name]:
        ys = [var(fresh(), s) for s in c.arg_sorts]
        hyps = [inst(ys[i]) for i, s in enumerate(c.arg_sorts) if s is sort]
        concl = inst(app(c, ys))
        parts.append(forall_all(ys, implies(conj(hyps), concl) if hyps else concl))
    return conj(parts)


def destructor_premise(sig, sort, inst, fresh) -> Formula:
    y = var(fresh(), sort)
    conjuncts = [FNot(inst(y))]
    for c in sig.constructors[sort.name]:
        if not c.arity:
            continue
        dtors = sig.destructors.get(c.name)
        if not dtors or any(d is None for d in dtors):
            raise ValueError("sort %s lacks destructors for %s"
                             % (sort.name, c.name))
        rebuilt = app(c, [app(d, (y,)) for d in dtors])
        hyps = [inst(app(dtors[i], (y,)))
                for i, s in enumerate(c.arg_sorts) if s is sort]
        if hyps:
            conjuncts.append(implies(FAtom(literal(True, None, (y, rebuilt))),
                                     conj(hyps)))
    return FNot(exists(y, conj(conjuncts)))


def less_premise(sig, sort, inst, fresh):
    """The fresh-predicate well-founded schema; nat-shaped sorts only."""
    rec = [c for c in sig.constructors[sort.name] if c.arity]
    if len(rec) != 1 or rec[0].arity != 1:
        raise ValueError("less-predicate schema needs one unary recursive "
                         "constructor")
    c = rec[0]
    dtors = sig.destructors.get(c.name)
    if not dtors or dtors[0] is None:
        raise ValueError("missing destructor for %s" % c.name)
    d = dtors[0]
    less = sig.fresh_predicate("less", (sort,))
    y = var(fresh(), sort)
    z = var(fresh(), sort)
    w = var(fresh(), sort)

    def lp(t):
        return FAtom(literal(True, less, (t,)))

    body = conj([
        FNot(inst(y)),
        forall(z, implies(lp(z), inst(z))),
        implies(FAtom(literal(True, None, (y, app(c, (app(d, (y,)),))))),
                lp(app(d, (y,)))),
        forall(w, implies(lp(app(c, (app(d, (w,)),))), lp(app(d, (w,))))),
    ])
    return FNot(exists(y, body)), less


def recdef_premise(definition, position, inst, fresh) -> Formula:
    parts = []
    for b in definition.branches:
        pat = b.header_args[position]
        ren = {v: var(fresh(), s) for v, s in _var_sorts(pat).items()}
        pat2 = _rename(pat, ren)
        if b.rec_calls:
            hyps = [inst(_rename(call[position], ren)) for call in b.rec_calls]
            parts.append(forall_all(ren.values(),
                                    implies(conj(hyps), inst(pat2))))
        else:
            parts.append(forall_all(ren.values(), inst(pat2)))
    return conj(parts)


def _var_sorts(t: Term) -> dict:
    out = {}

    def walk(u):
        if u.is_var:
            out[u.vid] = u.sort
        for a in u.args:
            walk(a)

    walk(t)
    return out


def _rename(t: Term, ren: dict) -> Term:
    if t.ground:
        return t
    if t.is_var:
        return ren[t.vid]
    return app(t.functor, [_rename(a, ren) for a in t.args])


def int_upward_premise(arith, b, inst, fresh) -> Formula:
    y = var(fresh(), arith.sig.int_sort)
    return conj([
        inst(b),
        forall(y, implies(conj([FAtom(arith.leq(b, y)), inst(y)]),
                          inst(arith.succ(y)))),
    ])


def int_downward_premise(arith, b, inst, fresh) -> Formula:
    y = var(fresh(), arith.sig.int_sort)
    return conj([
        inst(b),
        forall(y, implies(conj([FAtom(arith.leq(y, b)), inst(y)]),
                          inst(arith.pred_term(y)))),
    ])


def int_interval_up_premise(arith, b1, b2, inst, fresh) -> Formula:
    y = var(fresh(), arith.sig.int_sort)
    return conj([
        inst(b1),
        forall(y, implies(conj([FAtom(arith.leq(b1, y)),
                                FAtom(arith.lt(y, b2)), inst(y)]),
                          inst(arith.succ(y)))),
    ])


def int_interval_down_premise(arith, b1, b2, inst, fresh) -> Formula:
    y = var(fresh(), arith.sig.int_sort)
    return conj([
        inst(b2),
        forall(y, implies(conj([FAtom(arith.lt(b1, y)),
                                FAtom(arith.leq(y, b2)), inst(y)]),
                          inst(arith.pred_term(y)))),
    ])


def full_schema(premise: Formula, inst, x: Term, guards=()) -> Formula:
    """F -> forall x.(guards -> L[x]), the valid schema formula itself."""
    concl = inst(x)
    if guards:
        concl = implies(conj([FAtom(g) for g in guards]), concl)
    return implies(premise, forall(x, concl))


# ---------------------------------------------------------------------------

class InductionEngine:
    """Target selection and rule application, driven from the loop on every
    clause activation."""

    def __init__(self, prover, clausifier):
        self.prover = prover
        self.opts = prover.opts
        self.arith = prover.arith
        self.sig = prover.sig
        self.clausifier = clausifier
        self._tag = 0
        self._fresh_vid = 20_000_000
        self._hrw_seen: set = set()
        self._done: set = set()
        self._bounds_cache: dict = {}
        self._applied = 0

    def fresh(self) -> int:
        self._fresh_vid += 1
        return self._fresh_vid

    def next_tag(self) -> int:
        self._tag += 1
        return self._tag

    # -- entry point ---------------------------------------------------------

    def products_for(self, g: Clause) -> list[Clause]:
        if self.opts.induction == "none":
            return []
        out = []
        for ap in self.select_targets(g):
            out += self.apply(ap)
        if self.opts.induction_hypothesis_rewriting:
            out += self.hypothesis_rewriting(g)
        return out

    # -- target selection ------------------------------------------------------

    def _depth_ok(self, c: Clause) -> bool:
        limit = self.opts.induction_max_depth
        return limit == 0 or c.depth < limit

    def _candidate_lits(self, c: Clause):
        if self.opts.induction_unit_only and not c.is_unit:
            return
        for l in c.lits:
            if not l.ground:
                continue
            if self.opts.induction_neg_only and l.positive:
                continue
            yield l

    def select_targets(self, g: Clause, allow_complex=None) \
            -> list[InductionApplication]:
        if not self._depth_ok(g):
            return []
        if allow_complex is None:
            allow_complex = self.opts.induction_on_complex_terms
        out = []
        for l in self._candidate_lits(g):
            if self.opts.struct_enabled:
                for t in self._ta_terms(l, allow_complex):
                    out += self._ta_applications(g, l, t)
            if self.opts.int_enabled:
                for t in self._int_terms(l, allow_complex):
                    out += self._int_applications(g, l, t)
        return out

    def _ta_terms(self, l: Literal, allow_complex) -> list[Term]:
        seen, out = set(), []
        for _, u in lit_subterms(l):
            if id(u) in seen:
                continue
            seen.add(id(u))
            if not (u.ground and u.sort.is_term_algebra):
                continue
            if u.is_const:
                if not u.functor.is_constructor:
                    out.append(u)
            elif allow_complex and _has_induction_constant(u):
                out.append(u)
        return out

    def _int_terms(self, l: Literal, allow_complex) -> list[Term]:
        # pure linear facts over Skolems and numerals are decided by the
        # order axioms; induction only pays off when the literal carries
        # problem structure
        if not any(u.is_app and u.functor.role != "interpreted" and u.args
                   for _, u in lit_subterms(l)):
            return []
        seen, out = set(), []
        for _, u in lit_subterms(l):
            if id(u) in seen:
                continue
            seen.add(id(u))
            if not (u.ground and u.sort.is_int) or u.is_num:
                continue
            if not u.is_const and not (allow_complex and
                                       _has_induction_constant(u)):
                continue
            # comparison filter: skip t o s when t is one whole side and
            # does not occur in the other side
            if l.pred is self.sig.less:
                a, b = l.args
                if u is a and u not in _subs(b):
                    continue
                if u is b and u not in _subs(a):
                    continue
            out.append(u)
        return out

    # -- term-algebra applications ----------------------------------------------

    def _schema_kinds(self, sort):
        kind = self.opts.structural_induction_kind
        kinds = [kind] if kind != "all" else ["one", "two", "three", "rec_def"]
        out = []
        for k in kinds:
            if k == "two" and not _has_full_destructors(self.sig, sort):
                continue
            if k == "three" and not _nat_shaped(self.sig, sort):
                continue
            if k == "rec_def":
                for d in self.prover.definitions:
                    for pos in sorted(d.inductive_positions):
                        if d.branches[0].header_args[pos].sort is sort:
                            out.append(("rec_def", d, pos))
                continue
            out.append((k, None, None))
        return out

    def _ta_applications(self, g, l, t):
        kinds = self._schema_kinds(t.sort)
        out = [InductionApplication(l, t, (g,), kind, definition=d,
                                    position=pos)
               for kind, d, pos in kinds]
        # multi-clause variants next: the worked proofs need them early
        if self.opts.induction_multiclause:
            for sides in self._side_premise_sets(g, l, t):
                for kind, d, pos in kinds:
                    out.append(InductionApplication(
                        l, t, (g,), kind, definition=d, position=pos,
                        sides=sides))
        if self.opts.induction_gen:
            occ = occurrences(l, t)
            if len(occ) > 1:
                masks = _proper_masks(occ, self.opts.max_gen_masks)
                preferred = self._changing_mask(l, t, occ)
                if preferred in masks:
                    masks.remove(preferred)
                    masks.insert(0, preferred)
                for mask in masks:
                    for kind, d, pos in kinds:
                        out.append(InductionApplication(
                            l, t, (g,), kind, mask=mask, definition=d,
                            position=pos))
        return out

    def _changing_mask(self, l, t, occ):
        """Occurrences of t sitting at inductive argument positions of a
        defined function: the preferred generalization keeps the unchanging
        occurrences concrete."""
        inductive = {id(d.symbol): d.inductive_positions
                     for d in self.prover.definitions}
        chosen = []
        for pos in occ:
            if len(pos) < 2:
                continue
            parent = l.args[pos[0]]
            for i in pos[1:-1]:
                parent = parent.args[i]
            if parent.is_app and pos[-1] in inductive.get(id(parent.functor),
                                                          ()):
                chosen.append(pos)
        return tuple(chosen)

    def _side_premise_sets(self, g, l, t):
        cands = []
        seen = set()
        for uc in self.prover.ground_units.values():
            if not uc.alive or uc is g or uc.cid in seen:
                continue
            seen.add(uc.cid)
            ul = uc.lits[0]
            if ul is l or ul is complement(l):
                continue
            if t in _subs_lit(ul):
                cands.append((uc, ul))
        cands.sort(key=lambda p: p[0].cid)
        cands = cands[:6]
        sets = []
        for n in range(1, self.opts.max_side_premises + 1):
            for combo in combinations(cands, n):
                sets.append(combo)
                if len(sets) >= 8:
                    return sets
        return sets

    # -- integer applications ------------------------------------------------------

    def _int_applications(self, g, l, t):
        """Bound-premise variants, oldest bounds first, capped per target.

        The earliest unit comparisons are the input conjecture's own bounds,
        so the cap keeps exactly the applications the worked proofs need
        while damping the bound cascade from nested inductions.
        """
        opts = self.opts
        ge, gt, le, lt = self._bounds_for(t)
        out = []
        infinite = opts.int_induction_interval in ("infinite", "both")
        finite = opts.int_induction_interval in ("finite", "both")
        if infinite:
            for kind, bounds in (("int_up", ge), ("int_up_strict", gt),
                                 ("int_down", le), ("int_down_strict", lt)):
                for b, uc in bounds:
                    out.append(InductionApplication(l, t, (g,), kind,
                                                    bounds=((b, uc),)))
        if finite:
            for lo_kind, lows in (("ge", ge), ("gt", gt)):
                for hi_kind, highs in (("le", le), ("lt", lt)):
                    for b1, uc1 in lows:
                        for b2, uc2 in highs:
                            for kind in ("int_interval_up",
                                         "int_interval_down"):
                                out.append(InductionApplication(
                                    l, t, (g,), kind,
                                    bounds=((b1, uc1), (b2, uc2)),
                                    strictness=(lo_kind, hi_kind)))
        if opts.int_induction_default_bound:
            out.append(InductionApplication(l, t, (g,), "int_default_up"))
            out.append(InductionApplication(l, t, (g,), "int_default_down"))
        return out[:8]

    def _bounds_for(self, t):
        """Ground unit comparisons bounding t, harvested from the state.

        Deduplicated per bound term (oldest clause wins) and capped at the
        two oldest bounds per direction.
        """
        ck = (id(t), len(self.prover.ground_units))
        hit = self._bounds_cache.get(ck)
        if hit is not None:
            return hit
        ge, gt, le, lt = [], [], [], []
        seen = set()
        for uc in self.prover.ground_units.values():
            if not uc.alive or uc.cid in seen:
                continue
            seen.add(uc.cid)
            ul = uc.lits[0]
            if ul.pred is not self.sig.less:
                continue
            a, b = ul.args
            if ul.positive:
                if b is t and a is not t:
                    gt.append((a, uc))   # a < t
                elif a is t and b is not t:
                    lt.append((b, uc))   # t < b
            else:
                if a is t and b is not t:
                    ge.append((b, uc))   # not(t < b)  i.e. t >= b
                elif b is t and a is not t:
                    le.append((a, uc))   # not(b < t)  i.e. t <= b
        result = tuple(_dedupe_bounds(bs) for bs in (ge, gt, le, lt))
        self._bounds_cache[ck] = result
        return result

    # -- rule application -----------------------------------------------------------

    def apply(self, ap: InductionApplication) -> list[Clause]:
        # one application per interned shape, however often the literal
        # reappears in later clauses (products carry fresh Skolems, so the
        # clause-level duplicate filter cannot catch these)
        key = (id(ap.induction_lit), id(ap.term), ap.schema_kind, ap.mask,
               ap.strictness, tuple(id(b) for b, _ in ap.bounds),
               tuple(id(sl) for _, sl in ap.sides),
               id(ap.definition), ap.position)
        if key in self._done:
            return []
        # ration: induction applications drip in with the activation count
        # so schema products never outpace the saturation they should guide;
        # a skipped application stays eligible for later retries
        if self._applied >= 30 + self.prover.stats.activated // 4:
            return []
        self._done.add(key)
        # skip applications isomorphic modulo Skolem renaming: nested schema
        # instances reproduce the whole target family with fresh Skolems,
        # and the isomorphic copy can never contribute a new refutation
        skmap: dict = {}
        skel = (skolem_skeleton(ap.induction_lit, ap.term, skmap),
                ap.schema_kind, ap.mask, ap.strictness,
                tuple(_skel_term(b, None, skmap) for b, _ in ap.bounds),
                tuple(skolem_skeleton(sl, ap.term, skmap)
                      for _, sl in ap.sides),
                id(ap.definition), ap.position)
        if skel in self._done:
            return []
        self._done.add(skel)
        l_pos = complement(ap.induction_lit)
        t = ap.term
        positions = occurrences(l_pos, t) if ap.mask == "all" else ap.mask

        def main_inst(u):
            return FAtom(replace_occurrences(l_pos, t, positions, u))

        inst = main_inst
        if ap.sides:
            side_lits = [sl for (_, sl) in ap.sides]

            def inst(u):
                hyps = [FAtom(replace_occurrences(sl, t, "all", u))
                        for sl in side_lits]
                return implies(conj(hyps), main_inst(u))

        try:
            premise, rule, note, residual = self._build_premise(ap, inst)
        except ValueError:
            return []
        neg = self.clausifier.clausify(FNot(premise))
        extra = []
        for c, skip in [(ap.premises[0], ap.induction_lit)] + \
                [(uc, sl) for (uc, sl) in ap.sides] + \
                [(uc, uc.lits[0]) for (_, uc) in ap.bounds]:
            extra += [x for x in c.lits if x is not skip]
        prem_ids = tuple(c.cid for c in ap.premises) + \
            tuple(uc.cid for (uc, _) in ap.sides) + \
            tuple(uc.cid for (_, uc) in ap.bounds)
        depth = 1 + max(c.depth for c in ap.premises)
        tag = self.next_tag()
        gd = [c.goal_dist for c in ap.premises if c.goal_dist is not None]
        out = []
        for k in neg:
            lits = []
            skip = False
            for l in list(k.lits) + residual + extra:
                r = self.arith.normalize_literal(l)
                if r is True:
                    skip = True
                    break
                if r is False:
                    continue
                lits.append(r)
            if skip or is_tautology(lits):
                continue
            c = Clause(lits, rule=rule, premises=prem_ids, depth=depth,
                       goal_dist=(min(gd) + 1) if gd else None,
                       tag=tag, note=note)
            # simplify at birth: base cases evaluate away and side literals
            # resolve against active units, which shrinks the schema clauses
            # to the forms the search actually needs
            self.prover.register(c)
            s, extras = self.prover.forward_simplify(c)
            for e in extras:
                self.prover.push_passive(e)
            if s is None:
                continue
            out.append(s)
        if out:
            self._applied += 1
            self.prover.stats.count_induction(rule)
        return out

    def _build_premise(self, ap: InductionApplication, inst):
        kind = ap.schema_kind
        t = ap.term
        note = {"kind": kind, "term": t, "lit": ap.induction_lit,
                "mask": ap.mask,
                "sides": tuple(sl for (_, sl) in ap.sides)}
        residual = []
        if kind == "one":
            return (structural_premise(self.sig, t.sort, inst, self.fresh),
                    self._rule_name(ap, "ind_struct"), note, residual)
        if kind == "two":
            return (destructor_premise(self.sig, t.sort, inst, self.fresh),
                    self._rule_name(ap, "ind_wf_dtor"), note, residual)
        if kind == "three":
            premise, less = less_premise(self.sig, t.sort, inst, self.fresh)
            note["less"] = less.name
            return premise, self._rule_name(ap, "ind_wf_less"), note, residual
        if kind == "rec_def":
            note["def"] = ap.definition.symbol.name
            note["pos"] = ap.position
            return (recdef_premise(ap.definition, ap.position, inst, self.fresh),
                    self._rule_name(ap, "ind_recdef"), note, residual)
        if kind in ("int_up", "int_up_strict"):
            b = ap.bounds[0][0]
            note["bound"] = b
            return (int_upward_premise(self.arith, b, inst, self.fresh),
                    "int_ind_up" if kind == "int_up" else "int_ind_up_strict",
                    note, residual)
        if kind in ("int_down", "int_down_strict"):
            b = ap.bounds[0][0]
            note["bound"] = b
            return (int_downward_premise(self.arith, b, inst, self.fresh),
                    "int_ind_down" if kind == "int_down"
                    else "int_ind_down_strict", note, residual)
        if kind == "int_interval_up":
            b1, b2 = ap.bounds[0][0], ap.bounds[1][0]
            note["bound"] = b1
            note["bound2"] = b2
            note["strict"] = ap.strictness
            return (int_interval_up_premise(self.arith, b1, b2, inst, self.fresh),
                    "int_ind_interval_up", note, residual)
        if kind == "int_interval_down":
            b1, b2 = ap.bounds[0][0], ap.bounds[1][0]
            note["bound"] = b1
            note["bound2"] = b2
            note["strict"] = ap.strictness
            return (int_interval_down_premise(self.arith, b1, b2, inst,
                                              self.fresh),
                    "int_ind_interval_down", note, residual)
        if kind == "int_default_up":
            note["bound"] = num(0)
            residual = [self.arith.lt(t, num(0))]  # retained guard not(t>=0)
            return (int_upward_premise(self.arith, num(0), inst, self.fresh),
                    "int_ind_default_up", note, residual)
        if kind == "int_default_down":
            note["bound"] = num(0)
            residual = [self.arith.lt(num(0), t)]
            return (int_downward_premise(self.arith, num(0), inst, self.fresh),
                    "int_ind_default_down", note, residual)
        raise ValueError("unknown schema kind %s" % kind)

    def _rule_name(self, ap, base):
        if ap.sides:
            return "ind_mc"
        if ap.mask != "all":
            return "ind_gen"
        return base

    # -- induction hypothesis rewriting ------------------------------------------

    def hypothesis_rewriting(self, g: Clause) -> list[Clause]:
        if g.tag is None:
            return []
        partners = [a for a in self.prover.active.values()
                    if a.alive and a.tag == g.tag and a is not g]
        out = []
        for p in partners:
            out += self._hrw_pair(g, p)
            out += self._hrw_pair(p, g)
        return out

    def _hrw_pair(self, hyp: Clause, concl: Clause) -> list[Clause]:
        out = []
        for hl in hyp.lits:
            if not (hl.positive and hl.pred is None and hl.ground):
                continue
            for l, r in ((hl.args[0], hl.args[1]), (hl.args[1], hl.args[0])):
                if self.prover.kbo.compare(l, r) in (GREATER, EQUAL):
                    continue  # the other orientation is plain demodulation
                for cl in concl.lits:
                    if cl.positive or not cl.ground:
                        continue
                    if cl.pred is not None:
                        continue
                    occ = occurrences(cl, l)
                    if not occ:
                        continue
                    for mask in _side_masks(occ):
                        out += self._hrw_one(hyp, hl, concl, cl, l, r, mask)
        return out

    def _hrw_one(self, hyp, hl, concl, cl, l, r, mask) -> list[Clause]:
        new_lit = replace_occurrences(cl, l, mask, r)
        if new_lit is cl:
            return []
        lits = [new_lit]
        lits += [x for x in concl.lits if x is not cl]
        lits += [x for x in hyp.lits if x is not hl]
        inter = Clause(lits, rule="hyp_rewrite",
                       premises=(hyp.cid, concl.cid),
                       depth=max(hyp.depth, concl.depth),
                       goal_dist=_min_gd(hyp, concl), tag=concl.tag,
                       note={"lit": cl, "from": l, "to": r, "mask": mask})
        skmap: dict = {}
        skel = tuple(skolem_skeleton(x, None, skmap) for x in inter.lits)
        if inter.lits in self._hrw_seen or skel in self._hrw_seen:
            return []
        self.prover.register(inter)
        # carried side literals may already be resolvable against active
        # units (the multi-clause survivors arrive in either order)
        simplified, extras = self.prover.forward_simplify(inter)
        for e in extras:
            self.prover.push_passive(e)
        if simplified is None:
            return []
        # induct on the intermediate clause; complex ground terms that occur
        # at least twice are allowed regardless of the global flag
        apps = self.select_targets(simplified, allow_complex=True)
        out = []
        for ap in apps:
            if not ap.term.is_const and len(occurrences(ap.induction_lit,
                                                        ap.term)) < 2:
                continue
            if not self.opts.induction_gen and ap.mask != "all":
                continue
            for c in self.apply(ap):
                c.rule = "ind_hrw(%s)" % c.rule
                out.append(c)
        if out:
            self._hrw_seen.add(inter.lits)
            self._hrw_seen.add(skel)
        return out


def _min_gd(*cs):
    gds = [c.goal_dist for c in cs if c.goal_dist is not None]
    return (min(gds) + 1) if gds else None


def _skel_term(t: Term, marked, skmap) -> str:
    if t is marked:
        return "@"
    if t.is_var:
        return "?"
    if t.is_num:
        return str(t.value)
    if t.functor.role == "skolem" and not t.args:
        return "s#%d" % skmap.setdefault(id(t.functor), len(skmap))
    if not t.args:
        return t.functor.name
    return "(%s %s)" % (t.functor.name,
                        " ".join(_skel_term(a, marked, skmap) for a in t.args))


def skolem_skeleton(lit: Literal, marked=None, skmap=None) -> str:
    """Literal skeleton with Skolem constants anonymized by first occurrence
    and the marked term replaced by a hole.  Isomorphic induction targets of
    nested schema instances collide on this key."""
    skmap = {} if skmap is None else skmap
    head = "=" if lit.pred is None else lit.pred.name
    return "%s%s(%s)" % ("" if lit.positive else "~", head,
                         " ".join(_skel_term(a, marked, skmap)
                                  for a in lit.args))


def _dedupe_bounds(bs):
    bs.sort(key=lambda p: p[1].cid)
    seen, out = set(), []
    for b, uc in bs:
        if id(b) in seen:
            continue
        seen.add(id(b))
        out.append((b, uc))
    return out[:2]


def _subs(t: Term):
    return {u for _, u in subterms(t)}


def _subs_lit(l: Literal):
    return {u for _, u in lit_subterms(l)}


def _has_induction_constant(u: Term) -> bool:
    if u.is_num or u.is_var:
        return False
    if not u.args:
        return not u.functor.is_constructor
    return any(_has_induction_constant(a) for a in u.args)


def _has_full_destructors(sig, sort) -> bool:
    for c in sig.constructors.get(sort.name, ()):
        if not c.arity:
            continue
        dt = sig.destructors.get(c.name)
        if not dt or any(d is None for d in dt):
            return False
    return bool(sig.constructors.get(sort.name))


def _nat_shaped(sig, sort) -> bool:
    rec = [c for c in sig.constructors.get(sort.name, ()) if c.arity]
    if len(rec) != 1 or rec[0].arity != 1:
        return False
    dt = sig.destructors.get(rec[0].name)
    return bool(dt) and dt[0] is not None


def _proper_masks(occ, cap):
    """Nonempty proper subsets of the occurrence list, larger masks first."""
    n = len(occ)
    subsets = []
    for bits in range(1, (1 << n) - 1):
        subsets.append(tuple(occ[i] for i in range(n) if bits >> i & 1))
    subsets.sort(key=lambda s: (-len(s), s))
    return subsets[:cap]


def _side_masks(occ):
    """Occurrence masks per disequality side: lhs, rhs, both."""
    lhs = tuple(p for p in occ if p[0] == 0)
    rhs = tuple(p for p in occ if p[0] == 1)
    out = []
    if lhs:
        out.append(lhs)
    if rhs:
        out.append(rhs)
    if lhs and rhs:
        out.append(tuple(occ))
    return out
