"""Prover options.

Field names and defaults mirror the induction option table; the underlined
table defaults are asserted in the unit tests, so change them deliberately.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields


@dataclass
class Options:
    induction: str = "none"                  # int | struct | both | none
    structural_induction_kind: str = "one"   # one | two | three | rec_def | all
    induction_max_depth: int = 0             # 0 = unlimited
    induction_neg_only: bool = True
    induction_unit_only: bool = True
    induction_on_complex_terms: bool = False
    induction_multiclause: bool = True
    induction_gen: bool = False
    induction_hypothesis_rewriting: bool = True
    function_definition_rewriting: bool = True
    int_induction_interval: str = "both"     # infinite | finite | both
    int_induction_default_bound: bool = False

    time_limit: float = 60.0                 # seconds, 0 = none
    memory_limit_mb: int = 0                 # 0 = none
    max_clauses: int = 0                     # 0 = none
    age_weight_ratio: int = 5                # weight picks per age pick
    ordering_seed: int = 0
    literal_selection: str = "maximal"       # maximal | all
    goal: str = "last-assert"                # last-assert | none
    proof: str = "text"                      # off | text
    stats: str = "off"                       # off | brief

    # enumeration caps (not part of the public option table)
    max_gen_masks: int = 16
    max_side_premises: int = 3

    def validate(self):
        checks = {
            "induction": ("int", "struct", "both", "none"),
            "structural_induction_kind": ("one", "two", "three", "rec_def", "all"),
            "int_induction_interval": ("infinite", "finite", "both"),
            "literal_selection": ("all", "maximal"),
            "goal": ("last-assert", "none"),
            "proof": ("off", "text"),
            "stats": ("off", "brief"),
        }
        for name, allowed in checks.items():
            if getattr(self, name) not in allowed:
                raise ValueError("bad value for --%s: %r" % (name, getattr(self, name)))
        if self.induction_max_depth < 0:
            raise ValueError("--induction_max_depth must be >= 0")
        return self

    @property
    def struct_enabled(self) -> bool:
        return self.induction in ("struct", "both")

    @property
    def int_enabled(self) -> bool:
        return self.induction in ("int", "both")

    def canonical(self) -> str:
        parts = []
        for f in fields(self):
            v = getattr(self, f.name)
            if v != f.default:
                parts.append("%s=%s" % (f.name, v))
        return " ".join(parts) if parts else "defaults"
