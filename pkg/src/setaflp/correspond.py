"""Conversions between labellings and interpretations, and the equivalence
report built on them.

On the program side, in/out/undec verdicts correspond to true/false/undefined
restricted to the arguments; atoms with no statements are false in every
partial stable model, so the program-side conversion pins them to false. On
the SETAF side the correspondence is the evident triple identification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainMismatch
from .programs import (
    DEFAULT_ATOM_CAP,
    Interpretation,
    Program,
    l_stable_models,
    partial_stable_models,
    regular_models,
    stable_models,
    well_founded_model,
)
from .setafs import (
    Labelling,
    Setaf,
    complete_labellings,
    grounded,
    preferred,
    semi_stable,
    stable,
)
from .translate import DEFAULT_STATEMENT_CAP, arguments, nlp_to_setaf


def l2i_p(p: Program, l: Labelling, max_statements: int = DEFAULT_STATEMENT_CAP) -> Interpretation:
    """Labelling over arguments(p) -> interpretation over p.universe.

    in becomes true; out becomes false; so does every universe atom that is
    not an argument at all (nothing can ever conclude it). undec stays
    undefined. The labelling domain must be exactly arguments(p).
    """
    args = arguments(p, max_statements)
    if l.arguments != args:
        raise DomainMismatch(
            "labelling domain is not the argument set; got {"
            + ",".join(sorted(l.arguments))
            + "} expected {"
            + ",".join(sorted(args))
            + "}"
        )
    return Interpretation(l.in_, l.out | (p.universe - args))


def i2l_p(p: Program, i: Interpretation, max_statements: int = DEFAULT_STATEMENT_CAP) -> Labelling:
    """Interpretation over p.universe -> labelling over arguments(p).

    Restriction: atoms outside the argument set drop out of the labelling
    domain silently (there is nothing sensible to label them).
    """
    args = arguments(p, max_statements)
    return Labelling(
        i.true & args,
        i.false & args,
        args - i.true - i.false,
    )


def l2i_af(l: Labelling) -> Interpretation:
    """Labelling -> interpretation over the same argument set: <in, out>."""
    return Interpretation(l.in_, l.out)


def i2l_af(i: Interpretation, args: Iterable[str]) -> Labelling:
    """Interpretation over exactly *args* -> labelling: in=true, out=false,
    undec=the rest."""
    domain = frozenset(args)
    stray = (i.true | i.false) - domain
    if stray:
        raise DomainMismatch(
            "interpretation mentions non-arguments: " + ", ".join(sorted(stray))
        )
    return Labelling(i.true, i.false, domain - i.true - i.false)


# --- the five-row equivalence report -----------------------------------------


@dataclass(frozen=True)
class EquivalenceRow:
    lp_name: str
    af_name: str
    models: tuple[Interpretation, ...]
    labellings: tuple[Labelling, ...]
    equal: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class EquivalenceReport:
    program: Program
    setaf: Setaf
    rows: tuple[EquivalenceRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.equal for row in self.rows)


def check_equivalence(
    p: Program,
    max_atoms: int = DEFAULT_ATOM_CAP,
    max_statements: int = DEFAULT_STATEMENT_CAP,
) -> EquivalenceReport:
    """Compute the five program semantics of p and the five labelling
    semantics of its SETAF, map each side across, and report set equality
    per semantics pair."""
    s = nlp_to_setaf(p, max_statements)
    pairs = [
        ("partial-stable", "complete",
         partial_stable_models(p, max_atoms), complete_labellings(s, max_atoms)),
        ("well-founded", "grounded",
         [well_founded_model(p, max_atoms)], [grounded(s, max_atoms)]),
        ("regular", "preferred",
         regular_models(p, max_atoms), preferred(s, max_atoms)),
        ("stable", "stable",
         stable_models(p, max_atoms), stable(s, max_atoms)),
        ("l-stable", "semi-stable",
         l_stable_models(p, max_atoms), semi_stable(s, max_atoms)),
    ]
    rows = []
    for lp_name, af_name, models, labellings in pairs:
        model_set = set(models)
        mapped_labs = {l2i_p(p, l, max_statements) for l in labellings}
        lab_set = set(labellings)
        mapped_models = {i2l_p(p, m, max_statements) for m in models}
        counterexample = None
        if mapped_labs != model_set:
            diff = (mapped_labs ^ model_set)
            witness = sorted(diff, key=Interpretation.sort_key)[0]
            side = "labelling side" if witness in mapped_labs else "program side"
            counterexample = f"{witness} only on the {side} ({lp_name})"
        elif mapped_models != lab_set:
            diff = (mapped_models ^ lab_set)
            witness = sorted(diff, key=Labelling.sort_key)[0]
            side = "program side" if witness in mapped_models else "labelling side"
            counterexample = f"{witness} only on the {side} ({af_name})"
        rows.append(
            EquivalenceRow(
                lp_name,
                af_name,
                tuple(models),
                tuple(labellings),
                counterexample is None,
                counterexample,
            )
        )
    return EquivalenceReport(p, s, tuple(rows))
