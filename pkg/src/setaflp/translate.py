"""From programs to SETAFs and back.

The forward direction builds *statements*: derivation trees showing how an
atom can be concluded, tracking which rules were used and which negated atoms
the derivation is vulnerable to. Atoms with at least one statement are the
arguments. A set of arguments attacks an argument a when it is a minimal set
hitting every vulnerability set of a, so computing attacks is minimal-
transversal enumeration over the vulnerability families.

The reverse direction needs no trees: each argument gets one atomic rule per
minimal transversal of the sources attacking it. On redundancy-free atomic
programs the two directions are mutually inverse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable

from .errors import BlowupCap
from .programs import Program, Rule
from .setafs import Attack, Setaf

#: Statement construction is worst-case exponential in the program size;
#: fail loudly past this many distinct statements rather than hang.
DEFAULT_STATEMENT_CAP = 100_000


@dataclass(frozen=True)
class Statement:
    """A way to conclude an atom.

    conc: the concluded atom; rules: every rule used in the derivation;
    vul: every atom whose truth would break the derivation (the negated
    atoms met along the way). subs holds the child statements, one per
    positive body atom of the root rule, but two statements that agree on
    (conc, rules, vul) count as the same statement: attacks only ever look
    at conclusions and vulnerabilities, so finer identity would just blow
    up the search space.
    """

    conc: str
    rules: frozenset[Rule]
    vul: frozenset[str]
    subs: tuple["Statement", ...] = field(default=(), compare=False)

    def sort_key(self):
        return (
            self.conc,
            tuple(sorted(self.vul)),
            tuple(sorted(r.sort_key() for r in self.rules)),
        )


@lru_cache(maxsize=4096)
def statements(p: Program, max_statements: int = DEFAULT_STATEMENT_CAP) -> frozenset[Statement]:
    """All statements of p, deduplicated by (conc, rules, vul).

    Worklist fixpoint. A rule with an empty positive body is a statement on
    its own. A rule r with positive body {b1..bk} extends statements s1..sk
    for b1..bk into a statement for head(r), provided r itself was not used
    inside any child (that guard is what makes the construction finite).
    Raises BlowupCap past *max_statements* distinct statements.

    Cached: programs are immutable and the callers upstream (labelling
    conversions, equivalence checks) hit the same program thousands of times.
    """
    found: set[Statement] = set()
    by_conc: dict[str, list[Statement]] = {}
    todo: deque[Statement] = deque()

    def add(s: Statement):
        if s in found:
            return
        if len(found) >= max_statements:
            raise BlowupCap(
                f"more than {max_statements} distinct statements; raise the cap "
                "if this program really is that tangled"
            )
        found.add(s)
        by_conc.setdefault(s.conc, []).append(s)
        todo.append(s)

    for r in p.sorted_rules():
        if not r.body_pos:
            add(Statement(r.head, frozenset([r]), r.body_neg))

    inductive = [r for r in p.sorted_rules() if r.body_pos]
    while todo:
        fresh = todo.popleft()
        for r in inductive:
            if fresh.conc not in r.body_pos or r in fresh.rules:
                continue
            # fresh must take part, and it can only stand for its own atom;
            # the other body atoms draw on everything found so far.
            pools = []
            for atom in sorted(r.body_pos):
                if atom == fresh.conc:
                    pools.append([fresh])
                else:
                    pools.append([s for s in by_conc.get(atom, []) if r not in s.rules])
            for combo in product(*pools):
                rules = frozenset([r]).union(*(s.rules for s in combo))
                vul = r.body_neg.union(*(s.vul for s in combo))
                add(Statement(r.head, rules, vul, subs=combo))
    return frozenset(found)


def arguments(p: Program, max_statements: int = DEFAULT_STATEMENT_CAP) -> frozenset[str]:
    """Atoms concluded by at least one statement."""
    return frozenset(s.conc for s in statements(p, max_statements))


def vul_family(p: Program, max_statements: int = DEFAULT_STATEMENT_CAP) -> dict[str, frozenset[frozenset[str]]]:
    """The vulnerability sets of each argument, grouped by conclusion."""
    fam: dict[str, set[frozenset[str]]] = {}
    for s in statements(p, max_statements):
        fam.setdefault(s.conc, set()).add(s.vul)
    return {c: frozenset(vuls) for c, vuls in fam.items()}


def _minimal_sets(sets: Iterable[frozenset[str]]) -> set[frozenset[str]]:
    """Inclusion-minimal members. Input must be duplicate-free."""
    kept: list[frozenset[str]] = []
    for s in sorted(sets, key=lambda x: (len(x), tuple(sorted(x)))):
        if not any(k <= s for k in kept):
            kept.append(s)
    return set(kept)


def minimal_transversals(family: Iterable[Iterable[str]]) -> frozenset[frozenset[str]]:
    """All inclusion-minimal sets intersecting every member of *family*.

    Edge cases fall out of the definition: an empty family is hit by the
    empty set (result {{}}), and a family containing the empty set is hit
    by nothing (result {}).

    Incremental construction: fold the members in one at a time, extending
    each partial transversal that misses the new member by each of its
    elements, pruning non-minimal candidates as we go so the working set
    stays an antichain.
    """
    fam = sorted(
        {frozenset(v) for v in family}, key=lambda v: (len(v), tuple(sorted(v)))
    )
    if any(not v for v in fam):
        return frozenset()
    trans: set[frozenset[str]] = {frozenset()}
    for v in fam:
        grown: set[frozenset[str]] = set()
        for t in trans:
            if t & v:
                grown.add(t)
            else:
                grown.update(t | {b} for b in v)
        trans = _minimal_sets(grown)
    return frozenset(trans)


def nlp_to_setaf(p: Program, max_statements: int = DEFAULT_STATEMENT_CAP) -> Setaf:
    """The SETAF associated with p.

    Arguments are the atoms with statements. The attackers of a are the
    minimal argument sets hitting every vulnerability set of a. Only the
    argument part of a vulnerability set matters: an atom that is never
    concluded can never be made true, so it cannot carry an attack, and a
    vulnerability set wholly outside the arguments makes its owner
    unattackable on that front (and if every front is like that, a is not
    attacked at all).
    """
    fam = vul_family(p, max_statements)
    args = frozenset(fam)
    attacks = set()
    for a, vuls in fam.items():
        for source in minimal_transversals(v & args for v in vuls):
            attacks.add(Attack(source, a))
    return Setaf(args, frozenset(attacks))


def setaf_to_nlp(s: Setaf) -> Program:
    """The program associated with a SETAF: per argument a, one atomic rule
    ``a :- not v1, ..., not vk`` for each minimal transversal of the sources
    attacking a. Unattacked arguments become facts. Universe = arguments."""
    rules = set()
    for a in sorted(s.arguments):
        for v in minimal_transversals(s.attackers_of(a)):
            rules.add(Rule(a, frozenset(), v))
    return Program(frozenset(rules), s.arguments)


def rfalp_violations(p: Program) -> list[str]:
    """Why p is not a redundancy-free atomic program; empty if it is one.

    Three clauses: every rule atomic (no positive body), every universe atom
    heads some rule, and no rule's negative body strictly contains the
    negative body of another rule with the same head.
    """
    out = []
    for r in p.sorted_rules():
        if r.body_pos:
            out.append(f"rule '{r}' is not atomic (positive body atoms: "
                       + ", ".join(sorted(r.body_pos)) + ")")
    for a in sorted(p.universe - p.heads()):
        out.append(f"universe atom '{a}' heads no rule")
    for r in p.sorted_rules():
        for other in p.by_head.get(r.head, ()):
            if other.body_neg < r.body_neg:
                out.append(f"rule '{r}' is subsumed by '{other}'")
                break
    return out


def is_rfalp(p: Program) -> bool:
    """True iff p is a redundancy-free atomic logic program."""
    return not rfalp_violations(p)
