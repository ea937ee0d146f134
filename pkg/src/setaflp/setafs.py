"""Argumentation frameworks with collective attacks (SETAFs) and their
labelling semantics.

An attack has a non-empty *set* of source arguments and a single target: the
sources jointly attack the target. Attack sources on any one target form an
antichain (no attack strictly contains another): a Setaf value cannot be
constructed otherwise. minimize_attacks repairs raw attack lists that break
this, which is harmless because non-minimal attacks never change which
labellings are complete.

A labelling assigns every argument one of in/out/undec. Complete labellings
are the admissible ones whose undec choices are forced, and the grounded,
preferred, stable and semi-stable semantics are selections among them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import (
    CapExceeded,
    DanglingArgument,
    DomainMismatch,
    EmptyAttackSource,
    InputError,
    InternalInvariantViolation,
    NonMinimalAttack,
)
from .programs import DEFAULT_ATOM_CAP, _atom_set, validate_atom


@dataclass(frozen=True)
class Attack:
    """A collective attack: every member of *source* together attacks *target*."""

    source: frozenset[str]
    target: str

    def __post_init__(self):
        object.__setattr__(self, "source", _atom_set(self.source))
        validate_atom(self.target)
        if not self.source:
            raise EmptyAttackSource(f"attack on {self.target} has an empty source set")

    def sort_key(self):
        return (self.target, len(self.source), tuple(sorted(self.source)))

    def __str__(self) -> str:
        return f"{','.join(sorted(self.source))} -> {self.target}"


def _as_attack(raw) -> Attack:
    if isinstance(raw, Attack):
        return raw
    source, target = raw
    return Attack(frozenset(source), target)


@dataclass(frozen=True)
class Setaf:
    """A validated SETAF. Construction enforces the invariants, so every
    Setaf in flight is well-formed."""

    arguments: frozenset[str]
    attacks: frozenset[Attack]

    def __post_init__(self):
        object.__setattr__(self, "arguments", _atom_set(self.arguments))
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        for atk in self.attacks:
            if not isinstance(atk, Attack):
                raise InputError(f"not an Attack: {atk!r}")
            stray = (atk.source | {atk.target}) - self.arguments
            if stray:
                raise DanglingArgument(
                    f"attack {atk} mentions unknown arguments: " + ", ".join(sorted(stray))
                )
        by_target: dict[str, list[frozenset[str]]] = {}
        for atk in sorted(self.attacks, key=Attack.sort_key):
            for earlier in by_target.get(atk.target, []):
                if earlier < atk.source:
                    raise NonMinimalAttack(atk.target, atk.source, earlier)
            by_target.setdefault(atk.target, []).append(atk.source)

    def sorted_attacks(self) -> list[Attack]:
        return sorted(self.attacks, key=Attack.sort_key)

    def attackers_of(self, argument: str) -> tuple[frozenset[str], ...]:
        return self._attacker_map.get(argument, ())

    @cached_property
    def _attacker_map(self) -> dict[str, tuple[frozenset[str], ...]]:
        out: dict[str, list[frozenset[str]]] = {}
        for atk in self.sorted_attacks():
            out.setdefault(atk.target, []).append(atk.source)
        return {t: tuple(sources) for t, sources in out.items()}


def validate_setaf(arguments: Iterable[str], attacks: Iterable) -> Setaf:
    """Build a Setaf from raw data: an argument set plus attacks given either
    as Attack values or as (source_iterable, target) pairs."""
    return Setaf(frozenset(arguments), frozenset(_as_attack(a) for a in attacks))


def minimize_attacks(attacks: Iterable, arguments: Iterable[str]) -> Setaf:
    """Like validate_setaf, but repairs non-minimality instead of rejecting
    it: any attack whose source strictly contains another source attacking
    the same target is dropped. Idempotent."""
    normalized = {_as_attack(a) for a in attacks}
    by_target: dict[str, set[frozenset[str]]] = {}
    for atk in normalized:
        by_target.setdefault(atk.target, set()).add(atk.source)
    kept = set()
    for target, sources in by_target.items():
        for src in sources:
            if not any(other < src for other in sources):
                kept.add(Attack(src, target))
    return Setaf(frozenset(arguments), frozenset(kept))


IN, OUT, UNDEC = "in", "out", "undec"


@dataclass(frozen=True)
class Labelling:
    """A total in/out/undec assignment, stored as the three disjoint sets."""

    in_: frozenset[str] = frozenset()
    out: frozenset[str] = frozenset()
    undec: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "in_", _atom_set(self.in_))
        object.__setattr__(self, "out", _atom_set(self.out))
        object.__setattr__(self, "undec", _atom_set(self.undec))
        if (self.in_ & self.out) or (self.in_ & self.undec) or (self.out & self.undec):
            raise InputError("labelling assigns some argument two labels")

    @property
    def arguments(self) -> frozenset[str]:
        return self.in_ | self.out | self.undec

    def label_of(self, argument: str) -> str:
        if argument in self.in_:
            return IN
        if argument in self.out:
            return OUT
        if argument in self.undec:
            return UNDEC
        raise DomainMismatch(f"argument {argument!r} is not labelled")

    @classmethod
    def from_map(cls, labels: dict[str, str]) -> "Labelling":
        bad = {a: l for a, l in labels.items() if l not in (IN, OUT, UNDEC)}
        if bad:
            raise InputError(f"unknown labels: {bad!r}")
        return cls(
            frozenset(a for a, l in labels.items() if l == IN),
            frozenset(a for a, l in labels.items() if l == OUT),
            frozenset(a for a, l in labels.items() if l == UNDEC),
        )

    def sort_key(self):
        return (
            tuple(sorted(self.in_)),
            tuple(sorted(self.out)),
            tuple(sorted(self.undec)),
        )

    def __str__(self) -> str:
        fmt = lambda s: "{" + ",".join(sorted(s)) + "}"
        return f"(in={fmt(self.in_)} out={fmt(self.out)} undec={fmt(self.undec)})"


def _check_total(s: Setaf, l: Labelling):
    if l.arguments != s.arguments:
        missing = s.arguments - l.arguments
        stray = l.arguments - s.arguments
        parts = []
        if missing:
            parts.append("unlabelled: " + ", ".join(sorted(missing)))
        if stray:
            parts.append("not arguments: " + ", ".join(sorted(stray)))
        raise DomainMismatch("labelling does not match the argument set (" + "; ".join(parts) + ")")


def is_admissible(s: Setaf, l: Labelling) -> bool:
    """in-labelled arguments must have an out member in every attacking set;
    out-labelled arguments must have some attacking set entirely in."""
    _check_total(s, l)
    for a in l.in_:
        if any(not (b & l.out) for b in s.attackers_of(a)):
            return False
    for a in l.out:
        if not any(b <= l.in_ for b in s.attackers_of(a)):
            return False
    return True


def is_complete(s: Setaf, l: Labelling) -> bool:
    """Admissible, and every undec label is forced: the argument has an
    attacking set with no out member (so it cannot be in) yet no attacking
    set entirely in (so it cannot be out)."""
    if not is_admissible(s, l):
        return False
    for a in l.undec:
        sources = s.attackers_of(a)
        if not any(not (b & l.out) for b in sources):
            return False
        if any(b <= l.in_ for b in sources):
            return False
    return True


def all_labellings(arguments: Iterable[str]) -> Iterator[Labelling]:
    """All 3^n labellings over *arguments*, in a fixed order."""
    args = sorted(frozenset(arguments))
    for values in itertools.product((IN, OUT, UNDEC), repeat=len(args)):
        yield Labelling.from_map(dict(zip(args, values)))


@lru_cache(maxsize=4096)
def _complete_cached(s: Setaf, max_atoms: int) -> tuple[Labelling, ...]:
    if len(s.arguments) > max_atoms:
        raise CapExceeded(
            f"SETAF has {len(s.arguments)} arguments, more than the cap of {max_atoms}"
        )
    found = [l for l in all_labellings(s.arguments) if is_complete(s, l)]
    return tuple(sorted(found, key=Labelling.sort_key))


def complete_labellings(s: Setaf, max_atoms: int = DEFAULT_ATOM_CAP) -> list[Labelling]:
    """All complete labellings, canonically ordered by (in, out, undec).

    Exhaustive 3^n filter, hence the argument-count cap (CapExceeded).
    Cached per SETAF; callers get a fresh list each time.
    """
    return list(_complete_cached(s, max_atoms))


def grounded(s: Setaf, max_atoms: int = DEFAULT_ATOM_CAP) -> Labelling:
    """The complete labelling with inclusion-least in set. Unique; a second
    in-minimal labelling would be a bug here, not bad input."""
    labs = complete_labellings(s, max_atoms)
    least = [l for l in labs if not any(o.in_ < l.in_ for o in labs)]
    if len(least) != 1:
        raise InternalInvariantViolation(
            f"expected exactly one in-minimal complete labelling, found {len(least)}"
        )
    return least[0]


def preferred(s: Setaf, max_atoms: int = DEFAULT_ATOM_CAP) -> list[Labelling]:
    """Complete labellings with inclusion-maximal in set."""
    labs = complete_labellings(s, max_atoms)
    return [l for l in labs if not any(l.in_ < o.in_ for o in labs)]


def stable(s: Setaf, max_atoms: int = DEFAULT_ATOM_CAP) -> list[Labelling]:
    """Complete labellings with empty undec. May be empty."""
    return [l for l in complete_labellings(s, max_atoms) if not l.undec]


def semi_stable(s: Setaf, max_atoms: int = DEFAULT_ATOM_CAP) -> list[Labelling]:
    """Complete labellings with inclusion-minimal undec set."""
    labs = complete_labellings(s, max_atoms)
    return [l for l in labs if not any(o.undec < l.undec for o in labs)]
