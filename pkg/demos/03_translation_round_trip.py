"""
Translating between programs and SETAFs
=======================================

Shows the translation pipeline in both directions.  Going from a
program to a SETAF takes three steps: unfold the rules into statements,
collect each atom's vulnerability family, and turn the minimal
transversals of those families into attacks.  Coming back is a single
step: every attack towards an argument becomes one rule.
"""

from setaflp import (
    arguments,
    is_rfalp,
    nlp_to_setaf,
    parse_program,
    print_program,
    print_setaf,
    setaf_to_nlp,
    statements,
    vul_family,
)

# A program written to exercise the corner cases: c sits on a negative
# self-loop, f and g support each other but can never get started, and
# everything else hangs off the facts.
SOURCE = """
a.
b :- a.
c :- not c.
d :- b, not a, not d.
d :- not c, not d.
e :- b, c, not e.
c :- f, not g.
f :- c, g.
"""

p = parse_program(SOURCE)
print("program:")
print(print_program(p))

# Statements are the positive-body-free consequences of the program:
# each one records a conclusion together with the set of atoms whose
# truth elsewhere would defeat it (its vulnerability).
print("statements (conclusion <- vulnerability):")
for st in sorted(statements(p), key=lambda st: (st.conc, sorted(st.vul))):
    vul = ",".join(sorted(st.vul)) or "-"
    print(f"  {st.conc} <- {{{vul}}}")
print()

# An atom is an argument when it has at least one statement.  f and g
# never become derivable, so they are dropped here.
args = arguments(p)
print("arguments:", ",".join(sorted(args)))
print()

# The vulnerability family of an argument gathers the vulnerabilities
# of all its statements.  Attacks are the minimal transversals of those
# families restricted to arguments: the smallest sets of arguments that
# hit every way of deriving the target.
print("vulnerability families:")
for atom in sorted(args):
    fam = vul_family(p)[atom]
    shown = " ".join("{" + ",".join(sorted(v)) + "}" for v in sorted(fam, key=sorted))
    print(f"  {atom}: {shown}")
print()

s = nlp_to_setaf(p)
print("derived framework:")
print(print_setaf(s))

# The reverse translation produces one rule per attack, plus a fact for
# every unattacked argument.  Its output is always in a normal form
# where each atom's rules are negative, minimal and non-redundant
# (a redundancy-free atomic logic program).
q = setaf_to_nlp(s)
print("translated back:")
print(print_program(q))
print("round-trip output is in normal form:", is_rfalp(q))

# On programs already in that normal form the round trip is exact.
assert nlp_to_setaf(q) == s
assert setaf_to_nlp(nlp_to_setaf(q)) == q
print("second round trip reproduces both objects exactly")
