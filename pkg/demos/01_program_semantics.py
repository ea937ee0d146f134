"""
Three-valued semantics for normal logic programs
================================================

Walks through the five model classes the library computes for a normal
logic program: partial stable models, the well-founded model, regular
models, (total) stable models, and L-stable models.
"""

from setaflp import (
    l_stable_models,
    parse_program,
    partial_stable_models,
    print_interpretation,
    print_program,
    regular_models,
    stable_models,
    well_founded_model,
)

# The running example used throughout the demos: six rules over five
# atoms.  a and b block each other, c is caught in a self-loop that a
# or d could break, d loops on itself, and e loops unless b holds.
SOURCE = """
a :- not b.
b :- not a.
c :- not a, not c.
c :- not c, not d.
d :- not d.
e :- not b, not e.
"""

p = parse_program(SOURCE)
print("program:")
print(print_program(p))

# Partial stable models are three-valued: every atom is true, false, or
# undefined.  Printing shows the true set and the undefined set.
models = partial_stable_models(p)
print(f"partial stable models ({len(models)}):")
for m in models:
    print(" ", print_interpretation(m, p.universe))
print()

# The well-founded model is the unique partial stable model with the
# least information: everything that is not forced stays undefined.
wf = well_founded_model(p)
print("well-founded model:")
print(" ", print_interpretation(wf, p.universe))
print()

# Regular models maximise the true part instead.
print("regular models:")
for m in regular_models(p):
    print(" ", print_interpretation(m, p.universe))
print()

# Stable models are the two-valued special case.  This program has none
# because "d :- not d." can never be settled either way.
print(f"stable models: {stable_models(p)!r}")
print()

# L-stable models fall back to "as two-valued as possible" when no
# stable model exists: they minimise the undefined part.
print("l-stable models:")
for m in l_stable_models(p):
    print(" ", print_interpretation(m, p.universe))
