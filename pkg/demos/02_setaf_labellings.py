"""
Labelling semantics for SETAFs
==============================

Builds a framework with collective attacks (a SETAF) and enumerates its
complete, grounded, preferred, stable and semi-stable labellings.
"""

from setaflp import (
    complete_labellings,
    export_dot,
    grounded,
    is_admissible,
    parse_setaf,
    preferred,
    print_labelling,
    print_setaf,
    semi_stable,
    stable,
)

# Arguments attack each other either alone or jointly: the last line is
# a collective attack, c is only defeated when a and d hold together.
SOURCE = """
arg a
arg b
arg c
arg d
arg e
att a -> b
att b -> a
att b -> e
att c -> c
att d -> d
att e -> e
att a,d -> c
"""

s = parse_setaf(SOURCE)
print("framework:")
print(print_setaf(s))

# A complete labelling marks every argument in, out or undec, subject
# to: an in argument has an out member in each attacking set, an out
# argument has some attacking set entirely in, and undec is forced
# whenever neither applies.
labs = complete_labellings(s)
print(f"complete labellings ({len(labs)}):")
for lab in labs:
    print(" ", print_labelling(lab))
    assert is_admissible(s, lab)
print()

# The grounded labelling commits to the least: nothing is in unless it
# is unattacked or defended by the grounded part itself.
print("grounded labelling:")
print(" ", print_labelling(grounded(s)))
print()

# Preferred labellings maximise the in set.
print("preferred labellings:")
for lab in preferred(s):
    print(" ", print_labelling(lab))
print()

# Stable labellings leave nothing undecided.  The self-attack on d can
# never be resolved, so there are none here.
print(f"stable labellings: {stable(s)!r}")
print()

# Semi-stable labellings minimise the undec set instead, so they exist
# even when stable ones do not.
print("semi-stable labellings:")
for lab in semi_stable(s):
    print(" ", print_labelling(lab))
print()

# Frameworks render to Graphviz; collective attacks become a small
# junction point so the joint source is visible.  Feed the output to
# "dot -Tpng" to get a picture.
print("graphviz source:")
print(export_dot(s))
