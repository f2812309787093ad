"""Orbit closures of eventually constant sequences.

Take the sequence of points in the plane

    (0, 0), (1, 1), (2, 1), (3, 1), ...

Its entries lie on the line ``y = 1`` plus the single point ``(0, 0)``.
Permuting the entries of a sequence does not change which points appear,
but the origin appears only once.  So a sequence lies in the closure of all
rearrangements exactly when every entry is on ``V = {y = 1} ∪ {(0,0)}``
and the origin occurs at most once.

This script builds that closure's ideal at a finite level and checks the
description against brute force.
"""

import itertools
from fractions import Fraction

from orbitalg import (
    INFINITE, Component, OrbitClosureSpec, SequencePrefixDescriptor, evaluate, groebner_basis,
    orbit_closure_generators, orbit_closure_member, orbit_closure_spec_from_points,
)
from orbitalg.poly import VarIndex

# The ideal of V is generated by y(y-1) and x(y-1).  Each component also
# carries the generators of "everything else": the line's complement is the
# origin, and the origin's complement is the line.  Only the origin has a
# finite multiplicity.
spec = OrbitClosureSpec(
    ncols=2,
    vp_generators=["x[1][2]*(x[1][2] - 1)", "x[1][1]*(x[1][2] - 1)"],
    components=[
        Component(["x[1][1]", "x[1][2]"]),
        Component(["x[1][2] - 1"], multiplicity=1, point=(0, 0)),
    ],
)

I = orbit_closure_generators(spec, 3)
print("Generators at level 3 (rows 1..3):")
for g in I.generators:
    print("   ", g)
print("Reduced Groebner basis has", len(groebner_basis(I)), "elements.")

def show(p):
    return "(" + ", ".join(str(c) for c in p) + ")"


# The product (y1 - 1)(y2 - 1) is what forbids the origin from appearing
# twice: it vanishes unless both rows 1 and 2 sit off the line.
print()
print("Membership of a few eventually constant sequences:")
for explicit, tail in [
    ([(0, 0), (5, 1)], (9, 1)),
    ([(0, 0), (0, 0)], (9, 1)),
    ([(Fraction(-3, 7), 1)], (11, 1)),
    ([], (0, 0)),
]:
    d = SequencePrefixDescriptor(2, explicit, tail)
    prefix = " ".join(show(p) for p in explicit) or "(nothing)"
    print(f"    {prefix}, then {show(tail)} forever: {orbit_closure_member(spec, d)}")

# Brute force: with the entry values limited to a handful of points, the
# level-3 zero set and the membership test pick out the same triples.
values = [(Fraction(0), Fraction(0)), (Fraction(2), Fraction(1)), (Fraction(-1), Fraction(1))]
agree = 0
for triple in itertools.product(values, repeat=3):
    point = {VarIndex("main", i, j): c for i, p in enumerate(triple, 1) for j, c in enumerate(p, 1)}
    in_zero_set = all(evaluate(g, point) == 0 for g in I.generators)
    in_closure = orbit_closure_member(spec, SequencePrefixDescriptor(2, list(triple), (5, 1)))
    agree += in_zero_set == in_closure
print(f"\nZero set and membership agree on {agree} of 27 triples.")

# For sequences that take finitely many values the spec can be generated
# from the values and their multiplicities alone.
finite = orbit_closure_spec_from_points({(0,): 1, (1,): INFINITE}, ncols=1)
print("\nA 0/1 sequence with a single 0, level 3:")
for g in orbit_closure_generators(finite, 3).generators:
    print("   ", g)
