"""Sequences that stay inside one member of a family.

A family of subvarieties of affine space, say all lines through the origin
in the plane, defines a set of sequences: those whose entries all lie on a
single member.  At level ``k`` its ideal is found by writing the family
with parameters, taking ``k`` points on a common fiber, and eliminating the
parameters.

Three small cases make the idea concrete:

* points on a common line through the origin: all 2x2 minors of the point
  matrix vanish;
* points on a common "hypersurface of degree at most 1" in the line: all
  points coincide;
* at degree 2 in the line, any two points fit, so nothing happens until
  three points appear.
"""

from orbitalg import (
    FamilySpec, SymmetricIdealSpec, grassmannian_family, grassmannian_seq_ideal,
    groebner_basis, hypersurface_family, ideals_equal, orbit_truncate, radical_member,
    seq_ideal_level, vandermonde_seq_ideal,
)


def show(title, ideal):
    print(title)
    for g in groebner_basis(ideal):
        print("   ", g)


# -- lines through the origin ----------------------------------------------------------
# x = s[1..2] * s[3]: the direction (s[1], s[2]) is shared by all points,
# the coefficient s[3] gets a fresh copy for every row.
family = grassmannian_family(1, 2)
print("rank-1 family generators:", [str(g) for g in family.sigma_generators])
eliminated = seq_ideal_level(family, 3)
minors = grassmannian_seq_ideal(1, 2, 3)
show("\nLevel 3 by elimination:", eliminated)
show("Level 3 from 2x2 minors:", minors)
print("Same reduced basis:", groebner_basis(eliminated) == groebner_basis(minors))

# -- degree-1 hypersurfaces of the line ------------------------------------------------
# A nonzero polynomial of degree <= 1 in one variable has one root, so all
# points coincide.  Three descriptions give the same ideal.
seq = seq_ideal_level(hypersurface_family(1, 1), 3)
vdm = vandermonde_seq_ideal(1, 1, 3)
diffs = orbit_truncate(SymmetricIdealSpec(1, ["x[1][1] - x[2][1]"]), 3)
print("\nElimination, Vandermonde minors and differences agree:",
      ideals_equal(seq, vdm) and ideals_equal(vdm, diffs))

# -- a chain of families -----------------------------------------------------------------
# Anything on a common degree-1 zero set is on a common degree-2 zero set,
# so the degree-2 ideal sits inside the radical of the degree-1 ideal.
small = vandermonde_seq_ideal(1, 1, 4)
big = vandermonde_seq_ideal(2, 1, 4)
print("\nDegree-2 Vandermonde minors at level 4:")
for g in big.generators:
    print(f"    {g}\n        in the radical of the degree-1 ideal: {radical_member(g, small)}")

# -- a custom family ---------------------------------------------------------------------
# Points on a common horizontal line y = s[1]: the shared parameter is
# eliminated and only "equal second coordinates" survives.
horizontal = FamilySpec(ncols=2, param_count=1, sigma_generators=["x[1][2] - s[1]"])
show("\nPoints on a common horizontal line, level 3:", seq_ideal_level(horizontal, 3))
