"""Exact computations with symmetric ideals and equivariant semi-algebraic sets.

Polynomials live in variables ``x[i][j]`` (row ``i``, column ``j``) and
parameters ``s[k]``; the infinite symmetric group permutes rows.  The
submodules are:

``poly``         sparse rational polynomials, monomial orders, row permutations, parsing
``groebner``     Buchberger bases, elimination, radical membership, intersection
``equivariant``  orbit truncations, orbit-closure ideals, fixed points, Seq ideals
``realalg``      Sturm sequences, real algebraic numbers, univariate sign systems
``semialg``      emptiness of equivariant sign systems (constant / monotone sequences)
``geometry``     exact half-plane arrangements and inscribed polygons
``cli``          YAML job runner (``python -m orbitalg``)
"""

from .poly import (
    FinitePermutation, MonomialOrder, Poly, VarIndex, GREVLEX, LEX, apply_perm,
    block_order, evaluate, parse, rename_rows, row_embed, s, substitute, transposition, x,
)
from .groebner import (
    DegreeCapExceeded, IdealHandle, elimination_ideal, groebner_basis, ideal_intersection,
    ideals_equal, normal_form, radical_member,
)
from .equivariant import (
    INFINITE, Component, FamilySpec, OrbitClosureSpec, SequencePrefixDescriptor,
    SymmetricIdealSpec, check_truncation_stable, fixed_point_generators,
    grassmannian_family, grassmannian_seq_ideal, hypersurface_family,
    orbit_closure_generators, orbit_closure_member, orbit_closure_spec_from_points,
    orbit_truncate, seq_ideal_level, vandermonde_seq_ideal,
)
from .realalg import (
    ExtendedLimit, RealAlgebraicNumber, UnivariateSignSystem, isolate_roots, sign_at,
    sturm_count, univariate_sat,
)
from .semialg import (
    Decision, EquivariantSignSystem, SymmetrizedSystem, decide_constant, decide_fiber,
    decide_monotone, decide_nonempty, symmetrize, verify_witness,
)
from .geometry import LineArrangement, ngon_instance, region_escapes_disk

__version__ = "0.1.0"
