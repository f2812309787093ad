"""Why bounded-size descriptions fail once there are two columns.

Give each entry of a sequence three coordinates ``(x, y, z)`` and read it as
the open half-plane ``a*x + b*y + z > 0`` in the ``(a, b)`` plane.  Ask
whether the half-planes of the sequence have a common point outside the
unit disk.

Take the ``N`` edges of a polygon inscribed in the unit circle, each turned
into the half-plane that contains the polygon.  All ``N`` together cut out
the polygon itself, which stays inside the disk.  Drop any single edge and
the region opens up past the circle.  So every ``N - 1`` of the entries pass
the test while all ``N`` together fail.  Since ``N`` is arbitrary, no
condition on a bounded number of entries can decide the question.

The polygon's corners come from the rational parametrization of the
circle, so every check below is exact.
"""

from orbitalg import ngon_instance, region_escapes_disk
from orbitalg.geometry import circle_point, default_ngon_parameters

# A triangle with corners (1, 0), (0, 1), (0, -1), from parameters 0, 1, -1.
# Its long edge passes through the origin, so the offset of that line is 0.
print("corners at t = 0, 1, -1:", [tuple(map(str, circle_point(t))) for t in (0, 1, -1)])
tri = ngon_instance(3, [0, 1, -1])
print("edge lines (x, y, z):", [tuple(map(str, line)) for line in tri.lines])
print()

for N in range(3, 9):
    arr = ngon_instance(N)
    params = ", ".join("inf" if t is None else str(t) for t in default_ngon_parameters(N))
    full = region_escapes_disk(arr)
    drops = [region_escapes_disk(arr.drop(j)) for j in range(N)]
    print(f"N={N}  parameters [{params}]")
    print(f"      all {N} edges: escapes the disk = {full}")
    print(f"      drop one edge: escapes = {drops}")
