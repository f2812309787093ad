"""Hand-analysed equivariant sign systems (m <= 2, degree <= 3).

Each entry is ``(weak, strict, expected, kind, why)``.  ``expected`` is
``"empty"`` or ``"nonempty"``; ``kind`` is the first branch that must succeed
under the constant -> increasing -> decreasing priority (``None`` for empty
systems).  The reasoning in ``why`` is about the pairwise conditions on
distinct entries, written ``a, b`` for two entries of the sequence.
"""

RATIO = "-(x[1][1] - 2*x[2][1])*(x[2][1] - 2*x[1][1])"   # for 0 < a < b this says b >= 2a

CORPUS = [
    ([], ["x[2][1] - x[1][1]"], "empty", None,
     "b > a and a > b at once"),
    ([], ["(x[1][1] - x[2][1])^2"], "nonempty", "increasing",
     "entries pairwise distinct; 1, 2, 3, ... works, constants fail"),
    (["1 - x[1][1]^2"], ["(x[1][1] - x[2][1])^2"], "nonempty", "increasing",
     "distinct entries in [-1, 1], e.g. 1 - 2^-i"),
    (["x[1][1] - x[2][1]"], ["x[1][1]*(1 - x[1][1])"], "nonempty", "constant",
     "a >= b both ways forces a constant in (0, 1)"),
    (["-(x[1][1] - x[2][1])^2"], ["x[1][1] - 7"], "nonempty", "constant",
     "constant above 7"),
    (["x[1][1] - x[2][1] - 1"], [], "empty", None,
     "a - b >= 1 and b - a >= 1"),
    ([], ["-1"], "empty", None, "0 > 1"),
    ([], ["1"], "nonempty", "constant", "no condition"),
    ([], ["-x[1][1]^2"], "empty", None, "a^2 < 0"),
    (["-x[1][1]^2"], ["(x[1][1] - x[2][1])^2"], "empty", None,
     "every entry is 0 yet entries differ"),
    ([], ["x[1][1]*x[2][1] - 1"], "nonempty", "constant", "constant 2: 4 > 1"),
    ([], ["-x[1][1]*x[2][1]"], "empty", None,
     "every pair has opposite signs, impossible for three entries"),
    (["x[1][1]"], ["1 - x[1][1]*x[2][1]"], "nonempty", "constant", "constant 0"),
    (["3 - x[1][1]"], ["x[1][1]^2 - 2", "(x[1][1] - x[2][1])^2"], "nonempty", "increasing",
     "distinct entries in (sqrt 2, 3], increasing to 3"),
    ([], ["x[1][1] - x[2][1]^2"], "nonempty", "constant", "c > c^2 for c = 1/2"),
    ([], ["x[1][1]^3 - x[1][1]"], "nonempty", "constant", "c^3 > c for c = 2"),
    (["2 - x[1][1]^3", "x[1][1]^3 - 2"], [], "nonempty", "constant",
     "every entry is the cube root of 2"),
    (["x[1][1]*x[2][1]"], ["(x[1][1] - x[2][1])^2"], "nonempty", "increasing",
     "distinct entries of one sign, 1, 2, 3, ..."),
    ([], ["x[1][1] - x[2][1]^2 - 1"], "empty", None,
     "a > b^2 + 1 > b and b > a^2 + 1 > a"),
    ([], ["1 - (x[1][1] - x[2][1])^2", "(x[1][1] - x[2][1])^2"], "nonempty", "increasing",
     "distinct entries at mutual distance < 1, e.g. 1 - 2^-i"),
    ([], ["x[1][1]*x[2][1] + 1", "-x[1][1] - x[2][1]"], "nonempty", "constant",
     "constant -1: 1 + 1 > 0 and 2 > 0"),
    (["x[1][1] - x[1][1]^2", "x[1][1]*x[2][1] - 1/4"], ["(x[1][1] - x[2][1])^2"],
     "nonempty", "increasing", "distinct entries in [1/2, 1], increasing to 1"),
    ([RATIO, "1 - x[1][1]"], ["x[1][1]"], "nonempty", "decreasing",
     "entries in (0, 1] at least doubling apart: 1, 1/2, 1/4, ... only"),
    ([RATIO, "x[1][1] - 1"], ["x[1][1]"], "nonempty", "increasing",
     "entries >= 1 at least doubling apart: 1, 2, 4, ..."),
    ([RATIO, "x[1][1] - 1", "10 - x[1][1]"], ["x[1][1]"], "empty", None,
     "at most four entries fit in [1, 10] when doubling"),
]
