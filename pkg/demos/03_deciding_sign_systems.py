"""Is there an infinite sequence all of whose pairs satisfy these inequalities?

A sign system lists polynomials in the entries of a sequence, for example
``x[2][1] - x[1][1] > 0``, and asks for a sequence where the conditions hold
for every choice of distinct indices in place of the rows 1 and 2.  Every
infinite real sequence has a constant or a strictly monotone subsequence,
and the set of good sequences is closed under taking subsequences.  So it
suffices to look for constant, increasing and decreasing sequences.  The
library tries them in that order and returns a prefix of a witness sequence,
which is then checked exactly.
"""

from orbitalg import EquivariantSignSystem as System
from orbitalg import decide_fiber, decide_nonempty, verify_witness


def run(title, weak=(), strict=()):
    sys_ = System(list(weak), list(strict))
    d = decide_nonempty(sys_)
    print(f"{title}\n    {d}")
    if d.nonempty:
        print(f"    witness checked on every ordered pair: {verify_witness(sys_, d.witness)}")
    print()


# Both a < b and b < a are demanded for every pair: nothing survives.
run("Contradictory ordering", strict=["x[2][1] - x[1][1]"])

# Pairwise distinct entries: no constant works, 1, 2, 3, ... does.
run("Pairwise distinct", strict=["(x[1][1] - x[2][1])^2"])

# Distinct entries trapped in [-1, 1] must converge, here to 1.
run("Distinct and bounded", weak=["1 - x[1][1]^2"], strict=["(x[1][1] - x[2][1])^2"])

# The constant may be irrational; it is reported as a root with an
# isolating interval.
run("Every entry is the cube root of 2", weak=["2 - x[1][1]^3", "x[1][1]^3 - 2"])

# For positive a < b the condition (a - 2b)(b - 2a) <= 0 says b >= 2a.
# Inside (0, 1] only a sequence halving towards 0 fits, so it must decrease.
ratio = "-(x[1][1] - 2*x[2][1])*(x[2][1] - 2*x[1][1])"
run("Entries in (0, 1], consecutive ones at least a factor 2 apart",
    weak=[ratio, "1 - x[1][1]"], strict=["x[1][1]"])

# In [1, 10] at most four entries fit, so no infinite sequence exists.
run("The same inside [1, 10]", weak=[ratio, "x[1][1] - 1", "10 - x[1][1]"], strict=["x[1][1]"])

# Parameters s[k] are fixed before deciding: the fiber over s[1] = c asks
# for a sequence with c - x^2 > 0 at every entry.
family = System([], ["s[1] - x[1][1]^2"])
for c in (1, 0, -1):
    print(f"Fiber over s[1] = {c}: {decide_fiber(family, {'s[1]': c})}")
