"""Multiple-cover contributions and the instanton numbers hiding in them.

A degree-d cover of a fixed curve with contact order w contributes
M_w[d] = C(d(w-1) - 1, d - 1) / d^2 to the count in d times its class.
Those rationals are not themselves counts of anything, but inverting the
cover series against them produces integers that behave like counts.
"""
from fractions import Fraction

from tangentia import (
    CoverTable,
    instanton_numbers,
    integrality_report,
    local_cover,
    multiple_cover,
)

# ---------------------------------------------------------------------------
# the raw cover contributions
# ---------------------------------------------------------------------------

print("cover contributions of the tangent line (w = 3):")
for d in range(1, 7):
    print(f"  M_3[{d}] = {multiple_cover(3, d)}")

# the conic with sixfold contact has w = 6; its double cover carries 9/4
print()
print(f"double cover of the sixfold conic: M_6[2] = {multiple_cover(6, 2)}")

# ---------------------------------------------------------------------------
# inversion: subtract what lower degrees already explain
# ---------------------------------------------------------------------------

# m_w[d] is what is left of M_w[d] after the covers of the degree-d1
# pieces (d1 | d) are stripped off, using the signed local contributions
# M'_n[d] = (-1)^(n(d-1)) / d^2 as the stripping weights.

print()
print("local weights M'_3[d]:", [str(local_cover(3, d)) for d in range(1, 5)])

print()
print("instanton numbers m_w[1..6]:")
for w in (3, 4, 5, 6):
    m = instanton_numbers(w, 6)
    print(f"  w = {w}: {[m[d] for d in range(1, 7)]}")

# every one of those is a positive integer, which the raw M values (look at
# 3/4 and 10/9 above) had no obvious reason to produce

report = integrality_report(8, 8)
print()
print(f"integrality over w <= 8, d <= 8: {sum(r.passes for r in report)}"
      f"/{len(report)} rows pass")

# w = 1 and w = 2 sit outside the geometric range; there the numbers vanish
# beyond degree 1, which the report records as integer but not positive
m1 = instanton_numbers(1, 4)
assert [m1[d] for d in range(2, 5)] == [0, 0, 0]
print("w = 1 vanishes beyond d = 1, as the extrapolated rows predict")

# ---------------------------------------------------------------------------
# the round trip: covers of instantons rebuild the cover table
# ---------------------------------------------------------------------------

table = CoverTable.build("relative", first_max=6, d_max=8)
table.check()  # recomputes every entry from scratch, raises on any drift
print()
print("round trip M' * m = M verified on the 6 x 8 relative table")

total = sum(table.entries[(3, d)] for d in range(1, 9))
assert isinstance(total, Fraction)
print(f"sum of M_3[1..8], exactly: {total}")
