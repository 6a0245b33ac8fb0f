"""
Checking claims exhaustively
============================

Each registered claim is run against every graph in a small range. A
failure is reported with witness graphs rather than raised.
"""

from fractions import Fraction

from randic_extremal import CLAIMS, verify_claim

###############################################################################
# The registry.
for cid, claim in CLAIMS.items():
    print(f"{cid:18s} {claim.summary}")

###############################################################################
# The leading bound at k = 5 holds, and exactly the expected family attains it.
print(verify_claim("thm_tth1_1", n=9).to_text())

###############################################################################
# For cubic-sized orders at k = 6 the runner-up bound is attained by two extra
# graphs. Their edge types differ from the family's, yet the sums agree.
res = verify_claim("thm_basth2_2", k=6)
print(res.status)
for w in res.witnesses:
    print(w.graph6, w.note)

# three (2,2) edges and six (4,4) edges weigh as much as nine (3,3) edges
print(3 * Fraction(1, 2) + 6 * Fraction(1, 4) == 9 * Fraction(1, 3))
