"""
Families whose census count is exactly 2**n
===========================================

Four real quadratic fields can be chosen so that the primes nonsplit in
all of them form any prescribed set {p2, ..., pm}. The census over that
set has 2**(m-1) classes, so picking m = n + 2 realizes every power of
two as a limit value of the counting function.
"""

from commcensus.census import construct_family

for n in range(4):
    fam = construct_family(n)
    print(f"n = {n}")
    print("  generating primes:", fam.primes)
    print("  field radicands  :", tuple(f.d for f in fam.fields), "(fourth:", fam.d4, ")")
    print("  nonsplit primes  :", fam.census.nonsplit)
    print(
        "  classes          :",
        fam.census.count_total,
        "=",
        f"2**{n}" if fam.census.count_total == 2**n else "unexpected",
    )

# The recipe behind the output: p1 = 17 is the smallest prime 1 mod 8;
# the later primes are 1 mod 8 with (17|p) = -1, so the first three
# fields pin down {p1, ..., pm} while the fourth (with p1 split and the
# rest inert) removes p1 from the intersection.
