"""
Census walk-through for the radicands 3, 17, 51
===============================================

Start from three quadratic irrationalities, turn each into the shortest
closed geodesic it can produce, and count the commensurability classes of
arithmetic surfaces whose length spectrum contains all three.
"""

from commcensus.census import count_algebras, nonsplit_is_finite
from commcensus.spectra import spectrum_from_inputs

# Each radicand d picks out the fundamental totally positive unit of the
# order Z[sqrt(d)]; its trace is the smallest t >= 3 with t**2 - 4 equal
# to disc * square.
spec = spectrum_from_inputs(radicands=[3, 17, 51])
for c in spec.classes:
    print(
        f"radicand -> trace {c.trace:4d}  length {c.length:.6f}  "
        f"field Q(sqrt({c.field.d})) of discriminant {c.field.disc}"
    )

# The three discriminants multiply to a perfect square (12 * 17 * 204 =
# 204**2), which is exactly the finiteness condition: only finitely many
# primes can stay nonsplit in all three fields at once.
fields = spec.fields()
verdict = nonsplit_is_finite(fields)
print("finite census:", verdict.finite, "witness indices:", verdict.square_witness)

report = count_algebras(fields)
print("nonsplit primes:", report.nonsplit)
print("classes:", report.count_total, "(division algebras:", report.count_division, ")")

# The classes themselves: the ramification set is an even-cardinality
# subset of the nonsplit primes, and the coarea is (pi/3) * prod(p - 1).
for cls in report.classes:
    print(f"  Ram = {str(cls.ram):8s} coarea = {cls.coarea}  (~{float(cls.coarea):.6f})")
