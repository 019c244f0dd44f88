"""Recovering continued-fraction weights from raw moments.

Gram-Schmidt against the moment functional reads s and t back off the
orthogonal polynomials.  Feeding it the moments of a known family must
return exactly the closed-form weights; feeding it degenerate moments
must fail loudly instead of returning something plausible.
"""

from qeuler.algebra import QPoly
from qeuler.jacobi import (
    MomentSeq,
    NonQuasiDefiniteError,
    jfraction_from_moments,
    jfraction_from_params,
    moments_by_motzkin_paths,
)

print("round trip for (a, b, d) = (2, 1, 5):")
jf = jfraction_from_params(2, 1, 5, 10)
mu = moments_by_motzkin_paths(jf, 10)
recovered = jfraction_from_moments(mu)
print(f"  recovered depth {recovered.depth}; matches closed forms: "
      f"{recovered.s == jf.s[:recovered.depth] and recovered.t == jf.t[:recovered.depth - 1]}")
for i in range(3):
    print(f"  s_{i} = {recovered.s[i]}")

print("\nscalar moments work too (Motzkin numbers -> all-ones weights):")
motzkin = MomentSeq(tuple(QPoly(v) for v in (1, 1, 2, 4, 9, 21, 51, 127)))
flat = jfraction_from_moments(motzkin)
print(f"  s = {[str(p) for p in flat.s]}, t = {[str(p) for p in flat.t]}")

print("\ndegenerate moments are refused:")
try:
    jfraction_from_moments(MomentSeq((QPoly(1),) + (QPoly(),) * 5), 3)
except NonQuasiDefiniteError as exc:
    print(f"  NonQuasiDefiniteError: {exc}")
