"""The trigonometric-series analog: splitting a coefficient sequence.

A finite sequence {c_k}, |k| <= A, transforms to a trigonometric
polynomial on [0, 1].  Splitting moves positive indices up by t, negative
ones down by t, and shares c_0 half-and-half between +-t.  For even p the
L^p[0,1] norm of the split polynomial is an exact rational (Parseval on
the (p/2)-fold coefficient self-convolution).
"""

from splitnorm import CoeffSeq, series_profile
from splitnorm.scalars import gauss, rat

print("== the single-coefficient sequence ==")
prof = series_profile(CoeffSeq.from_mapping({0: 1}), 4)
print("values at t = 0..4:", [str(prof.value(t)) for t in range(5)])
print("(t = 0 keeps the mass together: 1; any split gives 3/8 = mean of cos^4)")

print()
print("== constancy starts strictly past (p-2)A/4 ==")
seq = CoeffSeq.from_mapping({-2: gauss(0, rat(-1, 3)), 0: gauss(-1, 3)})
prof6 = series_profile(seq, 6)
print(f"A = {seq.bound}, p = 6, nominal threshold {prof6.threshold}, "
      f"guaranteed onset {prof6.guaranteed_onset}")
print("values at t = 1..5:", [str(prof6.value(t)) for t in range(1, 6)])
print("(the value at t = 2 = (p-2)A/4 still carries a support-edge term;")
print(" a continuum convolution would vanish there, a discrete coefficient")
print(" does not -- hence the strict inequality)")

print()
print("== Parseval makes p = 2 flat from the first shift ==")
seq2 = CoeffSeq.from_mapping({-1: 1, 0: rat(1, 2), 1: 1})
prof2 = series_profile(seq2, 2)
print("values at t = 0..4:", [str(prof2.value(t)) for t in range(5)])
