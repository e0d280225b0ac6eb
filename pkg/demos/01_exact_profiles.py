"""Exact norm profiles of split functions, and the sharpness of the threshold.

For even p and a compactly supported piecewise-polynomial f, the quantity
(N_t f)^p = int |F[S_t f](y)|^p dy is itself a piecewise polynomial in the
shift t, computed exactly (rational arithmetic end to end).  This walk-
through computes the profile of the unit indicator, shows it is constant
exactly from t0 = (p-2)A/4 on, and contrasts it with the two-bump function
whose profile increases.
"""

from splitnorm import (
    check_constancy,
    check_monotone,
    indicator,
    is_nonincreasing_on,
    newt_constant,
    norm_profile,
)
from splitnorm.scalars import rat

chi = indicator(-1, 1)

print("== the unit indicator at p = 4 ==")
prof = norm_profile(chi, 4)
print(f"profile window: {prof.profile}")
print(f"t0 = {prof.t0}, constant from {prof.constancy_onset}, tail = {prof.tail_value}")
print(f"value at 0:   {prof.value_at(0)}  (= 16/3)")
print(f"value at 1/4: {prof.value_at(rat(1, 4))}")
print(f"newt constant (time-domain tail formula): {newt_constant(chi, 4)}")
print(f"constancy verdict vs A = 1: {check_constancy(prof, 1)}")
print(f"monotone: {check_monotone(prof).ok}")
print()

print("== p = 2 is flat (Plancherel) ==")
prof2 = norm_profile(chi, 2)
print(f"constant from {prof2.constancy_onset}, value {prof2.tail_value} everywhere")
print()

print("== two bumps: monotonicity genuinely fails ==")
two_bump = indicator(-1, 1) + indicator(10, 11) + indicator(-11, -10)
prof_tb = norm_profile(two_bump, 4)
verdict = check_monotone(prof_tb)
print(f"nonincreasing: {verdict.ok}, witness: {verdict.witness}")
local = is_nonincreasing_on(prof_tb.profile, 4, 5)
x1, x2 = local.witness
print(f"inside (4,5): rises from {prof_tb.profile.eval(x1)} at t={x1} "
      f"to {prof_tb.profile.eval(x2)} at t={x2}")
print(f"hump values: {prof_tb.value_at(4)} -> {prof_tb.value_at(rat(9, 2))} -> "
      f"{prof_tb.value_at(5)}; constant {prof_tb.tail_value} from {prof_tb.constancy_onset}")
