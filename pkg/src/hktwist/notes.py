"""Canned caution notes the CLI attaches to its output.

Several constants in this corner of Hyperkahler geometry circulate in
print with typos or looser conventions.  Where our exact computation
disagrees with a commonly quoted value, the discrepancy is stated here and
surfaced on every relevant run rather than silently corrected.
"""

NOTE_EXACT = (
    "all arithmetic is exact (rational or certified algebraic); decimal "
    "strings are display-only roundings at the requested precision."
)

NOTE_OMEGA_POWERS = (
    "pairings scale homogeneously in the Beauville square: a weight-2k "
    "monomial paired against omega^(2n-2k) carries q^(n-k) (so for the "
    "Hilbert cube, omega^6 integrates to 15*q^3; quotations that drop the "
    "q-power are shorthand, not a different normalization)."
)

NOTE_CUBE_DECIMAL = (
    "the Hilbert-cube threshold constant is 5.953679 (certified to six "
    "significant digits from 6930t^3 - 35640t^2 - 31680t - 10560); the "
    "rounding 5.9538 sometimes quoted overstates the fifth digit."
)

NOTE_Z_PAIRING = (
    "the exact z-pairing expansion is 30a^2 - 240a - 480 = "
    "30(a^2 - 8a - 16), with largest root 4 + 4*sqrt(2) = 9.65685...; the "
    "variants 15(a^2 - 8a - 56) and (8 + sqrt(288))/2 that are sometimes "
    "quoted are inconsistent with that root (note sqrt(288) = 12*sqrt(2), "
    "so (8 + sqrt(288))/2 = 4 + 6*sqrt(2))."
)

NOTE_SQRT_TODD = (
    "the weight-4 coefficient of the square root of the Todd series is "
    "(7/5760)c2^2; squaring the root series back reproduces the Todd "
    "series exactly, which the sometimes-quoted denominator 5650 fails."
)

NOTE_CHI_K3 = (
    "the K3 Euler characteristic used for the cubic is chi(L) = q(L)/2 + 2 "
    "(Riemann-Roch with chi(O) = 2); a quotation with L^2 in place of "
    "q(L)/2 mixes up the two normalizations of the intersection square."
)

NOTE_NIEPER_CONVENTION = (
    "the second linear equation (7/4)A - B = 810 pairs the weight-4 "
    "component of sqrt(Td) against L^2 with unit weight; the fully "
    "factorial-weighted reading would put 1620 on the right and solve to "
    "(1200, 480), which contradicts the Riemann-Roch equation 3A - B = "
    "3120 jointly with the stored table (1848, 2424)."
)
