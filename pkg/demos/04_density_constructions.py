"""Why strongly incomparable pairs are everywhere (in infinite dimension).

Two explicit constructions make the genericity argument concrete:

1. complete_extension turns any finite spectrum into a nearby all-positive
   one (head scaled by m/(m+1), the freed 1/(m+1) of mass spread along a
   geometric tail); as m grows it converges to the original.
2. truncation_pair cuts a complete pair down to finite spectra in which the
   member with the larger top entry keeps one extra term.  For every
   sufficiently large cut the pair satisfies condition_c, hence is strongly
   incomparable, while converging back to the original pair.

Together: arbitrarily close to any pair sits a strongly incomparable one.
"""

from entorder import (
    complete_extension,
    convergence_report,
    make_spectrum,
    minimal_c_index,
    spectrum_distance,
    truncation_pair,
)

# --- completion: approximating a finite spectrum by all-positive ones ----------

base = make_spectrum([0.6, 0.4])
print("base spectrum:", base.values)
for m in (1, 10, 100, 1000):
    completed = complete_extension(base, m)
    print(f"  m={m:5d}: head={completed.values.round(6)} tail={completed.tail}"
          f"  distance={spectrum_distance(completed, base):.5f}")

# --- truncation pairs: the worked example ---------------------------------------

a = make_spectrum([0.6, 0.2, 0.1, 0.05, 0.05])
b = make_spectrum([0.4, 0.3, 0.2, 0.05, 0.05])
pair = truncation_pair(a, b, 3)
print("\ncut at m=3:")
print("  a_3 =", pair.a_m.values, " (3 terms, top 2/3)")
print("  b_3 =", pair.b_m.values, " (2 terms, top 4/7)")
print("smallest cut that passes condition_c:", minimal_c_index(a, b, 50))

# --- the convergence audit -------------------------------------------------------

# complete the pair first so the truncations never run out of entries
ca = complete_extension(a, 25)
cb = complete_extension(b, 25)
print("\naudit of the completed pair (distances shrink, the verdicts lock in):")
print("m   dist_a   dist_b   condition_c  incomparable")
for row in convergence_report(ca, cb, [3, 5, 10, 20, 40]):
    print(f"{row.m:<3d} {row.dist_a:<8.5f} {row.dist_b:<8.5f} "
          f"{str(row.condition_c):<12s} {row.incomparable}")
