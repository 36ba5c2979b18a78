"""Deciding convertibility between entangled states.

One state converts into another (deterministically, by local operations and
classical communication) exactly when its spectrum is majorized by the
other's: every prefix sum must be dominated.  Comparing both directions
splits pairs into four classes, and the failing prefix indices are reported
as witnesses.
"""

from entorder import Relation, compare, make_spectrum

pairs = [
    ("uniform vs skewed", [0.5, 0.5], [0.7, 0.3]),
    ("skewed vs uniform", [0.7, 0.3], [0.5, 0.5]),
    ("equal spectra", [0.5, 0.3, 0.2], [0.5, 0.3, 0.2]),
    ("incomparable trio", [0.5, 0.25, 0.25], [0.4, 0.4, 0.2]),
    ("max entangled converts to anything", [0.25] * 4, [1.0, 0, 0, 0]),
]

for label, a, b in pairs:
    verdict = compare(make_spectrum(a), make_spectrum(b))
    print(f"{label}: {verdict.relation.value}")
    if verdict.relation is Relation.INCOMPARABLE:
        print(f"   forward blocked at k={list(verdict.forward_violations)},"
              f" backward blocked at k={list(verdict.backward_violations)}")

# The incomparable trio in detail: cumulative sums cross.
print("\nwhy (0.5,0.25,0.25) and (0.4,0.4,0.2) are incomparable:")
print("   prefixes of a: 0.50 0.75 1.00")
print("   prefixes of b: 0.40 0.80 1.00")
print("   a wins at k=1, b wins at k=2: neither majorizes the other.")

# A Schmidt-number gap already settles one direction: mass that b spreads
# over more terms can never be concentrated back by local operations.
verdict = compare(make_spectrum([0.6, 0.2, 0.1, 0.1]), make_spectrum([0.5, 0.5]))
print("\n4-term vs 2-term state:", verdict.relation.value,
      "(the 4-term state cannot reach a spectrum with fewer terms, nor back)")
