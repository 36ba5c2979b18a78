"""From coefficient matrices to Schmidt spectra.

A pure state of two n-dimensional subsystems is an n-by-n complex amplitude
matrix; its squared singular values (the eigenvalues of either reduced
density operator) form the Schmidt spectrum, which is all this library ever
needs.  This script walks through ingestion, Schmidt numbers, prefix sums,
and the distance between spectra.
"""

import numpy as np

from entorder import (
    complete_extension,
    make_spectrum,
    prefix_sums,
    schmidt_number,
    schmidt_spectrum,
    spectrum_distance,
)

# --- two classic states ----------------------------------------------------

bell = schmidt_spectrum(np.diag([2**-0.5, 2**-0.5]))
product = schmidt_spectrum(np.diag([1.0, 0.0]))
print("maximally entangled 2x2 state:", bell.values, "-> Schmidt number",
      schmidt_number(bell))
print("product state:               ", product.values, "-> Schmidt number",
      schmidt_number(product))

# --- a random state, and why phases do not matter ----------------------------

rng = np.random.default_rng(1)
mat = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
mat /= np.linalg.norm(mat)
spec = schmidt_spectrum(mat)
print("\nrandom 4x4 state:", np.round(spec.values, 4))
print("sum:", spec.values.sum())

# local basis changes (unitaries on either side) leave the spectrum alone
q, _ = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
rotated = schmidt_spectrum(q @ mat)
print("after a local unitary:", np.round(rotated.values, 4))

# --- prefix sums are the whole story -----------------------------------------

print("\nprefix sums of", spec.values.round(4), ":", prefix_sums(spec, 4).round(4))

# --- spectra with infinitely many entries -------------------------------------

# extending a one-term spectrum into an all-positive one: head 1/2 and a
# geometric tail 1/4, 1/8, ... stored exactly, never materialized
completed = complete_extension(make_spectrum([1.0]), 1)
print("\ncompleted point spectrum:", completed.values, "+ tail", completed.tail)
print("its first five prefix sums:", prefix_sums(completed, 5))
print("Schmidt number:", schmidt_number(completed))

# --- distances -----------------------------------------------------------------

d = spectrum_distance(product, bell)
print("\ndistance between the product and entangled spectra:", round(d, 6))
for m in (1, 10, 100):
    closer = complete_extension(make_spectrum([1.0]), m)
    print(f"completed point spectrum at m={m}: distance to base",
          round(spectrum_distance(closer, make_spectrum([1.0])), 6))
