"""Schmidt spectra of bipartite pure states.

Every quantity in this package is a function of the Schmidt spectrum alone:
the non-increasing vector of squared Schmidt coefficients, equal to the
eigenvalues of either reduced density operator.  Coefficient matrices appear
only at ingestion (:func:`schmidt_spectrum`); everything downstream consumes
:class:`SchmidtSpectrum` objects.

A spectrum is stored as a finite explicit head, optionally followed by a
geometric tail.  The tail represents infinitely many strictly positive
entries ``first * ratio**i`` in closed form, so prefix sums and residual
masses of infinite spectra are exact geometric series, never truncations.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionTooSmall,
    InvalidInput,
    NotNormalized,
    SizeCapExceeded,
)

# Comparison horizons for tailed spectra are capped here; a geometric tail
# whose residual has not dropped below tolerance after this many entries is
# treated as an ill-conditioned input rather than ground through.
MAX_HORIZON = 10**6


@dataclass(frozen=True)
class Tolerances:
    """Numerical slack used throughout the package.

    tau_norm
        Allowed deviation of total probability mass from 1.
    tau_zero
        Entries at or below this count as zero for Schmidt numbers.
    tau_cmp
        Slack for prefix-sum inequalities and strictness margins.
    """

    tau_norm: float = 1e-9
    tau_zero: float = 1e-12
    tau_cmp: float = 1e-12

    def __post_init__(self):
        if not (self.tau_norm > 0 and self.tau_zero > 0 and self.tau_cmp > 0):
            raise InvalidInput("tolerances must be strictly positive")
        if not self.tau_zero < 1:
            raise InvalidInput("tau_zero must be below 1")


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class GeometricTail:
    """Closed-form remainder of an infinite spectrum: entries first*ratio**i."""

    first: float
    ratio: float

    def __post_init__(self):
        if not (self.first > 0):
            raise InvalidInput("tail first term must be positive")
        if not (0 < self.ratio < 1):
            raise InvalidInput("tail ratio must lie strictly between 0 and 1")

    def mass(self) -> float:
        return self.first / (1.0 - self.ratio)

    def entries(self, count: int, offset: int = 0) -> np.ndarray:
        return self.first * self.ratio ** np.arange(offset, offset + count)

    def prefix_mass(self, count) -> float:
        """Sum of the first `count` tail entries (vectorizes over `count`)."""
        return self.first * (1.0 - self.ratio**count) / (1.0 - self.ratio)

    def residual_mass(self, count) -> float:
        return self.first * self.ratio**count / (1.0 - self.ratio)

    def dropped(self, count: int) -> "GeometricTail":
        """The tail that remains after its first `count` entries are removed."""
        return GeometricTail(self.first * self.ratio**count, self.ratio)


@dataclass(frozen=True, eq=False)
class SchmidtSpectrum:
    """Non-increasing probability vector, optionally with a geometric tail.

    `values` holds the explicit head, sorted non-increasing; when `tail` is
    present its first term does not exceed the last head entry, so the head
    followed by the tail IS the sorted spectrum.  `adjusted` records that
    ingestion had to reorder or renormalize user input.
    """

    values: np.ndarray
    tail: GeometricTail | None = None
    adjusted: bool = False

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_finite(self) -> bool:
        return self.tail is None

    def total_mass(self) -> float:
        mass = float(self.values.sum())
        if self.tail is not None:
            mass += self.tail.mass()
        return mass

    def entry_prefix(self, k: int) -> np.ndarray:
        """First `k` entries of the sorted spectrum, zero-padded past the end."""
        head = self.values[:k]
        if len(head) == k:
            return head.astype(float, copy=False)
        out = np.zeros(k)
        out[: len(head)] = head
        if self.tail is not None:
            out[len(head) :] = self.tail.entries(k - len(head))
        return out

    def residual_after(self, k: int) -> float:
        """Mass beyond the first `k` entries, tail evaluated in closed form."""
        if k < len(self.values):
            rest = float(self.values[k:].sum())
        else:
            rest = 0.0
        if self.tail is None:
            return rest
        if k <= len(self.values):
            return rest + self.tail.mass()
        return self.tail.residual_mass(k - len(self.values))

    def horizon(self, tau: float) -> int:
        """Smallest entry count after which the residual mass is below `tau`."""
        if self.tail is None:
            return len(self.values)
        target = tau * (1.0 - self.tail.ratio) / self.tail.first
        if target >= 1.0:
            extra = 0
        else:
            extra = int(math.floor(math.log(target) / math.log(self.tail.ratio))) + 1
        k = len(self.values) + extra
        if k > MAX_HORIZON:
            raise SizeCapExceeded(k, MAX_HORIZON, "tail residual shrinks too slowly")
        return k


def _merge_tail_boundary(values, tail):
    """Peel leading tail entries into the head until head >= tail everywhere.

    Keeps the representation exact: peeled entries become explicit, the
    remainder is still geometric with the same ratio.
    """
    if tail is None:
        return values, None
    smallest = values[-1] if len(values) else np.inf
    if tail.first <= smallest:
        return values, tail
    count = 0
    first = tail.first
    while first > smallest:
        count += 1
        first *= tail.ratio
    merged = np.sort(np.concatenate([values, tail.entries(count)]))[::-1]
    return merged, tail.dropped(count)


def make_spectrum(
    values,
    tail: GeometricTail | None = None,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> SchmidtSpectrum:
    """Ingest a user-supplied spectrum: sort, validate, renormalize.

    Unsorted input is sorted and slightly denormalized input (within
    `tol.tau_norm`) is rescaled to total mass 1; either fix sets the
    `adjusted` flag on the result instead of rejecting.  Masses further than
    `tau_norm` from 1, negative entries, and non-finite entries are errors.
    """
    arr = np.asarray(values, dtype=float).ravel().copy()
    if arr.size == 0:
        raise InvalidInput("a spectrum needs at least one entry")
    if not np.all(np.isfinite(arr)):
        raise InvalidInput("spectrum entries must be finite numbers")
    adjusted = False
    negative = arr < 0
    if negative.any():
        if arr.min() < -tol.tau_zero:
            raise InvalidInput(f"negative entry {arr.min()!r} in spectrum")
        arr[negative] = 0.0
        adjusted = True
    order = np.sort(arr)[::-1]
    if not np.array_equal(order, arr):
        adjusted = True
        arr = order
    if tail is not None:
        # Positive tail entries cannot sit below explicit zeros.
        keep = arr > tol.tau_zero
        if not keep.all():
            arr = arr[keep]
            adjusted = True
        if arr.size == 0:
            raise InvalidInput("a tailed spectrum needs a positive head")
    tail_mass = tail.mass() if tail is not None else 0.0
    total = float(arr.sum()) + tail_mass
    if abs(total - 1.0) > tol.tau_norm:
        raise NotNormalized(f"total mass {total!r} deviates from 1 beyond tau_norm")
    head_target = 1.0 - tail_mass
    if head_target <= 0:
        raise NotNormalized("tail mass alone reaches or exceeds 1")
    if abs(total - 1.0) > 4 * np.finfo(float).eps:
        adjusted = True
    arr *= head_target / arr.sum()
    arr, tail = _merge_tail_boundary(arr, tail)
    return SchmidtSpectrum(arr, tail, adjusted)


def schmidt_spectrum(
    matrix, tol: Tolerances = DEFAULT_TOLERANCES
) -> SchmidtSpectrum:
    """Schmidt spectrum of a pure state given by its coefficient matrix.

    `matrix` is the n-by-n complex amplitude array of a state of two
    n-dimensional subsystems in a fixed product basis; its squared singular
    values are the eigenvalues of the reduced density operator.

    Raises NotNormalized when the Frobenius norm deviates from 1 beyond
    `tol.tau_norm` and DimensionTooSmall for n < 2.
    """
    try:
        mat = np.asarray(matrix, dtype=complex)
    except (ValueError, TypeError) as exc:
        raise InvalidInput(f"bad coefficient matrix: {exc}") from exc
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise InvalidInput(f"coefficient matrix must be square, got {mat.shape}")
    n = mat.shape[0]
    if n < 2:
        raise DimensionTooSmall(f"need dimension >= 2, got {n}")
    norm = float(np.linalg.norm(mat))
    if abs(norm - 1.0) > tol.tau_norm:
        raise NotNormalized(f"Frobenius norm {norm!r} deviates from 1")
    sv = np.linalg.svd(mat, compute_uv=False)
    probs = sv * sv
    probs /= probs.sum()
    return SchmidtSpectrum(probs)


def schmidt_number(
    spec: SchmidtSpectrum, tol: Tolerances = DEFAULT_TOLERANCES
) -> int | float:
    """Count of entries above `tol.tau_zero`; `math.inf` for tailed spectra."""
    if spec.tail is not None:
        return math.inf
    return int(np.count_nonzero(spec.values > tol.tau_zero))


def prefix_sums(spec: SchmidtSpectrum, k_max: int) -> np.ndarray:
    """Cumulative sums of the first k entries, for k = 1..k_max.

    Past the explicit head the tail contribution is the closed-form partial
    geometric series; past a finite spectrum the sums stay at the total.
    """
    if k_max < 1:
        raise InvalidInput("k_max must be at least 1")
    head = np.cumsum(spec.values)
    if k_max <= len(head):
        return head[:k_max].copy()
    out = np.empty(k_max)
    out[: len(head)] = head
    head_total = head[-1] if len(head) else 0.0
    if spec.tail is None:
        out[len(head) :] = head_total
    else:
        counts = np.arange(1, k_max - len(head) + 1)
        out[len(head) :] = head_total + spec.tail.prefix_mass(counts)
    return out


def comparison_horizon(
    a: SchmidtSpectrum, b: SchmidtSpectrum, tol: Tolerances = DEFAULT_TOLERANCES
) -> int:
    """Entry count after which both residual masses drop below `tau_cmp`."""
    return max(a.horizon(tol.tau_cmp), b.horizon(tol.tau_cmp), 1)


def spectrum_distance(
    a: SchmidtSpectrum, b: SchmidtSpectrum, tol: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """Hilbert-space distance between states sharing sorted Schmidt bases.

    d(a, b) = sqrt(2 - 2 * sum_j sqrt(a_j * b_j)).  Tails are truncated once
    both residual masses are below `tau_cmp`; by Cauchy-Schwarz the neglected
    overlap is below `tau_cmp` as well.
    """
    k = comparison_horizon(a, b, tol)
    overlap = float(np.sqrt(a.entry_prefix(k) * b.entry_prefix(k)).sum())
    return math.sqrt(max(0.0, 2.0 - 2.0 * overlap))


# --- text and JSON forms -------------------------------------------------
#
# Text:  0.5,0.25,0.25        or with a tail:  0.45,0.45...geom(0.05,0.5)
# JSON:  {"values": [...], "tail": {"first": f, "ratio": r} | null}

_TAIL_RE = re.compile(r"^(?P<head>.*?)\.\.\.geom\((?P<first>[^,]+),(?P<ratio>[^)]+)\)$")


def g17(x: float) -> str:
    """Format a float with 17 significant digits (round-trips doubles)."""
    return format(float(x), ".17g")


def parse_spectrum(
    text: str, *, tol: Tolerances = DEFAULT_TOLERANCES
) -> SchmidtSpectrum:
    """Parse the text or JSON form of a spectrum (ingestion rules apply)."""
    text = text.strip()
    if not text:
        raise InvalidInput("empty spectrum")
    if text.startswith("{"):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"bad spectrum JSON: {exc}") from exc
        return spectrum_from_json(payload, tol=tol)
    tail = None
    match = _TAIL_RE.match(text)
    if match:
        text = match.group("head")
        try:
            tail = GeometricTail(
                float(match.group("first")), float(match.group("ratio"))
            )
        except ValueError as exc:
            raise InvalidInput(f"bad tail syntax: {exc}") from exc
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InvalidInput(f"bad spectrum value: {exc}") from exc
    return make_spectrum(values, tail, tol=tol)


def format_spectrum(spec: SchmidtSpectrum) -> str:
    """Text form of a spectrum, 17 significant digits per entry."""
    head = ",".join(g17(v) for v in spec.values)
    if spec.tail is None:
        return head
    return f"{head}...geom({g17(spec.tail.first)},{g17(spec.tail.ratio)})"


def spectrum_to_json(spec: SchmidtSpectrum) -> dict:
    tail = None
    if spec.tail is not None:
        tail = {"first": spec.tail.first, "ratio": spec.tail.ratio}
    return {"values": [float(v) for v in spec.values], "tail": tail,
            "adjusted": spec.adjusted}


def spectrum_from_json(
    payload: dict, *, tol: Tolerances = DEFAULT_TOLERANCES
) -> SchmidtSpectrum:
    if not isinstance(payload, dict) or "values" not in payload:
        raise InvalidInput("spectrum JSON needs a 'values' array")
    tail = None
    raw_tail = payload.get("tail")
    if raw_tail is not None:
        try:
            tail = GeometricTail(float(raw_tail["first"]), float(raw_tail["ratio"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad tail object: {exc}") from exc
    return make_spectrum(payload["values"], tail, tol=tol)
