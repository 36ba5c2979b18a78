"""Multi-copy and catalyst-assisted convertibility.

Two spectra that are incomparable one copy at a time may still become
convertible when several copies are transformed collectively, or when an
ancillary entangled state (a catalyst) is attached and returned intact.  A
pair is *strongly* incomparable when no finite copy count and no
finite-Schmidt-number catalyst opens either direction.

This module provides

* sorted product-spectrum kernels (full materialization under a size cap,
  plus a lazy heap merge when only the largest entries are needed),
* :func:`condition_c`, a sound sufficient test for strong incomparability:
  the same spectrum has both the strictly larger top entry and the strictly
  larger Schmidt number.  A larger top entry rules that state out as the
  source of a conversion (the first prefix inequality fails) and a larger
  Schmidt number rules it out as the target (Schmidt numbers cannot grow);
  both quantities multiply under tensor products, so the blockage survives
  any copy count and any finite catalyst;
* bounded witness searches over copy counts and catalyst grids, and
  :func:`strong_verdict`, which combines the sound paths and otherwise
  reports an honest ``inconclusive``.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass

import numpy as np

from .errors import InfiniteSchmidtNumber, InternalInconsistency, SizeCapExceeded
from .majorization import Relation, compare, majorized_by
from .spectra import (
    DEFAULT_TOLERANCES,
    SchmidtSpectrum,
    Tolerances,
    schmidt_number,
)

DEFAULT_SIZE_CAP = 10**7


def _require_finite(spec: SchmidtSpectrum, what: str) -> None:
    if spec.tail is not None:
        raise InfiniteSchmidtNumber(f"{what} requires a finite spectrum")


def tensor_product_spectrum(
    a: SchmidtSpectrum,
    c: SchmidtSpectrum,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> SchmidtSpectrum:
    """Spectrum of a joint system: sorted pairwise products, renormalized."""
    _require_finite(a, "tensor product")
    _require_finite(c, "tensor product")
    size = len(a) * len(c)
    if size > size_cap:
        raise SizeCapExceeded(size, size_cap)
    products = np.sort(np.multiply.outer(a.values, c.values).ravel())[::-1]
    return SchmidtSpectrum(products / products.sum())


def tensor_power_spectrum(
    a: SchmidtSpectrum,
    m: int,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> SchmidtSpectrum:
    """Spectrum of m copies: all m-fold entry products, sorted non-increasing.

    Products are kept as computed (no renormalization), so the total mass
    drifts from 1 by at most about m rounding units.
    """
    _require_finite(a, "tensor power")
    if m < 1:
        raise ValueError("copy count must be at least 1")
    size = len(a) ** m
    if size > size_cap:
        raise SizeCapExceeded(size, size_cap)
    cur = a.values
    for _ in range(m - 1):
        cur = np.multiply.outer(cur, a.values).ravel()
    return SchmidtSpectrum(np.sort(cur)[::-1])


def _top_products(x: np.ndarray, y: np.ndarray, k: int) -> np.ndarray:
    """Largest k products x_i*y_j of two non-increasing vectors, lazily.

    Heap frontier expansion: popping (i, j) exposes (i+1, j) and (i, j+1).
    Never materializes the full len(x)*len(y) grid.
    """
    k = min(k, len(x) * len(y))
    out = np.empty(k)
    heap = [(-(x[0] * y[0]), 0, 0)]
    seen = {(0, 0)}
    for pos in range(k):
        negp, i, j = heapq.heappop(heap)
        out[pos] = -negp
        if i + 1 < len(x) and (i + 1, j) not in seen:
            seen.add((i + 1, j))
            heapq.heappush(heap, (-(x[i + 1] * y[j]), i + 1, j))
        if j + 1 < len(y) and (i, j + 1) not in seen:
            seen.add((i, j + 1))
            heapq.heappush(heap, (-(x[i] * y[j + 1]), i, j + 1))
    return out


def top_k_tensor_power(a: SchmidtSpectrum, m: int, k: int) -> np.ndarray:
    """Largest k entries of the m-copy spectrum without building all of it.

    Any entry outside the top k of a partial product is dominated by at
    least k entries after every further factor, so iterating the lazy
    pairwise merge on k-prefixes is exact.  Useful when len(a)**m is far
    beyond the materialization cap but only a prefix horizon matters.
    """
    _require_finite(a, "tensor power prefix")
    if m < 1:
        raise ValueError("copy count must be at least 1")
    if k < 1:
        raise ValueError("prefix length must be at least 1")
    cur = a.values[: min(k, len(a))]
    for _ in range(m - 1):
        cur = _top_products(cur, a.values, k)
    return cur


def condition_c(
    a: SchmidtSpectrum,
    b: SchmidtSpectrum,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> bool:
    """Sound sufficient test for strong incomparability of finite spectra.

    Holds when one spectrum dominates in both the top entry and the Schmidt
    number, strictly: a1 > b1 with #a > #b, or a1 < b1 with #a < #b.  The
    top-entry inequality must clear `tau_cmp`; ties (within `tau_cmp`) fail
    the test rather than guess.
    """
    holds, _ = _condition_c_state(a, b, tol)
    return holds


def _condition_c_state(a, b, tol):
    """(holds, near_tie): near_tie marks a top-entry tie within tau_cmp that
    alone blocked an otherwise-satisfied disjunct."""
    _require_finite(a, "condition_c")
    _require_finite(b, "condition_c")
    na = schmidt_number(a, tol)
    nb = schmidt_number(b, tol)
    gap = float(a.values[0] - b.values[0])
    if gap > tol.tau_cmp:
        return na > nb, False
    if gap < -tol.tau_cmp:
        return na < nb, False
    return False, na != nb


@dataclass(frozen=True)
class MultiCopyWitness:
    """Conversion found at `copies` collective copies, in `direction`."""

    direction: Relation
    copies: int

    def to_json(self) -> dict:
        return {
            "kind": "multi-copy",
            "direction": self.direction.value,
            "copies": self.copies,
        }


@dataclass(frozen=True)
class CatalystWitness:
    """Conversion enabled by attaching `catalyst`, in `direction`."""

    direction: Relation
    catalyst: SchmidtSpectrum

    def to_json(self) -> dict:
        from .spectra import spectrum_to_json

        return {
            "kind": "catalyst",
            "direction": self.direction.value,
            "catalyst": spectrum_to_json(self.catalyst),
        }


def multicopy_convertible(
    a: SchmidtSpectrum,
    b: SchmidtSpectrum,
    m_max: int,
    tol: Tolerances = DEFAULT_TOLERANCES,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> MultiCopyWitness | None:
    """Search m = 1..m_max copies for a conversion in either direction.

    Returns the smallest qualifying m (forward checked before backward), or
    None if the bounded search finds nothing.  Convertibility at some m says
    nothing about m+1, so each copy count is tested independently.
    """
    _require_finite(a, "multi-copy search")
    _require_finite(b, "multi-copy search")
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    needed = max(len(a), len(b)) ** m_max
    if needed > size_cap:
        raise SizeCapExceeded(needed, size_cap)
    for m in range(1, m_max + 1):
        pa = tensor_power_spectrum(a, m, size_cap=size_cap)
        pb = tensor_power_spectrum(b, m, size_cap=size_cap)
        if majorized_by(pa, pb, tol):
            return MultiCopyWitness(Relation.FORWARD, m)
        if majorized_by(pb, pa, tol):
            return MultiCopyWitness(Relation.BACKWARD, m)
    return None


def catalyst_convertible(
    a: SchmidtSpectrum,
    b: SchmidtSpectrum,
    c: SchmidtSpectrum,
    tol: Tolerances = DEFAULT_TOLERANCES,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> Relation | None:
    """Direction opened by catalyst `c`, or None.

    Forward means a (x) c is majorized by b (x) c; equal product spectra
    count as forward (the conversion exists trivially).
    """
    verdict = compare(
        tensor_product_spectrum(a, c, size_cap=size_cap),
        tensor_product_spectrum(b, c, size_cap=size_cap),
        tol,
    )
    if verdict.relation in (Relation.FORWARD, Relation.EQUIVALENT):
        return Relation.FORWARD
    if verdict.relation is Relation.BACKWARD:
        return Relation.BACKWARD
    return None


def sorted_simplex_grid(dim: int, steps: int):
    """Yield sorted probability vectors (c1 >= ... >= c_dim) on a 1/steps grid.

    Enumeration is ascending lexicographic (flattest vectors first), so the
    first hit of a scan is a deterministic, canonical witness.  For dim > 2
    vectors with a trailing zero are skipped: they already appeared at the
    lower dimension.
    """
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    if steps < 2:
        raise ValueError("grid needs at least 2 steps")

    def parts(remaining, slots, cap):
        if slots == 1:
            if remaining <= cap:
                yield (remaining,)
            return
        lo = -(-remaining // slots)  # ceil: keep the sequence non-increasing
        for head in range(lo, min(cap, remaining) + 1):
            for rest in parts(remaining - head, slots - 1, head):
                yield (head,) + rest

    for combo in parts(steps, dim, steps):
        if dim > 2 and combo[-1] == 0:
            continue
        yield np.asarray(combo, dtype=float) / steps


def catalyst_search(
    a: SchmidtSpectrum,
    b: SchmidtSpectrum,
    dim_max: int,
    grid_steps: int,
    tol: Tolerances = DEFAULT_TOLERANCES,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> CatalystWitness | None:
    """Scan grid catalysts of dimension 2..dim_max for an opened direction.

    Returns the first working catalyst in the canonical grid order (see
    :func:`sorted_simplex_grid`).  Absence is NOT a proof of impossibility:
    the grid is finite and coarse, so None only means the bounded search
    failed.
    """
    _require_finite(a, "catalyst search")
    _require_finite(b, "catalyst search")
    if dim_max < 2:
        raise ValueError("dim_max must be at least 2")
    for dim in range(2, dim_max + 1):
        for vec in sorted_simplex_grid(dim, grid_steps):
            candidate = SchmidtSpectrum(vec)
            direction = catalyst_convertible(a, b, candidate, tol, size_cap=size_cap)
            if direction is not None:
                return CatalystWitness(direction, candidate)
    return None


class StrongOutcome(enum.Enum):
    STRONG_BY_C = "strong-by-c"
    CONVERTIBLE = "convertible-witness"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class StrongVerdict:
    """Tri-state strong-incomparability verdict with its evidence.

    `checked_bounds` records (m_max, catalyst_dim_max, grid_steps) so an
    `inconclusive` outcome carries the extent of the failed search.
    """

    outcome: StrongOutcome
    witness: MultiCopyWitness | CatalystWitness | None
    checked_bounds: tuple[int, int, int]

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "witness": None if self.witness is None else self.witness.to_json(),
            "checked_bounds": {
                "m_max": self.checked_bounds[0],
                "catalyst_dim_max": self.checked_bounds[1],
                "grid_steps": self.checked_bounds[2],
            },
        }


def strong_verdict(
    a: SchmidtSpectrum,
    b: SchmidtSpectrum,
    *,
    m_max: int = 3,
    catalyst_dim_max: int = 3,
    grid_steps: int = 100,
    tol: Tolerances = DEFAULT_TOLERANCES,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> StrongVerdict:
    """Combine the sound paths into one verdict.

    condition_c proves strong incomparability; a witness search proves
    convertibility.  Witnesses are searched cheapest conversion first:
    single copy, then a grid catalyst, then collective multi-copy
    operations.  The two paths can never both succeed (top entries and
    Schmidt numbers both multiply under tensor products, so a conversion
    forces the non-strict reversal of one of the orderings that condition_c
    requires strictly); if they ever do, an InternalInconsistency is raised
    because one of the implementations is wrong.  When condition_c holds,
    the witness searches still run as a self-audit.
    """
    bounds = (m_max, catalyst_dim_max, grid_steps)
    holds = condition_c(a, b, tol)
    witness: MultiCopyWitness | CatalystWitness | None
    witness = multicopy_convertible(a, b, 1, tol, size_cap=size_cap)
    if witness is None:
        witness = catalyst_search(
            a, b, catalyst_dim_max, grid_steps, tol, size_cap=size_cap
        )
    if witness is None and m_max > 1:
        witness = multicopy_convertible(a, b, m_max, tol, size_cap=size_cap)
    if holds and witness is not None:
        raise InternalInconsistency(
            f"sound sufficient test and witness search both fired: {witness}"
        )
    if holds:
        return StrongVerdict(StrongOutcome.STRONG_BY_C, None, bounds)
    if witness is not None:
        return StrongVerdict(StrongOutcome.CONVERTIBLE, witness, bounds)
    return StrongVerdict(StrongOutcome.INCONCLUSIVE, None, bounds)
