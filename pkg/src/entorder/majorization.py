"""Convertibility of bipartite pure states under local operations.

A state with spectrum `a` can be converted, deterministically and by local
operations plus classical communication, into a state with spectrum `b`
exactly when `a` is majorized by `b`: every prefix sum of `a` is bounded by
the matching prefix sum of `b`.  Comparing both directions yields a four-way
verdict, and the indices at which either direction fails are reported in
full; they double as diagnostics for which prefix inequality separates the
pair.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .spectra import (
    DEFAULT_TOLERANCES,
    SchmidtSpectrum,
    Tolerances,
    comparison_horizon,
    prefix_sums,
)


class Relation(enum.Enum):
    FORWARD = "forward-convertible"
    BACKWARD = "backward-convertible"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ComparisonVerdict:
    """Outcome of a two-sided majorization check.

    `forward_violations` lists every k (1-based) at which the forward prefix
    inequality prefix_k(a) <= prefix_k(b) fails beyond slack;
    `backward_violations` is the mirror list.  `near_tie` flags that some
    decisive margin was within `tau_cmp`, i.e. floating point picked the
    side.
    """

    relation: Relation
    forward_violations: tuple[int, ...]
    backward_violations: tuple[int, ...]
    near_tie: bool

    def to_json(self) -> dict:
        return {
            "relation": self.relation.value,
            "forward_violations": list(self.forward_violations),
            "backward_violations": list(self.backward_violations),
            "near_tie": self.near_tie,
        }


def _prefix_diff(a, b, tol):
    """Shared core: prefix sums of both spectra up to the common horizon.

    Returns (diff, slack, structural) where diff[k-1] = prefix_k(a) -
    prefix_k(b), slack is the comparison allowance (tau_cmp, widened by the
    tail residual bound when a tail is present), and structural marks the
    indices where both spectra have already exhausted their mass, so a tie
    there is forced by normalization rather than decided by floating point.
    """
    k = comparison_horizon(a, b, tol)
    pa = prefix_sums(a, k)
    pb = prefix_sums(b, k)
    slack = tol.tau_cmp
    if a.tail is not None or b.tail is not None:
        slack += a.residual_after(k) + b.residual_after(k)
    structural = (pa >= a.total_mass() - tol.tau_cmp) & (
        pb >= b.total_mass() - tol.tau_cmp
    )
    return pa - pb, slack, structural


def majorized_by(
    a: SchmidtSpectrum,
    b: SchmidtSpectrum,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> bool:
    """True when `a` is majorized by `b`: the state of `a` converts to `b`'s.

    Shorter spectra are padded with zeros; tailed spectra are compared up to
    the horizon where both residuals are below `tau_cmp` (inequalities past
    that point hold automatically within the widened slack).
    """
    diff, slack, _ = _prefix_diff(a, b, tol)
    return bool((diff <= slack).all())


def compare(
    a: SchmidtSpectrum,
    b: SchmidtSpectrum,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> ComparisonVerdict:
    """Classify the pair as forward/backward convertible, equivalent, or
    incomparable, with the complete list of violated prefix indices."""
    diff, slack, structural = _prefix_diff(a, b, tol)
    forward = np.flatnonzero(diff > slack) + 1
    backward = np.flatnonzero(-diff > slack) + 1
    near = bool(((np.abs(diff) <= tol.tau_cmp) & ~structural).any())
    if len(forward) == 0 and len(backward) == 0:
        relation = Relation.EQUIVALENT
    elif len(forward) == 0:
        relation = Relation.FORWARD
    elif len(backward) == 0:
        relation = Relation.BACKWARD
    else:
        relation = Relation.INCOMPARABLE
    return ComparisonVerdict(
        relation,
        tuple(int(k) for k in forward),
        tuple(int(k) for k in backward),
        near,
    )
