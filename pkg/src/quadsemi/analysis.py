"""Dimension counting for quadratic semigroup algebras.

The algebra's degree-m piece has the nonzero coset classes of degree-m
words as a basis, so its dimension is the number of minimal monomials of
that degree.  Profiles are computed against the full ideal; the sequence of
dimensions hitting zero at degree m gives nilpotency index m (the first
vanishing power of the augmentation part).
"""

from __future__ import annotations

import io
import csv
from dataclasses import dataclass

from .engine import (
    DEFAULT_LIMITS,
    EngineLimits,
    MinimalBasis,
    ResourceExhausted,
    initial_basis,
    next_minimal_basis,
)
from .model import IdealMode, Presentation


@dataclass(frozen=True)
class HilbertProfile:
    """Graded dimensions dims[m] for m = 0..len-1, starting at dims[0] = 1.

    Exactly one of three endings:

      nilpotency_index set    dims ends with a 0 at that degree
      truncated_at set        the degree cap stopped the run, tail unknown
      exhausted set           a class walk blew the size cap at that degree
    """

    n: int
    mode: IdealMode
    dims: tuple
    nilpotency_index: int | None = None
    truncated_at: int | None = None
    exhausted: int | None = None

    @property
    def verdict(self) -> str:
        if self.nilpotency_index is not None:
            return f"finite:{self.nilpotency_index}"
        if self.exhausted is not None:
            return f"inconclusive:{self.exhausted}"
        return f"open:{self.truncated_at}"


def hilbert_profile(p: Presentation, max_degree: int | None = None,
                    mode: IdealMode = IdealMode.FULL,
                    limits: EngineLimits = DEFAULT_LIMITS) -> HilbertProfile:
    """Dimensions degree by degree until they vanish or a cap interferes.

    Works for any presentation the engine accepts, not only QHS ones.
    """
    cap = limits.max_degree if max_degree is None else max_degree
    if cap < 0:
        raise ValueError("max_degree must be nonnegative")
    n = p.alphabet.n
    dims = [1]
    if cap == 0:
        return HilbertProfile(n, mode, (1,), truncated_at=0)
    basis = initial_basis(p, mode)
    dims.append(len(basis.minimals))
    degree = 1
    if dims[-1] == 0:
        return HilbertProfile(n, mode, tuple(dims), nilpotency_index=1)
    while degree < cap:
        try:
            basis = next_minimal_basis(basis, p, mode, limits)
        except ResourceExhausted:
            return HilbertProfile(n, mode, tuple(dims), exhausted=degree + 1)
        degree += 1
        dims.append(len(basis.minimals))
        if dims[-1] == 0:
            return HilbertProfile(n, mode, tuple(dims), nilpotency_index=degree)
    return HilbertProfile(n, mode, tuple(dims), truncated_at=cap)


def total_dimension(profile: HilbertProfile) -> int | None:
    """Sum of all graded dimensions, or None when the profile never hit zero."""
    if profile.nilpotency_index is None:
        return None
    return sum(profile.dims)


@dataclass(frozen=True)
class Dim3Report:
    """Degree-3 dimension next to the generic lower bound n^3 - 2*d*n.

    d is the relation count.  A dimension under the bound would certify a
    non-generic (in particular non-Golod-Shafarevich) presentation; the
    report only states the comparison, it draws no further conclusion.
    """

    n: int
    relation_count: int
    dim3: int
    gs_value: int

    @property
    def below_bound(self) -> bool:
        # True when n^3 - 2dn undershoots the observed degree-3 dimension
        return self.gs_value < self.dim3


def dim3_report(p: Presentation,
                limits: EngineLimits = DEFAULT_LIMITS) -> Dim3Report:
    profile = hilbert_profile(p, max_degree=3, mode=IdealMode.FULL, limits=limits)
    if len(profile.dims) < 4:
        if profile.nilpotency_index is None:
            raise ResourceExhausted("degree-3 dimension did not complete")
        dim3 = 0  # dimension vanished before degree 3 and stays zero
    else:
        dim3 = profile.dims[3]
    n = p.alphabet.n
    d = len(p.relations)
    return Dim3Report(n, d, dim3, n ** 3 - 2 * d * n)


def profile_to_json(profile: HilbertProfile) -> dict:
    return {
        "n": profile.n,
        "mode": profile.mode.value,
        "dims": list(profile.dims),
        "nilpotency_index": profile.nilpotency_index,
        "truncated_at": profile.truncated_at,
        "exhausted": profile.exhausted,
        "verdict": profile.verdict,
    }


def profile_to_csv(profile: HilbertProfile) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["degree", "dimension"])
    for m, dim in enumerate(profile.dims):
        writer.writerow([m, dim])
    return buf.getvalue()
