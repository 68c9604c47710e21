"""Branching data: minimal-model weights and the splitting of coset modules.

A coset module of the rank-(k-1) base lattice decomposes over a chain of
k - 1 Virasoro minimal models times the parafermion algebra.  The m-th
minimal model has central charge c_m = 1 - 6/((m+2)(m+3)) and highest
weights

    h^m_{r,s} = ((r(m+3) - s(m+2))^2 - 1) / (4(m+2)(m+3)),

1 <= r <= m+1, 1 <= s <= m+2, with the Kac symmetry
(r, s) ~ (m+2-r, m+3-s).  The coset labeled (j, bits) splits into
components indexed by integer tuples (i_1, ..., i_k) with 0 <= i_s <= s and
i_s = b_s (mod 2), b_s the partial bit sum; the component carries Virasoro
weights h^s_{i_s+1, i_{s+1}+1} for s < k and the parafermion label
(i_k, j + (i_k - b_k)/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import CapExceededError, InvalidInputError
from .parafermion import PfLabel, pf_canonicalize, pf_weight

BRANCH_MAX_LEVEL = 10


@dataclass(frozen=True, order=True)
class VirasoroLabel:
    """Canonical Kac label 1 <= s <= r <= m+1; construct via vir_canonicalize."""

    m: int
    r: int
    s: int

    @property
    def weight(self) -> Fraction:
        return vir_h(self.m, self.r, self.s)


def _check_kac(m: int, r: int, s: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise InvalidInputError(f"minimal-model index must be >= 1, got {m!r}")
    if not 1 <= r <= m + 1:
        raise InvalidInputError(f"row must lie in [1, {m + 1}], got {r}")
    if not 1 <= s <= m + 2:
        raise InvalidInputError(f"column must lie in [1, {m + 2}], got {s}")


def vir_c(m: int) -> Fraction:
    """Central charge of the m-th unitary minimal model."""
    if not isinstance(m, int) or m < 1:
        raise InvalidInputError(f"minimal-model index must be >= 1, got {m!r}")
    return 1 - Fraction(6, (m + 2) * (m + 3))


@lru_cache(maxsize=None)
def vir_h(m: int, r: int, s: int) -> Fraction:
    """Kac-table highest weight h^m_{r,s}; exact."""
    _check_kac(m, r, s)
    return Fraction((r * (m + 3) - s * (m + 2)) ** 2 - 1, 4 * (m + 2) * (m + 3))


def vir_canonicalize(m: int, r: int, s: int) -> VirasoroLabel:
    """Fold the Kac symmetry so that 1 <= s <= r <= m + 1."""
    _check_kac(m, r, s)
    if s <= r:
        return VirasoroLabel(m, r, s)
    return VirasoroLabel(m, m + 2 - r, m + 3 - s)


@dataclass(frozen=True)
class BranchComponent:
    """One summand of a coset-module decomposition.

    `indices` keeps the raw tuple (i_1, ..., i_k); `virasoro` holds the
    canonicalized Kac labels of the k - 1 minimal-model factors.
    """

    indices: tuple[int, ...]
    virasoro: tuple[VirasoroLabel, ...]
    pf: PfLabel
    weight: Fraction


def branch(k: int, j: int, bits) -> tuple[BranchComponent, ...]:
    """All components of the coset module labeled (j, bits).

    Deterministic lexicographic order in the index tuples.  Capped at
    rank 10; the component count grows like prod(s/2).
    """
    if not isinstance(k, int) or k < 2:
        raise InvalidInputError(f"rank must be an integer >= 2, got {k!r}")
    if k > BRANCH_MAX_LEVEL:
        raise CapExceededError(
            f"branching is capped at rank {BRANCH_MAX_LEVEL}, got {k}"
        )
    bits = tuple(bits)
    if len(bits) != k or any(b not in (0, 1) for b in bits):
        raise InvalidInputError(f"expected {k} bits of 0/1, got {bits}")
    partial = []
    total = 0
    for b in bits:
        total += b
        partial.append(total)
    choices = [
        [i for i in range(s + 1) if i % 2 == partial[s - 1] % 2]
        for s in range(1, k + 1)
    ]
    out = []
    for tup in product(*choices):
        vir = tuple(
            vir_canonicalize(s, tup[s - 1] + 1, tup[s] + 1)
            for s in range(1, k)
        )
        hsum = sum(
            (vir_h(s, tup[s - 1] + 1, tup[s] + 1) for s in range(1, k)),
            Fraction(0),
        )
        pf = pf_canonicalize(k, tup[-1], j + (tup[-1] - partial[-1]) // 2)
        weight = hsum + pf_weight(k, pf.i, pf.j)
        out.append(BranchComponent(tup, vir, pf, weight))
    return tuple(out)


def branch_tail(k: int, j: int, d: int) -> tuple[tuple[VirasoroLabel, PfLabel], ...]:
    """Last-factor specialization: components of the coset (j, (0,...,0,d))
    visible as pairs (h^{k-1}_{1, i+1}, parafermion (i, j + (i-d)/2)) over
    i = d (mod 2), 0 <= i <= k.  No rank cap; the list has ~k/2 entries."""
    if not isinstance(k, int) or k < 2:
        raise InvalidInputError(f"rank must be an integer >= 2, got {k!r}")
    if d not in (0, 1):
        raise InvalidInputError(f"tail bit must be 0 or 1, got {d}")
    return tuple(
        (
            vir_canonicalize(k - 1, 1, i + 1),
            pf_canonicalize(k, i, j + (i - d) // 2),
        )
        for i in range(k + 1)
        if i % 2 == d
    )


def locate_pf(x: PfLabel, d: int) -> int:
    """The shift eta such that x occurs in the coset (eta, (0,...,0,d)).

    Uses the lexicographically smallest representative of the class of x
    whose first index matches the parity of d; when k is even and no
    representative matches, the parity obstruction is reported as an error.
    """
    if d not in (0, 1):
        raise InvalidInputError(f"tail bit must be 0 or 1, got {d}")
    k = x.k
    for i, j in sorted({(x.i, x.j), (k - x.i, (x.j - x.i) % k)}):
        if i % 2 == d:
            eta = (j - (i - d) // 2) % k
            assert any(pf == x for _, pf in branch_tail(k, eta, d))
            return eta
    raise InvalidInputError(
        f"no representative of {x} matches tail parity {d} at even rank {k}"
    )
