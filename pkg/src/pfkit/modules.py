"""Module census for the code extension of a tensor power of parafermion
algebras.

Labels are ell-tuples of parafermion labels; codewords act factorwise by
simple-current fusion.  The census computes orbits with stabilizers, the
linear character each orbit induces on the code (recorded as a coset modulo
the dual code), induced-module decompositions with exact multiplicities,
per-character counts of irreducible twisted modules, realization cosets
inside the ambient dual lattice, and -- when the extension is a
superalgebra -- the pairing-up of even-part modules with a three-valued
verdict: Fused, Split, or Indeterminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator

from .cosets import ProductCoset, dual_membership
from .errors import (
    CapExceededError,
    InvalidInputError,
    PfkitError,
    VerificationError,
)
from .parafermion import (
    PfLabel,
    all_labels,
    irr_count,
    pf_weight,
    sc_fuse,
)
from .zkcodes import (
    Case,
    Code,
    Codeword,
    binary_reduce,
    check_word,
    code_from_words,
    dual_code,
    radical_data,
    word_add,
)

DEFAULT_ORBIT_CAP = 10**7


@dataclass(frozen=True, order=True)
class IrrLabel:
    """A module label of the ell-fold tensor algebra: one factor per slot."""

    k: int
    factors: tuple[PfLabel, ...]

    @property
    def ell(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)


def _check_shape(k: int, ell: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise InvalidInputError(f"level must be an integer >= 2, got {k!r}")
    if not isinstance(ell, int) or ell < 1:
        raise InvalidInputError(f"length must be an integer >= 1, got {ell!r}")


def iter_irr_labels(k: int, ell: int) -> Iterator[IrrLabel]:
    """All labels in lexicographic order, streamed."""
    _check_shape(k, ell)
    for factors in product(all_labels(k), repeat=ell):
        yield IrrLabel(k, factors)


def all_irr_labels(k: int, ell: int, cap: int = DEFAULT_ORBIT_CAP) -> tuple[IrrLabel, ...]:
    _check_shape(k, ell)
    total = irr_count(k) ** ell
    if total > cap:
        raise CapExceededError(
            f"{total} labels exceed the cap of {cap}"
        )
    return tuple(iter_irr_labels(k, ell))


def tensor_weight(x: IrrLabel) -> Fraction:
    """Conformal weight of a tensor label: the sum over factors."""
    return sum(
        (pf_weight(f.k, f.i, f.j) for f in x.factors), Fraction(0)
    )


def sc_ext_weight(k: int, xi: Codeword) -> Fraction:
    """Conformal weight of the simple current attached to a codeword:
    sum(xi_r) - (xi|xi)/k with entries as residues in [0, k)."""
    xi = check_word(xi, k, len(xi))
    return sum(xi) - Fraction(sum(x * x for x in xi), k)


def fuse(xi: Codeword, x: IrrLabel) -> IrrLabel:
    """Factorwise simple-current fusion of a codeword with a label."""
    if len(xi) != x.ell:
        raise InvalidInputError(
            f"codeword length {len(xi)} != label length {x.ell}"
        )
    return IrrLabel(x.k, tuple(sc_fuse(p, f) for p, f in zip(xi, x.factors)))


def b_ext(xi: Codeword, x: IrrLabel) -> Fraction:
    """Fractional monodromy of the codeword current against the label:
    (xi | mu - 2 nu)/k mod 1, in [0, 1)."""
    if len(xi) != x.ell:
        raise InvalidInputError(
            f"codeword length {len(xi)} != label length {x.ell}"
        )
    k = x.k
    t = sum(p * (f.i - 2 * f.j) for p, f in zip(xi, x.factors))
    return Fraction(t % k, k)


@lru_cache(maxsize=None)
def _dual_words(code: Code) -> tuple[Codeword, ...]:
    return dual_code(code).words


@dataclass(frozen=True, order=True)
class Character:
    """A linear character of the code, stored as the lexicographically
    smallest member of its coset modulo the dual code."""

    k: int
    rep: Codeword

    @property
    def trivial(self) -> bool:
        return not any(self.rep)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.rep)


def character_of(x: IrrLabel, code: Code) -> Character:
    """The character by which the code acts on the orbit of x, i.e. the
    coset of (mu - 2 nu) modulo the dual code."""
    k = code.k
    if x.k != k or x.ell != code.ell:
        raise InvalidInputError("label shape does not match the code")
    t = tuple((f.i - 2 * f.j) % k for f in x.factors)
    rep = min(word_add(t, w, k) for w in _dual_words(code))
    return Character(k, rep)


def _as_character(code: Code, chi) -> Character:
    if isinstance(chi, Character):
        word = chi.rep
    else:
        word = tuple(int(c) % code.k for c in chi)
    word = check_word(word, code.k, code.ell)
    rep = min(word_add(word, w, code.k) for w in _dual_words(code))
    return Character(code.k, rep)


def stabilizer(x: IrrLabel, code: Code) -> tuple[Codeword, ...]:
    """Codewords fixing the label under fusion.

    Computed directly, then checked against the closed criterion: a nonzero
    word fixes x exactly when k is even, every entry is 0 or k/2, and every
    k/2 entry sits on a factor with first index k/2.  Disagreement raises
    VerificationError.
    """
    direct = tuple(xi for xi in code.words if fuse(xi, x) == x)
    k = code.k
    if k % 2 == 0:
        half = k // 2
        criterion = tuple(
            xi
            for xi in code.words
            if all(p in (0, half) for p in xi)
            and all(
                f.i == half for p, f in zip(xi, x.factors) if p == half
            )
        )
    else:
        criterion = ((0,) * code.ell,)
    if direct != criterion:
        raise VerificationError(
            f"stabilizer criterion disagrees with direct fusion at {x}"
        )
    return direct


@dataclass(frozen=True)
class OrbitRecord:
    """One fusion orbit: sorted members, stabilizer, character, and the
    minimum constituent weight (a lower bound for any twisted grading)."""

    members: tuple[IrrLabel, ...]
    stabilizer: tuple[Codeword, ...]
    character: Character
    min_weight: Fraction

    @property
    def representative(self) -> IrrLabel:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)


def iter_orbits(code: Code) -> Iterator[OrbitRecord]:
    """Stream the fusion orbits in order of their smallest member.

    Memory stays O(orbit size): each label is visited once and the orbit is
    emitted only from its lexicographically smallest member.
    """
    for x in iter_irr_labels(code.k, code.ell):
        members = sorted({fuse(xi, x) for xi in code.words})
        if members[0] != x:
            continue
        yield OrbitRecord(
            tuple(members),
            stabilizer(x, code),
            character_of(x, code),
            min(tensor_weight(y) for y in members),
        )


def orbits(code: Code, cap: int = DEFAULT_ORBIT_CAP) -> tuple[OrbitRecord, ...]:
    """All fusion orbits; raises CapExceededError when the label space
    exceeds the cap."""
    total = irr_count(code.k) ** code.ell
    if total > cap:
        raise CapExceededError(
            f"label space of size {total} exceeds the cap of {cap}"
        )
    return tuple(iter_orbits(code))


class Regime(Enum):
    """How an orbit induces: freely, or at a fixed point (two flavors)."""

    FREE = "FreeOrbit"
    FIXED_K0MOD4 = "Fixed_k0mod4"
    FIXED_K2MOD4 = "Fixed_k2mod4"


@dataclass(frozen=True)
class InducedReport:
    """Decomposition of the module induced from one orbit.

    The induced module splits into `num_irreducibles` inequivalent
    irreducibles; each contains every orbit member with multiplicity
    `multiplicity`, listed in `constituents`.
    """

    orbit: OrbitRecord
    regime: Regime
    num_irreducibles: int
    multiplicity: int
    constituents: tuple[tuple[IrrLabel, int], ...]


def induced_decomposition(orbit: OrbitRecord, code: Code) -> InducedReport:
    """Split the induced module of an orbit into irreducibles.

    Free orbits induce irreducibly.  At a fixed point the count depends on
    the level mod 4: for k = 0 (mod 4) the stabilizer order counts the
    summands with multiplicity one; for k = 2 (mod 4) the stabilizer reduces
    to a binary code whose radical order counts the summands and the square
    root of the radical index is the common multiplicity.
    """
    stab = orbit.stabilizer
    if len(stab) == 1:
        regime, num, mult = Regime.FREE, 1, 1
    else:
        if code.k % 2:
            raise PfkitError(
                "internal inconsistency: nontrivial stabilizer at odd level"
            )
        if code.k % 4 == 0:
            regime, num, mult = Regime.FIXED_K0MOD4, len(stab), 1
        else:
            regime = Regime.FIXED_K2MOD4
            num, mult = radical_data(binary_reduce(stab, code.k))
    constituents = tuple((y, mult) for y in orbit.members)
    return InducedReport(orbit, regime, num, mult, constituents)


def count_twisted(code: Code, chi, orbit_list=None, cap: int = DEFAULT_ORBIT_CAP) -> int:
    """Number of inequivalent irreducible chi-twisted modules of the
    extension, for a character given as a residue word mod the dual code.

    Sums the per-orbit counts over orbits carrying the character: one for a
    free orbit, the stabilizer order for k = 0 (mod 4), the binary radical
    order for k = 2 (mod 4).  Always at least 1: every character is
    realized by some orbit.
    """
    chi = _as_character(code, chi)
    if orbit_list is None:
        orbit_list = orbits(code, cap)
    total = 0
    for orb in orbit_list:
        if orb.character != chi:
            continue
        total += induced_decomposition(orb, code).num_irreducibles
    return total


def characters(code: Code, orbit_list=None, cap: int = DEFAULT_ORBIT_CAP) -> tuple[Character, ...]:
    """The distinct characters realized by orbits, sorted; there are
    exactly |D| of them."""
    if orbit_list is None:
        orbit_list = orbits(code, cap)
    out = tuple(sorted({orb.character for orb in orbit_list}))
    if len(out) != code.size:
        raise VerificationError(
            f"{len(out)} characters realized, expected {code.size}"
        )
    return out


def realize(x: IrrLabel, code: Code) -> tuple[ProductCoset, bool]:
    """A dual coset containing the label, and whether that coset pairs
    integrally with the whole code lattice.

    Factorwise: the lexicographically smallest representative (i, j) of the
    factor class fixes the tail bit d = i mod 2 and the shift
    eta = j - (i - d)/2.  The membership flag equals the triviality of the
    orbit character.
    """
    if x.k != code.k or x.ell != code.ell:
        raise InvalidInputError("label shape does not match the code")
    eta = []
    delta = []
    for f in x.factors:
        i, j = min({(f.i, f.j), (f.k - f.i, (f.j - f.i) % f.k)})
        d = i % 2
        eta.append((j - (i - d) // 2) % f.k)
        delta.append(d)
    coset = ProductCoset.from_tail(code.k, tuple(eta), tuple(delta))
    return coset, dual_membership(tuple(eta), tuple(delta), code)


class Verdict(Enum):
    """How a pair of even-part modules assembles for the superalgebra."""

    FUSED = "Fused"
    SPLIT = "Split"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class CaseBRecord:
    """One even-part orbit pair with its superalgebra verdict."""

    pair: tuple[IrrLabel, IrrLabel]
    induced: InducedReport
    verdict: Verdict


def even_part_code(code: Code) -> Code:
    """The even part of a half-period code, as a code in its own right."""
    if code.case is not Case.B:
        raise InvalidInputError(
            "even-part analysis needs a half-period (Case B) code"
        )
    even = code_from_words(code.k, code.ell, code.even_part)
    if even.case is not Case.A:
        raise VerificationError("even part failed to classify as Case A")
    return even


def caseB_modules(code: Code, cap: int = DEFAULT_ORBIT_CAP) -> tuple[CaseBRecord, ...]:
    """Pair up the even-part modules under the odd coset and report verdicts.

    Every irreducible module of the superalgebra restricts to the even part
    as either P + Q with P, Q inequivalent (one module per pair: Fused) or
    as a single P that carries two inequivalent structures (Split).  The
    odd coset maps the orbit of P to the orbit of Q.  Distinct orbits force
    Fused.  Coinciding orbits with trivial stabilizer force Split: the
    induced module is then the unique irreducible with those constituents.
    Coinciding orbits at a fixed point cannot be decided at label level and
    are reported Indeterminate.

    Only trivial-character orbits are processed: those are the ones carrying
    untwisted even-part modules.  Each unordered pair appears once.
    """
    even = even_part_code(code)
    odd_rep = min(code.odd_part)
    out = []
    for orb in orbits(even, cap):
        if not orb.character.trivial:
            continue
        mate = min(fuse(odd_rep, y) for y in orb.members)
        if mate < orb.representative:
            continue
        if mate != orb.representative:
            verdict = Verdict.FUSED
        elif len(orb.stabilizer) == 1:
            verdict = Verdict.SPLIT
        else:
            verdict = Verdict.INDETERMINATE
        out.append(
            CaseBRecord(
                (orb.representative, mate),
                induced_decomposition(orb, even),
                verdict,
            )
        )
    return tuple(out)
