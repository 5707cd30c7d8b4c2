"""Branching multiplicities along the three chains

    O(2) > S(3) > C_3,   O(3) > S(4) > C_4,   O(4) > S(5) > C_5.

Each multiplicity is a weighted character inner product, rounded from a
float that must sit within ROUND_TOL of an integer; anything else raises
ConsistencyError.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .permgroup import (
    ConsistencyError,
    CycleType,
    Partition,
    Permutation,
    character,
    trivial_multiplicity,
)
from .su2wigner import chebyshev_u
from .weylaction import CLASS_ORDER_S5, class_operators, operator_character
from .youngrep import primed_rep_matrix

ROUND_TOL = 1e-6  # still resolves integers at 2j = 200


def _round_int(value: float, what: str) -> int:
    out = round(value)
    if abs(value - out) > ROUND_TOL:
        raise ConsistencyError(f"{what} = {value} is not an integer")
    return int(out)


# ---------------------------------------------------------------- O(2) chain

@dataclass(frozen=True)
class O2Label:
    """Irreducible representation label of O(2): |angular index| m, and for
    m > 0 the reflection symmetry epsilon of the symmetrized Fourier pair."""

    m: int
    epsilon: int | None = None

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError("m must be non-negative")
        if self.m == 0 and self.epsilon is not None:
            raise ValueError("epsilon is undefined for m = 0")
        if self.m > 0 and self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1 for m > 0")

    @property
    def nu(self) -> int:
        return self.m % 3


def o2_reduce(label: O2Label) -> tuple[Partition, int]:
    """S(3) partition carried by an O(2) label, and the number of times the
    trivial C_3 representation occurs in it (the selection rule)."""
    if label.m == 0:
        return Partition.of(3), 1
    if label.nu == 0:
        if label.epsilon == 1:
            return Partition.of(3), 1
        return Partition.of(1, 1, 1), 1
    return Partition.of(2, 1), 0


# ---------------------------------------------------------------- O(3) chain

@dataclass(frozen=True)
class O3Label:
    """Irreducible representation label (l, kappa) of O(3) = SO(3) x {1, P}."""

    l: int
    kappa: int

    def __post_init__(self) -> None:
        if self.l < 0:
            raise ValueError("l must be non-negative")
        if self.kappa not in (1, -1):
            raise ValueError("kappa must be +1 or -1")


S4_PARTITION_ORDER = tuple(
    Partition(p) for p in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
)

_S4_CLASS_STRINGS = {
    (1, 1, 1, 1): [],
    (2, 1, 1): [(1, 2)],
    (2, 2): [(1, 2), (3, 4)],
    (3, 1): [(1, 2), (2, 3)],
    (4,): [(1, 2), (2, 3), (3, 4)],
}


@lru_cache(maxsize=None)
def _s4_class_data() -> list[tuple[CycleType, float, int]]:
    """(class, rotation half-angle, parity) for the five classes of S(4),
    read off the 3x3 tetrahedral-axis matrices.  Odd permutations are
    improper; factoring out the central inversion leaves a rotation whose
    angle enters the character with the parity sign kappa."""
    out = []
    for parts, cycles in _S4_CLASS_STRINGS.items():
        p = Permutation.from_cycles(4, cycles)
        k = p.cycle_type()
        assert k.parts == parts
        mat = primed_rep_matrix(Partition.of(3, 1), p).matrix
        parity = p.parity()
        rot = -mat if parity else mat
        cos_phi = min(1.0, max(-1.0, (rot.trace() - 1.0) / 2.0))
        out.append((k, math.acos(cos_phi) / 2.0, parity))
    return out


def _chi_o3(label: O3Label, phi_half: float, parity: int) -> float:
    value = chebyshev_u(2 * label.l, math.cos(phi_half))
    return label.kappa * value if parity else value


def multiplicity_o3_s4(label: O3Label, f: Partition) -> int:
    """Number of times S(4) partition f occurs in the restriction of the
    O(3) representation (l, kappa), from first principles."""
    if f.n != 4:
        raise ValueError(f"expected a partition of 4, got {f}")
    total = 0.0
    for k, phi_half, parity in _s4_class_data():
        total += k.class_size * _chi_o3(label, phi_half, parity) * character(f, k)
    return _round_int(total / 24.0, f"m(({label.l},{label.kappa}),{f})")


# ---------------------------------------------------------------- O(4) chain

S5_PARTITION_ORDER = tuple(
    Partition(p)
    for p in [
        (5,),
        (1, 1, 1, 1, 1),
        (4, 1),
        (2, 1, 1, 1),
        (3, 2),
        (2, 2, 1),
        (3, 1, 1),
    ]
)


@lru_cache(maxsize=None)
def _branch_weights_s5() -> dict[Partition, int]:
    return {f: trivial_multiplicity(f) for f in S5_PARTITION_ORDER}


def _chi_o4(two_j: int) -> list[tuple[CycleType, float]]:
    ops = class_operators()
    j = Fraction(two_j, 2)
    return [(k, operator_character(j, ops[k])) for k in CLASS_ORDER_S5]


def multiplicity_o4_s5(two_j: int, f: Partition) -> int:
    """Number of times S(5) partition f occurs in the restriction of the
    degree-2j harmonic representation of O(4)."""
    if f.n != 5:
        raise ValueError(f"expected a partition of 5, got {f}")
    if two_j < 0:
        raise ValueError("two_j must be non-negative")
    total = 0.0
    for k, chi in _chi_o4(two_j):
        total += k.class_size * chi * character(f, k)
    return _round_int(total / 120.0, f"m((j,j),{f}) at 2j={two_j}")


def periodic_count_o4(two_j: int) -> int:
    """Number of C_5-periodic modes of degree 2j: the branch-weighted sum
    of the partition multiplicities."""
    weights = _branch_weights_s5()
    return sum(
        multiplicity_o4_s5(two_j, f) * w for f, w in weights.items() if w
    )


# ------------------------------------------------------------------- tables

@dataclass(frozen=True)
class MultiplicityTable:
    """Reduction table for one chain: entries[i][j] is the multiplicity of
    partitions[j] in the representation labelled row_labels[i]; `periodic`
    counts the cyclic-invariant modes per row, `totals` per partition."""

    chain: str
    row_labels: tuple[str, ...]
    partitions: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]
    periodic: tuple[int, ...]
    totals: tuple[int, ...] | None = None
    grand_total: int | None = None


def o2_multiplicity_table(m_max: int) -> MultiplicityTable:
    """Reduction rows for O(2) labels with m <= m_max."""
    parts = tuple(Partition(p) for p in [(3,), (2, 1), (1, 1, 1)])
    labels: list[str] = []
    entries = []
    periodic = []
    rows: list[O2Label] = [O2Label(0)]
    for m in range(1, m_max + 1):
        rows += [O2Label(m, 1), O2Label(m, -1)]
    for lab in rows:
        f, m0 = o2_reduce(lab)
        if lab.m == 0:
            labels.append("m=0")
        else:
            labels.append(f"m={lab.m},eps={'+' if lab.epsilon == 1 else '-'}")
        entries.append(tuple(1 if f == g else 0 for g in parts))
        periodic.append(m0)
    return MultiplicityTable(
        "o2s3c3", tuple(labels), parts, tuple(entries), tuple(periodic)
    )


def o3_multiplicity_table(l_max: int) -> MultiplicityTable:
    """Reduction rows for O(3) labels (l, (-1)^l) with l <= l_max; only
    these parities occur on single-valued spherical harmonics."""
    weights = {f: trivial_multiplicity(f) for f in S4_PARTITION_ORDER}
    labels = []
    entries = []
    periodic = []
    for l in range(l_max + 1):
        kappa = 1 if l % 2 == 0 else -1
        lab = O3Label(l, kappa)
        row = tuple(multiplicity_o3_s4(lab, f) for f in S4_PARTITION_ORDER)
        dim_sum = sum(m * f.dimension for m, f in zip(row, S4_PARTITION_ORDER))
        if dim_sum != 2 * l + 1:
            raise ConsistencyError(
                f"dimension audit failed at l={l}: {dim_sum} != {2 * l + 1}"
            )
        labels.append(f"(l={l},kappa={'+' if kappa == 1 else '-'})")
        entries.append(row)
        periodic.append(sum(m * weights[f] for m, f in zip(row, S4_PARTITION_ORDER)))
    return MultiplicityTable(
        "o3s4c4", tuple(labels), S4_PARTITION_ORDER, tuple(entries), tuple(periodic)
    )


def _o4_row(two_j: int) -> tuple[int, ...]:
    return tuple(multiplicity_o4_s5(two_j, f) for f in S5_PARTITION_ORDER)


def o4_multiplicity_table(
    two_j_max: int, max_workers: int | None = None
) -> MultiplicityTable:
    """Reduction table for degrees 2j = 0..two_j_max, with the per-partition
    totals row (periodic modes attributable to each partition) and the
    grand total of periodic modes.

    Rows are independent; with max_workers > 1 they are computed on a
    thread pool and merged back in row order.
    """
    if two_j_max > 200:
        raise ValueError("two_j_max beyond 200 is not supported")
    degrees = range(two_j_max + 1)
    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            entries = tuple(pool.map(_o4_row, degrees))
    else:
        entries = tuple(_o4_row(t) for t in degrees)
    weights = _branch_weights_s5()
    for two_j, row in zip(degrees, entries):
        dim_sum = sum(m * f.dimension for m, f in zip(row, S5_PARTITION_ORDER))
        if dim_sum != (two_j + 1) ** 2:
            raise ConsistencyError(
                f"dimension audit failed at 2j={two_j}: {dim_sum}"
            )
    periodic = tuple(
        sum(m * weights[f] for m, f in zip(row, S5_PARTITION_ORDER))
        for row in entries
    )
    totals = tuple(
        sum(row[i] for row in entries) * weights[f]
        for i, f in enumerate(S5_PARTITION_ORDER)
    )
    return MultiplicityTable(
        "o4s5c5",
        tuple(str(t) for t in degrees),
        S5_PARTITION_ORDER,
        entries,
        periodic,
        totals,
        sum(periodic),
    )


# ---------------------------------------------------------------- recursion

#: classes whose characters repeat with period 60 in 2j
PERIODIC_CLASSES = tuple(
    CycleType(p) for p in [(3, 1, 1), (2, 2, 1), (3, 2), (4, 1), (5,)]
)


@dataclass(frozen=True)
class PartitionRecursion:
    """Measured degree-60 multiplicity increments for one partition,
    compared with the claimed rule delta = 2j + 36."""

    partition: Partition
    samples: tuple[tuple[int, int, int], ...]  # (2j, measured, claimed)

    @property
    def claim_holds(self) -> bool:
        return all(m == c for _, m, c in self.samples)


@dataclass(frozen=True)
class RecursionReport:
    two_j_max: int
    character_period_deviation: dict[str, float] = field(repr=False)
    partitions: tuple[PartitionRecursion, ...] = ()
    dimension_audit_ok: bool = True

    @property
    def characters_periodic(self) -> bool:
        return max(self.character_period_deviation.values()) < 1e-8


def recursion_report(two_j_max: int) -> RecursionReport:
    """Verify the period-60 character identity for the five eligible
    classes and measure the actual degree-60 increment of every partition
    multiplicity, rather than assuming the claimed closed form."""
    if two_j_max < 60:
        raise ValueError("need two_j_max >= 60 to compare degrees 2j and 2j+60")
    ops = class_operators()
    deviations: dict[str, float] = {}
    for k in PERIODIC_CLASSES:
        dev = 0.0
        for t in range(two_j_max - 60 + 1):
            a = operator_character(Fraction(t, 2), ops[k])
            b = operator_character(Fraction(t + 60, 2), ops[k])
            dev = max(dev, abs(a - b))
        deviations[str(k)] = dev
    partitions = []
    for f in S5_PARTITION_ORDER:
        samples = []
        for t in range(two_j_max - 60 + 1):
            measured = multiplicity_o4_s5(t + 60, f) - multiplicity_o4_s5(t, f)
            samples.append((t, measured, t + 36))
        partitions.append(PartitionRecursion(f, tuple(samples)))
    audit_ok = all(
        sum(multiplicity_o4_s5(t, f) * f.dimension for f in S5_PARTITION_ORDER)
        == (t + 1) ** 2
        for t in range(two_j_max + 1)
    )
    return RecursionReport(two_j_max, deviations, tuple(partitions), audit_ok)
