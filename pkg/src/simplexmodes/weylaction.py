"""The O(4) action on the 3-sphere in factored form.

S(5) acts on S^3 through Weyl reflections; every element is either a
rotation pair (g_l, g_r) acting as u -> g_l^{-1} u g_r, or such a pair
followed by the base reflection u -> -u^dagger.  Operators multiply in
written order, the left factor acting on points first, which matches
both the permutation convention of `permgroup` and the reflection-string
factorizations used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .permgroup import CycleType, Permutation
from .su2wigner import (
    Point4,
    Q_ELEMENT,
    SU2Element,
    _as_two_j,
    half_angle,
    su2_character,
    su2_from_point,
    wigner_d,
)


@dataclass(frozen=True)
class WeylVector:
    """Unit reflection vector a together with its coordinate image v."""

    a: Point4
    v: SU2Element

    @classmethod
    def from_point(cls, a: Point4) -> WeylVector:
        return cls(a, su2_from_point(a))


@dataclass(frozen=True)
class GroupOperator:
    """Element of O(4) in factored form; `reflective` marks a trailing
    base-reflection factor."""

    g_l: SU2Element
    g_r: SU2Element
    reflective: bool

    @classmethod
    def identity(cls) -> GroupOperator:
        return cls(SU2Element.identity(), SU2Element.identity(), False)


def weyl_vectors_s5() -> list[WeylVector]:
    """The four reflection vectors realizing the generators (i, i+1) of S(5);
    adjacent vectors meet at 60 degrees, all others are orthogonal."""
    points = [
        Point4(0.0, 0.0, 0.0, 1.0),
        Point4(0.0, 0.0, math.sqrt(3.0 / 4.0), 0.5),
        Point4(0.0, math.sqrt(2.0 / 3.0), math.sqrt(1.0 / 3.0), 0.0),
        Point4(math.sqrt(5.0 / 8.0), math.sqrt(3.0 / 8.0), 0.0, 0.0),
    ]
    return [WeylVector.from_point(p) for p in points]


def reflection_operator(a: WeylVector) -> GroupOperator:
    """The Weyl reflection about a, factored as a rotation pair followed by
    the base reflection."""
    return GroupOperator(a.v, a.v.inverse(), True)


def compose(s: GroupOperator, t: GroupOperator) -> GroupOperator:
    """Written-order product s*t (s acts on points first).

    Moving the trailing base reflection of s through t swaps t's rotation
    pair; two base reflections cancel.
    """
    if s.reflective:
        g_l, g_r = s.g_l * t.g_r, s.g_r * t.g_l
    else:
        g_l, g_r = s.g_l * t.g_l, s.g_r * t.g_r
    return GroupOperator(g_l, g_r, s.reflective != t.reflective)


@lru_cache(maxsize=None)
def _reflection_ops() -> tuple[GroupOperator, ...]:
    return tuple(reflection_operator(w) for w in weyl_vectors_s5())


def permutation_operator(p: Permutation) -> GroupOperator:
    """Operator for a permutation of S(5): factor into adjacent
    transpositions, map each to its reflection operator, compose."""
    if p.n != 5:
        raise ValueError(f"permutation_operator needs S(5), got S({p.n})")
    ops = _reflection_ops()
    out = GroupOperator.identity()
    for i in p.adjacent_factors():
        out = compose(out, ops[i - 1])
    return out


def act_on_point(op: GroupOperator, u: SU2Element) -> SU2Element:
    """Image of a point of S^3 under the operator.

    A rotation pair sends u to g_l^{-1} u g_r.  For a reflective operator
    the rotation acts first and the base reflection afterwards, i.e.
    -(g_l^{-1} u g_r)^dagger = g_r^{-1} (-u^dagger) g_l, which is what makes
    reflection_operator(a) act as the Weyl reflection about a.
    """
    if op.reflective:
        return op.g_r.inverse() * u.minus_dagger() * op.g_l
    return op.g_l.inverse() * u * op.g_r


def operator_character(j: float | int | Fraction, op: GroupOperator) -> float:
    """Trace of the operator on the degree-2j harmonic space: the product
    chi^j(g_l^{-1}) chi^j(g_r) for rotations, chi^j(g_r g_l) otherwise."""
    if op.reflective:
        return su2_character(j, op.g_r * op.g_l)
    return su2_character(j, op.g_l.inverse()) * su2_character(j, op.g_r)


def operator_matrix(j: float | int | Fraction, op: GroupOperator) -> np.ndarray:
    """Matrix of the operator on the (2j+1)^2 harmonics D^j_{m1 m2}, with
    the pair (m1, m2) flattened row-major and m ascending."""
    two_j = _as_two_j(j)
    dim = two_j + 1
    if not op.reflective:
        left = wigner_d(j, op.g_l.inverse()).matrix
        right = wigner_d(j, op.g_r).matrix
        return np.kron(left.T, right)
    cmat = wigner_d(j, Q_ELEMENT.inverse() * op.g_l.inverse()).matrix
    emat = wigner_d(j, op.g_r * Q_ELEMENT).matrix
    out = np.einsum("ba,cd->acdb", cmat, emat).reshape(dim * dim, dim * dim)
    return (-1.0) ** two_j * out


#: cycle types of S(5) in the row order of the embedded character table
CLASS_ORDER_S5: tuple[CycleType, ...] = tuple(
    CycleType(parts)
    for parts in [
        (1, 1, 1, 1, 1),
        (2, 1, 1, 1),
        (3, 1, 1),
        (2, 2, 1),
        (3, 2),
        (4, 1),
        (5,),
    ]
)

_CLASS_STRINGS: dict[tuple[int, ...], list[tuple[int, ...]]] = {
    (1, 1, 1, 1, 1): [],
    (2, 1, 1, 1): [(1, 2)],
    (2, 2, 1): [(1, 2), (3, 4)],
    (3, 1, 1): [(1, 2), (2, 3)],
    (3, 2): [(1, 2), (2, 3), (4, 5)],
    (4, 1): [(1, 2), (2, 3), (3, 4)],
    (5,): [(1, 2), (2, 3), (3, 4), (4, 5)],
}


@lru_cache(maxsize=None)
def class_representatives() -> dict[CycleType, Permutation]:
    """One representative per conjugacy class of S(5), written as the fixed
    transposition strings used by the reference tables."""
    out = {}
    for k in CLASS_ORDER_S5:
        p = Permutation.from_cycles(5, _CLASS_STRINGS[k.parts])
        if p.cycle_type() != k:
            raise AssertionError(f"representative for {k} has wrong type")
        out[k] = p
    return out


@lru_cache(maxsize=None)
def class_operators() -> dict[CycleType, GroupOperator]:
    return {
        k: permutation_operator(p) for k, p in class_representatives().items()
    }


@dataclass(frozen=True)
class ClassCharacterRow:
    """Characters chi^{(j,j)}(k) of one S(5) class for 2j = 0..two_j_max."""

    cycle_type: CycleType
    reflective: bool
    half_angles: tuple[float, ...]  # (phi_l/2, phi_r/2) or (phi(g_r g_l)/2,)
    values: tuple[float, ...]


def class_character_table(two_j_max: int) -> list[ClassCharacterRow]:
    """Characters of all seven classes on the degree-2j harmonic spaces."""
    if two_j_max < 0:
        raise ValueError("two_j_max must be non-negative")
    rows = []
    for k, op in class_operators().items():
        if op.reflective:
            angles = (half_angle(op.g_r * op.g_l),)
        else:
            angles = (half_angle(op.g_l), half_angle(op.g_r))
        values = tuple(
            operator_character(Fraction(t, 2), op) for t in range(two_j_max + 1)
        )
        rows.append(ClassCharacterRow(k, op.reflective, angles, values))
    return rows
