"""Canonical logical operators and Pauli classification for product codes.

A Z-type canonical operator is determined by two coefficient matrices: lam
(k1 x k2) weights the vectors xbar_k (x) y_j on the bit-bit block, kappa
(k1T x k2T) weights a_l (x) bbar_m on the check-check block, where

    xbar_k : kernel basis of H1          y_j : units at free columns of H2
    a_l    : units at free columns of H1^T   bbar_m : kernel basis of H2^T

The unit vectors sit at non-pivot columns, which keeps them outside the
relevant row spaces, so any nonzero coefficient choice realizes an operator
that is logical and not a stabilizer. X-type operators mirror this through
the H1 <-> H2^T symmetry of the construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import CapExceeded, DimensionMismatch, NoLogicals, ShapeMismatch
from .f2core import (
    BitMatrix,
    BitVec,
    kernel_basis,
    mat_vec,
    row_reducer,
    rref,
    tensor_vec,
    vec_concat,
)
from .hgp import HgpCode

__all__ = [
    "PauliVec",
    "PauliClass",
    "CanonicalZOp",
    "CanonicalXOp",
    "canonical_z_basis",
    "canonical_x_basis",
    "compose_canonical",
    "compose_canonical_x",
    "classify",
    "enumerate_z_logicals",
    "enumerate_x_logicals",
]


@dataclass(frozen=True)
class PauliVec:
    """Binary symplectic representation: x and z flip patterns over N qubits."""

    n: int
    x: BitVec
    z: BitVec

    def __post_init__(self):
        if self.x.n != self.n or self.z.n != self.n:
            raise DimensionMismatch(
                f"parts of length {self.x.n}/{self.z.n} on {self.n} qubits"
            )

    @classmethod
    def identity(cls, n: int) -> "PauliVec":
        return cls(n, BitVec(n), BitVec(n))

    @classmethod
    def z_type(cls, z: BitVec) -> "PauliVec":
        return cls(z.n, BitVec(z.n), z)

    @classmethod
    def x_type(cls, x: BitVec) -> "PauliVec":
        return cls(x.n, x, BitVec(x.n))

    def __mul__(self, other: "PauliVec") -> "PauliVec":
        return PauliVec(self.n, self.x ^ other.x, self.z ^ other.z)

    def weight(self) -> int:
        return (self.x.bits | self.z.bits).bit_count()

    def support(self) -> tuple[int, ...]:
        return BitVec(self.n, self.x.bits | self.z.bits).support()

    def is_identity(self) -> bool:
        return not (self.x.bits or self.z.bits)


class PauliClass(enum.Enum):
    IDENTITY = "Identity"
    STABILIZER = "Stabilizer"
    NONTRIVIAL_LOGICAL = "NontrivialLogical"
    NON_COMMUTING = "NonCommuting"


@dataclass(frozen=True)
class CanonicalZOp:
    lam: BitMatrix
    kappa: BitMatrix
    realized: PauliVec

    def is_elementary(self) -> bool:
        ones = sum(r.bit_count() for r in self.lam.row_bits)
        ones += sum(r.bit_count() for r in self.kappa.row_bits)
        return ones == 1


@dataclass(frozen=True)
class CanonicalXOp:
    lam: BitMatrix
    kappa: BitMatrix
    realized: PauliVec

    def is_elementary(self) -> bool:
        ones = sum(r.bit_count() for r in self.lam.row_bits)
        ones += sum(r.bit_count() for r in self.kappa.row_bits)
        return ones == 1


def _free_columns(m: BitMatrix) -> tuple[int, ...]:
    piv = set(rref(m).pivot_cols)
    return tuple(c for c in range(m.cols) if c not in piv)


@lru_cache(maxsize=128)
def _z_ingredients(code: HgpCode):
    xbar = kernel_basis(code.h1.h)
    ys = tuple(BitVec.unit(code.n2, c) for c in _free_columns(code.h2.h))
    als = tuple(BitVec.unit(code.r1, c) for c in _free_columns(code.h1.h.transpose()))
    bbar = kernel_basis(code.h2.h.transpose())
    return xbar, ys, als, bbar


@lru_cache(maxsize=128)
def _x_ingredients(code: HgpCode):
    xs = tuple(BitVec.unit(code.n1, c) for c in _free_columns(code.h1.h))
    ybar = kernel_basis(code.h2.h)
    abar = kernel_basis(code.h1.h.transpose())
    bs = tuple(BitVec.unit(code.r2, c) for c in _free_columns(code.h2.h.transpose()))
    return xs, ybar, abar, bs


def _combine(code: HgpCode, lam: BitMatrix, kappa: BitMatrix, vv_pairs, cc_pairs) -> BitVec:
    left, right = vv_pairs
    vv = BitVec(code.n1 * code.n2)
    for k in range(lam.rows):
        for j in range(lam.cols):
            if lam.entry(k, j):
                vv ^= tensor_vec(left[k], right[j])
    aside, bside = cc_pairs
    cc = BitVec(code.r1 * code.r2)
    for l in range(kappa.rows):
        for m in range(kappa.cols):
            if kappa.entry(l, m):
                cc ^= tensor_vec(aside[l], bside[m])
    return vec_concat(vv, cc)


def compose_canonical(code: HgpCode, lam: BitMatrix, kappa: BitMatrix) -> CanonicalZOp:
    """Realize the Z-type operator with the given coefficients.

    All-zero coefficients give the identity Pauli.
    """
    xbar, ys, als, bbar = _z_ingredients(code)
    if (lam.rows, lam.cols) != (len(xbar), len(ys)):
        raise ShapeMismatch(f"lam is {lam.rows}x{lam.cols}, need {len(xbar)}x{len(ys)}")
    if (kappa.rows, kappa.cols) != (len(als), len(bbar)):
        raise ShapeMismatch(
            f"kappa is {kappa.rows}x{kappa.cols}, need {len(als)}x{len(bbar)}"
        )
    z = _combine(code, lam, kappa, (xbar, ys), (als, bbar))
    return CanonicalZOp(lam, kappa, PauliVec.z_type(z))


def compose_canonical_x(code: HgpCode, lam: BitMatrix, kappa: BitMatrix) -> CanonicalXOp:
    xs, ybar, abar, bs = _x_ingredients(code)
    if (lam.rows, lam.cols) != (len(xs), len(ybar)):
        raise ShapeMismatch(f"lam is {lam.rows}x{lam.cols}, need {len(xs)}x{len(ybar)}")
    if (kappa.rows, kappa.cols) != (len(abar), len(bs)):
        raise ShapeMismatch(
            f"kappa is {kappa.rows}x{kappa.cols}, need {len(abar)}x{len(bs)}"
        )
    x = _combine(code, lam, kappa, (xs, ybar), (abar, bs))
    return CanonicalXOp(lam, kappa, PauliVec.x_type(x))


def _elementary_coeffs(rows1: int, cols1: int, rows2: int, cols2: int):
    for k in range(rows1):
        for j in range(cols1):
            lam = BitMatrix(
                rows1, cols1, tuple((1 << j) if i == k else 0 for i in range(rows1))
            )
            yield lam, BitMatrix.zeros(rows2, cols2)
    for l in range(rows2):
        for m in range(cols2):
            kap = BitMatrix(
                rows2, cols2, tuple((1 << m) if i == l else 0 for i in range(rows2))
            )
            yield BitMatrix.zeros(rows1, cols1), kap


def canonical_z_basis(code: HgpCode) -> list[CanonicalZOp]:
    """The k1*k2 + k1T*k2T elementary Z operators, bit-bit block first."""
    xbar, ys, als, bbar = _z_ingredients(code)
    if len(xbar) * len(ys) + len(als) * len(bbar) == 0:
        raise NoLogicals("code has no logical qubits")
    return [
        compose_canonical(code, lam, kap)
        for lam, kap in _elementary_coeffs(len(xbar), len(ys), len(als), len(bbar))
    ]


def canonical_x_basis(code: HgpCode) -> list[CanonicalXOp]:
    xs, ybar, abar, bs = _x_ingredients(code)
    if len(xs) * len(ybar) + len(abar) * len(bs) == 0:
        raise NoLogicals("code has no logical qubits")
    return [
        compose_canonical_x(code, lam, kap)
        for lam, kap in _elementary_coeffs(len(xs), len(ybar), len(abar), len(bs))
    ]


def classify(code: HgpCode, p: PauliVec) -> PauliClass:
    """Place a Pauli in the normalizer hierarchy of the code."""
    if p.n != code.n_qubits:
        raise DimensionMismatch(f"Pauli on {p.n} qubits, code has {code.n_qubits}")
    if mat_vec(code.hx, p.z).bits or mat_vec(code.hz, p.x).bits:
        return PauliClass.NON_COMMUTING
    x_stab = row_reducer(code.hx)(p.x.bits) == 0
    z_stab = row_reducer(code.hz)(p.z.bits) == 0
    if x_stab and z_stab:
        if p.is_identity():
            return PauliClass.IDENTITY
        return PauliClass.STABILIZER
    return PauliClass.NONTRIVIAL_LOGICAL


def _enumerate_coset(check: BitMatrix, stab_rows: BitMatrix, cap: int) -> Iterator[BitVec]:
    basis = kernel_basis(check)
    if 1 << len(basis) > cap:
        raise CapExceeded(f"2^{len(basis)} kernel elements exceed cap {cap}")
    reduce_bits = row_reducer(stab_rows)
    acc = 0
    for t in range(1, 1 << len(basis)):
        acc ^= basis[(t & -t).bit_length() - 1].bits
        if reduce_bits(acc):
            yield BitVec(check.cols, acc)


def enumerate_z_logicals(code: HgpCode, cap: int = 1 << 20) -> Iterator[PauliVec]:
    """All Z parts in ker(HX) outside rowspace(HZ), as Z-type Paulis."""
    for z in _enumerate_coset(code.hx, code.hz, cap):
        yield PauliVec.z_type(z)


def enumerate_x_logicals(code: HgpCode, cap: int = 1 << 20) -> Iterator[PauliVec]:
    for x in _enumerate_coset(code.hz, code.hx, cap):
        yield PauliVec.x_type(x)
