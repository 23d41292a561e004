"""2x2 matrices over Z/pZ and integer scalar matrices, row-major."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from .errors import InvalidInput, Malformed, ModulusMismatch, NotInvertible
from .field import ELEMENT_BYTES, encode_hex, inv_mod

Entries = Tuple[int, int, int, int]
MATRIX_BYTES = 4 * ELEMENT_BYTES


def _entries(values) -> Entries:
    t = tuple(int(v) for v in values)
    if len(t) != 4:
        raise InvalidInput(f"a 2x2 matrix has 4 entries, got {len(t)}")
    return t


@dataclass(frozen=True)
class FieldMatrix:
    p: int
    entries: Entries

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(v % self.p for v in _entries(self.entries)))

    @classmethod
    def identity(cls, p: int) -> FieldMatrix:
        return cls(p, (1, 0, 0, 1))

    @property
    def rows(self):
        e = self.entries
        return ((e[0], e[1]), (e[2], e[3]))

    def det(self) -> int:
        e = self.entries
        return (e[0] * e[3] - e[1] * e[2]) % self.p

    def inverse(self) -> FieldMatrix:
        d = self.det()
        if d == 0:
            raise NotInvertible(f"singular matrix mod {self.p}")
        di = inv_mod(d, self.p)
        e0, e1, e2, e3 = self.entries
        return FieldMatrix(self.p, (e3 * di, -e1 * di, -e2 * di, e0 * di))

    def to_bytes(self) -> bytes:
        """Four 8-byte big-endian entries, row-major (32 bytes)."""
        return b"".join(v.to_bytes(ELEMENT_BYTES, "big") for v in self.entries)

    def hex(self) -> str:
        return "".join(encode_hex(v) for v in self.entries)

    @classmethod
    def from_hex(cls, p: int, text: str) -> FieldMatrix:
        """Inverse of :meth:`hex`; strict (64 lowercase hex chars, entries < p)."""
        if len(text) != 2 * MATRIX_BYTES or any(ch not in "0123456789abcdef" for ch in text):
            raise Malformed("matrix must be 64 lowercase hex characters")
        vals = [int(text[i:i + 16], 16) for i in range(0, 64, 16)]
        if any(v >= p for v in vals):
            raise Malformed(f"matrix entry not reduced mod {p}")
        return cls(p, tuple(vals))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __rmatmul__(self, other):
        return mat_mul(other, self)


@dataclass(frozen=True)
class ScalarMatrix:
    """Integer matrix; entry i (row-major) belongs to curve i + 1."""

    entries: Entries

    def __post_init__(self):
        object.__setattr__(self, "entries", _entries(self.entries))

    def __matmul__(self, other):
        return mat_mul(self, other)


Matrix = Union[FieldMatrix, ScalarMatrix]


def mat_mul(A: Matrix, B: Matrix, p: int = None) -> FieldMatrix:
    """Product over Z/pZ.  Scalar entries are reduced mod p first.

    The modulus comes from whichever operand is a FieldMatrix, or from ``p``
    when both are scalar matrices.
    """
    moduli = {m.p for m in (A, B) if isinstance(m, FieldMatrix)}
    if p is not None:
        moduli.add(p)
    if len(moduli) > 1:
        raise ModulusMismatch(f"moduli {sorted(moduli)}")
    if not moduli:
        raise InvalidInput("modulus required when both operands are scalar matrices")
    (q,) = moduli
    a0, a1, a2, a3 = (v % q for v in A.entries)
    b0, b1, b2, b3 = (v % q for v in B.entries)
    return FieldMatrix(q, (
        a0 * b0 + a1 * b2, a0 * b1 + a1 * b3,
        a2 * b0 + a3 * b2, a2 * b1 + a3 * b3,
    ))
