"""
Arithmetic in the prime field Z/pZ for word-sized primes (p < 2**64).

Residues are always kept canonical, i.e. in ``[0, p)``.  Python integers do
not overflow, so products of two 64-bit residues are exact before reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPrime, ModulusMismatch, NonResidue, NotInvertible

MODULUS_BOUND = 1 << 64
ELEMENT_BYTES = 8

# Deterministic Miller-Rabin witnesses; this set is exact for n < 3.3e23.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 2**64."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    """Return ``p`` if it is a prime in ``[3, 2**64)``, else raise InvalidPrime."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidPrime(f"modulus must be an integer, got {p!r}")
    if not 3 <= p < MODULUS_BOUND:
        raise InvalidPrime(f"modulus {p} outside [3, 2^64)")
    if not is_prime(p):
        raise InvalidPrime(f"modulus {p} is not prime")
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise NotInvertible(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def legendre_symbol(a: int, p: int) -> int:
    """Return 0, 1 or -1 (Euler's criterion)."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a: int, p: int) -> int:
    """Canonical square root min(r, p - r) of ``a`` mod an odd prime ``p``.

    Tonelli-Shanks; raises NonResidue when ``a`` is not a square.
    """
    a %= p
    if a == 0:
        return 0
    if legendre_symbol(a, p) != 1:
        raise NonResidue(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while legendre_symbol(z, p) != -1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element of Z/pZ.  The constructor reduces ``residue`` mod ``modulus``."""

    residue: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"mod {self.modulus} vs mod {other.modulus}")
            return other.residue
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.residue + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.residue - o, self.modulus)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(o - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.residue * o, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.residue * inv_mod(o, self.modulus), self.modulus)

    def __neg__(self):
        return FieldElement(-self.residue, self.modulus)

    def __pow__(self, k: int):
        return FieldElement(pow(self.residue, k, self.modulus), self.modulus)

    def __int__(self):
        return self.residue

    def inv(self) -> FieldElement:
        return FieldElement(inv_mod(self.residue, self.modulus), self.modulus)

    def legendre(self) -> int:
        return legendre_symbol(self.residue, self.modulus)

    def sqrt(self) -> FieldElement:
        return FieldElement(sqrt_mod(self.residue, self.modulus), self.modulus)

    def to_bytes(self) -> bytes:
        """8-byte big-endian encoding."""
        return self.residue.to_bytes(ELEMENT_BYTES, "big")

    def hex(self) -> str:
        return encode_hex(self.residue)


def encode_hex(value: int) -> str:
    """16 lowercase hex characters, the text form of one field element."""
    return format(value, "016x")
