"""Finite message spaces [N] with the two group laws the cipher supports.

A domain is the set {0, ..., N-1} together with either addition modulo N
or bitwise XOR (the latter only when N is a power of two).  Every round of
the cipher pairs an element X with its "partner" under a subkey K: the
unique X' with X + X' = K (mod N), or X' = K xor X in the XOR case.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError

# Elements are unsigned integers of at most 128 bits.
MAX_DOMAIN_SIZE = 1 << 128


class GroupLaw(Enum):
    MOD_ADD = "add"
    XOR = "xor"


@dataclass(frozen=True)
class Domain:
    """The message space [N] = {0, ..., size-1} under a group law."""

    size: int
    law: GroupLaw = GroupLaw.MOD_ADD

    def __post_init__(self) -> None:
        if not isinstance(self.size, int) or self.size < 2:
            raise DomainError(f"domain size must be an integer >= 2, got {self.size!r}")
        if self.size > MAX_DOMAIN_SIZE:
            raise DomainError(f"domain size must be <= 2**128, got {self.size}")
        if self.law is GroupLaw.XOR and self.size & (self.size - 1):
            raise DomainError(f"XOR law requires a power-of-two size, got {self.size}")

    @classmethod
    def mod_add(cls, size: int) -> "Domain":
        return cls(size, GroupLaw.MOD_ADD)

    @classmethod
    def xor_bits(cls, bit_width: int) -> "Domain":
        """Domain of bit_width-bit strings under XOR (size 2**bit_width)."""
        if not isinstance(bit_width, int) or bit_width < 1:
            raise DomainError(f"bit width must be an integer >= 1, got {bit_width!r}")
        return cls(1 << bit_width, GroupLaw.XOR)

    @property
    def bit_width(self) -> int:
        """Width in bits of the largest element (exact width for XOR domains)."""
        return (self.size - 1).bit_length()

    def check_element(self, x: int, name: str = "element") -> None:
        if not isinstance(x, int) or not 0 <= x < self.size:
            raise DomainError(f"{name} {x!r} not in [0, {self.size})")

    def partner(self, subkey: int, x: int) -> int:
        """The element paired with x by the subkey: subkey - x mod N, or subkey xor x.

        The pairing is an involution: partner(k, partner(k, x)) == x.
        """
        self.check_element(subkey, "subkey")
        self.check_element(x, "element")
        if self.law is GroupLaw.XOR:
            return subkey ^ x
        # (K + N - X) mod N keeps every intermediate value non-negative.
        return (subkey + self.size - x) % self.size

    def canonical(self, x: int, x_partner: int) -> int:
        """Canonical representative of the pair {x, x_partner}: the larger one."""
        self.check_element(x, "element")
        self.check_element(x_partner, "element")
        return x_partner if x_partner > x else x
