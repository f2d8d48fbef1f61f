"""Keyed-PRF backend: subkey derivation, round bits, and tweak digests.

Everything keyed in this package bottoms out in one deterministic primitive,
a keyed pseudorandom function from byte strings to 16-byte blocks.  The
pinned instantiation is keyed BLAKE2b with a 128-bit digest (``PRF_ID``);
stored test vectors depend on it, so changing the primitive must bump the
identifier.

The PRF input encoding is normative and bit-exact:

* subkey draws:  ``b"K"`` + draw counter as 4-byte big-endian
* round bits:    ``b"B"`` + round index as 4-byte big-endian
  + 16-byte tweak digest + element as 16-byte big-endian
* tweak digest:  ``b"T"`` + raw tweak bytes

Fixed-width fields make distinct (tag, index, digest, element) tuples encode
to distinct byte strings; the tag byte separates the three uses.  The subkey
draw counter is 1-based and counts *candidate* draws, so on power-of-two
domains (where no candidate is ever rejected) subkey i comes from counter i.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .domain import Domain
from .errors import DomainError, ParameterError

PRF_ID = "blake2b-128/v1"
KEY_BYTES = 32
BLOCK_BYTES = 16

# Largest value a 4-byte counter/index field can carry.
_MAX_INDEX = 0xFFFFFFFF
MAX_TWEAK_BYTES = 0xFFFFFFFF

_PERSON = b"son.prf"


@dataclass(frozen=True)
class PrfKey:
    """A 32-byte secret key for the pinned keyed PRF."""

    key_bytes: bytes

    def __post_init__(self) -> None:
        if not isinstance(self.key_bytes, bytes) or len(self.key_bytes) != KEY_BYTES:
            raise DomainError(f"PRF key must be exactly {KEY_BYTES} bytes")

    @classmethod
    def from_hex(cls, hex_string: str) -> "PrfKey":
        try:
            raw = bytes.fromhex(hex_string)
        except ValueError as exc:
            raise DomainError(f"key is not valid hex: {exc}") from exc
        return cls(raw)

    def block(self, message: bytes) -> bytes:
        """The 16-byte PRF output for a message."""
        return hashlib.blake2b(
            message, digest_size=BLOCK_BYTES, key=self.key_bytes, person=_PERSON
        ).digest()


@dataclass(frozen=True)
class TweakDigest:
    """16-byte digest of a tweak, reusable across every round of a cipher call."""

    digest: bytes

    def __post_init__(self) -> None:
        if not isinstance(self.digest, bytes) or len(self.digest) != BLOCK_BYTES:
            raise DomainError(f"tweak digest must be exactly {BLOCK_BYTES} bytes")


def check_tweak(tweak: bytes) -> None:
    if not isinstance(tweak, (bytes, bytearray)):
        raise DomainError("tweak must be a byte string")
    if len(tweak) > MAX_TWEAK_BYTES:
        raise DomainError(f"tweak longer than {MAX_TWEAK_BYTES} bytes")


def tweak_digest(key: PrfKey, tweak: bytes = b"") -> TweakDigest:
    """Digest a tweak once so round bits only ever touch 16 bytes of it."""
    check_tweak(tweak)
    return TweakDigest(key.block(b"T" + bytes(tweak)))


def encode_subkey_draw(counter: int) -> bytes:
    if not 1 <= counter <= _MAX_INDEX:
        raise ParameterError(f"subkey draw counter {counter} outside [1, 2**32)")
    return b"K" + counter.to_bytes(4, "big")


def encode_round_bit(round_index: int, td: TweakDigest, x_hat: int) -> bytes:
    if not 1 <= round_index <= _MAX_INDEX:
        raise ParameterError(f"round index {round_index} outside [1, 2**32)")
    return b"B" + round_index.to_bytes(4, "big") + td.digest + x_hat.to_bytes(16, "big")


def round_bit(key: PrfKey, round_index: int, td: TweakDigest, x_hat: int) -> int:
    """Round-function bit for (round, tweak digest, canonical element).

    Bit 0 of the PRF block, reading the block as a big-endian integer.
    """
    return key.block(encode_round_bit(round_index, td, x_hat))[-1] & 1


def sample_uniform(block_at, size: int, count: int) -> tuple[int, ...]:
    """Draw ``count`` independent uniform elements of [0, size) from a block stream.

    ``block_at(counter)`` must return the 16-byte block for a 1-based draw
    counter.  Candidates are the first 8 bytes of a block (big-endian) when
    size <= 2**63, the full block otherwise; candidates at or above
    size * floor(2**w / size) are rejected, which removes modulo bias exactly.
    Fewer than 2 draws per element are needed on average.
    """
    if size < 2:
        raise DomainError(f"size must be >= 2, got {size}")
    width_bytes = 8 if size <= 1 << 63 else 16
    threshold = ((1 << (8 * width_bytes)) // size) * size
    out = []
    counter = 1
    while len(out) < count:
        if counter > _MAX_INDEX:
            raise ParameterError("subkey derivation exhausted the 32-bit draw counter")
        candidate = int.from_bytes(block_at(counter)[:width_bytes], "big")
        counter += 1
        if candidate < threshold:
            out.append(candidate % size)
    return tuple(out)


def derive_subkeys(key: PrfKey, domain: Domain, rounds: int) -> tuple[int, ...]:
    """Per-round subkeys, uniform in [0, N) and deterministic per (key, N, rounds)."""
    if rounds < 1:
        raise ParameterError(f"rounds must be >= 1, got {rounds}")
    return sample_uniform(
        lambda c: key.block(encode_subkey_draw(c)), domain.size, rounds
    )
