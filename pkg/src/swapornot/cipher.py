"""The swap-or-not encipher/decipher loop, plain and tweakable.

Each round pairs the current value X with X' = partner(K_i, X), names the
pair by its larger member X_hat = max(X, X'), and swaps X for X' exactly
when a one-bit round function of (round, tweak, X_hat) is 1.  Because the
round function sees the *pair* rather than the point, every round is an
involution on [N] and the whole loop is a permutation; running the rounds
in reverse order inverts it.

The plain cipher is the tweakable cipher at the empty tweak: there is one
loop, and the tweak (digested once per call) is simply part of the round
function's input.  Round bits come from a pluggable :class:`BitSource`;
the two production sources are ``IdealSource`` (a seeded model of uniform
random round functions) and ``DerivedSource`` (the keyed PRF backend).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Any, Callable, NamedTuple, Protocol

from . import prf
from .domain import Domain, GroupLaw
from .errors import DomainError, ParameterError

MAX_ROUNDS = 1 << 16


class BitSource(Protocol):
    """Supplier of round-function bits.

    ``context(tweak)`` is computed once per cipher call and handed back to
    every ``bit`` call, so sources that digest the tweak pay for it once.
    A source must be deterministic: equal (round_index, tweak, x_hat) must
    always yield the same bit, even across processes.
    """

    def context(self, tweak: bytes) -> Any: ...

    def bit(self, round_index: int, context: Any, x_hat: int) -> int: ...


@dataclass(frozen=True)
class IdealSource:
    """Uniform random round functions, realized as a seeded deterministic stream.

    Each (round, tweak, x_hat) bit behaves as if sampled once globally: it is
    derived by the keyed-hash backend from a 32-byte seed, so repetition,
    reproducibility across machines, and thread safety are automatic rather
    than memoized.
    """

    seed: bytes

    def __post_init__(self) -> None:
        if not isinstance(self.seed, bytes) or len(self.seed) != 32:
            raise DomainError("ideal-source seed must be exactly 32 bytes")

    def _block(self, message: bytes) -> bytes:
        # Same layout as the PRF backend, separate keyed personalization.
        return hashlib.blake2b(
            message, digest_size=prf.BLOCK_BYTES, key=self.seed, person=b"son.ideal"
        ).digest()

    def context(self, tweak: bytes) -> prf.TweakDigest:
        return prf.TweakDigest(self._block(b"T" + bytes(_checked_tweak(tweak))))

    def bit(self, round_index: int, context: prf.TweakDigest, x_hat: int) -> int:
        return self._block(prf.encode_round_bit(round_index, context, x_hat))[-1] & 1

    def subkeys(self, domain: Domain, rounds: int) -> tuple[int, ...]:
        """Uniform subkeys drawn from the same seed (counter-indexed stream)."""
        return prf.sample_uniform(
            lambda c: self._block(prf.encode_subkey_draw(c)), domain.size, rounds
        )


@dataclass(frozen=True)
class DerivedSource:
    """Round bits from the keyed PRF backend (the production instantiation)."""

    key: prf.PrfKey

    def context(self, tweak: bytes) -> prf.TweakDigest:
        return prf.tweak_digest(self.key, tweak)

    def bit(self, round_index: int, context: prf.TweakDigest, x_hat: int) -> int:
        return prf.round_bit(self.key, round_index, context, x_hat)


@dataclass(frozen=True)
class ConstantSource:
    """Test hook: every round bit is the same constant."""

    value: int

    def __post_init__(self) -> None:
        if self.value not in (0, 1):
            raise DomainError("constant bit must be 0 or 1")

    def context(self, tweak: bytes) -> None:
        _checked_tweak(tweak)
        return None

    def bit(self, round_index: int, context: None, x_hat: int) -> int:
        return self.value


@dataclass(frozen=True)
class CallableSource:
    """Round bits from a caller-supplied function of (round_index, x_hat).

    Used to replay recorded coins (shuffle transcripts, traces).  The tweak
    is ignored; replays are inherently single-permutation.
    """

    fn: Callable[[int, int], int]

    def context(self, tweak: bytes) -> None:
        _checked_tweak(tweak)
        return None

    def bit(self, round_index: int, context: None, x_hat: int) -> int:
        return self.fn(round_index, x_hat)


def _checked_tweak(tweak: bytes) -> bytes:
    prf.check_tweak(tweak)
    return tweak


@dataclass(frozen=True)
class RoundMaterial:
    """Per-round subkeys plus the round-bit source that drives the swaps."""

    subkeys: tuple[int, ...]
    source: BitSource

    def __post_init__(self) -> None:
        object.__setattr__(self, "subkeys", tuple(self.subkeys))
        if len(self.subkeys) > MAX_ROUNDS:
            raise ParameterError(f"round count {len(self.subkeys)} exceeds cap {MAX_ROUNDS}")

    @property
    def rounds(self) -> int:
        return len(self.subkeys)

    @classmethod
    def ideal(cls, domain: Domain, rounds: int, seed: bytes) -> "RoundMaterial":
        """Material with ideal (seeded random) round functions and subkeys."""
        if rounds < 0 or rounds > MAX_ROUNDS:
            raise ParameterError(f"rounds must be in [0, {MAX_ROUNDS}], got {rounds}")
        source = IdealSource(seed)
        subkeys = source.subkeys(domain, rounds) if rounds else ()
        return cls(subkeys, source)

    @classmethod
    def derived(cls, domain: Domain, rounds: int, key: prf.PrfKey) -> "RoundMaterial":
        """Material with subkeys and round bits derived from a keyed PRF."""
        if rounds < 0 or rounds > MAX_ROUNDS:
            raise ParameterError(f"rounds must be in [0, {MAX_ROUNDS}], got {rounds}")
        subkeys = prf.derive_subkeys(key, domain, rounds) if rounds else ()
        return cls(subkeys, DerivedSource(key))

    def reversed(self) -> "RoundMaterial":
        """Material that runs this material's rounds in the opposite order.

        Enciphering with it undoes enciphering with the original: subkey and
        round-function lists are both reversed, so round i here replays round
        rounds+1-i of the original.
        """
        return RoundMaterial(self.subkeys[::-1], _ReversedSource(self.source, self.rounds))


@dataclass(frozen=True)
class _ReversedSource:
    inner: BitSource
    rounds: int

    def context(self, tweak: bytes) -> Any:
        return self.inner.context(tweak)

    def bit(self, round_index: int, context: Any, x_hat: int) -> int:
        return self.inner.bit(self.rounds + 1 - round_index, context, x_hat)


class RoundStep(NamedTuple):
    """One round of a trace: state, its partner, the pair's name, the bit."""

    x: int
    partner: int
    canonical: int
    bit: int


def _check_call(domain: Domain, material: RoundMaterial, x: int) -> None:
    domain.check_element(x)
    for k in material.subkeys:
        if not 0 <= k < domain.size:
            raise DomainError(f"subkey {k} not in [0, {domain.size})")


def encipher(domain: Domain, material: RoundMaterial, x: int, tweak: bytes = b"") -> int:
    """Encipher x in [N); with zero rounds this is the identity."""
    _check_call(domain, material, x)
    ctx = material.source.context(tweak)
    # Inputs are validated above; inline the group law for the hot loop.
    xor = domain.law is GroupLaw.XOR
    n = domain.size
    bit = material.source.bit
    for i, k in enumerate(material.subkeys, start=1):
        xp = k ^ x if xor else (k + n - x) % n
        if bit(i, ctx, xp if xp > x else x):
            x = xp
    return x


def decipher(domain: Domain, material: RoundMaterial, y: int, tweak: bytes = b"") -> int:
    """Invert encipher: the same loop with rounds taken from last to first."""
    _check_call(domain, material, y)
    ctx = material.source.context(tweak)
    xor = domain.law is GroupLaw.XOR
    n = domain.size
    bit = material.source.bit
    for i in range(material.rounds, 0, -1):
        k = material.subkeys[i - 1]
        yp = k ^ y if xor else (k + n - y) % n
        if bit(i, ctx, yp if yp > y else y):
            y = yp
    return y


def encipher_traced(
    domain: Domain, material: RoundMaterial, x: int, tweak: bytes = b""
) -> tuple[int, list[RoundStep]]:
    """Encipher and record (x, partner, canonical, bit) for every round."""
    _check_call(domain, material, x)
    ctx = material.source.context(tweak)
    trace = []
    for i, k in enumerate(material.subkeys, start=1):
        xp = domain.partner(k, x)
        x_hat = domain.canonical(x, xp)
        bit = material.source.bit(i, ctx, x_hat)
        trace.append(RoundStep(x, xp, x_hat, bit))
        if bit:
            x = xp
    return x, trace
