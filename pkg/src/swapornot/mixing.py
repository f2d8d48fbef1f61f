"""Exact mixing analysis of the shuffle view on small decks.

The cipher's round, read as a card shuffle, is: draw a subkey K uniformly,
pair every position X with partner(K, X), and swap each pair's cards on an
independent fair coin.  Tracking only q designated cards gives a Markov
chain on q-tuples of distinct positions whose stationary law is sampling
without replacement.  On desk-scale decks the chain's distribution can be
computed exactly, one round at a time, by averaging over all N subkeys and
enumerating the coins that matter; the total variation distance to
stationarity is then an exact number that the advantage bound must dominate.

Two cards sitting at partnered positions share one coin and swap together;
treating their coins as independent would silently break the permutation
property, so the transition groups tracked positions into per-subkey orbits
before enumerating coins.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator

from . import bounds
from .cipher import CallableSource, RoundMaterial, encipher
from .domain import Domain, GroupLaw
from .errors import DomainError, ParameterError

# Tractability guards: exact support size and round count.
MAX_SUPPORT = 10**6
MAX_EXACT_ROUNDS = 64
MAX_SHUFFLE_SIZE = 1 << 20

PROB_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ProjectedDistribution:
    """Exact distribution of q tracked cards' positions (ordered, distinct)."""

    domain: Domain
    tracked: int
    probs: dict[tuple[int, ...], float]

    def __post_init__(self) -> None:
        n = self.domain.size
        if not 1 <= self.tracked <= n:
            raise ParameterError(f"tracked cards must be in [1, {n}], got {self.tracked}")
        if self.support_size() > MAX_SUPPORT:
            raise ParameterError(
                f"support size {self.support_size()} exceeds guard {MAX_SUPPORT}"
            )
        total = 0.0
        for tup, p in self.probs.items():
            if len(tup) != self.tracked or len(set(tup)) != self.tracked:
                raise DomainError(f"support tuple {tup} is not {self.tracked} distinct positions")
            for x in tup:
                self.domain.check_element(x)
            total += p
        if abs(total - 1.0) > PROB_TOLERANCE:
            raise DomainError(f"probabilities sum to {total!r}, not 1")

    def support_size(self) -> int:
        return math.perm(self.domain.size, self.tracked)

    @classmethod
    def point_mass(cls, domain: Domain, start: tuple[int, ...]) -> "ProjectedDistribution":
        return cls(domain, len(start), {tuple(start): 1.0})

    @classmethod
    def stationary(cls, domain: Domain, tracked: int) -> "ProjectedDistribution":
        """Uniform over ordered distinct tuples: q draws without replacement."""
        size = math.perm(domain.size, tracked)
        if size > MAX_SUPPORT:
            raise ParameterError(f"support size {size} exceeds guard {MAX_SUPPORT}")
        p = 1.0 / size
        probs = {tup: p for tup in itertools.permutations(range(domain.size), tracked)}
        return cls(domain, tracked, probs)


def step(dist: ProjectedDistribution) -> ProjectedDistribution:
    """Exact one-round transition of the projected shuffle."""
    domain = dist.domain
    n = domain.size
    inv_n = 1.0 / n
    out: dict[tuple[int, ...], float] = {}
    for tup, prob in dist.probs.items():
        base = prob * inv_n
        positions = set(tup)
        for k in range(n):
            partners = [domain.partner(k, x) for x in tup]
            # Orbits among tracked cards: a pair of tracked partners shares
            # one coin; a card whose partner is untracked gets its own coin;
            # a fixed point (x == partner) cannot move at all.
            groups: list[tuple[int, ...]] = []
            seen = [False] * len(tup)
            for i, x in enumerate(tup):
                if seen[i]:
                    continue
                seen[i] = True
                xp = partners[i]
                if xp == x:
                    continue
                if xp in positions:
                    j = tup.index(xp)
                    seen[j] = True
                    groups.append((i, j))
                else:
                    groups.append((i,))
            weight = base * 0.5 ** len(groups)
            for mask in range(1 << len(groups)):
                new = list(tup)
                for g, grp in enumerate(groups):
                    if mask >> g & 1:
                        for i in grp:
                            new[i] = partners[i]
                key = tuple(new)
                out[key] = out.get(key, 0.0) + weight
    return ProjectedDistribution(domain, dist.tracked, out)


def tvd_to_stationary(dist: ProjectedDistribution) -> float:
    """Total variation distance (half the L1 distance) to sampling without replacement."""
    pi = 1.0 / dist.support_size()
    seen_mass = 0.0
    for p in dist.probs.values():
        seen_mass += abs(p - pi)
    missing = dist.support_size() - len(dist.probs)
    return 0.5 * (seen_mass + missing * pi)


def exact_tvd_after(
    domain: Domain, rounds: int, tracked: int, start: tuple[int, ...] | None = None
) -> float:
    """Exact distance to stationarity after ``rounds`` rounds from a point start.

    ``start`` defaults to the canonical tuple (0, 1, ..., tracked-1).
    """
    if not 0 <= rounds <= MAX_EXACT_ROUNDS:
        raise ParameterError(f"rounds must be in [0, {MAX_EXACT_ROUNDS}], got {rounds}")
    if start is None:
        start = tuple(range(tracked))
    dist = ProjectedDistribution.point_mass(domain, tuple(start))
    if dist.tracked != tracked:
        raise ParameterError(f"start tuple has {dist.tracked} entries, expected {tracked}")
    for _ in range(rounds):
        dist = step(dist)
    return tvd_to_stationary(dist)


@dataclass(frozen=True)
class ValidationRow:
    """One grid point of the bound-validation sweep."""

    law: GroupLaw
    domain_size: int
    tracked: int
    rounds: int
    tvd: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.tvd <= self.bound


def validation_grid(
    max_size: int = 8, max_tracked: int = 3, max_rounds: int = 12
) -> Iterator[ValidationRow]:
    """Sweep (law, N, q, r) and pair each exact TVD with its advantage bound.

    ModAdd covers N in 3..max_size; XOR covers the powers of two in range.
    Starting positions are the canonical tuple.  Every row must satisfy
    tvd <= bound; a violation means the cipher, the DP, or the bound
    arithmetic is wrong.
    """
    domains = [Domain(n, GroupLaw.MOD_ADD) for n in range(3, max_size + 1)]
    domains += [
        Domain(n, GroupLaw.XOR)
        for n in range(4, max_size + 1)
        if n & (n - 1) == 0
    ]
    for domain in domains:
        for q in range(1, min(max_tracked, domain.size) + 1):
            dist = ProjectedDistribution.point_mass(domain, tuple(range(q)))
            for r in range(1, max_rounds + 1):
                dist = step(dist)
                yield ValidationRow(
                    law=domain.law,
                    domain_size=domain.size,
                    tracked=q,
                    rounds=r,
                    tvd=tvd_to_stationary(dist),
                    bound=bounds.ncpa_bound(domain.size, r, q),
                )


@dataclass(frozen=True)
class ShuffleSample:
    """One sampled realization of the r-round shuffle: keys, coins, permutation.

    ``permutation[x]`` is the final position of the card that started at x,
    which is exactly what enciphering x under the same subkeys and coins
    returns; ``material()`` packages the transcript for that replay.
    """

    domain: Domain
    subkeys: tuple[int, ...]
    coins: tuple[dict[int, int], ...]
    permutation: tuple[int, ...]

    def material(self) -> RoundMaterial:
        coins = self.coins

        def replay(round_index: int, x_hat: int) -> int:
            return coins[round_index - 1][x_hat]

        return RoundMaterial(self.subkeys, CallableSource(replay))


def shuffle_sample(domain: Domain, rounds: int, seed: int) -> ShuffleSample:
    """Sample a full r-round shuffle of the deck [N] (N capped for memory)."""
    n = domain.size
    if n > MAX_SHUFFLE_SIZE:
        raise ParameterError(f"shuffle sampling capped at N <= {MAX_SHUFFLE_SIZE}")
    if rounds < 0:
        raise ParameterError(f"rounds must be >= 0, got {rounds}")
    rng = random.Random(seed)
    deck = list(range(n))  # deck[position] = card
    subkeys = []
    all_coins = []
    for _ in range(rounds):
        k = rng.randrange(n)
        subkeys.append(k)
        coins: dict[int, int] = {}
        # One coin per pair {x, partner}, keyed by the pair's larger member;
        # fixed points also consume a coin, matching the cipher's bit usage.
        for x in range(n):
            xp = domain.partner(k, x)
            if x <= xp:
                coins[xp] = rng.getrandbits(1)
        for x in range(n):
            xp = domain.partner(k, x)
            if x < xp and coins[xp]:
                deck[x], deck[xp] = deck[xp], deck[x]
        all_coins.append(coins)
    positions = [0] * n
    for position, card in enumerate(deck):
        positions[card] = position
    return ShuffleSample(domain, tuple(subkeys), tuple(all_coins), tuple(positions))
