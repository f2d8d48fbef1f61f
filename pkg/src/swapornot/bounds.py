"""Provable-security advantage bounds and round-count planning.

All bounds share the shape  prefactor(N, R) * ((q + N) / 2N)^exponent(R)
and are evaluated in log space with 60-digit arithmetic before clamping to
[0, 1]: the prefactor alone overflows doubles for 64-bit domains, and the
credit-card-sized recipe lands within 10% of its target, so double-precision
shortcuts are not acceptable here.

Models:

* ``ncpa``        - nonadaptive chosen-plaintext adversaries, r >= 1 rounds:
                    min(1, (2 N^{3/2} / (r+2)) * ((q+N)/2N)^{r/2+1})
* ``cca``         - adaptive chosen-ciphertext adversaries, even R rounds:
                    min(1, (8 N^{3/2} / (R+4)) * ((q+N)/2N)^{R/4+1}),
                    which is exactly twice the ncpa bound at R/2 rounds
* ``ncpa-tweak``  - tweakable variant; same expression as ``ncpa``
* ``cca-tweak``   - tweakable CCA, even R:
                    min(1, (8 N^{3/4} / sqrt(R+4)) * ((q+N)/2N)^{(R+4)/8}),
                    equal to 4 * sqrt(ncpa bound at R/2 rounds)
* ``thorp``       - comparison curve for the Thorp shuffle at r passes over
                    N = 2^n points: min(1, (2q/r + 1) * (4nq/N)^r)

As a rule of thumb the non-Thorp bounds only become nontrivial once the
round count passes roughly 6*lg(N) (for q a constant fraction of N), and
they decay exponentially from there.  Guarding against q close to N is
expensive: at q = N-1 the decay rate is ~1/(8N) per round, so realistic
targets need an explicit, smaller query budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from mpmath import mp, mpf

from .errors import ParameterError, RoundCapExceeded

# Significant decimal digits for internal evaluation.
PRECISION_DPS = 60

# Largest round count the planner will consider.
ROUND_CAP = 1 << 16


class Model(Enum):
    NCPA = "ncpa"
    CCA = "cca"
    NCPA_TWEAK = "ncpa-tweak"
    CCA_TWEAK = "cca-tweak"
    THORP = "thorp"


@dataclass(frozen=True)
class BoundQuery:
    """One bound evaluation: domain size, total rounds, query budget, model.

    For the ``thorp`` model ``rounds`` counts passes, not individual rounds.
    """

    domain_size: int
    rounds: int
    queries: int
    model: Model

    def advantage(self) -> float:
        return evaluate(self)


def _check_domain(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ParameterError(f"domain size must be an integer >= 2, got {n!r}")


def _check_queries(n: int, q: int) -> None:
    if not isinstance(q, int) or q < 1:
        raise ParameterError(f"query budget must be an integer >= 1, got {q!r}")
    if q > n:
        raise ParameterError(f"query budget {q} exceeds domain size {n}")


def _check_cca_rounds(rounds: int) -> None:
    if not isinstance(rounds, int) or rounds < 2:
        raise ParameterError(f"CCA models need rounds >= 2, got {rounds!r}")
    if rounds % 2:
        raise ParameterError(
            f"CCA models are stated for even round counts; round {rounds} up to {rounds + 1}"
        )


def _ln_base(n: int, q: int):
    # ln((q + N) / 2N); <= 0 whenever q <= N.
    return mp.log(q + n) - mp.log(2 * n)


def _ln_ncpa(n: int, rounds: int, q: int):
    return (
        mp.log(2)
        + mpf(3) / 2 * mp.log(n)
        - mp.log(rounds + 2)
        + (mpf(rounds) / 2 + 1) * _ln_base(n, q)
    )


def _ln_cca(n: int, rounds: int, q: int):
    return mp.log(2) + _ln_ncpa(n, rounds // 2, q)


def _ln_cca_tweak(n: int, rounds: int, q: int):
    return mp.log(4) + _ln_ncpa(n, rounds // 2, q) / 2


def _ln_thorp(n: int, passes: int, q: int):
    lg_n = n.bit_length() - 1
    if q == 0:
        return mp.mpf("-inf")
    return mp.log(mpf(2 * q) / passes + 1) + passes * (mp.log(4 * lg_n * q) - mp.log(n))


def _clamped(ln_value) -> float:
    if ln_value >= 0:
        return 1.0
    return float(mp.e**ln_value)


def ncpa_bound(domain_size: int, rounds: int, queries: int) -> float:
    """Advantage bound against nonadaptive chosen-plaintext adversaries.

    Also the exact total-variation bound for the projected shuffle after
    ``rounds`` rounds with ``queries`` tracked cards, which is what the
    mixing verifier checks against.
    """
    _check_domain(domain_size)
    _check_queries(domain_size, queries)
    if not isinstance(rounds, int) or rounds < 1:
        raise ParameterError(f"NCPA models need rounds >= 1, got {rounds!r}")
    with mp.workdps(PRECISION_DPS):
        return _clamped(_ln_ncpa(domain_size, rounds, queries))


def ncpa_tweak_bound(domain_size: int, rounds: int, queries: int) -> float:
    """Tweakable NCPA bound; the expression matches the plain NCPA bound."""
    return ncpa_bound(domain_size, rounds, queries)


def cca_bound(domain_size: int, rounds: int, queries: int) -> float:
    """Adaptive CCA bound for an even total round count."""
    _check_domain(domain_size)
    _check_queries(domain_size, queries)
    _check_cca_rounds(rounds)
    with mp.workdps(PRECISION_DPS):
        return _clamped(_ln_cca(domain_size, rounds, queries))


def cca_tweak_bound(domain_size: int, rounds: int, queries: int) -> float:
    """Tweakable CCA bound for an even total round count."""
    _check_domain(domain_size)
    _check_queries(domain_size, queries)
    _check_cca_rounds(rounds)
    with mp.workdps(PRECISION_DPS):
        return _clamped(_ln_cca_tweak(domain_size, rounds, queries))


def thorp_bound(domain_size: int, passes: int, queries: int) -> float:
    """Thorp-shuffle CCA comparison bound at ``passes`` passes, N = 2^n.

    Kept for comparison tables only; it is vacuous once q >= N / (4 lg N).
    Unlike the other models, q = 0 is allowed (the bound is then 0).
    """
    _check_domain(domain_size)
    if domain_size & (domain_size - 1):
        raise ParameterError(f"thorp model needs a power-of-two domain, got {domain_size}")
    if not isinstance(passes, int) or passes < 1:
        raise ParameterError(f"thorp model needs passes >= 1, got {passes!r}")
    if not isinstance(queries, int) or queries < 0:
        raise ParameterError(f"query budget must be an integer >= 0, got {queries!r}")
    with mp.workdps(PRECISION_DPS):
        return _clamped(_ln_thorp(domain_size, passes, queries))


_LN_BY_MODEL = {
    Model.NCPA: _ln_ncpa,
    Model.NCPA_TWEAK: _ln_ncpa,
    Model.CCA: _ln_cca,
    Model.CCA_TWEAK: _ln_cca_tweak,
    Model.THORP: _ln_thorp,
}

_BOUND_BY_MODEL = {
    Model.NCPA: ncpa_bound,
    Model.NCPA_TWEAK: ncpa_tweak_bound,
    Model.CCA: cca_bound,
    Model.CCA_TWEAK: cca_tweak_bound,
    Model.THORP: thorp_bound,
}


def evaluate(query: BoundQuery) -> float:
    """Evaluate a BoundQuery through the model-appropriate bound."""
    return _BOUND_BY_MODEL[query.model](query.domain_size, query.rounds, query.queries)


def min_rounds(domain_size: int, queries: int, target: float, model: Model) -> int:
    """Smallest round count whose bound is <= target under the given model.

    Returns an even total for the CCA models, any r >= 1 for the NCPA models,
    and a pass count for ``thorp``.  The bounds are nonincreasing in the round
    count, so the minimum is located by doubling followed by binary search.
    Raises :class:`RoundCapExceeded` if no count within the cap reaches the
    target.
    """
    _check_domain(domain_size)
    if not 0 < target < 1:
        raise ParameterError(f"target advantage must be in (0, 1), got {target!r}")
    if model is Model.THORP:
        _check_domain(domain_size)
        if domain_size & (domain_size - 1):
            raise ParameterError(f"thorp model needs a power-of-two domain, got {domain_size}")
        if not isinstance(queries, int) or queries < 1:
            raise ParameterError(f"query budget must be an integer >= 1, got {queries!r}")
        if 4 * (domain_size.bit_length() - 1) * queries >= domain_size:
            raise RoundCapExceeded(
                "thorp bound does not decrease with passes once 4*lg(N)*q >= N"
            )
        step, start = 1, 1
    else:
        _check_queries(domain_size, queries)
        cca_like = model in (Model.CCA, Model.CCA_TWEAK)
        step, start = (2, 2) if cca_like else (1, 1)

    ln_bound = _LN_BY_MODEL[model]
    with mp.workdps(PRECISION_DPS):
        ln_target = mp.log(target)

        def ok(rounds: int) -> bool:
            return ln_bound(domain_size, rounds, queries) <= ln_target

        if ok(start):
            return start
        # Double until the target is met, then binary-search the gap.
        lo = start  # known failing
        hi = start * 2
        while hi <= ROUND_CAP and not ok(hi):
            lo, hi = hi, hi * 2
        if hi > ROUND_CAP:
            hi = ROUND_CAP - (ROUND_CAP % step)
            if hi <= lo or not ok(hi):
                raise RoundCapExceeded(
                    f"no round count <= {ROUND_CAP} reaches advantage {target} "
                    f"for N={domain_size}, q={queries}, model={model.value}"
                )
        while hi - lo > step:
            mid = lo + (hi - lo) // 2
            mid -= mid % step
            if mid <= lo:
                mid = lo + step
            if ok(mid):
                hi = mid
            else:
                lo = mid
        return hi
