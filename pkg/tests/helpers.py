"""Independent oracles shared by the test suite.

The bound oracle uses the stdlib ``decimal`` module at 60 significant
digits, a different library and code path from the package's mpmath
evaluation.  The reference cipher materializes each round as an explicit
permutation table and composes them, instead of tracing a single element
through the loop.
"""

from decimal import Decimal, getcontext

ORACLE_DIGITS = 60


def _ctx():
    getcontext().prec = ORACLE_DIGITS


def _clamp(ln_value: Decimal) -> Decimal:
    if ln_value >= 0:
        return Decimal(1)
    return ln_value.exp()


def _ln_base(n: int, q: int) -> Decimal:
    return (Decimal(q) + Decimal(n)).ln() - (2 * Decimal(n)).ln()


def oracle_ncpa(n: int, rounds: int, q: int) -> Decimal:
    _ctx()
    ln_v = (
        Decimal(2).ln()
        + Decimal(3) / 2 * Decimal(n).ln()
        - Decimal(rounds + 2).ln()
        + (Decimal(rounds) / 2 + 1) * _ln_base(n, q)
    )
    return _clamp(ln_v)


def oracle_cca(n: int, rounds: int, q: int) -> Decimal:
    _ctx()
    ln_v = (
        Decimal(8).ln()
        + Decimal(3) / 2 * Decimal(n).ln()
        - Decimal(rounds + 4).ln()
        + (Decimal(rounds) / 4 + 1) * _ln_base(n, q)
    )
    return _clamp(ln_v)


def oracle_cca_tweak(n: int, rounds: int, q: int) -> Decimal:
    _ctx()
    ln_v = (
        Decimal(8).ln()
        + Decimal(3) / 4 * Decimal(n).ln()
        - Decimal(rounds + 4).ln() / 2
        + (Decimal(rounds + 4) / 8) * _ln_base(n, q)
    )
    return _clamp(ln_v)


def oracle_thorp(n: int, passes: int, q: int) -> Decimal:
    _ctx()
    if q == 0:
        return Decimal(0)
    lg_n = n.bit_length() - 1
    ln_v = (2 * Decimal(q) / passes + 1).ln() + passes * (
        Decimal(4 * lg_n * q).ln() - Decimal(n).ln()
    )
    return _clamp(ln_v)


def relative_error(value: float, expected: Decimal) -> float:
    return abs((Decimal(value) - expected) / expected)


def reference_encipher(n: int, law: str, subkeys, bit_fn, x: int) -> int:
    """Single-step reference: build each round's permutation table, compose.

    ``law`` is "add" or "xor"; ``bit_fn(round_index, x_hat)`` supplies the
    round bit.  Only usable for small n.
    """
    for i, k in enumerate(subkeys, start=1):
        table = []
        for v in range(n):
            w = (k - v) % n if law == "add" else k ^ v
            table.append(w if bit_fn(i, max(v, w)) else v)
        assert sorted(table) == list(range(n)), "round is not a permutation"
        assert all(table[table[v]] == v for v in range(n)), "round is not an involution"
        x = table[x]
    return x


def is_permutation(outputs, n: int) -> bool:
    return len(outputs) == n and sorted(outputs) == list(range(n))
