"""Command-line interface.

Subcommands:

* ``encrypt`` / ``decrypt`` - format-preserving encryption of radix strings
* ``bounds``               - evaluate an advantage bound (optionally as CSV)
* ``minrounds``            - smallest round count meeting an advantage target
* ``mixlab``               - exact mixing sweep vs. the advantage bound
* ``shuffle``              - demo: sample one shuffle, print the permutation
* ``vectors``              - regenerate the golden test vectors

Exit codes: 0 on success, 1 on usage errors, 2 on parameter/domain errors.
Results go to stdout (machine-readable, deterministic; advantages at 6
significant digits), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds as bounds_mod
from . import fpe, mixing
from .domain import Domain, GroupLaw
from .errors import DomainError, ParameterError
from .prf import PrfKey

_MODEL_CHOICES = [m.value for m in bounds_mod.Model]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the CLI contract wants 1.
    def error(self, message: str):
        raise _UsageError(f"{self.prog}: {message}")


def _fmt(value: float) -> str:
    return format(value, ".6g")


def _parse_rounds(text: str) -> int | None:
    if text == "auto":
        return None
    try:
        return int(text)
    except ValueError:
        raise _UsageError(f"--rounds must be an integer or 'auto', got {text!r}")


def _parse_hex(text: str, what: str) -> bytes:
    try:
        return bytes.fromhex(text)
    except ValueError as exc:
        raise DomainError(f"{what} is not valid hex: {exc}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise _UsageError(f"expected integer or comma-separated integers, got {text!r}")


def _add_crypt_parser(sub, name: str, doc: str) -> None:
    p = sub.add_parser(name, help=doc)
    p.add_argument("--key", required=True, help="64 hex chars (32-byte PRF key)")
    p.add_argument("--radix", type=int, required=True, help="digit base, 2..36")
    p.add_argument("--length", type=int, required=True, help="digit count")
    p.add_argument("--tweak", default="", help="tweak as hex bytes (default: empty)")
    p.add_argument("--rounds", default="auto", help="round count, or 'auto' to plan")
    p.add_argument(
        "--target-adv",
        type=float,
        default=fpe.DEFAULT_TARGET_ADVANTAGE,
        help="advantage target for auto rounds",
    )
    p.add_argument(
        "--queries",
        type=int,
        default=None,
        help="query budget for auto rounds (default: N-1, usually unreachable)",
    )
    p.add_argument("--xor", action="store_true", help="use the XOR law (power-of-two N only)")
    p.add_argument("text", help="input digit string")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="swapornot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    _add_crypt_parser(sub, "encrypt", "encrypt a radix string in place")
    _add_crypt_parser(sub, "decrypt", "decrypt a radix string in place")

    p = sub.add_parser("bounds", help="evaluate an advantage bound")
    p.add_argument("--N", type=int, required=True, dest="domain_size")
    p.add_argument("--rounds", required=True, help="rounds (comma list allowed with --csv)")
    p.add_argument("--q", required=True, help="query budget (comma list allowed with --csv)")
    p.add_argument("--model", choices=_MODEL_CHOICES, default="cca")
    p.add_argument("--csv", action="store_true", help="emit N,rounds,q,model,advantage rows")

    p = sub.add_parser("minrounds", help="smallest round count meeting a target")
    p.add_argument("--N", type=int, required=True, dest="domain_size")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--target-adv", type=float, required=True)
    p.add_argument("--model", choices=_MODEL_CHOICES, default="cca")

    p = sub.add_parser("mixlab", help="exact mixing sweep vs. the advantage bound")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-q", type=int, default=3)
    p.add_argument("--max-r", type=int, default=12)
    p.add_argument("--csv", action="store_true", help="emit law,N,q,r,tvd,bound,pass rows")

    p = sub.add_parser("shuffle", help="demo: sample one shuffle and print the permutation")
    p.add_argument("--n", type=int, required=True, dest="deck_size")
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--xor", action="store_true", help="use the XOR law (power-of-two N only)")

    sub.add_parser("vectors", help="regenerate the golden test vectors on stdout")
    return parser


def _cmd_crypt(args, encrypting: bool) -> int:
    key = PrfKey.from_hex(args.key)
    spec = fpe.FormatSpec(args.radix, args.length)
    tweak = _parse_hex(args.tweak, "tweak")
    rounds = _parse_rounds(args.rounds)
    if rounds is None:
        rounds = fpe.plan_rounds(spec, args.queries, args.target_adv)
        print(f"auto rounds: {rounds}", file=sys.stderr)
    work = fpe.fpe_encrypt if encrypting else fpe.fpe_decrypt
    print(work(key, spec, args.text, tweak, rounds, xor_law=args.xor))
    return 0


def _cmd_bounds(args) -> int:
    rounds_list = _int_list(args.rounds)
    q_list = _int_list(args.q)
    if not args.csv and (len(rounds_list) > 1 or len(q_list) > 1):
        raise _UsageError("comma lists for --rounds/--q require --csv")
    model = bounds_mod.Model(args.model)
    if args.csv:
        print("N,rounds,q,model,advantage")
        for rounds in rounds_list:
            for q in q_list:
                adv = bounds_mod.evaluate(
                    bounds_mod.BoundQuery(args.domain_size, rounds, q, model)
                )
                print(f"{args.domain_size},{rounds},{q},{model.value},{_fmt(adv)}")
    else:
        adv = bounds_mod.evaluate(
            bounds_mod.BoundQuery(args.domain_size, rounds_list[0], q_list[0], model)
        )
        print(_fmt(adv))
    return 0


def _cmd_minrounds(args) -> int:
    model = bounds_mod.Model(args.model)
    print(bounds_mod.min_rounds(args.domain_size, args.q, args.target_adv, model))
    return 0


def _cmd_mixlab(args) -> int:
    rows = list(mixing.validation_grid(args.max_n, args.max_q, args.max_r))
    if args.csv:
        print("law,N,q,r,tvd,bound,pass")
        for row in rows:
            print(
                f"{row.law.value},{row.domain_size},{row.tracked},{row.rounds},"
                f"{_fmt(row.tvd)},{_fmt(row.bound)},{'pass' if row.ok else 'fail'}"
            )
    else:
        print(f"{'law':<4} {'N':>3} {'q':>2} {'r':>3} {'tvd':>12} {'bound':>12}  result")
        for row in rows:
            print(
                f"{row.law.value:<4} {row.domain_size:>3} {row.tracked:>2} {row.rounds:>3} "
                f"{_fmt(row.tvd):>12} {_fmt(row.bound):>12}  {'pass' if row.ok else 'fail'}"
            )
        failures = sum(not row.ok for row in rows)
        print(f"{len(rows)} rows, {failures} violations")
    return 1 if any(not row.ok for row in rows) else 0


def _cmd_shuffle(args) -> int:
    law = GroupLaw.XOR if args.xor else GroupLaw.MOD_ADD
    sample = mixing.shuffle_sample(Domain(args.deck_size, law), args.rounds, args.seed)
    print(" ".join(str(p) for p in sample.permutation))
    return 0


def _cmd_vectors(args) -> int:
    sys.stdout.write(fpe.format_golden_vectors(fpe.generate_golden_vectors()))
    return 0


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.command == "encrypt":
            return _cmd_crypt(args, encrypting=True)
        if args.command == "decrypt":
            return _cmd_crypt(args, encrypting=False)
        if args.command == "bounds":
            return _cmd_bounds(args)
        if args.command == "minrounds":
            return _cmd_minrounds(args)
        if args.command == "mixlab":
            return _cmd_mixlab(args)
        if args.command == "shuffle":
            return _cmd_shuffle(args)
        if args.command == "vectors":
            return _cmd_vectors(args)
        raise AssertionError(f"unhandled command {args.command!r}")
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (DomainError, ParameterError) as exc:
        print(f"swapornot {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
