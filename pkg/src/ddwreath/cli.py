"""Command line interface.

Exit codes: 0 success, 2 usage error, 3 domain rejection, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import certificate
from .construction import certify, describe_rejection
from .errors import DomainError, VerificationError
from .singer import build_plane, singer_dd
from .usefulpairs import UsefulPair, certify as classify_pair, near_misses, search, to_csv, to_json

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4


def _at_least(lo: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if value < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {value}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ddwreath", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("useful-pairs", help="tabulate useful pairs [n, c]")
    p.add_argument("--n-max", type=_at_least(2), required=True)
    p.add_argument("--c-max", type=_at_least(2), required=True)
    p.add_argument("--near-misses", action="store_true", help="also list pairs failing only k >= 2n")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", help="write to a file instead of stdout")

    p = sub.add_parser("construct", help="build and certify the design of a useful pair")
    p.add_argument("--n", type=_at_least(2), required=True)
    p.add_argument("--c", type=_at_least(2), required=True)
    p.add_argument("--out", help="certificate path (JSON)")
    p.add_argument("--verbose", action="store_true", help="print every check")

    p = sub.add_parser("singer", help="analyse PG(2,q) with a Singer-cycle partition")
    p.add_argument("--q", type=_at_least(2), required=True)
    p.add_argument("--c", type=_at_least(1), required=True)
    p.add_argument("--d", type=_at_least(1), required=True)
    p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("verify", help="re-run every check recorded in a certificate")
    p.add_argument("--cert", required=True)
    p.add_argument("--verbose", action="store_true")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_useful_pairs(args) -> int:
    pairs = search(args.n_max, args.c_max)
    misses = []
    if args.near_misses:
        for n in range(2, args.n_max + 1):
            misses.extend(near_misses(n, args.c_max))
    if args.format == "csv":
        text = to_csv(pairs)
        if misses:
            text += "\n# near-misses (k < 2n)\n" + to_csv(misses)
    elif args.format == "json":
        if misses:
            text = json.dumps(
                {
                    "useful_pairs": json.loads(to_json(pairs)),
                    "near_misses": [dict(zip("nckd", m.as_row())) for m in misses],
                },
                indent=2,
            )
        else:
            text = to_json(pairs)
        text += "\n"
    else:
        lines = [f"{'n':>3} {'c':>7} {'k':>5} {'d':>6}"]
        lines += [f"{p.n:>3} {p.c:>7} {p.k:>5} {p.d:>6}" for p in pairs]
        lines.append(f"{len(pairs)} useful pairs with n <= {args.n_max}, c <= {args.c_max}")
        if misses:
            lines.append("near-misses (k < 2n): " + ", ".join(str(list(m.as_row())) for m in misses))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    found = classify_pair(args.n, args.c)
    if not isinstance(found, UsefulPair):
        print(f"[{args.n},{args.c}] rejected: {describe_rejection(args.n, args.c)}", file=sys.stderr)
        return EXIT_DOMAIN
    cert = certify(found, raise_on_failure=False)
    if args.out:
        certificate.write(cert, args.out)
    print(cert.summary_line())
    if args.verbose:
        print(cert.summary())
        print(cert.report.summary())
    if not cert.ok:
        print(cert.report.summary(), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_singer(args) -> int:
    try:
        plane = build_plane(args.q)
    except DomainError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN
    if args.c * args.d != plane.v or args.c < 2 or args.d < 2:
        print(f"need c*d = q^2+q+1 = {plane.v} with c, d >= 2", file=sys.stderr)
        return EXIT_DOMAIN
    rep = plane.verify()
    analysis = singer_dd(plane, args.c, args.d)
    rep.extend(analysis.report)
    print(f"PG(2,{args.q}): 2-({plane.v},{plane.k},1) " + ("verified" if rep["plane.lambda_one"].ok else "FAILED"))
    print(analysis.summary())
    print(f"PairRank(H)={analysis.H_orbitals.pair_rank}, PairRank(K)={analysis.K_orbitals.pair_rank}")
    if args.verbose:
        print(rep.summary())
    if not rep.ok:
        print(rep.summary(), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        rep = certificate.verify_file(args.cert)
    except (OSError, ValueError) as exc:
        print(f"cannot read certificate: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.verbose:
        print(rep.summary())
    if not rep.ok:
        print(rep.summary(), file=sys.stderr)
        print("certificate INVALID")
        return EXIT_VERIFY
    print(f"certificate OK ({len(rep.checks)} checks)")
    return EXIT_OK


COMMANDS = {
    "useful-pairs": cmd_useful_pairs,
    "construct": cmd_construct,
    "singer": cmd_singer,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except VerificationError as exc:
        print(exc.report.summary(), file=sys.stderr)
        return EXIT_VERIFY
    except DomainError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
