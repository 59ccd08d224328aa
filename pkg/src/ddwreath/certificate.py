"""JSON certificates for constructed designs, and their offline re-verification.

Integers are written as decimal strings.  Base-block points are written as
``[token, class]`` where the token is ``"0"`` for the zero element and
``"zeta^j"`` for the nonzero element with discrete logarithm ``j``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .construction import DesignCertificate, certify
from .errors import DomainError
from .gf import field_new
from .report import Report, check

FORMAT = "ddwreath-design-certificate"
VERSION = 1


def block_tokens(cert: DesignCertificate) -> list[list[str]]:
    F = cert.design.field
    return [
        ["0" if x == 0 else f"zeta^{F.dlog(x)}", str(j)]
        for x, j in sorted(cert.design.base_block, key=lambda p: (p[1], p[0]))
    ]


def to_document(cert: DesignCertificate) -> dict[str, Any]:
    d = cert.design
    counts = cert.counts
    return {
        "format": FORMAT,
        "version": VERSION,
        "pair": {"n": str(d.n), "c": str(d.c), "k": str(d.k), "d": str(d.d)},
        "field": {k: (v if isinstance(v, list) else str(v)) for k, v in d.field.describe().items()},
        "H_generators": d.H_gens.to_lists(),
        "base_block": block_tokens(cert),
        "parameters": {
            "v": str(d.v),
            "k": str(d.k),
            "lambda": str(counts.lam),
            "b": str(counts.b),
            "r": str(counts.r),
            "H_order": str(counts.H_order),
            "G_order": str(counts.group_order),
            "G_B_order": str(counts.stabilizer),
        },
        "dd": None if cert.dd is None else {"m": str(cert.dd.m), "n": str(cert.dd.n)},
        "ranks": {
            "H": {"rank": str(cert.H_rank), "pair_rank": str(cert.H_pair_rank)},
            "K": {"rank": str(cert.K_rank), "pair_rank": str(cert.K_pair_rank), "source": cert.K_source},
        },
        "checks": cert.report.to_list(),
        "summary": cert.summary(),
    }


def write(cert: DesignCertificate, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_document(cert), indent=2) + "\n")


def read(path: str | Path) -> dict[str, Any]:
    return json.loads(Path(path).read_text())


def verify_document(doc: dict[str, Any]) -> Report:
    """Rebuild everything from the recorded (n, c) and compare with the document."""
    rep = Report()
    try:
        if doc.get("format") != FORMAT:
            raise DomainError(f"unknown certificate format {doc.get('format')!r}")
        n, c = int(doc["pair"]["n"]), int(doc["pair"]["c"])
        p, a = int(doc["field"]["p"]), int(doc["field"]["a"])
        F = field_new(p, a)
        block = []
        for token, j in doc["base_block"]:
            if token == "0":
                x = 0
            elif token.startswith("zeta^"):
                x = F.zeta_pow(int(token[len("zeta^"):]))
            else:
                raise ValueError(f"bad point token {token!r}")
            block.append((x, int(j)))
    except (KeyError, TypeError, ValueError) as exc:
        rep.add(check("certificate.parse", False, error=str(exc)))
        return rep
    rep.add(check("certificate.field_order", F.c == c, p=p, a=a, c=c))
    rep.add(
        check(
            "certificate.field",
            list(F.poly) == [int(x) for x in doc["field"]["reduction_polynomial"]]
            and F.zeta == int(doc["field"]["zeta"]),
            zeta=F.zeta,
        )
    )
    try:
        cert = certify((n, c), block=block, raise_on_failure=False)
    except DomainError as exc:
        rep.add(check("certificate.pair", False, error=str(exc)))
        return rep
    rep.extend(cert.report)
    fresh = to_document(cert)
    for key in ("pair", "parameters", "dd", "ranks", "H_generators"):
        rep.add(check(f"certificate.{key}", fresh[key] == doc.get(key), key=key))
    return rep


def verify_file(path: str | Path) -> Report:
    return verify_document(read(path))
