"""Command-line front end (`nnseq`).

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage error, 3 invalid input data, 4 resource guard tripped.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .canon import canonicalize
from .codec import CodecError, decode_nn, encode_nn, format_code, parse_code
from .classify import (
    ResourceGuard,
    default_workers,
    enumerate_bs_canonical,
    partition_nn,
)
from .seqcore import Quadruple, from_string, make_near_normal, to_string
from .tables import TableRow, table1_rows
from .transform import OrbitSizeExceeded, orbit_bfs

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3
EXIT_RESOURCE = 4


def _print_quadruple(q: Quadruple):
    for name, s in zip("ABCD", (q.a, q.b, q.c, q.d)):
        print(f"{name} = {to_string(s)}")


def _cmd_decode(args) -> int:
    q = decode_nn(parse_code(args.code))
    _print_quadruple(q)
    args._counts = {"sequences": 4}
    return EXIT_OK


def _cmd_encode(args) -> int:
    q = make_near_normal(
        from_string(args.a), from_string(args.c), from_string(args.d)
    )
    print(format_code(encode_nn(q)))
    return EXIT_OK


def _cmd_canon(args) -> int:
    q = decode_nn(parse_code(args.code))
    witness = canonicalize(q)
    print(format_code(encode_nn(witness.result)))
    if witness.moves:
        print("moves:", " ".join(witness.moves))
    return EXIT_OK


def _cmd_verify_table(args) -> int:
    if args.table:
        rows = _load_table_file(args.table, args.n)
    else:
        rows = table1_rows(args.n)
    from .tables import TableReport, verify_row

    report = TableReport([verify_row(r) for r in rows])
    args._counts = {"rows": report.total, "failures": len(report.failures)}
    print(report.summary())
    for r in report.failures:
        print(f"FAIL n={r.row.n} row {r.row.index} {r.row.code}: "
              + ", ".join(r.failed_checks()))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def _load_table_file(path: str, n: int | None) -> list:
    with open(path, newline="") as f:
        rows = [
            TableRow(
                n=int(rec["n"]),
                index=int(rec["index"]),
                ab_code=rec["ab_code"],
                cd_code=rec["cd_code"],
                sums=tuple(int(rec[k]) for k in ("a", "b", "c", "d")),
                alt_sums=tuple(int(rec[k]) for k in ("a*", "b*", "c*", "d*")),
            )
            for rec in csv.DictReader(f)
        ]
    if n is not None:
        rows = [r for r in rows if r.n == n]
        if not rows:
            raise ValueError(f"no rows for n={n} in {path}")
    return rows


def _enumerate_payload(n: int, level: str, workers: int) -> dict:
    bs_reps = enumerate_bs_canonical(n, workers=workers)
    payload: dict = {"n": n, "level": level, "counts": {"bs": len(bs_reps)}}
    if level == "bs":
        payload["codes"] = bs_reps
    else:
        records = partition_nn(bs_reps)
        payload["counts"]["nn"] = len(records)
        payload["classes"] = [
            {
                "id": rec.nn_class_id,
                "ab": rec.representative.split(";")[0],
                "cd": rec.representative.split(";")[1],
                "members_bs": list(rec.members_bs),
                "sums": list(rec.sums),
                "alt_sums": list(rec.alt_sums),
            }
            for rec in records
        ]
    return payload


def _enumerate_csv(payload: dict) -> str:
    out = io.StringIO()
    w = csv.writer(out)
    if payload["level"] == "bs":
        w.writerow(["n", "index", "ab_code", "cd_code"])
        for i, code in enumerate(payload["codes"], start=1):
            ab, cd = code.split(";")
            w.writerow([payload["n"], i, ab, cd])
    else:
        w.writerow(
            ["class_id", "n", "ab_code", "cd_code",
             "a", "b", "c", "d", "a*", "b*", "c*", "d*", "members_bs"]
        )
        for cls in payload["classes"]:
            w.writerow(
                [cls["id"], payload["n"], cls["ab"], cls["cd"],
                 *cls["sums"], *cls["alt_sums"], " ".join(cls["members_bs"])]
            )
    return out.getvalue()


def _cmd_enumerate(args) -> int:
    workers = args.threads if args.threads else default_workers()
    payload = _enumerate_payload(args.n, args.level, workers)
    args._counts = dict(payload["counts"])
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = _enumerate_csv(payload)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    counts = payload["counts"]
    if args.out:
        msg = f"n={args.n}: {counts['bs']} BS classes"
        if "nn" in counts:
            msg += f", {counts['nn']} NN classes"
        print(msg, file=sys.stderr)
    return EXIT_OK


def _cmd_orbit(args) -> int:
    q = decode_nn(parse_code(args.code))
    orbit = orbit_bfs(q, moves=args.moves, max_size=args.max)
    args._counts = {"orbit": len(orbit)}
    members = [
        {"a": t[0], "b": t[1], "c": t[2], "d": t[3]}
        for t in sorted(
            (to_string(m.a), to_string(m.b), to_string(m.c), to_string(m.d))
            for m in orbit
        )
    ]
    json.dump(
        {"code": args.code, "moves": args.moves, "size": len(orbit),
         "members": members},
        sys.stdout, indent=2,
    )
    print()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nnseq",
        description="Encode, canonicalize, enumerate and verify near-normal sequences.",
    )
    p.add_argument("--manifest", metavar="PATH",
                   help="write a JSON run manifest to PATH")
    p.add_argument("--version", action="version", version=f"nnseq {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decode", help="decode a code string to four sequences")
    d.add_argument("--code", required=True)
    d.set_defaults(func=_cmd_decode)

    e = sub.add_parser("encode", help="encode sequences (B is derived from A)")
    e.add_argument("--a", required=True, help="A as a +/- string")
    e.add_argument("--c", required=True)
    e.add_argument("--d", required=True)
    e.set_defaults(func=_cmd_encode)

    c = sub.add_parser("canon", help="canonicalize a near-normal quadruple")
    c.add_argument("--code", required=True)
    c.set_defaults(func=_cmd_canon)

    v = sub.add_parser("verify-table", help="recheck the embedded table")
    v.add_argument("--n", type=int)
    v.add_argument("--table", help="CSV file to verify instead of the embedded table")
    v.set_defaults(func=_cmd_verify_table)

    en = sub.add_parser("enumerate", help="exhaustively enumerate classes")
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--level", choices=("bs", "nn"), default="nn")
    en.add_argument("--out", help="output path (default stdout)")
    en.add_argument("--threads", type=int,
                    help="worker processes (default $NNSEQ_THREADS or 1)")
    en.add_argument("--format", choices=("json", "csv"), default="json")
    en.set_defaults(func=_cmd_enumerate)

    o = sub.add_parser("orbit", help="BFS closure under group generators or NN moves")
    o.add_argument("--code", required=True)
    o.add_argument("--moves", choices=("g", "nn"), default="g")
    o.add_argument("--max", type=int, default=4096)
    o.set_defaults(func=_cmd_orbit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.time()
    try:
        status = args.func(args)
    except ResourceGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_RESOURCE
    except OrbitSizeExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_RESOURCE
    except (CodecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_BAD_INPUT
    if args.manifest:
        manifest = {
            "command": args.command,
            "parameters": {
                k: v for k, v in vars(args).items()
                if k not in ("func", "manifest", "command") and v is not None
            },
            "threads": getattr(args, "threads", None) or default_workers(),
            "wall_time_s": round(time.time() - start, 3),
            "result_counts": getattr(args, "_counts", {}),
            "exit_status": status,
            "version": __version__,
        }
        with open(args.manifest, "w") as f:
            json.dump(manifest, f, indent=2)
            f.write("\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
