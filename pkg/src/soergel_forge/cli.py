"""Thin command-line client.

Each subcommand parses flags into the shared request models and dispatches
to the service handlers, in-process by default or against a running
service with --server.  Exit codes: 0 pass, 1 verification failure,
2 usage error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .service import handlers
from .service.models import (DualBasisRequest, DualBasisResponse,
                             GraphRequest, GraphResponse, HomdimRequest,
                             HomdimResponse, MorphismDump, RedwordsRequest,
                             RedwordsResponse, RunConfig, VerifyRequest,
                             VerifyResponse, ZmatRequest)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

ENDPOINTS = {
    "redwords": (handlers.redwords, RedwordsResponse),
    "graph": (handlers.graph, GraphResponse),
    "zmat": (handlers.zmat, MorphismDump),
    "verify": (handlers.run_verify, VerifyResponse),
    "homdim": (handlers.homdim, HomdimResponse),
    "dualbasis": (handlers.dualbasis, DualBasisResponse),
}


def _parse_indices(text):
    if text is None or text == "":
        return None
    return [int(t) for t in text.split(",")]


def _dispatch(server, endpoint, request_model):
    handler, response_cls = ENDPOINTS[endpoint]
    if not server:
        return handler(request_model)
    import httpx
    resp = httpx.post(f"{server.rstrip('/')}/v1/{endpoint}",
                      json=request_model.model_dump(mode="json"),
                      timeout=None)
    resp.raise_for_status()
    return response_cls.model_validate(resp.json())


def _emit_json(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def build_parser():
    p = argparse.ArgumentParser(prog="soergel-forge")
    p.add_argument("--server", default=None,
                   help="base URL of a running service (default: in-process)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_j=True):
        sp.add_argument("--n", type=int, default=4)
        if with_j:
            sp.add_argument("--J", type=str, default=None,
                            help="comma-separated parabolic indices")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--format", choices=("json", "dot", "text"),
                        default="json")
        sp.add_argument("--budget-seconds", type=float, default=None)

    sp = sub.add_parser("redwords", help="enumerate reduced expressions")
    common(sp)
    sp.add_argument("--word", type=str, default=None)

    sp = sub.add_parser("graph", help="export an expression graph")
    common(sp)
    sp.add_argument("--word", type=str, default=None)
    sp.add_argument("--conflated", action="store_true")

    sp = sub.add_parser("zmat", help="dump the source-to-sink morphism")
    common(sp)
    sp.add_argument("--which", choices=("z", "zbar"), default="z")

    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("suite", choices=("demazure", "hecke", "relations",
                                      "zidem", "aprops", "aborts", "ranks",
                                      "tj"))
    sp.add_argument("--degree-lo", type=int, default=None)
    sp.add_argument("--degree-hi", type=int, default=None)

    sp = sub.add_parser("homdim", help="Hom-space dimension table")
    common(sp, with_j=False)
    sp.add_argument("--x", type=str, default="")
    sp.add_argument("--y", type=str, default="")
    sp.add_argument("--degree-lo", type=int, default=-4)
    sp.add_argument("--degree-hi", type=int, default=4)

    sp = sub.add_parser("dualbasis", help="Frobenius dual bases for J")
    common(sp)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _run(args)
    except ValidationError as exc:
        print(f"invalid request: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _run(args):
    if args.command == "redwords":
        req = RedwordsRequest(n=args.n, J=_parse_indices(args.J),
                              word=_parse_indices(args.word))
        resp = _dispatch(args.server, "redwords", req)
        if args.format == "text":
            for w in resp.words:
                print("".join(map(str, w)))
            print(f"total {resp.count}")
        else:
            _emit_json(resp.model_dump(mode="json", by_alias=True))
        return EXIT_PASS

    if args.command == "graph":
        fmt = "dot" if args.format == "dot" else "json"
        req = GraphRequest(n=args.n, J=_parse_indices(args.J),
                           word=_parse_indices(args.word),
                           conflated=args.conflated, output_format=fmt)
        resp = _dispatch(args.server, "graph", req)
        if fmt == "dot":
            print(resp.dot)
        else:
            _emit_json(resp.model_dump(mode="json", by_alias=True))
        return EXIT_PASS

    if args.command == "zmat":
        if args.J is None:
            print("zmat requires --J", file=sys.stderr)
            return EXIT_USAGE
        req = ZmatRequest(n=args.n, J=_parse_indices(args.J),
                          which=args.which)
        resp = _dispatch(args.server, "zmat", req)
        _emit_json(resp.model_dump(mode="json", by_alias=True))
        return EXIT_PASS

    if args.command == "verify":
        window = None
        if args.degree_lo is not None and args.degree_hi is not None:
            window = (args.degree_lo, args.degree_hi)
        config = RunConfig(n=args.n, J=_parse_indices(args.J),
                           degree_window=window, seed=args.seed,
                           output_format=args.format,
                           budget_seconds=args.budget_seconds)
        req = VerifyRequest(suite=args.suite, config=config)
        resp = _dispatch(args.server, "verify", req)
        if args.format == "text":
            for c in resp.checks:
                print(f"{c['status'].upper():5s} {c['check']} "
                      f"{c['parameters']}")
            print(f"suite {resp.suite}: {resp.status}")
        else:
            _emit_json(resp.model_dump(mode="json", by_alias=True))
        if resp.status == "budget_exceeded":
            return EXIT_BUDGET
        return EXIT_PASS if resp.status == "pass" else EXIT_FAIL

    if args.command == "homdim":
        req = HomdimRequest(n=args.n, x=_parse_indices(args.x) or [],
                            y=_parse_indices(args.y) or [],
                            degree_lo=args.degree_lo,
                            degree_hi=args.degree_hi)
        resp = _dispatch(args.server, "homdim", req)
        if args.format == "text":
            print("degree  solved  predicted")
            for row in resp.rows:
                print(f"{row.degree:6d}  {row.solved:6d}  "
                      f"{row.predicted:9d}")
        else:
            _emit_json(resp.model_dump(mode="json", by_alias=True))
        return EXIT_PASS if resp.agree else EXIT_FAIL

    if args.command == "dualbasis":
        if args.J is None:
            print("dualbasis requires --J", file=sys.stderr)
            return EXIT_USAGE
        req = DualBasisRequest(n=args.n, J=_parse_indices(args.J))
        resp = _dispatch(args.server, "dualbasis", req)
        if args.format == "text":
            for row in resp.rows:
                word = "".join(map(str, row.element)) or "e"
                print(f"{word:10s} {row.basis:24s} {row.dual}")
        else:
            _emit_json(resp.model_dump(mode="json", by_alias=True))
        return EXIT_PASS

    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
