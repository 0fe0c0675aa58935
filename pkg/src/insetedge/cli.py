"""Command-line surface: JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 domain error (error name in the payload), 2 usage
error.  Exact rationals are emitted as "p/q" strings with a decimal
convenience field.  Output is deterministic for fixed inputs and seeds;
--threads never changes results (scoring merges are order-independent, and
the current implementation evaluates sequentially regardless).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .bounds import audit, build_family_tree
from .counting import OpCounter
from .delta import ad_prime, delta_direct, delta_term_count
from .errors import InsetEdgeError
from .matrixform import delta_via_matrix
from .oracle import SimpleGraph, delta_oracle, wiener_brute
from .randgen import Corpus, exact_leaf_mean, leaf_stats
from .search import best_edge, pruning_ratio
from .sweep import sweep_path
from .tree import Tree, anatomize, parse_tree, path_between, serialize_tree


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _load(path: str) -> Tree:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tree(fh.read())


def _record_payload(rec) -> dict:
    return {
        "x": rec.x,
        "y": rec.y,
        "k": rec.k,
        "d_prime": rec.d_prime,
        "ad_prime": _frac(rec.ad_prime),
        "ad_prime_decimal": float(rec.ad_prime),
    }


def _cmd_wiener(args) -> dict:
    tree = _load(args.file)
    d = wiener_brute(SimpleGraph.from_tree(tree))
    pairs = tree.n * (tree.n - 1) // 2
    ad = Fraction(d, pairs) if pairs else Fraction(0)
    return {
        "command": "wiener",
        "file": args.file,
        "n": tree.n,
        "D": d,
        "AD": _frac(ad),
        "AD_decimal": float(ad),
    }


def _cmd_delta(args) -> dict:
    tree = _load(args.file)
    x, y = args.edge
    if args.method == "oracle":
        d = delta_oracle(tree, x, y)
        k = len(path_between(tree, x, y))
    else:
        anatomy = anatomize(tree, x, y)
        k = anatomy.k
        d = delta_via_matrix(anatomy) if args.method == "matrix" else delta_direct(anatomy)
    ad = ad_prime(d, tree.n)
    return {
        "command": "delta",
        "file": args.file,
        "method": args.method,
        "x": x,
        "y": y,
        "k": k,
        "d_prime": d,
        "ad_prime": _frac(ad),
        "ad_prime_decimal": float(ad),
    }


def _cmd_sweep(args) -> dict:
    tree = _load(args.file)
    x, y = args.path_pair
    records = sweep_path(tree, x, y)
    return {
        "command": "sweep",
        "file": args.file,
        "x": x,
        "y": y,
        "records": [_record_payload(r) for r in records],
    }


def _cmd_best(args) -> dict:
    tree = _load(args.file)
    report = best_edge(tree, args.strategy)
    return {
        "command": "best",
        "file": args.file,
        "strategy": report.strategy,
        "best_pairs": [list(p) for p in report.best_pairs],
        "best_delta": report.best_delta,
        "best_ad_prime": _frac(report.best_ad_prime),
        "best_ad_prime_decimal": float(report.best_ad_prime),
        "evaluated": report.evaluated,
        "pruned": report.pruned,
    }


def _cmd_bounds(args) -> dict:
    report = audit(args.n, args.exhaustive_limit)
    payload = report.to_dict()
    payload["command"] = "bounds"
    return payload


def _cmd_extremal(args) -> dict:
    tree, pair = build_family_tree(args.n, args.k, args.wx, args.wy, args.shape)
    anatomy = anatomize(tree, *pair)
    d = delta_direct(anatomy)
    return {
        "command": "extremal",
        "n": args.n,
        "k": args.k,
        "w_x": args.wx,
        "w_y": args.wy,
        "shape": args.shape,
        "pair": list(pair),
        "d_prime": d,
        "edge_list": serialize_tree(tree),
    }


def _cmd_random(args) -> dict:
    payload = {
        "command": "random",
        "n": args.n,
        "count": args.count,
        "seed": args.seed,
        "stats": args.stats,
    }
    if args.stats == "leaves":
        mean, se = leaf_stats(args.n, args.count, args.seed)
        payload.update(
            {
                "mean_leaves": mean,
                "stderr": se,
                "exact_mean": exact_leaf_mean(args.n),
                "asymptotic_mean": args.n / math.e,
            }
        )
    elif args.stats == "pruning":
        corpus = Corpus(n=args.n, seed=args.seed, count=args.count)
        ratios = [pruning_ratio(t) for t in corpus.trees()]
        mean = sum(ratios) / len(ratios)
        payload.update(
            {
                "mean_pruning_ratio": float(mean),
                "mean_pruning_ratio_exact": _frac(mean),
                "asymptotic_claim": 1.0 - ((math.e - 1.0) / math.e) ** 2,
            }
        )
    else:
        corpus = Corpus(n=args.n, seed=args.seed, count=args.count)
        payload["trees"] = [serialize_tree(t) for t in corpus.trees()]
    return payload


def _cmd_verify(args) -> tuple[dict, int]:
    tree = _load(args.file)
    checked = 0
    for u in range(tree.n):
        for v in range(u + 1, tree.n):
            if v in tree.adjacency[u]:
                continue
            anatomy = anatomize(tree, u, v)
            direct = delta_direct(anatomy)
            matrix = delta_via_matrix(anatomy)
            oracle = delta_oracle(tree, u, v)
            checked += 1
            if not (direct == matrix == oracle):
                return (
                    {
                        "command": "verify",
                        "file": args.file,
                        "ok": False,
                        "mismatch": {
                            "x": u,
                            "y": v,
                            "direct": direct,
                            "matrix": matrix,
                            "oracle": oracle,
                        },
                        "pairs_checked": checked,
                    },
                    1,
                )
    return (
        {"command": "verify", "file": args.file, "ok": True, "pairs_checked": checked},
        0,
    )


def _cmd_bench(args) -> dict:
    entries = []
    for n in args.sizes:
        tree = Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])
        counter = OpCounter()
        records = sweep_path(tree, 0, n - 1, counter)
        recompute = sum(delta_term_count(r.k) for r in records)
        entries.append(
            {
                "n": n,
                "k": n,
                "pairs": len(records),
                "sweep_ops": counter.ops,
                "recompute_ops": recompute,
                "ratio": recompute / counter.ops,
                "sweep_ops_per_k2": counter.ops / (n * n),
            }
        )
    return {"command": "bench", "entries": entries}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inset",
        description="Exact Wiener-index change under single shortcut-edge insertion in trees.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("INSET_THREADS", "1")),
        help="worker count hint; results never depend on it",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wiener", help="Wiener sum and average distance of a tree")
    p.add_argument("file")
    p.set_defaults(func=_cmd_wiener)

    p = sub.add_parser("delta", help="savings of one shortcut edge")
    p.add_argument("file")
    p.add_argument("-e", "--edge", nargs=2, type=int, required=True, metavar=("U", "V"))
    p.add_argument("--method", choices=("direct", "matrix", "oracle"), default="direct")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("sweep", help="incremental savings along one path")
    p.add_argument("file")
    p.add_argument("-p", "--path-pair", nargs=2, type=int, required=True, metavar=("X", "Y"))
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("best", help="optimal shortcut edge(s)")
    p.add_argument("file")
    p.add_argument("--strategy", choices=("exhaustive", "pruned", "oracle"), default="exhaustive")
    p.set_defaults(func=_cmd_best)

    p = sub.add_parser("bounds", help="audit claimed extremal bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exhaustive-limit", type=int, default=0)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("extremal", help="build an extremal-family tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--wx", type=int, required=True)
    p.add_argument("--wy", type=int, required=True)
    p.add_argument("--shape", choices=("star", "path"), default="star")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("random", help="seeded random-tree corpus and statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stats", choices=("leaves", "pruning"), default=None)
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("verify", help="cross-check direct vs matrix vs oracle on every pair")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="sweep vs recompute operation-count scaling")
    p.add_argument("--sizes", nargs="+", type=int, default=[256, 512, 1024, 2048])
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (InsetEdgeError, OSError) as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stdout,
        )
        return 1
    if isinstance(result, tuple):
        payload, code = result
    else:
        payload, code = result, 0
    print(json.dumps(payload))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
