"""Command-line interface.

Every command prints one JSON record ``{command, inputs, results, stats,
version}``, except ``table --format csv``. Exact counts are written as
decimal strings and entropies with three decimals.

Exit codes: 0 success, 1 failed verification or disagreeing algorithms,
2 invalid input, 3 search stopped early with a checkpoint written.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import __version__
from .entropy import lower_bound_argmax, maxocc, maxocc_lower_bound, maxocc_upper_bound
from .genfunc import BudgetExceeded, gf_construct, gf_series, occ_table_periodic, periodic_entropy_estimate, verify_closed_forms
from .occurrence import occ_dp, occ_runs
from .search import SearchInterrupted, insertion_extend, local_search_adaptive, min_entropy_exhaustive
from .tables import MINIMAL_WORDS, published_rows, rows_to_csv
from .words import WordParseError, as_text, text_runs

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    stats: dict[str, Any] = field(default_factory=dict)
    version: str = __version__

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(
            {
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
                "stats": self.stats,
                "version": self.version,
            },
            indent=indent,
        )

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        data = json.loads(text)
        return cls(data["command"], data["inputs"], data["results"], data.get("stats", {}), data["version"])


def _bits(value: float, digits: int) -> str:
    return f"{value:.{digits}f}"


def _word(text: str) -> str:
    return as_text(text)


# -- commands ------------------------------------------------------------------

def cmd_occ(args) -> tuple[OutputRecord, int]:
    w, u = _word(args.word), _word(args.subword)
    results: dict[str, Any] = {}
    stats: dict[str, Any] = {}
    counts = {}
    for name, fn in (("dp", occ_dp), ("runs", occ_runs)):
        if args.algo in (name, "both"):
            t0 = time.perf_counter()
            counts[name] = fn(w, u)
            stats[f"{name}_seconds"] = round(time.perf_counter() - t0, 6)
    code = EXIT_OK
    if len(set(counts.values())) > 1:
        results["counts"] = {k: str(v) for k, v in counts.items()}
        results["error"] = "algorithms disagree"
        code = EXIT_FAILED
    results["count"] = str(next(iter(counts.values())))
    return OutputRecord("occ", {"word": w, "subword": u, "algo": args.algo}, results, stats), code


def cmd_maxocc(args) -> tuple[OutputRecord, int]:
    w = _word(args.word)
    if not w:
        raise CliError("maxocc needs a non-empty word")
    t0 = time.perf_counter()
    res = maxocc(w, assume_half_length=args.half_length, max_witnesses=args.max_witnesses)
    results = {
        "maxocc": str(res.maxocc),
        "witnesses": [str(u) for u in res.witnesses],
        "entropy_bits": _bits(res.entropy_bits, args.digits),
        "per_letter": _bits(res.entropy_bits / len(w), args.digits),
        "runs": len(text_runs(w)),
        "heuristic": res.heuristic,
    }
    stats = {"seconds": round(time.perf_counter() - t0, 6)}
    return OutputRecord("maxocc", {"word": w, "half_length": args.half_length}, results, stats), EXIT_OK


def cmd_bounds(args) -> tuple[OutputRecord, int]:
    n, k = args.n, args.k
    if n < 1 or k < 2:
        raise CliError("bounds needs n >= 1 and k >= 2")
    lower = maxocc_lower_bound(n, k)
    results = {
        "upper": str(maxocc_upper_bound(n)),
        "lower": f"{lower.numerator}/{lower.denominator}" if lower.denominator != 1 else str(lower.numerator),
        "lower_ceiling": str(-(-lower.numerator // lower.denominator)),
        "lower_argmax_length": lower_bound_argmax(n, k),
    }
    return OutputRecord("bounds", {"n": n, "k": k}, results), EXIT_OK


def cmd_minentropy(args) -> tuple[OutputRecord, int]:
    inputs = {"n": args.n, "threads": args.threads, "hints": not args.no_hints}
    try:
        res = min_entropy_exhaustive(
            args.n,
            workers=args.threads,
            checkpoint_path=args.checkpoint,
            resume=args.resume,
            use_hints=not args.no_hints,
            chunk_size=args.chunk_size,
            time_limit=args.time_limit,
            max_chunks=args.max_chunks,
        )
    except SearchInterrupted as exc:
        cp = exc.checkpoint
        results = {
            "interrupted": str(exc),
            "checkpoint": args.checkpoint,
            "bound": str(cp.bound),
            "completed_ranges": len(cp.ranges),
        }
        return OutputRecord("minentropy", inputs, results), EXIT_TIMEOUT
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    results = res.as_dict()
    results["min_entropy_bits"] = _bits(res.min_entropy_bits, args.digits)
    results["per_letter"] = _bits(res.min_entropy_bits / args.n, args.digits)
    code = EXIT_OK
    if args.check and args.n in MINIMAL_WORDS:
        expected = MINIMAL_WORDS[args.n][0]
        results["matches_table"] = res.min_maxocc == expected
        code = EXIT_OK if res.min_maxocc == expected else EXIT_FAILED
    return OutputRecord("minentropy", inputs, results, res.stats.as_dict()), code


def cmd_heuristic(args) -> tuple[OutputRecord, int]:
    if args.start is not None:
        start = _word(args.start)
        if not start:
            raise CliError("start word must be non-empty")
    else:
        if args.n is None or args.n < 1:
            raise CliError("give a length n >= 1 or --start")
        rng = random.Random(args.seed)
        start = "".join(rng.choice("01") for _ in range(args.n))
    t0 = time.perf_counter()
    best, value = local_search_adaptive(
        start, max_flip_rate=args.max_flip_rate, attempts_per_rate=args.attempts, rng_seed=args.seed
    )
    results = {"start": start, "word": str(best), "maxocc": str(value)}
    inputs = {"n": len(start), "seed": args.seed, "max_flip_rate": args.max_flip_rate}
    return OutputRecord("heuristic", inputs, results, {"seconds": round(time.perf_counter() - t0, 6)}), EXIT_OK


def cmd_extend(args) -> tuple[OutputRecord, int]:
    words = list(args.words)
    if args.from_file:
        with open(args.from_file, encoding="utf-8") as fh:
            words += [line.strip() for line in fh if line.strip() and not line.startswith("#")]
    words = [_word(w) for w in words]
    if not words:
        raise CliError("extend needs at least one word")
    try:
        best, value = insertion_extend(words)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    return OutputRecord("extend", {"words": words}, {"word": str(best), "maxocc": str(value)}), EXIT_OK


def cmd_gf(args) -> tuple[OutputRecord, int]:
    w, v = _word(args.w), _word(args.v)
    if not w or not v:
        raise CliError("gf needs non-empty words")
    t0 = time.perf_counter()
    try:
        gf = gf_construct(w, v)
    except BudgetExceeded as exc:
        raise CliError(str(exc)) from exc
    results: dict[str, Any] = {"gf": str(gf), "json": gf.to_json()}
    code = EXIT_OK
    M, R = args.series if args.series else (12, 12)
    if args.series:
        results["series"] = [[str(c) for c in row] for row in gf_series(gf, M, R).table]
    if args.verify:
        ok = gf_series(gf, M, R) == occ_table_periodic(w, v, M, R)
        results["verified"] = ok
        results["verified_up_to"] = [M, R]
        code = EXIT_OK if ok else EXIT_FAILED
    stats = {"seconds": round(time.perf_counter() - t0, 6)}
    return OutputRecord("gf", {"w": w, "v": v}, results, stats), code


def cmd_closed_forms(args) -> tuple[OutputRecord, int]:
    report = verify_closed_forms(args.limit)
    results = {
        "checked": report.checked,
        "ok": report.ok,
        "mismatches": [[label, m, r, str(e), str(a)] for label, m, r, e, a in report.mismatches],
    }
    return OutputRecord("closed-forms", {"limit": args.limit}, results), EXIT_OK if report.ok else EXIT_FAILED


def cmd_periodic(args) -> tuple[OutputRecord, int]:
    w, v = _word(args.w), _word(args.v)
    if not w or not v:
        raise CliError("periodic needs non-empty words")
    try:
        est = periodic_entropy_estimate(w, v, args.m)
    except (BudgetExceeded, ValueError) as exc:
        raise CliError(str(exc)) from exc
    results = {
        "r_star": est.r_star,
        "max_occ": str(est.max_occ),
        "per_letter": _bits(est.per_letter_bits, args.digits),
        "ratio": _bits(est.ratio, args.digits),
        "certified": est.certified,
    }
    return OutputRecord("periodic", {"w": w, "v": v, "m": args.m}, results), EXIT_OK


def cmd_table(args) -> tuple[str, int]:
    if not 1 <= args.start <= args.stop <= max(MINIMAL_WORDS):
        raise CliError(f"table rows range over 1..{max(MINIMAL_WORDS)}")
    rows = published_rows(args.start, args.stop)
    code = EXIT_OK
    out = []
    for row in rows:
        entry = row.as_dict(args.digits)
        if args.check:
            computed = maxocc(row.word).maxocc
            entry["computed_maxocc"] = str(computed)
            entry["ok"] = computed == row.maxocc
            if computed != row.maxocc:
                code = EXIT_FAILED
        out.append(entry)
    if args.format == "csv":
        return rows_to_csv(out), code
    record = OutputRecord("table", {"from": args.start, "to": args.stop, "check": args.check}, {"rows": out})
    return record.to_json(), code


# -- parser -----------------------------------------------------------------------

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subword-entropy", description="Subword occurrence counts and entropy of binary words.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--digits", type=int, default=3, help="decimals for entropies (default 3)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("occ", help="number of occurrences of a subword")
    p.add_argument("word")
    p.add_argument("subword")
    p.add_argument("--algo", choices=("dp", "runs", "both"), default="runs")
    p.set_defaults(func=cmd_occ)

    p = sub.add_parser("maxocc", help="most frequent subwords of a word")
    p.add_argument("word")
    p.add_argument("--half-length", action="store_true", help="only examine subwords up to half the length (heuristic)")
    p.add_argument("--max-witnesses", type=_positive, default=None)
    p.set_defaults(func=cmd_maxocc)

    p = sub.add_parser("bounds", help="upper and lower bounds on maxocc for length n")
    p.add_argument("n", type=int)
    p.add_argument("--k", type=int, default=2, help="alphabet size for the lower bound")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("minentropy", help="exhaustive minimal maxocc for length n")
    p.add_argument("n", type=int)
    p.add_argument("--threads", type=_positive, default=1, help="worker processes")
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--time-limit", type=float, default=None, help="seconds before stopping with a checkpoint")
    p.add_argument("--max-chunks", type=_positive, default=None)
    p.add_argument("--chunk-size", type=_positive, default=1024)
    p.add_argument("--no-hints", action="store_true", help="disable witness-hint pruning")
    p.add_argument("--check", action="store_true", help="fail unless the value matches the published row")
    p.set_defaults(func=cmd_minentropy)

    p = sub.add_parser("heuristic", help="adaptive bit-flip local search")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--start", default=None, help="start word instead of a random one")
    p.add_argument("--max-flip-rate", type=float, default=0.5)
    p.add_argument("--attempts", type=_positive, default=4)
    p.set_defaults(func=cmd_heuristic)

    p = sub.add_parser("extend", help="best single-letter insertion into the given words")
    p.add_argument("words", nargs="*")
    p.add_argument("--from-file", default=None, help="file with one word per line")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("gf", help="rational generating function of occ(w^m, v^r)")
    p.add_argument("w")
    p.add_argument("v")
    p.add_argument("--verify", action="store_true", help="compare the series with the exact table")
    p.add_argument("--series", nargs=2, type=int, metavar=("M", "R"))
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("closed-forms", help="check the closed forms of the periodic families")
    p.add_argument("--limit", type=int, default=20)
    p.set_defaults(func=cmd_closed_forms)

    p = sub.add_parser("periodic", help="best power of v inside w^m")
    p.add_argument("w")
    p.add_argument("v")
    p.add_argument("m", type=_positive)
    p.set_defaults(func=cmd_periodic)

    p = sub.add_parser("table", help="published minimal-entropy rows")
    p.add_argument("--from", dest="start", type=int, default=1)
    p.add_argument("--to", dest="stop", type=int, default=16)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--check", action="store_true", help="recompute maxocc of every listed word")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output, code = args.func(args)
    except WordParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = output if isinstance(output, str) else output.to_json()
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
