"""
Command line interface: `braid-garside <command> -n N -p old|new WORD ...`

Exit codes: 0 on success, 1 when a computation fails (a cap is exceeded or a reproduced
example does not match), 2 on input errors.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional, TypedDict

from . import conjugacy, normalform, words
from .factors import EnumerationCapExceeded
from .generators import families
from .generators.random_words import generate_words
from .stores import BoundCheckResult, ReproduceResult, export
from .stores.sss_async import DEFAULT_SSS_CAP
from .words import IndexOutOfRange, PresentationMismatch, WordSyntaxError

log = logging.getLogger(__name__)

EXIT_OK, EXIT_COMPUTATION, EXIT_INPUT = 0, 1, 2


class CliConfig(TypedDict):
    n: int
    presentation: words.Presentation
    output: str
    sss_cap: int
    seed: int
    loglevel: str


def _config(args: argparse.Namespace) -> CliConfig:
    n = getattr(args, "n", None)
    if n is not None and n < 2:
        raise IndexOutOfRange(f"braid index must be at least 2, got {n}")
    if args.cap < 1:
        raise ValueError(f"--cap must be at least 1, got {args.cap}")
    return {
        "n": n,
        "presentation": words.Presentation(args.presentation),
        "output": "json" if args.json else "text",
        "sss_cap": args.cap,
        "seed": args.seed,
        "loglevel": args.loglevel,
    }


def _parse(config: CliConfig, text: str) -> words.BraidWord:
    return words.parse(text, config["n"], config["presentation"])


def _emit(config: CliConfig, payload: dict, text: str):
    if config["output"] == "json":
        print(json.dumps(payload))
    else:
        print(text)


def cmd_normal_form(config: CliConfig, word_text: str) -> int:
    nf = normalform.normalize(_parse(config, word_text))
    _emit(config, normalform.to_json(nf), normalform.to_text(nf))
    return EXIT_OK


def cmd_invariants(config: CliConfig, word_text: str, csv_path: Optional[str] = None) -> int:
    w = _parse(config, word_text)
    inv = conjugacy.class_invariants(
        normalform.normalize(w), cap=config["sss_cap"], loglevel=config["loglevel"]
    )
    report = conjugacy.to_report(inv, word=w)
    text = "\n".join(
        f"{key}: {' '.join(map(str, value)) if isinstance(value, list) else value}"
        for key, value in report.items()
    )
    _emit(config, report, text)
    if csv_path:
        export.to_csv([report], csv_path)
    return EXIT_OK


def cmd_conjugate(config: CliConfig, first_text: str, second_text: str) -> int:
    v, w = _parse(config, first_text), _parse(config, second_text)
    verdict = conjugacy.are_conjugate(v, w, cap=config["sss_cap"])
    nv, nw = normalform.normalize(v), normalform.normalize(w)
    rv, rw = conjugacy.sss_representative(nv), conjugacy.sss_representative(nw)
    payload = {
        "conjugate": verdict,
        "exponent_sums": [normalform.exponent_sum(nv), normalform.exponent_sum(nw)],
        "representatives": [normalform.to_text(rv), normalform.to_text(rw)],
    }
    text = "\n".join(
        [
            "true" if verdict else "false",
            f"exponent sums: {payload['exponent_sums'][0]} {payload['exponent_sums'][1]}",
            f"super summit representatives: {payload['representatives'][0]}"
            f" ; {payload['representatives'][1]}",
        ]
    )
    _emit(config, payload, text)
    return EXIT_OK


def cmd_cycle(config: CliConfig, word_text: str, profile: bool, backwards: bool = False) -> int:
    nf = normalform.normalize(_parse(config, word_text))
    if profile:
        steps = conjugacy.decycling_profile(nf) if backwards else conjugacy.cycling_profile(nf)
        key = "sup" if backwards else "inf"
        _emit(
            config,
            {"profile": [{"step": step, key: value} for step, value in steps]},
            "\n".join(f"{step} {value}" for step, value in steps),
        )
        return EXIT_OK
    image = conjugacy.decycle(nf) if backwards else conjugacy.cycle(nf)
    _emit(config, normalform.to_json(image), normalform.to_text(image))
    return EXIT_OK


def cmd_sss(config: CliConfig, word_text: str) -> int:
    nf = normalform.normalize(_parse(config, word_text))
    sss = conjugacy.sss_enumerate(nf, cap=config["sss_cap"], loglevel=config["loglevel"])
    orbits = conjugacy.sss_orbits(sss)
    payload = {
        "inf": sss.inf_max,
        "sup": sss.sup_min,
        "size": len(sss),
        "orbit_sizes": orbits,
        "members": [normalform.to_text(m) for m in sss],
    }
    text = "\n".join(
        [f"inf {sss.inf_max} sup {sss.sup_min} size {len(sss)} orbits {orbits}"]
        + payload["members"]
    )
    _emit(config, payload, text)
    return EXIT_OK


def cmd_convert(config: CliConfig, word_text: str, target: str) -> int:
    converted = words.convert(_parse(config, word_text), words.Presentation(target))
    _emit(
        config,
        {"n": converted.n, "presentation": converted.presentation.value, "word": str(converted)},
        str(converted),
    )
    return EXIT_OK


def cmd_reproduce_paper(
    config: CliConfig, samples: int = 0, csv_path: Optional[str] = None
) -> int:
    """Runs the worked examples, the exhaustive bound checks and, optionally, a randomized
    check of the cycling bound"""
    results: List[ReproduceResult] = []
    for case in families.generate_cases():
        result = families.run_case(case)
        results.append(result)
        if config["output"] == "text":
            print(
                f"{'PASS' if result['passed'] else 'FAIL'} {result['family']} "
                f"{result['presentation']} n={result['n']} "
                f"expected={result['expected_cyclings']} observed={result['observed_cyclings']}"
            )

    bounds: List[BoundCheckResult] = []
    for check in families.generate_bound_checks():
        bounds.append(check)
        if config["output"] == "text":
            print(
                f"{'PASS' if check['passed'] else 'FAIL'} {check['name']} "
                f"{check['presentation']} n={check['n']} bound={check['bound']} "
                f"worst={check['worst']} checked={check['checked']}"
            )

    violations = 0
    if samples:
        corpus = generate_words(
            n=[3, 4, 5, 6],
            presentation=["old", "new"],
            length=(1, 12),
            nb_samples=samples,
            seed=config["seed"],
        )
        for w in corpus:
            step = families.bound_violation(normalform.normalize(w))
            if step is not None:
                violations += 1
                log.error(f"{w.presentation.value} B_{w.n} '{w}': first increase after {step}")
        if config["output"] == "text":
            verdict = "FAIL" if violations else "PASS"
            print(f"{verdict} bound {samples} words, {violations} violations")

    if config["output"] == "json":
        payload = {"cases": results, "bounds": bounds, "samples": samples, "violations": violations}
        print(json.dumps(payload))
    if csv_path:
        export.to_csv(results, csv_path, record_type=ReproduceResult)

    failed = violations or not all(record["passed"] for record in results + bounds)
    return EXIT_COMPUTATION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", "--presentation", choices=["old", "new"], default="old")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--cap", type=int, default=DEFAULT_SSS_CAP, help="super summit set cap")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument(
        "--loglevel", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
    )

    with_n = argparse.ArgumentParser(add_help=False, parents=[common])
    with_n.add_argument("-n", type=int, required=True, help="braid index")

    parser = argparse.ArgumentParser(
        prog="braid-garside", description="Garside normal forms and conjugacy invariants"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[with_n], help="normal form")
    p.add_argument("word")
    p = sub.add_parser("inv", parents=[with_n], help="conjugacy class invariants")
    p.add_argument("word")
    p.add_argument("--csv", help="also write the report to a csv file")
    p = sub.add_parser("conj", parents=[with_n], help="conjugacy test")
    p.add_argument("word")
    p.add_argument("other")
    for name in ("cycle", "decycle"):
        p = sub.add_parser(name, parents=[with_n], help=f"{name} once, or print the profile")
        p.add_argument("word")
        p.add_argument("--profile", action="store_true")
    p = sub.add_parser("sss", parents=[with_n], help="super summit set")
    p.add_argument("word")
    p = sub.add_parser("convert", parents=[with_n], help="rewrite in the other presentation")
    p.add_argument("word")
    p.add_argument("--to", choices=["old", "new"], default=None)
    p = sub.add_parser("reproduce", parents=[common], help="run the worked examples")
    p.add_argument("--samples", type=int, default=0, help="random words for the bound check")
    p.add_argument("--csv", help="write the results to a csv file")
    return parser


def _dispatch(args: argparse.Namespace, config: CliConfig) -> int:
    if args.command == "nf":
        return cmd_normal_form(config, args.word)
    if args.command == "inv":
        return cmd_invariants(config, args.word, csv_path=args.csv)
    if args.command == "conj":
        return cmd_conjugate(config, args.word, args.other)
    if args.command in ("cycle", "decycle"):
        return cmd_cycle(config, args.word, args.profile, backwards=args.command == "decycle")
    if args.command == "sss":
        return cmd_sss(config, args.word)
    if args.command == "convert":
        target = args.to or config["presentation"].other.value
        return cmd_convert(config, args.word, target)
    return cmd_reproduce_paper(config, samples=args.samples, csv_path=args.csv)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.loglevel, format="%(levelname)s %(name)s: %(message)s")

    try:
        config = _config(args)
        return _dispatch(args, config)
    except (conjugacy.SSSCapExceeded, conjugacy.SSSClosureError, EnumerationCapExceeded) as e:
        partial = getattr(e, "partial_count", None)
        suffix = "" if partial is None else f" ({partial} members found)"
        print(f"error: {e}{suffix}", file=sys.stderr)
        return EXIT_COMPUTATION
    except (WordSyntaxError, IndexOutOfRange, PresentationMismatch, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
