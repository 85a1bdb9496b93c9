"""Command-line front end: `condrev run` for scripts, `condrev verify` for suites."""

import argparse
import json
import pathlib
import sys

from .preorder import order_from_json
from .script import ScriptError, run_script
from .verify import SCOPES, run_suite


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="condrev", description="Iterated belief revision by conditionals."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    run = sub.add_parser("run", help="execute a revision script (file or stdin)")
    run.add_argument("script", nargs="?", default="-",
                     help="script file, or - for stdin (default)")
    run.add_argument("--json", action="store_true", help="emit a JSON report")
    run.add_argument("--figures", metavar="DIR",
                     help="also render every shown order as a PNG in DIR")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--scope", choices=SCOPES, required=True)
    verify.add_argument("--seed", type=int, default=0, metavar="U64")
    verify.add_argument("--samples", type=int, default=500,
                        help="instances for the sampled suite (default 500)")
    verify.add_argument("--json", action="store_true", help="emit a JSON report")
    verify.add_argument("--report", metavar="DIR",
                        help="write report.tsv and summary.png to DIR")
    return parser


def _cmd_run(args):
    if args.script == "-":
        source = sys.stdin.read()
    else:
        source = pathlib.Path(args.script).read_text()
    try:
        report = run_script(source, json_mode=args.json)
    except ScriptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report)
    if args.figures:
        _render_run_figures(source, args.figures)
    return 0


def _render_run_figures(source, directory):
    from . import figures
    from .logic import Alphabet

    out = pathlib.Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    data = json.loads(run_script(source, json_mode=True))
    shown = [e for e in data["outputs"] if e["command"] == "show"]
    for k, e in enumerate(shown):
        # model names list variables in declaration order, so the alphabet
        # can be recovered from any rendered model
        first = e["order"]["classes"][0][0]
        ab = Alphabet(tuple(lit.lstrip("-") for lit in first.split()))
        order = order_from_json(e["order"], ab)
        figures.save_order_figure(order, out / f"order_{k}.png",
                                  title=f"show #{k}")


def _cmd_verify(args):
    results = run_suite(args.scope, seed=args.seed, samples=args.samples)
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({
            "scope": args.scope,
            "seed": args.seed,
            "passed": ok,
            "checks": [
                {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
            ],
        }, indent=2))
    else:
        for r in results:
            print(r.line())
    if args.report:
        from . import figures

        out = pathlib.Path(args.report)
        out.mkdir(parents=True, exist_ok=True)
        rows = [
            f"{'PASS' if r.ok else 'FAIL'}\t{r.name}\t{r.detail}" for r in results
        ]
        (out / "report.tsv").write_text(
            "status\tname\tdetail\n" + "\n".join(rows) + "\n"
        )
        figures.save_suite_figure(
            results, out / "summary.png", title=f"{args.scope} (seed {args.seed})"
        )
    return 0 if ok else 1


def main(argv=None):
    args = _build_parser().parse_args(argv)
    if args.subcommand == "run":
        return _cmd_run(args)
    return _cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
