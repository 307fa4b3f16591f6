"""
Command line: ``verify`` suites, ``emit`` presentations, ``compute`` objects.

Exit status is 0 iff every executed check passed, 1 on a failed check
and 2 on a usage error (bad suite, bad parameters, bounds over the caps).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .amalgam import BoundsError, build_presentation
from .examples import DEFAULT_SEED, SUITES, compute_pi3_moore, run_suite

CAPS = {"n_max": 6, "k_max": 6, "depth": 2, "weight": 4, "n": 6, "k": 6}
UNSAFE_ENV = "BRUNNIAN_UNSAFE_BOUNDS"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _unsafe(args) -> bool:
    return args.unsafe_bounds or os.environ.get(UNSAFE_ENV, "") not in ("", "0")


def _check_caps(args, names):
    for name in names:
        v = getattr(args, name, None)
        if v is None:
            continue
        if v < 0 or (name not in ("depth",) and v < 1):
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if v > CAPS[name] and not _unsafe(args):
            raise UsageError(
                f"--{name.replace('_', '-')}={v} exceeds the cap {CAPS[name]}; "
                f"pass --unsafe-bounds or set {UNSAFE_ENV}=1 to override"
            )


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from: all, " + ", ".join(sorted(SUITES)))
    _check_caps(args, ("n_max", "k_max", "depth", "weight"))
    bounds = {k: getattr(args, k) for k in ("n_max", "k_max", "depth", "weight", "samples") if getattr(args, k) is not None}
    rep = run_suite(args.suite, seed=args.seed, **bounds)
    if args.out:
        _write(rep.to_json(), args.out)
    if args.format == "json":
        sys.stdout.write(rep.to_json())
    else:
        sys.stdout.write(rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# emit


def cmd_emit(args) -> int:
    _check_caps(args, ("n", "k", "depth"))
    alpha = args.alpha
    if alpha is not None and alpha.lstrip("-").isdigit():
        alpha = int(alpha)
    try:
        doc = build_presentation(args.target, args.n, k=args.k, q=args.q, depth=args.depth, alpha=alpha,
                                 max_relators=10 ** 9 if _unsafe(args) else 200_000)
    except BoundsError as e:
        raise UsageError(str(e)) from e
    except ValueError as e:
        raise UsageError(str(e)) from e
    _write(doc.render(args.format), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# compute


def _alpha_bracket_text(k: int) -> str:
    entries = ["x[1]^-1"] + [f"x[{i}] x[{i + 1}]^-1" for i in range(1, k - 2)] + [f"x[{k - 2}]"]
    s = entries[0]
    for e in entries[1:]:
        s = f"[{s}, {e}]"
    return s


def _compute(args) -> dict:
    from .braid import embed_word, full_twist
    from .nilpotent import magnus_expand
    from .simplicial import alpha_k, as_x_text, theta, theta_image, y_cables
    from .words import parse_word

    obj = args.object
    if obj == "alpha_k":
        if args.k is None or args.k < 4:
            raise UsageError("alpha_k needs --k >= 4")
        w = alpha_k(args.k)
        braid = theta(w)
        return {"bracket": _alpha_bracket_text(args.k), "word": as_x_text(w), "braid": str(braid),
                "strands": args.k - 1, "letters": len(braid), "crossings": len(embed_word(braid, args.k - 1))}
    if obj == "y-cables":
        if args.k is None or args.k < 4 or args.n is None or args.n < args.k - 1:
            raise UsageError("y-cables needs --k >= 4 and --n >= k-1")
        return {"cables": [str(y) for y in y_cables(args.k, args.n)]}
    if obj == "theta-image":
        if args.n is None or args.n < 1:
            raise UsageError("theta-image needs --n >= 1")
        return {"images": [str(w) for w in theta_image(args.n)]}
    if obj == "magnus":
        if args.word is None:
            raise UsageError("magnus needs --word")
        if args.cap is None or args.cap < 1:
            raise UsageError("magnus needs --cap >= 1")
        try:
            w = parse_word(args.word)
        except ValueError as e:
            raise UsageError(str(e)) from e
        return {"word": str(w), "series": str(magnus_expand(w, args.cap, args.modulus or 0))}
    if obj == "pi3-moore":
        if args.q is None or args.q < 2:
            raise UsageError("pi3-moore needs --q >= 2")
        rep = compute_pi3_moore(args.q)
        witness = rep.checks[1].get("witness", {})
        return {"invariant_factors": witness.get("invariant_factors"), "order_x1x2": rep.checks[0]["witness"]["order"],
                "passed": rep.passed}
    if obj == "full-twist":
        if args.n is None or args.n < 2:
            raise UsageError("full-twist needs --n >= 2")
        return {"braid": str(full_twist(args.n))}
    raise UsageError(f"unknown object {obj!r}")


def cmd_compute(args) -> int:
    _check_caps(args, ("n", "k"))
    value = _compute(args)
    if args.format == "json":
        params = {k: getattr(args, k) for k in ("k", "n", "q", "word", "cap", "modulus") if getattr(args, k) is not None}
        text = json.dumps({"object": args.object, "params": params, "value": value}, indent=2, sort_keys=True) + "\n"
    else:
        if args.object == "pi3-moore":
            text = f"{value['invariant_factors']}\n"
        elif args.object == "magnus":
            text = value["series"] + "\n"
        elif args.object == "alpha_k":
            text = f"{value['bracket']}\nbraid ({value['strands']} strands): {value['braid']}\n"
        else:
            items = next(iter(value.values()))
            text = "\n".join(items) + "\n" if isinstance(items, list) else f"{items}\n"
    _write(text, args.out)
    return EXIT_OK if value.get("passed", True) else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brunnian", description="Braid and simplicial group models of sphere and Moore space homotopy.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats):
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", metavar="PATH")
        sp.add_argument("--unsafe-bounds", action="store_true", help=f"lift the size caps (also {UNSAFE_ENV}=1)")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, help="suite name or 'all'")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--n-max", type=int, dest="n_max")
    v.add_argument("--k-max", type=int, dest="k_max")
    v.add_argument("--depth", type=int)
    v.add_argument("--weight", type=int)
    v.add_argument("--samples", type=int)
    common(v, ("text", "json"))
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("emit", help="emit a presentation")
    e.add_argument("--target", required=True, choices=("sphere_S2", "sphere", "moore2", "moore_k"))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int)
    e.add_argument("--q", type=int)
    e.add_argument("--alpha", help="alpha for k=3: a power of A[1,2] or a word")
    e.add_argument("--depth", type=int, default=0)
    common(e, ("text", "json", "cas"))
    e.set_defaults(func=cmd_emit)

    c = sub.add_parser("compute", help="compute a single object")
    c.add_argument("object", choices=("alpha_k", "y-cables", "theta-image", "magnus", "pi3-moore", "full-twist"))
    c.add_argument("--k", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--word")
    c.add_argument("--cap", type=int, default=2)
    c.add_argument("--modulus", type=int)
    common(c, ("text", "json"))
    c.set_defaults(func=cmd_compute)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"brunnian: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # reader went away (e.g. piped into head)
        sys.stdout = open(os.devnull, "w")
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
