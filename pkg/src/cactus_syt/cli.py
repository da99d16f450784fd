"""Command line interface: ``cactus-syt <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 partial completion (some
survey shapes skipped), 3 a verification found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass

from . import __version__
from .cactus import apply_word, evacuate, parse_word, verify_bk_identity, verify_cactus_relations
from .errors import CapExceeded
from .orbits import DEFAULT_PAIR_CAP, DEFAULT_TRIPLE_CAP, orbit_decompose, single_orbit_check
from .partition import Partition, parse_shapes, partitions, syt_count
from .perm import DEFAULT_GROUP_CAP, exact_group_order, fixed_points, permutation_of_word
from .survey import classify, has_skips, run_survey, write_survey_csv
from .tableau import DEFAULT_ENUM_CAP, StandardTableau, enumerate_syt, superstandard

ENV_PREFIX = "CACTUS_SYT_"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class CommandConfig:
    command: str
    fmt: str | None
    out: str | None
    threads: int
    cap_enum: int
    cap_pair: int
    cap_triple: int
    cap_group: int
    cap_survey: int | None
    fast: bool

    @classmethod
    def from_args(cls, args) -> "CommandConfig":
        def pick(flag, env, default):
            if flag is not None:
                value = flag
            elif os.environ.get(ENV_PREFIX + env):
                try:
                    value = int(os.environ[ENV_PREFIX + env])
                except ValueError:
                    raise UsageError(f"{ENV_PREFIX + env} must be an integer") from None
            else:
                value = default
            if value is not None and value < 1:
                raise UsageError(f"{env.lower()} must be positive")
            return value

        return cls(
            command=args.command,
            fmt=args.format,
            out=args.out,
            threads=pick(args.threads, "THREADS", 1),
            cap_enum=pick(args.cap_enum, "CAP_ENUM", DEFAULT_ENUM_CAP),
            cap_pair=pick(args.cap_pair, "CAP_PAIR", DEFAULT_PAIR_CAP),
            cap_triple=pick(args.cap_triple, "CAP_TRIPLE", DEFAULT_TRIPLE_CAP),
            cap_group=pick(args.cap_group, "CAP_GROUP", DEFAULT_GROUP_CAP),
            # None: the mode's own limit on n (enumeration or fast parity)
            cap_survey=pick(args.cap_survey, "CAP_SURVEY", None),
            fast=args.fast,
        )


def _shape(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _tableau(text: str) -> StandardTableau:
    try:
        return StandardTableau.from_json(text)
    except (ValueError, KeyError, TypeError) as e:
        raise argparse.ArgumentTypeError(f"bad tableau: {e}")


@contextmanager
def _output(cfg: CommandConfig):
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            yield fh
    else:
        yield sys.stdout


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# subcommands --------------------------------------------------------------------


def cmd_count(args, cfg, fh):
    N = syt_count(args.shape)
    if cfg.fmt == "json":
        print(_dump({"shape": list(args.shape.rows), "N": N}), file=fh)
    else:
        print(N, file=fh)
    return 0


def cmd_enumerate(args, cfg, fh):
    for t in enumerate_syt(args.shape, cap=cfg.cap_enum):
        print(t.to_json(), file=fh)
    return 0


def cmd_act(args, cfg, fh):
    t = args.tableau if args.tableau is not None else superstandard(args.shape)
    if args.shape is not None and t.shape != args.shape:
        raise UsageError(f"tableau has shape {t.shape}, expected {args.shape}")
    w = parse_word(args.word)
    print(apply_word(t, w).to_json(), file=fh)
    return 0


def cmd_evacuate(args, cfg, fh):
    print(evacuate(args.tableau).to_json(), file=fh)
    return 0


def _fixed_row(shape, ops, cap):
    N = syt_count(shape)
    return N, {op: fixed_points(permutation_of_word(shape, parse_word(op), cap)) for op in ops}


def cmd_fixed_points(args, cfg, fh):
    ops = [o.strip() for o in args.ops.split(",") if o.strip()]
    shapes = [args.shape] if args.shape is not None else list(partitions(args.n))
    if cfg.fmt != "json":
        print(" | ".join(["partition", "#SYT"] + ops), file=fh)
    for shape in shapes:
        N, fixed = _fixed_row(shape, ops, cfg.cap_enum)
        if cfg.fmt == "json":
            print(_dump({"shape": list(shape.rows), "N": N, "fixed": fixed}), file=fh)
        else:
            cells = [f"({shape})", str(N)] + [str(fixed[o]) for o in ops]
            print(" | ".join(cells), file=fh)
    return 0


def cmd_group_order(args, cfg, fh):
    order = exact_group_order(args.shape, cap=cfg.cap_group)
    if cfg.fmt == "json":
        print(_dump({"shape": list(args.shape.rows), "N": syt_count(args.shape),
                     "order": str(order)}), file=fh)
    else:
        print(order, file=fh)
    return 0


def cmd_orbits(args, cfg, fh):
    shapes = parse_shapes(args.shapes)
    arity = args.arity if args.arity is not None else len(shapes)
    if arity not in (1, 2, 3):
        raise UsageError("arity must be 1, 2 or 3")
    if len(shapes) != arity:
        raise UsageError(f"--arity {arity} needs {arity} shapes, got {len(shapes)}")
    if arity == 1:
        ok = single_orbit_check(shapes[0], cap=cfg.cap_enum)
        print(_dump({"shapes": [list(shapes[0].rows)], "arity": 1,
                     "total": syt_count(shapes[0]), "transitive": ok}), file=fh)
        return 0
    cap = cfg.cap_pair if arity == 2 else cfg.cap_triple
    dec = orbit_decompose(shapes, cap=cap)
    print(_dump(dec.to_dict()), file=fh)
    return 0


def cmd_classify(args, cfg, fh):
    rep = classify(args.shape, fast=cfg.fast, cap=cfg.cap_enum)
    if cfg.fmt == "json":
        print(_dump(rep.to_dict()), file=fh)
    else:
        odd = [e["generator"] for e in rep.evidence if e["parity"] == "odd"]
        line = f"({rep.shape}) N={rep.N} {rep.verdict.value}"
        if odd:
            line += " odd: " + ",".join(odd)
        print(line, file=fh)
    return 0


def cmd_survey(args, cfg, fh):
    rows = run_survey(args.n_from, args.n_to, generic_only=args.generic, fast=cfg.fast,
                      threads=cfg.threads, cap=cfg.cap_enum, timing=args.timing,
                      survey_cap=cfg.cap_survey)
    if cfg.fmt == "json":
        for r in rows:
            print(_dump(r), file=fh)
    else:
        write_survey_csv(rows, fh)
    return 2 if has_skips(rows) else 0


def _verify(args, cfg, fh, fn):
    shapes = [args.shape] if args.shape is not None else list(partitions(args.n))
    ok = True
    for shape in shapes:
        rep = fn(shape, cap=cfg.cap_enum)
        ok = ok and rep.ok
        print(_dump(rep.to_dict()), file=fh)
    return 0 if ok else 3


def cmd_verify_relations(args, cfg, fh):
    return _verify(args, cfg, fh, verify_cactus_relations)


def cmd_verify_identity(args, cfg, fh):
    return _verify(args, cfg, fh, verify_bk_identity)


# parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default=None)
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--cap-enum", type=int, default=None)
    common.add_argument("--cap-pair", type=int, default=None)
    common.add_argument("--cap-triple", type=int, default=None)
    common.add_argument("--cap-group", type=int, default=None)
    common.add_argument("--cap-survey", type=int, default=None, help="largest n a survey may reach")
    common.add_argument("--fast", action="store_true",
                        help="enumeration-free parity computation")

    parser = _Parser(prog="cactus-syt",
                     description="Cactus group action on standard Young tableaux.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("count", cmd_count, "number of SYT of a shape")
    p.add_argument("shape", type=_shape)

    p = add("enumerate", cmd_enumerate, "all SYT of a shape, one JSON object per line")
    p.add_argument("shape", type=_shape)

    p = add("act", cmd_act, "apply a generator word to a tableau")
    p.add_argument("--shape", type=_shape, default=None)
    p.add_argument("--word", required=True, help='e.g. "t2 t3 s1:4"')
    p.add_argument("--tableau", type=_tableau, default=None,
                   help="JSON tableau (default: the row-reading tableau of --shape)")

    p = add("evacuate", cmd_evacuate, "Schutzenberger involution of a tableau")
    p.add_argument("--tableau", type=_tableau, required=True)

    p = add("fixed-points", cmd_fixed_points, "fixed points of generator words")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--shape", type=_shape)
    g.add_argument("--n", type=int, help="every partition of n")
    p.add_argument("--ops", default="t3,t2,t2t4")

    p = add("group-order", cmd_group_order, "order of the cactus image in S_N")
    p.add_argument("--shape", type=_shape, required=True)

    p = add("orbits", cmd_orbits, "orbits on pairs or triples of tableaux")
    p.add_argument("--shapes", required=True, help='e.g. "3,1;3,1"')
    p.add_argument("--arity", type=int, default=None)

    p = add("classify", cmd_classify, "S_N vs A_N verdict for a shape")
    p.add_argument("shape", type=_shape)

    p = add("survey", cmd_survey, "classify every applicable shape in a range of n")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--generic", action="store_true", help="only generic shapes")
    p.add_argument("--timing", action="store_true",
                   help="fill the ms column (output is then not reproducible)")

    for name, fn in (("verify-relations", cmd_verify_relations),
                     ("verify-identity", cmd_verify_identity)):
        p = add(name, fn, "exhaustive check on SYT of a shape")
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("shape", type=_shape, nargs="?")
        g.add_argument("--n", type=int, help="every partition of n")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = CommandConfig.from_args(args)
        with _output(cfg) as fh:
            return args.func(args, cfg, fh)
    except (UsageError, ValueError, CapExceeded, OSError) as e:
        print(f"cactus-syt {args.command}: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
