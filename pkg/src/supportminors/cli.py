"""Command-line front end.

Commands: gen, solve, check, estimate, brute.  Every command is
deterministic given its flags and seed.  Machine mode (--machine) emits
line-oriented `key=value` pairs with stable keys; booleans are true/false
and vectors are comma-separated integers.

Exit codes: 0 success; 1 usage or input error; 2 computation refused by a
cap; 3 verification mismatch where assertion was requested (--assert, or a
witness file that the solver failed to recover).
"""

from __future__ import annotations

import argparse
import sys

from .errors import CapExceededError
from .estimator import ParameterSet, complexity_report, format_report
from .field import PrimeField
from .instance import (
    BRUTE_FORCE_CAP,
    brute_force_solve,
    gen_planted,
    gen_random,
    normalize_projective,
)
from .modeling import MATRIX_CELL_CAP, rank_check
from .serialization import (
    FormatError,
    load_instance,
    parse_witness,
    save_instance,
    witness_path,
    write_witness,
)
from .solver import solve_linearization
from .syzygies import (
    linear_syzygy_dim_prediction,
    submax_dim_empirical,
    submax_dim_formula,
    xonly_syzygy_dim,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1, not argparse's default 2
        raise UsageError(message)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (tuple, list)):
        return ",".join(str(v) for v in value)
    return str(value)


class _Out:
    """Uniform printer: key=value in machine mode, prose otherwise."""

    def __init__(self, machine: bool):
        self.machine = machine

    def kv(self, key, value, human=None):
        if self.machine:
            print(f"{key}={_fmt(value)}")
        else:
            print(human if human is not None else f"{key} = {_fmt(value)}")

    def data(self, key, value):
        """Machine-mode only; human mode gets its own summary lines."""
        if self.machine:
            print(f"{key}={_fmt(value)}")

    def say(self, text):
        if not self.machine:
            print(text)


def _build_parser() -> _Parser:
    p = _Parser(prog="supportminors", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, *, params=False, io_in=False, io_out=False):
        sp.add_argument("--machine", action="store_true", help="key=value output")
        sp.add_argument("--assert", dest="assert_", action="store_true",
                        help="exit 3 on any observed/predicted mismatch")
        sp.add_argument("--cap-enum", type=int, default=BRUTE_FORCE_CAP, metavar="N")
        sp.add_argument("--cap-matrix", type=int, default=MATRIX_CELL_CAP, metavar="N")
        if params:
            sp.add_argument("--q", type=int, default=32003)
            sp.add_argument("--m", type=int)
            sp.add_argument("--n", type=int)
            sp.add_argument("--K", type=int)
            sp.add_argument("--r", type=int)
            sp.add_argument("--seed", type=int, default=0)
        if io_in:
            sp.add_argument("--in", dest="infile", metavar="FILE")
        if io_out:
            sp.add_argument("--out", dest="outfile", metavar="FILE")

    g = sub.add_parser("gen", help="generate an instance file")
    add_common(g, params=True, io_out=True)
    g.add_argument("--planted", action="store_true",
                   help="plant a witness; writes <out>.witness")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="linearization solve of an instance file")
    add_common(s, io_in=True)
    s.add_argument("--b", type=int, default=1)
    s.add_argument("--fix-pluecker", metavar="T", default=None,
                   help="comma-separated r-subset of columns normalized to 1")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check", help="observed vs predicted ranks and syzygy dims")
    add_common(c, params=True, io_in=True)
    c.add_argument("--b", type=int, default=1)
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("estimate", help="closed-form counting and cost report")
    add_common(e, params=True)
    e.add_argument("--b", type=int, default=None,
                   help="also report dimensions/cost at this extra degree")
    e.set_defaults(func=cmd_estimate)

    br = sub.add_parser("brute", help="exhaustive solution scan of an instance file")
    add_common(br, io_in=True)
    br.set_defaults(func=cmd_brute)
    return p


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join(f"--{n}" for n in missing))


def cmd_gen(args) -> int:
    _require(args, "m", "n", "K", "r", "outfile")
    field = PrimeField(args.q)
    out = _Out(args.machine)
    if args.planted:
        inst, witness = gen_planted(field, args.m, args.n, args.K, args.r, args.seed)
        witness_path(args.outfile).write_bytes(
            write_witness(args.q, witness).encode("ascii")
        )
    else:
        inst = gen_random(field, args.m, args.n, args.K, args.seed, r=args.r)
        witness = None
    save_instance(args.outfile, inst)
    out.data("command", "gen")
    for key in ("q", "m", "n", "K", "r", "seed"):
        out.data(key, getattr(args, key))
    out.data("planted", args.planted)
    out.data("out", args.outfile)
    out.say(f"wrote {args.outfile} (q={args.q} m={args.m} n={args.n} "
            f"K={args.K} r={args.r} seed={args.seed})")
    if witness is not None:
        out.kv("witness_file", str(witness_path(args.outfile)),
               human=f"witness written to {witness_path(args.outfile)}")
    return 0


def _load(args):
    if not getattr(args, "infile", None):
        raise UsageError("missing required flag(s): --in")
    return load_instance(args.infile)


def cmd_solve(args) -> int:
    inst = _load(args)
    out = _Out(args.machine)
    fix = None
    if args.fix_pluecker is not None:
        fix = tuple(int(v) for v in args.fix_pluecker.split(","))
    sols, diag = solve_linearization(
        inst, args.b, brute_cap=args.cap_enum, matrix_cap=args.cap_matrix,
        fix_pluecker=fix,
    )
    out.data("command", "solve")
    out.data("b", args.b)
    for key in ("rows", "cols", "rank", "kernel_dim", "method", "complete"):
        out.data(key, getattr(diag, key))
    out.say(f"solve b={args.b}: macaulay {diag.rows}x{diag.cols} rank={diag.rank} "
            f"kernel_dim={diag.kernel_dim} method={diag.method}"
            f"{'' if diag.complete else ' (incomplete sweep)'}")
    if fix is not None:
        out.kv("fixed_plucker", fix, human=f"fixed Plucker coordinate: {fix}")
    out.kv("solutions", len(sols),
           human=f"{len(sols)} verified solution(s)" if sols
           else f"no solution extracted at b={args.b}")
    for i, sol in enumerate(sols):
        out.kv(f"solution_{i}", sol.x, human=f"  x = {sol.x} rank = {sol.achieved_rank}")
        out.data(f"rank_{i}", sol.achieved_rank)
        out.data(f"verified_{i}", True)
    wpath = witness_path(args.infile)
    if wpath.exists():
        _, wx = parse_witness(wpath.read_bytes().decode("ascii"))
        recovered = normalize_projective(inst.field, wx) in {s.x for s in sols}
        out.kv("witness_recovered", recovered,
               human=f"witness: {'recovered' if recovered else 'NOT recovered'}")
        if not recovered:
            return 3
    return 0


def _instance_for_check(args):
    if getattr(args, "infile", None):
        return load_instance(args.infile)
    _require(args, "m", "n", "K", "r")
    field = PrimeField(args.q)
    return gen_random(field, args.m, args.n, args.K, args.seed, r=args.r)


def cmd_check(args) -> int:
    inst = _instance_for_check(args)
    out = _Out(args.machine)
    out.data("command", "check")
    out.say(f"check m={inst.m} n={inst.n} K={inst.K} r={inst.r} q={inst.field.q}")
    mismatch = False

    if args.b in (1, 2):
        rep = rank_check(inst, args.b, cap=args.cap_matrix)
        for key, value in [("b", rep.b), ("rows", rep.rows), ("cols", rep.cols),
                           ("observed", rep.observed_rank), ("predicted", rep.predicted),
                           ("precondition", rep.precondition_met)]:
            out.data(key, value)
        out.kv("match", rep.match,
               human=f"rank b={rep.b}: observed {rep.observed_rank} / predicted "
                     f"{rep.predicted} -> {'MATCH' if rep.match else 'MISMATCH'}")
        if rep.precondition_met and not rep.match:
            mismatch = True

    if inst.r + 2 <= inst.n:
        dim = xonly_syzygy_dim(inst, 1, cap=args.cap_matrix)
        out.data("syzdim_d1_observed", dim)
        if inst.K >= inst.m * (inst.n - inst.r):
            pred = linear_syzygy_dim_prediction(inst.m, inst.n, inst.r)
            out.data("syzdim_d1_predicted", pred)
            out.kv("syzdim_d1_match", dim == pred,
                   human=f"linear syzygies: observed {dim} / predicted {pred} -> "
                         f"{'MATCH' if dim == pred else 'MISMATCH'}")
            if dim != pred:
                mismatch = True
        else:
            out.say(f"linear syzygies: observed {dim} (no prediction: K below m(n-r))")

    if inst.r == inst.n - 1 and args.b >= 2:
        emp = submax_dim_empirical(inst, args.b, cap=args.cap_matrix)
        formula = submax_dim_formula(inst.m, inst.n, inst.K, args.b)
        out.data("submax_b", args.b)
        out.data("submax_observed", emp)
        out.data("submax_predicted", formula)
        out.kv("submax_match", emp == formula,
               human=f"submaximal b={args.b}: observed {emp} / formula {formula} -> "
                     f"{'MATCH' if emp == formula else 'MISMATCH'}")
        if inst.K >= inst.m and emp != formula:
            mismatch = True

    if mismatch and args.assert_:
        return 3
    return 0


def cmd_estimate(args) -> int:
    _require(args, "m", "n", "K", "r")
    p = ParameterSet(args.m, args.n, args.K, args.r, args.q)
    out = _Out(args.machine)
    out.say(f"estimate m={p.m} n={p.n} K={p.K} r={p.r}")
    extra = (args.b,) if args.b else ()
    if args.machine:
        print("command=estimate")
    sys.stdout.write(format_report(complexity_report(p, extra_b=extra)))
    return 0


def cmd_brute(args) -> int:
    inst = _load(args)
    out = _Out(args.machine)
    sols = brute_force_solve(inst, cap=args.cap_enum)
    out.data("command", "brute")
    out.say(f"brute force on {args.infile}")
    out.kv("solutions", len(sols))
    for i, sol in enumerate(sols):
        out.kv(f"solution_{i}", sol.x, human=f"  x = {sol.x} rank = {sol.achieved_rank}")
        out.data(f"rank_{i}", sol.achieved_rank)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except CapExceededError as e:
        print(f"refused: {e}", file=sys.stderr)
        return 2
    except (FormatError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
