"""Command-line front end.

Exit codes: 0 success, 1 unknown command, 2 validation error, 3 resource cap hit.
"""

import argparse
import json
import sys

from . import combinatorics as comb
from . import hull, optimize, selftest
from . import serialize as ser
from .config import Config
from .exact_arith import ResourceError
from .pointset import (
    GSpec,
    PerturbParams,
    cyclic_perturb,
    encoding_size,
    gen_bqp,
    gen_cyclic,
    gen_simplex_extension,
    minimal_k_exponent,
)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        unknown_command = "invalid choice" in message and not message.startswith("argument -")
        if unknown_command or message.startswith("the following arguments are required: command"):
            raise _UsageError(f"{self.prog}: {message}\n{self.format_usage()}")
        raise ValueError(f"{self.prog}: {message}")


def _ints(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load(path):
    with open(path) as fh:
        return json.load(fh)


def _gspec(args):
    if args.g == "identity":
        return GSpec()
    return GSpec("affine", args.a, args.b)


def _perturb_params(d, args, cfg):
    if args.k_exponent is not None:
        return PerturbParams(d, args.k_exponent)
    if cfg.k_exponent_policy == "minimal-valid":
        return PerturbParams(d, minimal_k_exponent(d))
    return PerturbParams.default(d)


def _incidence(args, cfg):
    return hull.facets(ser.pointset_from_json(_load(args.input)), cap=cfg.facet_dim_cap)


# -- handlers: each returns a JSON-able payload ------------------------------

def cmd_gen(args, cfg):
    if args.kind == "cyclic":
        x = gen_cyclic(args.d, args.n, _gspec(args))
    elif args.kind == "bqp":
        x = gen_bqp(args.n)
    else:
        x = gen_simplex_extension(args.d)
    return ser.pointset_to_json(x)


def cmd_perturb(args, cfg):
    x = ser.pointset_from_json(_load(args.input))
    params = _perturb_params(x.dim, args, cfg)
    out = ser.pointset_to_json(cyclic_perturb(x, params))
    out["k_exponent"] = params.k_exponent
    return out


def cmd_hull(args, cfg):
    if args.what == "extreme":
        x = ser.pointset_from_json(_load(args.input))
        return ser.pointset_to_json(hull.extreme_points(x))
    inc = _incidence(args, cfg)
    if args.what == "facets":
        return ser.incidence_to_json(inc)
    if args.what == "nonincidence":
        return ser.boolmatrix_to_json(hull.nonincidence_matrix(inc))
    if args.what == "simplicial":
        return {"simplicial": hull.is_simplicial(inc)}
    if args.what == "skeleton":
        return ser.graph_to_json(hull.skeleton_graph(inc, cfg.skeleton_vertex_cap))
    if args.what == "lattice":
        return ser.lattice_to_json(hull.face_lattice(inc, cfg.hull_vertex_cap))
    return {"neighborliness": hull.neighborliness(inc, cfg.hull_vertex_cap)}


def cmd_opt(args, cfg):
    if args.how == "cyclic":
        return ser.result_to_json(optimize.cyclic_max(args.d, args.n, _gspec(args), args.c))
    x = ser.pointset_from_json(_load(args.input))
    if args.how == "brute":
        return ser.result_to_json(optimize.brute_max(x, args.c))
    return {"in_cone": optimize.is_in_cone(x, args.index, args.c)}


def cmd_reduce(args, cfg):
    g = ser.graph_from_json(_load(args.graph))
    params = None
    if args.k_exponent is not None:
        params = PerturbParams(g.n * (g.n + 1) // 2, args.k_exponent)
    value = optimize.solve_clique_via_bqp(g, args.perturb, params, cap=cfg.bqp_n_cap)
    return {"clique_number": value, "perturbed": args.perturb}


def cmd_comb(args, cfg):
    if args.what == "clique":
        g = ser.graph_from_json(_load(args.graph))
        return {"clique_number": comb.clique_number(g, cfg.clique_vertex_cap)}
    if args.what in ("rc", "fooling"):
        m = ser.boolmatrix_from_json(_load(args.matrix))
        if args.what == "fooling":
            return {"fooling_set_bound": comb.fooling_set_bound(m)}
        if args.greedy:
            return {"rc_greedy": comb.rc_greedy(m)}
        return {"rc": comb.rc_exact(m, cfg.rc_cell_cap)}
    tree = ser.tree_from_json(_load(args.tree))
    x = ser.pointset_from_json(_load(args.input))
    if args.skeleton:
        skel = ser.graph_from_json(_load(args.skeleton))
    else:
        skel = hull.skeleton_graph(hull.facets(x, cfg.facet_dim_cap), cfg.skeleton_vertex_cap)
    res = comb.is_direct_type(tree, x, skel)
    out = {"direct_type": res.ok, "complete": res.complete, "depth": tree.depth()}
    if res.witness:
        out["witness"] = {"node": res.witness[0], "clique": list(res.witness[1])}
    return out


def cmd_size(args, cfg):
    x = ser.pointset_from_json(_load(args.input))
    return {"encoding_size": encoding_size(x, args.c)}


def cmd_selftest(args, cfg):
    results = selftest.run(cfg.seed, args.count)
    return {"suites": [{"name": n, "passed": err is None, "error": err} for n, err in results]}


def build_parser():
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help="JSON config file (default: $POLYCOMB_CONFIG)")
    common.add_argument("--format", choices=("json", "text"), help="output format")
    common.add_argument("--seed", type=int, help="RNG seed for selftest")
    p = _Parser(prog="polycomb", description="Exact polytope combinatorics and optimisation.",
                parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def g_flags(sp):
        sp.add_argument("--g", choices=("identity", "affine"), default="identity")
        sp.add_argument("--a", type=int, default=1)
        sp.add_argument("--b", type=int, default=0)

    gen = sub.add_parser("gen", parents=[common], help="generate point sets")
    gen.add_argument("kind", choices=("cyclic", "bqp", "simplex-ext"))
    gen.add_argument("--d", type=int, default=3)
    gen.add_argument("--n", type=int, default=3)
    g_flags(gen)
    gen.set_defaults(func=cmd_gen)

    per = sub.add_parser("perturb", parents=[common], help="cyclic perturbation of a 0/1 point set")
    per.add_argument("--input", required=True)
    per.add_argument("--k-exponent", type=int)
    per.set_defaults(func=cmd_perturb)

    hp = sub.add_parser("hull", parents=[common], help="convex hull combinatorics")
    hp.add_argument("what", choices=("extreme", "facets", "nonincidence", "simplicial",
                                     "skeleton", "lattice", "neighborliness"))
    hp.add_argument("--input", required=True)
    hp.set_defaults(func=cmd_hull)

    op = sub.add_parser("opt", parents=[common], help="linear optimisation")
    op.add_argument("how", choices=("brute", "cyclic", "cone"))
    op.add_argument("--input")
    op.add_argument("--c", type=_ints, required=True)
    op.add_argument("--d", type=int)
    op.add_argument("--n", type=int)
    op.add_argument("--index", type=int, default=0)
    g_flags(op)
    op.set_defaults(func=cmd_opt)

    rd = sub.add_parser("reduce", parents=[common], help="clique number via BQP")
    rd.add_argument("which", choices=("clique-bqp",))
    rd.add_argument("--graph", required=True)
    rd.add_argument("--perturb", action="store_true")
    rd.add_argument("--k-exponent", type=int)
    rd.set_defaults(func=cmd_reduce)

    cp = sub.add_parser("comb", parents=[common], help="graph and matrix combinatorics")
    cp.add_argument("what", choices=("clique", "rc", "fooling", "check-dtt"))
    cp.add_argument("--graph")
    cp.add_argument("--matrix")
    cp.add_argument("--greedy", action="store_true")
    cp.add_argument("--tree")
    cp.add_argument("--input")
    cp.add_argument("--skeleton")
    cp.set_defaults(func=cmd_comb)

    sz = sub.add_parser("size", parents=[common], help="encoding size")
    sz.add_argument("--input", required=True)
    sz.add_argument("--c", type=_ints)
    sz.set_defaults(func=cmd_size)

    st = sub.add_parser("selftest", parents=[common], help="run the oracle-equivalence suites")
    st.add_argument("--count", type=int, default=40)
    st.set_defaults(func=cmd_selftest)
    return p


def _check_args(args):
    if args.command == "opt":
        if args.how == "cyclic" and (args.d is None or args.n is None):
            raise ValueError("opt cyclic needs --d and --n")
        if args.how != "cyclic" and not args.input:
            raise ValueError(f"opt {args.how} needs --input")
    if args.command == "comb":
        need = {"clique": ["graph"], "rc": ["matrix"], "fooling": ["matrix"],
                "check-dtt": ["tree", "input"]}[args.what]
        for name in need:
            if not getattr(args, name):
                raise ValueError(f"comb {args.what} needs --{name}")


def _render_text(payload, indent=""):
    lines = []
    for key in sorted(payload):
        val = payload[key]
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_render_text(val, indent + "  "))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{indent}{key}:")
            for item in val:
                lines.append(indent + "  - " + "  ".join(f"{k}={item[k]}" for k in sorted(item)))
        elif isinstance(val, list) and val and isinstance(val[0], list):
            lines.append(f"{indent}{key}:")
            for row in val:
                lines.append(indent + "  " + " ".join(str(v) for v in row))
        else:
            lines.append(f"{indent}{key}: {val}")
    return lines


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = Config.load(getattr(args, "config", None))
        if getattr(args, "format", None):
            cfg.output = args.format
        if getattr(args, "seed", None) is not None:
            cfg.seed = args.seed
        _check_args(args)
        payload = args.func(args, cfg)
    except _UsageError as exc:
        print(str(exc), file=stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=stderr)
        return EXIT_INVALID
    if cfg.output == "text":
        stdout.write("\n".join(_render_text(payload)) + "\n")
    else:
        stdout.write(ser.dumps(payload) + "\n")
    if args.command == "selftest" and not all(s["passed"] for s in payload["suites"]):
        return EXIT_INVALID
    return EXIT_OK


def main():
    sys.exit(run())
