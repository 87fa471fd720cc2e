"""Command-line surface: parse a session file, run one command against
its bindings, emit JSON or text on stdout.

Exit codes: 0 success; 1 usage or parse problem; 2 a computation could
not be carried out; 3 an identity that must hold was contradicted, which
means the engine itself is broken.

JSON output is deterministic: identical input and identical --seed give
byte-identical bytes.  Infinite values are encoded as null plus a "kind"
tag, since JSON has no infinities.
"""

import argparse
import json
import sys
from math import inf

from .complexes import BoundedComplex, ext_complex, tor_complex
from .modules import PresentedModule, module_from_ideal
from .regularity import (depth, depth_profile, reg_complex, reg_via_betti,
                         reg_via_koszul, regularity)
from .resolution import betti_table
from .oracle import DenseOracle
from .session import (ParseError, Session, UnknownBinding, parse_polynomial,
                      parse_session, transfer_polys)
from .theorems import (TheoremContradiction, check_ab_formula,
                       check_cor_hom, check_cor_tensor,
                       check_filter_regular_formula, check_ring_independence,
                       check_thm_cmd1, check_thm_dim1,
                       nilpotent_scroll_family)

SCHEMA = "cmreg/1"


class UsageError(Exception):
    pass


# -- serialization ---------------------------------------------------------

def jsonable(v):
    """Plain data with infinities replaced by tagged nulls."""
    if v is None or isinstance(v, (bool, str, int)):
        return v
    if isinstance(v, float):
        if v == inf:
            return {"value": None, "kind": "plus_infinity"}
        if v == -inf:
            return {"value": None, "kind": "minus_infinity"}
        return v
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    return str(v)


def _scalar_text(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if v == inf:
            return "+inf"
        if v == -inf:
            return "-inf"
    return str(v)


def _text_lines(v, indent=0):
    pad = "  " * indent
    if isinstance(v, dict):
        out = []
        for k, val in v.items():
            if isinstance(val, (dict, list, tuple)) and val:
                out.append(f"{pad}{k}:")
                out.extend(_text_lines(val, indent + 1))
            else:
                out.append(f"{pad}{k}: {_scalar_text(val)}")
        return out
    if isinstance(v, (list, tuple)):
        out = []
        for item in v:
            if isinstance(item, (dict, list, tuple)):
                out.append(f"{pad}-")
                out.extend(_text_lines(item, indent + 1))
            else:
                out.append(f"{pad}- {_scalar_text(item)}")
        return out
    return [f"{pad}{_scalar_text(v)}"]


# -- command handlers ------------------------------------------------------

def _module_profile(H, max_degree=None):
    ind, top = H.indeg(), H.top_degree()
    lo = 0 if ind == inf else ind
    if top != inf:
        hi = top
    else:
        hi = max_degree if max_degree is not None else lo + 6
    if max_degree is not None:
        hi = min(hi, max_degree)
    return {
        "dim": H.dimension(),
        "indeg": ind,
        "top_degree": top,
        "values": [{"degree": j, "dim": H.hilbert_function(j)}
                   for j in range(lo, hi + 1)],
    }


def cmd_reg(session, args):
    obj = session.get(args.name, ("module", "complex"))
    if isinstance(obj, PresentedModule):
        return regularity(obj, max_len=args.max_len).as_dict()
    value = reg_complex(obj, cross_check=True)
    other = reg_via_betti(obj)[0]
    return {"routes": {"koszul": value, "betti": other},
            "agree": value == other, "value": value}


def cmd_betti(session, args):
    M = session.get(args.name, ("module",))
    bt = betti_table(M, max_len=args.max_len)
    return {"ring": repr(M.ring), "table": bt.to_json(),
            "regularity": bt.regularity(), "pd": bt.projective_dimension(),
            "truncated": not bt.complete}


def cmd_hilbert(session, args):
    M = session.get(args.name, ("module",))
    hs = M.hilbert_series()
    ind, top = hs.indeg(), hs.top_degree()
    lo = 0 if ind == inf else min(ind, 0)
    if args.max_degree is not None:
        hi = args.max_degree
    elif top != inf:
        hi = top
    else:
        hi = max(lo + 10, 10)
    return {"dimension": hs.dimension(), "indeg": ind, "top_degree": top,
            "values": [{"degree": j, "dim": hs.coefficient(j)}
                       for j in range(lo, hi + 1)]}


def cmd_dim(session, args):
    M = session.get(args.name, ("module",))
    return {"dim": M.dimension()}


def cmd_depth(session, args):
    M = session.get(args.name, ("module",))
    return {"depth": depth(M), "profile": depth_profile(M)}


def _pair(session, args):
    A = session.get(args.first, ("module",))
    B = session.get(args.second, ("module",))
    if A.ring != B.ring:
        raise UsageError("the two modules live over different rings")
    return A, B


def cmd_tor(session, args):
    A, B = _pair(session, args)
    T = tor_complex(A, B, max_len=args.max_len)
    entries = []
    for i in sorted(T.levels()):
        if i < 0:
            continue
        H = T.homology(i)
        if H.is_zero():
            continue
        entries.append({"i": i, **_module_profile(H, args.max_degree)})
    return {"modules": [args.first, args.second], "tor": entries}


def cmd_ext(session, args):
    A, B = _pair(session, args)
    E = ext_complex(A, B, max_len=args.max_len)
    entries = []
    for s in sorted(E.levels(), reverse=True):
        i = -s
        if i < 0:
            continue
        H = E.homology(s)
        if H.is_zero():
            continue
        entries.append({"i": i, **_module_profile(H, args.max_degree)})
    return {"modules": [args.first, args.second], "ext": entries}


def cmd_koszul(session, args):
    forms = session.get(args.sequence, ("sequence",))
    M = session.get(args.name, ("module",))
    forms = transfer_polys(forms, M.ring)
    value, witness = reg_via_koszul(M, forms=forms)
    return {"value": value,
            "witness": list(witness) if witness else None,
            "forms": [str(f) for f in forms]}


def cmd_check(session, args):
    kind = args.kind
    seed = args.seed

    def need(flag, value):
        if value is None:
            raise UsageError(f"check {kind} needs {flag}")
        return value

    if kind == "ab":
        M = session.get(need("--module", args.module), ("module",))
        N = session.get(need("--with", args.with_), ("module",))
        out = check_ab_formula(M, N, instance=f"{args.module},{args.with_}",
                               seed=seed)
    elif kind in ("cmd1", "dim1"):
        if args.complex_ is not None:
            obj = session.get(args.complex_, ("complex",))
            label = args.complex_
        else:
            obj = session.get(need("--complex or --module", args.module),
                              ("module",))
            label = args.module
        fn = check_thm_cmd1 if kind == "cmd1" else check_thm_dim1
        out = fn(obj, instance=label, seed=seed)
    elif kind == "tensor":
        names = [n.strip() for n in need("--modules", args.modules).split(",")]
        mods = [session.get(n, ("module",)) for n in names]
        out = check_cor_tensor(*mods, instance=",".join(names), seed=seed)
    elif kind == "hom":
        M = session.get(need("--module", args.module), ("module",))
        N = session.get(need("--with", args.with_), ("module",))
        out = check_cor_hom(M, N, instance=f"{args.module},{args.with_}",
                            seed=seed)
    elif kind == "filter":
        M = session.get(need("--module", args.module), ("module",))
        form = parse_polynomial(need("--form", args.form), M.ring)
        out = check_filter_regular_formula(M, form, instance=args.module,
                                           seed=seed)
    elif kind == "ring-indep":
        M = session.get(need("--module", args.module), ("module",))
        out = check_ring_independence(M, extra_vars=args.extra,
                                      instance=args.module, seed=seed)
    else:
        raise UsageError(f"unknown check kind {kind!r}")
    return out.as_dict()


def cmd_family(session, args):
    if args.kind != "nilpotent-scroll":
        raise UsageError(f"unknown family {args.kind!r}")
    Rn, minors, z = nilpotent_scroll_family(args.n)
    reg_i = reg_via_betti(module_from_ideal(Rn, minors))[0]
    reg_iz = reg_via_betti(module_from_ideal(Rn, minors + [z]))[0]
    return {"n": args.n, "ring": repr(Rn),
            "generators": [str(m) for m in minors], "form": str(z),
            "reg_ideal": reg_i, "reg_ideal_plus_form": reg_iz}


def cmd_oracle(session, args):
    M = session.get(args.name, ("module",))
    Mc = M.lift_to_cover()
    d_cap = args.max_degree if args.max_degree is not None else 6
    bt = betti_table(Mc)
    oc = DenseOracle(Mc, max_degree=max(8, d_cap + Mc.ring.nvars))
    betti_rows = []
    agree = True
    pairs = {(i, j) for (i, j) in bt.entries if j <= d_cap}
    for i in range(Mc.ring.nvars + 1):
        for j in range(0, d_cap + 1):
            sym = bt.entries.get((i, j), 0)
            if (i, j) not in pairs and sym == 0 and i > bt.projective_dimension():
                continue
            orc = oc.betti_number(i, j)
            if sym or orc:
                betti_rows.append({"i": i, "j": j, "resolution": sym,
                                   "oracle": orc})
            agree = agree and sym == orc
    hs = Mc.hilbert_series()
    hilbert_rows = []
    for j in range(0, d_cap + 1):
        a = hs.coefficient(j)
        b = oc.hilbert_function(j)
        hilbert_rows.append({"degree": j, "series": a, "oracle": b})
        agree = agree and a == b
    return {"max_degree": d_cap, "agrees": agree, "betti": betti_rows,
            "hilbert": hilbert_rows}


_HANDLERS = {
    "reg": cmd_reg,
    "betti": cmd_betti,
    "hilbert": cmd_hilbert,
    "dim": cmd_dim,
    "depth": cmd_depth,
    "tor": cmd_tor,
    "ext": cmd_ext,
    "koszul": cmd_koszul,
    "check": cmd_check,
    "family": cmd_family,
    "oracle": cmd_oracle,
}


def run_command(session, args):
    return _HANDLERS[args.command](session, args)


# -- argument parsing ------------------------------------------------------

def _add_global_flags(p, trailing):
    # trailing parsers must not clobber values given before the subcommand
    d = {"default": argparse.SUPPRESS} if trailing else {}
    p.add_argument("--session", metavar="PATH",
                   help="session file to load; - reads stdin", **d)
    p.add_argument("--format", choices=("json", "text"),
                   **(d if trailing else {"default": "json"}))
    p.add_argument("--seed", type=int,
                   help="seed recorded in check outcomes",
                   **(d if trailing else {"default": 0}))
    p.add_argument("--max-degree", type=int, dest="max_degree",
                   help="degree window cap for tables", **d)
    p.add_argument("--max-len", type=int, dest="max_len",
                   help="homological truncation for resolutions", **d)
    p.add_argument("--field", type=int,
                   help="override the prime of every GF declaration", **d)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cmreg",
        description="Exact regularity of graded modules and complexes, "
                    "by independent routes that must agree.")
    _add_global_flags(ap, trailing=False)
    shared = argparse.ArgumentParser(add_help=False)
    _add_global_flags(shared, trailing=True)
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("reg", "betti", "hilbert", "dim", "depth", "oracle"):
        p = sub.add_parser(name, parents=[shared])
        p.add_argument("name", help="a session binding")
    for name in ("tor", "ext"):
        p = sub.add_parser(name, parents=[shared])
        p.add_argument("first")
        p.add_argument("second")
    p = sub.add_parser("koszul", parents=[shared])
    p.add_argument("sequence")
    p.add_argument("name")
    p = sub.add_parser("check", parents=[shared])
    p.add_argument("kind", choices=("ab", "cmd1", "dim1", "tensor", "hom",
                                    "filter", "ring-indep"))
    p.add_argument("--module")
    p.add_argument("--with", dest="with_")
    p.add_argument("--complex", dest="complex_")
    p.add_argument("--modules", help="comma-separated module bindings")
    p.add_argument("--form", help="polynomial expression")
    p.add_argument("--extra", type=int, default=1,
                   help="extra cover variables for ring-indep")
    p = sub.add_parser("family", parents=[shared])
    p.add_argument("kind", choices=("nilpotent-scroll",))
    p.add_argument("--n", type=int, required=True)
    return ap


def _load_session(args):
    if not args.session:
        return Session()
    if args.session == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.session, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read session file: {e}")
    return parse_session(text, field_override=args.field)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if not e.code else 1
    try:
        session = _load_session(args)
        report = run_command(session, args)
    except ParseError as e:
        print(f"cmreg: {e}", file=sys.stderr)
        return 1
    except (UnknownBinding, UsageError) as e:
        print(f"cmreg: {e}", file=sys.stderr)
        return 1
    except TheoremContradiction as e:
        print(f"cmreg: contradiction: {e}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError, RuntimeError) as e:
        print(f"cmreg: {e}", file=sys.stderr)
        return 2
    result = jsonable(report)
    if args.format == "json":
        payload = {"schema": SCHEMA, "command": args.command,
                   "result": result}
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(_text_lines(result)) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
