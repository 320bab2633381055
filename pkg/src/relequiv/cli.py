"""Command-line front end.

    relequiv <command> <spec-file> [--j J] [--dmax D] [--format text|latex|csv|json]

Exit codes: 0 ok, 2 parse, 3 group construction, 4 validation, 5 internal
inconsistency or a failed ``check``.
"""

import argparse
import json
import sys

from .checks import run_checks
from .errors import RelequivError
from .generators import (
    general_form,
    invariant_ring_generators,
    k_equivariant_generators,
    k_invariant_basis,
    module_basis_B,
    relative_equivariant_generators,
    relative_invariant_generators,
)
from .molien import EQUIVARIANT, INVARIANT, molien_series
from .spec_io import build_group, load_spec

COMMANDS = ("molien", "invariants", "equivariants", "basis", "general-form", "check")


def build_parser():
    p = argparse.ArgumentParser(prog="relequiv", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("spec", help="group specification (JSON)")
    p.add_argument("--j", type=int, default=None, help="grading index")
    p.add_argument("--kind", choices=(INVARIANT, EQUIVARIANT), default=None,
                   help="restrict `molien` to one kind of series")
    p.add_argument("--dmax", type=int, default=None, help="series truncation degree (default 6)")
    p.add_argument("--format", choices=("text", "latex", "csv", "json"), default="text")
    p.add_argument("--k-degree-bound", type=int, default=None,
                   help="degree bound for K-level generators (default |K|)")
    p.add_argument("--check-degree", type=int, default=None,
                   help="validation degree (default max(6, 2 * max generator degree))")
    p.add_argument("--max-order", type=int, default=None, help="bound on the group order")
    p.add_argument("--random", type=int, default=20, help="random inputs per projector check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; computation is single-threaded")
    return p


def _series_name(kind, j):
    return f"Phi_{j}" if kind == INVARIANT else f"Psi_{j}"


def cmd_molien(G, spec, args):
    dmax = args.dmax if args.dmax is not None else spec.options.get("dmax", 6)
    kinds = [args.kind] if args.kind else [INVARIANT, EQUIVARIANT]
    js = [args.j % G.m] if args.j is not None else list(range(G.m))
    rows = [(kind, j, molien_series(G, j, kind, dmax)) for kind in kinds for j in js]
    if args.format == "csv":
        if len(rows) == 1:
            return rows[0][2].csv()
        lines = ["kind,j,degree,dim"]
        lines += [f"{kind},{j},{d},{c}" for kind, j, s in rows for d, c in enumerate(s)]
        return "\n".join(lines) + "\n"
    if args.format == "json":
        return json.dumps([{"kind": k, "j": j, "coeffs": list(s.coeffs)} for k, j, s in rows],
                          indent=2) + "\n"
    if args.format == "latex":
        out = []
        for kind, j, s in rows:
            name = r"\tilde{\Phi}" if kind == INVARIANT else r"\tilde{\Psi}"
            body = s.render().replace("*", " ")
            out.append(f"{name}_{{{j}}}(t) = {body} + \\cdots")
        return "\n".join(out) + "\n"
    return "".join(f"{_series_name(k, j)}(t) = {s.render()} + O(t^{dmax + 1})\n" for k, j, s in rows)


def _render_set(gs, spec, fmt, title):
    names = spec.variables
    if fmt == "json":
        return json.dumps({
            "kind": gs.kind,
            "j": gs.j,
            "check_degree": gs.check_degree,
            "dims": list(gs.dims.coeffs) if gs.dims is not None else None,
            "items": [{"degree": it.degree, "provenance": it.provenance,
                       "value": it.value.render(names)} for it in gs.items],
        }, indent=2) + "\n"
    if fmt == "latex":
        lnames = spec.latex_variables or names
        body = ",\\ ".join(it.value.render(lnames, latex=True) for it in gs.items)
        return f"% {title}\n\\bigl\\{{{body}\\bigr\\}}\n"
    if fmt == "csv":
        lines = ["degree,provenance,generator"]
        lines += [f'{it.degree},{it.provenance},"{it.value.render(names)}"' for it in gs.items]
        return "\n".join(lines) + "\n"
    lines = [f"# {title}"] + [it.value.render(names) for it in gs.items]
    return "\n".join(lines) + "\n"


def _bounds(spec, args):
    kb = args.k_degree_bound if args.k_degree_bound is not None else spec.options.get("k_degree_bound")
    cd = args.check_degree if args.check_degree is not None else spec.options.get("check_degree")
    return kb, cd


def _need_j(args, G, low):
    if args.j is None:
        raise SystemExit(f"--j is required (range {low}..{G.m - 1})")
    if not low <= args.j <= G.m - 1:
        raise SystemExit(f"--j must lie in {low}..{G.m - 1}")
    return args.j


def cmd_invariants(G, spec, args):
    kb, cd = _bounds(spec, args)
    j = _need_j(args, G, 0)
    u = k_invariant_basis(G, kb, cd)
    if j == 0:
        gs = invariant_ring_generators(G, u, cd)
        return _render_set(gs, spec, args.format, "Hilbert basis of the invariant ring P(Gamma)")
    gs = relative_invariant_generators(G, j, u, cd)
    return _render_set(gs, spec, args.format, f"generators of P_sigma^{j}(Gamma) over P(Gamma)")


def _equivariant_sets(G, spec, args, js):
    kb, cd = _bounds(spec, args)
    u = k_invariant_basis(G, kb, cd)
    B = module_basis_B(G, u, cd)
    H = k_equivariant_generators(G, kb, cd)
    return {j: relative_equivariant_generators(G, j, B, H, cd) for j in js}


def cmd_equivariants(G, spec, args):
    j = _need_j(args, G, 0)
    gs = _equivariant_sets(G, spec, args, [j])[j]
    return _render_set(gs, spec, args.format,
                       f"generators of the sigma^{j}-relative equivariants over P(Gamma)")


def cmd_basis(G, spec, args):
    kb, cd = _bounds(spec, args)
    u = k_invariant_basis(G, kb, cd)
    B = module_basis_B(G, u, cd)
    return _render_set(B, spec, args.format, "module basis B of P(K) over P(Gamma)")


def cmd_general_form(G, spec, args):
    if args.j is not None:
        _need_j(args, G, 0)
    sets = _equivariant_sets(G, spec, args, range(G.m))
    latex = args.format == "latex"
    names = (spec.latex_variables or spec.variables) if latex else spec.variables
    args_str = ", ".join(names)
    out, first = [], 1
    for j in range(G.m):
        gs = sets[j]
        if args.j is None or args.j == j:
            form = general_form(G, j, gs, names, first, latex=latex)
            if args.format == "json":
                out.append(json.dumps({"j": j, "first_index": first, "form": form}))
            else:
                lhs = f"g_{{{j}}}({args_str})" if latex else f"g{j}({args_str})"
                out.append(f"{lhs} = {form}")
        first += len(gs)
    return "\n".join(out) + "\n"


def cmd_check(G, spec, args):
    kb, cd = _bounds(spec, args)
    dmax = args.dmax if args.dmax is not None else 5
    results = run_checks(G, spec.expected, dmax, args.random, args.seed, kb, cd)
    text = "".join(r.line() + "\n" for r in results)
    failed = sum(not r.ok for r in results)
    text += f"{len(results) - failed}/{len(results)} checks passed\n"
    return text, (5 if failed else 0)


HANDLERS = {
    "molien": cmd_molien,
    "invariants": cmd_invariants,
    "equivariants": cmd_equivariants,
    "basis": cmd_basis,
    "general-form": cmd_general_form,
    "check": cmd_check,
}


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        spec = load_spec(args.spec)
        G = build_group(spec, args.max_order)
        result = HANDLERS[args.command](G, spec, args)
    except RelequivError as exc:
        print(f"relequiv: error: {exc}", file=stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"relequiv: error: {exc}", file=stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
