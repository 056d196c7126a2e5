"""Command-line front end: ``translatio <command> --system X ...``."""

import argparse
import json
import sys

from . import __version__, finestructure, repweights, triangle
from .errors import ConfigurationError, DomainError, ResourceError
from .ratfield import SparsePoly, sym
from .rootsys import build_root_system

WEIGHT_FLAGS = ("--nu", "--mu", "--lam")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def parse_weight(system, text):
    parts = [p for p in str(text).replace(" ", "").split(",") if p != ""]
    if len(parts) != system.rank:
        raise ConfigurationError(
            f"{system.label} weights need {system.rank} comma-separated coordinates, got {text!r}")
    return system.weight(parts)


def _render(value, system, fmt):
    if fmt == "latex":
        return value.latex(system)
    return value.pretty(system)


def _build_parser():
    p = _Parser(prog="translatio", description="Triangle functions for translation functors.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, help_text):
        q = sub.add_parser(name, help=help_text)
        q.add_argument("--system", required=name != "oracle", default="A1",
                       help="root system label, e.g. A2, B2, G2")
        q.add_argument("--format", choices=("pretty", "json", "latex"), default="pretty")
        return q

    add("roots", "list positive roots, coroots and the Weyl group order")

    q = add("weights", "weight multiset of the irreducible module with extremal weight NU")
    q.add_argument("--nu", required=True)
    q.add_argument("--above", action="store_true", help="only weights strictly above NU")

    q = add("fine", "pole hyperplanes, pole polynomial and singular loci for NU")
    q.add_argument("--nu", required=True)
    q.add_argument("--bound-m", type=int, default=None)

    q = add("delta", "closed-form triangle function")
    q.add_argument("--mu", required=True)
    q.add_argument("--nu", required=True)
    q.add_argument("--x", required=True, help='Weyl word such as "s1 s2", "e" or "w0"')
    q.add_argument("--form", choices=("closed", "quotient", "epsilon"), default="closed")

    q = add("trace", "relative trace and the longest-element triangle function for dominant NU")
    q.add_argument("--nu", required=True)
    q.add_argument("--poly", choices=("one", "sym1", "sym12"), default="one")

    q = add("check", "run an identity battery")
    q.add_argument("--identity", choices=sorted(triangle.CHECKERS) + ["all"], default="all")
    q.add_argument("--bound", type=int, default=2)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--seed", type=int, default=0)

    q = add("oracle", "compare the rank-one oracle against the closed formulas")
    q.add_argument("--check", choices=("delta", "trace", "poles"), default="delta")
    q.add_argument("--range", type=int, default=2, dest="range_")
    q.add_argument("--N", type=int, default=3)
    return p


def _merge_weight_flags(argv):
    """Let ``--nu -1,0`` through argparse, which would read ``-1,0`` as an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in WEIGHT_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


# --------------------------------------------------------------------------
# commands; each returns (results, failures, pretty_lines)


def cmd_roots(system, args):
    results = []
    lines = [f"{system.label}: rank {system.rank}, {len(system.positive_roots)} positive roots"]
    for a in system.positive_roots:
        results.append({"root": a.name(), "root_coords": list(a.root_coords),
                        "coroot_coords": list(a.coroot_coords), "weight": a.weight.to_json()})
        lines.append(f"  {a.name():<12} weight {a.weight}  coroot {list(a.coroot_coords)}")
    order = system.group_order()
    w0 = system.longest_element()
    results.append({"weyl_order": order, "longest_element": w0.to_json(),
                    "rho": system.rho().to_json()})
    lines.append(f"|W| = {order}, w0 = {w0.word_string()}, rho = {system.rho()}")
    return results, [], lines


def cmd_weights(system, args):
    nu = parse_weight(system, args.nu)
    ms = repweights.weight_multiset(system, nu)
    if args.above:
        ms = repweights.weights_above(system, nu, ms)
    lines = [f"{w}: {m}" for w, m in ms.items()]
    lines.append(f"dimension {ms.dimension()}")
    return ms.to_json(), [], lines


def cmd_fine(system, args):
    nu = parse_weight(system, args.nu)
    data = finestructure.n_nu(system, nu)
    delta = finestructure.delta_nu(system, nu)
    result = {
        "n_nu": [d.to_json() for d in data],
        "delta_nu": _render(delta, system, args.format if args.format != "json" else "pretty"),
        "S": [s.to_json() for s in finestructure.singular_set_S(system, nu)],
        "S1": [s.to_json() for s in finestructure.s1(system, nu)],
        "S2": [s.to_json() for s in finestructure.s2(system, nu, args.bound_m)],
    }
    lines = [f"N_nu ({len(data)}): " + ", ".join(f"({d.alpha.name()}, {d.m})" for d in data),
             f"delta_nu = {result['delta_nu']}"]
    for key in ("S", "S1", "S2"):
        codims = [s["codim"] for s in result[key]]
        lines.append(f"{key}: {len(codims)} subspaces, codims {sorted(set(codims))}")
    return [result], [], lines


def cmd_delta(system, args):
    mu, nu = parse_weight(system, args.mu), parse_weight(system, args.nu)
    x = system.parse_word(args.x)
    if args.form == "closed":
        value = triangle.delta_closed(system, mu, nu, x)
    elif args.form == "quotient":
        value = triangle.delta_quotient_form(system, mu, nu, x)
    else:
        value = triangle.delta_closed(system, mu, nu, x) * triangle.epsilon_sign(system, mu, nu, x)
    result = {"mu": mu.to_json(), "nu": nu.to_json(), "x": x.to_json(),
              "value": value.to_json(), "text": value.pretty(system)}
    return [result], [], [_render(value, system, args.format)]


def _test_poly(system, name):
    if name == "one":
        return SparsePoly.constant(system.rank, 1)
    if name == "sym1":
        return sym(system, SparsePoly.variable(system.rank, 0))
    if system.rank < 2:
        raise ConfigurationError("sym12 needs rank at least 2")
    return sym(system, SparsePoly.variable(system.rank, 0) * SparsePoly.variable(system.rank, 1))


def cmd_trace(system, args):
    nu = parse_weight(system, args.nu)
    ms = repweights.weight_multiset(system, nu)
    bd = triangle.bernstein_delta(system, nu)
    tr = triangle.relative_trace(system, ms, _test_poly(system, args.poly))
    result = {"bernstein_delta": bd.to_json(), "relative_trace": tr.to_json(),
              "dimension": ms.dimension()}
    lines = [f"Delta(-nu, nu; w0) = {_render(bd, system, args.format)}",
             f"relative trace of {args.poly}: {tr}",
             f"dim E = {ms.dimension()}"]
    return [result], [], lines


def cmd_check(system, args):
    names = sorted(triangle.CHECKERS) if args.identity == "all" else [args.identity]
    results, failures, lines = [], [], []
    for name in names:
        rep = triangle.run_identity(name, system, args.bound, args.trials, args.seed)
        results.append({"identity": name, "instances": rep.instances, "failures": len(rep.failures)})
        failures.extend(rep.to_json()["failures"])
        lines.append(f"{name:<14} {rep.instances:>6} instances  "
                     f"{'PASS' if rep.passed else 'FAIL (%d)' % len(rep.failures)}")
    return results, failures, lines


def cmd_oracle(system, args):
    from . import sl2oracle
    from .rootsys import build_root_system as brs
    a1 = brs("A1")
    results, failures, lines = [], [], []
    if args.check == "delta":
        s = a1.simple_reflection(0)
        k = args.range_
        for m in range(-k, k + 1):
            for n in range(-k, k + 1):
                direct = sl2oracle.delta_direct(m, n)
                closed = sl2oracle.to_field(triangle.delta_closed(a1, [m], [n], s))
                ok = direct == closed
                row = {"m": m, "n": n, "direct": str(direct), "closed": str(closed), "match": ok}
                results.append(row)
                if not ok:
                    failures.append(row)
                lines.append(f"m={m:>3} n={n:>3}  {str(direct):<28} {'ok' if ok else 'MISMATCH'}")
    elif args.check == "trace":
        for N in range(args.N + 1):
            expected = sl2oracle.to_field(triangle.bernstein_delta(a1, [N]))
            for at_w0 in (True, False):
                direct = sl2oracle.trace_direct(N, at_w0)
                ok = direct == expected
                row = {"N": N, "at_w0": at_w0, "direct": str(direct), "expected": str(expected),
                       "match": ok}
                results.append(row)
                if not ok:
                    failures.append(row)
                lines.append(f"N={N} w0={at_w0!s:<5} {direct}  {'ok' if ok else 'MISMATCH'}")
    else:
        for N in range(1, args.N + 1):
            ok = sl2oracle.verify_pole_theorem(N)
            row = {"N": N, "holds": ok}
            results.append(row)
            if not ok:
                failures.append(row)
            lines.append(f"N={N}  {'ok' if ok else 'FAILED'}")
    return results, failures, lines


COMMANDS = {
    "roots": cmd_roots, "weights": cmd_weights, "fine": cmd_fine, "delta": cmd_delta,
    "trace": cmd_trace, "check": cmd_check, "oracle": cmd_oracle,
}


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_merge_weight_flags(argv))
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        system = build_root_system(args.system if args.command != "oracle" else "A1")
        results, failures, lines = COMMANDS[args.command](system, args)
    except (ConfigurationError, DomainError, ResourceError) as exc:
        print(f"translatio: error: {exc}", file=stderr)
        return 2
    if args.format == "json":
        config = {k: v for k, v in sorted(vars(args).items()) if k != "command"}
        report = {"command": args.command, "config": config, "results": results,
                  "failures": failures, "version": __version__}
        print(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
