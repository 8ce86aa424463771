"""Command-line front end: parse matrices, dispatch to the library, print
canonical text or JSON."""

import argparse
import json
import sys

from .builtins import BUILTIN_NAMES, specific_slack_matrix
from .errors import ParseError, SlackkitError
from .geometry import GaleTransform, PointConfiguration, gale_transform
from .rationals import RationalMatrix
from .scaling import (contains_flag, dehomogenized_ideal,
                      irrationality_certificate, reduced_slack_matrix,
                      rehomogenize_ideal, set_ones, set_ones_forest)
from .slack import (ScaledSlackMatrix, SlackMatrix, SymbolicSlackMatrix,
                    count_minors, graphic_ideal, slack_from_gale_circuits,
                    slack_from_gale_plucker, slack_ideal, slack_matrix,
                    symbolic_slack_matrix)


class UsageError(Exception):
    """Bad flag combination; reported like a parse error (exit 2)."""


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def parse_matrix_input(text) -> RationalMatrix:
    """Whitespace/newline text or a JSON array of arrays of rational strings."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        return RationalMatrix.from_json(text)
    return RationalMatrix.from_text(text)


def _load_matrix(path) -> RationalMatrix:
    return parse_matrix_input(_read_input(path))


def _parse_indices(text):
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.replace(",", " ").split()]


def _source_matrix(args):
    """Resolve --vertices / --matrix / --pattern / --builtin into a slack
    matrix object (numeric, symbolic or scaled)."""
    given = [name for name in ("vertices", "matrix", "pattern", "builtin")
             if getattr(args, name, None)]
    if len(given) != 1:
        raise UsageError(
            "need exactly one of --vertices, --matrix, --pattern, --builtin")
    kind = given[0]
    if kind == "builtin":
        return specific_slack_matrix(args.builtin)
    M = _load_matrix(getattr(args, kind))
    if kind == "vertices":
        return slack_matrix(M.to_lists(), object=getattr(args, "object", "polytope"))
    if kind == "matrix":
        return SlackMatrix(M)
    return symbolic_slack_matrix([[x != 0 for x in row] for row in M.to_lists()])


def _numeric(S) -> SlackMatrix:
    if not isinstance(S, SlackMatrix):
        raise UsageError("this command needs a numeric slack matrix")
    return S


def _infer_d(args, S):
    if args.d is not None:
        return args.d
    if isinstance(S, SlackMatrix):
        return S.rank() - 2
    raise UsageError("-d is required with pattern input")


def _scaled(args) -> ScaledSlackMatrix:
    S = _source_matrix(args)
    if isinstance(S, ScaledSlackMatrix):
        if args.ones:
            raise UsageError("this input already has its ones fixed")
        return S
    sym = symbolic_slack_matrix(S)
    if args.ones:
        return set_ones(sym, _parse_indices(args.ones))
    return set_ones_forest(sym)[0]


def _print_matrix(M: RationalMatrix, fmt):
    print(M.to_json() if fmt == "json" else M.to_text())


def _print_pattern(S, fmt):
    rows = [[S.entry_string(i, j) for j in range(S.ncols)]
            for i in range(S.nrows)]
    if fmt == "json":
        print(json.dumps(rows))
    else:
        print("\n".join(" ".join(row) for row in rows))


def _print_ideal(I):
    for s in I.to_strings():
        print(s)


def _cmd_slack_matrix(args):
    S = _numeric(_source_matrix(args))
    _print_matrix(S.entries, args.format)


def _cmd_symbolic(args):
    S = _source_matrix(args)
    if isinstance(S, ScaledSlackMatrix):
        _print_pattern(S, args.format)
    else:
        _print_pattern(symbolic_slack_matrix(S), args.format)


def _cmd_ideal(args):
    S = _source_matrix(args)
    d = _infer_d(args, S)
    _print_ideal(slack_ideal(d, S))


def _cmd_gale(args):
    V = PointConfiguration(_load_matrix(args.vertices).to_lists())
    _print_matrix(gale_transform(V).matrix, args.format)


def _cmd_gale_slack(args):
    G = GaleTransform(_load_matrix(args.gale))
    if args.cofacets:
        cofacets = [_parse_indices(group) for group in args.cofacets.split(";")]
        S = slack_from_gale_plucker(G, cofacets)
    else:
        S = slack_from_gale_circuits(G)
    _print_matrix(S.entries, args.format)


def _cmd_scale(args):
    _print_pattern(_scaled(args), args.format)


def _cmd_dehomogenize(args):
    Y = _scaled(args)
    _print_ideal(dehomogenized_ideal(_infer_d(args, Y.base), Y))


def _cmd_rehomogenize(args):
    Y = _scaled(args)
    _print_ideal(rehomogenize_ideal(_infer_d(args, Y.base), Y))


def _cmd_reduce(args):
    S = _source_matrix(args)
    flag = _parse_indices(args.flag_indices) if args.flag_indices else None
    R = reduced_slack_matrix(_infer_d(args, S), S, flag_indices=flag)
    _print_pattern(R, args.format)


def _cmd_contains_flag(args):
    S = _source_matrix(args)
    print("true" if contains_flag(_parse_indices(args.indices), S) else "false")


def _cmd_graphic_ideal(args):
    _print_ideal(graphic_ideal(_source_matrix(args)))


def _cmd_certificate(args):
    Y = _scaled(args)
    I = dehomogenized_ideal(_infer_d(args, Y.base), Y)
    cert = irrationality_certificate(I, args.variable)
    print(json.dumps(cert.to_dict()))


def _cmd_builtin(args):
    S = specific_slack_matrix(args.name)
    if isinstance(S, SlackMatrix):
        _print_matrix(S.entries, args.format)
    elif isinstance(S, ScaledSlackMatrix):
        _print_pattern(S, args.format)
    else:
        rows = [["1" if c else "0" for c in row] for row in S.support]
        if args.format == "json":
            print(json.dumps(rows))
        else:
            print("\n".join(" ".join(row) for row in rows))


def _cmd_count_minors(args):
    if args.rows is not None and args.cols is not None:
        if args.d is None:
            raise UsageError("-d is required")
        print(count_minors(args.d, nrows=args.rows, ncols=args.cols))
        return
    S = _source_matrix(args)
    print(count_minors(_infer_d(args, S), S=S))


def _add_source_flags(p, vertices=True, pattern=True):
    if vertices:
        p.add_argument("--vertices", help="vertex matrix file ('-' = stdin)")
        p.add_argument("--object", choices=("polytope", "matroid"),
                       default="polytope")
    p.add_argument("--matrix", help="numeric slack matrix file")
    if pattern:
        p.add_argument("--pattern", help="0/1 support pattern file")
    p.add_argument("--builtin", choices=BUILTIN_NAMES)


def _add_common(p, d=False, fmt=True):
    if d:
        p.add_argument("-d", type=int, default=None,
                       help="dimension (inferred from numeric input if omitted)")
    if fmt:
        p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser():
    ap = argparse.ArgumentParser(prog="slackkit")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("slack-matrix", help="numeric slack matrix")
    _add_source_flags(p, pattern=False)
    _add_common(p)
    p.set_defaults(func=_cmd_slack_matrix)

    p = sub.add_parser("symbolic", help="symbolic slack matrix")
    _add_source_flags(p)
    _add_common(p)
    p.set_defaults(func=_cmd_symbolic)

    p = sub.add_parser("ideal", help="slack ideal generators")
    _add_source_flags(p)
    _add_common(p, d=True, fmt=False)
    p.set_defaults(func=_cmd_ideal)

    p = sub.add_parser("gale", help="Gale transform of vertices")
    p.add_argument("--vertices", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_gale)

    p = sub.add_parser("gale-slack", help="slack matrix from a Gale transform")
    p.add_argument("--gale", required=True, help="Gale vector matrix file")
    p.add_argument("--cofacets",
                   help="semicolon-separated cofacet index groups")
    _add_common(p)
    p.set_defaults(func=_cmd_gale_slack)

    for verb, func, needs_d in (("scale", _cmd_scale, False),
                                ("dehomogenize", _cmd_dehomogenize, True),
                                ("rehomogenize", _cmd_rehomogenize, True)):
        p = sub.add_parser(verb)
        _add_source_flags(p)
        p.add_argument("--ones", help="comma-separated variable indices to scale to 1")
        _add_common(p, d=needs_d, fmt=(verb == "scale"))
        p.set_defaults(func=func)

    p = sub.add_parser("reduce", help="reduced slack matrix")
    _add_source_flags(p)
    p.add_argument("--flag-indices", dest="flag_indices")
    _add_common(p, d=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("contains-flag")
    _add_source_flags(p, pattern=False)
    p.add_argument("--indices", required=True)
    _add_common(p, fmt=False)
    p.set_defaults(func=_cmd_contains_flag)

    p = sub.add_parser("graphic-ideal", help="toric ideal of the non-incidence graph")
    _add_source_flags(p)
    _add_common(p, fmt=False)
    p.set_defaults(func=_cmd_graphic_ideal)

    p = sub.add_parser("certificate", help="irrationality certificate (JSON)")
    _add_source_flags(p)
    p.add_argument("--ones")
    p.add_argument("--variable", type=int, required=True,
                   help="variable to eliminate down to")
    _add_common(p, d=True, fmt=False)
    p.set_defaults(func=_cmd_certificate)

    p = sub.add_parser("builtin", help="print a stored slack matrix")
    p.add_argument("name", choices=BUILTIN_NAMES)
    _add_common(p)
    p.set_defaults(func=_cmd_builtin)

    p = sub.add_parser("count-minors")
    _add_source_flags(p)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    _add_common(p, d=True, fmt=False)
    p.set_defaults(func=_cmd_count_minors)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ParseError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SlackkitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
