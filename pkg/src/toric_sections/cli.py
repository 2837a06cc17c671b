"""Command line interface: ``toric-sections <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 a mathematically meaningful
negative answer (incomplete fan, divisor not Cartier), 3 an internal
certification failure or exhausted search height.
"""

import argparse
import os
import sys

from . import __version__
from .cones import is_complete, validate_fan
from .divisor import cartier_data, is_effective
from .errors import (HeightLimitExceeded, InputError, NotCartier,
                     RationalityCertificationFailed, Unbounded, VerificationFailed)
from .formats import (dumps, envelope, load_divisor, load_fan, load_polytope,
                      polytope_to_json, rat_vec)
from .polytope import build_polytope, lattice_points, vertices
from .ring import DEFAULT_MAX_HEIGHT, build_section_cone, height_bound, hilbert_basis_sections
from .series import polytope_count_sequence, polytope_dimension_formula, polytope_ehrhart_series

EXIT_OK, EXIT_INVALID, EXIT_NEGATIVE, EXIT_INTERNAL = 0, 1, 2, 3


class Outcome:
    def __init__(self, result, text, code=EXIT_OK, warnings=()):
        self.result = result
        self.text = text
        self.code = code
        self.warnings = list(warnings)


class Abort(Exception):
    def __init__(self, code, message, result=None):
        super().__init__(message)
        self.code = code
        self.result = result if result is not None else {"error": message}


def max_height():
    raw = os.environ.get("TORIC_MAX_HEIGHT")
    if raw is None:
        return DEFAULT_MAX_HEIGHT
    try:
        value = int(raw)
    except ValueError:
        raise Abort(EXIT_INVALID, "TORIC_MAX_HEIGHT must be an integer, got %r" % raw)
    if value < 1:
        raise Abort(EXIT_INVALID, "TORIC_MAX_HEIGHT must be positive")
    return value


def _checked_fan(path, inputs, require_complete=True):
    fan, inputs["fan"] = load_fan(path)
    rep = validate_fan(fan)
    if not rep.ok:
        raise Abort(EXIT_INVALID, "invalid fan: " + "; ".join(rep.problems()))
    if require_complete and not is_complete(fan):
        raise Abort(EXIT_NEGATIVE, "incomplete fan")
    return fan


def _fan_and_divisor(args, inputs, warnings):
    fan = _checked_fan(args.fan, inputs)
    d, inputs["divisor"] = load_divisor(args.divisor, fan)
    try:
        cartier_data(fan, d)
        cartier = True
    except NotCartier as exc:
        cartier = False
        warnings.append("divisor is not Cartier (%s); results describe the Weil divisor" % exc)
    return fan, d, cartier


def _source_polytope(args, inputs, warnings):
    """The degree-one polytope from either --polytope or a fan/divisor pair."""
    if args.polytope:
        if args.fan or args.divisor:
            raise Abort(EXIT_INVALID, "give either --polytope or FAN DIVISOR, not both")
        h, inputs["polytope"] = load_polytope(args.polytope)
        return h, {}
    if not (args.fan and args.divisor):
        raise Abort(EXIT_INVALID, "FAN and DIVISOR are required without --polytope")
    fan, d, cartier = _fan_and_divisor(args, inputs, warnings)
    return build_polytope(fan, d, 1), {"cartier": cartier, "effective": is_effective(d)}


def cmd_validate(args, inputs, warnings):
    fan, inputs["fan"] = load_fan(args.fan)
    rep = validate_fan(fan)
    checks = {
        "indices": not rep.bad_indices,
        "primitive_rays": not rep.non_primitive_rays and not rep.duplicate_rays,
        "strong_convexity": not rep.not_strongly_convex,
        "face_intersections": not rep.improper_intersections,
    }
    complete = is_complete(fan) if rep.ok else None
    checks["completeness"] = complete
    lines = ["%-20s %s" % (name, {True: "ok", False: "FAIL", None: "skipped"}[ok])
             for name, ok in checks.items()]
    if not rep.ok:
        status, code = "; ".join(rep.problems()), EXIT_INVALID
    elif not complete:
        status, code = "incomplete", EXIT_NEGATIVE
    else:
        status, code = "valid, complete", EXIT_OK
    lines.append(status)
    result = {"valid": rep.ok, "complete": complete, "checks": checks,
              "problems": rep.problems(), "status": status}
    return Outcome(result, lines, code)


def cmd_cartier(args, inputs, warnings):
    # Cartier data is local to each cone, so completeness is not required.
    fan = _checked_fan(args.fan, inputs, require_complete=False)
    d, inputs["divisor"] = load_divisor(args.divisor, fan)
    try:
        data = cartier_data(fan, d)
    except NotCartier as exc:
        witness = None if exc.witness is None else rat_vec(exc.witness)
        result = {"cartier": False, "cone_index": exc.cone_index, "cone": list(exc.cone),
                  "witness": witness}
        return Outcome(result, ["NotCartier: %s" % exc], EXIT_NEGATIVE)
    rows = [{"cone": list(c), "m": list(m)} for c, m in zip(fan.max_cones, data)]
    lines = ["cone %-12s m = %s" % (list(c), list(m)) for c, m in zip(fan.max_cones, data)]
    return Outcome({"cartier": True, "cones": rows}, lines)


def cmd_count(args, inputs, warnings):
    h, meta = _source_polytope(args, inputs, warnings)
    if args.n is not None:
        ns = [args.n]
        counts = [len(lattice_points(h.scaled(args.n)))]
    else:
        ns = list(range(args.upto + 1))
        counts = polytope_count_sequence(h, args.upto)
    rows = [{"n": n, "dim": c} for n, c in zip(ns, counts)]
    lines = ["n=%d  dim H0 = %d" % (n, c) for n, c in zip(ns, counts)]
    return Outcome(dict(meta, counts=rows), lines)


def cmd_polytope(args, inputs, warnings):
    h, meta = _source_polytope(args, inputs, warnings)
    hn = h.scaled(args.n)
    p = vertices(hn)
    pts = lattice_points(hn)
    result = dict(meta, n=args.n, h_representation=polytope_to_json(hn),
                  vertices=[rat_vec(v) for v in p.vertices], dim=p.dim,
                  lattice_points=[list(u) for u in pts])
    lines = ["constraints (<u, normal> >= rhs):"]
    lines += ["  %s >= %d" % (list(nv), b) for nv, b in hn.constraints]
    lines.append("vertices (dim %d):" % p.dim)
    lines += ["  (%s)" % ", ".join(rat_vec(v)) for v in p.vertices]
    lines.append("lattice points (%d):" % len(pts))
    lines += ["  %s" % (list(u),) for u in pts]
    return Outcome(result, lines)


def cmd_generators(args, inputs, warnings):
    h, meta = _source_polytope(args, inputs, warnings)
    p = vertices(h)
    cone = build_section_cone(p, h.rank)
    gens = hilbert_basis_sections(cone, max_height())
    result = dict(meta, trivial=not gens,
                  cone_rays=[list(r) for r in cone.rays],
                  height_bound=height_bound(cone),
                  generators=[{"point": list(g[:-1]), "degree": g[-1]} for g in gens])
    if not gens:
        lines = ["R = K (no positive-degree sections)"]
    else:
        lines = ["%d generators:" % len(gens)]
        lines += ["  degree %d  %s" % (g[-1], list(g[:-1])) for g in gens]
    return Outcome(result, lines)


def cmd_series(args, inputs, warnings):
    h, meta = _source_polytope(args, inputs, warnings)
    s = polytope_ehrhart_series(h)
    q = polytope_dimension_formula(h)
    result = dict(meta,
                  series={"numerator": list(s.numerator), "period": s.period,
                          "pole_order": s.pole_order, "text": str(s)},
                  quasi_polynomial={"period": q.period, "start": q.start,
                                    "coefficients": [rat_vec(c) for c in q.coefficients],
                                    "text": str(q)})
    lines = ["series: %s" % s, "dim H0(nD) = %s%s" % (q, "" if q.start == 0 else "  (n >= %d)" % q.start)]
    return Outcome(result, lines)


COMMANDS = {
    "validate": cmd_validate,
    "cartier": cmd_cartier,
    "count": cmd_count,
    "polytope": cmd_polytope,
    "generators": cmd_generators,
    "series": cmd_series,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="toric-sections",
        description="Section polytopes, section rings and dimension series of "
                    "T-invariant divisors on complete toric varieties.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("validate", help="check a fan file")
    p.add_argument("fan")
    common(p)

    p = sub.add_parser("cartier", help="per-cone Cartier data")
    p.add_argument("fan")
    p.add_argument("divisor")
    common(p)

    for name, help_ in (("count", "dim H0(X, O(nD))"),
                        ("polytope", "H-representation, vertices, lattice points of P_nD"),
                        ("generators", "generators of the section ring"),
                        ("series", "rational dimension series and quasi-polynomial")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("fan", nargs="?")
        p.add_argument("divisor", nargs="?")
        p.add_argument("--polytope", metavar="FILE", help="standalone H-polytope file")
        common(p)
        if name == "count":
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("--n", type=int)
            g.add_argument("--upto", type=int)
        elif name == "polytope":
            p.add_argument("--n", type=int, default=1)
    return parser


def run(argv=None):
    """Parse ``argv`` and return ``(exit_code, stdout_text, stderr_text)``."""
    args = build_parser().parse_args(argv)
    inputs, warnings = {}, []
    for attr in ("n", "upto"):
        if getattr(args, attr, None) is not None and getattr(args, attr) < 0:
            return EXIT_INVALID, "", "--%s must be nonnegative\n" % attr
    try:
        out = COMMANDS[args.command](args, inputs, warnings)
    except Abort as exc:
        out = Outcome(exc.result, [str(exc)], exc.code)
    except (InputError, Unbounded) as exc:
        out = Outcome({"error": str(exc)}, [str(exc)], EXIT_INVALID)
    except (RationalityCertificationFailed, VerificationFailed, HeightLimitExceeded) as exc:
        out = Outcome({"error": str(exc)}, [str(exc)], EXIT_INTERNAL)
    warnings = warnings + out.warnings
    err = "".join("warning: %s\n" % w for w in warnings)
    if args.format == "json":
        text = dumps(envelope(args.command, inputs, out.result, __version__, warnings))
    else:
        text = "\n".join(out.text) + "\n"
    return out.code, text, err


def main(argv=None):
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
