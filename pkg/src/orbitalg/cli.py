"""Batch runner: one YAML job file in, one deterministic report out.

Usage::

    python -m orbitalg --job job.yaml [--job other.yaml ...] [--jobs 4]
                       [--degree-cap 30] [--no-timing]

A job file is a mapping with a ``command`` key and command-specific fields
(see the ``cmd_*`` readers below and the README).  The report has a human-readable
part followed by a fenced ``json`` block carrying ``schema_version``.

Exit codes: 0 success, 2 invalid job (the message names the line and column
of the offending node), 3 degree cap exceeded or unsupported instance,
1 unexpected internal error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import yaml

from . import equivariant as eq
from . import geometry, semialg
from .groebner import (
    DEFAULT_DEGREE_CAP, DegreeCapExceeded, IdealHandle, groebner_basis, normal_form,
    radical_member,
)
from .poly import GREVLEX, LEX, PolySyntaxError, VarIndex, evaluate, parse, substitute
from .realalg import RealAlgebraicNumber

SCHEMA_VERSION = 1

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_LIMIT = 0, 1, 2, 3


class JobError(Exception):
    """A job file that does not match its command's schema."""

    def __init__(self, message: str, path: tuple = (), at_key: bool = False):
        super().__init__(message)
        self.path = path
        self.at_key = at_key


@dataclass
class Report:
    text: str
    exit_code: int


# -- locating nodes -------------------------------------------------------------

def _locate(root, path, at_key=False):
    """Line/column (1-based) of the YAML node at ``path``, or of its nearest ancestor.

    With ``at_key`` the last step reports the mapping key instead of its value.
    """
    node = root
    for n, key in enumerate(path):
        if isinstance(node, yaml.MappingNode):
            nxt = None
            for k, v in node.value:
                if k.value == key:
                    nxt = k if at_key and n == len(path) - 1 else v
                    break
            if nxt is None:
                break
            node = nxt
        elif isinstance(node, yaml.SequenceNode) and isinstance(key, int) and key < len(node.value):
            node = node.value[key]
        else:
            break
    if node is None:
        return None
    return node.start_mark.line + 1, node.start_mark.column + 1


# -- field readers ----------------------------------------------------------------

class _Reader:
    def __init__(self, data: dict):
        self.data = data
        self.used = {"command"}

    def get(self, key, default=...):
        self.used.add(key)
        if key not in self.data:
            if default is ...:
                raise JobError(f"missing required field {key!r}", ())
            return default
        return self.data[key]

    def int(self, key, default=..., minimum=1):
        v = self.get(key, default)
        if isinstance(v, bool) or not isinstance(v, int):
            raise JobError(f"{key} must be an integer", (key,))
        if v < minimum:
            raise JobError(f"{key} must be at least {minimum}", (key,))
        return v

    def polys(self, key, ncols=None, default=..., where=None):
        v = self.get(key, default) if where is None else where
        path = (key,)
        if v is None:
            v = []
        if not isinstance(v, list):
            raise JobError(f"{key} must be a list of polynomials", path)
        return [poly_at(item, path + (i,), ncols) for i, item in enumerate(v)]

    def finish(self):
        extra = sorted(set(self.data) - self.used)
        if extra:
            raise JobError(f"unknown field {extra[0]!r}", (extra[0],), at_key=True)


def poly_at(item, path, ncols=None):
    if isinstance(item, bool) or not isinstance(item, (str, int)):
        raise JobError("polynomial must be a string or integer", path)
    try:
        return parse(str(item), ncols)
    except PolySyntaxError as e:
        raise JobError(f"bad polynomial {item!r}: {e}", path) from None


def rational_at(item, path):
    if isinstance(item, bool) or not isinstance(item, (int, str)):
        raise JobError("expected an integer or a fraction string like '3/4'", path)
    try:
        return Fraction(str(item).replace(" ", ""))
    except (ValueError, ZeroDivisionError):
        raise JobError(f"not a rational number: {item!r}", path) from None


def point_at(item, path, ncols):
    if not isinstance(item, list) or len(item) != ncols:
        raise JobError(f"point must be a list of {ncols} rationals", path)
    return tuple(rational_at(c, path + (i,)) for i, c in enumerate(item))


# -- result formatting ---------------------------------------------------------------

def fmt(v):
    if isinstance(v, RealAlgebraicNumber):
        return v.value.__str__() if v.is_rational else str(v)
    return str(v)


def _ideal_result(I: IdealHandle, with_gb: bool = True) -> dict:
    out = {"generators": [str(g) for g in I.generators]}
    if with_gb:
        out["groebner_basis"] = [str(g) for g in groebner_basis(I)]
    return out


def _components(r: _Reader, ncols):
    comps = r.get("components", [])
    if not isinstance(comps, list):
        raise JobError("components must be a list", ("components",))
    out = []
    for i, c in enumerate(comps):
        path = ("components", i)
        if not isinstance(c, dict):
            raise JobError("component must be a mapping", path)
        extra = set(c) - {"complement_generators", "multiplicity", "point"}
        if extra:
            raise JobError(f"unknown field {sorted(extra)[0]!r}", path + (sorted(extra)[0],))
        gens = c.get("complement_generators", [])
        if not isinstance(gens, list):
            raise JobError("complement_generators must be a list", path + ("complement_generators",))
        gens = [poly_at(g, path + ("complement_generators", j), ncols) for j, g in enumerate(gens)]
        mult = c.get("multiplicity", "infinite")
        if mult in ("infinite", "inf", "INFINITE"):
            mult = eq.INFINITE
        elif isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
            raise JobError("multiplicity must be a positive integer or 'infinite'", path + ("multiplicity",))
        point = c.get("point")
        if point is not None:
            point = point_at(point, path + ("point",), ncols)
        try:
            out.append(eq.Component(gens, mult, point))
        except ValueError as e:
            raise JobError(str(e), path) from None
    return out


def _orbit_spec(r: _Reader):
    ncols = r.int("ncols", 1)
    vp = r.polys("vp_generators", ncols)
    comps = _components(r, ncols)
    try:
        return eq.OrbitClosureSpec(ncols, vp, comps)
    except ValueError as e:
        raise JobError(str(e), ("vp_generators",)) from None


def _system(r: _Reader):
    weak = r.polys("weak", None, [])
    strict = r.polys("strict", None, [])
    return semialg.EquivariantSignSystem(weak, strict)


def _decision(sys_, d: semialg.Decision) -> dict:
    out = {"outcome": d.outcome}
    if d.outcome == "unsupported":
        out["reason"] = d.reason
        return out
    if d.nonempty:
        out["kind"] = d.kind
        if d.kind == "constant":
            out["constant"] = fmt(d.constant)
        else:
            out["limit"] = str(d.limit)
        out["witness"] = [fmt(w) for w in d.witness]
        out["verification"] = _verification_table(sys_, d)
    return out


def _verification_table(sys_, d):
    rows = []
    values = list(d.witness)
    irrational = any(isinstance(w, RealAlgebraicNumber) and not w.is_rational for w in values)
    for label, polys, strict in (("weak", sys_.weak, False), ("strict", sys_.strict, True)):
        for f in polys:
            if irrational:
                ok = semialg.verify_witness(
                    semialg.EquivariantSignSystem([] if strict else [f], [f] if strict else []), values)
                rows.append({"constraint": f"{f} {'>' if strict else '>='} 0",
                             "tuples": 1, "min_value": None, "satisfied": ok})
                continue
            vals = [w.value if isinstance(w, RealAlgebraicNumber) else w for w in values]
            m = sys_.m
            least, count = None, 0
            for idx in itertools.permutations(range(len(vals)), m):
                pt = {VarIndex("main", i, 1): vals[k] for i, k in enumerate(idx, start=1)}
                v = evaluate(f, pt)
                count += 1
                least = v if least is None or v < least else least
            ok = least is not None and (least > 0 if strict else least >= 0)
            rows.append({"constraint": f"{f} {'>' if strict else '>='} 0",
                         "tuples": count, "min_value": str(least), "satisfied": ok})
    return rows


# -- commands -------------------------------------------------------------------------

def cmd_orbit_ideal(r, cap):
    spec = _orbit_spec(r)
    k = r.int("k")
    r.finish()
    try:
        I = eq.orbit_closure_generators(spec, k, cap)
    except eq.LevelTooSmall as e:
        raise JobError(str(e), ("k",)) from None
    return {"ncols": spec.ncols, "k": k}, _ideal_result(I)


def cmd_orbit_member(r, cap):
    spec = _orbit_spec(r)
    seq = r.get("sequence")
    if not isinstance(seq, dict):
        raise JobError("sequence must be a mapping with 'points' and/or 'tail'", ("sequence",))
    pts = seq.get("points", []) or []
    if not isinstance(pts, list):
        raise JobError("points must be a list", ("sequence", "points"))
    points = [point_at(p, ("sequence", "points", i), spec.ncols) for i, p in enumerate(pts)]
    tail = seq.get("tail")
    if tail is not None:
        tail = point_at(tail, ("sequence", "tail"), spec.ncols)
    r.finish()
    desc = eq.SequencePrefixDescriptor(spec.ncols, points, tail)
    try:
        member = eq.orbit_closure_member(spec, desc)
    except ValueError as e:
        raise JobError(str(e), ("components",)) from None
    return ({"points": [[str(c) for c in p] for p in points],
             "tail": None if tail is None else [str(c) for c in tail]},
            {"member": member})


def cmd_fixed_point(r, cap):
    ncols = r.int("ncols", 1)
    prime = r.polys("prime", ncols, [])
    k = r.int("k")
    r.finish()
    for i, f in enumerate(prime):
        if f.rows() - {1}:
            raise JobError("prime generators must use row 1 only", ("prime", i))
    I = eq.fixed_point_generators(prime, k, ncols, cap)
    return {"prime": [str(f) for f in prime], "k": k}, _ideal_result(I)


def _family(r: _Reader):
    fam = r.get("family")
    if not isinstance(fam, dict) or len(fam) != 1:
        raise JobError("family must be one of {grassmannian: {r, n}}, {hypersurface: {d, n}}, "
                       "{custom: {ncols, param_count, generators, local_params}}", ("family",))
    (kind, body), = fam.items()
    path = ("family", kind)
    if not isinstance(body, dict):
        raise JobError("family parameters must be a mapping", path)
    sub = _Reader(body)
    sub.used = set()
    try:
        if kind == "grassmannian":
            f = eq.grassmannian_family(sub.int("r"), sub.int("n"))
        elif kind == "hypersurface":
            f = eq.hypersurface_family(sub.int("d"), sub.int("n"))
        elif kind == "custom":
            ncols = sub.int("ncols")
            m = sub.int("param_count", minimum=0)
            gens = sub.polys("generators", ncols)
            local = sub.get("local_params", [])
            if not isinstance(local, list) or not all(isinstance(v, int) and 1 <= v <= m for v in local):
                raise JobError(f"local_params must list parameter indices in 1..{m}", ("local_params",))
            f = eq.FamilySpec(ncols, m, gens, tuple(local))
        else:
            raise JobError(f"unknown family {kind!r}", ())
        sub.finish()
    except JobError as e:
        raise JobError(str(e), path + e.path, e.at_key) from None
    except ValueError as e:
        raise JobError(str(e), path) from None
    return kind, f


def cmd_seq_ideal(r, cap):
    kind, fam = _family(r)
    k = r.int("k")
    r.finish()
    I = eq.seq_ideal_level(fam, k, cap)
    return ({"family": kind, "ncols": fam.ncols, "param_count": fam.param_count,
             "sigma_generators": [str(g) for g in fam.sigma_generators], "k": k},
            _ideal_result(I))


def cmd_vandermonde(r, cap):
    d, n, k = r.int("d"), r.int("n"), r.int("k")
    r.finish()
    return {"d": d, "n": n, "k": k}, _ideal_result(eq.vandermonde_seq_ideal(d, n, k, cap))


def cmd_grassmannian(r, cap):
    rr, n, k = r.int("r"), r.int("n"), r.int("k")
    r.finish()
    return {"r": rr, "n": n, "k": k}, _ideal_result(eq.grassmannian_seq_ideal(rr, n, k, cap))


def cmd_truncate(r, cap):
    ncols = r.int("ncols", 1)
    gens = r.polys("generators", ncols)
    k = r.int("k")
    check = r.get("check_stable", False)
    if not isinstance(check, bool):
        raise JobError("check_stable must be true or false", ("check_stable",))
    r.finish()
    spec = eq.SymmetricIdealSpec(ncols, gens)
    try:
        I = eq.orbit_truncate(spec, k, cap)
    except eq.WidthExceedsLevel as e:
        raise JobError(str(e), ("k",)) from None
    result = _ideal_result(I)
    if check:
        result["truncation_stable"] = eq.check_truncation_stable(spec, k, cap)
    return {"ncols": ncols, "generators": [str(g) for g in gens], "k": k}, result


def _order(r):
    name = r.get("order", "grevlex")
    if name not in ("grevlex", "lex"):
        raise JobError("order must be 'grevlex' or 'lex'", ("order",))
    return GREVLEX if name == "grevlex" else LEX


def cmd_member(r, cap):
    gens = r.polys("generators")
    f = poly_at(r.get("polynomial"), ("polynomial",))
    order = _order(r)
    r.finish()
    I = IdealHandle(gens, order, cap)
    nf = normal_form(f, I)
    return ({"generators": [str(g) for g in gens], "polynomial": str(f), "order": order.name},
            {"member": nf.is_zero(), "normal_form": str(nf)})


def cmd_radical_member(r, cap):
    gens = r.polys("generators")
    f = poly_at(r.get("polynomial"), ("polynomial",))
    r.finish()
    return ({"generators": [str(g) for g in gens], "polynomial": str(f)},
            {"radical_member": radical_member(f, IdealHandle(gens, GREVLEX, cap))})


def _decide_input(sys_):
    return {"weak": [str(f) for f in sys_.weak], "strict": [str(g) for g in sys_.strict], "m": sys_.m}


def cmd_decide(r, cap):
    sys_ = _system(r)
    mode = r.get("mode", "nonempty")
    if mode not in ("nonempty", "constant", "increasing", "decreasing"):
        raise JobError("mode must be nonempty, constant, increasing or decreasing", ("mode",))
    r.finish()
    if sys_.params:
        raise JobError("parameters need values; use the decide-fiber command", ("weak",))
    if not sys_.is_single_column():
        d = semialg.Decision.Unsupported("multi-column systems are outside the decidable fragment")
    elif mode == "nonempty":
        d = semialg.decide_nonempty(sys_)
    elif mode == "constant":
        d = semialg.decide_constant(sys_)
    else:
        d = semialg.decide_monotone(sys_, mode)
    return {**_decide_input(sys_), "mode": mode}, _decision(sys_, d)


def cmd_decide_fiber(r, cap):
    sys_ = _system(r)
    vals = r.get("values")
    if not isinstance(vals, dict):
        raise JobError("values must map parameters like 's[1]' to rationals", ("values",))
    assignment = {}
    for key, v in vals.items():
        p = poly_at(key, ("values", key))
        vs = p.variables()
        if len(vs) != 1 or next(iter(vs)).kind != "param" or p != p.variable(next(iter(vs))):
            raise JobError(f"{key!r} is not a parameter s[k]", ("values", key))
        assignment[next(iter(vs))] = rational_at(v, ("values", key))
    r.finish()
    missing = sys_.params - set(assignment)
    if missing:
        raise JobError("no value for " + ", ".join(sorted(map(str, missing))), ("values",))
    d = semialg.decide_fiber(sys_, assignment)
    fixed = sys_.map_polys(lambda f: substitute(f, assignment))
    return ({**_decide_input(sys_), "values": {str(k): str(v) for k, v in sorted(assignment.items())}},
            _decision(fixed, d))


def cmd_ngon_demo(r, cap):
    N = r.int("N", minimum=3)
    params = r.get("params", None)
    r.finish()
    if params is not None:
        if not isinstance(params, list):
            raise JobError("params must be a list of rationals or 'inf'", ("params",))
        params = [None if p in ("inf", "infinity") else rational_at(p, ("params", i))
                  for i, p in enumerate(params)]
    try:
        arr = geometry.ngon_instance(N, params)
    except ValueError as e:
        raise JobError(str(e), ("params",)) from None
    full = geometry.region_escapes_disk(arr)
    drops = [geometry.region_escapes_disk(arr.drop(j)) for j in range(N)]
    return ({"N": N, "params": None if params is None else [fmt(p) if p is not None else "inf" for p in params]},
            {"lines": [[str(c) for c in t] for t in arr.lines],
             "offsets_positive": arr.offsets_positive(),
             "full_escapes_disk": full,
             "drop_one_escapes_disk": drops,
             "bounded_size_witness": (not full) and all(drops)})


COMMANDS = {
    "orbit-ideal": cmd_orbit_ideal,
    "orbit-member": cmd_orbit_member,
    "fixed-point": cmd_fixed_point,
    "seq-ideal": cmd_seq_ideal,
    "vandermonde": cmd_vandermonde,
    "grassmannian": cmd_grassmannian,
    "truncate": cmd_truncate,
    "member": cmd_member,
    "radical-member": cmd_radical_member,
    "decide": cmd_decide,
    "decide-fiber": cmd_decide_fiber,
    "ngon-demo": cmd_ngon_demo,
}


# -- running -----------------------------------------------------------------------------

def _human(command, inputs, result) -> str:
    lines = [f"command: {command}"]
    for key, val in inputs.items():
        lines.append(f"  {key}: {_inline(val)}")
    lines.append("result:")
    for key, val in result.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"  {key}:")
            for row in val:
                lines.append("    - " + ", ".join(f"{k}={_inline(v)}" for k, v in row.items()))
        elif isinstance(val, list) and len(val) > 3 and all(isinstance(v, str) for v in val):
            lines.append(f"  {key}:")
            lines.extend(f"    {v}" for v in val)
        else:
            lines.append(f"  {key}: {_inline(val)}")
    return "\n".join(lines)


def _inline(val):
    if isinstance(val, list):
        return "[" + ", ".join(_inline(v) for v in val) + "]"
    if isinstance(val, dict):
        return "{" + ", ".join(f"{k}: {_inline(v)}" for k, v in val.items()) + "}"
    if isinstance(val, bool):
        return str(val).lower()
    return "-" if val is None else str(val)


def run_text(text: str, name: str = "<job>", degree_cap: int | None = None,
             timing: bool = True) -> Report:
    """Run a job given as YAML text and render its report."""
    try:
        root = yaml.compose(text)
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f"{name}:{mark.line + 1}:{mark.column + 1}" if mark else name
        return Report(f"{where}: invalid YAML: {getattr(e, 'problem', e)}", EXIT_INVALID)
    start = time.perf_counter()
    try:
        if not isinstance(data, dict):
            raise JobError("job file must be a mapping with a 'command' key")
        command = data.get("command")
        if command not in COMMANDS:
            raise JobError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}",
                           ("command",))
        reader = _Reader(data)
        cap = degree_cap
        if cap is None:
            cap = reader.int("degree_cap", DEFAULT_DEGREE_CAP)
        else:
            reader.used.add("degree_cap")
        inputs, result = COMMANDS[command](reader, cap)
    except JobError as e:
        loc = _locate(root, e.path, e.at_key) if root is not None else None
        where = f"{name}:{loc[0]}:{loc[1]}" if loc else name
        return Report(f"{where}: {e}", EXIT_INVALID)
    except DegreeCapExceeded as e:
        return Report(f"{name}: degree cap exceeded: {e}", EXIT_LIMIT)
    elapsed = time.perf_counter() - start
    payload = {"schema_version": SCHEMA_VERSION, "job": name, "command": command,
               "input": {**inputs, "degree_cap": cap}, "result": result}
    if timing:
        payload["wall_time_s"] = round(elapsed, 6)
    text_out = _human(command, payload["input"], result)
    if timing:
        text_out += f"\nwall time: {elapsed:.3f} s"
    text_out += "\n\n```json\n" + json.dumps(payload, indent=2, sort_keys=True) + "\n```"
    code = EXIT_LIMIT if result.get("outcome") == "unsupported" else EXIT_OK
    return Report(text_out, code)


def run_job(path: str, degree_cap: int | None = None, timing: bool = True) -> Report:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        return Report(f"{path}: cannot read job file: {e.strerror}", EXIT_INVALID)
    try:
        return run_text(text, path, degree_cap, timing)
    except Exception as e:  # noqa: BLE001 - every failure must map to an exit code
        return Report(f"{path}: internal error: {type(e).__name__}: {e}", EXIT_INTERNAL)


def _run_args(args):
    return run_job(*args)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="orbitalg", description=__doc__.split("\n\n")[0])
    ap.add_argument("--job", action="append", required=True, metavar="FILE",
                    help="job file (YAML); repeat for several jobs")
    ap.add_argument("--degree-cap", type=int, default=None, metavar="D",
                    help=f"override the Groebner degree cap (default {DEFAULT_DEGREE_CAP})")
    ap.add_argument("--no-timing", action="store_true", help="omit wall times from reports")
    ap.add_argument("--jobs", type=int, default=1, metavar="N", help="run up to N jobs in parallel")
    args = ap.parse_args(argv)
    if args.degree_cap is not None and args.degree_cap < 1:
        ap.error("--degree-cap must be positive")
    if args.jobs < 1:
        ap.error("--jobs must be positive")
    work = [(p, args.degree_cap, not args.no_timing) for p in args.job]
    if args.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_args, work))
    else:
        reports = [_run_args(w) for w in work]
    code = EXIT_OK
    for i, rep in enumerate(reports):
        if rep.exit_code == EXIT_OK or rep.exit_code == EXIT_LIMIT and rep.text.startswith("command:"):
            if i:
                print()
            print(rep.text)
        else:
            print(rep.text, file=sys.stderr)
        code = max(code, rep.exit_code)
    return code


if __name__ == "__main__":
    sys.exit(main())
