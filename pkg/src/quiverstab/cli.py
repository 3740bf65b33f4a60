"""``quiverstab`` command line.

Every command prints one JSON record per result (keys in a fixed order,
rationals as "a/b") or, with ``--table``, a plain text rendering.

Exit codes: 0 ok, 1 domain or validation error, 2 parse error,
3 search budget exceeded (the required budget goes to stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import census, formats, presets, structure
from .errors import ParseError, QuiverStabError, SearchBudgetExceeded
from .ktheory import GClass, canonical_gamma, dual_basis_matrix, g_class, pairing, pairing_object
from .linalg import FieldSpec
from .stability import StabilityData, filtration_enumerate_max, hn_filtration, is_semistable, slope
from .subreps import DEFAULT_BUDGET


class _Usage(Exception):
    """Bad flag combination; reported like a parse error."""


def q(x) -> str:
    return str(Fraction(x))


def _vec(xs):
    return [q(x) for x in xs]


def _cls(c):
    return list(GClass(c).coeffs)


# -- input resolution ----------------------------------------------------------

class _Context:
    def __init__(self, args):
        self.args = args
        self.preset = args.preset
        try:
            self.field = FieldSpec.parse(args.field)
        except ValueError as exc:
            raise ParseError(f"--field: {exc}") from None
        self.rep = None
        self.stab = {"beta": None, "gamma": "canonical", "alpha": None}
        if args.stability:
            path = Path(args.stability)
            self.stab = formats.parse_stability(path.read_text(), str(path))
        if args.rep:
            path = Path(args.rep)
            self.rep = formats.parse_representation(path.read_text(), str(path), base=path.parent)
            self.algebra = self.rep.algebra
            self.field = self.rep.field
            self.name = str(path)
        elif args.algebra:
            path = Path(args.algebra)
            self.algebra = formats.parse_algebra(path.read_text(), str(path))
            self.name = str(path)
        elif args.preset:
            self.algebra = presets.algebra(args.preset)
            self.name = args.preset
        else:
            raise _Usage("one of --preset, --algebra or --rep is required")
        if args.beta is not None:
            self.stab["beta"] = self._vector(args.beta, "--beta")
        if args.gamma is not None:
            self.stab["gamma"] = "canonical" if args.gamma == "canonical" else self._vector(args.gamma, "--gamma")
        if args.alpha is not None:
            self.stab["alpha"] = self._vector(args.alpha, "--alpha")

    def _vector(self, text, flag):
        try:
            v = formats.parse_vector(text, flag)
        except ParseError as exc:
            raise ParseError(f"{flag}: {exc}") from None
        if len(v) != self.algebra.n:
            raise ParseError(f"{flag} needs {self.algebra.n} entries, got {len(v)}")
        if flag == "--alpha" and any(x.denominator != 1 or x < 0 for x in v):
            raise ParseError("--alpha must be a nonnegative integer vector")
        return v

    def object(self):
        """(label, representation) from --rep or --object."""
        if self.rep is not None:
            return self.name, self.rep
        name = self.args.object
        if not name:
            raise _Usage("--object or --rep is required")
        table = presets.objects(self.preset, self.field) if self.args.preset and not self.args.algebra \
            else presets.standard_objects(self.algebra, self.field)
        if name not in table:
            raise KeyError(f"unknown object {name!r}; choose from {sorted(table)}")
        return name, table[name]

    def alpha(self):
        a = self.stab["alpha"]
        if a is None:
            raise _Usage("--alpha is required")
        return GClass(a)

    def beta(self):
        if self.stab["beta"] is None:
            raise _Usage("--beta is required")
        return self.stab["beta"]

    def stability(self, alpha):
        g = self.stab["gamma"]
        gamma = canonical_gamma(self.algebra, alpha) if g == "canonical" else g
        return StabilityData(self.beta(), gamma, alpha)

    @property
    def budget(self):
        return self.args.budget


# -- commands ------------------------------------------------------------------

def _rep_record(v):
    return {"dims": list(v.dims),
            "maps": {a.name: formats.format_matrix(m) for a, m in zip(v.algebra.arrows, v.maps)
                     if m.rows and m.cols}}


def cmd_validate(ctx):
    alg = ctx.algebra
    rec = {"command": "validate", "algebra": ctx.name, "vertices": list(alg.vertices),
           "arrows": [a.name for a in alg.arrows], "relations": len(alg.relations),
           "path_algebra_dim": alg.path_count()}
    if ctx.rep is not None:
        rec["rep"] = {"field": str(ctx.rep.field), **_rep_record(ctx.rep)}
    if ctx.args.preset and not (ctx.args.rep or ctx.args.algebra):
        rec["objects"] = sorted(presets.objects(ctx.preset, ctx.field))
    rec["ok"] = True
    yield rec


def cmd_presets(ctx):
    for name in presets.PRESETS:
        alg = presets.algebra(name)
        yield {"command": "presets", "name": name, "description": presets.DESCRIPTIONS[name],
               "vertices": list(alg.vertices),
               "arrows": [f"{a.name}: {a.source} -> {a.target}" for a in alg.arrows],
               "relations": [formats.format_relation(r) for r in alg.relations],
               "objects": list(presets.objects(name, FieldSpec(2)))}


def cmd_pairing(ctx):
    pm = dual_basis_matrix(ctx.algebra)
    yield {"command": "pairing", "algebra": ctx.name, "vertices": list(ctx.algebra.vertices),
           "matrix": [_vec(r) for r in pm.entries], "tau": _vec(pm.tau), "diagonal": pm.is_diagonal()}
    if ctx.stab["beta"] is not None and (ctx.rep is not None or ctx.args.object):
        label, v = ctx.object()
        beta = ctx.beta()
        yield {"command": "pairing", "object": label, "beta": _vec(beta), "class": _cls(v.dims),
               "value": q(pairing(beta, g_class(v), pm.tau)), "via_hom": q(pairing_object(beta, v))}


def cmd_jh(ctx):
    label, v = ctx.object()
    jh = structure.jordan_holder(v)
    yield {"command": "jh", "object": label, "class": _cls(v.dims), "length": jh.length,
           "factors": list(jh.factors),
           "gr": _cls(structure.gr(v)), "semisimple": structure.is_semisimple(v)}


def _object_stability(ctx):
    label, v = ctx.object()
    return label, v, ctx.stability(g_class(v))


def _stab_fields(sd):
    return {"beta": _vec(sd.beta), "gamma": _vec(sd.gamma)}


def cmd_slope(ctx):
    label, v, sd = _object_stability(ctx)
    yield {"command": "slope", "object": label, "class": _cls(v.dims), **_stab_fields(sd),
           "slope": q(slope(sd, v))}


def cmd_ss(ctx):
    label, v, sd = _object_stability(ctx)
    ok, cert = is_semistable(sd, v, ctx.budget)
    yield {"command": "ss", "object": label, "class": _cls(v.dims), **_stab_fields(sd),
           "slope": q(slope(sd, v)), "semistable": ok,
           "destabilizer": None if cert is None else {"class": list(cert.dims), "slope": q(slope(sd, cert))}}


def _hn_type(t):
    return [{"class": _cls(c), "slope": q(s)} for c, s in t]


def cmd_hn(ctx):
    label, v, sd = _object_stability(ctx)
    f = hn_filtration(sd, v, ctx.budget)
    yield {"command": "hn", "object": label, "class": _cls(v.dims), **_stab_fields(sd),
           "hn_type": _hn_type(f.hn_type), "steps": [list(e.dims) for e in f.steps]}


def cmd_mu(ctx):
    label, v, sd = _object_stability(ctx)
    f, mu = filtration_enumerate_max(sd, v, ctx.args.weight_bound, ctx.budget)
    yield {"command": "mu", "object": label, "class": _cls(v.dims), **_stab_fields(sd),
           "weight_bound": ctx.args.weight_bound, "weights": list(f.weights),
           "steps": [list(e.dims) for e in f.steps], "graded_classes": [_cls(c) for c in f.graded_classes()],
           "numerator": q(mu.numerator), "norm_sq": q(mu.norm_sq), "mu_signed_square": q(mu.signed_square),
           "semistable": mu.numerator <= 0}


def _catalog(ctx):
    return census.enumerate_reps(ctx.algebra, ctx.alpha(), ctx.field, budget=ctx.budget)


def cmd_census(ctx):
    cat = _catalog(ctx)
    sd = ctx.stability(cat.alpha) if ctx.stab["beta"] is not None and not cat.alpha.is_zero() else None
    reps = []
    n_ss = 0
    for k, v in enumerate(cat.representatives):
        r = {"index": k, **_rep_record(v), "semisimple": structure.is_semisimple(v)}
        if cat.orbit_sizes is not None:
            r["orbit_size"] = cat.orbit_sizes[k]
        if sd is not None:
            r["semistable"] = is_semistable(sd, v, ctx.budget)[0]
            n_ss += r["semistable"]
        reps.append(r)
    rec = {"command": "census", "algebra": ctx.name, "field": str(cat.field), "alpha": _cls(cat.alpha),
           "classes": len(cat), "tuples": cat.tuple_count, "certified": cat.completeness_certified()}
    if sd is not None:
        rec.update(_stab_fields(sd))
        rec["semistable"] = n_ss
    rec["representatives"] = reps
    yield rec


def cmd_strata(ctx):
    cat = _catalog(ctx)
    rep = census.theta_strata(cat, ctx.stability(cat.alpha), ctx.budget)
    index = {v: k for k, v in enumerate(cat.representatives)}
    for s in rep.strata:
        yield {"command": "strata", "alpha": _cls(cat.alpha), "hn_type": _hn_type(s.hn_type),
               "semistable": s.semistable, "count": len(s.representatives),
               "representatives": [index[v] for v in s.representatives]}
    yield {"command": "strata", "alpha": _cls(cat.alpha),
           "closed_point": None if rep.closed_point is None else index[rep.closed_point]}


def cmd_cover(ctx):
    cat = _catalog(ctx)
    cover = census.minimal_cover_vector(cat.alpha)
    yield {"command": "cover", "alpha": _cls(cat.alpha),
           "cover_vector": {ctx.algebra.vertices[j]: n for j, n in cover.items()},
           "classes": len(cat), "ok": census.cover_check(cat)}


def cmd_closed(ctx):
    alphas = census.effective_classes(ctx.algebra.n, ctx.args.max_total)
    for a, v in census.closed_points(ctx.algebra, alphas, ctx.field):
        yield {"command": "closed", "alpha": _cls(a), "closed_point": _rep_record(v)}


COMMANDS = {
    "validate": (cmd_validate, "check an algebra (and optionally a representation)"),
    "presets": (cmd_presets, "list the built-in algebras and named objects"),
    "pairing": (cmd_pairing, "pairing matrix <P_i, S_j>; with --beta also <beta, V>"),
    "jh": (cmd_jh, "Jordan-Hoelder factors, length and gr of an object"),
    "slope": (cmd_slope, "slope of an object"),
    "ss": (cmd_ss, "semistability test with a destabilizing certificate"),
    "hn": (cmd_hn, "Harder-Narasimhan filtration and type"),
    "mu": (cmd_mu, "maximize mu over weighted filtrations"),
    "census": (cmd_census, "isomorphism classes of a dimension vector over F_p"),
    "strata": (cmd_strata, "HN strata of a census"),
    "cover": (cmd_cover, "check every census object is a quotient of the cover"),
    "closed": (cmd_closed, "semisimple closed points for all classes up to --max-total"),
}


# -- output --------------------------------------------------------------------

def _cell(x):
    if isinstance(x, str):
        return x
    return json.dumps(x, separators=(",", ":"))


def render_table(rec) -> str:
    lines = []
    scalar = [(k, v) for k, v in rec.items() if not (isinstance(v, list) and v and isinstance(v[0], dict))]
    width = max((len(k) for k, _ in scalar), default=0)
    lines += [f"{k.ljust(width)}  {_cell(v)}" for k, v in scalar]
    for k, v in rec.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            cols = list(v[0])
            rows = [[_cell(r.get(c)) for c in cols] for r in v]
            ws = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
            lines.append(f"{k}:")
            lines.append("  " + "  ".join(c.ljust(w) for c, w in zip(cols, ws)).rstrip())
            lines += ["  " + "  ".join(x.ljust(w) for x, w in zip(r, ws)).rstrip() for r in rows]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverstab", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--preset", choices=sorted(presets.PRESETS))
    src.add_argument("--algebra", help="algebra file")
    src.add_argument("--rep", help="representation file")
    src.add_argument("--object", help="named object (S<v>, P<v>, preset extras)")
    src.add_argument("--stability", help="stability file")
    src.add_argument("--field", default="F2", help="Q or F<p> (default F2)")
    st = common.add_argument_group("stability")
    st.add_argument("--beta", help="comma-separated rationals; use --beta=-1,2 for a leading minus")
    st.add_argument("--gamma", help="'canonical' (default) or comma-separated rationals")
    st.add_argument("--alpha", help="dimension vector, e.g. 1,1")
    run = common.add_argument_group("search")
    run.add_argument("--weight-bound", type=int, default=2)
    run.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    run.add_argument("--max-total", type=int, default=3, help="largest |alpha| for 'closed'")
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="table", action="store_false", help="JSON records (default)")
    out.add_argument("--table", dest="table", action="store_true", help="plain text table")
    common.set_defaults(table=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "presets":
            ctx = argparse.Namespace(args=args)
            records = list(cmd_presets(ctx))
        else:
            ctx = _Context(args)
            records = list(COMMANDS[args.command][0](ctx))
    except (ParseError, _Usage) as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    except SearchBudgetExceeded as exc:
        print(f"budget exceeded: {exc.what} needs {exc.required} (budget {exc.budget}); "
              f"rerun with --budget {exc.required}", file=err)
        return 3
    except (QuiverStabError, KeyError, OSError, ValueError) as exc:
        name = type(exc).__name__
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {name}: {msg}", file=err)
        return 1
    for k, rec in enumerate(records):
        if args.table:
            if k:
                print(file=out)
            print(render_table(rec), file=out)
        else:
            print(json.dumps(rec, separators=(", ", ": ")), file=out)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
