"""``mfcat``: run one operation on a JSON problem document.

    mfcat <subcommand> --input FILE [--window=LO..HI] [--json OUT] [--seed N] [--timing]

Exit status is 0 on success, 1 when a mathematical check fails and 2 on
malformed input.  The JSON report is byte-identical across runs unless
``--timing`` asks for wall-clock timings.
"""
from __future__ import annotations

import argparse
import contextlib
import hashlib
import json
import re
import sys
import time
import warnings
from importlib import resources
from typing import Callable

import jsonschema

from . import cohomology, functors, mfcore, rees, segal, singularity
from .groebner import buchberger
from .errors import InputError, MathematicalFailure, MFCatError, SchemaError, ShapeMismatch, VariableLeak
from .mfcore import MatrixFactorization, MFMorphism
from .ring import GradedRing, Polynomial, polynomial_ring

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


@contextlib.contextmanager
def _at(location: str):
    """Tag errors raised inside with the document path they came from."""
    try:
        yield
    except MFCatError as exc:
        if not getattr(exc, "location", None):
            exc.location = location
        raise


def load_schema() -> dict:
    text = resources.files("mfcat").joinpath("data/problem.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate_document(doc) -> None:
    validator = jsonschema.Draft202012Validator(load_schema())
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        path = "/".join(str(p) for p in e.absolute_path) or "<root>"
        err = SchemaError(f"{e.message}")
        err.location = path
        raise err


def _degree(value):
    return [value] if isinstance(value, int) else list(value)


def _jsonable(x):
    if isinstance(x, float) and x == float("inf"):
        return "infinite"
    if isinstance(x, Polynomial):
        return str(x)
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


class Problem:
    """A validated document with lazily built, cached objects."""

    def __init__(self, doc: dict):
        validate_document(doc)
        self.doc = doc
        with _at("ring"):
            spec = doc["ring"]
            names = [v["name"] for v in spec["variables"]]
            if len(set(names)) != len(names):
                raise InputError("variable names must be unique")
            degrees = [_degree(v.get("degree", 1)) for v in spec["variables"]]
            if len({len(d) for d in degrees}) > 1:
                raise InputError("all variable degrees need the same number of channels")
            kwargs = {}
            if "slicing_channel" in spec:
                kwargs["slicing_channel"] = spec["slicing_channel"]
            self.ring: GradedRing = polynomial_ring(names, degrees, **kwargs)
        self._mf = {}
        self._koszul = {}
        self._morphisms = {}

    def poly(self, value, location) -> Polynomial:
        with _at(location):
            return self.ring(value)

    @property
    def potential(self) -> Polynomial | None:
        if "potential" not in self.doc:
            return None
        return self.poly(self.doc["potential"], "potential")

    def matrix(self, rows, location):
        return [[self.poly(e, f"{location}[{i}][{j}]") for j, e in enumerate(row)] for i, row in enumerate(rows)]

    def koszul(self, name) -> functors.KoszulData:
        table = self.doc.get("koszul", {})
        if name not in table:
            raise InputError(f"no Koszul data named {name!r}")
        if name not in self._koszul:
            spec, loc = table[name], f"koszul/{name}"
            s = [self.poly(p, f"{loc}/s[{i}]") for i, p in enumerate(spec["s"])]
            s_Y = [self.poly(p, f"{loc}/s_Y[{i}]") for i, p in enumerate(spec["s_Y"])]
            W = spec.get("potential", self.doc.get("potential"))
            W = None if W is None else self.poly(W, f"{loc}/potential")
            with _at(loc):
                self._koszul[name] = functors.koszul_data(
                    self.ring, s, s_Y, W, spec.get("w"), spec.get("slot_degrees"), spec.get("base_shift"))
        return self._koszul[name]

    def factorization(self, name, verify=True) -> MatrixFactorization:
        table = self.doc.get("factorizations", {})
        if name not in table:
            if name in self.doc.get("koszul", {}):
                with _at(f"koszul/{name}"):
                    return functors.koszul_brane(self.koszul(name))
            raise InputError(f"no factorization named {name!r}")
        key = (name, verify)
        if key not in self._mf:
            spec, loc = table[name], f"factorizations/{name}"
            if "koszul" in spec:
                with _at(loc):
                    mf = functors.koszul_brane(self.koszul(spec["koszul"]))
            else:
                W = spec.get("potential", self.doc.get("potential"))
                if W is None:
                    err = InputError("no potential given for this factorization or the document")
                    err.location = loc
                    raise err
                W = self.poly(W, f"{loc}/potential")
                alpha = self.matrix(spec["alpha"], f"{loc}/alpha")
                beta = self.matrix(spec["beta"], f"{loc}/beta")
                with _at(loc):
                    mf = MatrixFactorization(self.ring, W, spec["shifts0"], spec["shifts1"], alpha, beta,
                                             spec.get("w"), verify=False)
                    shape = mf.shape_errors()
                    if shape:
                        raise ShapeMismatch("; ".join(shape))
                    if verify:
                        mf.verify()
            self._mf[key] = mf
        return self._mf[key]

    def names(self) -> list:
        return list(self.doc.get("factorizations", {}))

    def morphism(self, name) -> MFMorphism:
        table = self.doc.get("morphisms", {})
        if name not in table:
            raise InputError(f"no morphism named {name!r}")
        if name not in self._morphisms:
            spec, loc = table[name], f"morphisms/{name}"
            src = self.factorization(spec["source"])
            tgt = self.factorization(spec["target"])
            parity = spec.get("parity", 0)
            parity = {"even": 0, "odd": 1}.get(parity, parity)
            b0 = self.matrix(spec["block0"], f"{loc}/block0")
            b1 = self.matrix(spec["block1"], f"{loc}/block1")
            with _at(loc):
                self._morphisms[name] = MFMorphism(src, tgt, spec.get("weight", 0), parity, b0, b1)
        return self._morphisms[name]


def _pick(problem: Problem, args: dict, key: str):
    """Factorization named by ``args[key]``, or the only one in the document."""
    if key in args:
        return args[key]
    names = problem.names()
    if len(names) == 1:
        return names[0]
    kz = list(problem.doc.get("koszul", {}))
    if not names and len(kz) == 1:
        return kz[0]
    raise InputError(f"argument {key!r} is required: the document has {len(names)} factorizations")


def _mf_result(mf: MatrixFactorization) -> dict:
    return {"factorization": mf.to_dict(), "rank": list(mf.rank)}


def _parse_window(text):
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m:
        raise InputError(f"window must look like LO..HI, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise InputError(f"empty window {lo}..{hi}")
    return lo, hi


def _window(problem, args, flags):
    if flags.window is not None:
        return _parse_window(flags.window)
    if "window" in args:
        w = args["window"]
        return _parse_window(w) if isinstance(w, str) else tuple(w)
    return cohomology.default_window(problem.ring)


# subcommands: each returns (result, diagnostics, ok)

def cmd_verify(problem, args, flags):
    names = [args["mf"]] if "mf" in args else problem.names()
    if not names:
        raise InputError("nothing to verify")
    result, ok = {}, True
    for name in names:
        mf = problem.factorization(name, verify=False)
        report = mf.diagnose()
        curv = "ok" if not (report["curvature"] or report["shape"]) else "fail"
        homog = "ok" if not report["homogeneity"] else "fail"
        ok = ok and curv == "ok" and homog == "ok"
        result[name] = {
            "curvature": curv,
            "homogeneity": homog,
            "errors": report["shape"] + report["curvature"] + report["homogeneity"],
        }
    return result, [], ok


def _unary(op: Callable):
    def run(problem, args, flags):
        return _mf_result(op(problem.factorization(_pick(problem, args, "mf")))), [], True
    return run


def cmd_twist(problem, args, flags):
    if "k" not in args:
        raise InputError("twist needs args.k")
    mf = problem.factorization(_pick(problem, args, "mf"))
    return _mf_result(mfcore.twist(mf, args["k"])), [], True


def _binary(op: Callable):
    def run(problem, args, flags):
        for key in ("a", "b"):
            if key not in args:
                raise InputError(f"argument {key!r} is required")
        return _mf_result(op(problem.factorization(args["a"]), problem.factorization(args["b"]))), [], True
    return run


def _single(problem, table, args, key):
    if key in args:
        return args[key]
    names = list(problem.doc.get(table, {}))
    if len(names) == 1:
        return names[0]
    raise InputError(f"argument {key!r} is required")


def cmd_cone(problem, args, flags):
    phi = problem.morphism(_single(problem, "morphisms", args, "morphism"))
    return _mf_result(mfcore.cone(phi)), [], True


def cmd_koszul(problem, args, flags):
    name = _single(problem, "koszul", args, "koszul")
    with _at(f"koszul/{name}"):
        return _mf_result(functors.koszul_brane(problem.koszul(name))), [], True


def cmd_knorrer(problem, args, flags):
    name = _single(problem, "koszul", args, "koszul")
    data = problem.koszul(name)
    base_ring = None
    if "base_variables" in args:
        ring = problem.ring
        try:
            base_ring = polynomial_ring(args["base_variables"],
                                        [ring.degrees[ring.index(v)] for v in args["base_variables"]])
        except MFCatError as exc:
            raise VariableLeak(str(exc)) from None
    shifts = args.get("base_shifts", [problem.ring.zero_degree])
    with _at(f"koszul/{name}"):
        mf = functors.knorrer_lift(shifts, data, base_ring)
    return _mf_result(mf), [], True


def cmd_coker(problem, args, flags):
    mf = problem.factorization(_pick(problem, args, "mf"))
    pres = functors.coker_presentation(mf)
    lo, hi = _window(problem, args, flags) if (flags.window or "window" in args) else (0, 10)
    return {
        "matrix": pres.matrix.tolist(),
        "generator_shifts": [list(s) for s in pres.generator_shifts],
        "relation_shifts": [list(s) for s in pres.relation_shifts],
        "hilbert_function": {str(k): pres.hilbert_function(k) for k in range(lo, hi + 1)},
    }, [], True


def cmd_ext(problem, args, flags):
    name = args.get("source") or _pick(problem, args, "mf")
    src = problem.factorization(name)
    tgt = problem.factorization(args.get("target", name))
    window = _window(problem, args, flags)
    table = cohomology.ext_table(src, tgt, window)
    diag = ["window is a truncation: slices outside it were not computed"]
    result = table.as_dict()
    result["nonzero"] = [list(s.degree) for s in table.nonzero()]
    return result, diag, True


def cmd_nullhomotopy(problem, args, flags):
    phi = problem.morphism(_single(problem, "morphisms", args, "morphism"))
    h = cohomology.find_nullhomotopy(phi)
    return {"nullhomotopic": h is not None, "witness": h.to_dict() if h is not None else None}, [], True


def cmd_annihilation(problem, args, flags):
    name = args.get("source", args.get("mf")) or _pick(problem, args, "mf")
    src = problem.factorization(name, verify=not args.get("unchecked", False))
    tgt = problem.factorization(args.get("target", name), verify=not args.get("unchecked", False))
    report = cohomology.tyurina_annihilation(src, tgt, _window(problem, args, flags))
    return report.as_dict(), [], report.ok


def _potential(problem, args):
    if "potential" in args:
        return problem.poly(args["potential"], "command/args/potential")
    W = problem.potential
    if W is None:
        raise InputError("no potential given")
    return W


def cmd_jacobi(problem, args, flags):
    W = _potential(problem, args)
    jac = singularity.jacobi_ideal(W)
    gb = buchberger(jac)
    tgb = buchberger(singularity.tyurina_ideal(W))
    return {
        "potential": str(W),
        "jacobi_generators": [str(g) for g in jac.generators],
        "jacobi_groebner_basis": [str(g) for g in gb.elements],
        "tyurina_groebner_basis": [str(g) for g in tgb.elements],
        "euler_identity": singularity.euler_identity_check(W) if W.homogeneous_degree() is not None else None,
    }, [], True


def cmd_milnor(problem, args, flags):
    W = _potential(problem, args)
    return {
        "potential": str(W),
        "milnor": _jsonable(singularity.milnor_number(W)),
        "tyurina": _jsonable(singularity.tyurina_number(W)),
    }, [], True


def cmd_segal(problem, args, flags):
    spec = problem.doc.get("labels")
    if spec is None:
        raise InputError("segal needs a 'labels' section")
    N = spec["N"]
    ring = segal.coordinate_ring(N)
    result = {"N": N}
    result["canonicalize"] = [
        {"input": [a, b], "canonical": [c.a, c.b]}
        for a, b in spec.get("canonicalize", [])
        for c in [segal.segal_canonicalize(segal.BigradedLabel(a, b, N))]
    ]
    homs = []
    for i, item in enumerate(spec.get("hom", [])):
        src = segal.BigradedLabel(*item["source"], N)
        tgt = segal.BigradedLabel(*item["target"], N)
        with _at(f"labels/hom[{i}]"):
            try:
                dim = segal.segal_hom_dimension(src, tgt, ring)
            except ValueError as exc:
                raise InputError(str(exc)) from None
        homs.append({"source": item["source"], "target": item["target"], "dimension": dim})
    result["hom"] = homs
    if "table" in spec:
        table = segal.hom_table(N, spec["table"], ring)
        result["table"] = [{"source": [a, b], "target": [a2, b2], "dimension": d}
                           for (a, b, a2, b2), d in table.items()]
    return result, [], True


def cmd_degenerate(problem, args, flags):
    name = _single(problem, "charts", args, "chart")
    spec = problem.doc["charts"][name]
    for v in spec["weights"]:
        with _at(f"charts/{name}/weights"):
            problem.ring.index(v)
    chart = rees.ReesChart(dict(spec["weights"]), spec["d"], spec.get("alpha_order"))
    mf = problem.factorization(args["mf"]) if "mf" in args else None
    if mf is not None:
        W = mf.W
    else:
        W = _potential(problem, args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        with _at(f"charts/{name}"):
            fam = rees.rees_degenerate(W, chart, mf)
    points = args.get("points", [0, 1])
    fibers = []
    for c in points:
        Wc, mfc = fam.specialize(c)
        entry = {"t": c, "potential": str(Wc)}
        if mfc is not None:
            entry["factorization"] = mfc.to_dict()
            entry["verified"] = True
        fibers.append(entry)
    return {
        "potential_t": {str(k): str(p) for k, p in fam.potential.items()},
        "leading_form": str(rees.leading_form(W, chart.weights)),
        "fibers": fibers,
    }, list(fam.warnings), True


COMMANDS = {
    "verify": cmd_verify,
    "suspend": _unary(mfcore.suspension),
    "twist": cmd_twist,
    "cone": cmd_cone,
    "sum": _binary(mfcore.direct_sum),
    "dual": _unary(mfcore.dual),
    "tensor": _binary(functors.tensor_product),
    "koszul": cmd_koszul,
    "knorrer": cmd_knorrer,
    "coker": cmd_coker,
    "ext": cmd_ext,
    "nullhomotopy": cmd_nullhomotopy,
    "annihilation": cmd_annihilation,
    "jacobi": cmd_jacobi,
    "milnor": cmd_milnor,
    "segal": cmd_segal,
    "degenerate": cmd_degenerate,
}


def run(command: str, raw: bytes, flags) -> tuple:
    """Execute ``command`` on the document bytes; returns (report, exit code)."""
    report = {
        "command": command,
        "input_hash": hashlib.sha256(raw).hexdigest(),
        "result": None,
        "diagnostics": [],
        "timing_ms": 0,
    }
    start = time.perf_counter()
    code = EXIT_OK
    try:
        try:
            doc = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise SchemaError(f"input is not valid JSON: {exc}") from None
        problem = Problem(doc)
        cmd = doc.get("command", {})
        if cmd.get("name") not in (None, command):
            raise InputError(f"document is for {cmd['name']!r}, not {command!r}")
        result, diagnostics, ok = COMMANDS[command](problem, cmd.get("args", {}), flags)
        report["result"] = _jsonable(result)
        report["diagnostics"] = list(diagnostics)
        code = EXIT_OK if ok else EXIT_MATH
    except (InputError, ValueError) as exc:
        code = EXIT_INPUT
        _fail(report, exc)
    except (MathematicalFailure, MFCatError) as exc:
        code = EXIT_MATH
        _fail(report, exc)
    if flags.seed is not None:
        report["diagnostics"].append(f"seed {flags.seed}")
    if flags.timing:
        report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return report, code


def _fail(report, exc):
    loc = getattr(exc, "location", None)
    report["result"] = {"error": {"type": type(exc).__name__, "message": str(exc), "location": loc}}
    where = f" at {loc}" if loc else ""
    report["diagnostics"].append(f"{type(exc).__name__}{where}: {exc}")


# human output

def _table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _format_mf(d: dict) -> str:
    rows = [("potential", d["potential"]), ("w", d["w"]), ("shifts0", d["shifts0"]),
            ("shifts1", d["shifts1"]), ("alpha", d["alpha"]), ("beta", d["beta"])]
    return _table(["field", "value"], rows)


def render(report: dict) -> str:
    out = []
    res = report["result"]
    cmd = report["command"]
    if isinstance(res, dict) and "error" in res:
        return "\n".join(f"error: {d}" for d in report["diagnostics"])
    elif cmd == "verify":
        for name, r in res.items():
            out.append(f"{name}: curvature: {r['curvature']}, homogeneity: {r['homogeneity']}")
            out += [f"  {msg}" for msg in r["errors"]]
    elif cmd == "ext":
        rows = [(s["degree"] if len(s["degree"]) > 1 else s["degree"][0], s["dim_even_space"], s["dim_odd_space"],
                 s["dim_H_even"], s["dim_H_odd"]) for s in res["slices"]]
        out.append(_table(["degree", "dim even", "dim odd", "H even", "H odd"], rows))
        out.append(f"totals: H_even={res['totals'][0]}, H_odd={res['totals'][1]}")
    elif cmd == "coker":
        out.append(_table(["degree", "dim"], list(res["hilbert_function"].items())))
    elif cmd == "segal":
        rows = [("canonicalize", c["input"], c["canonical"]) for c in res["canonicalize"]]
        rows += [("hom", f"{h['source']} -> {h['target']}", h["dimension"]) for h in res["hom"] + res.get("table", [])]
        out.append(_table(["kind", "input", "value"], rows))
    elif cmd == "annihilation":
        out.append(f"annihilation: {'ok' if res['ok'] else 'FAILED'} ({res['checked']} products checked)")
        out += [f"  {f}" for f in res["failures"]]
    elif cmd == "degenerate":
        rows = [(f"t^{k}", p) for k, p in res["potential_t"].items()]
        rows += [(f"fiber t={f['t']}", f["potential"]) for f in res["fibers"]]
        out.append(_table(["term", "value"], rows))
    elif isinstance(res, dict) and "factorization" in res:
        out.append(_format_mf(res["factorization"]))
    else:
        out.append(_table(["field", "value"], [(k, v) for k, v in res.items()]))
    out += [f"note: {d}" for d in report["diagnostics"]]
    return "\n".join(out)


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mfcat", description="Graded matrix factorization toolkit.")
    parser.add_argument("subcommand", choices=sorted(COMMANDS))
    parser.add_argument("--input", required=True, help="problem document (JSON), or - for stdin")
    parser.add_argument("--window", help="degree window LO..HI; write --window=-3..3 for negative LO")
    parser.add_argument("--json", metavar="OUT", help="write the machine report here (- for stdout)")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--timing", action="store_true", help="record wall-clock timing (breaks byte identity)")
    return parser


def main(argv=None) -> int:
    flags = build_parser().parse_args(argv)
    try:
        raw = sys.stdin.buffer.read() if flags.input == "-" else open(flags.input, "rb").read()
    except OSError as exc:
        print(f"error: cannot read {flags.input}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    report, code = run(flags.subcommand, raw, flags)
    if flags.json == "-":
        sys.stdout.write(dumps(report))
    else:
        if flags.json:
            with open(flags.json, "w", encoding="utf-8") as fh:
                fh.write(dumps(report))
        failed = isinstance(report["result"], dict) and "error" in report["result"]
        print(render(report), file=sys.stderr if failed else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
