"""Verification ledger: re-derive recorded identities and report pass/fail.

A ledger is a JSON file ``{"version": 1, "entries": [...]}``. Each entry has
``id``, ``description``, ``citation``, ``kind``, ``inputs`` and ``expected``.
``inputs["op"]`` selects the computation within the kind. If ``inputs["c"]``
is a list the computation runs once per value and the result is a list. When
``expected`` is an object only its own keys are compared.
"""

import json
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from . import chern, instanton, p2, xcoh
from .chow import ChowElement, format_element, make_model
from .errors import LedgerError
from .expr import parse_expression

KINDS = ("chow-identity", "chi-identity", "cohomology-vanishing", "inequality",
         "enumeration", "family-invariant")
STATUSES = ("pass", "fail", "skipped")
_FIELDS = (("id", str), ("description", str), ("citation", str), ("kind", str),
           ("inputs", dict))


@dataclass(frozen=True)
class LedgerEntry:
    id: str
    description: str
    citation: str
    kind: str
    inputs: dict
    expected: object


@dataclass(frozen=True)
class EntryResult:
    id: str
    status: str
    citation: str
    expected: object
    computed: object
    micros: int = 0


@dataclass
class VerificationReport:
    entries: list = field(default_factory=list)

    @property
    def passed(self):
        return sum(e.status == "pass" for e in self.entries)

    @property
    def failed(self):
        return sum(e.status == "fail" for e in self.entries)

    @property
    def skipped(self):
        return sum(e.status == "skipped" for e in self.entries)

    def to_dict(self):
        return {
            "version": 1,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "entries": [
                {"id": e.id, "status": e.status, "citation": e.citation,
                 "expected": e.expected, "computed": e.computed, "micros": e.micros}
                for e in self.entries
            ],
        }


# ---------------------------------------------------------------- loading

def bundled_ledger_path():
    return resources.files("ruledfano") / "data" / "ledger.json"


def load_ledger(path=None):
    """Parse and validate a ledger file; returns a list of LedgerEntry."""
    path = path or bundled_ledger_path()
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise LedgerError(f"cannot read ledger {path}: {exc.strerror}") from exc
    return parse_ledger(text, str(path))


def parse_ledger(text, source="<ledger>"):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LedgerError(
            f"parse error in {source} at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict) or data.get("version") != 1:
        raise LedgerError(f"schema error in {source}: top level must be an object with version 1")
    raw = data.get("entries")
    if not isinstance(raw, list):
        raise LedgerError(f"schema error in {source}: 'entries' must be a list")
    entries, seen = [], set()
    for i, item in enumerate(raw):
        where = f"entries[{i}]"
        if not isinstance(item, dict):
            raise LedgerError(f"schema error in {source} at {where}: entry must be an object")
        ident = item.get("id", "?")
        label = f"entry {ident!r} ({where})"
        for name, typ in _FIELDS:
            if not isinstance(item.get(name), typ):
                raise LedgerError(
                    f"schema error in {source} at {label}: field {name!r} missing or not {typ.__name__}")
        if "expected" not in item:
            raise LedgerError(f"schema error in {source} at {label}: field 'expected' missing")
        if item["kind"] not in KINDS:
            raise LedgerError(f"schema error in {source} at {label}: unknown kind {item['kind']!r}")
        op = item["inputs"].get("op")
        if op not in _OPS.get(item["kind"], {}):
            raise LedgerError(
                f"schema error in {source} at {label}: unknown op {op!r} for kind {item['kind']!r}")
        if ident in seen:
            raise LedgerError(f"schema error in {source} at {label}: duplicate id")
        seen.add(ident)
        entries.append(LedgerEntry(ident, item["description"], item["citation"], item["kind"],
                                   item["inputs"], item["expected"]))
    return entries


# ---------------------------------------------------------------- values

class _BoundsOnly(Exception):
    pass


def to_json(value):
    """Exact JSON form: rationals as int or "p/q", Chow elements as text."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, ChowElement):
        return format_element(value)
    if isinstance(value, p2.CohomologyTable):
        if not value.exact:
            raise _BoundsOnly({"lower": list(value.lower), "upper": list(value.upper)})
        return list(value.values)
    if isinstance(value, dict):
        return {k: to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


_RATIONAL = re.compile(r"^-?\d+/\d+$")


def _canon(x):
    if isinstance(x, str) and _RATIONAL.match(x):
        return to_json(Fraction(x))
    return x


def matches(expected, computed):
    if isinstance(expected, dict):
        return isinstance(computed, dict) and all(
            k in computed and matches(v, computed[k]) for k, v in expected.items())
    if isinstance(expected, list):
        return (isinstance(computed, list) and len(expected) == len(computed)
                and all(matches(a, b) for a, b in zip(expected, computed)))
    if isinstance(expected, bool) or isinstance(computed, bool):
        return type(expected) is type(computed) and expected == computed
    return _canon(expected) == computed


# ---------------------------------------------------------------- operations

def _model(inp):
    return make_model(inp["c"])


def _e(inp, key, default="0"):
    return parse_expression(str(inp.get(key, default)), _model(inp))


def _sheaf(inp):
    m = _model(inp)
    s = chern.SheafClass(m, inp["rank"], _e(inp, "c1"), _e(inp, "c2"), _e(inp, "c3"))
    if "twist" in inp:
        s = chern.twist(s, _e(inp, "twist"))
    return s


def _op_degree(inp):
    return _e(inp, "expr").degree()


def _op_normal_form(inp):
    return _e(inp, "expr")


def _op_degree_table(inp):
    return list(_model(inp).degree_table)


def _op_relation(inp):
    m = _model(inp)
    return {"xi^2": m.xi * m.xi, "deg_xi3": (m.xi ** 3).degree()}


def _op_chi(inp):
    return chern.euler_characteristic(_sheaf(inp))


def _op_twist_class(inp):
    s = _sheaf(inp)
    return {"rank": s.rank, "c1": s.c1, "c2": s.c2, "c3": s.c3}


def _op_rr(inp):
    return chern.rr_closed_form(chern.RRPolynomialInputs(
        inp["alpha"], inp["beta"], inp["l1"], inp["l2"], inp["c"]))


def _op_end(inp):
    e = chern.orientable_rank2(_model(inp), inp["alpha"], inp["beta"])
    end = chern.endomorphism_class(e)
    m = _model(inp)
    half = (e.c1 * e.c1 - e.c2 * 4) * m.canonical
    return {"c2": end.c2, "chi": chern.euler_characteristic(end),
            "four_minus_half_pairing": 4 - half.degree() / 2}


def _op_ext_gap(inp):
    return instanton.ext_gap(chern.orientable_rank2(_model(inp), inp["alpha"], inp["beta"]))


def _op_curve_chi(inp):
    return xcoh.curve_twisted_chi(xcoh.CURVES[inp["curve"]], _e(inp, "twist"))


def _op_surface_chi(inp):
    return p2.surface_chi(inp["c"], inp["m"], inp["b"])


def _op_line_x(inp):
    return xcoh.line_cohomology_x(inp["c"], inp["l1"], inp["l2"])


def _op_hi(inp):
    """Selected h^i of a line bundle on X_c; skipped only if one of them is not forced."""
    t = xcoh.line_cohomology_x(inp["c"], inp["l1"], inp["l2"])
    idx = inp["i"]
    picked = [p2.CohomologyTable((t.lower[i],), (t.upper[i],)) for i in
              (idx if isinstance(idx, list) else [idx])]
    values = [x.values[0] if x.exact else x for x in picked]
    return values if isinstance(idx, list) else values[0]


def _op_sym(inp):
    return p2.sym_power_cohomology(inp["c"], inp["m"], inp["b"])


def _op_fano(inp):
    return list(p2.fano_bundle(inp["c"]).chern())


def _op_restriction(inp):
    return list(xcoh.restriction_cohomology(_e(inp, "curve"), _e(inp, "divisor")))


def _op_normal_bundle(inp):
    curve = xcoh.CURVES.get(inp["curve"])
    if curve is None:
        curve = xcoh.CurveModel("custom", (0, 0), (), tuple(inp["splitting"]))
    return list(xcoh.normal_bundle_sections(curve))


def _op_hoppe_member(inp):
    a, b = inp["a"], inp["b"]
    region = instanton.hoppe_region(inp["c"], (a, a), (b, b))
    p, q = region.pairing
    return {"member": (a, b) in region.points, "pairing": p * a + q * b, "mu": region.mu}


def _op_effectivity(inp):
    r = instanton.effectivity_quadratic(inp["c"], inp["a"], inp["b"], inp.get("variant", 1))
    return r._asdict()


def _op_orientable(inp):
    m = _model(inp)
    return instanton.orientability_check(chern.SheafClass(m, inp["rank"], _e(inp, "c1"), m.zero()))


def _op_rank0(inp):
    sol = instanton.rank0_constraint_solver(tuple(inp.get("window", (-10, 10))))
    out = {"eta": sol.eta, "theta": sol.theta, "c2": sol.c2, "c3": sol.c3}
    if "a" in inp:
        out["chi"] = sol.chi(inp["a"], inp["b"])
        out["chi_hrr"] = sol.chi_hrr(inp["a"], inp["b"])
    return out


def _op_rank0_line(inp):
    m = _model(inp)
    t = instanton.line_rank0(m)
    s = t.sheaf()
    return {"c2": s.c2, "c3": s.c3,
            "chi": [chern.euler_characteristic(chern.twist(s, m.h * k)) for k in inp["t"]]}


def _instanton_fields(e):
    return e.as_dict()


def _op_instanton(inp):
    return _instanton_fields(instanton.instanton_invariants(inp["alpha"], inp["beta"], inp["c"]))


def _op_serre(inp):
    return _instanton_fields(instanton.serre_family(instanton.SerreFamilyParams(inp["m"], inp["c"])))


def _op_pullback(inp):
    return _instanton_fields(instanton.pullback_family(instanton.PullbackFamilyParams(inp["l"], inp["c"])))


def _op_transform(inp):
    e = instanton.serre_family(instanton.SerreFamilyParams(inp["m"], inp["c"]))
    return _instanton_fields(instanton.transform_along_lines(e, inp.get("times", 1)))


def _op_serre_ext(inp):
    return instanton.serre_ext_dimension(inp["m"])


def _op_line_degree(inp):
    return instanton.splitting_degree_on_line(inp["c"])


_OPS = {
    "chow-identity": {"degree": _op_degree, "normal_form": _op_normal_form,
                      "degree_table": _op_degree_table, "relation": _op_relation},
    "chi-identity": {"chi": _op_chi, "twist_class": _op_twist_class, "rr_closed_form": _op_rr,
                     "endomorphism": _op_end, "ext_gap": _op_ext_gap, "curve_chi": _op_curve_chi,
                     "surface_chi": _op_surface_chi, "rank0_line": _op_rank0_line},
    "cohomology-vanishing": {"line_x": _op_line_x, "hi": _op_hi, "sym": _op_sym, "restriction": _op_restriction,
                             "normal_bundle": _op_normal_bundle, "fano_chern": _op_fano},
    "inequality": {"hoppe_member": _op_hoppe_member, "effectivity": _op_effectivity,
                   "orientable": _op_orientable},
    "enumeration": {"rank0_solver": _op_rank0},
    "family-invariant": {"instanton": _op_instanton, "serre": _op_serre, "pullback": _op_pullback,
                         "transform": _op_transform, "serre_ext": _op_serre_ext,
                         "line_degree": _op_line_degree},
}


def evaluate(entry):
    """Raw computed value for one entry (a list when inputs["c"] is a list)."""
    fn = _OPS[entry.kind][entry.inputs["op"]]
    cs = entry.inputs.get("c", 0)
    if isinstance(cs, list):
        return [fn({**entry.inputs, "c": c}) for c in cs]
    return fn({**entry.inputs, "c": cs})


def run_entry(entry, timing=True):
    start = time.perf_counter_ns()
    try:
        computed = to_json(evaluate(entry))
        status = "pass" if matches(entry.expected, computed) else "fail"
    except _BoundsOnly as exc:
        computed, status = exc.args[0], "skipped"
    except Exception as exc:  # reported, never hidden
        computed, status = f"error: {type(exc).__name__}: {exc}", "fail"
    micros = (time.perf_counter_ns() - start) // 1000 if timing else 0
    return EntryResult(entry.id, status, entry.citation, entry.expected, computed, micros)


def run_entries(entries, parallel=True, timing=True):
    if parallel and len(entries) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(entries))) as pool:
            results = list(pool.map(lambda e: run_entry(e, timing), entries))
    else:
        results = [run_entry(e, timing) for e in entries]
    return VerificationReport(sorted(results, key=lambda r: r.id))


def run_ledger(path=None, parallel=True, timing=True):
    """Evaluate every entry of a ledger file; ``timing=False`` zeroes the micros field."""
    return run_entries(load_ledger(path), parallel=parallel, timing=timing)


# ---------------------------------------------------------------- output

def emit_report(report, fmt="text"):
    """Serialize a report as UTF-8 bytes; identical reports give identical bytes."""
    if fmt == "json":
        return (json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    rows = sorted(report.entries, key=lambda r: r.id)
    width = max([len(r.id) for r in rows] + [2])
    lines = [f"{'id':<{width}}  {'status':<7}  {'micros':>8}  citation"]
    for r in rows:
        lines.append(f"{r.id:<{width}}  {r.status:<7}  {r.micros:>8}  {r.citation}")
        if r.status != "pass":
            lines.append(f"{'':<{width}}    expected: {json.dumps(r.expected)}")
            lines.append(f"{'':<{width}}    computed: {json.dumps(r.computed)}")
    lines.append(f"passed {report.passed}, failed {report.failed}, skipped {report.skipped}")
    return ("\n".join(lines) + "\n").encode()


def parse_report(data):
    """Inverse of ``emit_report(report, "json")``."""
    obj = json.loads(data)
    entries = [EntryResult(e["id"], e["status"], e["citation"], e["expected"], e["computed"],
                           e["micros"]) for e in obj["entries"]]
    report = VerificationReport(entries)
    if (report.passed, report.failed, report.skipped) != (obj["passed"], obj["failed"], obj["skipped"]):
        raise LedgerError("report totals do not match its entries")
    return report
