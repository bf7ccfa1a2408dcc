"""Self-describing records for blocks and chain tables, plus text, csv,
and decimal rendering.

A record is a plain-JSON payload dict: labels as canonical strings,
values as canonical radical strings ("-sqrt(4/5)"), convention flags
stamped inside.  parse/render round-trips are bit-exact, so records can
be hashed and diffed.
"""

import json

from .exact import parse_value, render_value
from .halfint import HalfInt
from .isospin import Chain2Row
from .angmom import Chain3Row
from .racah import CONVENTIONS, IsoscalarBlock
from .so4 import So4Irrep
from .so5 import So5Irrep

CHAIN2_CONVENTIONS = {
    "seed": "top-positive",
    "completion": "canonical-so4-ascending",
}
CHAIN3_CONVENTIONS = {
    "alpha": "gram-schmidt-order",
    "completion": "canonical-so4-mx-ascending",
}


def canonical_json(obj):
    """Stable byte serialization used for hashing and on-disk records."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=True).encode("utf-8")


# -- records ---------------------------------------------------------------

def block_record(block):
    return {
        "kind": "block",
        "chain": "so4",
        "g1": str(block.g1),
        "g2": str(block.g2),
        "g": str(block.g),
        "conventions": dict(CONVENTIONS),
        "columns": [[str(l1), str(l2), str(l)] for l1, l2, l in block.columns],
        "vectors": [[render_value(v) for v in vec] for vec in block.vectors],
    }


def block_from_record(rec):
    g1 = So5Irrep.parse(rec["g1"])
    g2 = So5Irrep.parse(rec["g2"])
    g = So5Irrep.parse(rec["g"])
    columns = [tuple(So4Irrep.parse(s) for s in col) for col in rec["columns"]]
    vectors = [[parse_value(s) for s in vec] for vec in rec["vectors"]]
    return IsoscalarBlock(g1, g2, g, columns, vectors,
                          {"conventions": dict(rec["conventions"])})


def chain2_record(g1, g2, g, rows):
    conv = dict(CONVENTIONS)
    conv.update(CHAIN2_CONVENTIONS)
    return {
        "kind": "chain2-table",
        "chain": "isospin",
        "g1": str(g1), "g2": str(g2), "g": str(g),
        "conventions": conv,
        "rows": [{
            "ms1": str(r.ms1), "k1": r.k1, "t1": str(r.t1),
            "ms2": str(r.ms2), "k2": r.k2, "t2": str(r.t2),
            "ms": str(r.ms), "k": r.k, "t": str(r.t),
            "values": [render_value(v) for v in r.values],
        } for r in rows],
    }


def chain2_rows_from_record(rec):
    out = []
    for d in rec["rows"]:
        out.append(Chain2Row(
            HalfInt.parse(d["ms1"]), d["k1"], HalfInt.parse(d["t1"]),
            HalfInt.parse(d["ms2"]), d["k2"], HalfInt.parse(d["t2"]),
            HalfInt.parse(d["ms"]), d["k"], HalfInt.parse(d["t"]),
            tuple(parse_value(s) for s in d["values"])))
    return out


def chain3_record(g1, g2, g, rows):
    conv = dict(CONVENTIONS)
    conv.update(CHAIN3_CONVENTIONS)
    return {
        "kind": "chain3-table",
        "chain": "angmom",
        "g1": str(g1), "g2": str(g2), "g": str(g),
        "conventions": conv,
        "rows": [{
            "a1": r.a1, "l1": str(r.l1),
            "a2": r.a2, "l2": str(r.l2),
            "a": r.a, "l": str(r.l),
            "values": [render_value(v) for v in r.values],
        } for r in rows],
    }


def chain3_rows_from_record(rec):
    out = []
    for d in rec["rows"]:
        out.append(Chain3Row(
            d["a1"], HalfInt.parse(d["l1"]),
            d["a2"], HalfInt.parse(d["l2"]),
            d["a"], HalfInt.parse(d["l"]),
            tuple(parse_value(s) for s in d["values"])))
    return out


# -- rendering -------------------------------------------------------------

def _dvalue(s, digits):
    return str(parse_value(s).decimal(digits))


def _tabulate_text(header, rows):
    widths = [max(len(header[i]), max((len(r[i]) for r in rows), default=0))
              for i in range(len(header))]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for r in rows:
        lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def _nrho(rec):
    if rec["kind"] == "block":
        return len(rec["vectors"])
    return len(rec["rows"][0]["values"]) if rec["rows"] else 0


def _block_cells(rec, digits=None, split=False):
    if split:
        head = ["X1", "Y1", "X2", "Y2", "X", "Y"]
    else:
        head = ["(X1,Y1)", "(X2,Y2)", "(X,Y)"]
    head += ["rho=%d" % (i + 1) for i in range(_nrho(rec))]
    rows = []
    for i, col in enumerate(rec["columns"]):
        vals = [vec[i] for vec in rec["vectors"]]
        if digits is not None:
            vals = [_dvalue(v, digits) for v in vals]
        if split:
            cells = []
            for s in col:
                cells += s[1:-1].split(",")
        else:
            cells = list(col)
        rows.append(cells + vals)
    return head, rows


def _chain2_cells(rec, digits=None):
    with_k = any(d["k1"] > 1 or d["k2"] > 1 or d["k"] > 1 for d in rec["rows"])
    head = ["MS1", "MS2", "MS", "T1", "T2", "T"]
    if with_k:
        head += ["K1", "K2", "K"]
    head += ["rho=%d" % (i + 1) for i in range(_nrho(rec))]
    rows = []
    for d in rec["rows"]:
        cells = [d["ms1"], d["ms2"], d["ms"], d["t1"], d["t2"], d["t"]]
        if with_k:
            cells += [str(d["k1"]), str(d["k2"]), str(d["k"])]
        vals = list(d["values"])
        if digits is not None:
            vals = [_dvalue(v, digits) for v in vals]
        rows.append(cells + vals)
    return head, rows


def _chain3_cells(rec, digits=None):
    with_a = any(d["a1"] > 1 or d["a2"] > 1 or d["a"] > 1 for d in rec["rows"])
    head = []
    if with_a:
        head += ["A1"]
    head += ["L1"]
    if with_a:
        head += ["A2"]
    head += ["L2"]
    if with_a:
        head += ["A"]
    head += ["L"]
    head += ["rho=%d" % (i + 1) for i in range(_nrho(rec))]
    rows = []
    for d in rec["rows"]:
        cells = []
        if with_a:
            cells += [str(d["a1"])]
        cells += [d["l1"]]
        if with_a:
            cells += [str(d["a2"])]
        cells += [d["l2"]]
        if with_a:
            cells += [str(d["a"])]
        cells += [d["l"]]
        vals = list(d["values"])
        if digits is not None:
            vals = [_dvalue(v, digits) for v in vals]
        rows.append(cells + vals)
    return head, rows


def _cells(rec, digits=None, split=False):
    if rec["kind"] == "block":
        return _block_cells(rec, digits, split)
    if rec["kind"] == "chain2-table":
        return _chain2_cells(rec, digits)
    if rec["kind"] == "chain3-table":
        return _chain3_cells(rec, digits)
    raise ValueError("unknown record kind %r" % rec.get("kind"))


def render_record(rec, fmt="text", digits=16):
    """Render a record payload as text, csv, json, or float."""
    if fmt == "json":
        return json.dumps(rec, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        head, rows = _cells(rec, split=True)
        return "\n".join([",".join(head)] + [",".join(r) for r in rows]) + "\n"
    if fmt == "float":
        head, rows = _cells(rec, digits=digits)
    elif fmt == "text":
        head, rows = _cells(rec)
    else:
        raise ValueError("unknown format %r" % fmt)
    title = "%s x %s -> %s  [%s, D=%d]\n" % (
        rec["g1"], rec["g2"], rec["g"], rec["chain"], _nrho(rec))
    return title + _tabulate_text(head, rows)
