"""Text formats and JSON reports.

All formats are ASCII with LF line endings and a single canonical spelling on
output, so golden files can be compared byte for byte.  parse(print(x)) == x
for every value; print(parse(t)) == t for canonical text.
"""

from __future__ import annotations

import json

from .algebra import AlgebraPresentation, ElementaryFamily, Verdict
from .budget import DEFAULT_BUDGET, Budget
from .category import FinitePrecategory, adjoin_zero, connected_groupoid, disjoint_union, validate_precategory
from .counting import CountReport
from .errors import ParseError
from .magma import FiniteMagma, validate_magma


def _lines_of(text: str) -> list:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def parse_magma(text: str) -> FiniteMagma:
    """Parse the magma format: a header line, an optional zero line, then the table rows."""
    lines = _lines_of(text)
    if not lines:
        raise ParseError("empty input", 1, 1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "magma":
        raise ParseError("expected 'magma <order>'", 1, 1)
    try:
        order = int(head[1])
    except ValueError:
        raise ParseError(f"bad order {head[1]!r}", 1, 7) from None
    zero = None
    row_start = 1
    if len(lines) > 1 and lines[1].startswith("zero"):
        ztok = lines[1].split()
        if len(ztok) != 2:
            raise ParseError("expected 'zero <index>'", 2, 1)
        try:
            zero = int(ztok[1])
        except ValueError:
            raise ParseError(f"bad zero index {ztok[1]!r}", 2, 6) from None
        row_start = 2
    rows = []
    if len(lines) != row_start + order:
        raise ParseError(f"expected {order} table rows", len(lines), 1)
    for k in range(order):
        lineno = row_start + k + 1
        toks = lines[row_start + k].split()
        if len(toks) != order:
            raise ParseError(f"expected {order} entries", lineno, 1)
        row = []
        for j, tok in enumerate(toks):
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"bad entry {tok!r}", lineno, j + 1) from None
        rows.append(row)
    return validate_magma(order, rows, zero)


def print_magma(magma: FiniteMagma) -> str:
    out = [f"magma {magma.order}"]
    if magma.zero is not None:
        out.append(f"zero {magma.zero}")
    out.extend(" ".join(str(e) for e in row) for row in magma.table)
    return "\n".join(out) + "\n"


def _parse_groupoid_presentation(lines, object_count, morphism_count, budget):
    # One block per connected component: the objects it covers, a vertex-group
    # Cayley table, and a spanning tree over those objects.
    i = 0
    components = []
    covered = set()
    while i < len(lines):
        lineno, toks = lines[i]
        if toks[0] != "component":
            raise ParseError("expected 'component <objects...>'", lineno, 1)
        try:
            objs = [int(t) for t in toks[1:]]
        except ValueError:
            raise ParseError("bad object index in component", lineno, 1) from None
        if not objs or objs != sorted(objs) or len(set(objs)) != len(objs):
            raise ParseError("component objects must be distinct and ascending", lineno, 1)
        if set(objs) & covered:
            raise ParseError("object listed in two components", lineno, 1)
        covered |= set(objs)
        i += 1
        if i >= len(lines) or lines[i][1][0] != "vertex-group":
            raise ParseError("expected 'vertex-group <order>'", lineno + 1, 1)
        lineno, toks = lines[i]
        if len(toks) != 2:
            raise ParseError("expected 'vertex-group <order>'", lineno, 1)
        try:
            q = int(toks[1])
        except ValueError:
            raise ParseError(f"bad vertex group order {toks[1]!r}", lineno, 14) from None
        i += 1
        table = []
        for _ in range(q):
            if i >= len(lines):
                raise ParseError("missing vertex group row", lineno, 1)
            lineno, toks = lines[i]
            try:
                row = [int(t) for t in toks]
            except ValueError:
                raise ParseError("bad vertex group entry", lineno, 1) from None
            if len(row) != q:
                raise ParseError(f"expected {q} entries in vertex group row", lineno, 1)
            table.append(row)
            i += 1
        edges = []
        while i < len(lines) and lines[i][1][0] == "tree":
            lineno, toks = lines[i]
            if len(toks) != 3:
                raise ParseError("expected 'tree <child> <parent>'", lineno, 1)
            try:
                edges.append((int(toks[1]), int(toks[2])))
            except ValueError:
                raise ParseError("bad tree edge", lineno, 1) from None
            i += 1
        if len(edges) != len(objs) - 1:
            raise ParseError(f"expected {len(objs) - 1} tree edges", lineno, 1)
        # the edges must span the component's objects
        parent = {o: o for o in objs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for child, par in edges:
            if child not in parent or par not in parent:
                raise ParseError("tree edge leaves the component", lineno, 1)
            a, b = find(child), find(par)
            if a == b:
                raise ParseError("tree edges contain a cycle", lineno, 1)
            parent[a] = b
        if len({find(o) for o in objs}) != 1:
            raise ParseError("tree does not span the component", lineno, 1)
        components.append((objs, table))
    if covered != set(range(object_count)):
        raise ParseError("components do not cover all objects", lines[-1][0] if lines else 1, 1)
    cat = None
    for objs, table in components:
        piece = connected_groupoid(len(objs), table, budget)
        cat = piece if cat is None else disjoint_union(cat, piece)
    if cat is None:
        cat = FinitePrecategory(0, (), (), ())
    if cat.morphism_count != morphism_count:
        raise ParseError(
            f"presentation yields {cat.morphism_count} morphisms, header says {morphism_count}",
            1,
            1,
        )
    return cat


def parse_category(text: str, budget: Budget | None = None) -> FinitePrecategory:
    """Parse the category format.

    Explicit form: 'category <objects> <morphisms>', one 'm <dom> <cod> [id]'
    line per morphism, then one 'c <s> <t> <st>' line for every composable
    pair (partial tables are rejected).  Alternatively a
    'groupoid-presentation' body gives per-component vertex-group tables and
    spanning trees, from which the groupoid is generated.
    """
    budget = budget or DEFAULT_BUDGET
    lines = _lines_of(text)
    if not lines:
        raise ParseError("empty input", 1, 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "category":
        raise ParseError("expected 'category <objects> <morphisms>'", 1, 1)
    try:
        object_count = int(head[1])
        morphism_count = int(head[2])
    except ValueError:
        raise ParseError("bad counts in header", 1, 10) from None
    body = [(i + 2, line.split()) for i, line in enumerate(lines[1:]) if line.split()]
    if body and body[0][1] == ["groupoid-presentation"]:
        return _parse_groupoid_presentation(body[1:], object_count, morphism_count, budget)
    morphisms = []
    identity_at = [None] * object_count
    idx = 0
    while idx < len(body) and body[idx][1][0] == "m":
        lineno, toks = body[idx]
        if len(toks) not in (3, 4) or (len(toks) == 4 and toks[3] != "id"):
            raise ParseError("expected 'm <dom> <cod> [id]'", lineno, 1)
        try:
            dom, cod = int(toks[1]), int(toks[2])
        except ValueError:
            raise ParseError("bad object index", lineno, 3) from None
        if len(toks) == 4:
            if dom != cod:
                raise ParseError("identity must have dom == cod", lineno, 1)
            if not 0 <= dom < object_count:
                raise ParseError("identity object out of range", lineno, 3)
            if identity_at[dom] is not None:
                raise ParseError(f"two identities declared at object {dom}", lineno, 1)
            identity_at[dom] = len(morphisms)
        morphisms.append((dom, cod))
        idx += 1
    if len(morphisms) != morphism_count:
        raise ParseError(f"expected {morphism_count} morphism lines", body[idx][0] if idx < len(body) else len(lines), 1)
    comp = [[None] * morphism_count for _ in range(morphism_count)]
    given = set()
    for lineno, toks in body[idx:]:
        if toks[0] != "c" or len(toks) != 4:
            raise ParseError("expected 'c <s> <t> <st>'", lineno, 1)
        try:
            s, t, st = int(toks[1]), int(toks[2]), int(toks[3])
        except ValueError:
            raise ParseError("bad morphism index", lineno, 3) from None
        if not all(0 <= x < morphism_count for x in (s, t, st)):
            raise ParseError("morphism index out of range", lineno, 3)
        if (s, t) in given:
            raise ParseError(f"duplicate composite for ({s}, {t})", lineno, 1)
        given.add((s, t))
        comp[s][t] = st
    for s in range(morphism_count):
        for t in range(morphism_count):
            if morphisms[s][0] == morphisms[t][1] and (s, t) not in given:
                raise ParseError(f"missing composite for composable pair ({s}, {t})", len(lines), 1)
    return validate_precategory(object_count, morphisms, comp, identity_at, budget)


def print_category(cat: FinitePrecategory) -> str:
    out = [f"category {cat.object_count} {cat.morphism_count}"]
    for s in range(cat.morphism_count):
        d, c = cat.morphisms[s]
        tag = " id" if s in cat.identity_at else ""
        out.append(f"m {d} {c}{tag}")
    for s in range(cat.morphism_count):
        for t in range(cat.morphism_count):
            if cat.comp[s][t] is not None:
                out.append(f"c {s} {t} {cat.comp[s][t]}")
    return "\n".join(out) + "\n"


def detect_kind(text: str) -> str:
    """Sniff a document kind: magma, category, family or report."""
    stripped = text.lstrip()
    if stripped.startswith("magma"):
        return "magma"
    if stripped.startswith("category"):
        return "category"
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON document: {exc.msg}", exc.lineno, exc.colno) from None
        kind = doc.get("kind")
        if kind in ("family", "report"):
            return kind
    raise ParseError("unrecognized document", 1, 1)


def family_to_doc(family: ElementaryFamily, target_text: str, target_format: str) -> dict:
    """A family as a JSON-ready document embedding its target's text form."""
    return {
        "kind": "family",
        "target": {"format": target_format, "text": target_text},
        "parts": {str(h): sorted(part) for h, part in enumerate(family.parts)},
    }


def parse_family(text: str, algebra: AlgebraPresentation, budget: Budget | None = None) -> ElementaryFamily:
    """Rebuild a family document against a given algebra presentation.

    A category target is adjoined a zero, matching the indexing that the
    grading and filter enumerations emit.
    """
    budget = budget or DEFAULT_BUDGET
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if doc.get("kind") != "family":
        raise ParseError("not a family document", 1, 1)
    target_doc = doc.get("target", {})
    fmt = target_doc.get("format")
    if fmt == "magma":
        target = parse_magma(target_doc.get("text", ""))
    elif fmt == "category":
        target = adjoin_zero(parse_category(target_doc.get("text", ""), budget), budget)
    else:
        raise ParseError(f"unknown target format {fmt!r}", 1, 1)
    raw = doc.get("parts", {})
    parts = []
    for h in range(target.order):
        entry = raw.get(str(h), [])
        if not isinstance(entry, list):
            raise ParseError(f"part {h} is not a list", 1, 1)
        parts.append(frozenset(int(b) for b in entry))
    return ElementaryFamily(algebra=algebra, target=target, parts=tuple(parts))


def _encode(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def verdict_to_doc(verdict: Verdict) -> dict:
    return {
        "property": verdict.prop,
        "holds": verdict.holds,
        "witness": None if verdict.witness is None else list(verdict.witness),
    }


def count_report_to_doc(report: CountReport) -> dict:
    return {
        "kind": "report",
        "formula": report.formula_name,
        "parameters": _encode(report.parameters),
        "closed_form": _encode(report.closed_form_value),
        "brute_force": _encode(report.brute_force_value),
        "agrees": report.agrees,
        "extras": _encode(report.extras),
    }


def emit_report(payload) -> str:
    """Serialize a report payload: compact JSON, sorted keys, arbitrary-size
    integer values as decimal strings, one trailing newline."""
    return json.dumps(_encode(payload), sort_keys=True, separators=(",", ":")) + "\n"


def enumeration_report(items) -> str:
    """The standard enumeration payload: a count and the items in enumeration order."""
    items = list(items)
    return emit_report({"count": len(items), "items": items})
