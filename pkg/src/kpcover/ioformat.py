"""Text instance format and structured result output.

Instance grammar, one record per line, fields space-separated, ASCII decimal
integers, UTF-8 with LF line endings:

    c <anything>          comment, ignored anywhere
    p kpvc <n> <m> <k>    exactly one, first non-comment line
    v <vertex> <part>     exactly one per vertex 1..n, part in 1..k
    b <part> <budget>     exactly one per part 1..k, budget >= 0
    e <u> <v>             m lines, u != v

v/b/e records may interleave after the p line. Budgets are mandatory, so a
file is always a complete instance. parse(serialize(inst)) == inst, and the
canonical serialization (sorted records, no comments) is byte-stable.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import InstanceInvalidError, ParseError
from .exact import ExactResult
from .graph import (Budgets, Instance, build_graph, make_partition,
                    per_part_usage, validate_instance)
from .heuristic import CoverResult

RESULT_CSV_FIELDS = ("algo", "status", "cover", "size", "per_part_usage",
                     "effort", "wall_ms")


def parse_instance(text: str) -> Instance:
    """Parse the grammar above; every rejection names a 1-based line number."""
    header: tuple[int, int, int, int] | None = None  # (lineno, n, m, k)
    v_records: dict[int, int] = {}
    b_records: dict[int, int] = {}
    e_records: list[tuple[int, int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if header is not None:
                raise ParseError(lineno, "DuplicateRecord", "second p line")
            if len(tokens) != 5 or tokens[1] != "kpvc":
                raise ParseError(lineno, "Syntax", "expected 'p kpvc <n> <m> <k>'")
            n, m, k = _ints(lineno, tokens[2:])
            if n < 1 or m < 0 or k < 1:
                raise ParseError(lineno, "Syntax", f"bad header values n={n} m={m} k={k}")
            header = (lineno, n, m, k)
            continue
        if header is None:
            raise ParseError(lineno, "Syntax", "record before the p line")
        _, n, m, k = header
        if kind == "v":
            if len(tokens) != 3:
                raise ParseError(lineno, "Syntax", "expected 'v <vertex> <part>'")
            vertex, part = _ints(lineno, tokens[1:])
            if not (1 <= vertex <= n):
                raise ParseError(lineno, "Syntax", f"vertex {vertex} outside 1..{n}")
            if not (1 <= part <= k):
                raise ParseError(lineno, "Syntax", f"part {part} outside 1..{k}")
            if vertex in v_records:
                raise ParseError(lineno, "DuplicateRecord", f"vertex {vertex} assigned twice")
            v_records[vertex] = part
        elif kind == "b":
            if len(tokens) != 3:
                raise ParseError(lineno, "Syntax", "expected 'b <part> <budget>'")
            part, budget = _ints(lineno, tokens[1:])
            if not (1 <= part <= k):
                raise ParseError(lineno, "Syntax", f"part {part} outside 1..{k}")
            if budget < 0:
                raise ParseError(lineno, "Syntax", f"negative budget {budget}")
            if part in b_records:
                raise ParseError(lineno, "DuplicateRecord", f"budget for part {part} given twice")
            b_records[part] = budget
        elif kind == "e":
            if len(tokens) != 3:
                raise ParseError(lineno, "Syntax", "expected 'e <u> <v>'")
            u, v = _ints(lineno, tokens[1:])
            if u == v:
                raise ParseError(lineno, "Syntax", f"self-loop at vertex {u}")
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ParseError(lineno, "Syntax", f"edge ({u}, {v}) outside 1..{n}")
            e_records.append((lineno, u, v))
        else:
            raise ParseError(lineno, "Syntax", f"unknown record kind {kind!r}")

    if header is None:
        raise ParseError(1, "Syntax", "missing p line")
    p_lineno, n, m, k = header
    if len(e_records) != m:
        raise ParseError(p_lineno, "CountMismatch",
                         f"p line declares {m} edges, file has {len(e_records)}")
    missing_v = [v for v in range(1, n + 1) if v not in v_records]
    if missing_v:
        raise ParseError(p_lineno, "MissingVertexAssignment",
                         f"no v record for vertex {missing_v[0]}")
    missing_b = [p for p in range(1, k + 1) if p not in b_records]
    if missing_b:
        raise ParseError(p_lineno, "MissingBudget",
                         f"no b record for part {missing_b[0]}")
    for lineno, u, v in e_records:
        if v_records[u] == v_records[v]:
            raise ParseError(lineno, "IntraPartEdge",
                             f"edge ({u}, {v}) inside part {v_records[u]}")

    return Instance(graph=build_graph(n, [(u, v) for _, u, v in e_records]),
                    partition=make_partition(k, v_records),
                    budgets=Budgets(tuple(b_records[p] for p in range(1, k + 1))))


def serialize_instance(inst: Instance) -> str:
    """Canonical text form: p, then v/b/e records each in ascending order."""
    report = validate_instance(inst)
    if not report.ok:
        raise InstanceInvalidError(report)
    g, part, budgets = inst.graph, inst.partition, inst.budgets
    lines = [f"p kpvc {g.n} {g.m} {part.k}"]
    lines += [f"v {v} {part.part_of[v]}" for v in range(1, g.n + 1)]
    lines += [f"b {p} {budgets.limits[p - 1]}" for p in range(1, part.k + 1)]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def result_fields(result: Any, instance: Instance | None = None,
                  algo: str = "", wall_ms: float | None = None) -> dict[str, Any]:
    """Normalize a solver result into the shared output field set.

    The effort field is op_count for heuristic results and nodes_explored
    for exact results; plain cover sets (the 2-approx baseline) have none.
    """
    fields: dict[str, Any] = {"algo": algo}
    if isinstance(result, CoverResult):
        fields["status"] = result.status
        fields["cover"] = sorted(result.cover)
        fields["size"] = result.size
        fields["per_part_usage"] = list(result.per_part_usage)
        fields["op_count"] = result.op_count
    elif isinstance(result, ExactResult):
        fields["status"] = result.status
        cover = sorted(result.cover) if result.cover is not None else []
        fields["cover"] = cover
        fields["size"] = result.size
        if result.feasible and instance is not None:
            fields["per_part_usage"] = list(per_part_usage(instance.partition, cover))
        else:
            fields["per_part_usage"] = None
        fields["nodes_explored"] = result.nodes_explored
    else:  # plain vertex set
        cover = sorted(result)
        fields["status"] = "Success"
        fields["cover"] = cover
        fields["size"] = len(cover)
        fields["per_part_usage"] = (list(per_part_usage(instance.partition, cover))
                                    if instance is not None else None)
    fields["wall_ms"] = wall_ms
    return fields


def result_csv_header() -> str:
    return ",".join(RESULT_CSV_FIELDS)


def emit_result(result: Any, format: str = "json", *, algo: str = "",
                instance: Instance | None = None,
                wall_ms: float | None = None) -> str:
    """Render a result as a JSON object or a CSV row (see RESULT_CSV_FIELDS)."""
    fields = result_fields(result, instance=instance, algo=algo, wall_ms=wall_ms)
    if format == "json":
        return json.dumps(fields)
    if format == "csv-row":
        effort = fields.get("op_count", fields.get("nodes_explored"))
        usage = fields["per_part_usage"]
        row = [fields["algo"], fields["status"],
               ";".join(str(v) for v in fields["cover"]),
               "" if fields["size"] is None else str(fields["size"]),
               "" if usage is None else ";".join(str(u) for u in usage),
               "" if effort is None else str(effort),
               "" if wall_ms is None else repr(wall_ms)]
        return ",".join(row)
    raise ValueError(f"unknown result format {format!r}")


def _ints(lineno: int, tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, "Syntax", f"non-integer field in {tokens}") from None
