"""Instance file grammar, canonical serialization, result emission."""

from __future__ import annotations

import json

import pytest

from kpcover import (Budgets, GenSpec, Instance, InstanceInvalidError,
                     ParseError, build_graph, emit_result, exact_cvck,
                     gen_kpartite, make_partition, parse_instance,
                     result_csv_header, serialize_instance, solve_cvck,
                     two_approx_vc)

MINIMAL = """p kpvc 2 1 2
v 1 1
v 2 2
b 1 1
b 2 1
e 1 2
"""


def parse_err(text):
    with pytest.raises(ParseError) as exc:
        parse_instance(text)
    return exc.value


class TestParse:
    def test_minimal_file(self):
        inst = parse_instance(MINIMAL)
        assert inst.graph.edges == frozenset({(1, 2)})
        assert inst.partition.part_of[1:] == (1, 2)
        assert inst.budgets.limits == (1, 1)

    def test_comments_and_blank_lines_ignored(self):
        text = "c hello\n\n" + MINIMAL + "c trailing\n"
        assert parse_instance(text) == parse_instance(MINIMAL)

    def test_records_may_interleave(self):
        text = "p kpvc 2 1 2\ne 1 2\nb 2 1\nv 2 2\nv 1 1\nb 1 1\n"
        assert parse_instance(text) == parse_instance(MINIMAL)

    def test_self_loop_line_numbered(self):
        err = parse_err("p kpvc 2 1 2\nv 1 1\nv 2 2\nb 1 1\nb 2 1\ne 1 1\n")
        assert err.line == 6 and "self-loop" in str(err)

    def test_missing_p_line(self):
        err = parse_err("v 1 1\n")
        assert err.kind == "Syntax"

    def test_duplicate_p_line(self):
        err = parse_err(MINIMAL + "p kpvc 2 1 2\n")
        assert err.kind == "DuplicateRecord"

    def test_duplicate_vertex(self):
        err = parse_err("p kpvc 2 1 2\nv 1 1\nv 1 2\nv 2 2\nb 1 1\nb 2 1\ne 1 2\n")
        assert err.kind == "DuplicateRecord" and err.line == 3

    def test_duplicate_budget(self):
        err = parse_err("p kpvc 2 1 2\nv 1 1\nv 2 2\nb 1 1\nb 1 1\nb 2 1\ne 1 2\n")
        assert err.kind == "DuplicateRecord"

    def test_count_mismatch(self):
        err = parse_err("p kpvc 2 2 2\nv 1 1\nv 2 2\nb 1 1\nb 2 1\ne 1 2\n")
        assert err.kind == "CountMismatch" and err.line == 1

    def test_missing_vertex_assignment(self):
        err = parse_err("p kpvc 2 1 2\nv 1 1\nb 1 1\nb 2 1\ne 1 2\n")
        assert err.kind == "MissingVertexAssignment"

    def test_missing_budget(self):
        err = parse_err("p kpvc 2 1 2\nv 1 1\nv 2 2\nb 1 1\ne 1 2\n")
        assert err.kind == "MissingBudget"

    def test_intra_part_edge_line_numbered(self):
        err = parse_err("p kpvc 2 1 1\nv 1 1\nv 2 1\nb 1 2\ne 1 2\n")
        assert err.kind == "IntraPartEdge" and err.line == 5

    def test_unknown_record_kind(self):
        err = parse_err("p kpvc 1 0 1\nv 1 1\nb 1 1\nq 1\n")
        assert err.kind == "Syntax" and err.line == 4

    def test_non_integer_field(self):
        err = parse_err("p kpvc 1 0 1\nv one 1\nb 1 1\n")
        assert err.kind == "Syntax" and err.line == 2

    def test_vertex_out_of_range(self):
        err = parse_err("p kpvc 2 1 2\nv 1 1\nv 3 2\nb 1 1\nb 2 1\ne 1 2\n")
        assert err.kind == "Syntax" and err.line == 3

    def test_negative_budget(self):
        err = parse_err("p kpvc 1 0 1\nv 1 1\nb 1 -1\n")
        assert err.kind == "Syntax"

    def test_record_before_p(self):
        err = parse_err("v 1 1\np kpvc 1 0 1\nb 1 1\n")
        assert err.kind == "Syntax" and err.line == 1


class TestSerialize:
    def test_canonical_output(self):
        inst = parse_instance("p kpvc 2 1 2\ne 2 1\nb 2 1\nv 2 2\nv 1 1\nb 1 1\n")
        assert serialize_instance(inst) == MINIMAL

    def test_round_trip_sample(self):
        for seed in range(50):
            inst = gen_kpartite(GenSpec(n=12, k=3, density=0.5, seed=seed))
            assert parse_instance(serialize_instance(inst)) == inst

    def test_rejects_invalid_instance(self):
        bad = Instance(build_graph(2, [(1, 2)]), make_partition(1, [1, 1]),
                       Budgets((2,)))
        with pytest.raises(InstanceInvalidError):
            serialize_instance(bad)


class TestEmitResult:
    def inst(self, limits=(0, 1)):
        return Instance(build_graph(3, [(1, 2), (2, 3)]),
                        make_partition(2, [1, 2, 1]), Budgets(limits))

    def test_heuristic_success_json(self):
        inst = self.inst()
        out = json.loads(emit_result(solve_cvck(inst), "json", algo="cvck",
                                     instance=inst, wall_ms=1.5))
        assert out["status"] == "Success" and out["size"] == 1
        assert out["cover"] == [2] and out["op_count"] == 8
        assert out["per_part_usage"] == [0, 1] and out["wall_ms"] == 1.5

    def test_infeasible_json_has_null_size(self):
        inst = self.inst((0, 0))
        out = json.loads(emit_result(exact_cvck(inst), "json", algo="exact",
                                     instance=inst))
        assert out["status"] == "Infeasible"
        assert out["cover"] == [] and out["size"] is None
        assert "nodes_explored" in out

    def test_plain_cover_csv_row(self):
        inst = self.inst((1, 1))
        row = emit_result(two_approx_vc(inst.graph), "csv-row", algo="2approx",
                          instance=inst)
        header = result_csv_header()
        assert header.startswith("algo,status,cover,size")
        assert row.split(",")[0] == "2approx"
        assert row.split(",")[5] == ""  # no effort metric for the baseline

    def test_exact_csv_row_effort(self):
        inst = self.inst()
        row = emit_result(exact_cvck(inst), "csv-row", algo="exact", instance=inst)
        fields = row.split(",")
        assert fields[1] == "Feasible" and fields[5].isdigit()

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_result(frozenset(), "xml")
