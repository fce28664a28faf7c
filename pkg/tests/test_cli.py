from __future__ import annotations

import json
import subprocess
import sys

import pytest

from quograph import Graph, Partition, PermGroup, Permutation, quotient
from quograph import io
from quograph.cli import main

from golden import (
    balanced_two_component_map,
    two_arcs_graph,
)


@pytest.fixture
def two_arcs_files(tmp_path):
    g = two_arcs_graph()
    io.save_json(tmp_path / "g.json", io.graph_to_dict(g))
    p = Partition([["1a", "1b"], ["2"], ["3"]], g.vertex_set)
    io.save_json(tmp_path / "p.json", io.partition_to_dict(p))
    return tmp_path


@pytest.fixture
def two_triangles_files(tmp_path):
    g = Graph(
        ["a0", "a1", "a2", "b0", "b1", "b2"],
        [("a0", "a1"), ("a0", "a2"), ("a1", "a2"), ("b0", "b1"), ("b0", "b2"), ("b1", "b2")],
    )
    swap = Permutation({f"a{i}": f"b{i}" for i in range(3)} | {f"b{i}": f"a{i}" for i in range(3)})
    grp = PermGroup(g.vertex_set, [swap])
    io.save_json(tmp_path / "g.json", io.graph_to_dict(g))
    io.save_json(tmp_path / "grp.json", io.group_to_dict(grp))
    io.save_json(
        tmp_path / "p.json",
        io.partition_to_dict(Partition([["a0", "b0"], ["a1", "b1"], ["a2", "b2"]], g.vertex_set)),
    )
    return tmp_path


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestComponents:
    def test_blocks_and_count(self, two_arcs_files, capsys):
        code, out, _ = run_cli(capsys, "components", str(two_arcs_files / "g.json"))
        assert code == 0
        assert json.loads(out) == {"c": 2, "blocks": [["1a", "3"], ["1b", "2"]]}

    def test_out_file(self, two_arcs_files, capsys):
        dest = two_arcs_files / "c.json"
        code, out, _ = run_cli(
            capsys, "components", str(two_arcs_files / "g.json"), "--out", str(dest)
        )
        assert code == 0 and out == ""
        assert json.loads(dest.read_text())["c"] == 2


class TestQuotient:
    def test_stdout_payload(self, two_arcs_files, capsys):
        code, out, _ = run_cli(
            capsys, "quotient", str(two_arcs_files / "g.json"), str(two_arcs_files / "p.json")
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["quotient"]["vertices"] == ["[1a]", "[2]", "[3]"]
        assert doc["quotient"]["edges"] == [["[1a]", "[2]"], ["[1a]", "[3]"]]
        assert doc["projection"]["map"] == {"1a": "[1a]", "1b": "[1a]", "2": "[2]", "3": "[3]"}

    def test_prefix_writes_two_files(self, two_arcs_files, capsys):
        prefix = two_arcs_files / "q"
        code, out, _ = run_cli(
            capsys,
            "quotient",
            str(two_arcs_files / "g.json"),
            str(two_arcs_files / "p.json"),
            "--out",
            str(prefix),
        )
        assert code == 0 and out == ""
        q = json.loads((two_arcs_files / "q.quotient.json").read_text())
        proj = json.loads((two_arcs_files / "q.projection.json").read_text())
        assert len(q["vertices"]) == 3
        assert set(proj["map"]) == set("1a 1b 2 3".split())


class TestClassify:
    def test_balanced_example(self, tmp_path, capsys):
        m = balanced_two_component_map()
        io.save_json(tmp_path / "src.json", io.graph_to_dict(m.source))
        io.save_json(tmp_path / "tgt.json", io.graph_to_dict(m.target))
        io.save_json(tmp_path / "map.json", io.hom_to_dict(m))
        code, out, _ = run_cli(
            capsys,
            "classify",
            str(tmp_path / "src.json"),
            str(tmp_path / "tgt.json"),
            str(tmp_path / "map.json"),
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["locally_surjective"] is True
        assert doc["component_equitable"] is True
        assert doc["equitable"] is False
        assert doc["orbit"] is None

    def test_group_fills_orbit_field(self, two_triangles_files, capsys):
        g = io.load_graph(two_triangles_files / "g.json")
        p = io.load_partition(two_triangles_files / "p.json", g)
        m = quotient(g, p).projection
        io.save_json(two_triangles_files / "src.json", io.graph_to_dict(m.source))
        io.save_json(two_triangles_files / "tgt.json", io.graph_to_dict(m.target))
        io.save_json(two_triangles_files / "map.json", io.hom_to_dict(m))
        code, out, _ = run_cli(
            capsys,
            "classify",
            str(two_triangles_files / "src.json"),
            str(two_triangles_files / "tgt.json"),
            str(two_triangles_files / "map.json"),
            "--group",
            str(two_triangles_files / "grp.json"),
        )
        assert code == 0
        assert json.loads(out)["orbit"] is True


class TestCount:
    def test_auto_picks_orbit_route_with_group(self, two_triangles_files, capsys):
        code, out, _ = run_cli(
            capsys,
            "count",
            str(two_triangles_files / "g.json"),
            str(two_triangles_files / "p.json"),
            "--group",
            str(two_triangles_files / "grp.json"),
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["total"] == 2
        # ratio fields present: auto routed through the orbit formula
        assert doc["terms"][0]["kX"] == 2 and doc["terms"][0]["kC"] == 1

    def test_explicit_methods_agree(self, two_triangles_files, capsys):
        for method, expects_group in (("A", False), ("B", True), ("ce", False)):
            argv = [
                "count",
                str(two_triangles_files / "g.json"),
                str(two_triangles_files / "p.json"),
                "--method",
                method,
            ]
            if expects_group:
                argv += ["--group", str(two_triangles_files / "grp.json")]
            code, out, _ = run_cli(capsys, *argv)
            assert code == 0
            assert json.loads(out)["total"] == 2

    def test_method_b_needs_a_group(self, two_triangles_files, capsys):
        code, _, err = run_cli(
            capsys,
            "count",
            str(two_triangles_files / "g.json"),
            str(two_triangles_files / "p.json"),
            "--method",
            "B",
        )
        assert code == 2
        assert "hypotheses not satisfied" in err

    def test_wild_projection_rejected(self, two_arcs_files, capsys):
        code, _, err = run_cli(
            capsys, "count", str(two_arcs_files / "g.json"), str(two_arcs_files / "p.json")
        )
        assert code == 2
        assert "hypotheses not satisfied: locally_surjective" in err


class TestOrbits:
    def test_partition_payload(self, two_triangles_files, capsys):
        code, out, _ = run_cli(
            capsys,
            "orbits",
            str(two_triangles_files / "g.json"),
            str(two_triangles_files / "grp.json"),
        )
        assert code == 0
        assert json.loads(out) == {"blocks": [["a0", "b0"], ["a1", "b1"], ["a2", "b2"]]}


class TestPowergraph:
    def test_proper_cyclic_three(self, capsys):
        code, out, _ = run_cli(capsys, "powergraph", "--group", "cyclic:3", "--proper")
        assert code == 0
        doc = json.loads(out)
        assert doc["graph"] == {"vertices": ["1", "2"], "edges": [["1", "2"]]}
        assert doc["group"]["generators"] == [{"1": "1", "2": "2"}]

    def test_symmetric_three_proper(self, capsys):
        code, out, _ = run_cli(capsys, "powergraph", "--group", "symmetric:3", "--proper")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["graph"]["vertices"]) == 5

    def test_prefix_files_round_trip_into_orbits(self, tmp_path, capsys):
        prefix = tmp_path / "pg"
        code, out, _ = run_cli(
            capsys, "powergraph", "--group", "symmetric:3", "--proper", "--out", str(prefix)
        )
        assert code == 0 and out == ""
        code, out, _ = run_cli(
            capsys, "orbits", str(tmp_path / "pg.graph.json"), str(tmp_path / "pg.group.json")
        )
        assert code == 0
        assert json.loads(out)["blocks"] == [["132", "213", "321"], ["231", "312"]]

    def test_cayley_spec(self, tmp_path, capsys):
        from quograph import make_klein_four
        from quograph.io import cayley_to_dict

        io.save_json(tmp_path / "k4.json", cayley_to_dict(make_klein_four()))
        code, out, _ = run_cli(
            capsys, "powergraph", "--group", f"cayley:{tmp_path / 'k4.json'}", "--proper"
        )
        assert code == 0
        assert json.loads(out)["graph"]["edges"] == []

    def test_bad_spec_is_a_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "powergraph", "--group", "dihedral:4")
        assert code == 1
        assert "unrecognized group spec" in err

    def test_trivial_group_has_no_proper_graph(self, capsys):
        code, _, err = run_cli(capsys, "powergraph", "--group", "cyclic:1", "--proper")
        assert code == 2


class TestVerifyCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--max-vertices", "2", "--random", "5", "--seed", "7"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True
        assert len(doc["claims"]) == 25

    def test_identical_seeds_identical_bytes(self, tmp_path, capsys):
        for name in ("a", "b"):
            code, _, _ = run_cli(
                capsys,
                "verify",
                "--max-vertices",
                "2",
                "--random",
                "5",
                "--seed",
                "7",
                "--out",
                str(tmp_path / f"{name}.json"),
            )
            assert code == 0
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


class TestErrors:
    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "components", "/nonexistent/g.json")
        assert code == 1
        assert "error" in err

    def test_malformed_json_document(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"vertices": "oops"}\n')
        code, _, err = run_cli(capsys, "components", str(bad))
        assert code == 1

    def test_usage_error_exits_one(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["components"])  # missing positional argument
        assert exc.value.code == 1

    def test_unknown_subcommand_exits_one(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 1


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quograph.cli", "powergraph", "--group", "cyclic:2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["graph"]["vertices"] == ["0", "1"]
    console = subprocess.run(
        ["quograph", "powergraph", "--group", "cyclic:2"], capture_output=True, text=True
    )
    assert console.returncode == 0
    assert json.loads(console.stdout) == json.loads(proc.stdout)
