import csv
import io

import pytest

from dmds.bench import CSV_HEADER, emit_csv, parse_solutions, run_benchmark, run_instance
from dmds.cli import main
from dmds.graph import cycle_graph, format_edge_list, gnp_random_graph, parse_edge_list, star_graph
from dmds.oracle import verify_solution
from dmds.search import SearchConfig


@pytest.fixture
def instances(tmp_path):
    star = tmp_path / "star5.txt"
    star.write_text(format_edge_list(star_graph(5)))
    c9 = tmp_path / "c9.txt"
    c9.write_text(format_edge_list(cycle_graph(9)))
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1 two\n")
    return star, c9, bad


def test_star_aggregate(instances):
    star, _, _ = instances
    [rep] = run_benchmark([star], SearchConfig(cutoff=1), runs=10)
    assert rep.min_size == 1 and rep.avg_size == 1.0
    assert [r.seed for r in rep.runs] == list(range(1, 11))


def test_c9_aggregate(instances):
    _, c9, _ = instances
    [rep] = run_benchmark([c9], SearchConfig(cutoff=1), runs=10)
    assert rep.min_size == 3 and rep.avg_size == 3.0
    assert all(r.feasible_verified for r in rep.runs)
    assert rep.min_size <= rep.avg_size <= rep.max_size


def test_malformed_instance_is_recorded(instances):
    star, _, bad = instances
    results = run_benchmark([star, bad], SearchConfig(max_iters=10), runs=2)
    assert results[0].min_size == 1
    assert results[1].instance == "bad.txt"
    assert "line 2" in results[1].message


def test_csv_shape():
    rep = run_instance(star_graph(5), "star", SearchConfig(max_iters=5), runs=1)
    text = emit_csv([rep])
    lines = text.splitlines()
    assert len(lines) == 2
    assert lines[0] == ",".join(CSV_HEADER)
    row = next(csv.DictReader(io.StringIO(text)))
    assert row["feasible"] == "true"
    assert row["time_to_best_s"].count(".") == 1 and len(row["time_to_best_s"].split(".")[1]) == 3


def test_csv_deterministic_rows():
    g = gnp_random_graph(80, 0.05, __import__("random").Random(1))
    cfg = SearchConfig(max_iters=400, cutoff=1e9)
    a = emit_csv([run_instance(g, "g", cfg, runs=3)], timing=False)
    b = emit_csv([run_instance(g, "g", cfg, runs=3)], timing=False)
    assert a == b


def test_cli_exit_codes(instances, tmp_path):
    star, c9, bad = instances
    out = io.StringIO()
    assert main(["run", str(star), "--cutoff", "1", "--runs", "2"], out=out) == 0
    assert main(["run", str(star), str(bad), "--max-iters", "5", "--runs", "1"], out=io.StringIO()) == 1
    assert main(["run"], out=io.StringIO()) == 2
    assert main(["run", str(star), "--alpha", "2"], out=io.StringIO()) == 2
    assert main(["bogus"], out=io.StringIO()) == 2


def test_cli_reports(instances):
    star, _, _ = instances
    out = io.StringIO()
    assert main(["run", str(star), "--init-only", "--reductions-report"], out=out) == 0
    text = out.getvalue()
    assert "fixed=1 excluded=1 residual=4" in text
    assert "greedy=1" in text and "perturbation=1" in text and "chosen=greedy" in text


def test_cli_exact(instances):
    _, c9, bad = instances
    out = io.StringIO()
    assert main(["exact", str(c9)], out=out) == 0
    assert "optimum=3" in out.getvalue()
    assert main(["exact", str(bad)], out=io.StringIO()) == 1
    out = io.StringIO()
    assert main(["run", str(c9), "--exact"], out=out) == 0
    assert "exact optimum: 3" in out.getvalue()


def test_cli_csv_and_solution_file(instances, tmp_path):
    _, c9, _ = instances
    csv_path = tmp_path / "out.csv"
    sol_path = tmp_path / "sol.tsv"
    rc = main(
        ["run", str(c9), "--cutoff", "1", "--runs", "3", "--csv", str(csv_path),
         "--print-solution", str(sol_path)],
        out=io.StringIO(),
    )
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(csv_path.read_text())))
    sols = parse_solutions(sol_path.read_text())
    g = parse_edge_list(c9.read_text())
    assert len(rows) == len(sols) == 3
    for row, (inst, run, seed, size, verts) in zip(rows, sols):
        assert row["instance"] == inst and int(row["run"]) == run and int(row["seed"]) == seed
        assert int(row["best_size"]) == size == len(verts)
        assert verify_solution(g, verts)


def test_cli_one_indexed_solution_ids(tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("1 2\n2 3\n")
    sol = tmp_path / "sol.tsv"
    assert main(["run", str(path), "--one-indexed", "--max-iters", "5", "--runs", "1",
                 "--print-solution", str(sol)], out=io.StringIO()) == 0
    [(_, _, _, size, verts)] = parse_solutions(sol.read_text())
    assert size == 1 and verts == {2}
