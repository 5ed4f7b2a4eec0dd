import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sbundle.generators import complete
from sbundle.io import (ParseError, ResultRecord, detect_format, parse_graph, read_graph,
                        read_results, results_to_string, write_dimacs, write_results)


def test_dimacs_triangle():
    g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == complete(3)
    assert [g.label(v) for v in range(3)] == [1, 2, 3]


def test_dimacs_with_comments_and_bytes():
    g = parse_graph(b"c generated\nc more\np col 4 2\ne 1 4\n\ne 2 3\n")
    assert g.n == 4 and g.m == 2 and g.has_edge(0, 3)


def test_dimacs_declared_m_is_advisory():
    assert parse_graph("p edge 3 99\ne 1 2\n").m == 1


@pytest.mark.parametrize("text,line", [
    ("p edge 2 1\ne 1 5\n", 2),
    ("p edge x 1\n", 1),
    ("p edge 3\n", 1),
    ("e 1 2\np edge 2 1\n", 1),
    ("p edge 3 1\ne 1 b\n", 2),
    ("p edge 3 1\nq 1 2\n", 2),
])
def test_dimacs_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_edge_list_dedup_and_loops():
    g = parse_graph("0 1\n1 0\n1 1\n")
    assert g.n == 2 and g.m == 1


def test_edge_list_compaction_first_seen():
    g = parse_graph("# comment\n% other\n10 3\n3 7\n7 10  1.5\n")
    assert g.n == 3 and g.m == 3
    assert [g.label(v) for v in range(3)] == [10, 3, 7]


def test_edge_list_errors():
    with pytest.raises(ParseError):
        parse_graph("0 1\n2\n")
    with pytest.raises(ParseError):
        parse_graph("0 -1\n")
    with pytest.raises(ParseError):
        parse_graph("a b\n")


def test_matrix_market_size_line_skipped():
    g = parse_graph("%%MatrixMarket matrix coordinate pattern symmetric\n% c\n3 3 2\n1 2\n2 3\n")
    assert g.n == 3 and g.m == 2


def test_detection_is_deterministic():
    assert detect_format("c x\np edge 1 0\n") == "dimacs"
    assert detect_format("1 2\n") == "edgelist"
    assert parse_graph("1 2\n", fmt="edgelist").m == 1


def test_read_graph(tmp_path):
    p = tmp_path / "k3.clq"
    p.write_text("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert read_graph(p) == complete(3)


def test_write_dimacs_round_trip(tmp_path):
    from sbundle.generators import c_fat
    g = c_fat(60, 1)
    write_dimacs(g, tmp_path / "g.clq", comment="test")
    assert read_graph(tmp_path / "g.clq") == g


REC = ResultRecord("c-fat200-1", 2, 12, (1, 5, 9), 90, 729, 1, 0.0123456789012345, False, "default")


def test_csv_one_record():
    text = results_to_string([REC], "csv")
    lines = text.strip().splitlines()
    assert len(lines) == 2
    assert lines[0] == "instance,s,size,witness,reduced_v,reduced_e,tree_nodes,time,timed_out,variant"


def test_csv_empty_is_header_only():
    assert results_to_string([], "csv").strip().count("\n") == 0


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_round_trip_fixed(fmt, tmp_path):
    path = tmp_path / f"r.{fmt}"
    recs = [REC, ResultRecord("x,y", 8, 0, (), 0, 0, 0, 300.0, True, "color")]
    write_results(recs, fmt, path)
    assert read_results(path, fmt) == recs


def test_json_is_array_of_objects():
    data = json.loads(results_to_string([REC], "json"))
    assert isinstance(data, list) and data[0]["witness"] == [1, 5, 9]


records = st.builds(
    ResultRecord,
    # names come from file stems, which never hold control characters
    instance=st.text(st.characters(blacklist_categories=("Cc", "Cs")), min_size=1, max_size=12),
    s=st.integers(1, 50),
    size=st.integers(-1, 10**6),
    witness=st.lists(st.integers(0, 10**9), max_size=8).map(tuple),
    reduced_v=st.integers(0, 10**7),
    reduced_e=st.integers(0, 10**9),
    tree_nodes=st.integers(0, 10**12),
    time=st.floats(0, 1e6, allow_nan=False),
    timed_out=st.booleans(),
    variant=st.sampled_from(["default", "nopre", "greedy", "color", "noexpand"]),
)


@given(st.lists(records, max_size=5), st.sampled_from(["csv", "json"]))
def test_round_trip_lossless(recs, fmt):
    buf = io.StringIO(results_to_string(recs, fmt), newline="")
    assert read_results(buf, fmt) == recs
