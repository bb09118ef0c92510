import io

import pytest

from bk_lab.graphs.graph import complete_graph, cycle_graph, empty_graph
from bk_lab.graphs.graph6 import Graph6Error
from bk_lab.utils.data_utils import ingest_graph6_stream, load_graph, read_coloring_file, read_graphs


@pytest.fixture
def graph6_file(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("C~\n\nbad!\n>>graph6<<Dhc\n")
    return str(path)


def test_ingest_reports_errors_and_continues(graph6_file):
    records = list(ingest_graph6_stream(graph6_file))
    assert [r.line_no for r in records] == [1, 3, 4]
    assert records[0].graph == complete_graph(4)
    assert records[1].graph is None
    assert isinstance(records[1].error, Graph6Error)
    assert records[1].error.line_no == 3
    assert records[2].graph == cycle_graph(5)


def test_ingest_non_ascii_line_is_a_per_line_error(tmp_path):
    path = tmp_path / "mixed.g6"
    path.write_bytes(b"C~\n\xc3\xa9\nC?\n")
    records = list(ingest_graph6_stream(str(path)))
    assert [r.line_no for r in records] == [1, 2, 3]
    assert records[0].graph == complete_graph(4)
    assert records[1].graph is None
    assert records[1].error.line_no == 2
    assert "non-ascii" in str(records[1].error)
    assert records[2].graph == empty_graph(4)


def test_read_graphs_skips_malformed_lines(graph6_file):
    assert read_graphs(graph6_file) == [complete_graph(4), cycle_graph(5)]


def test_ingest_from_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~\nC?\n"))
    assert len(list(ingest_graph6_stream("-"))) == 2


def test_load_graph(graph6_file, tmp_path):
    assert load_graph("Dhc") == cycle_graph(5)
    assert load_graph(graph6_file) == complete_graph(4)
    broken = tmp_path / "broken.g6"
    broken.write_text("C\n")
    with pytest.raises(Graph6Error):
        load_graph(str(broken))
    empty = tmp_path / "empty.g6"
    empty.write_text("\n")
    with pytest.raises(Graph6Error, match="no graph"):
        load_graph(str(empty))


def test_read_coloring_file(tmp_path):
    path = tmp_path / "coloring.txt"
    path.write_text("# centre 4 stays uncoloured\n0 1\n1 2  # A2\n\n2 3\n3 3\n")
    c = read_coloring_file(str(path), 5)
    assert c.to_list() == [1, 2, 3, 3, 0]
    assert c.k == 3


@pytest.mark.parametrize(
    "text,message",
    [
        ("0 1\n0 2\n", "twice"),
        ("5 1\n", "out of range"),
        ("0 0\n", "1-based"),
        ("zero one\n", "expected"),
        ("0 1 2\n", "expected"),
    ],
)
def test_read_coloring_file_errors(tmp_path, text, message):
    path = tmp_path / "coloring.txt"
    path.write_text(text)
    with pytest.raises(ValueError, match=message):
        read_coloring_file(str(path), 3)
