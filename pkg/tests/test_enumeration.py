import pytest

from pack2dom import (
    BoundExceededError,
    Graph6Error,
    canonical_form,
    enumerate_connected,
    ingest_graph6,
    to_graph6,
)

from helpers import naive_connected_canonical_forms

# connected graphs on 1..6 vertices, cross-checked below against the
# labeled-powerset oracle
EXPECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


@pytest.mark.parametrize("n", sorted(EXPECTED_COUNTS))
def test_counts_match_naive_oracle(n):
    builtin = {canonical_form(g) for g in enumerate_connected(n)}
    assert len(builtin) == EXPECTED_COUNTS[n]
    assert builtin == naive_connected_canonical_forms(n)


def test_stream_properties():
    stream = enumerate_connected(6)
    forms = []
    for g in stream:
        assert g.n == 6
        assert g.is_connected()
        forms.append(canonical_form(g))
        # builtin graphs arrive canonically labeled
        assert to_graph6(g).encode() == forms[-1]
    assert stream.count == len(forms) == 112
    assert len(set(forms)) == len(forms)
    assert forms == sorted(forms)


def test_larger_levels_have_known_sizes():
    assert sum(1 for _ in enumerate_connected(7)) == 853


def test_builtin_bound():
    with pytest.raises(BoundExceededError):
        enumerate_connected(9)
    with pytest.raises(BoundExceededError):
        enumerate_connected(0)


def test_ingest_graph6(tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("A_\nBw\nC~\n")
    graphs = list(ingest_graph6(corpus))
    assert [g.n for g in graphs] == [2, 3, 4]


def test_ingest_crlf(tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_bytes(b"A_\r\nBw\r\n")
    assert [g.n for g in ingest_graph6(corpus)] == [2, 3]


def test_ingest_malformed_line_numbered(tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("A_\nnot graph6 at all!\nC~\n")
    with pytest.raises(Graph6Error, match="2"):
        list(ingest_graph6(corpus))


def test_ingest_empty_file(tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("")
    assert list(ingest_graph6(corpus)) == []


def test_ingest_missing_file(tmp_path):
    with pytest.raises(Graph6Error):
        ingest_graph6(tmp_path / "nope.g6")


def test_ingest_skips_disconnected_when_expected_connected(tmp_path):
    corpus = tmp_path / "corpus.g6"
    disconnected = "C?"  # 4 isolated vertices
    corpus.write_text(f"A_\n{disconnected}\nBw\n")
    with pytest.warns(UserWarning, match="disconnected"):
        graphs = list(ingest_graph6(corpus, expect_connected=True))
    assert [g.n for g in graphs] == [2, 3]

    all_graphs = list(ingest_graph6(corpus, expect_connected=False))
    assert [g.n for g in all_graphs] == [2, 4, 3]
