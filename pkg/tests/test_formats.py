import pytest
from hypothesis import given, strategies as st

from flagcomb import gen
from flagcomb.core import from_facets
from flagcomb.errors import FlagcombWarning, FormatError
from flagcomb.flag import Graph, clique_complex, one_skeleton
from flagcomb.formats import (
    format_g, format_sc, load_complex, parse_g, parse_sc, write_g, write_sc,
)


def test_parse_sc_comments_and_blank_lines():
    c = parse_sc("# a square\n0 1\n\n1 2  # edge\n2 3\n3 0\n")
    assert c == gen.cycle(4)


def test_parse_sc_dominated_warning():
    with pytest.warns(FlagcombWarning):
        c = parse_sc("0 1\n0 1 2\n")
    assert c.facets == ((0, 1, 2),)


def test_parse_sc_errors():
    with pytest.raises(FormatError, match="line 2"):
        parse_sc("0 1\n1 x\n")
    with pytest.raises(FormatError):
        parse_sc("0 0 1\n")


def test_parse_g():
    g = parse_g("vertices 4\n0 1\n1 2\n")
    assert g.labels == (0, 1, 2, 3) and g.size == 2
    with pytest.raises(FormatError):
        parse_g("0 1 2\n")
    with pytest.raises(FormatError):
        parse_g("1 1\n")


def test_format_g_header_only_when_needed():
    assert format_g(one_skeleton(gen.cycle(4))).splitlines()[0] == "0 1"
    g = Graph.from_edges([(0, 1)], vertices=range(3))
    assert format_g(g).startswith("vertices 3\n")


def test_load_complex(tmp_path):
    c = gen.octahedron()
    write_sc(c, tmp_path / "o.sc", comment="octahedron")
    write_g(one_skeleton(c), tmp_path / "o.g")
    assert load_complex(tmp_path / "o.sc") == c
    assert load_complex(tmp_path / "o.g") == c


faces_st = st.lists(st.lists(st.integers(0, 30), min_size=1, max_size=5, unique=True),
                    min_size=1, max_size=10)


@given(faces_st)
def test_sc_round_trip(faces):
    c = from_facets(faces)
    assert parse_sc(format_sc(c, "x")) == c


@given(st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)).filter(lambda e: e[0] != e[1]),
                max_size=30))
def test_g_round_trip(edges):
    g = Graph.from_edges(edges)
    back = parse_g(format_g(g))
    assert back.edges() == g.edges()
    assert clique_complex(back) == clique_complex(g)
