import json
import warnings

import pytest

from flagcomb import gen
from flagcomb.bounds import reference_f
from flagcomb.core import f_vector
from flagcomb.errors import FlagcombWarning, NotAFaceError, ParameterError
from flagcomb.flag import is_flag, one_skeleton
from flagcomb.formats import read_sc


def test_cycle():
    assert f_vector(gen.cycle(6)) == (1, 6, 6)
    assert gen.cycle(4, start=10).vertices == (10, 11, 12, 13)
    with pytest.raises(ParameterError):
        gen.cycle(2)
    with pytest.warns(FlagcombWarning):
        gen.cycle(3)


def test_cycle_lengths():
    assert gen.cycle_lengths(3, 13) == [5, 4, 4]
    assert gen.cycle_lengths(2, 9) == [5, 4]


def test_j_m_n_examples():
    assert f_vector(gen.j_m_n(3, 12)) == (1, 12, 60, 160, 240, 192, 64)
    assert f_vector(gen.j_m_n(3, 13))[-1] == 80
    assert f_vector(gen.j_m_n(2, 9))[-1] == 20
    with pytest.raises(ParameterError):
        gen.j_m_n(3, 11)
    with pytest.raises(ParameterError):
        gen.j_m_n(1, 8)


def test_j_m_n_matches_reference():
    for m, n in [(2, 8), (2, 11), (3, 12), (3, 14), (3, 17)]:
        assert f_vector(gen.j_m_n(m, n)) == reference_f(m, n)


def test_f1_of_j_m_n():
    # the edge count of the balanced join, checked against the construction
    for m, n in [(2, 8), (2, 9), (3, 13), (3, 16)]:
        lens = gen.cycle_lengths(m, n)
        mixed = sum(a * b for i, a in enumerate(lens) for b in lens[i + 1:])
        assert f_vector(gen.j_m_n(m, n))[2] == n + mixed


def test_j_star():
    assert f_vector(gen.j_star(1, 6)) == (1, 6, 12, 8)
    assert f_vector(gen.j_star(2, 10))[-1] == 32
    with pytest.raises(ParameterError):
        gen.j_star(2, 9)


def test_cross_polytope():
    assert f_vector(gen.cross_polytope(3)) == (1, 6, 12, 8)
    assert f_vector(gen.cross_polytope(4))[-1] == 16


def test_icosahedron():
    c = gen.icosahedron()
    assert f_vector(c) == (1, 12, 30, 20)
    assert is_flag(c).passed


def test_gal_gamma_edges():
    for n in (12, 14, 16, 18, 20):
        assert 4 * f_vector(gen.gal_gamma(n))[2] == n * n + 2 * n + 16
    assert f_vector(gen.gal_gamma(12)) == (1, 12, 46, 68, 34)
    with pytest.raises(ParameterError):
        gen.gal_gamma(13)


def test_nonjoin():
    assert f_vector(gen.nonjoin_5manifold(16, 4)) == (1, 16, 98, 300, 490, 408, 136)
    with pytest.raises(ParameterError):
        gen.nonjoin_5manifold(16, 3)


def test_subdivide_edge():
    c = gen.subdivide_edge(gen.j_m_n(3, 12), (0, 4))
    assert c.n == 13 and f_vector(c)[-1] == 80
    with pytest.raises(NotAFaceError):
        gen.subdivide_edge(gen.cycle(5), (0, 2))


def test_subdivide_keeps_flag_inputs_flag():
    with warnings.catch_warnings():
        warnings.simplefilter("error", FlagcombWarning)
        for c, e in [(gen.octahedron(), (0, 2)), (gen.icosahedron(), (0, 1)), (gen.j_m_n(2, 9), (0, 5))]:
            assert is_flag(gen.subdivide_edge(c, e)).passed


def test_pinched_octahedra():
    c = gen.pinched_octahedra()
    assert c.n == 11 and len(c.facets) == 16


def test_corpus_contents(corpus):
    names = [e.name for e in corpus]
    assert len(names) == len(set(names))
    assert {"J3_12", "J3_18", "nonjoin_16_4", "nonjoin_17_5", "Gamma_18", "hollow_triangle"} <= set(names)
    with pytest.raises(ParameterError):
        gen.build_corpus(13)


def test_write_corpus(tmp_path):
    entries = gen.build_corpus(14)
    path = gen.write_corpus(entries, tmp_path)
    data = json.loads(path.read_text())
    assert set(data) == {e.name for e in entries}
    assert read_sc(tmp_path / "J3_12.sc") == gen.j_m_n(3, 12)
    # deterministic
    first = path.read_bytes()
    gen.write_corpus(entries, tmp_path)
    assert path.read_bytes() == first
