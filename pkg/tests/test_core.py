import pytest
from hypothesis import given, settings, strategies as st

from flagcomb.core import (
    EMPTY, VOID, Complex, dehn_sommerville_check, disjoint_union, euler_characteristic,
    f_from_h, f_polynomial_product, f_vector, from_facets, gamma_vector, h_from_gamma,
    h_vector, join, link, relabel, restriction, suspension,
)
from flagcomb.errors import GammaUndefinedError, MalformedFaceError, NotAFaceError
from flagcomb import gen

C4 = from_facets([(0, 1), (1, 2), (2, 3), (3, 0)])


def test_from_facets_cycle():
    assert C4.dim == 1 and C4.n == 4
    assert C4.facets == ((0, 1), (0, 3), (1, 2), (2, 3))


def test_from_facets_removes_dominated():
    assert from_facets([(0, 1), (0, 1, 2)]).facets == ((0, 1, 2),)


def test_from_facets_rejects_duplicates():
    with pytest.raises(MalformedFaceError):
        from_facets([(0, 0, 1)])
    with pytest.raises(MalformedFaceError):
        from_facets([(-1, 2)])


def test_void_and_empty():
    assert f_vector(VOID) == ()
    assert f_vector(EMPTY) == (1,)
    assert EMPTY.dim == -1 and VOID.is_void


def test_faces_canonical_order():
    tri = from_facets([(0, 1, 2)])
    assert tri.faces() == [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    assert tri.faces(1) == [(0, 1), (0, 2), (1, 2)]


def test_f_vector_examples():
    assert f_vector(C4) == (1, 4, 4)
    assert f_vector(gen.octahedron()) == (1, 6, 12, 8)
    assert f_vector(gen.j_m_n(3, 12)) == (1, 12, 60, 160, 240, 192, 64)


def test_h_vector_examples():
    assert h_vector((1, 6, 12, 8)) == (1, 3, 3, 1)
    assert h_vector((1, 12, 60, 160, 240, 192, 64)) == (1, 6, 15, 20, 15, 6, 1)
    assert h_vector(f_vector(gen.icosahedron())) == (1, 9, 9, 1)


def test_gamma_examples():
    assert gamma_vector((1, 6, 15, 20, 15, 6, 1)) == (1, 0, 0, 0)
    assert gamma_vector((1, 9, 9, 1)) == (1, 6)
    with pytest.raises(GammaUndefinedError):
        gamma_vector((1, 2, 1, 0))


def test_gamma_of_j3_15_vertex_link():
    c = gen.j_m_n(3, 15)
    assert gamma_vector(h_vector(f_vector(link(c, (0,))))) == (1, 2, 1)


def test_link():
    assert link(C4, (0,)).facets == ((1,), (3,))
    assert link(C4, ()) == C4
    assert link(C4, (0, 1)) == EMPTY
    with pytest.raises(NotAFaceError):
        link(C4, (0, 2))


def test_restriction():
    oct_ = gen.octahedron()
    assert f_vector(restriction(oct_, [0, 2, 4])) == (1, 3, 3, 1)
    assert restriction(C4, [0, 2]).facets == ((0,), (2,))


def test_join_and_relabel():
    j = join(C4, C4)
    assert j.n == 8 and f_vector(j) == (1, 8, 24, 32, 16)
    assert f_vector(suspension(C4)) == (1, 6, 12, 8)
    assert join(VOID, C4) is VOID
    assert join(EMPTY, C4) == C4
    assert relabel(C4, {0: 10}).vertices == (1, 2, 3, 10)
    assert disjoint_union(C4, C4).n == 8


def test_euler_characteristic():
    assert euler_characteristic(f_vector(C4)) == 0
    assert euler_characteristic(f_vector(gen.octahedron())) == 2


def test_polynomial_product_matches_join():
    a, b = gen.cycle(5), gen.cycle(6, start=5)
    assert f_polynomial_product(f_vector(a), f_vector(b)) == f_vector(join(a, b))


def test_dehn_sommerville_d6():
    rep = dehn_sommerville_check((1, 12, 60, 160, 240, 192, 64))
    assert rep.passed and not rep.witnesses
    bad = dehn_sommerville_check((1, 12, 60, 160, 240, 191, 64))
    assert not bad.passed
    assert {w.get("index") for w in bad.witnesses} >= {3}


# properties -------------------------------------------------------------------

faces_st = st.lists(st.lists(st.integers(0, 9), min_size=1, max_size=4, unique=True),
                    min_size=1, max_size=8)


@given(faces_st)
def test_from_facets_is_antichain(faces):
    c = from_facets(faces)
    fs = [set(f) for f in c.facets]
    assert not any(a < b for a in fs for b in fs)
    assert set(c.vertices) == {v for f in faces for v in f}
    assert c.dim == max(len(f) for f in faces) - 1
    for f in faces:
        assert c.contains(f)


@given(st.lists(st.integers(0, 40), min_size=1, max_size=7))
def test_h_f_round_trip(f):
    f = [1] + f
    assert tuple(f_from_h(h_vector(f))) == tuple(f)


@given(st.lists(st.integers(-20, 20), min_size=0, max_size=3), st.integers(1, 8))
def test_gamma_h_round_trip(tail, d):
    gamma = [1] + tail[: d // 2]
    h = h_from_gamma(gamma, d)
    assert h.is_symmetric()
    g = gamma_vector(h)
    assert tuple(g) + (0,) * (len(gamma) - len(g)) == tuple(gamma) + (0,) * (len(g) - len(gamma))


@settings(max_examples=50)
@given(faces_st)
def test_sum_h_equals_top_f(faces):
    c = from_facets(faces)
    f = f_vector(c)
    assert sum(h_vector(f)) == f[-1]
    assert h_vector(f)[0] == 1
