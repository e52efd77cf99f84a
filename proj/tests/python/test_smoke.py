from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import plumbline


def test_corpus_lists_fixed_examples():
    names = plumbline.corpus_names()
    for name in ("ex-dimim", "ex-445", "ex-whsing", "E8"):
        assert name in names


def test_dimim_lattice_data():
    g = plumbline.Graph.corpus("ex-dimim")
    assert g.ids == ["v1", "v2", "v3", "v4", "v5"]
    assert g.det == 1
    assert g.zmin() == {"v1": 3, "v2": 6, "v3": 1, "v4": 1, "v5": 2}
    assert g.canonical() == {v: Fraction(c) for v, c in zip(g.ids, (4, 8, 2, 1, 3))}
    assert g.chi(g.zmin()) == 0
    assert g.is_elliptic() and not g.is_rational()
    assert not g.is_dominant(None, g.zmin())


def test_single_vertex_dual_base_and_pairing():
    g = plumbline.Graph.from_text("vertex a -2\n")
    assert g.dual_base() == {"a": {"a": Fraction(1, 2)}}
    assert g.pairing("a=1/2", "a=1") == Fraction(-1)
    assert g.in_sdom(g.dual_cycle({"a": 1}))
    assert not g.in_sdom(g.dual_cycle({"a": -1}))


def test_text_round_trip():
    g = plumbline.Graph.corpus("ex-445")
    h = plumbline.Graph.from_text(g.to_text())
    assert h.ids == g.ids and h.euler == g.euler and h.det == g.det == 125


def test_errors_carry_stable_names():
    with pytest.raises(plumbline.DomainError) as err:
        plumbline.Graph.from_text("vertex a -1\nvertex b -1\nedge a b\n")
    assert err.value.name == "NotNegativeDefinite"
    with pytest.raises(plumbline.DomainError) as err:
        plumbline.Graph.from_text("vertex a -2\nvertex b -2\nvertex c -2\nedge a b\nedge b c\nedge c a\n")
    assert err.value.name == "NotATree"
    with pytest.raises(plumbline.DomainError) as err:
        plumbline.Graph.from_text("vertex a -2\n").l_dom("a=1/3")
    assert err.value.name == "NotInDualLattice"
    assert isinstance(err.value, ValueError)


def test_weighted_homogeneous_goldens():
    s = plumbline.Seifert.parse("b0=1 legs=5,1x4")
    assert s.pg() == 4 and s.s0() == 0 and s.dim_im_central() == 4
    assert [s.h1_end(j) for j in (1, 2, 3, 4)] == [2, 2, 2, 2]
    wh = plumbline.Seifert.parse("b0=4 legs=8,1x8")
    assert wh.pg() == 3 and wh.s0() == 1
    rank, h1 = wh.jet_rank([Fraction(1, 2), 3])
    assert (rank, h1) == (2, 1)


def test_symbolic_identities():
    for n in range(1, 6):
        assert plumbline.delta_identity(n)
        assert plumbline.det_mc_is_c1_power(n)


@pytest.mark.parametrize("d", [4, 5])
def test_superisolated_generic_rank(d):
    assert plumbline.si_pg(d) == d * (d - 1) * (d - 2) // 6
    for k in range(0, (d - 1) * (d - 2) // 2 + 2):
        assert plumbline.si_constraint_rank(d, k)[0] == plumbline.si_dim_im_generic(d, k)


E6 = plumbline.Graph.corpus("E6")


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-1, 3), min_size=6, max_size=6), st.lists(st.integers(-1, 3), min_size=6, max_size=6))
def test_sdom_closed_under_addition(a, b):
    x = E6.dual_cycle(dict(zip(E6.ids, a)))
    y = E6.dual_cycle(dict(zip(E6.ids, b)))
    if E6.in_sdom(x) and E6.in_sdom(y):
        s = {v: x[v] + y[v] for v in E6.ids}
        assert E6.in_sdom(s)
    if E6.in_sdom(x):
        assert E6.in_van(x)
