import pytest

from lieshift.fields import QQ
from lieshift.invariants import trdeg_jacobian
from lieshift.liealg import check_split, darboux_split, nilradical_of, validate
from lieshift.polyring import PolyElement, poisson
from lieshift.presets import Preset, preset, preset_names, unit_content

FIXED = [
    "aff1",
    "borel-sl2",
    "borel-sl3",
    "gl2",
    "gl3",
    "gl4",
    "sl2",
    "sl2-semidirect-h3",
    "sl3",
    "so3",
    "so4",
]


def test_preset_names():
    names = preset_names()
    assert names[:2] == ["abelianN", "heisenbergN"]
    assert names[2:] == FIXED


def test_all_presets_validate():
    for name in FIXED + ["abelian1", "abelian4", "heisenberg1", "heisenberg3"]:
        P = preset(name)
        assert isinstance(P, Preset) and P.name
        rep = validate(P.algebra)
        assert rep.ok, "%s: %s %s" % (name, rep.jacobi_failures, rep.annotation_failures)
        assert P.description


def test_parametric_families():
    A = preset("abelian5").algebra
    assert A.dim == 5 and not A.table
    H = preset("heisenberg2").algebra
    assert H.dim == 5
    assert H.labels == ("x1", "x2", "y1", "y2", "z")
    assert H.central_indices() == frozenset({4})
    split = darboux_split(H, nilradical_of(H))
    assert check_split(H, split) == []


def test_unknown_presets_rejected():
    with pytest.raises(KeyError):
        preset("e8")
    with pytest.raises(KeyError):
        preset("abelian0")
    with pytest.raises(KeyError):
        preset("heisenberg-1")


def test_casimirs_are_invariant():
    for name in ("sl2", "sl3", "gl2", "gl3", "so3", "so4", "sl2-semidirect-h3"):
        P = preset(name)
        L = P.algebra
        assert P.casimirs, name
        for c in P.casimirs:
            for i in range(L.dim):
                xi = PolyElement.variable(L.field, L.dim, i)
                assert poisson(L, xi, c).is_zero, (name, c.render(L.labels))


def test_casimir_counts_match_index():
    # functionally independent central generators, as many as the index
    for name, ind in (("sl2", 1), ("sl3", 2), ("gl3", 3), ("so4", 2)):
        P = preset(name)
        assert len(P.casimirs) == ind
        assert trdeg_jacobian(P.casimirs).value == ind


def test_sl2_casimir_exact():
    P = preset("sl2")
    assert [c.render(P.algebra.labels) for c in P.casimirs] == ["h^2 + 4*e*f"]


def test_unit_content():
    h = PolyElement.variable(QQ, 2, 0)
    e = PolyElement.variable(QQ, 2, 1)
    p = h * QQ.rational(1, 2) + e * QQ.rational(1, 3)
    assert unit_content(p) == h * 3 + e * 2
    assert unit_content(p * QQ.from_int(-7)) == h * 3 + e * 2
    # leading sign normalization
    q = h * h * QQ.from_int(-2) + e * 4
    assert unit_content(q) == h * h - e * 2
    assert unit_content(PolyElement.zero(QQ, 2)).is_zero
