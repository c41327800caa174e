import pytest

from lieshift.fields import QQ
from lieshift.liealg import (
    HeisenbergSplit,
    LieAlgebra,
    LieAlgebraError,
    LinearForm,
    Subspace,
    bracket,
    center_of,
    check_split,
    classify_nilradical,
    coadjoint_form,
    darboux_split,
    direct_sum,
    is_reductive,
    killing_matrix,
    ltilde,
    nilradical_of,
    stabilizer,
    structure_series,
    subalgebra_of,
    validate,
    vec,
)
from lieshift.linalg import rank
from lieshift.presets import preset


def sl2():
    return preset("sl2").algebra


def h3():
    return preset("heisenberg1").algebra


def test_constructor_checks():
    with pytest.raises(LieAlgebraError):
        LieAlgebra(QQ, ["a", "a"], {})
    with pytest.raises(LieAlgebraError):
        LieAlgebra(QQ, ["a", "b"], {(1, 0): {0: 1}})
    with pytest.raises(LieAlgebraError):
        LieAlgebra(QQ, ["a", "b"], {(0, 2): {0: 1}})
    # int coefficients are converted, zeros dropped
    L = LieAlgebra(QQ, ["a", "b"], {(0, 1): {0: 0, 1: 2}})
    assert L.table == {(0, 1): {1: QQ.from_int(2)}}


def test_bracket_basis_antisymmetry():
    L = sl2()
    assert L.bracket_basis(1, 0) == {k: -c for k, c in L.bracket_basis(0, 1).items()}
    assert L.bracket_basis(2, 2) == {}


def test_bracket_bilinear():
    L = sl2()
    h, e, f = (L.basis_vector(i) for i in range(3))
    he = bracket(L, h, e)
    assert [str(c) for c in he] == ["0", "2", "0"]
    two_h = vec(QQ, [2, 0, 0])
    assert bracket(L, two_h, e) == tuple(c + c for c in he)
    ef = bracket(L, e, f)
    assert [str(c) for c in ef] == ["1", "0", "0"]


def test_validate_good_and_bad():
    assert validate(sl2()).ok
    bad = LieAlgebra(QQ, ["x", "y", "z"], {(0, 1): {2: 1}, (0, 2): {0: 1}, (1, 2): {1: 1}})
    rep = validate(bad)
    assert not rep.ok
    assert rep.jacobi_failures == [(0, 1, 2)]


def test_validate_annotation_failures():
    L = LieAlgebra(QQ, ["x", "y", "z"], {(0, 1): {2: 1}}, {"central": [0]})
    rep = validate(L)
    assert any("central index 0" in m for m in rep.annotation_failures)
    L2 = LieAlgebra(QQ, ["h", "e", "f"], preset("sl2").algebra.table, {"nilradical": [1]})
    rep2 = validate(L2)
    assert any("not an ideal" in m for m in rep2.annotation_failures)


def test_subspace_basics():
    S = Subspace(QQ, 3, [vec(QQ, [1, 1, 0]), vec(QQ, [2, 2, 0]), vec(QQ, [0, 0, 1])])
    assert S.dim == 2
    assert S.contains(vec(QQ, [3, 3, 5]))
    assert not S.contains(vec(QQ, [1, 0, 0]))
    assert S.coordinates(vec(QQ, [1, 0, 0])) is None
    c = S.coordinates(vec(QQ, [2, 2, -1]))
    got = [sum((ci * bi for ci, bi in zip(c, col)), QQ.zero) for col in zip(*S.basis)]
    assert tuple(got) == vec(QQ, [2, 2, -1])


def test_subspace_equality_is_canonical():
    A = Subspace(QQ, 2, [vec(QQ, [1, 1]), vec(QQ, [1, -1])])
    B = Subspace(QQ, 2, [vec(QQ, [1, 0]), vec(QQ, [0, 1])])
    assert A == B and hash(A) == hash(B)
    assert A.contains_subspace(Subspace(QQ, 2, [vec(QQ, [3, 7])]))


def test_coadjoint_and_stabilizer():
    L = sl2()
    gamma = LinearForm(QQ, vec(QQ, [1, 0, 0]))  # dual to h
    M = coadjoint_form(L, gamma)
    assert rank(M) == 2
    st = stabilizer(L, gamma)
    assert st.dim == 1 and st.contains(L.basis_vector(0))
    N = h3()
    stz = stabilizer(N, LinearForm(QQ, vec(QQ, [0, 0, 1])))
    assert stz.dim == 1 and stz.contains(N.basis_vector(2))


def test_structure_series():
    assert structure_series(h3()).is_nilpotent
    s = structure_series(preset("borel-sl2").algebra)
    assert s.is_solvable and not s.is_nilpotent and not s.is_abelian
    t = structure_series(sl2())
    assert not t.is_solvable and t.derived.dim == 3
    assert structure_series(preset("abelian3").algebra).is_abelian
    assert center_of(h3()).dim == 1


def test_subalgebra_of():
    L = sl2()
    S = L.span_of_indices([0, 1])
    sub, amb = subalgebra_of(L, S)
    assert sub.labels == ("h", "e")
    assert sub.table == {(0, 1): {1: QQ.from_int(2)}}
    assert amb == [L.basis_vector(0), L.basis_vector(1)]
    with pytest.raises(LieAlgebraError):
        subalgebra_of(L, L.span_of_indices([1, 2]))  # [e, f] = h escapes


def test_direct_sum():
    L = direct_sum(sl2(), preset("abelian1").algebra)
    assert L.dim == 4
    assert validate(L).ok
    # no cross brackets
    for (i, j) in L.table:
        assert (i < 3) == (j < 3)


def test_killing_matrix_sl2():
    K = killing_matrix(sl2())
    expect = [["8", "0", "0"], ["0", "0", "4"], ["0", "4", "0"]]
    assert [[str(K[i, j]) for j in range(3)] for i in range(3)] == expect


def test_is_reductive():
    assert is_reductive(sl2())
    assert is_reductive(preset("gl2").algebra)
    assert is_reductive(preset("abelian3").algebra)
    assert not is_reductive(preset("borel-sl2").algebra)
    assert not is_reductive(h3())


def test_is_reductive_rejects_lying_annotation():
    N = h3()
    bad = LieAlgebra(QQ, N.labels, N.table, {"solvable_radical": [2]})
    with pytest.raises(LieAlgebraError):
        is_reductive(bad)


def test_nilradical_of():
    assert nilradical_of(h3()).dim == 3
    aff = preset("aff1").algebra
    nr = aff.annotations.get("nilradical")
    plain = LieAlgebra(QQ, aff.labels, aff.table)
    assert nilradical_of(plain).dim == 1
    if nr is not None:
        assert nilradical_of(plain) == nr
    bare_sl2 = LieAlgebra(QQ, ("h", "e", "f"), sl2().table)
    with pytest.raises(LieAlgebraError):
        nilradical_of(bare_sl2)


def test_classify_nilradical_kinds():
    assert classify_nilradical(preset("abelian1").algebra).kind == "line"
    assert classify_nilradical(preset("aff1").algebra).kind == "abelian_ideal"
    assert classify_nilradical(preset("abelian3").algebra).kind == "abelian_ideal"
    k = classify_nilradical(h3())
    assert k.kind == "heisenberg" and k.split is not None
    assert not check_split(h3(), k.split)
    bare_sl2 = LieAlgebra(QQ, ("h", "e", "f"), sl2().table, {"nilradical": []})
    assert classify_nilradical(bare_sl2).kind == "trivial"


def test_darboux_split_and_check():
    L = preset("sl2-semidirect-h3").algebra
    split = darboux_split(L, nilradical_of(L))
    assert check_split(L, split) == []
    assert len(split.x) == 1 and len(split.y) == 1
    # sabotage: swap z for a non-central vector
    bad = HeisenbergSplit(l_basis=split.l_basis, x=split.x, y=split.y, z=L.basis_vector(0))
    assert check_split(L, bad)


def test_check_split_catches_bad_pairing():
    N = h3()
    x, y, z = (N.basis_vector(i) for i in range(3))
    good = HeisenbergSplit(l_basis=Subspace(QQ, 3, [z]), x=(x,), y=(y,), z=z)
    assert check_split(N, good) == []
    flipped = HeisenbergSplit(l_basis=Subspace(QQ, 3, [z]), x=(y,), y=(x,), z=z)
    msgs = check_split(N, flipped)
    assert any("!= z" in m for m in msgs)


def test_ltilde():
    L = preset("sl2-semidirect-h3").algebra
    split = classify_nilradical(L).split
    lt = ltilde(L, split)
    assert lt.dim == 4
    assert lt.contains(split.z)
    for i in range(3):  # sl2 copy sits inside the stabilizer
        assert lt.contains(L.basis_vector(i))
