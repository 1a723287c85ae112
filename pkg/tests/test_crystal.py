import pytest
from hypothesis import given, strategies as st

from kostka.crystal import CrystalSpec, Path, RectTableau, enumerate_crystal
from kostka.paths import enumerate_all_paths

from oracles import naive_residue, recursive_e, recursive_eps, recursive_f, recursive_phi

# small tensor products used for exhaustive cross-checks
FAMILIES = [
    CrystalSpec(2, ((1, 1), (1, 1), (1, 1))),
    CrystalSpec(3, ((1, 1), (2, 1))),
    CrystalSpec(3, ((1, 2), (2, 1))),
    CrystalSpec(3, ((2, 1), (1, 1), (1, 2))),
    CrystalSpec(4, ((2, 2), (2, 1))),
    CrystalSpec(4, ((3, 1), (1, 1))),
]


def family_paths():
    for spec in FAMILIES:
        for p in enumerate_all_paths(spec):
            yield spec, p


def test_tableau_validation():
    RectTableau(((1, 2), (2, 3)), 3)
    with pytest.raises(ValueError):
        RectTableau(((2, 1),), 3)            # row decreases
    with pytest.raises(ValueError):
        RectTableau(((1, 2), (1, 3)), 3)     # column repeats
    with pytest.raises(ValueError):
        RectTableau(((1,), (2, 3)), 3)       # ragged
    with pytest.raises(ValueError):
        RectTableau(((4,),), 3)              # letter too big
    with pytest.raises(ValueError):
        RectTableau((), 3)


def test_spec_validation():
    with pytest.raises(ValueError):
        CrystalSpec(1, ())
    with pytest.raises(ValueError):
        CrystalSpec(4, ((4, 1),))            # height must stay below n
    with pytest.raises(ValueError):
        CrystalSpec(3, ((1, 0),))
    assert CrystalSpec(3, ()).total_boxes() == 0
    assert CrystalSpec(4, ((2, 2), (2, 1))).total_boxes() == 6


def test_path_shape_mismatch():
    spec = CrystalSpec(3, ((2, 1),))
    with pytest.raises(ValueError):
        Path(spec, (RectTableau(((1, 2),), 3),))


def test_word_and_weight():
    t = RectTableau(((1, 2), (2, 3)), 5)
    assert t.word() == (2, 3, 1, 2)
    assert t.weight() == (1, 2, 1, 0, 0)
    t2 = RectTableau(((2, 3), (3, 4), (4, 5)), 5)
    p = Path(CrystalSpec(5, ((2, 2), (3, 2))), (t, t2))
    assert p.word() == t.word() + t2.word()
    assert ''.join(map(str, p.word())) == '2312453423'
    assert p.weight() == (1, 3, 3, 2, 1)


def test_lowering_golden():
    spec = CrystalSpec(5, ((2, 2), (3, 2)))
    p = Path(spec, (RectTableau(((1, 2), (2, 3)), 5),
                    RectTableau(((2, 3), (3, 4), (4, 5)), 5)))
    lowered = p.f(2)
    assert lowered.tableaux[0].rows == ((1, 2), (3, 3))
    assert lowered.tableaux[1] == p.tableaux[1]
    raised = p.e(2)
    assert raised.tableaux[0] == p.tableaux[0]
    assert raised.tableaux[1].rows == ((2, 2), (3, 4), (4, 5))
    assert p.phi(2) == 1 and p.epsilon(2) == 1


def test_operator_index_range():
    p = Path(CrystalSpec(3, ((1, 1),)), (RectTableau(((1,),), 3),))
    with pytest.raises(ValueError):
        p.f(0)
    with pytest.raises(ValueError):
        p.f(3)


def test_enumeration_counts():
    assert len(enumerate_crystal(1, 1, 4)) == 4
    assert len(enumerate_crystal(1, 2, 2)) == 3
    assert len(enumerate_crystal(2, 1, 3)) == 3
    assert len(enumerate_crystal(3, 1, 3)) == 1
    assert len(enumerate_crystal(2, 2, 4)) == 20
    with pytest.raises(ValueError):
        enumerate_crystal(4, 1, 3)
    with pytest.raises(ValueError):
        enumerate_crystal(1, 0, 3)


def test_enumeration_is_deduplicated():
    tabs = enumerate_crystal(2, 2, 3)
    assert len(set(tabs)) == len(tabs)


def test_bracketing_matches_repeated_cancellation():
    from kostka.crystal import _bracket

    for spec, p in family_paths():
        for i in range(1, spec.n):
            assert tuple(naive_residue(p.word(), i)) == tuple(_bracket(p, i))


def test_operators_match_tensor_recursion():
    for spec, p in family_paths():
        for i in range(1, spec.n):
            assert p.f(i) == recursive_f(p, i)
            assert p.e(i) == recursive_e(p, i)
            assert p.phi(i) == recursive_phi(p, i)
            assert p.epsilon(i) == recursive_eps(p, i)


def test_operators_invert_each_other():
    for spec, p in family_paths():
        for i in range(1, spec.n):
            lowered = p.f(i)
            if lowered is not None:
                assert lowered.e(i) == p
            raised = p.e(i)
            if raised is not None:
                assert raised.f(i) == p


def test_lowering_shifts_weight():
    for spec, p in family_paths():
        for i in range(1, spec.n):
            lowered = p.f(i)
            if lowered is None:
                continue
            w, w2 = p.weight(), lowered.weight()
            moved = [w2[k] - w[k] for k in range(spec.n)]
            assert moved[i - 1] == -1 and moved[i] == 1
            assert all(d == 0 for k, d in enumerate(moved) if k not in (i - 1, i))


def test_phi_counts_applications():
    for spec, p in family_paths():
        for i in range(1, spec.n):
            count = 0
            cur = p.f(i)
            while cur is not None:
                count += 1
                cur = cur.f(i)
            assert count == p.phi(i)


def test_json_roundtrip():
    for spec, p in list(family_paths())[:40]:
        assert Path.from_json(p.to_json()) == p
    spec = CrystalSpec(4, ((2, 2), (2, 1)))
    assert CrystalSpec.from_json(spec.to_json()) == spec


def test_str_forms():
    p = Path(CrystalSpec(4, ((2, 2), (2, 1))),
             (RectTableau(((1, 1), (2, 2)), 4), RectTableau(((3,), (4,)), 4)))
    assert str(p) == '11/22 (x) 3/4'
    assert str(Path(CrystalSpec(3, ()), ())) == '(empty)'


@given(st.sampled_from(enumerate_crystal(2, 2, 4)), st.integers(1, 3))
def test_single_factor_residue_agrees(t, i):
    p = Path(CrystalSpec(4, ((2, 2),)), (t,))
    lo, hi = naive_residue(p.word(), i)
    assert p.phi(i) == len(lo)
    assert p.epsilon(i) == len(hi)
