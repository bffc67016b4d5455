import pytest
from hypothesis import given, settings, strategies as st

from steiner_lab import (
    AdcMorphism,
    Chain,
    DirComplex,
    atom_tableau,
    c_delta,
    check_morphism,
    identity_morphism,
    is_loopfree,
    is_unitary,
    pos_neg_decompose,
    strong_loopfree_order,
    strong_preorder_is_total,
    tensor_complex,
    validate_complex,
)


def chain(degree, items):
    return Chain.make(degree, items)


# -- chains ----------------------------------------------------------------

def test_canonical_form_drops_zeros_and_sorts():
    c = chain(1, {"b": 2, "a": 1, "c": 0})
    assert c.coeffs == (("a", 1), ("b", 2))
    assert (c - c).is_zero


def test_pos_neg_examples():
    x = chain(1, {"1,2": 1, "0,2": -1, "0,1": 1})
    pos, neg = pos_neg_decompose(x)
    assert pos == chain(1, {"1,2": 1, "0,1": 1})
    assert neg == chain(1, {"0,2": 1})
    assert pos_neg_decompose(Chain.zero(3)) == (Chain.zero(3), Chain.zero(3))
    triple = chain(1, {"0,1": 3})
    assert pos_neg_decompose(triple) == (triple, Chain.zero(1))


tokens = st.sampled_from(["a", "b", "c", "d", "e"])
chains = st.dictionaries(tokens, st.integers(-9, 9), max_size=5).map(
    lambda d: Chain.make(0, d)
)


@given(chains)
def test_pos_neg_recombines_with_disjoint_support(x):
    pos, neg = pos_neg_decompose(x)
    assert pos - neg == x
    assert pos.is_positive and neg.is_positive
    assert not set(pos.support()) & set(neg.support())


@given(chains, chains)
def test_chain_arithmetic_is_abelian(x, y):
    assert x + y == y + x
    assert (x + y) - y == x
    assert 2 * x == x + x


# -- complexes ---------------------------------------------------------------

def test_validate_triangle_chains():
    assert validate_complex(c_delta(2)).ok


def test_validate_trivial_complex():
    K = DirComplex([["v"]], {}, {"v": 1})
    assert validate_complex(K).ok


def corrupted_triangle():
    K = c_delta(2)
    diff = {t: K.diff_of(t) for p in K.degrees() if p > 0 for t in K.tokens(p)}
    diff["0,1,2"] = chain(1, {"1,2": 1, "0,2": 1, "0,1": 1})
    return DirComplex(K.basis, diff, {t: 1 for t in K.tokens(0)})


def test_validate_flags_corrupted_differential():
    report = validate_complex(corrupted_triangle())
    assert not report.ok
    assert len(report.problems) == 1
    assert "0,1,2" in report.problems[0]


def test_constructor_rejects_malformed_tables():
    with pytest.raises(ValueError):
        DirComplex([["v", "v"]], {}, {})
    with pytest.raises(ValueError):
        DirComplex([["v"], ["e"]], {"e": chain(1, {"e": 1})}, {"v": 1})
    with pytest.raises(ValueError):
        DirComplex([["v"]], {}, {"w": 1})


# -- morphisms ---------------------------------------------------------------

def test_degeneracy_collapse_is_valid():
    K1, K0 = c_delta(1), c_delta(0)
    f = AdcMorphism(
        K1, K0, {"0": chain(0, {"0": 1}), "1": chain(0, {"0": 1}), "0,1": Chain.zero(1)}
    )
    assert check_morphism(f).ok


def test_negative_image_is_flagged():
    K = c_delta(1)
    f = AdcMorphism(
        K,
        K,
        {"0": chain(0, {"0": 1}), "1": chain(0, {"1": 1}), "0,1": chain(1, {"0,1": -1})},
    )
    report = check_morphism(f)
    assert any("not positive" in p for p in report.problems)


def test_broken_d_compatibility_is_flagged():
    K = c_delta(1)
    f = AdcMorphism(
        K,
        K,
        {"0": chain(0, {"0": 1}), "1": chain(0, {"0": 1}), "0,1": chain(1, {"0,1": 1})},
    )
    report = check_morphism(f)
    assert any("d-compatibility" in p for p in report.problems)


@pytest.mark.parametrize(
    "K",
    [c_delta(0), c_delta(2), tensor_complex(c_delta(1), c_delta(1))],
    ids=["point", "triangle", "square"],
)
def test_identity_passes_check(K):
    assert check_morphism(identity_morphism(K)).ok


def test_morphism_shape_errors():
    K1, K0 = c_delta(1), c_delta(0)
    with pytest.raises(ValueError):
        AdcMorphism(K1, K0, {"0": chain(0, {"0": 1}), "1": chain(0, {"0": 1})})
    with pytest.raises(ValueError):
        AdcMorphism(
            K1,
            K0,
            {
                "0": chain(0, {"0": 1}),
                "1": chain(0, {"0": 1}),
                "0,1": chain(0, {"0": 1}),
            },
        )


# -- atoms -------------------------------------------------------------------

def test_atom_of_the_triangle():
    atom = atom_tableau(c_delta(2), "0,1,2")
    assert atom.is_cell
    x0 = tuple(r[0] for r in atom.rows)
    x1 = tuple(r[1] for r in atom.rows)
    assert x0 == (chain(0, {"0": 1}), chain(1, {"0,2": 1}), chain(2, {"0,1,2": 1}))
    assert x1 == (
        chain(0, {"2": 1}),
        chain(1, {"0,1": 1, "1,2": 1}),
        chain(2, {"0,1,2": 1}),
    )


def test_atom_of_a_vertex():
    K = DirComplex([["v"]], {}, {"v": 1})
    atom = atom_tableau(K, "v")
    assert atom.is_cell and len(atom.rows) == 1


def test_atom_with_augmentation_two_is_not_a_cell():
    K = DirComplex(
        [["v1", "v2", "w"], ["g"]],
        {"g": chain(0, {"v1": 1, "v2": 1, "w": -1})},
        {"v1": 1, "v2": 1, "w": 1},
    )
    atom = atom_tableau(K, "g")
    assert atom.rows[0][0] == chain(0, {"w": 1})
    assert atom.rows[0][1] == chain(0, {"v1": 1, "v2": 1})
    assert not atom.is_cell


@given(st.integers(0, 4), st.data())
@settings(max_examples=40, deadline=None)
def test_atom_rows_satisfy_the_boundary_identity(n, data):
    K = c_delta(n)
    degree = data.draw(st.integers(0, n))
    token = data.draw(st.sampled_from(list(K.tokens(degree))))
    atom = atom_tableau(K, token)
    for k in range(1, degree + 1):
        for entry in atom.rows[k]:
            assert K.d(entry) == atom.rows[k - 1][1] - atom.rows[k - 1][0]


# -- basis predicates ---------------------------------------------------------

@pytest.mark.parametrize("n", range(5))
def test_simplex_chains_are_strong_steiner(n):
    K = c_delta(n)
    assert is_unitary(K)
    assert is_loopfree(K)
    assert strong_loopfree_order(K) is not None
    assert strong_preorder_is_total(K)


def test_square_precedence_order_is_total():
    # the generator order of the square snakes through all nine generators
    K = tensor_complex(c_delta(1), c_delta(1))
    assert strong_loopfree_order(K) is not None
    assert strong_preorder_is_total(K)


def test_disconnected_vertices_give_nontotal_order():
    K = DirComplex([["a", "b"]], {}, {"a": 1, "b": 1})
    assert strong_loopfree_order(K) is not None
    assert not strong_preorder_is_total(K)


def two_loop_complex():
    return DirComplex(
        [["a", "b"], ["g1", "g2"]],
        {"g1": chain(0, {"b": 1, "a": -1}), "g2": chain(0, {"a": 1, "b": -1})},
        {"a": 1, "b": 1},
    )


def test_two_cycle_is_not_strongly_loopfree():
    K = two_loop_complex()
    assert strong_loopfree_order(K) is None


def test_non_unitary_counterexample():
    K = DirComplex(
        [["v", "w"], ["g"]],
        {"g": chain(0, {"w": 2, "v": -2})},
        {"v": 1, "w": 1},
    )
    assert validate_complex(K).ok
    assert not is_unitary(K)


@pytest.mark.parametrize(
    "K",
    [c_delta(3), tensor_complex(c_delta(1), c_delta(2)), two_loop_complex()],
    ids=["tetrahedron", "prism", "two-loop"],
)
def test_strong_order_implies_loopfree(K):
    if strong_loopfree_order(K) is not None:
        assert is_loopfree(K)


def test_strong_order_is_a_linear_extension():
    K = c_delta(2)
    order = [el.token for el in strong_loopfree_order(K)]
    position = {t: i for i, t in enumerate(order)}
    for p in K.degrees():
        if p == 0:
            continue
        for t in K.tokens(p):
            plus, minus = pos_neg_decompose(K.diff_of(t))
            for s in minus.support():
                assert position[s] < position[t]
            for s in plus.support():
                assert position[t] < position[s]
