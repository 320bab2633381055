import pytest

from relequiv.cyclotomic import root_of_unity
from relequiv.errors import ValidationError
from relequiv.generators import (
    ExponentPattern,
    GeneratorSet,
    davenport_check,
    exponent_patterns,
    general_form,
    invariant_ring_generators,
    k_equivariant_generators,
    k_invariant_basis,
    relative_equivariant_generators,
    relative_invariant_generators,
    run_pipeline,
    span_dims,
)
from relequiv.group import close_group
from relequiv.molien import EQUIVARIANT, INVARIANT, kernel_molien_series, molien_series
from relequiv.polynomial import Poly, PolyMap

from conftest import load_group

Z1, Z1B, Z2, Z2B = (Poly.variable(4, i) for i in range(4))
ZERO, ONE = Poly(4), Poly.constant(4)


def M(a, b):
    return PolyMap([a, b])


@pytest.fixture(scope="module")
def pipeline(example):
    return run_pipeline(example, with_ring=True)


def test_k_invariant_basis(pipeline):
    assert set(pipeline.u.values) == {Z1 * Z1B, Z1 ** 3, Z1B ** 3, Z2, Z2B}


def test_relative_invariants(pipeline):
    assert set(pipeline.relative[1].values) == {Z2, Z2B ** 2}
    assert set(pipeline.relative[2].values) == {Z2B, Z2 ** 2}


def test_ring_hilbert_basis(pipeline):
    assert set(pipeline.ring.values) == {Z1 * Z1B, Z1 ** 3, Z1B ** 3, Z2 * Z2B, Z2 ** 3, Z2B ** 3}


def test_module_basis(pipeline):
    assert set(pipeline.B.values) == {ONE, Z2, Z2B, Z2 ** 2, Z2B ** 2}
    assert pipeline.B.values[0] == ONE


def test_k_equivariant_generators(pipeline):
    assert set(pipeline.H.values) == {M(Z1, ZERO), M(Z1B ** 2, ZERO), M(ZERO, ONE)}


def test_relative_equivariants(pipeline):
    eq = pipeline.equivariant
    assert set(eq[0].values) == {M(Z1, ZERO), M(Z1B ** 2, ZERO), M(ZERO, Z2), M(ZERO, Z2B ** 2)}
    assert set(eq[1].values) == {
        M(Z1 * Z2, ZERO), M(Z1B ** 2 * Z2, ZERO), M(ZERO, Z2B), M(ZERO, Z2 ** 2),
        M(Z1 * Z2B ** 2, ZERO), M(Z1B ** 2 * Z2B ** 2, ZERO),
    }
    assert set(eq[2].values) == {
        M(ZERO, ONE), M(Z1 * Z2B, ZERO), M(Z1B ** 2 * Z2B, ZERO), M(Z1 * Z2 ** 2, ZERO),
        M(Z1B ** 2 * Z2 ** 2, ZERO),
    }
    assert [len(eq[j]) for j in range(3)] == [4, 6, 5]


def test_certified_dimensions(example, pipeline):
    for j, gs in pipeline.equivariant.items():
        top = gs.check_degree
        assert top >= 6
        assert span_dims(example, gs.values, top) == molien_series(example, j, EQUIVARIANT, top)
    for j, gs in pipeline.relative.items():
        assert span_dims(example, gs.values, 6) == molien_series(example, j, INVARIANT, 6)
    assert span_dims(example, pipeline.B.values, 6) == kernel_molien_series(example, INVARIANT, 6)


def test_davenport_check_example(example, pipeline):
    for j in (1, 2):
        assert davenport_check(example, j, pipeline.u, pipeline.relative[j]) == []


def test_davenport_check_detects_missing_generator(example, pipeline):
    gs = pipeline.relative[1]
    reduced = GeneratorSet(gs.kind, 1, [it for it in gs.items if it.value != Z2B ** 2])
    missing = davenport_check(example, 1, pipeline.u, reduced)
    assert any(h == Z2B ** 2 for _, h in missing)


def test_general_form(example, example_names, pipeline):
    eq = pipeline.equivariant
    g0 = general_form(example, 0, eq[0], example_names)
    assert g0 == "(f1(z)*z1 + f2(z)*z1b^2, f3(z)*z2 + f4(z)*z2b^2)"
    g2 = general_form(example, 2, eq[2], example_names, first_index=11)
    assert g2.endswith(", f15(z))")
    for i in range(11, 16):
        assert f"f{i}(z)" in g2
    empty = GeneratorSet("module-equivariant", 0, [])
    assert general_form(example, 0, empty, example_names) == "(0, 0)"


def test_general_form_latex(example, example_spec, pipeline):
    s = general_form(example, 2, pipeline.equivariant[2], example_spec.latex_variables, 11, latex=True)
    assert r"f_{15}(z)\right)" in s
    assert s.startswith(r"\left(")


def test_sign_action_on_plane():
    # Z2 acting by -I, m = 1: invariants are generated by the quadratics
    G = close_group([([[-1, 0], [0, -1]], None, 0)], 1)
    u = k_invariant_basis(G)
    x, y = Poly.variable(2, 0), Poly.variable(2, 1)
    assert set(u.values) == {x * x, x * y, y * y}


def test_trivial_kernel_gives_coordinates():
    # Z2 by -1 on the line graded by sigma = id: K trivial
    G = close_group([([[-1]], None, 1)], 2)
    u = k_invariant_basis(G)
    x = Poly.variable(1, 0)
    assert u.values == [x]
    rel = relative_invariant_generators(G, 1, u)
    assert rel.values == [x]
    ring = invariant_ring_generators(G, u)
    assert ring.values == [x * x]


def test_rotation_equivariants():
    # Z3 on (z, zb), eta = rho: z and zb^2 generate each component
    w = root_of_unity(1, 3)
    G = close_group([([[w, 0], [0, w ** 2]], None, 0)], 1)
    H = k_equivariant_generators(G)
    z, zb = Poly.variable(2, 0), Poly.variable(2, 1)
    zero = Poly(2)
    assert set(H.values) == {
        PolyMap([z, zero]), PolyMap([zb ** 2, zero]), PolyMap([zero, zb]), PolyMap([zero, z ** 2]),
    }


def test_degree_bound_insufficient(example):
    with pytest.raises(ValidationError, match="degree bound insufficient"):
        k_invariant_basis(example, degree_bound=2)
    with pytest.raises(ValidationError, match="degree bound insufficient"):
        k_equivariant_generators(example, degree_bound=1)


def test_exponent_patterns():
    keys = [(1, 3), (2, 4), (0, 0)]
    pats = exponent_patterns(3, keys, 1)
    labels = sorted(p.label() for p in pats)
    assert labels == ["R1(u4)", "R2(u5)*R2(u5)"]
    assert all(p.is_irreducible() and len(p.factors) <= 2 for p in pats)
    ring = exponent_patterns(3, keys, 0, 3)
    assert sorted(p.label() for p in ring) == [
        "R1(u4)*R1(u4)*R1(u4)", "R1(u4)*R2(u5)", "R2(u5)*R2(u5)*R2(u5)"]
    assert not ExponentPattern(((1, 0), (1, 0), (1, 0), (2, 1)), 3).is_irreducible()
    # m = 2: only single factors have odd weight and are irreducible
    assert [p.label() for p in exponent_patterns(2, [(1, 0), (1, 1)], 1)] == ["R1(u1)", "R1(u2)"]
    everything = exponent_patterns(2, [(1, 0)], 1, 2, irreducible=False)
    assert [p.label() for p in everything] == ["R1(u1)"]


def test_independent_of_delta():
    G, _ = load_group("z8_index4.json")
    other = next(g.index for g in G if g.sigma == 1 and g is not G.delta)
    r1 = run_pipeline(G)
    r2 = run_pipeline(G.with_delta(other))
    for j in range(G.m):
        assert (span_dims(G, r1.equivariant[j].values, 8)
                == span_dims(G, r2.equivariant[j].values, 8))
        if j:
            assert set(r1.relative[j].values) == set(r2.relative[j].values)


@pytest.mark.parametrize("name", ["s3_sign.json", "s3_perm.json", "d4_reflection.json",
                                  "z8_index4.json", "z4_line.json", "z3xz3_eta_rho.json"])
def test_pipeline_certifies(name):
    G, _ = load_group(name)
    res = run_pipeline(G, with_ring=True)
    for j, gs in res.relative.items():
        assert davenport_check(G, j, res.u, gs) == []
    assert res.ring.dims == molien_series(G, 0, INVARIANT, res.ring.check_degree)


def test_invalid_j(example, pipeline):
    with pytest.raises(ValueError):
        relative_invariant_generators(example, 0, pipeline.u)
    with pytest.raises(ValueError):
        relative_equivariant_generators(example, 3, pipeline.B, pipeline.H)
