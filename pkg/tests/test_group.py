import json
import random

import pytest

from relequiv.cyclotomic import Cyclotomic, root_of_unity
from relequiv.errors import GroupError
from relequiv.group import close_group
from relequiv.matrix import identity, matrix_key

from conftest import group_path, load_group

w = root_of_unity(1, 3)

ALL_GROUPS = ["z3xz3.json", "z3xz3_eta_rho.json", "s3_sign.json", "s3_perm.json",
              "d4_reflection.json", "z8_index4.json", "z4_line.json"]


def test_example_group(example):
    assert example.order == 9
    assert len(example.kernel) == 3
    d = example.delta
    # delta = (1, e^{2 pi i/3}): fixes z1, multiplies z2 by w
    assert [d.rho[i][i] for i in range(4)] == [1, 1, w, w.conj()]
    assert [d.eta[i][i] for i in range(2)] == [1, w]
    assert d.sigma == 1


def test_trivial_group():
    G = close_group([([[1]], None, 0)], 1)
    assert G.order == 1 and G.m == 1
    assert G.delta is G.identity


def test_cyclic_order_four():
    G = close_group([([[root_of_unity(1, 4)]], None, 1)], 4)
    assert G.order == 4
    assert len(G.kernel) == 1


def test_closure_errors():
    with pytest.raises(GroupError, match="not finite"):
        close_group([([[2]], None, 0)], 1, max_order=50)
    with pytest.raises(GroupError, match="sigma ill-defined"):
        # -1 has order 2 but sigma = 1 in Z_3
        close_group([([[-1]], None, 1)], 3)
    with pytest.raises(GroupError, match="epimorphism"):
        close_group([([[-1]], None, 0)], 2)
    with pytest.raises(GroupError, match="at least one generator"):
        close_group([], 1)


def test_inverse(example):
    assert example.inverse(example.identity) is example.identity
    assert example.inverse(example.delta).sigma == 2
    for g in example:
        assert example.mul(g, example.inverse(g)) is example.identity


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_group_laws(name):
    G, _ = load_group(name)
    for a in G:
        for b in G:
            ab = G.mul(a, b)
            assert ab.sigma == (a.sigma + b.sigma) % G.m
    sizes = [sum(1 for g in G if g.sigma == j) for j in range(G.m)]
    assert sizes == [len(G.kernel)] * G.m
    assert G.order == G.m * len(G.kernel)
    reps = G.coset_representatives()
    assert [r.sigma for r in reps] == list(range(G.m))
    assert G.mul(reps[-1], G.delta).sigma == 0  # delta^m in K


def test_characters(example):
    d = example.delta
    assert example.character(d, "target") == 1 + w
    assert example.character(example.identity, "source") == 4
    for g in example:
        assert example.character(example.inverse(g)) == example.character(g).conj()


def test_coset_representatives_m1():
    G = close_group([([[-1]], None, 0)], 1)
    assert G.coset_representatives() == [G.identity]


def test_shuffled_generators_same_group():
    spec = json.loads(group_path("s3_perm.json").read_text())
    from relequiv.spec_io import parse_spec, build_group

    G1 = build_group(parse_spec(json.dumps(spec)))
    rng = random.Random(3)
    order = list(range(len(spec["rho_generators"])))
    rng.shuffle(order)
    order.reverse()
    spec["rho_generators"] = [spec["rho_generators"][i] for i in order]
    spec["sigma_values"] = [spec["sigma_values"][i] for i in order]
    G2 = build_group(parse_spec(json.dumps(spec)))
    keys = lambda G: {(matrix_key(g.rho), g.sigma) for g in G}
    assert keys(G1) == keys(G2)

    from relequiv.molien import molien_series

    for j in range(2):
        for kind in ("invariant", "equivariant"):
            assert molien_series(G1, j, kind, 6) == molien_series(G2, j, kind, 6)


def test_find(example):
    g = example.elements[5]
    assert example.find(g.rho, g.eta) is g
    assert example.find(identity(4), identity(2)) is example.identity
