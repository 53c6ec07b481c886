import json
from fractions import Fraction

import pytest

import weylmod


def test_double_root_module():
    w = weylmod.weyl_module([(1, 2)])
    assert w.dim == 4
    assert w.character() == {2: 1, 0: 2, -2: 1}
    assert not w.is_irreducible()
    assert w.quotient_dim() == 3
    assert w.roots == [(Fraction(1), 2)]


def test_fraction_roots_and_relations():
    w = weylmod.weyl_module([(Fraction(1, 2), 1), ("-2", 2)])
    assert w.dim == 8
    assert all(ok for _, ok, _ in w.verify_relations())
    assert all(ok for _, ok, _ in w.bracket_fidelity())


def test_mode_matrices():
    w = weylmod.weyl_module([(2, 1)])
    # evaluation module at a = 2: h_k acts as diag(2^k, -2^k)
    h3 = w.mode("h", 3)
    assert h3[0][0] == 8 and h3[1][1] == -8
    with pytest.raises(ValueError):
        w.mode("y", 0)


def test_tensor_closure():
    a, b = weylmod.weyl_module([(1, 1)]), weylmod.weyl_module([(2, 1)])
    assert weylmod.tensor(a, b).closure_dim() == 4
    with pytest.raises(ValueError):
        weylmod.tensor(a, a)
    assert weylmod.tensor(a, a, allow_non_coprime=True).closure_dim() == 3


def test_graded_quotient():
    q = weylmod.graded_quotient(3)
    assert q["by_degree"] == [1, 3, 3, 1]
    assert q["total"] == 8 and q["ok"]
    assert weylmod.chain_check(3)
    assert weylmod.binomial_matrix_det(4, 2) == 10


def test_garland():
    assert weylmod.garland_check(1, 1, "i")["equal"]
    assert weylmod.garland_check(2, 3, "ii")["equal"]


def test_root_layer():
    assert "E8" in weylmod.shipped_cartan_types()
    assert weylmod.pi_beta("A2", ["1 - u", "1 - 2u"], [1, 1]) == "1 - 3u + 2u^2"
    assert weylmod.divisibility_check("D4", ["1 - u", "1 + u", "1 - 2u", "1"])
    assert not weylmod.irreducibility_predicate("A2", ["1 - u", "1 - u"])


def test_factor_and_parse_error():
    assert weylmod.factor("1 - 3u + 2u^2") == [(Fraction(1), 1), (Fraction(2), 1)]
    with pytest.raises(ValueError, match="position"):
        weylmod.factor("1 - 3u +")


def test_cli_roundtrip():
    code, out, _ = weylmod.run_cli(["ideal", "hilbert", "--m", "1"])
    assert code == 0
    report = json.loads(out)
    assert report["results"]["by_degree"] == [1, 1]
    assert report["results"]["total"] == 2
    code, _, err = weylmod.run_cli(["weyl", "construct", "--poly", "1 - u +"])
    assert code == 1 and "position" in err
