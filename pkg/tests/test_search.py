from __future__ import annotations

import json

import pytest

from singram.canon import is_isomorphic
from singram.patterns import parse_pattern as P
from singram.search import (
    BudgetExceeded,
    ClassProfile,
    NoneExists,
    SearchConfig,
    Witness,
    certify_rs,
    class_profiles,
    csp_search,
    exhaustive_no_sr,
    lower_witness,
    max_classes_bound,
    quadratic_upper_bound,
    substitution_search,
    verify_certificate,
)
from singram.singular import is_sr_graph


@pytest.mark.parametrize("k", [1, 2, 3])
def test_quadratic_bound_p3(k):
    assert quadratic_upper_bound(P("P3"), P("P3"), k) == 4 * k + 1


def test_quadratic_bound_examples():
    assert quadratic_upper_bound(P("K3"), P("K3")) == 26
    assert quadratic_upper_bound(P("P4"), P("P4")) == 17


def test_max_classes_bound():
    assert max_classes_bound(22, 9) == 4
    assert max_classes_bound(25, 12) == 1
    assert all(max_classes_bound(n, 0) == n for n in range(1, 30))
    with pytest.raises(ValueError):
        max_classes_bound(10, 5)
    with pytest.raises(ValueError):
        max_classes_bound(10, -1)


def test_class_profiles_k3():
    k3 = P("K3")
    assert [str(p) for p in class_profiles(22, k3, k3)] == ["5+5+5+5+2", "5+5+5+4+3", "5+5+4+4+4"]
    assert [str(p) for p in class_profiles(25, k3, k3)] == ["5+5+5+5+5"]
    assert class_profiles(26, k3, k3) == []


def test_class_profiles_invariants():
    k3 = P("K3")
    for n in range(1, 26):
        profs = class_profiles(n, k3, k3)
        assert profs == sorted(profs, key=lambda p: p.sizes, reverse=True)
        for p in profs:
            assert p.n == n and p.classes <= 5 and max(p.sizes) <= 5


def test_class_profile_validation():
    with pytest.raises(ValueError):
        ClassProfile((2, 3), 5, 5)
    with pytest.raises(ValueError):
        ClassProfile((6,), 5, 5)


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(node_budget=0)
    with pytest.raises(ValueError):
        SearchConfig(time_budget=-1)
    with pytest.raises(ValueError):
        SearchConfig(jobs=0)


@pytest.mark.parametrize("pattern", ["P4", "2K2"])
def test_substitution_p4(pattern):
    f = P(pattern)
    for n in range(13, 17):
        res = substitution_search(n, f, f)
        assert res.witness is None and res.covered


def test_substitution_k3():
    k3 = P("K3")
    for n in range(22, 26):
        res = substitution_search(n, k3, k3)
        assert res.witness is None and res.covered
    res = substitution_search(21, k3, k3)
    assert res.witness is not None and is_sr_graph(res.witness, k3, k3)


def test_substitution_paw():
    paw = P("PAW")
    for n in range(31, 37):
        res = substitution_search(n, paw, paw)
        assert res.witness is None and res.covered


def test_substitution_reports_unstable_hosts():
    res = substitution_search(29, P("K3"), P("K13"))
    assert res.witness is None and not res.covered
    assert len(res.uncovered) == 1 and is_isomorphic(res.uncovered[0][1], P("K23"))
    assert [str(prof) for prof, _ in res.uncovered] == ["6+6+6+6+5"]


def test_exhaustive_no_sr():
    p3 = P("P3")
    assert exhaustive_no_sr(5, p3, p3, 1)
    assert not exhaustive_no_sr(4, p3, p3, 1)
    assert exhaustive_no_sr(9, p3, p3, 2)


def test_csp_k3_first_proof_profile():
    k3 = P("K3")
    prof = ClassProfile((5, 5, 5, 5, 2), 5, 5)
    assert isinstance(csp_search(prof, k3, k3), NoneExists)


def test_csp_k3k1_profile():
    f = P("K3+K1")
    prof = ClassProfile((5, 5, 5, 4, 3), 5, 5)
    assert isinstance(csp_search(prof, f, f), NoneExists)


def test_csp_finds_known_witnesses():
    p3 = P("P3")
    found = [csp_search(p, p3, p3) for p in class_profiles(4, p3, p3)]
    assert any(isinstance(r, Witness) for r in found)
    for r in found:
        if isinstance(r, Witness):
            assert is_sr_graph(r.graph, p3, p3)
    k3, k13 = P("K3"), P("K13")
    r = csp_search(ClassProfile((6, 6, 6, 5, 5), 6, 6), k3, k13)
    assert isinstance(r, Witness) and is_sr_graph(r.graph, k3, k13)


def test_csp_budget():
    k3 = P("K3")
    prof = ClassProfile((5, 5, 5, 5, 2), 5, 5)
    r = csp_search(prof, k3, k3, cfg=SearchConfig(node_budget=10))
    assert isinstance(r, BudgetExceeded)


@pytest.mark.parametrize(
    "f1,f2,k",
    [("P3", "P3", 1), ("P3", "P3", 2), ("3K1", "3K1", 1), ("K2+K1", "K2+K1", 1), ("K2+K1", "K2+K1", 2), ("P3", "K2+K1", 1)],
)
def test_csp_agrees_with_exhaustion(f1, f2, k):
    a, b = P(f1), P(f2)
    for n in range(2, 9):
        csp_found = any(isinstance(csp_search(p, a, b, k), Witness) for p in class_profiles(n, a, b, k))
        assert csp_found == (not exhaustive_no_sr(n, a, b, k)), n


def test_lower_witness():
    name, g = lower_witness(P("K3"), P("K3"))
    assert name == "k3-21" and g.n == 21
    name, g = lower_witness(P("K13"), P("K3"))
    assert name == "k3claw28" and g.n == 28
    name, g = lower_witness(P("P3"), P("P3"), 3)
    assert name == "hk" and g.n == 12


@pytest.mark.parametrize(
    "f1,f2,k,value,methods",
    [
        ("P3", "P3", 1, 5, {5: "exhaustive"}),
        ("3K1", "3K1", 1, 5, {5: "exhaustive"}),
        ("P4", "P4", 1, 13, {13: "substitution", 14: "substitution", 15: "substitution", 16: "substitution", 17: "profile-infeasible"}),
        ("K3", "K3", 1, 22, {22: "substitution", 23: "substitution", 24: "substitution", 25: "substitution", 26: "profile-infeasible"}),
    ],
)
def test_certify(f1, f2, k, value, methods):
    cert = certify_rs(P(f1), P(f2), k)
    assert cert.complete and cert.value == value and cert.methods() == methods
    assert verify_certificate(cert, P(f1), P(f2))


def test_certify_paw():
    paw = P("PAW")
    cert = certify_rs(paw, paw)
    assert cert.complete and cert.value == 31
    m = cert.methods()
    assert all(m[n] == "substitution" for n in range(31, 37)) and m[37] == "profile-infeasible"


def test_certify_k3_claw():
    cert = certify_rs(P("K3"), P("K13"))
    assert cert.value == 29 and cert.complete
    m = cert.methods()
    assert m[29] == m[30] == "csp"
    assert all(m[n] == "substitution" for n in range(31, 37)) and m[37] == "profile-infeasible"


def test_certificate_json_is_deterministic():
    p3 = P("P3")
    a = certify_rs(p3, p3, 2, names=("P3", "P3")).to_json(timing=False)
    b = certify_rs(p3, p3, 2, names=("P3", "P3")).to_json(timing=False)
    assert a == b
    d = json.loads(a)
    assert list(d)[:9] == ["claim", "patterns", "k", "value", "upperBound", "witnesses", "construction", "sweep", "complete"]
    assert d["value"] == 9 and d["complete"] and d["sweep"][0]["millis"] == 0


def test_budget_forces_incomplete():
    k3, k13 = P("K3"), P("K13")
    cert = certify_rs(k3, k13, cfg=SearchConfig(node_budget=50))
    assert not cert.complete and cert.claim == "Rs lower" and cert.value == 29
    assert any(r.outcome == "budget" for r in cert.sweep)
    assert verify_certificate(cert, k3, k13)


def test_verify_rejects_tampering():
    p3 = P("P3")
    cert = certify_rs(p3, p3)
    cert.witnesses = [P("K4").to_graph6()]
    assert not verify_certificate(cert, p3, p3)
