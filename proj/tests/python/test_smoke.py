import json

import pytest

import lcep


def two_cycles(length):
    edges = [(i, (i + 1) % length) for i in range(length)]
    edges += [(length + i, length + (i + 1) % length) for i in range(length)]
    return lcep.from_edges(2 * length, edges)


def test_graph_round_trip():
    g = lcep.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert (g.n, g.m) == (3, 3)
    assert g.edges() == [(0, 1), (1, 2), (2, 0)]
    h = lcep.MultiGraph.from_text(g.to_text())
    assert h.edges() == g.edges()


def test_solve_packing_and_verify():
    g = two_cycles(5)
    cert = lcep.solve(g, 2, 5)
    assert cert.type == "packing"
    assert len(cert.cycles) == 2
    assert lcep.verify(g, cert) == (True, "ok")
    data = json.loads(cert.to_json())
    assert list(data) == ["type", "k", "ell", "cycles", "f_bound", "stats"]


def test_solve_hitting_set():
    g = lcep.make_sun(8)
    cert = lcep.solve(g, 2, 8)
    assert not cert.is_packing
    assert len(cert.edges) <= lcep.f_bound(2, 8) == 920
    valid, _ = lcep.verify(g, cert)
    assert valid


def test_certificate_json_round_trip():
    g = two_cycles(4)
    cert = lcep.solve(g, 2, 4)
    back = lcep.Certificate.from_json(cert.to_json())
    assert back.cycles == cert.cycles
    with pytest.raises(lcep.InputError):
        lcep.Certificate.from_json("{")


def test_cycle_queries_and_oracles():
    g = lcep.make_sun(8)
    assert len(lcep.find_long_cycle(g, 8)) >= 8
    assert lcep.find_long_cycle(lcep.from_edges(3, [(0, 1), (1, 2)]), 2) is None
    assert len(lcep.shortest_cycle(g)) == 3
    assert lcep.oracle_max_packing(g, 8) == 1
    assert lcep.sun_order(17) == 10
    witness = lcep.sun_witness_after_deletion(30, [0])
    assert 0 not in witness and len(witness) >= 30


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        lcep.solve(two_cycles(5), 0, 5)
    with pytest.raises(lcep.BudgetExceeded):
        lcep.solve(lcep.make_sun(17), 2, 17, budget_nodes=1)


def test_random_graph_is_seeded():
    a = lcep.random_connected_graph(9, 14, seed=3)
    b = lcep.random_connected_graph(9, 14, seed=3)
    assert a.edges() == b.edges()
    assert a.m == 14
