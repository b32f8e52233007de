"""Smoke test for the graph_spectrum extension module.

Build and install with `maturin develop` (or `pip install .`) from
crates/python, or put a built `graph_spectrum.so` on PYTHONPATH.
"""

import math
from fractions import Fraction

import graph_spectrum as gs


def main():
    c5 = gs.Graph.named("C5")
    assert c5.n == 5 and len(c5.edges()) == 5
    assert c5.graph6() == "Dhc"
    assert gs.Graph.from_graph6("Dhc") == c5
    assert gs.Graph(5, [(i, (i + 1) % 5) for i in range(5)]) == c5

    assert gs.independence_number(c5) == 2
    assert gs.independence_number(c5 * c5) == 5
    assert gs.clique_cover_number(c5) == 3
    assert abs(gs.lovasz_theta(c5) - math.sqrt(5)) < 1e-4
    assert gs.fractional_clique_cover(c5) == Fraction(5, 2)

    rank, witness = gs.haemers_rank(c5, 2)
    assert rank == 3 and len(witness) == 5
    assert gs.fractional_haemers(gs.Graph.named("K3"), 2, 3) == (Fraction(1), 1)

    cap = gs.capacity_lower_bound(c5, 2)
    assert cap["alpha_of_power"] == 5 and len(cap["witness"]) == 5

    assert gs.cohom_leq(gs.Graph.named("K2bar"), gs.Graph.named("K3bar")) is True
    assert gs.cohom_leq(gs.Graph.named("K3bar"), gs.Graph.named("K2bar")) is False

    report = gs.audit_point("frac_clique_cover", seed=1, trials=5, max_n=4)
    assert report["violations"] == []

    s = gs.sandwich(c5)
    assert s["resolved"] is True

    try:
        gs.Graph.named("nope")
    except gs.SpectrumError:
        pass
    else:
        raise AssertionError("expected SpectrumError")
    try:
        gs.lovasz_theta(gs.Graph.named("C17"))
    except gs.LimitError:
        pass
    else:
        raise AssertionError("expected LimitError")

    print("graph_spectrum smoke test passed")


if __name__ == "__main__":
    main()
