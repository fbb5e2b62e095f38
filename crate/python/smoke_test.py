"""Smoke test for the pygga extension module.

Build and install it first:
    pip install --no-build-isolation ./crates/py
"""

import json
from fractions import Fraction

import pygga


def main() -> None:
    d4 = pygga.Algebra.catalog("d4", "full")
    assert d4.dim == 32 and d4.coeff_dim == 4 and d4.mask == list(range(8))
    assert d4.is_lie() and d4.oracle_match()
    assert d4.center_dim() == 4
    assert d4.killing_radical_dim() == 4

    g2 = pygga.Algebra.catalog("g2", mask="gx")
    assert g2.dim == 14 and g2.center_dim() == 0
    assert g2.derived_series()[:2] == [14, 14]

    labels = g2.basis_labels()
    x = [0] * g2.dim
    y = [0] * g2.dim
    x[0] = 1
    y[2] = Fraction(1, 2)
    z = g2.bracket(x, y)
    assert all(isinstance(c, Fraction) for c in z)
    assert g2.bracket(y, x) == [-c for c in z]

    again = pygga.Algebra.from_json(g2.to_json())
    assert again.fingerprint() == g2.fingerprint()
    assert json.loads(g2.to_json())["d"] == 2

    abelian = g2.contract("T1")
    assert abelian.fingerprint()["abelian"] and abelian.dim == 14
    assert d4.contract("T24").fingerprint() == d4.fingerprint()
    assert pygga.verify_map("beta:2,3") and pygga.verify_map("T8")
    try:
        d4.contract("eta:0")
    except ValueError:
        pass
    else:
        raise AssertionError("eta:0 accepted")

    assert pygga.nice_set_count() == 779
    orbits = pygga.nice_set_orbits()
    assert len(orbits) == 24 and sum(size for _, size in orbits) == 779
    catalog = pygga.catalog_nice_sets()
    assert len(catalog) == 24 and all(pygga.is_nice(t) for t in catalog)

    for which, dim in [("rho1", 8), ("rho2", 8), ("rho3", 8), ("b3", 7), ("g2", 7)]:
        assert pygga.check_representation(which) == (True, True, dim), which
    assert pygga.intertwiner_dim("rho1", "rho2") == 0
    assert pygga.intertwiner_dim("rho1", "rho1") == 1
    assert pygga.triality_fixed_dim() == 14
    assert pygga.gln_deviation(3) < 1e-9

    print(f"{labels[0]} ... {labels[-1]}: {g2!r}")
    print("pygga smoke test passed")


if __name__ == "__main__":
    main()
