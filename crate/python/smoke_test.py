"""Smoke test for the installed `weakc` extension module.

Build and install first, e.g. `maturin build --release -m crates/python/Cargo.toml`
followed by `pip install target/wheels/weakc-*.whl`, then run this file.
"""

import weakc

HEIS = """field GF(3)
basis x y z
[x, y] = z
subspace X = span(x)
subspace Z = span(z)
"""


def main():
    assert weakc.check(HEIS, "ideal", "Z")["verdict"] == "yes"
    assert weakc.check(HEIS, "ideal", "X")["verdict"] == "no"

    weak = weakc.check(HEIS, "weak-c-ideal", "X")
    assert weak["verdict"] == "yes" and weak["mode"] == "search"

    assert weakc.check(HEIS, "nilpotent")["verdict"] == "yes"
    assert weakc.series(HEIS, "lower-central")["dims"] == [3, 1, 0]

    sl2 = weakc.preset("sl2", 5)
    assert weakc.check(sl2, "simple")["verdict"] == "yes"

    q = weakc.preset("sl2") + "subspace H = span(h)\n"
    out = weakc.check(q, "weak-c-ideal", "H")
    assert out["verdict"] == "unsupported" and out["exit_code"] == 3

    try:
        weakc.check(HEIS, "ideal", "missing")
    except ValueError as e:
        assert "missing" in str(e)
    else:
        raise AssertionError("expected ValueError")

    assert weakc.normalize(weakc.normalize(HEIS)) == weakc.normalize(HEIS)
    print("smoke test passed")


if __name__ == "__main__":
    main()
