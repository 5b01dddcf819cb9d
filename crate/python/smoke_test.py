"""Smoke test for the octarsk_py extension module.

Builds nothing itself: expects `cargo build -p octarsk-python --release`
(or a debug build) to have produced the cdylib already.  Copies the
library next to a temp dir under the importable name and runs the
worked three-by-three pipeline end to end.
"""

import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def import_module():
    names = ["liboctarsk_py.so", "octarsk_py.so", "liboctarsk_py.dylib", "octarsk_py.pyd"]
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in names
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("extension not built; run: cargo build -p octarsk-python --release")
    stage = Path(tempfile.mkdtemp(prefix="octarsk_py_"))
    shutil.copy2(built, stage / "octarsk_py.so")
    sys.path.insert(0, str(stage))
    import octarsk_py

    return octarsk_py


def main():
    m = import_module()

    # The worked three-by-three example, end to end.
    s = m.Array([[2, 3, 1], [1, 1, 5], [1, 2, 2]])
    assert s.n() == 3
    assert s.rows() == [[Fraction(2), Fraction(3), Fraction(1)],
                        [Fraction(1), Fraction(1), Fraction(5)],
                        [Fraction(1), Fraction(2), Fraction(2)]]

    g = m.integrate(s)
    assert g.inner_rows() == [[Fraction(2), Fraction(5), Fraction(6)],
                              [Fraction(3), Fraction(7), Fraction(13)],
                              [Fraction(4), Fraction(10), Fraction(18)]]
    assert g.is_supermodular()
    assert m.differentiate(g) == s

    f = m.phi(s)
    assert f.n() == 3
    assert f.apex() == Fraction(18)
    assert f.value(3, 3, 1) == Fraction(6)
    assert f.is_polarized()
    assert f == m.phi_bruteforce(s)
    assert f.restrict_alpha() == g
    try:
        f.value(2, 3, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("invalid lattice point accepted")

    h = m.or_map(g)
    assert h.inner_rows() == [[Fraction(11), Fraction(7), Fraction(4)],
                              [Fraction(8), Fraction(17), Fraction(10)],
                              [Fraction(6), Fraction(13), Fraction(18)]]
    assert h.is_inframodular()
    assert m.or_map_inverse(h) == g
    assert f.restrict_beta() == h

    p, lower, upper = m.rsk(s)
    assert p.rows() == [[Fraction(11), Fraction(7), Fraction(4)],
                        [Fraction(8), Fraction(6), Fraction(3)],
                        [Fraction(6), Fraction(5), Fraction(1)]]
    assert p.shape() == [11, 6, 1]
    assert p.total() == Fraction(51)
    assert lower.rows() == [[1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3], [2, 2, 2, 3, 3, 3], [3]]
    assert upper.rows() == [[1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 3], [2, 2, 2, 2, 2, 3], [3]]
    assert lower.shape() == upper.shape() == [11, 6, 1]
    assert lower.content() == [4, 6, 8]
    assert upper.content() == [6, 7, 5]
    assert m.rsk_inverse_map(p) == s

    ins, rec = m.classical_rsk(s)
    assert (ins, rec) == (lower, upper)
    assert m.evacuation(m.evacuation(ins)) == ins

    # Exact rational determinants, both algorithms.
    x = m.Matrix([[1, 2], [3, 4]])
    assert x.det() == Fraction(-2)
    assert x.det(method="elimination") == Fraction(-2)
    y = m.Matrix([[Fraction(1, 2), -3], [0, Fraction(7, 3)]])
    assert y.det() == Fraction(7, 6)
    assert not y.is_totally_positive_solid()
    assert m.Matrix([[1, 1], [1, 2]]).is_totally_positive_solid()
    assert y.solid_pyramid_is_polarized()

    # Malformed input surfaces as ValueError, not a crash.
    for bad in ([[1, 2], [3]], [[1, -2], [3, 4]]):
        try:
            m.Array(bad) if len(bad[1]) == 1 else m.rsk(m.Array(bad))
        except ValueError:
            pass
        else:
            raise AssertionError(f"bad input accepted: {bad}")

    assert f.to_text().startswith("kind: pyramid\n")
    print("smoke test passed")


if __name__ == "__main__":
    main()
