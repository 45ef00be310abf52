import json
import random

import pytest
import sullivan_lab as sl
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors


def test_b4_betti():
    assert sl.betti("corpus:b4", 0, 4) == [1, 2, 2, 2, 1]


def test_betti_from_json_text():
    text = sl.corpus_document("heisenberg3")
    assert json.loads(text)["version"] == 1
    assert sl.betti(text, 0, 3) == [1, 2, 2, 1]


def test_run_matches_cli_contract():
    code, out, _ = sl.run(["massey", "corpus:m7", "--classes", "a,a,b"])
    assert code == 0
    assert "verdict: nonzero_certified" in out
    code, _, err = sl.run(["cohomology", "/nonexistent.json"])
    assert code == 2
    assert err


def test_corpus_checks_pass():
    ids = sl.corpus_ids()
    assert ids == sorted(ids)
    for cid in ids:
        for item in sl.check_corpus(cid):
            assert item["passed"], (cid, item)
            assert item["origin"] in {"worked-example", "derived", "elementary"}


def _nonzero(factors):
    return [abs(int(f)) for f in factors if f != 0]


def test_smith_against_sympy():
    rng = random.Random(7)
    for _ in range(40):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        ours = _nonzero(sl.smith_factors(rows))
        theirs = _nonzero(invariant_factors(Matrix(rows), domain=ZZ))
        assert ours == theirs, rows


def test_smith_big_integers():
    big = 10**40 + 7
    assert _nonzero(sl.smith_factors([[2 * big, 0], [0, 4 * big]])) == [2 * big, 4 * big]


def test_gysin_s2_cubed():
    groups = sl.gysin("corpus:s2cubed", 1, "a1+a2+a3")
    assert groups == ["Z", "0", "Z^2", "0", "Z_2", "Z^2", "0", "Z"]


@pytest.mark.parametrize("e", [2, 3, 5])
def test_gysin_s2xs2_torsion(e):
    groups = sl.gysin("corpus:s2xs2", 3, f"{e}*a1*a2")
    assert groups[4] == f"Z_{e}"


def test_errors_surface_as_exceptions():
    with pytest.raises(sl.Error):
        sl.corpus_document("no-such-entry")
