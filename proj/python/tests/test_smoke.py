import json

import pytest

import catlens


def test_constructors_are_lawful():
    for n in range(4):
        assert catlens.validate(catlens.codiscrete([str(i) for i in range(n)])).valid
        assert catlens.validate(catlens.discrete([str(i) for i in range(n)])).valid
        assert catlens.validate(catlens.interval(n)).valid
    arrows = catlens.arrow_category(catlens.interval(1))
    assert len(arrows) == 3
    assert catlens.validate(arrows)


def test_category_accessors():
    c = catlens.codiscrete(["a", "b"])
    assert c.objects == ["a", "b"]
    assert c.morphisms == ["a*a", "a*b", "b*a", "b*b"]
    assert c.compose("a*b", "b*a") == "a*a"
    assert c.identity("b") == "b*b"
    assert catlens.interval(1).compose("1->1", "0->0") is None


def test_lens_counts():
    def count(n, m):
        a = catlens.codiscrete([str(i) for i in range(n)])
        b = catlens.codiscrete([str(i) for i in range(m)])
        return len(catlens.enumerate_lenses(a, b))

    assert count(2, 1) == 1
    assert count(2, 2) == 2
    assert count(3, 3) == 6
    assert len(catlens.enumerate_lenses(catlens.interval(1), catlens.codiscrete(["x"]))) == 1


def test_composition_and_units():
    c = catlens.codiscrete(["a", "b"])
    lenses = catlens.enumerate_lenses(c, c)
    ident = catlens.identity_lens(c)
    for x in lenses:
        assert catlens.validate(x).valid
        assert catlens.compose(ident, x) == x
        for y in lenses:
            assert catlens.validate(catlens.compose(x, y)).valid
    for phi in catlens.enumerate_cofunctors(c, c):
        assert catlens.compose(phi, catlens.identity_cofunctor(c)) == phi
        assert catlens.validate(catlens.lambda_category(phi)).valid


def test_dopf_lens_and_state_lens():
    c = catlens.codiscrete(["a", "b"])
    for f in catlens.enumerate_dopfs(c, c):
        assert catlens.is_discrete_opfibration(f)
        assert catlens.validate(catlens.dopf_to_lens(f)).valid
    s = catlens.StateLens(["x", "y"], ["x", "y"], {"x": "x", "y": "y"},
                          {(a, b): b for a in "xy" for b in "xy"})
    assert catlens.validate(s).valid
    assert catlens.state_lens_to_internal(s) == catlens.identity_lens(catlens.codiscrete(["x", "y"]))


def test_json_round_trip(tmp_path):
    lens = catlens.enumerate_lenses(catlens.codiscrete(["a", "b"]), catlens.codiscrete(["a", "b"]))[1]
    text = catlens.dumps(lens)
    assert json.loads(text)["kind"] == "lens"
    assert catlens.loads(text) == lens
    path = tmp_path / "lens.json"
    path.write_text(text)
    assert catlens.load(str(path)) == lens
    assert catlens.dumps(catlens.load(str(path))) == text


def test_errors():
    with pytest.raises(catlens.ParseError):
        catlens.loads('{"kind": "category", "objects": ["a"]}')
    c1 = catlens.codiscrete(["a"])
    c2 = catlens.codiscrete(["a", "b"])
    with pytest.raises(catlens.BoundaryMismatch):
        catlens.compose(catlens.identity_functor(c1), catlens.identity_functor(c2))
    with pytest.raises(catlens.GuardExceeded):
        catlens.enumerate_functors(c2, c2, max_candidates=1)


def test_cli(tmp_path):
    out = tmp_path / "i.json"
    code, text, _ = catlens.run_cli(["build", "interval", "2", "--out", str(out)])
    assert code == 0 and "wrote" in text
    code, text, _ = catlens.run_cli(["validate", str(out)])
    assert code == 0
    assert isinstance(catlens.load(str(out)), catlens.Category)
