import json
import pathlib

import pytest

import sbcert

SCHEMA = pathlib.Path(__file__).resolve().parents[2] / "docs" / "certificate.schema.json"


def test_residues():
    assert sbcert.cubes_mod_p(7) == [1, 6]
    assert sbcert.cubes_mod_p(13) == [1, 5, 8, 12]
    assert not sbcert.is_cube_mod_p(2, 7)
    assert sbcert.choose_a(7) == 2
    assert sbcert.choose_a(31) == 3


def test_field_arithmetic():
    f = sbcert.Field(7)
    assert (f.d, f.k, f.degree) == (2, 2, 6)
    z = f.zeta()
    assert z.coords == ["0", "1", "0", "0", "0", "0"]
    assert f.zeta_pow(3) * f.zeta_pow(4) == f.one()
    x = f.element(["1", "-1/2", "0", "3", "0", "0"])
    assert x * x.inverse() == f.one()
    assert (f.one() - z).absolute_norm() == "7"
    assert all(eta.sigma() == eta and eta.in_K() for eta in f.gaussian_periods())
    assert x.relative_norm().in_K()


def test_algebra_relations():
    f = sbcert.Field(7)
    alg = sbcert.Algebra(f, "2")
    assert alg.obstruction_holds()
    alpha = alg.alpha()
    assert alpha**3 == alg.embed(f.rational("2"))
    lam = f.element(["2", "0", "1/3", "0", "-1", "0"])
    assert alg.embed(lam) * alpha == alpha * alg.embed(lam.sigma())
    x = alg.element(lam, f.one(), f.zeta())
    assert not x.reduced_norm().is_zero()
    y = x.inverse()
    assert x * y == alg.one() and y * x == alg.one()
    assert x.same_class(alg.embed(f.gaussian_periods()[0]) * x)


def test_split_algebra_has_zero_divisors():
    f = sbcert.Field(7)
    alg = sbcert.Algebra(f, "1")
    u = alg.one() - alg.alpha()
    assert u.reduced_norm().is_zero()
    with pytest.raises(sbcert.Error):
        u.inverse()


def test_certificate_p7():
    cert = sbcert.certify(7, trials=20)
    assert cert["overall"] == "PASS"
    assert (cert["d"], cert["a"]) == (2, 2)
    assert cert["group"]["order"] == 21
    assert cert["group"]["order_histogram"] == {"1": 1, "3": 14, "7": 6}
    assert cert["group"]["jordan"]["index"] == 3
    assert cert["imported_lemma_note"] == sbcert.IMPORTED_LEMMA
    assert list(cert)[:3] == ["schema_version", "p", "d"]
    assert sbcert.run_pipeline(7, trials=20, seed=3) == sbcert.run_pipeline(7, trials=20, seed=3)


def test_certificate_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA.read_text())
    jsonschema.validate(sbcert.certify(7, trials=5), schema)
    jsonschema.validate(sbcert.certify(13, trials=5, timings=True), schema)


@pytest.mark.parametrize(
    "p, a, code",
    [(11, None, "WrongResidue"), (6, None, "NotPrime"), (7, 6, "RejectedOverride")],
)
def test_rejections(p, a, code):
    with pytest.raises(sbcert.Error) as info:
        sbcert.run_pipeline(p, a=a, trials=1)
    assert info.value.code == code
    assert code in str(info.value)
