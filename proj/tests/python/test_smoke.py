import ddelta


def test_polynomial_arithmetic():
    r = ddelta.Ring(2, ["x", "y"])
    assert str(r("x+y") * r("x+y")) == "x^2+y^2"
    assert str(r("x+y").frobenius(1)) == "x^2+y^2"
    assert r("x - x").is_zero()


def test_colon_identity():
    r = ddelta.Ring(3, ["x", "y"])
    rs = ddelta.Sequence(r, [r("x+y"), r("x*y")])
    assert ddelta.colon(rs.bracket_power(3), rs.product ** 2) == rs.bracket_power(1)


def test_not_permutable_raises():
    r = ddelta.Ring(2, ["x", "y"])
    try:
        ddelta.Sequence(r, [r("x"), r("x")])
    except ddelta._core.Error as e:
        assert "T={1}, j=2" in str(e)
    else:
        raise AssertionError("expected an error")


def test_cech_and_fedder():
    r = ddelta.Ring(2, ["x", "y"])
    rs = ddelta.Sequence(r, [r("x"), r("y")])
    one = ddelta.CechClass(rs, r("1"), 1)
    assert one == ddelta.CechClass(rs, r("x*y"), 2)
    assert ddelta.f_fed(ddelta.CechClass(rs, r("1"), 2)) == ddelta.CechClass(rs, r("1"), 3)
    lhs = ddelta.f_fed(ddelta.phi_embed(rs, r("1"), 2, [1]))
    assert lhs == ddelta.CechClass(rs, r("x^3*y"), 4)


def test_level_and_vanishing():
    r = ddelta.Ring(2, ["x", "y"])
    rs = ddelta.Sequence(r, [r("x+y"), r("x*y")])
    terms = ddelta.level_summary(rs, 2)
    assert [len(t) for t in terms] == [1, 2, 1]
    assert ddelta.cohomology_dimension(rs, 2, 1) == 0
    assert ddelta.verify_vanishing(rs, 1, 2) == (True, 2)
    assert ddelta.top_class_persists(rs, 2, 4)
    assert ddelta.verify_codim2_V(rs, 1)


def test_run_and_catalog():
    report, code = ddelta.run(
        {"p": 2, "vars": ["x", "y"], "sequence": ["x", "y"], "checks": [{"name": "colon_identities", "params": {"max": 4}}]}
    )
    assert code == 0
    assert report["schema_version"] == 1
    assert report["records"][0]["status"] == "pass"
    _, bad = ddelta.run({"p": 2, "vars": ["x"], "sequence": ["x"], "checks": ["missing"]})
    assert bad == 3
    assert "verify_codim2_V" in ddelta.list_checks()
