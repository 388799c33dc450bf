import pytest

import dnsurf


def test_generators_and_io_round_trip():
    p = dnsurf.lens_standard(2, 1)
    assert p.f_vector == [4, 12, 16, 8]
    assert p.euler_char == 0
    text = dnsurf.write_poset(p)
    q = dnsurf.read_poset(text)
    assert q.same_structure(p)
    assert q.hash == p.hash
    assert dnsurf.write_poset(q) == text


def test_validation_flags():
    rep = dnsurf.validate(dnsurf.lens_standard(2, 1))
    assert rep["is_closed_3_manifold"]
    assert rep["violations"] == []
    open_rep = dnsurf.validate(dnsurf.single_tet())
    assert open_rep["is_simplicial_poset"]
    assert not open_rep["is_closed"]


def test_cohomology_and_surface():
    p = dnsurf.lens_standard(2, 1)
    basis = dnsurf.h1(p)
    assert basis["h1_dim"] == 1
    rep = basis["representatives"][0]
    s = dnsurf.surface(p, rep)
    assert s["chi"] == 1
    assert s["cross_check"]
    [comp] = s["component_classes"]
    assert comp == {"chi": 1, "orientable": False, "crosscaps": 1, "pieces": 7}


def test_spectrum_and_average():
    p = dnsurf.cyclic_polytope_boundary(11)
    spec = dnsurf.class_spectrum(p)
    assert spec["count"] == 1024
    assert spec["mean_chi"] == "0"
    assert spec["all_cross_checked"]

    avg = dnsurf.verify_average(dnsurf.four_simplex_boundary())
    assert avg["pass"]
    assert avg["formula_value"] == "15/8"
    assert avg["closed3_value"] == "15/8"


def test_certificate():
    cert = dnsurf.certify_lens(dnsurf.lens_standard(16, 3), 8, 3)
    assert cert["bound"] == 32
    assert cert["f3"] == 64
    assert not cert["bound_met"]
    assert cert["bound_respected"]
    assert cert["checks_pass"]
    assert cert["nonorientable_chis"] == [-6]


def test_errors_surface_as_exceptions():
    with pytest.raises(dnsurf.DnsurfError):
        dnsurf.lens_standard(4, 2)
    with pytest.raises(dnsurf.DnsurfError):
        dnsurf.read_poset("not json")
    assert dnsurf.bredon_wood_chis(3, 5, -6) == [-2, -4, -6]
    with pytest.raises(dnsurf.DnsurfError):
        dnsurf.bredon_wood_chis(2, 5, 0)
