import math

import pytest

from symcrit import (
    EXAMPLE_DEFAULTS,
    EXAMPLE_IDS,
    CircleSphereSphere,
    CircleTimesSphere,
    PreconditionError,
    QuotientSphere,
    Sphere,
    canonical_json,
    example_configuration,
    registry_rows,
    sphere_volume,
)
from symcrit.geometry import oneill_scal_lower, product_scal_lower


def test_manifold_volumes():
    assert Sphere(5).volume == pytest.approx(math.pi**3, rel=1e-15)
    assert Sphere(2, radius=3.0).volume == pytest.approx(9.0 * 4.0 * math.pi, rel=1e-15)
    assert CircleTimesSphere(2.0, 5).volume == pytest.approx(
        4.0 * math.pi * sphere_volume(4), rel=1e-15
    )
    assert CircleSphereSphere(4.0, 0.5, 10).volume == pytest.approx(
        8.0 * math.pi * math.pi * sphere_volume(7), rel=1e-15
    )
    assert QuotientSphere(5, 4).volume == pytest.approx(math.pi**3 / 4.0, rel=1e-15)


def test_manifold_validation():
    with pytest.raises(PreconditionError):
        Sphere(0)
    with pytest.raises(PreconditionError):
        Sphere(3, radius=0.0)
    with pytest.raises(PreconditionError):
        CircleTimesSphere(-1.0, 5)
    with pytest.raises(PreconditionError):
        CircleTimesSphere(1.0, 2)
    with pytest.raises(PreconditionError):
        QuotientSphere(5, 0)


def test_scal_lower_helpers():
    # totally geodesic submersion over sect >= 1: scal >= m(m-1)
    assert oneill_scal_lower(5, 1, 1.0) == 12.0
    assert oneill_scal_lower(5, 0, 1.0) == 20.0
    # collapsed bi-spherical block at r1 = n-2, r2 = 2
    assert product_scal_lower(0.0, 3, 2) == 6.0
    assert product_scal_lower(2.0 / 0.25, 4, 4) == 8.0 + 12.0
    with pytest.raises(PreconditionError):
        product_scal_lower(0.0, 1, 2)
    with pytest.raises(PreconditionError):
        oneill_scal_lower(5, 5, 1.0)


def test_defaults_cover_all_examples():
    assert set(EXAMPLE_DEFAULTS) == set(EXAMPLE_IDS)
    for ex in EXAMPLE_IDS:
        cfg = example_configuration(ex)
        assert cfg.example == ex
        assert cfg.first.orbit_volume < cfg.second.orbit_volume
        assert cfg.volume > 0.0


def test_sphere_quotients_configuration():
    cfg = example_configuration("sphere-quotients", n=7, a1=2, a2=3)
    assert cfg.params.n == 7 and cfg.params.k == 0
    assert cfg.first.orbit_volume == 2.0 and cfg.second.orbit_volume == 3.0
    assert cfg.first.quotient_scal_lower == 42.0  # n(n-1)
    assert cfg.first.hypothesis == "finite-principal"
    with pytest.raises(PreconditionError):
        example_configuration("sphere-quotients", n=6)  # even spheres: no free actions
    with pytest.raises(PreconditionError):
        example_configuration("sphere-quotients", a1=4, a2=2)


def test_hopf_configuration():
    cfg = example_configuration("hopf", t=8.0)
    assert cfg.params.n == 4 and cfg.params.k == 1
    assert cfg.first.orbit_volume == pytest.approx(2.0 * math.pi, rel=1e-15)
    assert cfg.second.orbit_volume == pytest.approx(16.0 * math.pi, rel=1e-15)
    # quotients: S^1(t) x S^2(1/2) and S^3
    assert cfg.first.quotient_scal_lower == 8.0
    assert cfg.second.quotient_scal_lower == 6.0
    assert cfg.second.principal_constant_volume
    with pytest.raises(PreconditionError):
        example_configuration("hopf", t=1.0)


def test_triple_product_configuration():
    cfg = example_configuration("triple-product", n=10, a=4.0, b=0.28)
    assert cfg.params.k == 3
    assert cfg.first.orbit_volume == pytest.approx(2.0 * math.pi**2, rel=1e-15)
    assert cfg.second.orbit_volume == pytest.approx(
        8.0 * math.pi**2 * 4.0 * 0.28**2, rel=1e-15
    )
    assert cfg.first.vh_laplacian.kind == "nonnegative"
    assert cfg.first.vh_laplacian.lower() == 0.0
    # scal of the collapsed-block quotient: 2/b^2 + (n-6)(n-7)
    assert cfg.first.quotient_scal_lower == pytest.approx(2.0 / 0.28**2 + 12.0, rel=1e-15)
    assert cfg.second.quotient_scal_lower == 42.0  # (n-3)(n-4)
    with pytest.raises(PreconditionError) as err:
        example_configuration("triple-product", a=4.0, b=0.2)  # 4ab^2 = 0.64 < 1
    assert "4 a b^2" in str(err.value)
    with pytest.raises(PreconditionError):
        example_configuration("triple-product", n=9)


def test_cylinder_overcritical_configuration():
    cfg = example_configuration("cylinder-overcritical", n=5, t=8.0)
    assert cfg.params.k == 1
    assert cfg.first.orbit_volume == pytest.approx(2.0 * math.pi, rel=1e-15)
    assert cfg.first.quotient_scal_lower == 6.0  # (n-2)(n-3)
    assert cfg.second.quotient_scal_lower == 12.0  # (n-1)(n-2)
    assert not cfg.first.principal_constant_volume
    with pytest.raises(PreconditionError):
        example_configuration("cylinder-overcritical", n=5, t=0.5)


def test_cylinder_finite_configurations():
    cfg = example_configuration("cylinder-triple", n=5, t=40.0, a1=1, a2=2)
    assert cfg.params.k == 0
    assert cfg.first.orbit_volume == 1.0 and cfg.second.orbit_volume == 2.0
    assert cfg.volume == pytest.approx(80.0 * math.pi * sphere_volume(4), rel=1e-15)
    with pytest.raises(PreconditionError):
        example_configuration("cylinder-weighted", n=4)  # needs n >= 5
    with pytest.raises(PreconditionError):
        example_configuration("cylinder-triple", a1=2, a2=2)


def test_unknown_example_and_extra_params():
    with pytest.raises(PreconditionError):
        example_configuration("does-not-exist")
    with pytest.raises(PreconditionError) as err:
        example_configuration("hopf", n=4)
    assert "does not take" in str(err.value)


def test_registry_is_json_serializable():
    rows = registry_rows()
    assert len(rows) == len(EXAMPLE_IDS)
    text = canonical_json(rows)
    assert all(ex in text for ex in EXAMPLE_IDS)
