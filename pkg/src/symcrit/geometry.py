"""Model manifolds, isometry actions, and the packaged configurations.

The package ships six ready-made configurations on products and
quotients of round spheres.  Each fixes a manifold, equation
parameters, and two group actions with orbit volumes orbit1 < orbit2,
together with the data the bound machinery needs downstream: a lower
bound for the scalar curvature of the relevant quotient and sign
information on the Laplacian of the orbit-volume function at the
distinguished orbit.

Hypothesis labels on an action:

  "finite-principal"          free action of a finite group; every orbit
                              is principal with the same cardinality
  "principal-suborbits"       positive-dimensional orbits, all principal
                              with constant volume
  "volume-peaked-suborbits"   a normal subaction has principal orbits of
                              constant dimension whose volume is maximal
                              along the distinguished orbit
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constants import EquationParams, sphere_volume
from .errors import PreconditionError

__all__ = [
    "Sphere",
    "CircleTimesSphere",
    "CircleSphereSphere",
    "QuotientSphere",
    "OrbitVolumeLaplacian",
    "GroupActionSpec",
    "ExampleConfig",
    "EXAMPLE_IDS",
    "EXAMPLE_DEFAULTS",
    "example_configuration",
    "registry_rows",
    "oneill_scal_lower",
    "product_scal_lower",
]

HYPOTHESIS_KINDS = ("finite-principal", "principal-suborbits", "volume-peaked-suborbits")


@dataclass(frozen=True)
class Sphere:
    """Round sphere S^n of the given radius."""

    n: int
    radius: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise PreconditionError("sphere dimension must be an integer >= 1")
        if not self.radius > 0.0:
            raise PreconditionError("sphere radius must be positive")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dim(self):
        return self.n

    @property
    def volume(self):
        return self.radius**self.n * sphere_volume(self.n)

    def to_json(self):
        return {"kind": "sphere", "n": self.n, "radius": self.radius}


@dataclass(frozen=True)
class CircleTimesSphere:
    """Product S^1(t) x S^{n-1} with the product metric; dimension n."""

    t: float
    n: int

    def __post_init__(self):
        if not self.t > 0.0:
            raise PreconditionError("circle radius t must be positive")
        if int(self.n) != self.n or self.n < 3:
            raise PreconditionError("product dimension n must be an integer >= 3")
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "n", int(self.n))

    @property
    def dim(self):
        return self.n

    @property
    def volume(self):
        return 2.0 * math.pi * self.t * sphere_volume(self.n - 1)

    def to_json(self):
        return {"kind": "circle-sphere", "t": self.t, "n": self.n}


@dataclass(frozen=True)
class CircleSphereSphere:
    """Product S^1(a) x S^2(b) x S^{n-3}; dimension n."""

    a: float
    b: float
    n: int

    def __post_init__(self):
        if not (self.a > 0.0 and self.b > 0.0):
            raise PreconditionError("factor radii a, b must be positive")
        if int(self.n) != self.n or self.n < 6:
            raise PreconditionError("triple product needs an integer dimension n >= 6")
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "n", int(self.n))

    @property
    def dim(self):
        return self.n

    @property
    def volume(self):
        return 2.0 * math.pi * self.a * 4.0 * math.pi * self.b**2 * sphere_volume(self.n - 3)

    def to_json(self):
        return {"kind": "circle-sphere-sphere", "a": self.a, "b": self.b, "n": self.n}


@dataclass(frozen=True)
class QuotientSphere:
    """Quotient S^n / Gamma by a free isometric action of a finite group."""

    n: int
    order: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise PreconditionError("quotient sphere dimension must be an integer >= 2")
        if int(self.order) != self.order or self.order < 1:
            raise PreconditionError("group order must be an integer >= 1")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "order", int(self.order))

    @property
    def dim(self):
        return self.n

    @property
    def volume(self):
        return sphere_volume(self.n) / self.order

    def to_json(self):
        return {"kind": "quotient-sphere", "n": self.n, "order": self.order}


@dataclass(frozen=True)
class OrbitVolumeLaplacian:
    """What is known about the Laplacian of the orbit-volume function
    at the distinguished orbit (geometer's sign convention)."""

    kind: str = "zero"  # "zero" | "nonnegative" | "value"
    value: float = 0.0

    def __post_init__(self):
        if self.kind not in ("zero", "nonnegative", "value"):
            raise PreconditionError("unknown orbit-volume Laplacian kind %r" % (self.kind,))
        if self.kind != "value" and self.value != 0.0:
            raise PreconditionError("only kind='value' carries a number")
        if not math.isfinite(self.value):
            raise PreconditionError("orbit-volume Laplacian value must be finite")

    def lower(self):
        """Certified lower bound usable in curvature-type estimates."""
        return self.value if self.kind == "value" else 0.0

    def to_json(self):
        d = {"kind": self.kind}
        if self.kind == "value":
            d["value"] = self.value
        return d


@dataclass(frozen=True)
class GroupActionSpec:
    """Data of one isometry-group action entering the estimates.

    orbit_volume is the volume of the distinguished minimal orbits; for
    a finite group acting freely it is the cardinality.  quotient_scal_lower
    bounds the scalar curvature of the quotient (or subaction quotient)
    at the image of the distinguished orbit.
    """

    name: str
    k: int
    orbit_volume: float
    hypothesis: str
    quotient_scal_lower: float
    principal_constant_volume: bool = False
    vh_laplacian: OrbitVolumeLaplacian = field(default_factory=OrbitVolumeLaplacian)

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 0:
            raise PreconditionError("orbit dimension k must be an integer >= 0")
        object.__setattr__(self, "k", int(self.k))
        if not self.orbit_volume > 0.0:
            raise PreconditionError("orbit volume must be positive")
        object.__setattr__(self, "orbit_volume", float(self.orbit_volume))
        if self.hypothesis not in HYPOTHESIS_KINDS:
            raise PreconditionError(
                "hypothesis must be one of %s, got %r" % (", ".join(HYPOTHESIS_KINDS), self.hypothesis)
            )
        if self.hypothesis == "finite-principal":
            if self.k != 0:
                raise PreconditionError("a finite action has zero-dimensional orbits")
            if not self.principal_constant_volume:
                raise PreconditionError("finite free actions have constant orbit cardinality")
        if not math.isfinite(self.quotient_scal_lower):
            raise PreconditionError("quotient scalar curvature bound must be finite")

    def to_json(self):
        return {
            "name": self.name,
            "k": self.k,
            "orbit_volume": self.orbit_volume,
            "hypothesis": self.hypothesis,
            "quotient_scal_lower": self.quotient_scal_lower,
            "principal_constant_volume": self.principal_constant_volume,
            "vh_laplacian": self.vh_laplacian.to_json(),
        }


def oneill_scal_lower(total_dim, k, sect_lower):
    """Scalar curvature lower bound for the base of a Riemannian submersion.

    Horizontal sectional curvatures do not decrease under a submersion,
    so a base of dimension m = total_dim - k with totally geodesic fibers
    over a total space of sectional curvature >= sect_lower satisfies
    scal >= sect_lower * m (m - 1).
    """
    if int(total_dim) != total_dim or int(k) != k or not (0 <= k < total_dim):
        raise PreconditionError("need integer dimensions with 0 <= k < total_dim")
    m = int(total_dim) - int(k)
    return float(sect_lower) * m * (m - 1)


def product_scal_lower(base_scal, r1, r2):
    """Quotient scalar curvature bound for bi-spherical reductions.

    For V x S^{r1+r2-1} reduced by O(r1) x O(r2) through the subaction
    fixing the first block, the subaction quotient satisfies, at the
    image of an orbit lying in the collapsed block,

        scal >= base_scal + r1 (r1 - 1),

    provided r1 >= r2 >= 1.
    """
    if int(r1) != r1 or int(r2) != r2 or not (r1 >= r2 >= 1):
        raise PreconditionError("need integer block sizes with r1 >= r2 >= 1")
    return float(base_scal) + float(r1) * (float(r1) - 1.0)


@dataclass(frozen=True)
class ExampleConfig:
    """One packaged configuration: manifold, parameters, two actions."""

    example: str
    manifold: object
    params: EquationParams
    first: GroupActionSpec
    second: GroupActionSpec
    inputs: dict

    def __post_init__(self):
        if not self.first.orbit_volume < self.second.orbit_volume:
            raise PreconditionError(
                "orbit volumes must be ordered: orbit1 < orbit2, got %r >= %r"
                % (self.first.orbit_volume, self.second.orbit_volume)
            )

    @property
    def volume(self):
        return self.manifold.volume

    def to_json(self):
        return {
            "example": self.example,
            "manifold": self.manifold.to_json(),
            "n": self.params.n,
            "k": self.params.k,
            "volume": self.volume,
            "first": self.first.to_json(),
            "second": self.second.to_json(),
            "inputs": dict(self.inputs),
        }


def _require(cond, message):
    if not cond:
        raise PreconditionError(message)


def _int_like(x, name):
    if int(x) != x or x < 1:
        raise PreconditionError("%s must be an integer >= 1, got %r" % (name, x))
    return int(x)


def _sphere_quotients(n=5, a1=2, a2=4):
    n = _int_like(n, "n")
    a1 = _int_like(a1, "a1")
    a2 = _int_like(a2, "a2")
    _require(n >= 5 and n % 2 == 1, "odd dimension n >= 5 required so spheres admit free actions")
    _require(a1 < a2, "group orders must satisfy a1 < a2")
    mk = lambda name, a: GroupActionSpec(
        name=name,
        k=0,
        orbit_volume=float(a),
        hypothesis="finite-principal",
        quotient_scal_lower=float(n * (n - 1)),
        principal_constant_volume=True,
    )
    return ExampleConfig(
        example="sphere-quotients",
        manifold=Sphere(n),
        params=EquationParams(n=n, k=0),
        first=mk("order-%d rotations" % a1, a1),
        second=mk("order-%d rotations" % a2, a2),
        inputs={"n": n, "a1": a1, "a2": a2},
    )


def _cylinder_finite(example, n, t, a1, a2, n_min):
    n = _int_like(n, "n")
    a1 = _int_like(a1, "a1")
    a2 = _int_like(a2, "a2")
    _require(n >= n_min, "dimension n >= %d required" % n_min)
    _require(t > 0.0, "circle radius t must be positive")
    _require(a1 < a2, "rotation orders must satisfy a1 < a2")
    mk = lambda name, a: GroupActionSpec(
        name=name,
        k=0,
        orbit_volume=float(a),
        hypothesis="finite-principal",
        quotient_scal_lower=float((n - 1) * (n - 2)),
        principal_constant_volume=True,
    )
    return ExampleConfig(
        example=example,
        manifold=CircleTimesSphere(float(t), n),
        params=EquationParams(n=n, k=0),
        first=mk("order-%d circle rotations" % a1, a1),
        second=mk("order-%d circle rotations" % a2, a2),
        inputs={"n": n, "t": float(t), "a1": a1, "a2": a2},
    )


def _cylinder_weighted(n=6, t=1.0, a1=1, a2=2):
    return _cylinder_finite("cylinder-weighted", n, t, a1, a2, n_min=5)


def _cylinder_triple(n=5, t=40.0, a1=1, a2=2):
    return _cylinder_finite("cylinder-triple", n, t, a1, a2, n_min=3)


def _triple_product(n=10, a=4.0, b=0.28):
    n = _int_like(n, "n")
    _require(n >= 10, "triple product needs n >= 10")
    a = float(a)
    b = float(b)
    _require(a > 0.0 and b > 0.0, "factor radii must be positive")
    orbit1 = 2.0 * math.pi**2
    orbit2 = 8.0 * math.pi**2 * a * b**2
    _require(
        orbit1 < orbit2,
        "orbit volumes must satisfy orbit1 < orbit2, which needs 4 a b^2 > 1 (got %r)" % (4 * a * b**2,),
    )
    first = GroupActionSpec(
        name="bi-spherical collapse of the large factor",
        k=3,
        orbit_volume=orbit1,
        hypothesis="volume-peaked-suborbits",
        quotient_scal_lower=product_scal_lower(2.0 / b**2, n - 6, 4),
        principal_constant_volume=False,
        vh_laplacian=OrbitVolumeLaplacian("nonnegative"),
    )
    second = GroupActionSpec(
        name="rotations of the circle and small sphere",
        k=3,
        orbit_volume=orbit2,
        hypothesis="principal-suborbits",
        quotient_scal_lower=float((n - 3) * (n - 4)),
        principal_constant_volume=True,
    )
    return ExampleConfig(
        example="triple-product",
        manifold=CircleSphereSphere(a, b, n),
        params=EquationParams(n=n, k=3),
        first=first,
        second=second,
        inputs={"n": n, "a": a, "b": b},
    )


def _hopf(t=8.0):
    t = float(t)
    _require(t > 1.0, "circle radius t > 1 required so the fiber orbits are the smaller ones")
    first = GroupActionSpec(
        name="diagonal rotation along the fibers",
        k=1,
        orbit_volume=2.0 * math.pi,
        hypothesis="principal-suborbits",
        # quotient S^1(t) x S^2(1/2): scal = 2 / (1/2)^2
        quotient_scal_lower=8.0,
        principal_constant_volume=True,
    )
    second = GroupActionSpec(
        name="rotations of the circle factor",
        k=1,
        orbit_volume=2.0 * math.pi * t,
        hypothesis="principal-suborbits",
        quotient_scal_lower=6.0,
        principal_constant_volume=True,
    )
    return ExampleConfig(
        example="hopf",
        manifold=CircleTimesSphere(t, 4),
        params=EquationParams(n=4, k=1),
        first=first,
        second=second,
        inputs={"t": t},
    )


def _cylinder_overcritical(n=5, t=8.0):
    n = _int_like(n, "n")
    _require(n >= 4, "dimension n >= 4 required")
    t = float(t)
    _require(t > 1.0, "circle radius t > 1 required so the sphere orbits are the smaller ones")
    first = GroupActionSpec(
        name="bi-spherical collapse of the sphere factor",
        k=1,
        orbit_volume=2.0 * math.pi,
        hypothesis="volume-peaked-suborbits",
        quotient_scal_lower=product_scal_lower(0.0, n - 2, 2),
        principal_constant_volume=False,
        vh_laplacian=OrbitVolumeLaplacian("nonnegative"),
    )
    second = GroupActionSpec(
        name="rotations of the circle factor",
        k=1,
        orbit_volume=2.0 * math.pi * t,
        hypothesis="principal-suborbits",
        quotient_scal_lower=float((n - 1) * (n - 2)),
        principal_constant_volume=True,
    )
    return ExampleConfig(
        example="cylinder-overcritical",
        manifold=CircleTimesSphere(t, n),
        params=EquationParams(n=n, k=1),
        first=first,
        second=second,
        inputs={"n": n, "t": t},
    )


_BUILDERS = {
    "sphere-quotients": _sphere_quotients,
    "cylinder-weighted": _cylinder_weighted,
    "triple-product": _triple_product,
    "cylinder-triple": _cylinder_triple,
    "hopf": _hopf,
    "cylinder-overcritical": _cylinder_overcritical,
}

EXAMPLE_IDS = tuple(_BUILDERS)

EXAMPLE_DEFAULTS = {
    "sphere-quotients": {"n": 5, "a1": 2, "a2": 4},
    "cylinder-weighted": {"n": 6, "t": 1.0, "a1": 1, "a2": 2},
    "triple-product": {"n": 10, "a": 4.0, "b": 0.28},
    "cylinder-triple": {"n": 5, "t": 40.0, "a1": 1, "a2": 2},
    "hopf": {"t": 8.0},
    "cylinder-overcritical": {"n": 5, "t": 8.0},
}


def example_configuration(example, **params):
    """Build one packaged configuration; parameters default per EXAMPLE_DEFAULTS."""
    if example not in _BUILDERS:
        raise PreconditionError(
            "unknown example %r; available: %s" % (example, ", ".join(EXAMPLE_IDS))
        )
    allowed = set(EXAMPLE_DEFAULTS[example])
    extra = set(params) - allowed
    if extra:
        raise PreconditionError(
            "example %r does not take parameter(s) %s; allowed: %s"
            % (example, ", ".join(sorted(extra)), ", ".join(sorted(allowed)))
        )
    return _BUILDERS[example](**params)


def registry_rows():
    """JSON-serializable description of every packaged example at defaults."""
    return [example_configuration(ex).to_json() for ex in EXAMPLE_IDS]
