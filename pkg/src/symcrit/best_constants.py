"""Two-sided estimates for the zero-order constant of the invariant
sharp Sobolev inequality.

For a compact n-manifold and an isometry group G with k-dimensional
minimal orbits, the invariant functions satisfy

    ||u||_{2#}^2  <=  (K_N / A^{2/N}) ( ||grad u||_2^2 + B ||u||_2^2 ),

with N = n - k, A the minimal orbit volume, and the optimal B is the
constant all interval computations revolve around.  This module
returns certified ConstantBound windows for it on the model spaces,
plus the general curvature lower bound and the transfer along
principal constant-volume quotients.
"""

from __future__ import annotations

import math

from .constants import ConstantBound, sobolev_constant, sphere_volume
from .errors import PreconditionError

__all__ = [
    "b0_sphere",
    "b0_circle_sphere",
    "b0_quotient_sphere",
    "b0_lower_general",
    "b0_transfer_principal",
]


def b0_sphere(n):
    """On the round unit sphere the optimal constant is exactly n(n-2)/4."""
    if int(n) != n or n < 3:
        raise PreconditionError("round-sphere constant needs an integer dimension >= 3")
    n = int(n)
    return ConstantBound.exact(n * (n - 2) / 4.0)


def b0_circle_sphere(t, n):
    """Window for S^1(t) x S^{n-1} (trivial group).

    [ (n-2)^2/4 ,  (n-2)^2/4 + 1/(4 t^2) ].
    """
    if int(n) != n or n < 3:
        raise PreconditionError("product constant needs an integer dimension >= 3")
    if not t > 0.0:
        raise PreconditionError("circle radius t must be positive")
    n = int(n)
    base = (n - 2) ** 2 / 4.0
    return ConstantBound(base, base + 1.0 / (4.0 * t * t))


def b0_quotient_sphere(n, order):
    """Window for a free finite quotient of S^n with the given group order.

    [ A^{2/n} n(n-2)/4 ,  (1 + A^2/4)(n+1)/2 - 1 + n(n-2)/4 ],  A = order.
    """
    if int(n) != n or n < 3:
        raise PreconditionError("quotient-sphere constant needs an integer dimension >= 3")
    if int(order) != order or order < 1:
        raise PreconditionError("group order must be an integer >= 1")
    n = int(n)
    a = float(order)
    lo = a ** (2.0 / n) * n * (n - 2) / 4.0
    hi = (1.0 + a * a / 4.0) * (n + 1) / 2.0 - 1.0 + n * (n - 2) / 4.0
    return ConstantBound(lo, hi)


def b0_lower_general(params, volume, action):
    """Curvature lower bound, valid with no upper companion.

    B >= max{ A^{2/N} / (V^{2/N} K_N),
              (n-2-k)/(4 (n-1-k)) ( S_quotient + 3 lap(v_H)/A ) }

    using certified lower bounds for the quotient scalar curvature and
    for the orbit-volume Laplacian.  Needs N = n - k >= 3.
    """
    N = params.reduced_dim
    if N < 3:
        raise PreconditionError("curvature lower bound needs n - k >= 3, got %d" % N)
    if params.k != action.k:
        raise PreconditionError("action orbit dimension %d does not match k=%d" % (action.k, params.k))
    if not volume > 0.0:
        raise PreconditionError("manifold volume must be positive")
    A = action.orbit_volume
    vol_term = A ** (2.0 / N) / (float(volume) ** (2.0 / N) * sobolev_constant(N))
    coeff = (params.n - 2 - params.k) / (4.0 * (params.n - 1 - params.k))
    curv_term = coeff * (action.quotient_scal_lower + 3.0 * action.vh_laplacian.lower() / A)
    return ConstantBound(max(vol_term, curv_term), math.inf)


def b0_transfer_principal(action, quotient_bound):
    """Transfer a window from the quotient back to the total space.

    When all orbits are principal with constant volume, the invariant
    constant upstairs equals the plain constant of the quotient, so the
    window passes through unchanged.
    """
    if not action.principal_constant_volume:
        raise PreconditionError(
            "transfer requires principal orbits of constant volume (action %r)" % (action.name,)
        )
    return ConstantBound(quotient_bound.lo, quotient_bound.hi)
