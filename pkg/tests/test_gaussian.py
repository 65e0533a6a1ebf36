import itertools

import numpy as np
import pytest
from numpy import testing

from olctkit.errors import InsufficientSupport, ValidationError
from olctkit.fields import Grid2D
from olctkit.gaussian import (GaussianSpec, closed_on_grid, default_grid, gaussian_field,
                              gaussian_modulus_sq, gaussian_olct_closed)
from olctkit.olct import induced_grid, olct_2d_direct

from conftest import make_params, rel_linf


@pytest.mark.parametrize("a,b", list(itertools.product((0, 1), (0.5, 1, 1.1, 1.5, 2))))
def test_oracle_agreement(a, b):
    worst = 0.0
    for alpha, tau, eta in ((0.5, 0.5, -0.5), (1.0, 0.0, 0.0), (2.5, -0.5, 0.5)):
        g = GaussianSpec(alpha, alpha)
        f = gaussian_field(g, default_grid(g, 128))
        M1, M2 = make_params(a, b, tau, eta), make_params(a, b, eta, tau)
        ug = induced_grid(f.grid, M1, M2)
        worst = max(worst, rel_linf(olct_2d_direct(f, M1, M2, ug).values,
                                    closed_on_grid(g, M1, M2, ug).values))
    assert worst <= 1e-6


def test_constant_is_one_at_origin():
    g = GaussianSpec(1.3, 0.7)
    M1, M2 = make_params(1, 1.5), make_params(0, -0.8)
    f = gaussian_field(g, default_grid(g, 128))
    h = 0.1
    ug = Grid2D(3, 3, -1.5 * h, h, -1.5 * h, h)  # contains u = 0
    direct = olct_2d_direct(f, M1, M2, ug).values[1, 1]
    closed = gaussian_olct_closed(g, M1, M2, 0.0, 0.0)
    assert direct == pytest.approx(complex(closed), rel=1e-12)


def test_modulus_law():
    g = GaussianSpec(1.5, 0.5)
    M1, M2 = make_params(1, 1.1, 0.5, 0.2), make_params(0, 2.0, -0.5, 0.5)
    u1, u2 = np.meshgrid(np.linspace(-4, 4, 17), np.linspace(-3, 3, 13), indexing="ij")
    closed = gaussian_olct_closed(g, M1, M2, u1, u2)
    testing.assert_allclose(gaussian_modulus_sq(g, M1, M2, u1, u2), np.abs(closed) ** 2, rtol=1e-12)


def test_support_check():
    g = GaussianSpec(0.5, 0.5)
    with pytest.raises(InsufficientSupport):
        gaussian_field(g, Grid2D.centered(64, 2.0))
    with pytest.raises(ValidationError):
        GaussianSpec(-1.0, 1.0)
    assert GaussianSpec.isotropic(2.0).norm_sq() == pytest.approx(np.pi / 4)
