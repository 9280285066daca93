import math

import numpy as np
import pytest

import expgraff as eg


def bernoulli():
    space = eg.SampleSpace.indexed(2)
    return eg.Representation(
        eg.FuncVec(space, np.zeros(2)),
        eg.MinimalFrame(space, np.array([[0.0, 1.0]])),
    )


def sample_group():
    return eg.GroupElement(
        np.array([[2.0, 0.0], [1.0, 1.0]]),
        np.array([0.5, -1.0]),
        np.array([1.0, 2.0]),
        0.25,
    )


def test_version_and_space():
    assert eg.__version__ == "0.1.0"
    space = eg.SampleSpace.indexed(3)
    assert len(space) == 3
    assert space.labels == ["x0", "x1", "x2"]
    assert space == eg.SampleSpace(["x0", "x1", "x2"])


def test_bernoulli_density_and_psi():
    rep = bernoulli()
    p = eg.density(rep, np.zeros(1))
    assert np.allclose(p, [0.5, 0.5], atol=1e-15)
    assert abs(eg.log_partition(rep, np.zeros(1)) - math.log(2.0)) < 1e-15
    tilted = eg.density(rep, np.array([math.log(3.0)]))
    assert np.allclose(tilted, [0.25, 0.75], atol=1e-12)


def test_membership():
    rep = bernoulli()
    theta = eg.membership(rep, np.array([0.25, 0.75]))
    assert theta is not None
    assert abs(theta[0] - math.log(3.0)) < 1e-8

    space = eg.SampleSpace.indexed(3)
    symmetric = eg.Representation(
        eg.FuncVec(space, np.zeros(3)),
        eg.MinimalFrame(space, np.array([[0.0, 1.0, 0.0]])),
    )
    assert eg.membership(symmetric, np.array([0.2, 0.5, 0.3])) is None


def test_orbit_witness_roundtrip():
    rep = eg.random_representation(5, 2, seed=3)
    g = sample_group()
    moved = eg.act(g, rep)
    report = eg.recover_witness(moved, rep)
    assert report.equivalent
    assert not report.marginal
    assert np.max(np.abs(report.witness.A - g.A)) < 1e-8
    assert np.max(np.abs(report.witness.u - g.u)) < 1e-8
    assert np.max(np.abs(report.witness.v - g.v)) < 1e-8
    assert abs(report.witness.c - g.c) < 1e-8
    assert eg.are_equivalent(moved, rep)

    theta = np.array([0.7, -1.2])
    lhs = eg.density(moved, theta)
    rhs = eg.density(rep, eg.transfer_theta(g, theta))
    assert np.max(np.abs(lhs - rhs)) < 1e-12
    assert eg.psi_residual(g, moved, rep, theta) < 1e-12


def test_canonical_subspace_is_orbit_invariant():
    rep = eg.random_representation(6, 2, seed=11)
    moved = eg.act(sample_group(), rep)
    s = eg.graff_from_rep(rep)
    t = eg.graff_from_rep(moved)
    assert s.ambient_dim == 6
    assert s.dim == 2
    assert eg.subspaces_equal(s, t)
    assert eg.canonical_json(s) == eg.canonical_json(t)
    proj = s.projector()
    assert np.max(np.abs(proj @ proj - proj)) < 1e-12
    assert np.max(np.abs(s.basis.T @ s.basis - np.eye(2))) < 1e-12


def test_group_algebra():
    g = sample_group()
    e = eg.compose(g, eg.inverse(g))
    assert np.max(np.abs(e.A - np.eye(2))) < 1e-12
    assert np.max(np.abs(e.u)) < 1e-12
    assert np.max(np.abs(e.v)) < 1e-12
    assert abs(e.c) < 1e-12
    assert np.max(np.abs(eg.embed_matrix(e) - np.eye(4))) < 1e-12
    aff, shift = eg.semidirect_split(g)
    joined = eg.semidirect_join(aff, shift)
    assert np.array_equal(joined.A, g.A)
    assert joined.c == g.c


def test_stabilizer_pivots_and_dimension():
    rep = eg.random_representation(4, 2, seed=9)
    assert eg.stabilizer_is_trivial(rep)
    pivots = eg.select_pivot_indices(rep.frame)
    assert len(pivots) == 3
    d = eg.difference_matrix(rep.frame, pivots)
    assert np.linalg.matrix_rank(d) == 2
    assert eg.graff_dimension(2, 5).value == 9
    assert eg.graff_dimension(3, 3).value == 0


def test_error_translation():
    space = eg.SampleSpace.indexed(2)
    with pytest.raises(ValueError):
        eg.MinimalFrame(space, np.array([[1.0, 1.0]]))
    with pytest.raises(ValueError):
        eg.graff_dimension(0, 3)
    with pytest.raises(ValueError):
        eg.SampleSpace(["a", "a"])
