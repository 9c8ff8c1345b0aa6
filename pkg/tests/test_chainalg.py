import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from factories import pi, random_complex
from symphom import chainalg, domains
from symphom.actions import ActionValue
from symphom.chainalg import ComplexError, CriticalPoint, FilteredComplex, Generator, Group, HomologyTable

seeds = st.integers(0, 2**32 - 1)


def pair(n=1, coeff=1):
    return FilteredComplex(
        (Generator("a", n, pi(0)), Generator("b", n + 1, pi(1))),
        {("b", "a"): coeff},
    )


def ball(n, lam):
    return domains.ball_complex(domains.BallModel(n, lam))


# ------------------------------------------------------------ validation


def test_validate_examples():
    assert chainalg.validate(FilteredComplex((), {})).ok
    same = FilteredComplex((Generator("a", 0, pi(0)), Generator("b", 0, pi(1))), {})
    assert chainalg.validate(same).ok
    bad = FilteredComplex((Generator("a", 0, pi(0)), Generator("b", 0, pi(1))), {("b", "a"): 1})
    rep = chainalg.validate(bad)
    assert not rep.ok and "a" in rep.violations[0] and "b" in rep.violations[0]


def test_validate_action_and_square():
    down = FilteredComplex((Generator("a", 0, pi(1)), Generator("b", 1, pi(0))), {("b", "a"): 1})
    assert "action" in chainalg.validate(down).violations[0]
    gens = (Generator("a", 0, pi(0)), Generator("b", 1, pi(0)), Generator("c", 2, pi(0)))
    sq = FilteredComplex(gens, {("b", "a"): 1, ("c", "b"): 1})
    assert any("delta^2" in v for v in chainalg.validate(sq).violations)


def test_unknown_generator_in_differential():
    with pytest.raises(ComplexError):
        FilteredComplex((Generator("a", 0, pi(0)),), {("z", "a"): 1})


# ------------------------------------------------------------ truncation


def test_truncate_ball_window_around_pi():
    C = chainalg.truncate(ball(1, pi(Fraction(5, 2))), ActionValue(real=math.pi - 0.1), ActionValue(real=math.pi + 0.1))
    assert sorted(g.degree for g in C.generators) == [2, 3]
    assert C.differential == {}


def test_truncate_full_and_empty():
    C = ball(2, pi(Fraction(7, 2)))
    full = chainalg.truncate(C, None, None)
    assert full.generators == C.generators and full.differential == C.differential
    below = chainalg.truncate(C, pi(-2), pi(-1))
    assert len(below) == 0


def test_truncate_rejects_empty_window():
    with pytest.raises(ComplexError):
        chainalg.truncate(pair(), pi(1), pi(1))


# ------------------------------------------------------------ homology


@pytest.mark.parametrize("n,k", [(1, 0), (1, 3), (2, 1), (3, 4)])
def test_ball_homology(n, k):
    H = chainalg.homology(ball(n, pi(Fraction(2 * k + 1, 2))))
    assert H == HomologyTable.free({n * (2 * k + 1): 1})


def test_acyclic_pair_and_torsion():
    assert chainalg.homology(pair(3)).is_zero()
    H = chainalg.homology(pair(1, 2))
    assert H[2] == Group(0, (2,)) and H[1].is_zero


def uct_betti(H, k, p):
    # universal coefficients: free rank plus p-divisible torsion in degrees k and k+1
    tors = lambda j: sum(1 for t in H[j].torsion if t % p == 0)
    return H.rank(k) + tors(k) + tors(k + 1)


@given(seeds, st.sampled_from([2, 3, 5]))
def test_field_betti_matches_integer_homology(seed, p):
    C = random_complex(np.random.default_rng(seed))
    H = chainalg.homology(C)
    b0, bp = chainalg.betti(C, 0), chainalg.betti(C, p)
    for k in C.degrees():
        assert b0.get(k, 0) == H.rank(k)
        assert bp.get(k, 0) == uct_betti(H, k, p)


@given(seeds)
def test_euler_characteristic(seed):
    C = random_complex(np.random.default_rng(seed))
    H = chainalg.homology(C)
    assert sum((-1) ** k * H.rank(k) for k in H.degrees()) == C.euler_characteristic()


@given(seeds)
def test_change_of_basis_keeps_homology(seed):
    rng = np.random.default_rng(seed)
    C = random_complex(rng)
    assert chainalg.validate(C).ok
    # homology is a basis-free invariant, so relabelling the generators changes nothing
    perm = FilteredComplex(tuple(reversed(C.generators)), dict(C.differential))
    assert chainalg.homology(perm) == chainalg.homology(C)


def test_negate_flips_degrees_and_actions():
    N = chainalg.negate(pair(2))
    assert sorted((g.degree, float(g.action)) for g in N.generators) == [(-3, -math.pi), (-2, 0.0)]
    # the homological view: the same arrows now lower degree and action
    assert N.differential == {("b", "a"): 1}
    back = chainalg.negate(N)
    assert back.generators == pair(2).generators


# ------------------------------------------------------------ maps and towers


def test_identity_truncation_map():
    C = ball(1, pi(Fraction(5, 2)))
    f = chainalg.truncation_map(C, (None, pi(3)), (None, pi(3)))
    assert f.is_chain_map()
    assert f.induced_ranks() == {5: 1}


def test_truncation_map_to_lower_window():
    # source H = Z in degree 3, target H = Z in degree 1: no degree is shared
    C = ball(1, pi(Fraction(3, 2)))
    f = chainalg.truncation_map(C, (None, ActionValue(real=math.pi + 0.1)), (None, ActionValue(real=0.1)))
    assert chainalg.homology(f.source) == HomologyTable.free({3: 1})
    assert chainalg.homology(f.target) == HomologyTable.free({1: 1})
    assert f.induced_ranks() == {}


def test_truncation_map_past_everything_is_zero():
    C = ball(1, pi(Fraction(5, 2)))
    f = chainalg.truncation_map(C, (pi(10), None), (pi(10), pi(11)))
    assert f.matrix == {} and f.induced_ranks() == {}


def test_truncation_map_order_checked():
    with pytest.raises(ComplexError):
        chainalg.truncation_map(pair(), (None, pi(1)), (None, pi(2)))


def test_ball_tower_decimal_slopes_limit_zero():
    lams = [ActionValue(real=k * math.pi + 0.1) for k in range(1, 6)]
    Cs = [ball(1, lam) for lam in lams]
    tables = [chainalg.homology(C) for C in Cs]
    maps = [chainalg.truncation_map(big, (None, None), (None, lam)).induced_ranks() for lam, big in zip(lams, Cs[1:])]
    lim = chainalg.tower_limit(tables, maps, "inverse", degrees=range(0, 8))
    assert lim.table.is_zero() and lim.stabilized


def test_constant_tower():
    H = HomologyTable.free({2: 1, 4: 3})
    lim = chainalg.tower_limit([H, H, H], [{2: 1, 4: 3}] * 2, "direct")
    assert lim.table == H and set(lim.status.values()) == {"stable"}


def test_alternating_tower_not_stabilized():
    one, zero = HomologyTable.free({1: 1}), HomologyTable()
    lim = chainalg.tower_limit([one, zero, one, zero, one], [{}] * 4)
    assert lim.status[1] == "not stabilized" and lim.table.is_zero()


def test_tower_shape_errors():
    with pytest.raises(ComplexError):
        chainalg.tower_limit([HomologyTable()], [])
    with pytest.raises(ComplexError):
        chainalg.tower_limit([HomologyTable()] * 3, [{}])


# ------------------------------------------------------------ products


def test_tensor_with_unit():
    A = ball(2, pi(Fraction(5, 2)))
    T = chainalg.tensor(A, chainalg.unit_complex())
    assert chainalg.homology(T) == chainalg.homology(A)
    assert sorted((g.degree, g.action) for g in T.generators) == sorted((g.degree, g.action) for g in A.generators)


@given(seeds)
@settings(max_examples=50)
def test_tensor_is_a_filtered_complex(seed):
    rng = np.random.default_rng(seed)
    assert chainalg.validate(chainalg.tensor(random_complex(rng), random_complex(rng))).ok


def test_kunneth_ellipsoids_over_q():
    E = domains.ellipsoid_complex(domains.EllipsoidSpec.of(1), pi(Fraction(5, 2)))
    rep = chainalg.kunneth_check(E, E, 0)
    assert rep.ok and rep.lhs == {10: 1}


def test_ball_tensor_window():
    B = ball(1, pi(Fraction(3, 2)))
    T = chainalg.tensor(B, B)
    # direct homology of the truncated product vs rank products of the factors
    direct = chainalg.betti(chainalg.truncate(T, None, None))
    assert direct == {6: 1}


@given(seeds, st.sampled_from([0, 2, 3]))
@settings(max_examples=50)
def test_kunneth_random(seed, p):
    rng = np.random.default_rng(seed)
    assert chainalg.kunneth_check(random_complex(rng), random_complex(rng), p).ok


# ------------------------------------------------------------ Morse


def test_sphere_height_function():
    pts = [CriticalPoint("min", 0, 0.0), CriticalPoint("max", 2, 1.0)]
    H = chainalg.morse_homology(chainalg.morse_complex(pts, {}))
    assert H == HomologyTable.free({0: 1, 2: 1})


def test_torus():
    from symphom.verify import torus_fixture

    H = chainalg.morse_homology(chainalg.morse_complex(*torus_fixture()))
    assert H == HomologyTable.free({0: 1, 1: 2, 2: 1})


def test_real_projective_plane_torsion():
    # one cell per dimension, boundary 2 from the 2-cell: H_1 = Z/2
    pts = [CriticalPoint("p", 0, 0.0), CriticalPoint("q", 1, 1.0), CriticalPoint("r", 2, 2.0)]
    C = chainalg.morse_complex(pts, {("r", "q"): [1, 1], ("q", "p"): [1, -1]})
    H = chainalg.morse_homology(C)
    # cohomological storage puts the torsion one degree up; read back as H^2 = Z/2 after negation
    assert H[0] == Group(1) and H.total_rank() == 1
    assert any(g.torsion == (2,) for g in H.groups.values())


def test_inconsistent_counts_rejected():
    pts = [CriticalPoint("a", 0, 0.0), CriticalPoint("b", 1, 1.0), CriticalPoint("c", 2, 2.0)]
    with pytest.raises(ComplexError, match="d\\^2"):
        chainalg.morse_complex(pts, {("b", "a"): 1, ("c", "b"): 1})


def test_morse_count_checks():
    pts = [CriticalPoint("a", 0, 0.0), CriticalPoint("c", 2, 2.0)]
    with pytest.raises(ComplexError):
        chainalg.morse_complex(pts, {("c", "a"): 1})
    with pytest.raises(ComplexError):
        chainalg.morse_complex(pts, {("c", "x"): 1})
