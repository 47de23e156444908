"""Tests for Pfaffians, k-symplectic verification, Clifford operators
and the divisibility bounds."""

from fractions import Fraction
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgekit.errors import (BasePointIsotropic, OddDimension, TooLarge,
                             ValidationError)
from hodgekit.exactmath import Matrix, det
from hodgekit.exactmath.mpoly import mp_const, mp_eval
from hodgekit.ksympl import (CliffordResult, KSymplecticCandidate,
                             check_torus, clifford_operators,
                             divisibility_bound, pfaffian, subvariety_bound,
                             torus_bound, verify_k_symplectic)

F = Fraction


def fmat(rows):
    return Matrix([[F(c) for c in r] for r in rows])


I_L = fmat([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
J_L = fmat([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]])
K_L = fmat([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])


def quaternion_candidate():
    return KSymplecticCandidate((I_L, J_L, K_L))


def doubled_candidate():
    def blockdiag(m):
        n = m.rows
        rows = []
        for i in range(n):
            rows.append(tuple(m.entries[i]) + (F(0),) * n)
        for i in range(n):
            rows.append((F(0),) * n + tuple(m.entries[i]))
        return Matrix(rows)
    return KSymplecticCandidate((blockdiag(I_L), blockdiag(J_L), blockdiag(K_L)))


def const_entries(m, nvars=1):
    return [[mp_const(nvars, c) if c != 0 else {} for c in row]
            for row in m.entries]


def test_pfaffian_2x2():
    p = {(1,): F(1)}
    entries = [[{}, p], [{(1,): F(-1)}, {}]]
    form = pfaffian(entries)
    assert form.as_dict() == {(1,): F(1)}


def test_pfaffian_standard_symplectic_is_one():
    jstd = fmat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    form = pfaffian(const_entries(jstd))
    assert form.as_dict() == {(0,): F(1)}


def test_pfaffian_quaternion_family():
    cand = quaternion_candidate()
    entries = [[_generic(cand, i, j) for j in range(4)] for i in range(4)]
    form = pfaffian(entries)
    assert form.as_dict() == {(2, 0, 0): F(1), (0, 2, 0): F(1), (0, 0, 2): F(1)}


def _generic(cand, i, j):
    out = {}
    for a, psi in enumerate(cand.psis):
        c = psi.entries[i][j]
        if c != 0:
            exp = [0] * cand.k
            exp[a] = 1
            out[tuple(exp)] = c
    return out


def test_pfaffian_rejects_odd_and_large():
    with pytest.raises(OddDimension):
        pfaffian([[{}]])
    big = [[{} for _ in range(10)] for _ in range(10)]
    with pytest.raises(TooLarge):
        pfaffian(big)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_pfaffian_squared_is_det(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 4, 6])
    rows = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = F(rng.randint(-5, 5))
            rows[i][j] = v
            rows[j][i] = -v
    m = Matrix(rows)
    form = pfaffian(const_entries(m))
    val = mp_eval(form.as_dict(), (F(1),))
    assert val * val == det(m)


def test_candidate_construction_rejections():
    with pytest.raises(ValidationError):
        KSymplecticCandidate((I_L, I_L))  # dependent
    with pytest.raises(ValidationError):
        KSymplecticCandidate((Matrix.identity(4),))  # not antisymmetric
    with pytest.raises(TooLarge):
        KSymplecticCandidate((Matrix.zeros(12, 12),))
    with pytest.raises(ValidationError):
        KSymplecticCandidate((Matrix.zeros(4, 4),))  # dependent (zero)


def test_verify_quaternion():
    rep = verify_k_symplectic(quaternion_candidate())
    assert rep.ok
    assert rep.quadric == Matrix.identity(3)
    assert rep.scalar == 1
    assert rep.rank_on_quadric == 2
    assert rep.witness_field_poly == (F(1), F(0), F(1))  # adjoined i


def test_verify_doubled():
    rep = verify_k_symplectic(doubled_candidate())
    assert rep.ok
    assert rep.quadric == Matrix.identity(3)
    assert rep.scalar == 1
    assert rep.rank_on_quadric == 4


def test_verify_k1_rejected():
    jstd = fmat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    rep = verify_k_symplectic(KSymplecticCandidate((jstd,)))
    assert not rep.ok
    assert rep.failure_reason == "NotQuadricPower"


def test_verify_degenerate_pfaffian():
    # both forms live on the first three coordinates only, so every
    # combination is singular
    a = fmat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    b = fmat([[0, 0, 1, 0], [0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]])
    rep = verify_k_symplectic(KSymplecticCandidate((a, b)))
    assert not rep.ok
    assert rep.failure_reason == "NotGenericallySymplectic"


def test_verify_two_form_subfamily():
    # (omega_I, omega_J): Pfaffian a^2 + b^2, one Clifford generator
    cand = KSymplecticCandidate((I_L, J_L))
    rep = verify_k_symplectic(cand)
    assert rep.ok
    assert rep.quadric == Matrix.identity(2)
    cliff = clifford_operators(cand, rep, (1, 0))
    assert len(cliff.operators) == 1
    assert cliff.squares == (F(-1),)


def test_clifford_quaternion():
    cand = quaternion_candidate()
    rep = verify_k_symplectic(cand)
    cliff = clifford_operators(cand, rep, (1, 0, 0))
    assert isinstance(cliff, CliffordResult)
    a1, a2 = cliff.operators
    ident = Matrix.identity(4)
    assert a1 * a1 == ident * F(-1)
    assert a2 * a2 == ident * F(-1)
    assert a1 * a2 + a2 * a1 == Matrix.zeros(4, 4)
    assert cliff.squares == (F(-1), F(-1))


def test_clifford_doubled():
    cand = doubled_candidate()
    rep = verify_k_symplectic(cand)
    cliff = clifford_operators(cand, rep, (1, 0, 0))
    assert cliff.operators[0].rows == 8
    assert cliff.squares == (F(-1), F(-1))


def test_clifford_base_point_isotropic():
    cand = quaternion_candidate()
    rep = verify_k_symplectic(cand)
    with pytest.raises(BasePointIsotropic):
        clifford_operators(cand, rep, (0, 0, 0))


def test_clifford_relations_fail_on_imposter():
    # a family that is not k-symplectic, presented with a forged report:
    # the runtime relation check refuses it
    from hodgekit.errors import RelationsFail
    from hodgekit.ksympl import KSymplecticReport

    degenerate = fmat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    cand = KSymplecticCandidate((I_L, degenerate))
    forged = KSymplecticReport(True, Matrix.identity(2), F(1), 2, None, None,
                               None)
    with pytest.raises(RelationsFail):
        clifford_operators(cand, forged, (1, 0))


def test_divisibility_bound():
    assert divisibility_bound(1) == 1
    assert divisibility_bound(3) == 2
    assert divisibility_bound(22) == 1024
    with pytest.raises(ValidationError):
        divisibility_bound(0)


def test_accepted_candidates_satisfy_divisibility():
    for cand in (quaternion_candidate(), doubled_candidate()):
        rep = verify_k_symplectic(cand)
        assert rep.ok
        assert cand.v_dim % divisibility_bound(cand.k) == 0


def test_torus_bound():
    assert torus_bound(20) == 1024
    assert torus_bound(0) == 1
    assert torus_bound(3) == 4
    assert check_torus(3, 4)
    assert not check_torus(3, 6)


def test_torus_bound_monotone_and_paired():
    values = [torus_bound(d) for d in range(0, 12)]
    assert values == sorted(values)
    for j in range(1, 6):
        assert torus_bound(2 * j) == torus_bound(2 * j - 1)


def test_subvariety_bound():
    assert subvariety_bound(0, 1) == 2
    assert subvariety_bound(20, 1) == 22
    assert subvariety_bound(3, 2) == 10
    with pytest.raises(ValidationError):
        subvariety_bound(-1, 1)
