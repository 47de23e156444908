"""Tests for period validation, transcendental lattices, endomorphism
fields and Hodge tensor classes."""

from fractions import Fraction

import pytest

from hodgekit.errors import IsotropyFails, PositivityFails, WrongSignature
from hodgekit.exactmath import Matrix, inverse, nf_create, nf_embeddings, solve_linear
from hodgekit.hodge import (CM, SO_E, TOTALLY_REAL, U_E, endomorphism_field,
                            hodge_classes_tensor_square, is_hodge_substructure,
                            transcendental_lattice, validate_period)
from hodgekit.qforms import QuadraticSpace

F = Fraction


def qspace(rows):
    return QuadraticSpace(Matrix([[F(c) for c in r] for r in rows]))


def gaussian_period():
    field = nf_create([1, 0, 1])
    emb = nf_embeddings(field)[1]
    sp = qspace([[1, 0], [0, 1]])
    omega = (field.element([1, 0]), field.element([0, 1]))
    return validate_period(sp, field, emb, omega)


def sqrt2i_period(padded=False):
    field = nf_create([9, 0, -2, 0, 1])
    emb = nf_embeddings(field)[3]  # theta = sqrt2 + i
    sqrt2 = [0, F(5, 6), 0, F(-1, 6)]
    i_el = [0, F(1, 6), 0, F(1, 6)]
    if padded:
        sp = qspace([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
        omega = (field.element(sqrt2), field.element(i_el), field.one(),
                 field.zero())
    else:
        sp = qspace([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
        omega = (field.element(sqrt2), field.element(i_el), field.one())
    return validate_period(sp, field, emb, omega)


def quartic_cm_period():
    """Full 4-dimensional lattice over Q(sqrt2, i): two hyperbolic blocks
    carrying the trace transfer of sqrt2 * (standard form on E^2); the
    endomorphism field is the whole quartic field, a CM extension of
    Q(sqrt2)."""
    field = nf_create([9, 0, -2, 0, 1])
    emb = nf_embeddings(field)[3]
    th = field.gen()
    sqrt2 = (5 * th - th**3) / 6
    i_el = (th**3 + th) / 6
    sp = qspace([[0, 4, 0, 0], [4, 0, 0, 0], [0, 0, 0, 4], [0, 0, 4, 0]])
    omega = (field.one(), sqrt2 / 2, i_el, i_el * sqrt2 / 2)
    return validate_period(sp, field, emb, omega)


def test_validate_period_gaussian():
    p = gaussian_period()
    assert p.dim == 2


def test_validate_period_quartic():
    p = sqrt2i_period()
    assert p.dim == 3


def test_validate_period_rejects_rational_isotropic():
    field = nf_create([1, 0, 1])
    emb = nf_embeddings(field)[1]
    sp = qspace([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    omega = (field.one(), field.zero(), field.one())
    with pytest.raises(PositivityFails):
        validate_period(sp, field, emb, omega)


def test_validate_period_rejects_nonisotropic():
    field = nf_create([1, 0, 1])
    emb = nf_embeddings(field)[1]
    sp = qspace([[1, 0], [0, 1]])
    omega = (field.one(), field.zero())
    with pytest.raises(IsotropyFails) as err:
        validate_period(sp, field, emb, omega)
    assert err.value.witness == field.one()


def test_validate_period_rejects_wrong_signature():
    field = nf_create([1, 0, 1])
    emb = nf_embeddings(field)[1]
    sp = qspace([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    omega = (field.one(), field.gen(), field.zero())
    with pytest.raises(WrongSignature):
        validate_period(sp, field, emb, omega)


def test_transcendental_lattice_gaussian():
    h = transcendental_lattice(gaussian_period())
    assert h.dim_t == 2
    assert h.alg.rows == 0
    assert h.trans == Matrix.identity(2)


def test_transcendental_lattice_quartic():
    h = transcendental_lattice(sqrt2i_period())
    assert h.dim_t == 3
    assert h.alg.rows == 0


def test_transcendental_lattice_padded_block():
    h = transcendental_lattice(sqrt2i_period(padded=True))
    assert h.dim_t == 3
    assert h.alg.entries == ((F(0), F(0), F(0), F(1)),)


def test_lattice_independent_of_power_basis():
    # re-present the quartic period over theta' = 2*theta: same complex
    # structure, so the same rational lattice must come out
    h1 = transcendental_lattice(sqrt2i_period())
    field2 = nf_create([144, 0, -8, 0, 1])  # minimal polynomial of 2*theta
    emb2 = nf_embeddings(field2)[3]
    # sqrt2 = (5 t - t^3/4)/12, i = (t + t^3/4)/12 for t = 2*theta
    sqrt2 = [0, F(5, 12), 0, F(-1, 48)]
    i_el = [0, F(1, 12), 0, F(1, 48)]
    sp = qspace([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    omega = (field2.element(sqrt2), field2.element(i_el), field2.one())
    h2 = transcendental_lattice(validate_period(sp, field2, emb2, omega))
    assert h1.trans == h2.trans


def test_is_hodge_substructure():
    h = transcendental_lattice(sqrt2i_period(padded=True))
    assert is_hodge_substructure(h, h.trans)
    assert is_hodge_substructure(h, h.alg)
    assert is_hodge_substructure(h, Matrix.identity(4))
    assert is_hodge_substructure(h, Matrix.zeros(0, 4))
    # a proper nonzero subspace of T is not a substructure
    assert not is_hodge_substructure(h, Matrix(((F(1), F(0), F(0), F(0)),)))
    # T-part plus an algebraic line is fine only if the T-part is all of T
    mixed = Matrix(((F(1), F(0), F(0), F(1)),))
    assert not is_hodge_substructure(h, mixed)


def test_endomorphism_field_gaussian():
    h = transcendental_lattice(gaussian_period())
    ef = endomorphism_field(h)
    assert ef.e == 2
    assert ef.classification == CM
    assert ef.mt.family == U_E and ef.mt.rank == 1
    assert ef.primitive_minpoly == (F(1), F(0), F(1))
    rot = Matrix(((F(0), F(1)), (F(-1), F(0))))
    assert rot in ef.basis or -rot in ef.basis or any(
        b == rot for b in ef.basis)
    # E_0 is Q: one fixed dimension
    assert len(ef.fixed_subalgebra) == 1


def test_endomorphism_field_identity_always_present():
    for make in (gaussian_period, sqrt2i_period):
        h = transcendental_lattice(make())
        ef = endomorphism_field(h)
        cols = Matrix(tuple(zip(*(tuple(c for row in b.entries for c in row)
                                  for b in ef.basis))))
        flat_id = tuple(c for row in Matrix.identity(h.dim_t).entries
                        for c in row)
        assert solve_linear(cols, flat_id).particular is not None


def test_endomorphism_field_quartic_totally_real():
    h = transcendental_lattice(sqrt2i_period())
    ef = endomorphism_field(h)
    assert ef.e == 1
    assert ef.classification == TOTALLY_REAL
    assert ef.mt.family == SO_E and ef.mt.rank == 3
    assert len(ef.fixed_subalgebra) == 0
    assert ef.primitive_minpoly == (F(-1), F(1))


def test_endomorphism_field_quartic_cm():
    h = transcendental_lattice(quartic_cm_period())
    assert h.dim_t == 4
    ef = endomorphism_field(h)
    assert ef.e == 4
    assert ef.classification == CM
    assert ef.mt.family == U_E and ef.mt.rank == 1
    # E_0 = Q(sqrt2) has degree 2 = e/2
    assert len(ef.fixed_subalgebra) == 2
    assert len(ef.primitive_minpoly) - 1 == 4


def test_endomorphism_algebra_axioms():
    for make in (gaussian_period, sqrt2i_period, quartic_cm_period):
        h = transcendental_lattice(make())
        ef = endomorphism_field(h)
        gram_t = Matrix(tuple(tuple(h.space.form(u, v) for v in h.trans.entries)
                              for u in h.trans.entries))
        ginv = inverse(gram_t)

        def star(m):
            return ginv * m.transpose() * gram_t

        for a in ef.basis:
            for b in ef.basis:
                assert a * b == b * a
                assert star(a * b) == star(b) * star(a)
            assert star(star(a)) == a
        embs = nf_embeddings(ef.field)
        if ef.classification == TOTALLY_REAL:
            assert all(s.is_real for s in embs)
        else:
            assert all(not s.is_real for s in embs)


def test_hodge_classes_dimension_is_e():
    for make in (gaussian_period, sqrt2i_period, quartic_cm_period):
        h = transcendental_lattice(make())
        ef = endomorphism_field(h)
        classes = hodge_classes_tensor_square(h)
        assert len(classes) == ef.e


def test_hodge_classes_contain_polarization_tensor():
    h = transcendental_lattice(sqrt2i_period())
    classes = hodge_classes_tensor_square(h)
    assert len(classes) == 1
    gram_t = Matrix(tuple(tuple(h.space.form(u, v) for v in h.trans.entries)
                          for u in h.trans.entries))
    qdual = inverse(gram_t)
    lead = None
    for row_c, row_q in zip(classes[0].entries, qdual.entries):
        for c, q in zip(row_c, row_q):
            if q != 0:
                lead = c / q
                break
        if lead is not None:
            break
    assert lead is not None and classes[0] == qdual * lead


def test_hodge_classes_definite_two_dim_nonzero():
    # any valid two-dimensional lattice carries at least the polarization
    h = transcendental_lattice(gaussian_period())
    assert len(hodge_classes_tensor_square(h)) >= 1
