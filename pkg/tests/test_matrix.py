"""Polynomial matrices: evaluation, determinant, characteristic data."""

import numpy as np
import pytest

from spectral_patch import (
    CharData,
    ConstMatrix,
    DegreeTooLarge,
    Poly,
    PolyMatrix,
    RankMismatch,
    RankTooLarge,
    Singular,
    char_poly,
    conjugate,
    hitchin_map,
    mat_det,
    mat_eval,
)
from spectral_patch.matrix import poly_grid_det

from oracles import det2


Z = Poly([0.0, 1.0])


def pm(rows):
    return PolyMatrix(
        [
            [e if isinstance(e, Poly) else Poly.constant(e) for e in row]
            for row in rows
        ]
    )


def random_polymatrix(rng, rank, deg, scale=1.0):
    rows = []
    for _ in range(rank):
        row = []
        for _ in range(rank):
            d = int(rng.integers(0, deg + 1))
            cs = scale * (rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1))
            row.append(Poly(cs.tolist()))
        rows.append(row)
    return PolyMatrix(rows)


def random_invertible(rng, rank, min_det=0.4):
    while True:
        arr = (rng.normal(size=(rank, rank)) + 1j * rng.normal(size=(rank, rank))) / np.sqrt(2)
        if abs(np.linalg.det(arr)) >= min_det:
            return ConstMatrix(arr.tolist())


def char_values(ch, lam, z):
    out = lam ** ch.rank
    for k in range(ch.rank):
        out += ch.coeffs[k](z) * lam**k
    return out


class TestConstruction:
    def test_rank_cap(self):
        with pytest.raises(RankTooLarge):
            PolyMatrix([[Poly.one()] * 5 for _ in range(5)])

    def test_square_required(self):
        with pytest.raises(ValueError):
            PolyMatrix([[Poly.one(), Poly.one()]])

    def test_degree_cap(self):
        big = Poly([0.0] * 33 + [1.0])
        with pytest.raises(DegreeTooLarge):
            PolyMatrix([[big]])

    def test_const_roundtrip(self):
        c = ConstMatrix([[1.0, 2.0], [3.0, 4.0]])
        m = PolyMatrix.from_const(c)
        assert m.as_const() == c
        assert np.allclose(c.to_numpy(), [[1, 2], [3, 4]])


class TestEval:
    def test_entrywise(self):
        m = pm([[0.0, 1.0], [Z, 0.0]])
        got = mat_eval(m, 4.0)
        assert got == ConstMatrix([[0.0, 1.0], [4.0, 0.0]])

    def test_at_zero_gives_constant_terms(self):
        m = pm([[Poly([2.0, 5.0]), 1.0], [Z, Poly([-1.0, 0.0, 3.0])]])
        got = mat_eval(m, 0.0)
        assert got == ConstMatrix([[2.0, 1.0], [0.0, -1.0]])

    def test_constant_matrix_fixed(self):
        m = pm([[1.0, 2.0], [3.0, 4.0]])
        assert mat_eval(m, 17.3) == ConstMatrix([[1.0, 2.0], [3.0, 4.0]])


class TestDeterminant:
    def test_hand_cofactor(self):
        m = pm([[0.0, 1.0], [Z, 0.0]])
        assert mat_det(m).coeffs == (0j, -1 + 0j)

    def test_identity(self):
        m = PolyMatrix.from_const(ConstMatrix.identity(3))
        assert mat_det(m).coeffs == (1 + 0j,)

    def test_diagonal(self):
        m = pm([[Poly([-1.0, 1.0]), 0.0], [0.0, Poly([1.0, 1.0])]])
        assert mat_det(m).coeffs == (-1 + 0j, 0j, 1 + 0j)

    def test_eval_commutes_with_det(self, rng):
        for _ in range(40):
            rank = int(rng.integers(1, 4))
            m = random_polymatrix(rng, rank, 3)
            z = complex(rng.normal(), rng.normal())
            lhs = mat_det(m)(z)
            rhs = np.linalg.det(mat_eval(m, z).to_numpy())
            assert abs(lhs - rhs) <= 1e-7 * (1.0 + abs(rhs))

    def test_grid_det_matches_numeric(self, rng):
        for _ in range(10):
            rows = [
                [Poly([complex(rng.normal(), rng.normal())]) for _ in range(3)]
                for _ in range(3)
            ]
            want = np.linalg.det(
                np.array([[p.coeffs[0] for p in row] for row in rows])
            )
            got = poly_grid_det(rows)
            assert abs(got(0.0) - want) <= 1e-9 * (1.0 + abs(want))


class TestCharPoly:
    def test_off_diagonal_example(self):
        ch = char_poly(pm([[0.0, 1.0], [Z, 0.0]]))
        assert ch.rank == 2
        assert ch.coeffs[1].is_zero
        assert ch.coeffs[0].coeffs == (0j, -1 + 0j)

    def test_constant_diagonal(self):
        ch = char_poly(pm([[3.0, 0.0], [0.0, -2.0]]))
        assert ch.coeffs[1].coeffs == (-1 + 0j,)
        assert ch.coeffs[0].coeffs == (-6 + 0j,)

    def test_two_by_two_arithmetic(self):
        # trace 2, determinant 5 read off by hand
        a = pm([[1.0, -2.0], [2.0, 1.0]])
        assert det2([[1.0, -2.0], [2.0, 1.0]]) == 5.0
        ch = char_poly(a)
        assert ch.coeffs[1].coeffs == (-2 + 0j,)
        assert ch.coeffs[0].coeffs == (5 + 0j,)

    def test_lambda_coeffs_at(self):
        ch = char_poly(pm([[0.0, 1.0], [Z, 0.0]]))
        assert ch.lambda_coeffs_at(4.0) == [-4 + 0j, 0j, 1 + 0j]

    def test_matches_cofactor_route(self, rng):
        # interpolate det(tI - m) through poly_grid_det at integer nodes
        for _ in range(30):
            rank = int(rng.integers(2, 4))
            m = random_polymatrix(rng, rank, 2)
            ch = char_poly(m)
            nodes = list(range(rank + 1))
            dets = []
            for t in nodes:
                grid = [
                    [
                        (Poly.constant(t) if i == j else Poly.zero()) - m.entries[i][j]
                        for j in range(rank)
                    ]
                    for i in range(rank)
                ]
                dets.append(poly_grid_det(grid))
            width = max(d.degree for d in dets) + 1
            vander = np.vander(np.array(nodes, dtype=np.complex128), rank + 1, increasing=True)
            data = np.zeros((len(nodes), width), dtype=np.complex128)
            for r, d in enumerate(dets):
                for c_idx, c in enumerate(d.coeffs):
                    data[r, c_idx] = c
            lam_coeffs = np.linalg.solve(vander, data)
            scale = max(1.0, float(np.max(np.abs(lam_coeffs))))
            for k in range(rank):
                want = lam_coeffs[k]
                got = np.zeros(width, dtype=np.complex128)
                for c_idx, c in enumerate(ch.coeffs[k].coeffs):
                    got[c_idx] = c
                assert np.max(np.abs(got - want)) <= 1e-9 * scale
            lead = lam_coeffs[rank]
            lead[0] -= 1.0
            assert np.max(np.abs(lead)) <= 1e-9 * scale

    def test_char_values_match_numeric_det(self, rng):
        for _ in range(40):
            rank = int(rng.integers(1, 5))
            m = random_polymatrix(rng, rank, 3)
            ch = char_poly(m)
            lam = complex(rng.normal(), rng.normal())
            z = complex(rng.normal(), rng.normal())
            a = mat_eval(m, z).to_numpy()
            want = np.linalg.det(lam * np.eye(rank) - a)
            got = char_values(ch, lam, z)
            assert abs(got - want) <= 1e-7 * (1.0 + abs(want))


class TestConjugate:
    def test_sign_flip(self):
        a = pm([[1.0, -2.0], [2.0, 1.0]])
        p = ConstMatrix([[-1.0, 0.0], [0.0, 1.0]])
        b = conjugate(a, p)
        want = pm([[1.0, 2.0], [-2.0, 1.0]])
        for i in range(2):
            for j in range(2):
                assert b.entries[i][j].approx_eq(want.entries[i][j], 1e-12)

    def test_identity_fixes(self):
        m = pm([[Z, 1.0], [0.0, Poly([1.0, 2.0])]])
        got = conjugate(m, ConstMatrix.identity(2))
        for i in range(2):
            for j in range(2):
                assert got.entries[i][j].approx_eq(m.entries[i][j], 1e-12)

    def test_scalar_center(self, rng):
        m = pm([[3.5, 0.0], [0.0, 3.5]])
        p = random_invertible(rng, 2)
        got = conjugate(m, p)
        assert got.entries[0][0].approx_eq(Poly.constant(3.5), 1e-9)
        assert got.entries[1][1].approx_eq(Poly.constant(3.5), 1e-9)
        assert abs(got.entries[0][1](0.0)) <= 1e-9
        assert abs(got.entries[1][0](0.0)) <= 1e-9

    def test_singular_rejected(self):
        a = pm([[1.0, 0.0], [0.0, 1.0]])
        with pytest.raises(Singular):
            conjugate(a, ConstMatrix([[1.0, 1.0], [1.0, 1.0]]))

    def test_rank_mismatch(self):
        a = pm([[1.0, 0.0], [0.0, 1.0]])
        with pytest.raises(RankMismatch):
            conjugate(a, ConstMatrix.identity(3))


class TestHitchinMap:
    def test_named_like_char_poly(self):
        m = pm([[0.0, Poly([1.0, 0.0, -1.0])], [1.0, 0.0]])
        ch = hitchin_map(m)
        assert ch.coeffs[1].is_zero
        # det = 0*0 - (1 - z^2)*1 = z^2 - 1
        assert ch.coeffs[0].coeffs == (-1 + 0j, 0j, 1 + 0j)

    def test_zero_matrix(self):
        ch = hitchin_map(pm([[0.0, 0.0], [0.0, 0.0]]))
        assert ch.coeffs[0].is_zero and ch.coeffs[1].is_zero

    def test_conjugation_invariance(self, rng):
        for _ in range(100):
            rank = int(rng.integers(2, 4))
            m = random_polymatrix(rng, rank, 3)
            p = random_invertible(rng, rank)
            a = hitchin_map(m)
            b = hitchin_map(conjugate(m, p))
            for k in range(rank):
                assert a.coeffs[k].approx_eq(b.coeffs[k], 1e-7 * _coeff_scale(a))

    def test_trace_det_order_matters(self):
        # tr = 2, det = 5: swapping their slots changes the data
        straight = CharData(2, (Poly.constant(5.0), Poly.constant(-2.0)))
        swapped = CharData(2, (Poly.constant(-2.0), Poly.constant(5.0)))
        assert straight.coeffs != swapped.coeffs


def _coeff_scale(ch):
    mags = [abs(c) for p in ch.coeffs for c in p.coeffs]
    return max(1.0, max(mags, default=0.0))
