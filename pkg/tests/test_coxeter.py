import itertools
import json
import math
import random

import mpmath
import pytest
from hypothesis import given
import hypothesis.strategies as st

from coxgrowth.coxeter import (INF, CoxeterMatrix, CoxeterMatrixError, are_isomorphic,
                               components, find_isomorphism, gram_matrix, induced,
                               parse_matrix, triangle_matrix)

from conftest import coxeter_matrices

M237 = [[1, 3, 2], [3, 1, 7], [2, 7, 1]]


class TestParse:
    def test_json_list(self):
        m = parse_matrix(json.dumps(M237))
        assert m.rank == 3 and m[1, 2] == 7 and m == triangle_matrix(2, 3, 7)

    def test_json_object_with_inf(self):
        m = parse_matrix('{"rank": 2, "matrix": [[1, "inf"], ["inf", 1]]}')
        assert m[0, 1] == INF

    def test_rank_one(self):
        assert parse_matrix([[1]]).rank == 1

    def test_zero_means_infinity(self):
        assert parse_matrix([[1, 0], [0, 1]])[0, 1] == INF
        assert parse_matrix("1 0\n0 1")[1, 0] == INF

    def test_compact_text(self):
        assert parse_matrix("1 3 2\n3 1 7\n2 7 1") == parse_matrix(M237)
        assert parse_matrix("1 3 2; 3 1 7; 2 7 1") == parse_matrix(M237)

    @pytest.mark.parametrize("bad, msg", [
        ([[1, 3], [4, 1]], "symmetric"),
        ([[2, 3], [3, 1]], "diagonal"),
        ([[1, 1], [1, 1]], ">= 2"),
        ([[1, 3, 2], [3, 1]], "entries, expected"),
        ("[[1, 3], [3", "invalid JSON"),
        ([[1, "x"], ["x", 1]], "bad label"),
    ])
    def test_errors(self, bad, msg):
        with pytest.raises(CoxeterMatrixError, match=msg):
            parse_matrix(bad)

    @given(coxeter_matrices(max_rank=6))
    def test_round_trips(self, m):
        assert parse_matrix(json.dumps(m.to_json())) == m
        assert parse_matrix(m.to_compact()) == m


class TestComponents:
    def test_connected(self):
        comps = components(parse_matrix(M237))
        assert len(comps) == 1 and comps[0][0] == (0, 1, 2)

    def test_two_points(self):
        comps = components(parse_matrix([[1, 2], [2, 1]]))
        assert [c[0] for c in comps] == [(0,), (1,)]

    def test_ehnc13_connected(self):
        from coxgrowth.catalog import get_entry
        m = get_entry("EHNC13").matrix
        assert m.entries[0][:4] == (1, 4, 2, 2)
        assert len(components(m)) == 1

    @given(coxeter_matrices(max_rank=7))
    def test_partition(self, m):
        comps = components(m)
        verts = sorted(v for vs, _ in comps for v in vs)
        assert verts == list(range(m.rank))
        for vs, c in comps:
            assert len(components(c)) == 1
            assert vs == tuple(sorted(vs))
        assert [vs[0] for vs, _ in comps] == sorted(vs[0] for vs, _ in comps)


class TestInduced:
    def test_dihedral_part(self):
        assert induced(parse_matrix(M237), {1, 2}) == parse_matrix([[1, 7], [7, 1]])

    def test_all_and_empty(self):
        m = parse_matrix(M237)
        assert induced(m, range(3)) == m
        assert induced(m, []).rank == 0

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            induced(parse_matrix(M237), [0, 5])

    @given(coxeter_matrices(max_rank=6), st.data())
    def test_valid_submatrix(self, m, data):
        sub = data.draw(st.sets(st.integers(0, m.rank - 1)))
        s = induced(m, sub)  # construction validates symmetry and labels
        idx = sorted(sub)
        assert all(s[a, b] == m[idx[a], idx[b]] for a in range(s.rank) for b in range(s.rank))


class TestIsomorphism:
    def test_permuted_copy(self):
        m = parse_matrix(M237)
        p = m.permuted((2, 0, 1))
        phi = find_isomorphism(m, p)
        assert phi is not None
        assert all(m[s, r] == p[phi[s], phi[r]] for s in range(3) for r in range(3))

    def test_different_labels(self):
        assert not are_isomorphic(triangle_matrix(2, 3, 7), triangle_matrix(2, 4, 5))

    def test_path_vs_triangle(self):
        path = parse_matrix("1 3 2; 3 1 3; 2 3 1")
        cycle = parse_matrix("1 3 3; 3 1 3; 3 3 1")
        assert not are_isomorphic(path, cycle)

    def test_matches_brute_force(self):
        rng = random.Random(7)
        labels = [2, 2, 3, 3, 4, INF]
        for _ in range(200):
            n = rng.randint(2, 5)
            rows = [[1] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    rows[i][j] = rows[j][i] = rng.choice(labels)
            a = CoxeterMatrix(tuple(map(tuple, rows)))
            if rng.random() < 0.5:
                b = a.permuted(rng.sample(range(n), n))
            else:
                i, j = rng.sample(range(n), 2)
                rows[i][j] = rows[j][i] = rng.choice(labels)
                b = CoxeterMatrix(tuple(map(tuple, rows))).permuted(rng.sample(range(n), n))
            brute = any(all(a[s, r] == b[p[s], p[r]] for s in range(n) for r in range(n))
                        for p in itertools.permutations(range(n)))
            assert are_isomorphic(a, b) == brute

    @given(coxeter_matrices(max_rank=6), st.randoms())
    def test_reflexive_symmetric_permutation_invariant(self, m, rnd):
        perm = list(range(m.rank))
        rnd.shuffle(perm)
        p = m.permuted(perm)
        assert are_isomorphic(m, m)
        assert are_isomorphic(m, p) and are_isomorphic(p, m)


class TestGram:
    def test_a2(self):
        B = gram_matrix(parse_matrix([[1, 3], [3, 1]]))
        assert B == [[1, -0.5], [-0.5, 1]]

    def test_infinite_label(self):
        assert gram_matrix(parse_matrix([[1, 0], [0, 1]])) == [[1, -1], [-1, 1]]

    def test_237_entries(self):
        B = gram_matrix(parse_matrix(M237), 50)
        assert B[0][2] == 0 and B[0][1] == -0.5
        with mpmath.workdps(50):
            cos7 = mpmath.mpf("0.900968867902419126236102319507445051165919162")
            assert abs(B[1][2] + cos7) < mpmath.mpf(10) ** -45
        assert abs(float(B[1][2]) + math.cos(math.pi / 7)) < 1e-15

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            gram_matrix(parse_matrix(M237), 10)

    @given(coxeter_matrices(max_rank=6), st.sampled_from([15, 30, 60]))
    def test_exact_diagonal_and_symmetry(self, m, prec):
        B = gram_matrix(m, prec)
        for i in range(m.rank):
            assert B[i][i] == 1
            for j in range(m.rank):
                assert B[i][j] == B[j][i]
                assert -1 <= B[i][j] <= 0 or i == j
