from itertools import permutations

import pytest
from hypothesis import given

from conftest import ROTATED, SURVEY, admissible, brute_admissible, cycles
from nakayama import oracle, zmatrix
from nakayama.errors import (
    InadmissibleSequence,
    LineUnsupported,
    MisplacedOne,
    ParseError,
)
from nakayama.kupisch import (
    Kind,
    KupischSeries,
    cartan,
    dual_lengths,
    is_normalized,
    is_self_injective,
    is_theta_perfect,
    normalize,
    opposite,
    parse_sequence,
    phi,
    rotate,
    theta,
    theta_data,
)
from nakayama.report import admissible_sequences


class TestParse:
    def test_cycle(self):
        a = parse_sequence("3,4,4")
        assert a.c == (3, 4, 4) and a.kind is Kind.CYCLE

    def test_simple_algebra(self):
        a = parse_sequence("1")
        assert a.c == (1,) and a.kind is Kind.LINE

    def test_whitespace_ignored(self):
        assert parse_sequence(" 2, 3 ,3 ").c == (2, 3, 3)

    def test_misplaced_one(self):
        with pytest.raises(MisplacedOne):
            parse_sequence("3,1,3")

    @pytest.mark.parametrize("text", ["", "3,,4", "a,b", "3;4", "-2,3", "0"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_sequence(text)

    @pytest.mark.parametrize("text", ["2,4", "5,3", "2,2,5", "3,2,1,1"])
    def test_inadmissible(self, text):
        with pytest.raises(InadmissibleSequence):
            parse_sequence(text)

    def test_single_entry_cycle(self):
        assert parse_sequence("5").kind is Kind.CYCLE


def test_enumeration_matches_brute_force_box():
    for n in range(1, 5):
        fast = sorted(a.c for a in admissible_sequences(n, 7))
        assert fast == sorted(a.c for a in brute_admissible(n, 7))


class TestNormalize:
    def test_rotation_to_minimum(self, K):
        b, off = normalize(K(4, 4, 3))
        assert (b.c, off) == ((3, 4, 4), 2)
        assert is_normalized(b)

    def test_all_equal(self, K):
        assert normalize(K(5, 5, 5)) == (K(5, 5, 5), 0)

    def test_lexicographic_tie_break(self, K):
        b, off = normalize(K(3, 2, 3, 2))
        assert (b.c, off) == ((2, 3, 2, 3), 1)

    def test_line_unchanged(self, K):
        assert normalize(K(3, 2, 1)) == (K(3, 2, 1), 0)

    @given(admissible)
    def test_properties(self, a):
        b, off = normalize(a)
        assert is_normalized(b)
        assert sorted(b.c) == sorted(a.c)
        assert normalize(b) == (b, 0)
        assert rotate(a, off) == b

    @given(cycles)
    def test_smallest_normalized_rotation(self, a):
        b, _ = normalize(a)
        rots = [rotate(a, k) for k in range(a.n)]
        assert b.c == min(r.c for r in rots if is_normalized(r))


class TestSelfInjective:
    @pytest.mark.parametrize("c,expected", [((4, 4, 4), True), ((3, 4, 4), False),
                                            ((1,), True), ((2, 1), False), ((6,), True)])
    def test_examples(self, K, c, expected):
        assert is_self_injective(K(*c)) is expected


@pytest.mark.parametrize("n,x,expected", [(3, 5, 2), (3, 6, 3), (7, 7, 7), (1, 9, 1), (4, 0, 4)])
def test_phi(n, x, expected):
    assert phi(n, x) == expected


class TestTheta:
    @pytest.mark.parametrize("c,expected", [((3, 4, 4), [1, 3, 1]),
                                            ((2, 3, 3), [3, 2, 3]),
                                            ((7,), [1])])
    def test_values(self, K, c, expected):
        a = K(*c)
        assert [theta(a, j) for j in range(1, a.n + 1)] == expected

    def test_line_rejected(self, K):
        with pytest.raises(LineUnsupported):
            theta(K(2, 1), 1)
        with pytest.raises(LineUnsupported):
            theta_data(K(1))

    @given(cycles)
    def test_socle_of_projective(self, a):
        # soc(P_j) = S_{theta(j)-1}, read off the explicit composition series
        for j in range(1, a.n + 1):
            assert oracle.projective_factors(a, j)[-1] == phi(a.n, theta(a, j) - 1)

    def test_data_344(self, K):
        td = theta_data(K(3, 4, 4))
        assert (td.d, td.regular, td.theta_on_regular) == (2, (1,), {1: 1})

    def test_data_233(self, K):
        td = theta_data(K(2, 3, 3))
        assert (td.d, td.regular, td.theta_on_regular) == (1, (2, 3), {2: 2, 3: 3})
        assert td.period == 1

    def test_data_self_injective(self, K):
        td = theta_data(K(4, 4, 4))
        assert td.d == 0 and td.regular == (1, 2, 3)
        # theta(j) = j + 4 = j + 1 mod 3: one 3-cycle
        assert td.cycle_length == {1: 3, 2: 3, 3: 3} and td.period == 3

    @given(cycles)
    def test_data_invariants(self, a):
        td = theta_data(a)
        t = lambda S: {theta(a, j) for j in S}
        images = [set(range(1, a.n + 1))]
        for _ in range(a.n + 1):
            images.append(t(images[-1]))
        assert images[td.d] == set(td.regular) == images[td.d + 1]
        assert td.d == 0 or images[td.d - 1] != images[td.d]
        assert sorted(td.theta_on_regular.values()) == list(td.regular)
        assert 0 <= td.d <= a.n - 1
        assert (td.d == 0) == is_self_injective(a)


class TestThetaPerfect:
    def test_233(self, K):
        a = K(2, 3, 3)
        assert is_theta_perfect(a, 2) and not is_theta_perfect(a, 3)
        assert not is_theta_perfect(a, 1)  # not regular

    def test_566(self, K):
        assert is_theta_perfect(K(5, 6, 6), 2)

    def test_344(self, K):
        a = K(3, 4, 4)
        # 1 is regular and fixed by theta; compare l(P_1) with the row sum of C
        assert is_theta_perfect(a, 1) == (a.length(1) == sum(a.cartan[0]))


class TestCartan:
    def test_223(self, K):
        C = cartan(K(2, 2, 3))
        assert C == ((1, 0, 1), (1, 1, 1), (0, 1, 1))
        assert zmatrix.determinant(C) == 1

    def test_233(self, K):
        C = cartan(K(2, 3, 3))
        assert C == ((1, 1, 1), (1, 1, 1), (0, 1, 1))
        assert zmatrix.determinant(C) == 0

    def test_simple(self, K):
        assert cartan(K(1)) == ((1,),)

    @given(admissible)
    def test_matches_factor_lists(self, a):
        assert [list(r) for r in cartan(a)] == oracle.brute_cartan(a)

    @given(admissible)
    def test_column_sums(self, a):
        C = cartan(a)
        assert [sum(C[j][k] for j in range(a.n)) for k in range(a.n)] == list(a.c)

    @pytest.mark.parametrize("c", [(3, 3, 3), (5, 5), (2, 2, 2, 2), (7, 7, 7, 7)])
    def test_self_injective_circulant(self, K, c):
        C, n = cartan(K(*c)), len(c)
        assert all(C[j][k] == C[(j + 1) % n][(k + 1) % n] for j in range(n) for k in range(n))


class TestDualLengths:
    def test_233(self, K):
        assert dual_lengths(K(2, 3, 3)) == (3, 3, 2)

    def test_566(self, K):
        assert dual_lengths(K(5, 6, 6)) == (6, 6, 5)

    @pytest.mark.parametrize("c", [(4, 4, 4), (2, 2), (9,)])
    def test_self_injective(self, K, c):
        assert dual_lengths(K(*c)) == c


def _transpose_up_to_relabel(C, D):
    n = len(C)
    return any(all(D[p[i]][p[j]] == C[j][i] for i in range(n) for j in range(n))
               for p in permutations(range(n)))


class TestOpposite:
    def test_233(self, K):
        b = opposite(K(2, 3, 3))
        assert sorted(b.c) == [2, 3, 3]
        assert _transpose_up_to_relabel(cartan(K(2, 3, 3)), cartan(b))

    @pytest.mark.parametrize("c", [(3, 3, 3), (1,), (6,), (4, 4)])
    def test_self_injective(self, K, c):
        assert opposite(K(*c)) == K(*c)

    @pytest.mark.parametrize("a", ROTATED[::7], ids=str)
    def test_cartan_transpose(self, a):
        b = opposite(a)
        assert _transpose_up_to_relabel(cartan(a), cartan(b))
        assert zmatrix.determinant(cartan(b)) == zmatrix.determinant(cartan(a))
        assert opposite(b) == normalize(a)[0]
        assert b.kind is a.kind


def test_survey_sequences_are_normalized():
    assert all(is_normalized(a) for a in SURVEY)
