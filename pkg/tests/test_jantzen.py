import random
from fractions import Fraction

import numpy as np
import pytest

from hcspectrum.arith import GaussianRational, Poly, RatFunc, RationalInterval, RationalPoint, eval_shifted, ord_at
from hcspectrum.duality import intertwiner, twisted_dual
from hcspectrum.errors import LevelError, OracleSizeError
from hcspectrum.family import build_family
from hcspectrum.ingest.expression import parse_casimir
from hcspectrum.processing.jantzen import (
    RealForm,
    Verdict,
    analyze_at,
    definiteness,
    distinguished_points,
    layer_module,
    real_form_for,
)
from hcspectrum.processing.labels import TRIVIAL_LABEL, classify_all, classify_layer
from hcspectrum.processing.oracle import filtration_oracle, gram_matrix, local_elementary_divisors

FIG1 = parse_casimir("-(1+z)/z")
FIG2 = parse_casimir("(1-z)/z")


def family_and_phi(casimir: RatFunc, bound: int):
    family = build_family(casimir, bound)
    return family, intertwiner(family)


def at(family, phi, x):
    return analyze_at(family, phi, RationalPoint(Fraction(x)))


def definite_levels(analysis) -> list:
    return [n for n, verdict in analysis.verdicts.items() if verdict is not Verdict.INDEFINITE]


def random_real_casimir(rng: random.Random) -> RatFunc:
    a = Fraction(rng.choice([-1, 1]) * rng.randint(1, 5), rng.randint(1, 3))
    b = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    c = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
    return RatFunc(Poly.from_values([a, b, c]), Poly.z())


@pytest.fixture(scope="module")
def fig1():
    return family_and_phi(FIG1, 40)


@pytest.fixture(scope="module")
def fig2():
    return family_and_phi(FIG2, 40)


def test_real_form_and_definiteness():
    assert real_form_for(RationalPoint(Fraction(1, 3))) is RealForm.SU11
    assert real_form_for(RationalPoint(0)) is RealForm.CARTAN_MOTION
    assert real_form_for(RationalPoint(-1)) is RealForm.SU2
    half = GaussianRational(Fraction(1, 2))
    assert definiteness([half, half]) is Verdict.POSITIVE_DEFINITE
    assert definiteness([-half]) is Verdict.NEGATIVE_DEFINITE
    assert definiteness([half, -half]) is Verdict.INDEFINITE
    assert definiteness([GaussianRational(0, 1)]) is Verdict.INDEFINITE


def test_minus_one_ninth_small_window():
    family, phi = family_and_phi(FIG1, 8)
    analysis = at(family, phi, Fraction(-1, 9))
    assert analysis.orders == {-8: 1, -6: 1, -4: 1, -2: 0, 0: 0, 2: 0, 4: 1, 6: 1, 8: 1}
    assert analysis.layers[0] == (-2, 0, 2)
    assert analysis.form_values[4] == Fraction(1, 2)
    assert analysis.form_values[6] == Fraction(-2, 9)
    assert analysis.verdicts == {0: Verdict.POSITIVE_DEFINITE, 1: Verdict.INDEFINITE}
    assert analysis.casimir_value == 8
    top = classify_layer(analysis, 0)
    assert top.label == "SU(2) highest weight 2"
    assert classify_layer(analysis, 1).label is None
    with pytest.raises(LevelError):
        layer_module(analysis, 2)


def test_filtration_is_exhaustive_and_decreasing():
    family, phi = family_and_phi(FIG1, 8)
    analysis = at(family, phi, Fraction(-1, 9))
    assert analysis.filtration(0) == family.window.weights
    assert analysis.filtration(1) == (-8, -6, -4, 4, 6, 8)
    assert analysis.filtration(2) == ()


def test_fig1_distinguished_points(fig1):
    family, phi = fig1
    found = distinguished_points(family, phi, RationalInterval(Fraction(-6, 5), Fraction(1)))
    expected = {RationalPoint(Fraction(-1, (2 * m + 1) ** 2)) for m in range(20)}
    assert set(found) == expected
    assert {RationalPoint(Fraction(-1, (2 * m + 1) ** 2)) for m in range(10)} <= set(found)
    assert found.unanalyzed == ()


def test_fig1_distinguished_quotients_are_su2_representations(fig1):
    family, phi = fig1
    for m in range(20):
        analysis = at(family, phi, Fraction(-1, (2 * m + 1) ** 2))
        assert analysis.layers[0] == tuple(range(-2 * m, 2 * m + 1, 2))
        assert analysis.verdicts[0] is Verdict.POSITIVE_DEFINITE
        assert classify_layer(analysis, 0).label == f"SU(2) highest weight {2 * m}"
        if m <= 18:
            assert definite_levels(analysis) == [0]
            assert analysis.verdicts[1] is Verdict.INDEFINITE


def test_fig1_window_edge_makes_last_tail_definite(fig1):
    family, phi = fig1
    analysis = at(family, phi, Fraction(-1, 39**2))
    assert analysis.layers[1] == (-40, 40)
    assert analysis.verdicts[1] is Verdict.POSITIVE_DEFINITE


def test_fig1_nonnegative_points_are_fully_unitary(fig1):
    family, phi = fig1
    weights = family.window.weights
    motion = at(family, phi, 0)
    assert motion.layers == {0: weights}
    assert motion.verdicts == {0: Verdict.POSITIVE_DEFINITE}
    assert classify_layer(motion, 0).label == "motion-group spherical representation"
    for x in [Fraction(1, n) for n in range(1, 6)] + [Fraction(n, 7) for n in (2, 3, 5)] + [Fraction(1, 1000), Fraction(3, 2)]:
        analysis = at(family, phi, x)
        assert analysis.layers == {0: weights}
        assert analysis.verdicts == {0: Verdict.POSITIVE_DEFINITE}
    assert classify_layer(at(family, phi, 1), 0).label == "spherical unitary principal series, Casimir -2"


def test_fig1_generic_negative_points_have_no_unitary_layer(fig1):
    family, phi = fig1
    rng = random.Random(1521)
    special = {Fraction(-1, (2 * m + 1) ** 2) for m in range(20)}
    checked = 0
    while checked < 50:
        x = Fraction(-rng.randint(1, 1200), 1000)
        if x in special:
            continue
        analysis = at(family, phi, x)
        assert len(analysis.layers) == 1
        assert definite_levels(analysis) == []
        checked += 1


def test_fig2_distinguished_points_small_window():
    family, phi = family_and_phi(FIG2, 10)
    found = distinguished_points(family, phi, RationalInterval(Fraction(0), Fraction(2)))
    assert found.points == tuple(RationalPoint(Fraction(1, n * n)) for n in (9, 7, 5, 3, 1))


def test_fig2_discrete_series_at_distinguished_points(fig2):
    family, phi = fig2
    for m in range(10):
        analysis = at(family, phi, Fraction(1, (2 * m + 1) ** 2))
        tail = tuple(k for k in family.window.weights if abs(k) >= 2 * m + 2)
        assert analysis.layers[1] == tail
        expected = Verdict.NEGATIVE_DEFINITE if m % 2 else Verdict.POSITIVE_DEFINITE
        assert analysis.verdicts[1] is expected
        assert classify_layer(analysis, 1).label == f"discrete series pair, lowest |weight| {2 * m + 2}"
        top = classify_layer(analysis, 0)
        assert top.unitary is (m == 0)
    trivial = classify_layer(at(family, phi, 1), 0)
    assert trivial.weights == (0,)
    assert trivial.label == TRIVIAL_LABEL


def test_fig2_complementary_series_beyond_one(fig2):
    family, phi = fig2
    rng = random.Random(23)
    samples = [Fraction(rng.randint(101, 600), 100) for _ in range(10)]
    for x in samples + [Fraction(2), Fraction(7, 3)]:
        analysis = at(family, phi, x)
        assert analysis.verdicts == {0: Verdict.POSITIVE_DEFINITE}
    label = classify_layer(at(family, phi, 2), 0).label
    assert label == "spherical complementary series, Casimir -1/2"


def test_fig2_nothing_unitary_on_the_compact_side(fig2):
    family, phi = fig2
    rng = random.Random(29)
    samples = [Fraction(-rng.randint(1, 400), rng.randint(1, 100)) for _ in range(30)]
    for x in samples + [Fraction(0), Fraction(-1, 9), Fraction(-1), Fraction(1, 2)]:
        assert definite_levels(at(family, phi, x)) == []


def test_layers_partition_the_window():
    rng = random.Random(12)
    for _ in range(1000):
        family, phi = family_and_phi(random_real_casimir(rng), rng.choice([4, 6, 8]))
        analysis = at(family, phi, Fraction(rng.randint(-20, 20), rng.randint(1, 9)))
        weights = [k for layer in analysis.layers.values() for k in layer]
        assert sorted(weights) == list(family.window.weights)
        assert len(weights) == len(set(weights))
        assert min(analysis.orders.values()) == 0
        assert [c.level for c in classify_all(analysis)] == analysis.levels


FLIPPED = {Verdict.POSITIVE_DEFINITE: Verdict.NEGATIVE_DEFINITE, Verdict.NEGATIVE_DEFINITE: Verdict.POSITIVE_DEFINITE}


def test_rescaling_the_form_and_the_coordinate():
    rng = random.Random(5)
    for _ in range(1000):
        family, phi = family_and_phi(random_real_casimir(rng), 6)
        found = distinguished_points(family, phi, RationalInterval(Fraction(-4), Fraction(4)))
        point = rng.choice(found.points) if found.points else RationalPoint(Fraction(rng.randint(-8, 8), 3))
        base = analyze_at(family, phi, point)

        unit = Poly.from_values([Fraction(rng.choice([-3, -1, 2, 5]), rng.randint(1, 4)), rng.randint(0, 3)])
        if not unit.evaluate(point.x):
            continue
        vanishing = rng.randint(0, 2)
        factor = RatFunc(unit) * RatFunc(Poly.from_values([-point.x, 1])) ** vanishing
        leading = eval_shifted(factor, point, vanishing)
        if vanishing == 0:
            assert leading == factor.evaluate(point.x)
        scaled = analyze_at(family, phi.scaled(factor), point)
        assert scaled.layers == base.layers
        for k, value in base.form_values.items():
            assert scaled.form_values[k] == value * leading
        for n, verdict in base.verdicts.items():
            expected = verdict if leading.sign() > 0 else FLIPPED.get(verdict, verdict)
            assert scaled.verdicts[n] is expected

        scale = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        moved = analyze_at(family, phi, point, coordinate_scale=scale)
        assert moved.layers == base.layers
        assert moved.verdicts == base.verdicts
        for k, value in base.form_values.items():
            # p = s (z - x) divides the raw order, before normalization
            assert moved.form_values[k] == value * scale ** -(base.orders[k] + base.shift)


def test_dual_filtration_runs_the_other_way():
    rng = random.Random(41)
    for _ in range(50):
        family, phi = family_and_phi(random_real_casimir(rng), 6)
        found = distinguished_points(family, phi, RationalInterval(Fraction(-4), Fraction(4)))
        if not found.points:
            continue
        point = rng.choice(found.points)
        forward = analyze_at(family, phi, point)
        backward = analyze_at(twisted_dual(family).as_family(), phi.inverse(), point)
        top = max(forward.levels)
        assert backward.levels == sorted(top - n for n in forward.levels)
        for n in forward.levels:
            assert backward.layers[top - n] == forward.layers[n]


def test_oracle_matches_on_small_windows():
    family, phi = family_and_phi(FIG1, 8)
    point = RationalPoint(Fraction(-1, 9))
    oracle = filtration_oracle(family, phi, point)
    direct = analyze_at(family, phi, point)
    assert (oracle.layers, oracle.verdicts, oracle.form_values) == (direct.layers, direct.verdicts, direct.form_values)

    rng = random.Random(100)
    for _ in range(100):
        family, phi = family_and_phi(random_real_casimir(rng), rng.choice([2, 4, 6, 8, 10, 12]))
        found = distinguished_points(family, phi, RationalInterval(Fraction(-2), Fraction(2)))
        if found.points and rng.random() < 0.5:
            point = rng.choice(found.points)
        else:
            point = RationalPoint(Fraction(rng.randint(-20, 20), rng.randint(1, 10)))
        oracle = filtration_oracle(family, phi, point)
        direct = analyze_at(family, phi, point)
        assert oracle.orders == direct.orders
        assert oracle.layers == direct.layers
        assert oracle.verdicts == direct.verdicts
        assert oracle.form_values == direct.form_values


def congruent_gram(gram, superdiagonal: RatFunc):
    size = gram.shape[0]
    basis = np.empty(gram.shape, dtype=object)
    for i, j in np.ndindex(basis.shape):
        basis[i, j] = RatFunc.constant(1 if i == j else 0)
    for i in range(size - 1):
        basis[i, i + 1] = superdiagonal

    def product(left, right):
        out = np.empty(gram.shape, dtype=object)
        for i, j in np.ndindex(out.shape):
            out[i, j] = sum((left[i, m] * right[m, j] for m in range(size)), RatFunc.constant(0))
        return out

    return product(product(basis.T, gram), basis)


def test_oracle_eliminates_off_diagonal_entries():
    family, phi = family_and_phi(FIG1, 6)
    point = RationalPoint(Fraction(-1, 9))
    gram = congruent_gram(gram_matrix(family, phi), RatFunc(Poly.from_values([1, 1])))
    assert any(not gram[i, i + 1].is_zero for i in range(gram.shape[0] - 1))
    divisors = local_elementary_divisors(gram, point)
    assert len(divisors) == len(family.window.weights)
    orders = sorted(int(ord_at(divisor, point)) for _, divisor in divisors)
    assert orders == [0, 0, 0, 1, 1, 1, 1]
    assert orders == sorted(analyze_at(family, phi, point).orders.values())


def test_oracle_orders_survive_basis_changes():
    rng = random.Random(77)
    for _ in range(40):
        family, phi = family_and_phi(random_real_casimir(rng), rng.choice([2, 4, 6]))
        found = distinguished_points(family, phi, RationalInterval(Fraction(-2), Fraction(2)))
        point = rng.choice(found.points) if found.points else RationalPoint(Fraction(rng.randint(-6, 6), 5))
        superdiagonal = RatFunc(Poly.from_values([rng.randint(-3, 3), rng.randint(1, 3)]))
        divisors = local_elementary_divisors(congruent_gram(gram_matrix(family, phi), superdiagonal), point)
        direct = analyze_at(family, phi, point)
        raw = sorted(order + direct.shift for order in direct.orders.values())
        assert sorted(int(ord_at(divisor, point)) for _, divisor in divisors) == raw


def test_oracle_refuses_large_windows(fig1):
    family, phi = fig1
    with pytest.raises(OracleSizeError):
        filtration_oracle(family, phi, RationalPoint(0))
