import pytest

from conftest import dyadic, perturbed_barcode, random_barcode
from sheafdist import (
    Barcode,
    GradedInterval,
    Interval,
    bruteforce_distance,
    classify,
    convolve_barcode,
    distance_with_matching,
    parse_barcode,
    part_bottleneck,
)
from sheafdist.intervals import INF, Kind

CIRCLE_F = "0 [-1,1]\n0 (-1,1)\n"
CIRCLE_G = "0 [0,0]\n1 [0,0]\n"


def test_circle_distance_and_matching():
    F, G = parse_barcode(CIRCLE_F), parse_barcode(CIRCLE_G)
    value, matching = distance_with_matching(F, G)
    assert value == 1.0
    assert matching.achieved == 1.0
    got = {(m, str(l), str(r), c) for m, l, r, c in matching.central_pairs}
    assert got == {
        (-1, "[-1,1]@0", "[0,0]@0", 1.0),
        (0, "(-1,1)@0", "[0,0]@1", 1.0),
    }
    assert not matching.halfopen_pairs and not matching.deletions


def test_identity_matching(rng):
    for _ in range(50):
        b = random_barcode(rng)
        value, matching = distance_with_matching(b, b)
        assert value == 0.0
        assert all(c == 0.0 for *_, c in matching.central_pairs)
        assert all(c == 0.0 for *_, c in matching.halfopen_pairs)
        assert not matching.deletions


def test_central_mismatch_is_infinite():
    value, matching = distance_with_matching(parse_barcode("0 (0,1)\n"), Barcode())
    assert value == INF
    assert matching.achieved == INF
    assert not matching.central_pairs


def test_part_bottleneck_slots():
    central = part_bottleneck(
        [GradedInterval(Interval.open(-1, 1), 0)],
        [GradedInterval(Interval.point(0), 1)],
        ("central", 0),
    )
    assert central == (
        1.0,
        ((GradedInterval(Interval.open(-1, 1), 0), GradedInterval(Interval.point(0), 1), 1.0),),
    )
    assert part_bottleneck([], [], ("central", 0)) == (0.0, ())
    value, pairs = part_bottleneck(
        [GradedInterval(Interval.right_open(0, 1), 0)], [], ("R", 0)
    )
    assert value == 0.5
    assert pairs == ((GradedInterval(Interval.right_open(0, 1), 0), None, 0.5),)
    with pytest.raises(ValueError):
        part_bottleneck([], [], ("X", 0))


def test_halfopen_prefers_double_deletion():
    # two distant short bars: deleting both beats pairing them
    F = parse_barcode("0 [0,1)\n")
    G = parse_barcode("0 [10,11)\n")
    value, matching = distance_with_matching(F, G)
    assert value == 0.5
    assert len(matching.deletions) == 2


def test_bruteforce_on_circle():
    F, G = parse_barcode(CIRCLE_F), parse_barcode(CIRCLE_G)
    assert bruteforce_distance(F, G) == 1.0


def test_matches_brute_force(rng):
    disagreements = 0
    for _ in range(250):
        F = random_barcode(rng, max_bars=5)
        G = random_barcode(rng, max_bars=5)
        fast, _ = distance_with_matching(F, G)
        brute = bruteforce_distance(F, G)
        disagreements += fast != brute
    assert disagreements == 0


def test_matches_brute_force_on_nearby_pairs(rng):
    for _ in range(100):
        F = random_barcode(rng, max_bars=4)
        G = perturbed_barcode(rng, F)
        fast, _ = distance_with_matching(F, G)
        assert fast == bruteforce_distance(F, G)
        assert fast < INF


def test_bruteforce_limit():
    big = Barcode(tuple(GradedInterval(Interval.open(0, k + 1), 0) for k in range(7)))
    with pytest.raises(ValueError):
        bruteforce_distance(big, big, limit=6)


def test_metric_axioms(rng):
    for _ in range(200):
        A = random_barcode(rng, max_bars=4)
        B = random_barcode(rng, max_bars=4)
        C = random_barcode(rng, max_bars=4)
        dab = distance_with_matching(A, B)[0]
        assert dab == distance_with_matching(B, A)[0]
        assert distance_with_matching(A, A)[0] == 0.0
        dac = distance_with_matching(A, C)[0]
        dcb = distance_with_matching(C, B)[0]
        if dac < INF and dcb < INF:
            assert dab <= dac + dcb + 1e-9


def test_zero_distance_means_equal(rng):
    for _ in range(200):
        A = random_barcode(rng, max_bars=4)
        B = random_barcode(rng, max_bars=4)
        if distance_with_matching(A, B)[0] == 0.0:
            assert A.approx_eq(B)
    shuffled = parse_barcode("0 [0,1]\n0 (2,3)\n1 [4,5)\n")
    again = parse_barcode("1 [4,5)\n0 (2,3)\n0 [0,1]\n")
    assert distance_with_matching(shuffled, again)[0] == 0.0


def _restrict(b: Barcode, part: str) -> Barcode:
    keep = {
        "C": (Kind.C_OPEN, Kind.C_CLOSED),
        "R": (Kind.R,),
        "L": (Kind.L,),
    }[part]
    return Barcode(tuple(g for g in b if classify(g.interval) in keep))


def test_clr_independence(rng):
    for _ in range(200):
        A = random_barcode(rng, max_bars=5)
        B = random_barcode(rng, max_bars=5)
        whole = distance_with_matching(A, B)[0]
        parts = max(
            distance_with_matching(_restrict(A, p), _restrict(B, p))[0] for p in "CRL"
        )
        assert whole == parts


def test_self_convolution_bound(rng):
    for _ in range(200):
        A = random_barcode(rng, max_bars=5)
        eps = abs(dyadic(rng, 0, 2))
        assert distance_with_matching(convolve_barcode(A, eps), A)[0] <= eps + 1e-9


def test_determinism(rng):
    for _ in range(40):
        A = random_barcode(rng, max_bars=5)
        B = random_barcode(rng, max_bars=5)
        first = distance_with_matching(A, B)
        for _ in range(3):
            assert distance_with_matching(A, B) == first


def test_achieved_is_max_of_costs(rng):
    for _ in range(100):
        A = random_barcode(rng, max_bars=5)
        B = perturbed_barcode(rng, A)
        value, m = distance_with_matching(A, B)
        listed = (
            [c for *_, c in m.central_pairs]
            + [c for *_, c in m.halfopen_pairs]
            + [c for *_, c in m.deletions]
        )
        assert value == m.achieved == (max(listed) if listed else 0.0)
