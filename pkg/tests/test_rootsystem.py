from fractions import Fraction as Q

import pytest

from weylnorm import get_root_system, root_system_from_json
from weylnorm.rootsystem import LabelError, UnknownTypeError, build_root_system
from weylnorm.vectors import dot, scale, sub as vsub

TYPES = ["G2", "F4", "E6", "E7", "E8"]
EXPECTED_POSITIVE = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


def brute_force_roots(sys):
    """Independent oracle: close the simple roots under reflection in every
    known root, using ambient arithmetic only."""
    roots = set()
    for l in sys.labels:
        v = sys.simple_by_label[l].ambient
        roots.add(v)
        roots.add(tuple(-q for q in v))
    changed = True
    while changed:
        changed = False
        for delta in list(roots):
            nn = dot(delta, delta)
            for gamma in list(roots):
                pair = 2 * dot(gamma, delta) / nn
                image = vsub(gamma, scale(pair, delta))
                if image not in roots:
                    roots.add(image)
                    changed = True
    return roots


@pytest.mark.parametrize("tname", TYPES)
def test_positive_root_counts(tname):
    sys = get_root_system(tname)
    assert len(sys.positive_roots) == EXPECTED_POSITIVE[tname]


@pytest.mark.parametrize("tname", TYPES)
def test_matches_brute_force_closure(tname):
    sys = get_root_system(tname)
    brute = brute_force_roots(sys)
    assert len(brute) == 2 * EXPECTED_POSITIVE[tname]
    mine = {r.ambient for r in sys.positive_roots}
    mine |= {tuple(-q for q in v) for v in mine}
    assert mine == brute


@pytest.mark.parametrize("tname", TYPES)
def test_simple_coords_are_nonnegative_integers(tname):
    sys = get_root_system(tname)
    for r in sys.positive_roots:
        assert all(isinstance(c, int) and c >= 0 for c in r.coords)
        assert any(c > 0 for c in r.coords)


@pytest.mark.parametrize("tname", TYPES)
def test_closed_under_root_reflections(tname):
    sys = get_root_system(tname)
    allroots = [r for r in sys.positive_roots] + [-r for r in sys.positive_roots]
    ambients = {r.ambient for r in allroots}
    for delta in sys.positive_roots:
        nn = dot(delta.ambient, delta.ambient)
        for gamma in allroots:
            pair = 2 * dot(gamma.ambient, delta.ambient) / nn
            assert vsub(gamma.ambient, scale(pair, delta.ambient)) in ambients


@pytest.mark.parametrize("tname", TYPES)
def test_positive_root_sum_is_twice_rho(tname):
    # rho pairs to 1 with every simple coroot
    sys = get_root_system(tname)
    total = sys.positive_roots[0].ambient
    for r in sys.positive_roots[1:]:
        total = tuple(a + b for a, b in zip(total, r.ambient))
    rho = scale(Q(1, 2), total)
    for l in sys.labels:
        assert sys.pairing(rho, sys.simple_by_label[l]) == 1


@pytest.mark.parametrize("tname", TYPES)
def test_pairing_is_integral_on_roots(tname):
    sys = get_root_system(tname)
    for x in sys.positive_roots:
        for beta in sys.positive_roots:
            assert sys.pairing(x.ambient, beta).denominator == 1


def test_g2_printed_simple_roots():
    sys = get_root_system("G2")
    assert sys.simple_by_label[1].ambient == (0, 1, -1)
    assert sys.simple_by_label[2].ambient == (1, -2, 1)


def test_pairing_examples():
    g2 = get_root_system("G2")
    beta = g2.simple_by_label[2]
    assert g2.pairing(beta.ambient, beta) == 2
    f4 = get_root_system("F4")
    root = f4.root_from_coords((1, 1, 2, 2))
    assert root.ambient == (1, 0, -1, 0)
    assert f4.pairing((Q(1), Q(0), Q(0), Q(0)), root) == 1


def test_sub_system_counts():
    e8 = get_root_system("E8")
    # deleting the chain end leaves the rank-7 system with 63 positive roots,
    # deleting the short-arm tip leaves the 7-node chain with 28
    assert len(e8.sub_system([2, 3, 4, 5, 6, 7, 8]).positive_roots) == 63
    assert len(e8.sub_system([1, 2, 3, 4, 5, 6, 7]).positive_roots) == 28
    g2 = get_root_system("G2")
    assert len(g2.sub_system([1]).positive_roots) == 1


def test_sub_system_f4_a2():
    f4 = get_root_system("F4")
    sub = f4.sub_system([1, 2])
    assert sorted(r.coords for r in sub.positive_roots) == [
        (0, 1, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0)]


def test_sub_system_rejects_bad_subset():
    f4 = get_root_system("F4")
    with pytest.raises(LabelError):
        f4.sub_system([1, 9])
    sub = f4.sub_system([1, 2])
    with pytest.raises(LabelError):
        sub.sub_system([3])


def test_irreducible_components():
    g2 = get_root_system("G2")
    assert g2.irreducible_components() == [frozenset({1, 2})]
    f4 = get_root_system("F4")
    assert f4.sub_system([1, 3, 4]).irreducible_components() == [
        frozenset({1}), frozenset({3, 4})]
    e8 = get_root_system("E8")
    assert e8.sub_system([1, 2, 3, 5, 6, 7, 8]).irreducible_components() == [
        frozenset({1, 2, 3}), frozenset({5, 6, 7, 8})]


def test_components_stable_under_resubsetting():
    e8 = get_root_system("E8")
    sub = e8.sub_system([1, 2, 3, 5, 6, 7, 8])
    for comp in sub.irreducible_components():
        again = sub.sub_system(comp)
        assert again.irreducible_components() == [comp]


def test_unknown_type():
    with pytest.raises(UnknownTypeError):
        build_root_system("X9")


def test_canonical_index_round_trip():
    e6 = get_root_system("E6")
    assert [e6.canonical_index(l) for l in e6.labels] == [1, 2, 3, 4, 5, 6]
    assert e6.canonical_index(8) == 6 and e6.label_at(6) == 8
    e7 = get_root_system("E7")
    assert e7.canonical_index(2) == 1 and e7.label_at(1) == 2


@pytest.mark.parametrize("tname", TYPES)
def test_json_round_trip(tname):
    import json
    sys = get_root_system(tname)
    blob = json.dumps(sys.to_json_dict())
    assert json.loads(blob) == sys.to_json_dict()
    rebuilt = root_system_from_json(json.loads(blob))
    assert {r.ambient for r in rebuilt.positive_roots} == {r.ambient for r in sys.positive_roots}
    assert rebuilt.labels == sys.labels
