import itertools

import pytest

from weylnorm import (
    enumerate_weyl_group, get_root_system, inversion_set, length,
    longest_element, reduced_word_star, relative_longest, simple_reflection,
)
from weylnorm.decompose import s_set
from weylnorm.rootsystem import LabelError
from weylnorm.weyl import apply_to_ambient, identity_element, word_to_element

TYPES = ["G2", "F4", "E6", "E7", "E8"]


def test_simple_reflection_is_involution():
    for tname in TYPES:
        sys = get_root_system(tname)
        for l in sys.labels:
            w = simple_reflection(sys, l)
            assert (w * w).is_identity
            assert length(w, sys) == 1


def test_simple_reflection_rejects_foreign_label():
    g2 = get_root_system("G2")
    with pytest.raises(LabelError):
        simple_reflection(g2, 3)


def test_g2_reflection_values():
    g2 = get_root_system("G2")
    w_alpha = simple_reflection(g2, 1)
    beta = g2.simple_by_label[2]
    # <beta, alpha_check> = -3, so the image is beta + 3 alpha
    assert w_alpha.apply_root(beta).coords == (3, 1)
    # the long root 3a+2b is orthogonal to alpha and stays fixed
    assert w_alpha.apply_root(g2.root_from_coords((3, 2))).coords == (3, 2)
    # (1,1,-2) is the root 3a+b and reflects to beta
    assert w_alpha.apply_root(g2.root_from_coords((3, 1))).coords == (0, 1)


@pytest.mark.parametrize("tname", TYPES)
def test_longest_element_negates_positives(tname):
    sys = get_root_system(tname)
    w0 = longest_element(sys)
    assert length(w0, sys) == len(sys.positive_roots)
    assert inversion_set(w0, sys) == frozenset(sys.positive_roots)


def test_longest_element_square():
    # -1 lies in the Weyl group for G2, F4, E7, E8 but not E6
    for tname in ("G2", "F4", "E7", "E8"):
        sys = get_root_system(tname)
        assert (longest_element(sys) * longest_element(sys)).is_identity
    e6 = get_root_system("E6")
    w0 = longest_element(e6)
    assert (w0 * w0).is_identity   # an involution even though it is not -1


def test_e6_longest_induces_diagram_flip():
    e6 = get_root_system("E6")
    w0 = longest_element(e6)
    expected = {3: 7, 4: 6, 5: 5, 6: 4, 7: 3, 8: 8}
    for src, dst in expected.items():
        image = w0.apply_root(e6.simple_by_label[src])
        assert image == -e6.simple_by_label[dst]


def test_rank_one_relative_longest_is_reflection():
    g2 = get_root_system("G2")
    sub = g2.sub_system([1])
    assert relative_longest(sub, 1) == simple_reflection(g2, 1)


@pytest.mark.parametrize("tname,removed,expected_length", [
    ("G2", 1, 5), ("G2", 2, 5), ("F4", 1, 15), ("E8", 8, 92), ("E8", 1, 57),
])
def test_relative_longest_lengths(tname, removed, expected_length):
    sys = get_root_system(tname)
    assert length(relative_longest(sys, removed), sys) == expected_length


@pytest.mark.parametrize("tname", TYPES)
def test_relative_longest_properties(tname):
    sys = get_root_system(tname)
    simples = {l: sys.simple_by_label[l] for l in sys.labels}
    for removed in sys.labels:
        w0 = relative_longest(sys, removed)
        # maps delta minus the removed root into delta
        for l in sys.labels:
            if l == removed:
                continue
            image = w0.apply_root(simples[l])
            assert image in simples.values()
        # inversion set is exactly S
        assert inversion_set(w0, sys) == s_set(sys, removed)


@pytest.mark.parametrize("tname", TYPES)
def test_reduced_word_star(tname):
    sys = get_root_system(tname)
    for removed in sys.labels:
        w0 = relative_longest(sys, removed)
        word = reduced_word_star(w0, sys)
        assert len(word) == length(w0, sys)
        assert word_to_element(sys, word) == w0


def test_reduced_word_recovers_inversion_set():
    # R(w) = {g1, s_{g1}.g2, s_{g1}s_{g2}.g3, ...}
    for tname in ("G2", "F4"):
        sys = get_root_system(tname)
        for removed in sys.labels:
            w = relative_longest(sys, removed)
            word = reduced_word_star(w, sys)
            produced = set()
            prefix = identity_element(sys)
            for g in word:
                produced.add(prefix.apply_root(sys.simple_by_label[g]))
                prefix = prefix * simple_reflection(sys, g)
            assert produced == set(inversion_set(w, sys))


def test_reduced_word_of_identity_is_empty():
    g2 = get_root_system("G2")
    assert reduced_word_star(identity_element(g2), g2) == ()


def test_apply_to_ambient_agrees_on_root_span():
    e6 = get_root_system("E6")
    w0 = relative_longest(e6, 8)
    for r in e6.positive_roots[:10]:
        assert apply_to_ambient(w0, r.ambient) == w0.apply_root(r).ambient


def test_weyl_group_orders():
    g2 = get_root_system("G2")
    assert len(enumerate_weyl_group(g2)) == 12
    f4 = get_root_system("F4")
    assert len(enumerate_weyl_group(f4.sub_system([2, 3, 4]))) == 48   # B3/C3
    assert len(enumerate_weyl_group(f4.sub_system([1, 2]))) == 6       # A2


def brute_check_system(sys):
    group = enumerate_weyl_group(sys)
    lengths = {w: sum(1 for r in sys.positive_roots if w.maps_negative(r)) for w in group}
    maximal = [w for w, l in lengths.items() if l == len(sys.positive_roots)]
    assert len(maximal) == 1
    assert maximal[0] == longest_element(sys)
    for removed in sys.labels:
        keep = [l for l in sys.labels if l != removed]
        coset = [w for w in group
                 if all(not w.maps_negative(sys.simple_by_label[l]) for l in keep)]
        best = max(coset, key=lambda w: lengths[w])
        ties = [w for w in coset if lengths[w] == lengths[best]]
        assert len(ties) == 1
        assert best == relative_longest(sys, removed)


def test_brute_force_against_g2_and_small_subsystems():
    brute_check_system(get_root_system("G2"))
    for tname in ("F4", "E6"):
        sys = get_root_system(tname)
        for size in (1, 2, 3):
            for subset in itertools.combinations(sys.labels, size):
                brute_check_system(sys.sub_system(subset))
