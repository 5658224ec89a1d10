from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crucialperm.crucial import (
    TYPES,
    CrucialClass,
    classify_direct,
    classify_rsk,
    counterexample_quadrocrucial,
    deletions,
    doublings,
    has_minimal_bicrucial_structure,
    has_minimal_crucial_structure,
    has_type,
    insertions,
    is_bottom_crucial_direct,
    is_irreducible,
    is_left_crucial_direct,
    is_non_extendable,
    is_right_crucial_direct,
    is_top_crucial_direct,
    ending_witness,
    minimal_length,
    minimal_quadrocrucial,
    minimal_top_right,
    rsk_flags,
    staircase_bottom_left,
    staircase_top_right,
)
from crucialperm.enumeration import list_brute, list_syt
from crucialperm.errors import InvalidInputError, UnsupportedError
from crucialperm.perm import PatternSpec, Permutation, complement, inverse, reduce, reverse
from crucialperm.tableaux import StandardTableau, enumerate_shapes, enumerate_syt, rsk

from . import oracles

S43 = PatternSpec(4, 3)
S44 = PatternSpec(4, 4)
SMALL_SPECS = [PatternSpec(k, l) for k, l in [(3, 3), (4, 3), (3, 4), (4, 4), (5, 3)]]


def P(text):
    return Permutation(text)


def all_perms(n):
    return permutations(range(1, n + 1))


# ---------------------------------------------------------------- direct checks


def test_direct_examples():
    assert is_right_crucial_direct(P("14523"), S43)
    assert is_right_crucial_direct(P("13254"), S43)
    for k, l in [(3, 3), (4, 3), (4, 5)]:
        assert not is_right_crucial_direct(tuple(range(1, k)), PatternSpec(k, l))


def test_classify_examples():
    c = classify_direct(P("21354"), S43)
    assert c.quadrocrucial and all(c.flags().values())
    c = classify_direct(P("1243"), S43)
    assert c.top_right and not c.left
    c = classify_direct(P("123"), S43)
    assert not any(c.flags().values())
    assert classify_rsk(P("41523"), S43).right
    assert classify_rsk(P("21354"), S43).quadrocrucial


def test_crucial_class_api():
    c = classify_direct(P("21354"), S43)
    d = c.to_dict()
    assert d["quadrocrucial"] and d["bicrucial"] and (d["k"], d["l"], d["n"]) == (4, 3, 5)
    assert c.has("tri")
    with pytest.raises(InvalidInputError):
        c.has("bottom_right")
    assert set(c.flags()) == set(TYPES)


@pytest.mark.parametrize("spec", [PatternSpec(3, 3), PatternSpec(4, 3), PatternSpec(3, 4)])
@pytest.mark.parametrize("n", range(7))
def test_direct_matches_definition_oracle(spec, n):
    for w in all_perms(n):
        assert classify_direct(w, spec).flags() == oracles.classify(w, spec.k, spec.l)


@settings(max_examples=40, deadline=None)
@given(st.integers(7, 9).flatmap(lambda m: st.permutations(range(1, m + 1))))
def test_direct_matches_oracle_on_longer_samples(w):
    assert classify_direct(w, S44).flags() == oracles.classify(w, 4, 4)


# ---------------------------------------------------------------- staircases


def test_staircase_examples():
    assert staircase_top_right(StandardTableau([[1, 2, 3], [4, 5]]))
    assert staircase_top_right(StandardTableau([[1, 2, 3, 4]]))
    assert not staircase_top_right(StandardTableau([[1, 2, 5], [3, 4]]))
    assert staircase_bottom_left(StandardTableau([[1], [2], [3]]))
    # P of a minimal bicrucial permutation has both chains
    p_min = rsk(minimal_quadrocrucial(PatternSpec(5, 3))).P
    assert staircase_top_right(p_min) and staircase_bottom_left(p_min)


@pytest.mark.parametrize("n", range(9))
def test_greedy_staircase_matches_exhaustive_search(n):
    for shape in enumerate_shapes(n, n, n):
        for t in enumerate_syt(shape):
            assert staircase_top_right(t) == oracles.chain_top_right(t.rows)
            assert staircase_bottom_left(t) == oracles.chain_bottom_left(t.rows)
            assert staircase_bottom_left(t) == staircase_top_right(t.transpose())


def test_rsk_flags_need_full_shape():
    P_, Q_ = rsk(P("123"))
    assert rsk_flags(P_, Q_, S43) == (False,) * 4


# ---------------------------------------------------------------- characterization


@pytest.mark.parametrize("spec", SMALL_SPECS + [PatternSpec(5, 4)])
@pytest.mark.parametrize("n", range(8))
def test_rsk_characterization(spec, n):
    # n = 8 is covered by the acceptance suite
    for w in all_perms(n):
        assert classify_direct(w, spec) == classify_rsk(w, spec)


@pytest.mark.parametrize("spec", SMALL_SPECS)
@pytest.mark.parametrize("n", range(8))
def test_tableau_criteria_oracle(spec, n):
    # independent RSK + exhaustive chain search, compared to the direct definition
    for w in all_perms(n):
        flags = classify_direct(w, spec)
        o = oracles.rsk_classify(w, spec.k, spec.l)
        assert (flags.right, flags.left, flags.top, flags.bottom) == (o["right"], o["left"], o["top"], o["bottom"])


@pytest.mark.parametrize("k,l", [(3, 3), (4, 3), (3, 4), (4, 4), (5, 3)])
def test_direction_symmetry(k, l):
    spec, swapped = PatternSpec(k, l), PatternSpec(l, k)
    for n in range(8):
        for w in all_perms(n):
            right = is_right_crucial_direct(w, spec)
            assert is_left_crucial_direct(reverse(w), swapped) == right
            assert is_top_crucial_direct(inverse(w), spec) == right
            assert is_bottom_crucial_direct(complement(inverse(w)), swapped) == right


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_hierarchy(spec):
    for n in range(spec.max_length + 1):
        for w in all_perms(n):
            c = classify_direct(w, spec)
            assert not c.quadrocrucial or c.tricrucial
            assert not c.tricrucial or c.bicrucial
            assert not c.bicrucial or c.right
            assert not c.top_right or c.right
            assert has_type(w, spec, "tri") == c.tricrucial


def test_has_type_rejects_unknown():
    with pytest.raises(InvalidInputError):
        has_type(P("21"), S43, "sideways")


# ---------------------------------------------------------------- witnesses and deletion


def _is_subsequence(sub, word):
    it = iter(word)
    return all(x in it for x in sub)


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_ending_witness_and_deletion(spec):
    k, l = spec.k, spec.l
    for n in range(spec.max_length + 1):
        for p in list_brute(n, spec, "right"):
            inc, dec = ending_witness(p, spec)
            assert len(inc) == k - 1 and len(dec) == l - 1
            assert inc[-1] == dec[-1] == p[-1]
            assert all(a < b for a, b in zip(inc, inc[1:]))
            assert all(a > b for a, b in zip(dec, dec[1:]))
            assert _is_subsequence(inc, p) and _is_subsequence(dec, p)
            assert set(inc) & set(dec) == {p[-1]}
            # deleting anything outside the witness keeps the permutation crucial
            keep = set(inc) | set(dec)
            for pos, x in enumerate(p):
                if x not in keep:
                    q = reduce(p[:pos] + p[pos + 1:])
                    assert is_right_crucial_direct(q, spec)
            if n > k + l - 3:
                assert any(is_right_crucial_direct(q, spec) for q in deletions(p))


def test_ending_witness_absent():
    assert ending_witness(P("123"), S43) is None


def test_insertions_and_deletions():
    p = P("21")
    ins = set(insertions(p))
    assert ins == set(map(Permutation, all_perms(3))) - {P("123")}
    assert all(p in set(deletions(q)) for q in ins)
    assert set(deletions(P("132"))) == {P("12"), P("21")}


# ---------------------------------------------------------------- minimal permutations


@pytest.mark.parametrize("spec", SMALL_SPECS + [PatternSpec(5, 4), PatternSpec(3, 5)])
def test_minimal_lengths(spec):
    for t in TYPES:
        m = minimal_length(spec, t)
        assert list(list_syt(m, spec, t))
        for n in range(m):
            assert not list(list_syt(n, spec, t))


@pytest.mark.parametrize("spec", SMALL_SPECS + [PatternSpec(5, 4), PatternSpec(5, 5)])
def test_minimal_crucial_structure(spec):
    k, l = spec.k, spec.l
    perms = list(list_syt(k + l - 3, spec, "right"))
    assert perms
    for p in perms:
        assert has_minimal_crucial_structure(p, spec)
        assert p[0] in (1, len(p))


@pytest.mark.parametrize("k,l", [(4, 3), (5, 3), (5, 4), (3, 4), (3, 5)])
def test_minimal_bicrucial_structure_unequal(k, l):
    spec = PatternSpec(k, l)
    perms = list(list_syt(minimal_length(spec, "bi"), spec, "bi"))
    assert perms and all(has_minimal_bicrucial_structure(p, spec) for p in perms)
    if k > l:
        assert all(p[0] == l - 1 and p[-1] == k + l - 3 for p in perms)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_minimal_bicrucial_structure_square(k):
    # at k = l the mirrored arrangement is equally short, so half carry it
    spec = PatternSpec(k, k)
    perms = list(list_syt(minimal_length(spec, "bi"), spec, "bi"))
    plain = [p for p in perms if has_minimal_bicrucial_structure(p, spec)]
    mirrored = [p for p in perms if has_minimal_bicrucial_structure(reverse(p), spec)]
    assert len(plain) == len(mirrored) == len(perms) // 2
    assert set(plain) | set(mirrored) == set(perms)
    if k == 3:
        assert P("3142") in perms


def test_minimal_top_right_examples():
    assert minimal_top_right(S43) == P("1243")
    assert minimal_top_right(PatternSpec(3, 3)) == P("132")
    for spec in SMALL_SPECS + [PatternSpec(5, 5)]:
        m = minimal_length(spec, "top_right")
        assert list(list_syt(m, spec, "top_right")) == [minimal_top_right(spec)]
    with pytest.raises(UnsupportedError):
        minimal_top_right(PatternSpec(2, 4))


def test_minimal_quadrocrucial_examples():
    assert minimal_quadrocrucial(S43) == P("21354")
    assert minimal_quadrocrucial(PatternSpec(5, 3)) == P("213465")
    for k in (3, 4, 5):
        for l in (3, 4, 5):
            spec = PatternSpec(k, l)
            p = minimal_quadrocrucial(spec)
            assert classify_direct(p, spec).quadrocrucial
            assert len(p) == minimal_length(spec, "quadro")
    with pytest.raises(UnsupportedError):
        minimal_quadrocrucial(PatternSpec(3, 2))


def test_doubling_extends_minimal_quadrocrucial():
    # doubling l as (l+1) l gives a longer quadrocrucial permutation
    for k, l in [(4, 3), (5, 3), (4, 4), (5, 4)]:
        spec = PatternSpec(k, l)
        p = minimal_quadrocrucial(spec)
        pos = p.index(l)
        q = [v + 1 if v > l else v for v in p]
        q = q[:pos] + [l + 1, l] + q[pos + 1:]
        assert classify_direct(q, spec).quadrocrucial
        assert len(q) == k + 2 * l - 4


def test_counterexample_quadrocrucial():
    p = counterexample_quadrocrucial(S44)
    assert p == P("43781265")
    assert len(p) == 8 == 2 * (4 + 4 - 4)
    assert classify_direct(p, S44).quadrocrucial
    dbl = list(doublings(p))
    assert len(dbl) == 16
    assert not any(classify_direct(q, S44).quadrocrucial for q in dbl)
    assert p in set(list_syt(8, S44, "quadro"))


def test_doublings_shape():
    assert sorted(doublings(P("1"))) == [P("12"), P("21")]
    assert set(doublings(P("21"))) == {P("231"), P("321"), P("312")}


# ---------------------------------------------------------------- extendability


@pytest.mark.parametrize("spec", [PatternSpec(3, 3), S43, PatternSpec(3, 4), S44])
def test_non_extendable_never_start_at_extremes(spec):
    for n in range(spec.k + spec.l - 3, spec.max_length + 1):
        for p in list_syt(n, spec, "right"):
            if is_non_extendable(p, spec, "right"):
                assert p[0] not in (1, n)
            if n == spec.max_length:
                assert is_non_extendable(p, spec, "right")


def test_irreducible_bicrucial_of_length_2k_plus_l_minus_5():
    n = 2 * 4 + 3 - 5
    irreducible = [p for p in list_brute(n, S43, "bi") if is_irreducible(p, S43, "bi")]
    assert irreducible


def test_type_precondition():
    with pytest.raises(InvalidInputError):
        is_non_extendable(P("123"), S43, "right")
    with pytest.raises(InvalidInputError):
        is_irreducible(P("123"), S43, "bi")


def test_class_is_hashable_value():
    a = classify_direct(P("21354"), S43)
    assert a == CrucialClass(4, 3, 5, True, True, True, True)
    assert len({a, classify_rsk(P("21354"), S43)}) == 1
