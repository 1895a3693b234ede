from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diary_embed import diary  # pylint: disable=import-error
from diary_embed import exceptions  # pylint: disable=import-error
from diary_embed import statistics  # pylint: disable=import-error
from diary_embed.words import Sentence, render_sentence, sentence_tree_distance  # pylint: disable=import-error

sentences = st.lists(st.lists(st.sampled_from(['a', 'b']), min_size=1, max_size=4), max_size=4).map(Sentence)


def test_alice_diary_of_the_worked_example():
    found = diary.alice_diary(3, Sentence.parse('abac|cb|accc|bcbc|a'))

    assert render_sentence(found) == 'cab|bca|ccc|cbc|aba'


def test_alice_diary_plugin_matches_the_function():
    alpha = Sentence.parse('abac|cb|accc|bcbc|a')
    alice = diary.AliceDiary(config={'kappa': 3})

    assert list(alice.apply(alpha)) == list(diary.alice_diary(3, alpha))


def test_alice_diary_raises_on_kappa_below_one():
    with pytest.raises(exceptions.PreconditionError):
        diary.alice_diary(0, Sentence.parse('a'))


def test_alice_diary_state_keeps_the_unrecorded_stack():
    state = diary.AliceDiaryState(1)
    state.advance('ab')
    state.advance('c')

    assert state.slots == {1: (1, 1), 2: (2, 1)}
    assert state.unrecorded == [0]
    assert not state.is_recorded(0)


@given(sentences, sentences, st.integers(min_value=1, max_value=3))
def test_alice_diary_is_one_lipschitz(alpha, beta, kappa):
    alice = diary.AliceDiary(config={'kappa': kappa})

    assert alice.distance(alpha, beta) <= sentence_tree_distance(alpha, beta)


def test_virgo_constants_of_the_hexagon_embedding():
    constants = diary.VirgoConstants.derive([12, 12], 0, 2, 18, 1)

    assert constants.omega == 12
    assert constants.U == 505
    assert constants.V == 529
    assert constants.kappa == 8465
    assert constants.M == 64
    assert constants.provable


def test_virgo_constants_with_a_smaller_kappa_are_not_provable():
    constants = diary.VirgoConstants.derive([12], 0, 2, 18, 1, kappa=32)

    assert constants.kappa == 32
    assert constants.proof_kappa == 8465
    assert not constants.provable


def test_virgo_constants_are_exact_for_float_delta():
    constants = diary.VirgoConstants.derive([1], 0.5, 1, 1, 1)

    assert constants.delta == Fraction(1, 2)
    assert constants.M == 64


def test_virgo_constants_raise_on_delta_one():
    with pytest.raises(exceptions.ConfigurationError):
        diary.VirgoConstants.derive([1], 1, 1, 1, 1)


def test_virgo_constants_raise_without_statistics():
    with pytest.raises(exceptions.ConfigurationError):
        diary.VirgoConstants.derive([], 0, 1, 1, 1)


def test_check_leo_finds_the_first_distinguishing_day():
    witness = diary.check_leo(Sentence.parse('ab|a'), Sentence.parse('ab|b'), [statistics.LastLetter()], 2)

    assert witness == diary.Witness(j=1, statistic='last-letter()', index=0)


def test_check_leo_fails_when_the_first_days_agree():
    witness = diary.check_leo(Sentence.parse('ab|ab|ab'), Sentence.parse('b|b|ab'), [statistics.LastLetter()], 2)

    assert witness is None


def test_check_aries_allows_more_days_with_delta():
    alpha, beta = Sentence.parse('ba|a|a|a'), Sentence.parse('a|a|a|b')
    last_letter = [statistics.LastLetter()]

    assert diary.check_aries(alpha, beta, last_letter, 0, 1) is None
    assert diary.check_aries(alpha, beta, last_letter, 0.75, 1).j == 4


def test_day_offsets_stop_at_the_shorter_tail():
    assert list(diary._day_offsets(Fraction(0), 2, 5, 1)) == [1]  # pylint: disable=protected-access
    assert list(diary._day_offsets(Fraction(1, 2), 1, 4, 6)) == [1, 2, 3]  # pylint: disable=protected-access
    assert list(diary._day_offsets(Fraction(0), 2, 3, 0)) == []  # pylint: disable=protected-access


def test_checks_raise_on_equal_sentences():
    alpha = Sentence.parse('a|b')

    with pytest.raises(exceptions.PreconditionError):
        diary.check_leo(alpha, alpha, [statistics.LastLetter()], 1)


def test_check_virgo_accepts_differing_last_days():
    witness = diary.check_virgo(Sentence.parse('ab|a'), Sentence.parse('ab|b'), [statistics.Ltrunc()], 0, 2, 1, 1)

    assert witness is not None
    assert witness.j == 1


def test_check_virgo_needs_short_tails():
    alpha, beta = Sentence.parse('a|bbbb'), Sentence.parse('b|bbbb')

    assert diary.check_virgo(alpha, beta, [statistics.Ltrunc()], 0, 1, 1, 1) is None
    assert diary.check_virgo(alpha, beta, [statistics.Ltrunc()], 0, 1, 4, 1) is not None


def test_check_taurus_accepts_differing_last_days():
    witness = diary.check_taurus(Sentence.parse('ab|a'), Sentence.parse('ab|b'), [statistics.Ltrunc()], 2, 1, 1)

    assert witness is not None
    assert witness.j == 1


def test_check_taurus_cascades_to_earlier_days_while_they_are_short():
    previous_day = [statistics.Ltrunc(config={'offset': 2})]
    alpha, beta = Sentence.parse('c|a|bbbbb'), Sentence.parse('c|b|bbbbb')

    witness = diary.check_taurus(alpha, beta, previous_day, 2, 1, 1)

    assert witness is not None
    assert witness.j == 2


def test_check_taurus_fails_when_a_short_earlier_day_is_not_told_apart():
    previous_day = [statistics.Ltrunc(config={'offset': 2})]
    alpha, beta = Sentence.parse('c|a|b'), Sentence.parse('c|b|b')

    assert diary.check_taurus(alpha, beta, previous_day, 2, 1, 1) is None
    assert diary.check_taurus(alpha, beta, previous_day + [statistics.Ltrunc()], 2, 1, 1).j == 1


@given(sentences, sentences)
def test_virgo_I_map_is_injective(alpha, beta):
    stats = [statistics.Ltrunc(), statistics.DecimalLengthLtrunc()]
    constants = diary.VirgoConstants.derive([1], 0, 1, 1, 1)

    if alpha != beta:
        assert diary.virgo_I_map(stats, constants, alpha) != diary.virgo_I_map(stats, constants, beta)


@given(sentences)
def test_diaries_are_prefix_causal(alpha):
    diaries = [
        diary.AliceDiary(config={'kappa': 2}),
        diary.leo_diary([statistics.LastLetter(), statistics.TruncKappa(config={'kappa': 2})], 2),
        diary.virgo_diary([statistics.Ltrunc()], 0, 1, 1, 1, kappa=3),
        diary.taurus_diary([statistics.OrderOfPriority(config={'tau': 2})], 1, 1, 1, kappa=3),
    ]
    diaries.append(diary.combine_diaries(diaries[1], diaries[2]))

    for each in diaries:
        image = each.apply(alpha)
        assert len(image) == len(alpha)
        for i in range(len(alpha) + 1):
            assert each.apply(alpha[:i]) == image[:i]


pairs_with_common_days = st.tuples(sentences, sentences, sentences).map(
    lambda days: (Sentence(days[0] + days[1]), Sentence(days[0] + days[2])))


@settings(max_examples=1000, derandomize=True, deadline=None)
@given(pairs_with_common_days, st.sampled_from([0, Fraction(1, 2), Fraction(3, 4)]), st.integers(1, 3))
def test_aries_certified_pairs_satisfy_the_bound(pair, delta, J):
    alpha, beta = pair
    stats = [statistics.LastLetter(), statistics.LastLetter(config={'offset': 2})]
    if alpha == beta or diary.check_aries(alpha, beta, stats, delta, J) is None:
        return

    assert diary.theorem_lower_bound_holds(diary.aries_diary(stats, delta, J), alpha, beta)


@settings(max_examples=200, derandomize=True, deadline=None)
@given(pairs_with_common_days)
def test_virgo_and_taurus_certified_pairs_satisfy_the_bound(pair):
    alpha, beta = pair
    stats = [statistics.Ltrunc(config={'tau': 12}), statistics.DecimalLengthLtrunc(config={'tau': 12})]
    virgo = diary.virgo_diary(stats, 0, 2, 18, 1)
    taurus = diary.taurus_diary(stats, 2, 18, 1)
    if alpha == beta:
        return

    assert virgo.lower_bound.M == 64
    for each in (virgo, taurus):
        if each.check(alpha, beta) is not None:
            assert diary.theorem_lower_bound_holds(each, alpha, beta)


def test_leo_diary_bound_and_images():
    leo = diary.leo_diary([statistics.LastLetter()], 2)
    alpha, beta = Sentence.parse('ab|a'), Sentence.parse('ab|b')

    assert leo.lower_bound_M == 4
    assert leo.apply(alpha) == (('b',), ('a',))
    assert leo.distance(alpha, beta) == 2
    assert diary.theorem_lower_bound_holds(leo, alpha, beta)


def test_aries_diary_bound_grows_with_delta():
    aries = diary.aries_diary([statistics.LastLetter()], Fraction(1, 2), 2)

    assert aries.lower_bound_M == 8


def test_aries_diary_needs_a_statistic():
    with pytest.raises(exceptions.ConfigurationError):
        diary.AriesDiary(config={'J': 1})


def test_associated_diary_writes_the_statistic_per_day():
    associated = diary.associated_diary(statistics.LastLetter())

    assert associated.apply(Sentence.parse('ab|c|ba')) == ('b', 'c', 'a')
    assert associated.lower_bound is None


def test_theorem_lower_bound_raises_without_a_bound():
    associated = diary.associated_diary(statistics.LastLetter())

    with pytest.raises(exceptions.PreconditionError):
        diary.theorem_lower_bound_holds(associated, Sentence.parse('a'), Sentence.parse('b'))


def test_virgo_diary_recodes_days_into_starred_words():
    virgo = diary.virgo_diary([statistics.Ltrunc()], 0, 1, 1, 1, kappa=4)
    recoded = virgo.recode(Sentence.parse('ab|c'))

    omega = virgo.constants.omega
    assert [len(word) for word in recoded] == [1 + 2 * omega, 1 + omega]
    assert recoded[1][1] == ('c', 'c')
    assert not virgo.lower_bound.provable


def test_virgo_diary_rejects_finite_statistics():
    with pytest.raises(exceptions.ConfigurationError):
        diary.VirgoDiary(config={'J': 1}, statistics=[statistics.LastLetter()])


def test_virgo_diary_is_one_lipschitz():
    virgo = diary.virgo_diary([statistics.Ltrunc()], 0, 1, 1, 1, kappa=4)
    alpha, beta = Sentence.parse('ab|c|a'), Sentence.parse('ab|b')

    assert virgo.distance(alpha, beta) <= sentence_tree_distance(alpha, beta)
    assert virgo.apply(alpha)[0] == virgo.apply(beta)[0]


def test_taurus_diary_widens_N():
    taurus = diary.taurus_diary([statistics.Ltrunc()], 2, 1, 1, kappa=8)

    assert taurus.constants.N == 1 + 6 * 4
    assert taurus.constants.delta == 0


def test_combined_diary_pairs_chapters_and_takes_the_largest_bound():
    leo = diary.leo_diary([statistics.LastLetter()], 2)
    aries = diary.aries_diary([statistics.LastLetter()], Fraction(1, 2), 2)
    combined = diary.combine_diaries(leo, aries)

    assert combined.apply(Sentence.parse('ab')) == ((('b',), ('b',)),)
    assert combined.lower_bound_M == 8
    assert combined.criterion == 'leo or aries'


def test_combined_diary_rejects_different_alphabets():
    first = diary.LeoDiary(config={'J': 1}, statistics=[statistics.LastLetter()], alphabet=['a', 'b'])
    second = diary.LeoDiary(config={'J': 1}, statistics=[statistics.LastLetter()], alphabet=['a', 'c'])

    with pytest.raises(exceptions.AlphabetMismatchError):
        diary.combine_diaries(first, second)


def test_get_diary_builds_plugins_from_descriptors():
    leo = diary.get_diary({'type': 'leo', 'config': {'statistics': [{'type': 'last-letter'}], 'J': 2}})

    assert isinstance(leo, diary.LeoDiary)
    assert leo.lower_bound_M == 4


def test_get_diary_raises_on_unknown_name():
    with pytest.raises(exceptions.UnknownServiceError):
        diary.get_diary({'type': 'pisces'})
