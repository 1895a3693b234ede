import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from diary_embed import defaults  # pylint: disable=import-error
from diary_embed import exceptions  # pylint: disable=import-error
from diary_embed import statistics  # pylint: disable=import-error
from diary_embed.words import Sentence, Word  # pylint: disable=import-error

sentences = st.lists(st.lists(st.sampled_from(['a', 'b', 'c']), min_size=1, max_size=5), min_size=1,
                     max_size=4).map(Sentence)


def test_last_letter_reads_the_last_word():
    assert statistics.LastLetter().evaluate(Sentence.parse('ab|c')) == 'c'


def test_last_letter_with_offset_reads_an_earlier_word():
    alpha = Sentence.parse('ab|c')

    assert statistics.LastLetter(config={'offset': 2}).evaluate(alpha) == 'b'
    assert statistics.LastLetter(config={'offset': 3}).evaluate(alpha) == defaults.OUT_OF_RANGE


def test_last_letter_of_the_empty_sentence_is_out_of_range():
    assert statistics.LastLetter()(Sentence()) == defaults.OUT_OF_RANGE


def test_last_letter_codomain_counts_the_out_of_range_symbol():
    assert statistics.LastLetter().codomain_size(2) == 3


def test_base_statistic_config_forbids_unknown_keys():
    with pytest.raises(ValidationError):
        statistics.LastLetter(config={'kappa': 2})


def test_trunc_kappa_reads_the_final_letters():
    stat = statistics.TruncKappa(config={'kappa': 2})

    assert stat.evaluate(Sentence.parse('a|abc')) == Word('bc')
    assert stat.evaluate(Sentence.parse('a')) == Word('a')
    assert stat.codomain_size(2) == 7


def test_trunc_kappa_rejects_kappa_below_one():
    with pytest.raises(ValidationError):
        statistics.TruncKappa(config={'kappa': 0})


def test_product_statistic_reports_the_tuple():
    stat = statistics.product_statistic([statistics.LastLetter(), statistics.LastLetter(config={'offset': 2})])

    assert stat.evaluate(Sentence.parse('ab|c')) == ('c', 'b')
    assert stat.codomain_size(2) == 9
    assert stat.name == 'product(last-letter(),last-letter(offset=2))'


def test_product_statistic_rejects_linear_statistics():
    with pytest.raises(exceptions.ConfigurationError):
        statistics.ProductStatistic(statistics=[statistics.Ltrunc()])


def test_product_statistic_rejects_an_empty_list():
    with pytest.raises(exceptions.ConfigurationError):
        statistics.product_statistic([])

    with pytest.raises(exceptions.ConfigurationError):
        statistics.builtin_statistic('product')


def test_ltrunc_reads_the_final_letters_backwards():
    stat = statistics.Ltrunc(config={'tau': 2})
    alpha = Sentence.parse('abcde')

    assert stat.evaluate(1, alpha) == Word('ed')
    assert stat.evaluate(0, alpha) == Word()
    assert stat.limit(alpha) == Word('edcba')


def test_ltrunc_raises_on_negative_precision():
    with pytest.raises(exceptions.PreconditionError):
        statistics.Ltrunc().evaluate(-1, Sentence.parse('a'))


def test_decimal_length_ltrunc_reads_the_length_backwards():
    stat = statistics.DecimalLengthLtrunc()
    alpha = Sentence([Word('a' * 12)])

    assert stat.limit(alpha) == Word('21')
    assert stat.evaluate(1, alpha) == Word('2')


def test_order_of_priority_orders():
    alpha = Sentence.parse('ab|c')

    recent = statistics.OrderOfPriority(config={'tau': 1, 'order': 'recent-first'})
    chronological = statistics.OrderOfPriority(config={'tau': 1, 'order': 'chronological'})

    assert recent.evaluate(2, alpha) == Word('cb')
    assert chronological.evaluate(2, alpha) == Word('ab')


def test_order_of_priority_shuffle_is_seeded():
    alpha = Sentence.parse('abc|abc|cba')
    first = statistics.OrderOfPriority(config={'order': 'shuffled', 'seed': 3})
    second = statistics.OrderOfPriority(config={'order': 'shuffled', 'seed': 3})

    assert first.limit(alpha) == second.limit(alpha)
    assert sorted(first.limit(alpha)) == sorted('abcabccba')


@pytest.mark.parametrize('stat', [
    statistics.Ltrunc(config={'tau': 2}),
    statistics.DecimalLengthLtrunc(config={'tau': 1}),
    statistics.OrderOfPriority(config={'tau': 3}),
    statistics.Ltrunc(config={'tau': 1, 'offset': 2}),
])
@given(alpha=sentences, c=st.integers(min_value=0, max_value=6))
def test_linear_statistics_are_monotone_and_bounded(stat, alpha, c):
    value, next_value = stat.evaluate(c, alpha), stat.evaluate(c + 1, alpha)

    assert len(value) <= stat.tau * c
    assert next_value[:len(value)] == value


def test_eval_linear_inf_is_a_prefix_of_the_limit():
    stat = statistics.Ltrunc()
    alpha = Sentence.parse('abc')

    assert statistics.eval_linear_inf(stat, 2, alpha) == Word('cb')


def test_descriptor_round_trips_through_the_plugin_namespace():
    stat = statistics.builtin_statistic('trunc-kappa', {'kappa': 3})

    assert isinstance(stat, statistics.TruncKappa)
    assert statistics.get_statistic(stat.descriptor()).kappa == 3


def test_builtin_statistic_raises_on_unknown_name():
    with pytest.raises(exceptions.UnknownServiceError):
        statistics.builtin_statistic('no-such-statistic')


def test_builtin_statistic_raises_on_invalid_config():
    with pytest.raises(exceptions.ConfigurationError):
        statistics.builtin_statistic('ltrunc', {'tau': 0})


def test_get_statistic_returns_statistics_as_is():
    stat = statistics.LastLetter()

    assert statistics.get_statistic(stat) is stat
