import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diary_embed import defaults  # pylint: disable=import-error
from diary_embed import exceptions  # pylint: disable=import-error
from diary_embed import hexgroup  # pylint: disable=import-error
from diary_embed.hexgroup import Family, GroupElement  # pylint: disable=import-error
from diary_embed.oracles import CayleyOracle  # pylint: disable=import-error

generator_words = st.lists(st.sampled_from(hexgroup.GENERATORS), max_size=9)


def test_reduce_moves_commuting_letters_together():
    assert hexgroup.reduce(('a1', 'b2', 'a1')) == ('b2',)


def test_reduce_keeps_non_commuting_letters():
    assert hexgroup.reduce(('a1', 'b1', 'a1')) == ('a1', 'b1', 'a1')


def test_reduce_returns_the_shortlex_form():
    assert hexgroup.reduce(('b3', 'a1')) == ('a1', 'b3')
    assert hexgroup.reduce(('b1', 'a1')) == ('b1', 'a1')


def test_reduce_raises_on_unknown_generators():
    with pytest.raises(exceptions.PreconditionError):
        hexgroup.reduce(('a1', 'c1'))


@given(generator_words)
def test_reduce_is_idempotent(word):
    once = hexgroup.reduce(word)

    assert hexgroup.reduce(once) == once
    assert len(once) <= len(word)


@settings(max_examples=50, deadline=None)
@given(generator_words)
def test_reduced_length_matches_the_matrix_oracle(word):
    assert len(hexgroup.reduce(word)) == CayleyOracle().descent_length(word)


def test_parse_generators_reads_several_spellings():
    assert hexgroup.parse_generators('a1 b2 a1') == ('a1', 'b2', 'a1')
    assert hexgroup.parse_generators('a1b2') == ('a1', 'b2')
    assert hexgroup.parse_generators('e') == ()


def test_group_element_identity_and_text():
    g = GroupElement.parse('a1 a1')

    assert g == GroupElement.identity()
    assert g.length == 0
    assert str(g) == 'e'
    assert str(GroupElement.parse('b2 a1')) == 'a1 b2'


def test_group_element_multiplication_and_inverse():
    g = GroupElement.parse('a1 b1 a2')

    assert (g * g.inverse()) == GroupElement.identity()
    assert hexgroup.multiply(g, GroupElement.parse('a2')) == GroupElement.parse('a1 b1')
    assert hexgroup.inverse(g) == GroupElement.parse('a2 b1 a1')


def test_group_elements_hash_by_normal_form():
    assert len({GroupElement.parse('a1 b2'), GroupElement.parse('b2 a1')}) == 1


@settings(max_examples=50)
@given(generator_words, generator_words, generator_words)
def test_group_distance_is_a_metric(u, v, w):
    g, h, k = GroupElement(u), GroupElement(v), GroupElement(w)

    assert hexgroup.group_distance(g, h) == hexgroup.group_distance(h, g)
    assert (hexgroup.group_distance(g, h) == 0) == (g == h)
    assert hexgroup.group_distance(g, k) <= hexgroup.group_distance(g, h) + hexgroup.group_distance(h, k)


def test_side_left_rep_moves_the_side_letters_left():
    g = GroupElement.parse('b1 a2 a3 b2 a1 b1')

    assert hexgroup.side_left_rep(g, Family.A) == ('a2', 'a3', 'b1', 'a1', 'b2', 'b1')


@given(generator_words)
def test_side_left_rep_is_a_geodesic_of_the_element(word):
    g = GroupElement(word)
    for side in Family:
        rep = hexgroup.side_left_rep(g, side)

        assert GroupElement(rep) == g
        assert len(rep) == g.length


@given(generator_words)
def test_side_letters_can_not_move_further_left(word):
    g = GroupElement(word)
    for side in Family:
        rep = hexgroup.side_left_rep(g, side)
        for before, letter in zip(rep, rep[1:]):
            if hexgroup.family_of(letter) is side:
                assert hexgroup.family_of(before) is side or not hexgroup.HEXAGON.commutes(before, letter)


def test_commutation_table_of_the_hexagon():
    table = hexgroup.hexagon_table()

    assert table.commutes('a1', 'b2')
    assert not table.commutes('a1', 'b1')
    assert not table.commutes('a1', 'a2')
    assert len(table.cliques()) == 13


def test_commutation_table_rejects_self_commuting_pairs():
    with pytest.raises(exceptions.ConfigurationError):
        hexgroup.CommutationTable(['x'], [('x', 'x')])


def test_growth_series_of_the_hexagon():
    assert hexgroup.growth_series(6) == [1, 6, 24, 90, 336, 1254, 4680]


def test_growth_series_of_a_free_product_of_two_involutions():
    table = hexgroup.CommutationTable(['s', 't'], [])

    assert hexgroup.growth_series(4, table) == [1, 2, 2, 2, 2]


def test_bfs_ball_sizes():
    ball = hexgroup.bfs_ball(4)

    assert len(ball) == 457
    assert list(ball.values())[:7] == [0, 1, 1, 1, 1, 1, 1]
    assert all(g.length == d for g, d in ball.items())


def test_bfs_ball_matches_the_oracle_spheres():
    assert CayleyOracle().sphere_sizes(3) == hexgroup.growth_series(3)


def test_bfs_ball_raises_on_negative_radius():
    with pytest.raises(exceptions.PreconditionError):
        hexgroup.bfs_ball(-1)


def test_bfs_ball_respects_the_cap_from_the_environment(monkeypatch):
    monkeypatch.setenv(defaults.ENV_BFS_CAP, '2')

    with pytest.raises(exceptions.BallCapExceededError):
        hexgroup.bfs_ball(3)


def test_bfs_ball_refuses_balls_above_the_memory_guard(monkeypatch):
    monkeypatch.setattr(hexgroup.defaults, 'MAX_BALL_ELEMENTS', 100)

    with pytest.raises(exceptions.BallCapExceededError):
        hexgroup.bfs_ball(3)


def test_ball_records_are_text():
    records = hexgroup.ball_records(hexgroup.bfs_ball(1))

    assert records[0] == {'g': 'e', 'distance': 0}
    assert records[1] == {'g': 'a1', 'distance': 1}


def test_random_element_is_seeded():
    first = hexgroup.random_element(8, seed=1)

    assert first == hexgroup.random_element(8, seed=1)
    assert first.length >= 4


def test_random_element_raises_on_negative_length():
    with pytest.raises(exceptions.PreconditionError):
        hexgroup.random_element(-1, seed=0)
