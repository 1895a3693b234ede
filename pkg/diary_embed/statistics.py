"""
Statistics read a sentence and report a summary of it.

A finite statistic reports a symbol from a finite set. A linear statistic of coefficient tau reports, for every
natural c, a word of at most tau * c letters; the words are prefixes of one another as c grows and their limit
is the infinite-precision value of the statistic.

All statistics are plugins of the namespace diary_embed.statistics.BaseStatistic and are built from
descriptors {'type': name, 'config': {...}}.
"""

import logging
import random
from typing import Hashable, List, Literal, Optional, Sequence, Union

from pydantic import BaseModel, conint

from diary_embed import defaults, exceptions, utils
from diary_embed.codec import Layout
from diary_embed.words import Sentence, Word, decimal_expansion, word_reverse

logger = logging.getLogger(defaults.NAME)


class BaseStatistic:
    """
    The base class of every statistic.

    The offset r of the config shifts the statistic back in time: it reads the sentence as it stood
    at day i - r + 1. With the default r = 1 the statistic reads the whole sentence.
    """
    service_name = ''

    class Config(BaseModel):
        offset: conint(ge=1) = 1  # type: ignore

        class Config:
            extra = 'forbid'

    def __init__(self, config: dict = None, **kwargs):  # pylint: disable=unused-argument
        config = config or {}
        self.config = self.Config(**config)

    @property
    def offset(self) -> int:
        return self.config.offset

    @property
    def is_finite(self) -> bool:
        return isinstance(self, FiniteStatistic)

    @property
    def name(self) -> str:
        params = ','.join(f'{k}={v}' for k, v in self.config.dict().items() if k != 'offset' or v != 1)
        return f'{self.service_name}({params})'

    def descriptor(self) -> dict:
        return {'type': self.service_name, 'config': self.config.dict()}

    def shifted(self, alpha: Sentence) -> Sentence:
        """
        The sentence as it stood at day i - r + 1, empty if that day precedes the first day.
        """
        depth = len(alpha) - self.offset + 1
        if depth <= 0:
            return Sentence()
        return alpha[:depth]

    def addressed_word(self, alpha: Sentence) -> Optional[Word]:
        shifted = self.shifted(alpha)
        if not shifted:
            return None
        return shifted[-1]

    def __repr__(self):
        return f'<{type(self).__name__} {self.name}>'


class FiniteStatistic(BaseStatistic):
    """
    A statistic with values in a finite symbol set.
    """

    def evaluate(self, alpha: Sentence) -> Hashable:
        """
        The symbol the statistic reports for the sentence.

        Raises:
            NotImplementedError: Base class, hence not implemented.
        """
        raise NotImplementedError

    def codomain_size(self, alphabet_size: int) -> int:
        """
        The number of symbols the statistic can report for an input alphabet of the given size.

        Raises:
            NotImplementedError: Base class, hence not implemented.
        """
        raise NotImplementedError

    def layout(self, alphabet: Sequence[Hashable]) -> Layout:
        """
        The shape of the symbols the statistic reports for sentences over the alphabet.

        Raises:
            NotImplementedError: Base class, hence not implemented.
        """
        raise NotImplementedError

    def __call__(self, alpha: Sentence) -> Hashable:
        return self.evaluate(alpha)


class LastLetter(FiniteStatistic):
    """
    The final letter of the addressed word.

    Example config:
    {'type': 'last-letter'}
    """
    service_name = 'last-letter'

    def evaluate(self, alpha: Sentence) -> Hashable:
        word = self.addressed_word(alpha)
        if word is None:
            return defaults.OUT_OF_RANGE
        return word[-1]

    def codomain_size(self, alphabet_size: int) -> int:
        return alphabet_size + 1

    def layout(self, alphabet: Sequence[Hashable]) -> Layout:
        return Layout.enum(list(alphabet) + [defaults.OUT_OF_RANGE])


class TruncKappa(FiniteStatistic):
    """
    The final kappa letters of the addressed word.

    Example config:
    {'type': 'trunc-kappa', 'config': {'kappa': 3}}
    """
    service_name = 'trunc-kappa'

    class Config(BaseStatistic.Config):
        kappa: conint(ge=1)  # type: ignore

    @property
    def kappa(self) -> int:
        return self.config.kappa

    def evaluate(self, alpha: Sentence) -> Hashable:
        word = self.addressed_word(alpha)
        if word is None:
            return defaults.OUT_OF_RANGE
        return word[-self.kappa:]

    def codomain_size(self, alphabet_size: int) -> int:
        return 1 + sum(alphabet_size ** length for length in range(1, self.kappa + 1))

    def layout(self, alphabet: Sequence[Hashable]) -> Layout:
        return Layout.optional(defaults.OUT_OF_RANGE, Layout.word(Layout.enum(alphabet), self.kappa))


class ProductStatistic(FiniteStatistic):
    """
    The product of finitely many finite statistics, reporting the tuple of their symbols.

    Example config:
    {'type': 'product', 'config': {'statistics': [{'type': 'last-letter'}, {'type': 'last-letter', 'config': {'offset': 2}}]}}
    """
    service_name = 'product'

    class Config(BaseModel):
        statistics: List[dict] = []

        class Config:
            extra = 'forbid'

    def __init__(self, config: dict = None, statistics: Sequence[FiniteStatistic] = None, **kwargs):
        super().__init__(config, **kwargs)
        if statistics is None:
            statistics = [get_statistic(descriptor) for descriptor in self.config.statistics]
        self.statistics = list(statistics)
        if not self.statistics:
            raise exceptions.ConfigurationError('a product needs at least one statistic')
        for stat in self.statistics:
            if not isinstance(stat, FiniteStatistic):
                raise exceptions.ConfigurationError(f'{stat!r} is not a finite statistic')

    @property
    def offset(self) -> int:
        return 1

    @property
    def name(self) -> str:
        return 'product(' + ','.join(stat.name for stat in self.statistics) + ')'

    def descriptor(self) -> dict:
        return {'type': self.service_name, 'config': {'statistics': [s.descriptor() for s in self.statistics]}}

    def evaluate(self, alpha: Sentence) -> Hashable:
        return tuple(stat.evaluate(alpha) for stat in self.statistics)

    def codomain_size(self, alphabet_size: int) -> int:
        size = 1
        for stat in self.statistics:
            size *= stat.codomain_size(alphabet_size)
        return size

    def layout(self, alphabet: Sequence[Hashable]) -> Layout:
        return Layout.record([stat.layout(alphabet) for stat in self.statistics])


class LinearStatistic(BaseStatistic):
    """
    A statistic of coefficient tau.

    Concrete statistics only describe their limit, the value at infinite precision; the value at
    precision c is its first tau * c letters. Both monotonicity in c and the length bound follow.
    """

    class Config(BaseStatistic.Config):
        tau: conint(ge=1) = 1  # type: ignore

    @property
    def tau(self) -> int:
        return self.config.tau

    def limit(self, alpha: Sentence) -> Word:
        """
        The infinite-precision value stat_inf(alpha).

        Raises:
            NotImplementedError: Base class, hence not implemented.
        """
        raise NotImplementedError

    def letters(self, alphabet: Sequence[Hashable]) -> List[Hashable]:
        """
        The letters the limit can contain for sentences over the alphabet; by default the alphabet itself.
        """
        return list(alphabet)

    def eval_first_n(self, n: int, alpha: Sentence) -> Word:
        if n < 0:
            raise exceptions.PreconditionError('eval_first_n', f'negative length {n}')
        return self.limit(alpha)[:n]

    def evaluate(self, c: int, alpha: Sentence) -> Word:
        if c < 0:
            raise exceptions.PreconditionError('evaluate', f'negative precision {c}')
        return self.eval_first_n(self.tau * c, alpha)

    def __call__(self, c: int, alpha: Sentence) -> Word:
        return self.evaluate(c, alpha)


class Ltrunc(LinearStatistic):
    """
    The final tau * c letters of the addressed word, read backwards.

    Example config:
    {'type': 'ltrunc', 'config': {'tau': 12}}
    """
    service_name = 'ltrunc'

    def limit(self, alpha: Sentence) -> Word:
        word = self.addressed_word(alpha)
        if word is None:
            return Word()
        return word_reverse(word)

    def eval_first_n(self, n: int, alpha: Sentence) -> Word:
        word = self.addressed_word(alpha)
        if word is None or n <= 0:
            return Word()
        return word_reverse(word[-n:])


class DecimalLengthLtrunc(LinearStatistic):
    """
    The final tau * c digits of the decimal expansion of the length of the addressed word, read backwards.

    Example config:
    {'type': 'decimal-length-ltrunc', 'config': {'tau': 12}}
    """
    service_name = 'decimal-length-ltrunc'

    def limit(self, alpha: Sentence) -> Word:
        word = self.addressed_word(alpha)
        if word is None:
            return Word()
        return word_reverse(decimal_expansion(len(word)))

    def letters(self, alphabet: Sequence[Hashable]) -> List[Hashable]:
        return list('0123456789')


class OrderOfPriority(LinearStatistic):
    """
    Lists the events of the sentence in a priority order and reports the first tau * c of them.

    The priority over a sentence of l letters is a permutation of 1..l chosen by a rule:
    recent-first lists the newest event first, chronological the oldest, shuffled a seeded permutation.

    Example config:
    {'type': 'order-of-priority', 'config': {'tau': 2, 'order': 'recent-first'}}
    """
    service_name = 'order-of-priority'

    class Config(LinearStatistic.Config):
        order: Literal['recent-first', 'chronological', 'shuffled'] = 'recent-first'
        seed: int = 0

    def permutation(self, total: int) -> List[int]:
        positions = list(range(total))
        if self.config.order == 'recent-first':
            positions.reverse()
        elif self.config.order == 'shuffled':
            random.Random(f'{self.config.seed}:{total}').shuffle(positions)
        return positions

    def limit(self, alpha: Sentence) -> Word:
        events = [letter for word in self.shifted(alpha) for letter in word]
        return Word(events[index] for index in self.permutation(len(events)))


Statistic = Union[FiniteStatistic, LinearStatistic]


def get_statistic(descriptor: Union[dict, BaseStatistic]) -> Statistic:
    """
    Resolve a descriptor to a statistic, statistics themselves are returned as is.
    """
    if isinstance(descriptor, BaseStatistic):
        return descriptor  # type: ignore
    return utils.get_provider_by_name_and_type('statistic', descriptor)


def builtin_statistic(kind: str, params: dict = None) -> Statistic:
    """
    Build one of the registered statistics by name.

    Args:
        kind (str): last-letter, trunc-kappa, ltrunc, decimal-length-ltrunc, order-of-priority or product
        params (dict, optional): The config of the statistic

    Raises:
        UnknownServiceError: If no statistic of that name is registered
        ConfigurationError: If the params do not validate, e.g. kappa or tau below 1

    Returns:
        The statistic
    """
    return get_statistic({'type': kind, 'config': params or {}})


def product_statistic(statistics: Sequence[FiniteStatistic]) -> ProductStatistic:
    """
    Raises:
        ConfigurationError: If statistics is empty or holds a linear statistic
    """
    return ProductStatistic(statistics=statistics)


def eval_linear_inf(stat: LinearStatistic, n: int, alpha: Sentence) -> Word:
    """
    The first n letters of the infinite-precision value of a linear statistic.
    """
    return stat.eval_first_n(n, alpha)
