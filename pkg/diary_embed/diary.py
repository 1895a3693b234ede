"""
Diaries: height and order preserving maps from the sentence-tree into a word-tree over a diary alphabet.

A diary writes one chapter per day, and chapter i only depends on the first i days. Every diary here is a
plugin of the namespace diary_embed.diary.BaseDiary. apply() returns a Word over the diary alphabet, one
symbol per chapter, so distances between images are word-tree distances.
"""
import logging
import math
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, confloat, conint

from diary_embed import defaults, exceptions, utils
from diary_embed.codec import Layout
from diary_embed.statistics import (BaseStatistic, FiniteStatistic, LinearStatistic, get_statistic,
                                    product_statistic)
from diary_embed.words import Sentence, Word, awl, norm_r, sentence_tree_distance, split_common, word_reverse, \
    word_tree_distance

logger = logging.getLogger(defaults.NAME)

StatisticLike = Union[dict, BaseStatistic]


class Witness(BaseModel):
    """
    The day offset j and the statistic that certify a criterion for a pair of sentences.
    """
    j: int
    statistic: str
    index: int


class LowerBound(BaseModel):
    """
    d(D alpha, D beta) >= d(alpha, beta) / M for every pair satisfying the criterion.

    provable is False when the diary was built with constants the proof does not cover.
    """
    M: Fraction
    criterion: str
    provable: bool = True

    class Config:
        arbitrary_types_allowed = True


class VirgoConstants(BaseModel):
    """
    The constants of the Virgo diary, derived exactly from the largest coefficient tau and delta, J, N, epsilon.
    """
    tau: int
    delta: Fraction
    J: int
    N: Fraction
    epsilon: Fraction
    omega: int
    U: Fraction
    V: Fraction
    proof_kappa: int
    kappa: int
    M: Fraction

    class Config:
        arbitrary_types_allowed = True

    @classmethod
    def derive(cls, taus: Sequence[int], delta: utils.Number, J: int, N: utils.Number, epsilon: utils.Number,
               kappa: Optional[int] = None) -> 'VirgoConstants':
        """
        Derive omega, U, V, kappa and M.

            omega = ceil(tau / epsilon)
            U = 12 tau J / (1 - delta) + omega N + 1
            V = 12 (tau + epsilon) J / (1 - delta) + omega N + 1
            kappa = the least integer above 16U/(1-delta), 64 J tau/(1-delta), 16V/(1-delta), 64 J (tau+epsilon)/(1-delta)
            M = max(3, 8 / (1 - delta), 32 J / (1 - delta))

        Args:
            taus: The coefficients of the linear statistics
            kappa (int, optional): Replaces the derived kappa of Alice's Diary

        Raises:
            ConfigurationError: If there is no statistic or a constant is out of range
        """
        if not taus:
            raise exceptions.ConfigurationError('Virgo needs at least one linear statistic')
        delta, N, epsilon = utils.as_fraction(delta), utils.as_fraction(N), utils.as_fraction(epsilon)
        if not 0 <= delta < 1:
            raise exceptions.ConfigurationError(f'delta should be in [0, 1), got {delta}')
        if J < 1 or N <= 0 or epsilon <= 0:
            raise exceptions.ConfigurationError(f'J, N and epsilon should be positive, got {J}, {N}, {epsilon}')

        tau = max(taus)
        slack = 1 - delta
        omega = math.ceil(Fraction(tau) / epsilon)
        U = 12 * tau * J / slack + omega * N + 1
        V = 12 * (tau + epsilon) * J / slack + omega * N + 1
        threshold = max(16 * U / slack, 64 * J * tau / slack, 16 * V / slack, 64 * J * (tau + epsilon) / slack)
        proof_kappa = math.floor(threshold) + 1
        M = max(Fraction(3), 8 / slack, 32 * J / slack)
        if kappa is not None and kappa < 1:
            raise exceptions.ConfigurationError(f'kappa should be positive, got {kappa}')

        return cls(tau=tau, delta=delta, J=J, N=N, epsilon=epsilon, omega=omega, U=U, V=V,
                   proof_kappa=proof_kappa, kappa=kappa if kappa is not None else proof_kappa, M=M)

    @property
    def provable(self) -> bool:
        return self.kappa >= self.proof_kappa

    def summary(self) -> Dict[str, str]:
        return {key: str(value) for key, value in self.dict().items()}


class AliceDiaryState:
    """
    Alice's Diary of page limit kappa, written one day at a time.

    Every event of a day is logged; then Alice records, one per page, the most recent event not yet
    recorded, until the chapter has kappa pages or nothing is left. The unrecorded events always form a
    stack in chronological order, so the most recent one is its top.
    """

    def __init__(self, kappa: int):
        if kappa < 1:
            raise exceptions.PreconditionError('alice_diary', f'kappa should be positive, got {kappa}')
        self.kappa = kappa
        self.day = 0
        self.events: List[Tuple[int, Hashable]] = []
        self.unrecorded: List[int] = []
        self.chapters: List[Word] = []
        self.slots: Dict[int, Tuple[int, int]] = {}

    def advance(self, word: Sequence[Hashable]) -> Word:
        """
        Log one day and write its chapter.

        Returns:
            Word: The chapter, the recorded letters page by page
        """
        if not word:
            raise exceptions.PreconditionError('alice_diary', f'day {self.day + 1} is empty')
        self.day += 1
        for letter in word:
            self.unrecorded.append(len(self.events))
            self.events.append((self.day, letter))

        pages = []
        while self.unrecorded and len(pages) < self.kappa:
            index = self.unrecorded.pop()
            pages.append(self.events[index][1])
            self.slots[index] = (self.day, len(pages))
        chapter = Word(pages)
        self.chapters.append(chapter)
        return chapter

    def is_recorded(self, index: int) -> bool:
        return index in self.slots


def alice_diary(kappa: int, alpha: Sentence) -> Sentence:
    """
    Alice's Diary AD_kappa of a sentence, one chapter per day.

    Raises:
        PreconditionError: If kappa < 1
    """
    state = AliceDiaryState(kappa)
    for word in alpha:
        state.advance(word)
    return Sentence(state.chapters)


def _resolve(statistics: Sequence[StatisticLike]) -> List[BaseStatistic]:
    return [get_statistic(stat) for stat in statistics]


def _split(operation: str, alpha: Sentence, beta: Sentence) -> Tuple[int, int, int]:
    common, tail_a, tail_b = split_common(alpha, beta)
    if not tail_a and not tail_b:
        raise exceptions.PreconditionError(operation, 'the sentences are equal')
    return len(common), len(tail_a), len(tail_b)


def _day_offsets(delta: Fraction, J: int, m: int, n: int) -> range:
    """
    The offsets j = 1 .. delta min(m, n) + J, further restricted to j <= min(m, n) so that the depth p + j
    prefix exists on both sides.
    """
    bound = math.floor(delta * min(m, n) + J)
    return range(1, min(bound, m, n) + 1)


def check_aries(alpha: Sentence, beta: Sentence, statistics: Sequence[StatisticLike], delta: utils.Number,
                J: int) -> Optional[Witness]:
    """
    Aries: some finite statistic tells apart the depth p + j prefixes, for a j <= delta min(m, n) + J.

    Args:
        alpha, beta: Distinct sentences, p days in common followed by m and n further days

    Raises:
        PreconditionError: If the sentences are equal

    Returns:
        Witness: The smallest such j and the first distinguishing statistic, None if the criterion fails
    """
    p, m, n = _split('check_aries', alpha, beta)
    stats = _resolve(statistics)
    for j in _day_offsets(utils.as_fraction(delta), J, m, n):
        head_a, head_b = alpha[:p + j], beta[:p + j]
        for index, stat in enumerate(stats):
            if stat.evaluate(head_a) != stat.evaluate(head_b):  # type: ignore
                return Witness(j=j, statistic=stat.name, index=index)
    return None


def check_leo(alpha: Sentence, beta: Sentence, statistics: Sequence[StatisticLike], J: int) -> Optional[Witness]:
    return check_aries(alpha, beta, statistics, 0, J)


def _tail_is_short(tail: Sentence, N: Fraction) -> bool:
    return not tail or awl(tail) <= N


def check_virgo(alpha: Sentence, beta: Sentence, statistics: Sequence[StatisticLike], delta: utils.Number, J: int,
                N: utils.Number, epsilon: utils.Number) -> Optional[Witness]:
    """
    Virgo: for some j <= delta min(m, n) + J

    * the days after p + j have average word length at most N on both sides,
    * day p + j is long (at least epsilon (m + n) letters) on either side, or differs between the sides,
    * some linear statistic at precision m + n tells apart the depth p + j prefixes.

    Returns:
        Witness: The smallest such j and the first distinguishing statistic, None if the criterion fails
    """
    p, m, n = _split('check_virgo', alpha, beta)
    stats = _resolve(statistics)
    N, epsilon = utils.as_fraction(N), utils.as_fraction(epsilon)
    long_day = epsilon * (m + n)

    for j in _day_offsets(utils.as_fraction(delta), J, m, n):
        if not (_tail_is_short(alpha[p + j:], N) and _tail_is_short(beta[p + j:], N)):
            continue
        day_a, day_b = alpha[p + j - 1], beta[p + j - 1]
        if not (len(day_a) >= long_day or len(day_b) >= long_day or day_a != day_b):
            continue
        head_a, head_b = alpha[:p + j], beta[:p + j]
        for index, stat in enumerate(stats):
            if stat.evaluate(m + n, head_a) != stat.evaluate(m + n, head_b):  # type: ignore
                return Witness(j=j, statistic=stat.name, index=index)
    return None


def check_taurus(alpha: Sentence, beta: Sentence, statistics: Sequence[StatisticLike], J: int, N: utils.Number,
                 epsilon: utils.Number) -> Optional[Witness]:
    """
    Taurus: for some j <= J the days after p + j have average word length at most N on both sides and,
    for every j' <= j such that all days strictly between p + j' and p + j (inclusive of the latter) are short
    on both sides, some linear statistic at precision m + n tells apart the depth p + j' prefixes.

    Returns:
        Witness: The smallest such j, with the statistic distinguishing at depth p + j
    """
    p, m, n = _split('check_taurus', alpha, beta)
    stats = _resolve(statistics)
    N, epsilon = utils.as_fraction(N), utils.as_fraction(epsilon)
    long_day = epsilon * (m + n)

    def distinguishing(depth: int) -> Optional[int]:
        head_a, head_b = alpha[:depth], beta[:depth]
        for index, stat in enumerate(stats):
            if stat.evaluate(m + n, head_a) != stat.evaluate(m + n, head_b):  # type: ignore
                return index
        return None

    for j in _day_offsets(Fraction(0), J, m, n):
        if not (_tail_is_short(alpha[p + j:], N) and _tail_is_short(beta[p + j:], N)):
            continue
        witness_index = distinguishing(p + j)
        if witness_index is None:
            continue
        holds = True
        j_prime = j
        while j_prime > 1:
            if len(alpha[p + j_prime - 1]) > long_day or len(beta[p + j_prime - 1]) > long_day:
                break
            j_prime -= 1
            if distinguishing(p + j_prime) is None:
                holds = False
                break
        if holds:
            return Witness(j=j, statistic=stats[witness_index].name, index=witness_index)
    return None


def virgo_I_map(statistics: Sequence[StatisticLike], constants: VirgoConstants, alpha: Sentence) -> Sentence:  # pylint: disable=invalid-name
    """
    Recode a sentence so that Alice's Diary can see the linear statistics.

    Day i becomes the starred word of length 1 + omega |w_i| whose letters after the star are tuples
    (letter of w_i repeated omega times, then for each statistic the reversed, padded first omega |w_i|
    letters of its limit on the first i days).

    Raises:
        ConfigurationError: If a statistic is not linear
    """
    stats = _resolve(statistics)
    for stat in stats:
        if not isinstance(stat, LinearStatistic):
            raise exceptions.ConfigurationError(f'{stat!r} is not a linear statistic')

    omega = constants.omega
    words = []
    for i, word in enumerate(alpha, start=1):
        head = alpha[:i]
        width = omega * len(word)
        repeated = tuple(word) * omega
        hats = [word_reverse(norm_r(stat.eval_first_n(width, head), width)) for stat in stats]  # type: ignore
        letters = [(repeated[t],) + tuple(hat[t] for hat in hats) for t in range(width)]
        words.append(Word([defaults.STAR] + letters))
    return Sentence(words)


class BaseDiary:
    """
    The base class of every diary.

    An optional input alphabet records which letters the diary reads; diaries over different
    alphabets can not be combined.
    """
    service_name = ''
    criterion = ''

    class Config(BaseModel):
        class Config:
            extra = 'forbid'

    def __init__(self, config: dict = None, alphabet: Optional[Sequence[Hashable]] = None, **kwargs):  # pylint: disable=unused-argument
        config = config or {}
        self.config = self.Config(**config)
        self.input_alphabet: Optional[FrozenSet[Hashable]] = frozenset(alphabet) if alphabet is not None else None

    @property
    def lower_bound(self) -> Optional[LowerBound]:
        return None

    @property
    def lower_bound_M(self) -> Optional[Fraction]:  # pylint: disable=invalid-name
        bound = self.lower_bound
        return bound.M if bound else None

    def chapters(self, alpha: Sentence) -> List[Hashable]:
        """
        One symbol per day, the i-th only depending on the first i days.

        Raises:
            NotImplementedError: Base class, hence not implemented.
        """
        raise NotImplementedError

    def layout(self, alphabet: Sequence[Hashable]) -> Layout:
        """
        The shape of the chapters the diary writes for sentences over the alphabet.

        Raises:
            NotImplementedError: Base class, hence not implemented.
        """
        raise NotImplementedError

    def apply(self, alpha: Sentence) -> Word:
        return Word(self.chapters(alpha))

    def __call__(self, alpha: Sentence) -> Word:
        return self.apply(alpha)

    def distance(self, alpha: Sentence, beta: Sentence) -> int:
        return word_tree_distance(self.apply(alpha), self.apply(beta))

    def check(self, alpha: Sentence, beta: Sentence) -> Optional[Witness]:  # pylint: disable=unused-argument
        """
        Whether the pair satisfies the criterion the lower bound holds under. None for diaries without one.
        """
        return None

    def __repr__(self):
        return f'<{type(self).__name__} {self.config}>'


class AssociatedDiary(BaseDiary):
    """
    The diary whose chapter i is the value of a finite statistic on the first i days.

    Example config:
    {'type': 'associated', 'config': {'statistic': {'type': 'last-letter'}}}
    """
    service_name = 'associated'

    class Config(BaseDiary.Config):
        statistic: dict = {}

    def __init__(self, config: dict = None, statistic: FiniteStatistic = None, **kwargs):
        super().__init__(config, **kwargs)
        if statistic is None:
            if not self.config.statistic:
                raise exceptions.ConfigurationError('An associated diary needs a statistic')
            statistic = get_statistic(self.config.statistic)  # type: ignore
        if not isinstance(statistic, FiniteStatistic):
            raise exceptions.ConfigurationError(f'{statistic!r} is not a finite statistic')
        self.statistic = statistic

    def chapters(self, alpha: Sentence) -> List[Hashable]:
        return [self.statistic.evaluate(alpha[:i]) for i in range(1, len(alpha) + 1)]

    def layout(self, alphabet: Sequence[Hashable]) -> Layout:
        return self.statistic.layout(alphabet)


class AliceDiary(BaseDiary):
    """
    Alice's Diary as a diary: chapter i is the word of letters recorded on day i.

    Example config:
    {'type': 'alice', 'config': {'kappa': 3}}
    """
    service_name = 'alice'

    class Config(BaseDiary.Config):
        kappa: conint(ge=1)  # type: ignore

    @property
    def kappa(self) -> int:
        return self.config.kappa

    def chapters(self, alpha: Sentence) -> List[Hashable]:
        return list(alice_diary(self.kappa, alpha))

    def layout(self, alphabet: Sequence[Hashable]) -> Layout:
        return Layout.word(Layout.enum(alphabet), self.kappa)


class AriesDiary(BaseDiary):
    """
    The diary associated to the product of a family of finite statistics.

    It satisfies d(D alpha, D beta) >= d(alpha, beta) / M with M = 2J / (1 - delta) whenever the pair
    satisfies Aries for the same family.

    Example config:
    {'type': 'aries', 'config': {'statistics': [{'type': 'last-letter'}], 'delta': 0.5, 'J': 2}}
    """
    service_name = 'aries'
    criterion = 'aries'

    class Config(BaseDiary.Config):
        statistics: List[dict] = []
        delta: confloat(ge=0, lt=1) = 0  # type: ignore
        J: conint(ge=1) = 1  # type: ignore

    def __init__(self, config: dict = None, statistics: Sequence[FiniteStatistic] = None, **kwargs):
        super().__init__(config, **kwargs)
        if statistics is None:
            statistics = _resolve(self.config.statistics)  # type: ignore
        if not statistics:
            raise exceptions.ConfigurationError(f'{self.service_name} needs at least one finite statistic')
        self.statistics = list(statistics)
        self.associated = AssociatedDiary(statistic=product_statistic(self.statistics))

    @property
    def delta(self) -> Fraction:
        return utils.as_fraction(self.config.delta)

    @property
    def J(self) -> int:  # pylint: disable=invalid-name
        return self.config.J

    @property
    def lower_bound(self) -> Optional[LowerBound]:
        return LowerBound(M=Fraction(2 * self.J) / (1 - self.delta), criterion=self.criterion)

    def chapters(self, alpha: Sentence) -> List[Hashable]:
        return self.associated.chapters(alpha)

    def layout(self, alphabet: Sequence[Hashable]) -> Layout:
        return self.associated.layout(alphabet)

    def check(self, alpha: Sentence, beta: Sentence) -> Optional[Witness]:
        return check_aries(alpha, beta, self.statistics, self.delta, self.J)


class LeoDiary(AriesDiary):
    """
    Aries with delta = 0, so M = 2J.

    Example config:
    {'type': 'leo', 'config': {'statistics': [{'type': 'last-letter'}], 'J': 2}}
    """
    service_name = 'leo'
    criterion = 'leo'

    class Config(BaseDiary.Config):
        statistics: List[dict] = []
        J: conint(ge=1) = 1  # type: ignore

    @property
    def delta(self) -> Fraction:
        return Fraction(0)


class VirgoDiary(BaseDiary):
    """
    Alice's Diary, with the derived kappa, of the recoded sentence virgo_I_map(alpha).

    Example config:
    {'type': 'virgo', 'config': {'statistics': [{'type': 'ltrunc', 'config': {'tau': 12}}],
                                 'delta': 0, 'J': 2, 'N': 18, 'epsilon': 1}}
    """
    service_name = 'virgo'
    criterion = 'virgo'

    class Config(BaseDiary.Config):
        statistics: List[dict] = []
        delta: confloat(ge=0, lt=1) = 0  # type: ignore
        J: conint(ge=1) = 1  # type: ignore
        N: confloat(gt=0) = 1  # type: ignore
        epsilon: confloat(gt=0) = 1  # type: ignore
        kappa: Optional[conint(ge=1)] = None  # type: ignore

    def __init__(self, config: dict = None, statistics: Sequence[LinearStatistic] = None, **kwargs):
        super().__init__(config, **kwargs)
        if statistics is None:
            statistics = _resolve(self.config.statistics)  # type: ignore
        for stat in statistics:
            if not isinstance(stat, LinearStatistic):
                raise exceptions.ConfigurationError(f'{stat!r} is not a linear statistic')
        self.statistics = list(statistics)
        self.constants = self.derive_constants()
        logger.debug(f'{self.service_name} constants: {self.constants.summary()}')

    def derive_constants(self) -> VirgoConstants:
        return VirgoConstants.derive([stat.tau for stat in self.statistics], self.config.delta, self.config.J,
                                     self.config.N, self.config.epsilon, kappa=self.config.kappa)

    @property
    def kappa(self) -> int:
        return self.constants.kappa

    @property
    def lower_bound(self) -> Optional[LowerBound]:
        return LowerBound(M=self.constants.M, criterion=self.criterion, provable=self.constants.provable)

    def recode(self, alpha: Sentence) -> Sentence:
        return virgo_I_map(self.statistics, self.constants, alpha)

    def chapters(self, alpha: Sentence) -> List[Hashable]:
        return list(alice_diary(self.kappa, self.recode(alpha)))

    def layout(self, alphabet: Sequence[Hashable]) -> Layout:
        # a page is the day marker or a letter followed by one padded letter per statistic
        fields = [Layout.enum(alphabet)] + [Layout.enum(stat.letters(alphabet) + [defaults.PAD])
                                            for stat in self.statistics]
        return Layout.word(Layout.optional(defaults.STAR, Layout.record(fields)), self.kappa)

    def check(self, alpha: Sentence, beta: Sentence) -> Optional[Witness]:
        return check_virgo(alpha, beta, self.statistics, self.constants.delta, self.config.J, self.constants.N,
                           self.constants.epsilon)


class TaurusDiary(VirgoDiary):
    """
    The Virgo diary with delta = 0 and N replaced by N + 6 J^2 epsilon, whose bound holds under Taurus.

    Example config:
    {'type': 'taurus', 'config': {'statistics': [{'type': 'ltrunc', 'config': {'tau': 1}}], 'J': 2, 'N': 2}}
    """
    service_name = 'taurus'
    criterion = 'taurus'

    class Config(BaseDiary.Config):
        statistics: List[dict] = []
        J: conint(ge=1) = 1  # type: ignore
        N: confloat(gt=0) = 1  # type: ignore
        epsilon: confloat(gt=0) = 1  # type: ignore
        kappa: Optional[conint(ge=1)] = None  # type: ignore

    def derive_constants(self) -> VirgoConstants:
        J, epsilon = self.config.J, utils.as_fraction(self.config.epsilon)
        widened = utils.as_fraction(self.config.N) + 6 * J * J * epsilon
        return VirgoConstants.derive([stat.tau for stat in self.statistics], 0, J, widened, epsilon,
                                     kappa=self.config.kappa)

    def check(self, alpha: Sentence, beta: Sentence) -> Optional[Witness]:
        return check_taurus(alpha, beta, self.statistics, self.config.J, self.config.N, self.config.epsilon)


class CombinedDiary(BaseDiary):
    """
    Chapter-wise pairing of diaries; its bound M is the largest of theirs and holds under any of their criteria.

    Example config:
    {'type': 'combined', 'config': {'diaries': [{'type': 'leo', ...}, {'type': 'virgo', ...}]}}
    """
    service_name = 'combined'

    class Config(BaseDiary.Config):
        diaries: List[dict] = []

    def __init__(self, config: dict = None, diaries: Sequence[BaseDiary] = None, **kwargs):
        super().__init__(config, **kwargs)
        if diaries is None:
            diaries = [get_diary(descriptor) for descriptor in self.config.diaries]
        if not diaries:
            raise exceptions.ConfigurationError('A combined diary needs at least one diary')
        alphabets = [d.input_alphabet for d in diaries if d.input_alphabet is not None]
        for alphabet in alphabets[1:]:
            if alphabet != alphabets[0]:
                raise exceptions.AlphabetMismatchError(alphabets[0], alphabet)
        if alphabets and self.input_alphabet is None:
            self.input_alphabet = alphabets[0]
        self.diaries = list(diaries)

    @property
    def criterion(self) -> str:  # type: ignore
        return ' or '.join(d.criterion for d in self.diaries if d.criterion)

    @property
    def lower_bound(self) -> Optional[LowerBound]:
        bounds = [d.lower_bound for d in self.diaries]
        if not all(bounds):
            return None
        return LowerBound(M=max(b.M for b in bounds), criterion=self.criterion,  # type: ignore
                          provable=all(b.provable for b in bounds))  # type: ignore

    def chapters(self, alpha: Sentence) -> List[Hashable]:
        return list(zip(*(d.chapters(alpha) for d in self.diaries)))

    def layout(self, alphabet: Sequence[Hashable]) -> Layout:
        return Layout.record([d.layout(alphabet) for d in self.diaries])

    def check(self, alpha: Sentence, beta: Sentence) -> Optional[Witness]:
        for diary in self.diaries:
            witness = diary.check(alpha, beta)
            if witness is not None:
                return witness
        return None


def get_diary(descriptor: Union[dict, BaseDiary], **kwargs) -> BaseDiary:
    if isinstance(descriptor, BaseDiary):
        return descriptor
    return utils.get_provider_by_name_and_type('diary', descriptor, **kwargs)


def associated_diary(statistic: FiniteStatistic) -> AssociatedDiary:
    return AssociatedDiary(statistic=statistic)


def aries_diary(statistics: Sequence[FiniteStatistic], delta: utils.Number, J: int) -> AriesDiary:
    return AriesDiary(config={'delta': float(utils.as_fraction(delta)), 'J': J}, statistics=statistics)


def leo_diary(statistics: Sequence[FiniteStatistic], J: int) -> LeoDiary:
    return LeoDiary(config={'J': J}, statistics=statistics)


def virgo_diary(statistics: Sequence[LinearStatistic], delta: utils.Number, J: int, N: utils.Number,
                epsilon: utils.Number, kappa: Optional[int] = None) -> VirgoDiary:
    config = {'delta': float(utils.as_fraction(delta)), 'J': J, 'N': float(utils.as_fraction(N)),
              'epsilon': float(utils.as_fraction(epsilon)), 'kappa': kappa}
    return VirgoDiary(config=config, statistics=statistics)


def taurus_diary(statistics: Sequence[LinearStatistic], J: int, N: utils.Number, epsilon: utils.Number,
                 kappa: Optional[int] = None) -> TaurusDiary:
    config = {'J': J, 'N': float(utils.as_fraction(N)), 'epsilon': float(utils.as_fraction(epsilon)), 'kappa': kappa}
    return TaurusDiary(config=config, statistics=statistics)


def combine_diaries(first: BaseDiary, second: BaseDiary) -> CombinedDiary:
    """
    Pair two diaries chapter by chapter.

    Raises:
        AlphabetMismatchError: If both diaries declare input alphabets and these differ
    """
    return CombinedDiary(diaries=[first, second])


def theorem_lower_bound_holds(diary: BaseDiary, alpha: Sentence, beta: Sentence) -> bool:
    """
    Whether d(D alpha, D beta) >= d(alpha, beta) / M for the diary's M.
    """
    bound = diary.lower_bound
    if bound is None:
        raise exceptions.PreconditionError('theorem_lower_bound_holds', f'{diary!r} has no lower bound')
    return diary.distance(alpha, beta) * bound.M >= sentence_tree_distance(alpha, beta)
