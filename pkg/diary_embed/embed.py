"""
The embedding of the hexagon group into a product of two trees.

F_A(g) reads the a-left representation of g as u_1 a_1 u_2 a_2 ... u_m a_m u_{m+1} (u_i words on the b letters)
and returns the sentence (u_1 a_1 | u_2 a_2 | ... | u_m a_m); F_B is the same with the families swapped.
g -> (F_A g, F_B g) is an isometric embedding into the product of two sentence-trees with the sum metric. Composing
each factor with the Leo + Virgo diary gives a quasiisometric embedding into a product of two trees over a
finite alphabet, which binary recoding turns into a product of binary trees.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, confloat, conint, root_validator

from diary_embed import defaults, exceptions
from diary_embed.codec import Codec
from diary_embed.diary import BaseDiary, CombinedDiary, LeoDiary, VirgoDiary, Witness, check_leo, check_virgo
from diary_embed.hexgroup import GENERATORS, Family, GroupElement, family_of, group_distance, side_left_rep
from diary_embed.statistics import get_statistic
from diary_embed.words import Sentence, Word, sentence_tree_distance, split_common, word_tree_distance

logger = logging.getLogger(defaults.NAME)

PROVED_VALUES = {
    'finite_statistics': defaults.FINITE_STATISTICS,
    'J_finite': defaults.J_FINITE,
    'linear_statistics': defaults.LINEAR_STATISTICS,
    'delta': defaults.DELTA,
    'J_linear': defaults.J_LINEAR,
    'N': defaults.N_AWL,
    'epsilon': defaults.EPSILON,
}


class EmbeddingConfig(BaseModel):
    """
    The data of the diary composed with F.

    paper mode pins every constant to the values the embedding is proved for; custom mode allows any
    values and a smaller page limit kappa for Alice's Diary (bounds are then reported as not provable).
    """
    mode: Literal['paper', 'custom'] = defaults.MODE_PAPER
    finite_statistics: List[dict] = defaults.FINITE_STATISTICS
    J_finite: conint(ge=1) = defaults.J_FINITE  # type: ignore
    linear_statistics: List[dict] = defaults.LINEAR_STATISTICS
    delta: confloat(ge=0, lt=1) = defaults.DELTA  # type: ignore
    J_linear: conint(ge=1) = defaults.J_LINEAR  # type: ignore
    N: confloat(gt=0) = defaults.N_AWL  # type: ignore
    epsilon: confloat(gt=0) = defaults.EPSILON  # type: ignore
    kappa: Optional[conint(ge=1)] = None  # type: ignore

    class Config:
        extra = 'forbid'

    @root_validator(skip_on_failure=True)
    def check_mode(cls, values):  # pylint: disable=no-self-argument
        if values['mode'] == defaults.MODE_PAPER:
            if values.get('kappa') is not None:
                raise ValueError('kappa can only be set in custom mode')
            for key, expected in PROVED_VALUES.items():
                if values[key] != expected:
                    raise ValueError(f'{key} is fixed to {expected} in paper mode')
        elif values.get('kappa') is None:
            values['kappa'] = defaults.CUSTOM_KAPPA
        return values


class PairClassification(BaseModel):
    """
    Which criterion the dominant factor of a pair satisfies.
    """
    factor: str
    criterion: str
    witness: Optional[Witness] = None
    m: int
    n: int
    d_group: int

    @property
    def balanced(self) -> bool:
        return balanced(self.m, self.n)


class DistortionRecord(BaseModel):
    """
    One measured pair: distances in G, in each tree factor and in the product.
    """
    g: str
    g2: str
    d_group: int
    d1: int
    d2: int
    d_image: int
    classification: str = Field(..., alias='class')

    class Config:
        allow_population_by_field_name = True

    @property
    def ratio(self) -> float:
        return self.d_image / self.d_group if self.d_group else 1.0

    def to_row(self) -> dict:
        return self.dict(by_alias=True)


def balanced(m: int, n: int) -> bool:
    """
    Neither tail is shorter than a third of m + n; unbalanced pairs are bounded below by |m - n|.
    """
    return 3 * m >= m + n and 3 * n >= m + n


def F_side(g: GroupElement, side: Family) -> Sentence:  # pylint: disable=invalid-name
    """
    The sentence of a side-left representation: each word is a run of other-family letters followed by one
    side letter; the trailing run of other-family letters is dropped.
    """
    words: List[List[str]] = []
    current: List[str] = []
    for letter in side_left_rep(g, side):
        current.append(letter)
        if family_of(letter) is side:
            words.append(current)
            current = []
    return Sentence(words)


def F(g: GroupElement) -> Tuple[Sentence, Sentence]:  # pylint: disable=invalid-name
    return F_side(g, Family.A), F_side(g, Family.B)


def appendix_diary(config: EmbeddingConfig = None) -> CombinedDiary:
    """
    Leo on the finite statistics paired with Virgo on the linear ones.
    """
    config = config or EmbeddingConfig()
    finite = [get_statistic(descriptor) for descriptor in config.finite_statistics]
    linear = [get_statistic(descriptor) for descriptor in config.linear_statistics]
    leo = LeoDiary(config={'J': config.J_finite}, statistics=finite)  # type: ignore
    virgo = VirgoDiary(config={'delta': config.delta, 'J': config.J_linear, 'N': config.N,
                               'epsilon': config.epsilon, 'kappa': config.kappa}, statistics=linear)  # type: ignore
    return CombinedDiary(diaries=[leo, virgo])


class Embedding:
    """
    The composite g -> (D F_A g, D F_B g) with memoized images.
    """

    def __init__(self, config: EmbeddingConfig = None, diary: BaseDiary = None):
        self.config = config or EmbeddingConfig()
        self.diary = diary or appendix_diary(self.config)
        self.finite = [get_statistic(descriptor) for descriptor in self.config.finite_statistics]
        self.linear = [get_statistic(descriptor) for descriptor in self.config.linear_statistics]
        self._sentences: Dict[GroupElement, Tuple[Sentence, Sentence]] = {}
        self._images: Dict[GroupElement, Tuple[Word, Word]] = {}

    @property
    def M(self):  # pylint: disable=invalid-name
        return self.diary.lower_bound_M

    def sentences(self, g: GroupElement) -> Tuple[Sentence, Sentence]:
        if g not in self._sentences:
            self._sentences[g] = F(g)
        return self._sentences[g]

    def images(self, g: GroupElement) -> Tuple[Word, Word]:
        if g not in self._images:
            first, second = self.sentences(g)
            self._images[g] = (self.diary.apply(first), self.diary.apply(second))
        return self._images[g]

    def classify(self, g: GroupElement, g2: GroupElement) -> PairClassification:
        """
        Classify a pair by its dominant factor, the one where the sentences are further apart (ties go to A):
        leo if the finite statistics certify Leo, else virgo if the linear ones certify Virgo, else neither.

        Raises:
            PreconditionError: If g equals g2
        """
        if g == g2:
            raise exceptions.PreconditionError('classify_pair', 'the elements are equal')
        (a, b), (a2, b2) = self.sentences(g), self.sentences(g2)
        if sentence_tree_distance(a, a2) >= sentence_tree_distance(b, b2):
            factor, alpha, beta = Family.A, a, a2
        else:
            factor, alpha, beta = Family.B, b, b2
        _, tail_a, tail_b = split_common(alpha, beta)
        m, n = len(tail_a), len(tail_b)
        d_group = group_distance(g, g2)

        witness = check_leo(alpha, beta, self.finite, self.config.J_finite)
        if witness is not None:
            return PairClassification(factor=factor.value, criterion='leo', witness=witness, m=m, n=n,
                                      d_group=d_group)
        witness = check_virgo(alpha, beta, self.linear, self.config.delta, self.config.J_linear, self.config.N,
                              self.config.epsilon)
        if witness is not None:
            return PairClassification(factor=factor.value, criterion='virgo', witness=witness, m=m, n=n,
                                      d_group=d_group)
        return PairClassification(factor=factor.value, criterion='neither', m=m, n=n, d_group=d_group)

    def measure(self, g: GroupElement, g2: GroupElement) -> DistortionRecord:
        first, second = self.images(g)
        first2, second2 = self.images(g2)
        d1 = word_tree_distance(first, first2)
        d2 = word_tree_distance(second, second2)
        classification = self.classify(g, g2).criterion if g != g2 else 'neither'
        return DistortionRecord(g=str(g), g2=str(g2), d_group=group_distance(g, g2), d1=d1, d2=d2,
                                d_image=d1 + d2, classification=classification)


@lru_cache(maxsize=8)
def _cached_embedding(config_json: str) -> Embedding:
    return Embedding(EmbeddingConfig.parse_raw(config_json))


def get_embedding(config: EmbeddingConfig = None) -> Embedding:
    """
    One shared Embedding per configuration, so images are computed once per process.
    """
    config = config or EmbeddingConfig()
    return _cached_embedding(config.json(sort_keys=True))


def h2_embed(g: GroupElement, config: EmbeddingConfig = None) -> Tuple[Word, Word]:
    return get_embedding(config).images(g)


def classify_pair(g: GroupElement, g2: GroupElement, config: EmbeddingConfig = None) -> PairClassification:
    return get_embedding(config).classify(g, g2)


def measure_pair(g: GroupElement, g2: GroupElement, config: EmbeddingConfig = None) -> DistortionRecord:
    return get_embedding(config).measure(g, g2)


def embedding_codec(config: EmbeddingConfig = None) -> Codec:
    """
    The codec of the diary alphabet of the embedding, over the hexagon generators.
    """
    return Codec.for_diary(get_embedding(config).diary, GENERATORS)
