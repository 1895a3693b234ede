"""
The harness subcommands. Each is a plugin of the diary_embed.experiments.BaseExperiment namespace, so a
third party can register more.
"""
import itertools
import json
import logging
import random
from functools import partial
from typing import List, Tuple

from pydantic import BaseModel

from diary_embed import defaults
from diary_embed.codec import binary_recode, hex_dump
from diary_embed.datastore import BaseRecordStore, summarize
from diary_embed.diary import AliceDiary
from diary_embed.embed import EmbeddingConfig, F_side, appendix_diary, balanced, embedding_codec, get_embedding
from diary_embed.executor import BaseExecutor
from diary_embed.hexgroup import (Family, GroupElement, ball_records, bfs_ball, growth_series, random_element,
                                  side_left_rep)
from diary_embed.oracles import run_selftest
from diary_embed.pipeline import ExperimentConfig, ExperimentOutcome
from diary_embed.words import Sentence, render_sentence, render_symbols, sentence_tree_distance

logger = logging.getLogger(defaults.NAME)

Pair = Tuple[GroupElement, GroupElement]


def sweep_pairs(radius: int, samples: int = 0, seed: int = 0) -> List[Pair]:
    """
    Every unordered pair of distinct elements of the ball, in ball order, followed by the seeded random pairs.
    """
    elements = list(bfs_ball(radius))
    pairs = list(itertools.combinations(elements, 2))
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_element(rng.randint(1, defaults.SAMPLE_LENGTH), rng.randrange(2 ** 32))
        g2 = random_element(rng.randint(1, defaults.SAMPLE_LENGTH), rng.randrange(2 ** 32))
        if g != g2:
            pairs.append((g, g2))
    return pairs


def _element(config: ExperimentConfig) -> GroupElement:
    return GroupElement.parse(' '.join(config.arguments))


def measure_worker(config_json: str, pair: Pair) -> dict:
    return get_embedding(EmbeddingConfig.parse_raw(config_json)).measure(*pair).to_row()


def classify_worker(config_json: str, pair: Pair) -> dict:
    g, g2 = pair
    classification = get_embedding(EmbeddingConfig.parse_raw(config_json)).classify(g, g2)
    return {'g': str(g), 'g2': str(g2), 'factor': classification.factor, 'class': classification.criterion,
            'm': classification.m, 'n': classification.n, 'balanced': classification.balanced,
            'd_group': classification.d_group}


def isometry_worker(config_json: str, pair: Pair) -> dict:
    g, g2 = pair
    embedding = get_embedding(EmbeddingConfig.parse_raw(config_json))
    (a, b), (a2, b2) = embedding.sentences(g), embedding.sentences(g2)
    d_a, d_b = sentence_tree_distance(a, a2), sentence_tree_distance(b, b2)
    d_group = (g.inverse() * g2).length
    return {'g': str(g), 'g2': str(g2), 'd_group': d_group, 'd_A': d_a, 'd_B': d_b,
            'violation': d_a + d_b != d_group}


class BaseExperiment:
    """
    The skeleton of a harness subcommand.
    """
    experiment_type = ''

    class Config(BaseModel):
        pass

    def __init__(self, config: dict = None, **kwargs):  # pylint: disable=unused-argument
        config = config or {}
        self.config = self.Config(**config)

    def run(self, config: ExperimentConfig, executor: BaseExecutor,
            record_store: BaseRecordStore) -> ExperimentOutcome:
        """
        Raises:
            NotImplementedError: Base class, hence not implemented.
        """
        raise NotImplementedError


class ReduceExperiment(BaseExperiment):
    """
    Print the shortlex normal form of a word, e for the identity.
    """
    experiment_type = 'reduce'

    def run(self, config, executor, record_store):
        return ExperimentOutcome(lines=[str(_element(config))])


class NormalFormExperiment(BaseExperiment):
    """
    Print the shortlex normal form, or with a side the side-left representation and its sentence.
    """
    experiment_type = 'normal-form'

    def run(self, config, executor, record_store):
        g = _element(config)
        if config.side is None:
            return ExperimentOutcome(lines=[str(g)])
        side = Family(config.side)
        return ExperimentOutcome(lines=[' '.join(side_left_rep(g, side)) or 'e', render_sentence(F_side(g, side))])


class BallExperiment(BaseExperiment):
    """
    Write the ball as (element, distance) records and compare its spheres with the growth series.
    """
    experiment_type = 'ball'

    def run(self, config, executor, record_store):
        ball = bfs_ball(config.radius)
        rows = ball_records(ball)
        spheres = [0] * (config.radius + 1)
        for distance in ball.values():
            spheres[distance] += 1
        expected = growth_series(config.radius)

        violations = int(spheres != expected)
        summary = summarize(self.experiment_type, rows, violations=violations,
                            details={'spheres': spheres, 'growth_series': expected})
        record_store.put_records(rows)
        record_store.put_summary(summary)
        if violations:
            logger.error(f'Sphere sizes {spheres} differ from the growth series {expected}')
        return ExperimentOutcome(status=int(bool(violations)), lines=[summary.json()])


class EmbedExperiment(BaseExperiment):
    """
    Print F_A, F_B, the diary images and their binary recoding for one element, with the codec used.

    The recoding is printed in hexadecimal, a paper mode chapter alone being some ninety thousand bits.
    """
    experiment_type = 'embed'

    def run(self, config, executor, record_store):
        g = _element(config)
        embedding = get_embedding(config.embedding_config())
        (a, b), (image_a, image_b) = embedding.sentences(g), embedding.images(g)
        codec = embedding_codec(config.embedding_config())
        bits_a, bits_b = binary_recode(image_a, codec), binary_recode(image_b, codec)
        line = {
            'g': str(g), 'F_A': render_sentence(a), 'F_B': render_sentence(b),
            'D_A': render_symbols(image_a), 'D_B': render_symbols(image_b),
            'codec_width': codec.width, 'length_A': len(bits_a), 'length_B': len(bits_b),
            'hex_A': hex_dump(bits_a), 'hex_B': hex_dump(bits_b), 'codec': codec.dict(exclude_defaults=True),
        }
        return ExperimentOutcome(lines=[json.dumps(line, ensure_ascii=False)])


class DiaryExperiment(BaseExperiment):
    """
    Print the diary of a sentence: Alice's Diary with page limit --kappa, or the Leo + Virgo diary.
    """
    experiment_type = 'diary'

    def run(self, config, executor, record_store):
        alpha = Sentence.parse(' '.join(config.arguments))
        if config.diary == 'alice':
            diary = AliceDiary(config={'kappa': config.kappa or defaults.DIARY_KAPPA})
            return ExperimentOutcome(lines=[render_sentence(diary.apply(alpha))])
        diary = appendix_diary(config.embedding_config())
        return ExperimentOutcome(lines=[render_symbols(diary.apply(alpha))])


class IsometryExperiment(BaseExperiment):
    """
    Check d(F_A g, F_A g') + d(F_B g, F_B g') = d_G(g, g') over the sweep. Only violating pairs are recorded.
    """
    experiment_type = 'isometry'

    def run(self, config, executor, record_store):
        pairs = sweep_pairs(config.radius, config.samples, config.seed)
        worker = partial(isometry_worker, config.embedding_config().json(sort_keys=True))
        rows = [row for row in executor.map(worker, pairs) if row['violation']]

        summary = summarize(self.experiment_type, [], violations=len(rows), details={'pairs': len(pairs)})
        record_store.put_records(rows)
        record_store.put_summary(summary)
        for row in rows:
            logger.error(f'{row["g"]} / {row["g2"]}: {row["d_A"]} + {row["d_B"]} != {row["d_group"]}')
        return ExperimentOutcome(status=int(bool(rows)), lines=[summary.json()])


class DistortExperiment(BaseExperiment):
    """
    Measure d_image / d_group over the sweep.

    A pair violates a bound when its image is further apart than the pair (the embedding is 1-Lipschitz) or,
    for leo and virgo pairs under a provable bound, when d_image < d_group / 2M.
    """
    experiment_type = 'distort'

    def run(self, config, executor, record_store):
        embedding_config = config.embedding_config()
        bound = get_embedding(embedding_config).diary.lower_bound
        pairs = sweep_pairs(config.radius, config.samples, config.seed)
        rows = executor.map(partial(measure_worker, embedding_config.json(sort_keys=True)), pairs)

        violations = 0
        for row in rows:
            if row['d_image'] > row['d_group']:
                violations += 1
            elif bound and bound.provable and row['class'] != 'neither' and \
                    2 * bound.M * row['d_image'] < row['d_group']:
                violations += 1

        summary = summarize(self.experiment_type, rows, violations=violations,
                            M=str(bound.M) if bound else None,
                            details={'mode': config.mode, 'provable': bool(bound and bound.provable)})
        record_store.put_records(rows)
        record_store.put_summary(summary)
        if violations:
            logger.error(f'{violations} pairs violate a distortion bound')
        return ExperimentOutcome(status=int(bool(violations)), lines=[summary.json()])


class ClassifyExperiment(BaseExperiment):
    """
    Census of the criteria over the sweep. Balanced pairs that satisfy neither criterion are violations.
    """
    experiment_type = 'classify'

    def run(self, config, executor, record_store):
        pairs = sweep_pairs(config.radius, config.samples, config.seed)
        rows = executor.map(partial(classify_worker, config.embedding_config().json(sort_keys=True)), pairs)

        violations = sum(1 for row in rows if row['class'] == 'neither' and balanced(row['m'], row['n']))
        summary = summarize(self.experiment_type, rows, violations=violations,
                            details={'balanced': sum(1 for row in rows if row['balanced'])})
        record_store.put_records(rows)
        record_store.put_summary(summary)
        if violations:
            logger.error(f'{violations} balanced pairs satisfy neither criterion')
        return ExperimentOutcome(status=int(bool(violations)), lines=[summary.json()])


class SelftestExperiment(BaseExperiment):
    """
    Run every oracle check; counterexamples go to stderr and the failures file.
    """
    experiment_type = 'selftest'

    def run(self, config, executor, record_store):
        results = run_selftest(radius=config.radius, failures_file=config.failures_file or defaults.FAILURES_FILE)
        lines = [f'{name}: {"ok" if not failures else f"{len(failures)} failures"}'
                 for name, failures in results.items()]
        failed = sum(1 for failures in results.values() if failures)
        return ExperimentOutcome(status=int(bool(failed)), lines=lines)
