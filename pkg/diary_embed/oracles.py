"""
Independent oracles and exhaustive checks.

Nothing here reuses the fast paths it checks: Alice's Diary is replayed by scanning the event log, and group
lengths come from the Tits representation of the Coxeter group (faithful integer matrices) instead of piles.
"""
import itertools
import logging
import math
import random
from collections import defaultdict
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, conint

from diary_embed import defaults, exceptions, utils
from diary_embed.diary import (AliceDiaryState, BaseDiary, VirgoConstants, alice_diary, aries_diary,
                               theorem_lower_bound_holds, taurus_diary, virgo_diary)
from diary_embed.hexgroup import HEXAGON, CommutationTable, bfs_ball, group_distance
from diary_embed.statistics import LastLetter, LinearStatistic, get_statistic
from diary_embed.words import (Sentence, Word, nomt_distinguish, render_sentence, render_word, sentence_tree_distance,
                               split_common, star, tail_awl, word_reverse, word_tree_distance)

logger = logging.getLogger(defaults.NAME)

Position = Tuple[int, int]
Slot = Tuple[int, int]


class EnumerationGrid(BaseModel):
    """
    Every sentence of 1..max_days words over the alphabet, each word of 1..max_word_length letters.

    Starred grids use the words star + w instead, the star counting towards max_word_length.
    """
    alphabet: List[str]
    max_days: conint(ge=0)  # type: ignore
    max_word_length: conint(ge=0)  # type: ignore
    kappa_min: conint(ge=1) = 1  # type: ignore
    kappa_max: conint(ge=1) = 1  # type: ignore
    starred: bool = False
    budget: conint(ge=0) = 1_000_000  # type: ignore

    def words(self) -> List[Word]:
        if not self.alphabet:
            return []
        if self.starred:
            lengths = range(0, self.max_word_length)
        else:
            lengths = range(1, self.max_word_length + 1)
        found = []
        for length in lengths:
            for letters in itertools.product(sorted(self.alphabet), repeat=length):
                found.append(star(letters) if self.starred else Word(letters))
        return found

    def size(self) -> int:
        count = len(self.words())
        return sum(count ** days for days in range(1, self.max_days + 1)) if count else 0

    def kappas(self) -> range:
        return range(self.kappa_min, self.kappa_max + 1)


def enumerate_sentences(grid: EnumerationGrid) -> Iterator[Sentence]:
    """
    Every sentence of the grid, by number of days then lexicographically.

    Raises:
        BudgetExceededError: If the grid is larger than its budget
    """
    size = grid.size()
    if size > grid.budget:
        raise exceptions.BudgetExceededError(size, grid.budget)
    words = grid.words()
    for days in range(1, grid.max_days + 1):
        for combination in itertools.product(words, repeat=days):
            yield Sentence(combination)


def recording_slots(alpha: Sentence, kappa: int) -> Dict[Position, Optional[Slot]]:
    """
    Replay Alice's Diary naively: every day scan the whole log for the latest unrecorded event, kappa times.

    Returns:
        The (chapter, page) each event (day, letter index, both 1-based) is recorded on, None if never
    """
    if kappa < 1:
        raise exceptions.PreconditionError('recording_slots', f'kappa should be positive, got {kappa}')
    log: List[Position] = []
    slots: Dict[Position, Optional[Slot]] = {}
    for day, word in enumerate(alpha, start=1):
        for index in range(1, len(word) + 1):
            log.append((day, index))
            slots[(day, index)] = None
        for page in range(1, kappa + 1):
            latest = None
            for position in log:
                if slots[position] is None:
                    latest = position
            if latest is None:
                break
            slots[latest] = (day, page)
    return slots


def verify_recording(alpha: Sentence, kappa: int) -> Dict[Position, bool]:
    return {position: slot is not None for position, slot in recording_slots(alpha, kappa).items()}


class CayleyOracle:
    """
    The Tits representation: generator s acts on R^S by e_t -> e_t - 2 B(s, t) e_s, with B(s, s) = 1,
    B(s, t) = 0 when s and t commute and -1 otherwise. The representation is faithful, so group elements
    are identified with their integer matrices.
    """

    def __init__(self, table: CommutationTable = HEXAGON):
        self.table = table
        size = len(table.generators)
        form = np.full((size, size), -1, dtype=object)
        for i, s in enumerate(table.generators):
            for j, t in enumerate(table.generators):
                if i == j:
                    form[i, j] = 1
                elif table.commutes(s, t):
                    form[i, j] = 0
        self.identity = np.identity(size, dtype=int).astype(object)
        self.reflections: Dict[str, np.ndarray] = {}
        for i, s in enumerate(table.generators):
            matrix = self.identity.copy()
            matrix[i, :] = matrix[i, :] - 2 * form[i, :]
            self.reflections[s] = matrix
        self._balls: Dict[int, Dict[tuple, Tuple[int, np.ndarray]]] = {}

    @staticmethod
    def key(matrix: np.ndarray) -> tuple:
        return tuple(matrix.flatten().tolist())

    def matrix(self, word: Sequence[str]) -> np.ndarray:
        result = self.identity
        for letter in self.table.validate(word):
            result = result.dot(self.reflections[letter])
        return result

    def ball(self, radius: int) -> Dict[tuple, Tuple[int, np.ndarray]]:
        """
        Breadth first search over matrices.

        Returns:
            matrix key -> (distance to the identity, inverse matrix)
        """
        if radius in self._balls:
            return self._balls[radius]
        seen: Dict[tuple, Tuple[int, np.ndarray]] = {self.key(self.identity): (0, self.identity)}
        frontier = [(self.identity, self.identity)]
        for distance in range(1, radius + 1):
            next_frontier = []
            for matrix, inverse in frontier:
                for s, reflection in self.reflections.items():
                    product = matrix.dot(reflection)
                    key = self.key(product)
                    if key not in seen:
                        product_inverse = reflection.dot(inverse)
                        seen[key] = (distance, product_inverse)
                        next_frontier.append((product, product_inverse))
            frontier = next_frontier
        self._balls[radius] = seen
        return seen

    def sphere_sizes(self, radius: int) -> List[int]:
        counts = [0] * (radius + 1)
        for distance, _ in self.ball(radius).values():
            counts[distance] += 1
        return counts

    def oracle_distance(self, word: Sequence[str]) -> int:
        """
        Length of the element a word represents, meeting in the middle: w = u v with |u|, |v| <= ceil(|w| / 2).

        Raises:
            BallCapExceededError: If the word is longer than twice the ball cap
        """
        half = math.ceil(len(word) / 2)
        cap = utils.get_bfs_cap()
        if half > cap:
            raise exceptions.BallCapExceededError(half, cap)
        target = self.matrix(word)
        ball = self.ball(half)
        best = None
        for v_length, v_inverse in ball.values():
            u_entry = ball.get(self.key(target.dot(v_inverse)))
            if u_entry is not None:
                total = u_entry[0] + v_length
                best = total if best is None else min(best, total)
        if best is None:
            raise exceptions.InvariantViolationError('oracle_distance', f'no split found for {" ".join(word)}')
        return best

    def descent_length(self, word: Sequence[str]) -> int:
        """
        Exact length: w s is shorter than w exactly when w sends the simple root of s to a negative root,
        i.e. column s of the matrix of w has a negative entry.
        """
        matrix = self.matrix(word)
        length = 0
        while True:
            for column, s in enumerate(self.table.generators):
                if any(entry < 0 for entry in matrix[:, column]):
                    matrix = matrix.dot(self.reflections[s])
                    length += 1
                    break
            else:
                return length


def report_counterexamples(name: str, items: Sequence[str], path: Optional[str] = None):
    """
    Log every counterexample of a check and append them to the failures file.
    """
    if not items:
        return
    for item in items:
        logger.error(f'{name}: {item}')
    if path:
        failures = Path(path)
        utils.safe_make_dir(failures.parent)
        with failures.open('a', encoding='utf-8') as fw:
            for item in items:
                fw.write(f'{name}\t{item}\n')


def _diaries(grid: EnumerationGrid) -> List[Tuple[int, Sentence, Sentence]]:
    return [(kappa, alpha, alice_diary(kappa, alpha)) for alpha in enumerate_sentences(grid) for kappa in grid.kappas()]


def _equal_diary_pairs(grid: EnumerationGrid) -> Iterator[Tuple[int, Sentence, Sentence]]:
    groups: Dict[Tuple[int, Sentence], List[Sentence]] = defaultdict(list)
    for kappa, alpha, diary in _diaries(grid):
        groups[(kappa, diary)].append(alpha)
    for (kappa, _), members in groups.items():
        for alpha, beta in itertools.permutations(members, 2):
            yield kappa, alpha, beta


def check_chapter_prefix_lemma(grid: EnumerationGrid) -> List[str]:
    """
    Starred sentences: if chapter i reads u star ... with u star-free, then day i is star reverse(u).
    """
    failures = []
    for kappa, alpha, diary in _diaries(grid):
        for i, chapter in enumerate(diary, start=1):
            if defaults.STAR not in chapter:
                continue
            before = chapter[:chapter.index(defaults.STAR)]
            if alpha[i - 1][1:] != word_reverse(before):
                failures.append(f'kappa={kappa} alpha={render_sentence(alpha)} chapter {i}={render_word(chapter)}')
    return failures


def check_equal_diary_word_lemma(grid: EnumerationGrid) -> List[str]:
    """
    Starred sentences with equal diaries agree on every day whose starred word fits in a chapter.
    """
    failures = []
    for kappa, alpha, beta in _equal_diary_pairs(grid):
        for i, (day_a, day_b) in enumerate(zip(alpha, beta), start=1):
            if len(day_a) <= kappa and day_a != day_b:
                failures.append(f'kappa={kappa} day {i}: {render_sentence(alpha)} vs {render_sentence(beta)}')
    return failures


def check_recorded_letters_theorem(grid: EnumerationGrid) -> List[str]:
    """
    Starred sentences with equal diaries: letters at the same distance from the end of the same day that are
    both recorded are equal.
    """
    failures = []
    for kappa, alpha, beta in _equal_diary_pairs(grid):
        recorded_a, recorded_b = verify_recording(alpha, kappa), verify_recording(beta, kappa)
        for i, (day_a, day_b) in enumerate(zip(alpha, beta), start=1):
            for back in range(1, min(len(day_a), len(day_b)) + 1):
                pos_a, pos_b = (i, len(day_a) - back + 1), (i, len(day_b) - back + 1)
                if recorded_a[pos_a] and recorded_b[pos_b] and day_a[-back] != day_b[-back]:
                    failures.append(f'kappa={kappa} day {i} from end {back}: '
                                    f'{render_sentence(alpha)} vs {render_sentence(beta)}')
    return failures


def check_awl_recording(grid: EnumerationGrid) -> List[str]:
    """
    A letter whose tail has average word length at most kappa is recorded.
    """
    failures = []
    for alpha in enumerate_sentences(grid):
        for kappa in grid.kappas():
            recorded = verify_recording(alpha, kappa)
            for (i, j), was_recorded in recorded.items():
                average = tail_awl(alpha, i, j)
                if average <= kappa and not was_recorded:
                    failures.append(f'kappa={kappa} alpha={render_sentence(alpha)} letter ({i}, {j})')
    return failures


def check_short_chapter_lemma(grid: EnumerationGrid) -> List[str]:
    """
    A chapter with fewer than kappa pages leaves nothing of the first i days unrecorded.
    """
    failures = []
    for kappa, alpha, diary in _diaries(grid):
        slots = recording_slots(alpha, kappa)
        for i, chapter in enumerate(diary, start=1):
            if len(chapter) >= kappa:
                continue
            missing = [p for p, slot in slots.items() if p[0] <= i and (slot is None or slot[0] > i)]
            if missing:
                failures.append(f'kappa={kappa} alpha={render_sentence(alpha)} chapter {i} misses {missing}')
    return failures


def check_awl_distance_bound(grid: EnumerationGrid) -> List[str]:
    """
    For starred pairs p days in common then m and n more: if distinct letters at the same distance from the end
    of day p + j have tail averages N, N' with kappa >= N (m - j + 1) / (i + 1) and kappa >= N' (n - j + 1) / (i + 1),
    then d(AD alpha, AD beta) >= d(alpha, beta) - 2j - 2i.
    """
    failures = []
    sentences = list(enumerate_sentences(grid))
    diaries = {(kappa, alpha): alice_diary(kappa, alpha) for alpha in sentences for kappa in grid.kappas()}

    for alpha, beta in itertools.combinations(sentences, 2):
        common, tail_a, tail_b = split_common(alpha, beta)
        p, m, n = len(common), len(tail_a), len(tail_b)
        distance = m + n
        for j in range(1, min(m, n) + 1):
            day_a, day_b = alpha[p + j - 1], beta[p + j - 1]
            for back in range(1, min(len(day_a), len(day_b)) + 1):
                if day_a[-back] == day_b[-back]:
                    continue
                n_a = tail_awl(alpha, p + j, len(day_a) - back + 1)
                n_b = tail_awl(beta, p + j, len(day_b) - back + 1)
                for kappa in grid.kappas():
                    d_diary = word_tree_distance(diaries[(kappa, alpha)], diaries[(kappa, beta)])
                    for i in range(0, min(m, n) - j + 1):
                        if kappa * (i + 1) >= n_a * (m - j + 1) and kappa * (i + 1) >= n_b * (n - j + 1) \
                                and d_diary < distance - 2 * j - 2 * i:
                            failures.append(f'kappa={kappa} j={j} i={i}: '
                                            f'{render_sentence(alpha)} vs {render_sentence(beta)}')
    return failures


def check_suffix_or_length(alphabet: Sequence[str], max_length: int, max_k: int) -> List[str]:
    """
    Every pair of distinct words of length at most max_length, within distance k <= max_k, is told apart by
    final letters or length digits.

    A pair is a common prefix followed by two tails that differ in their first letter and have at most max_k
    letters between them. Neither half reads further than max_k letters from the end, so every prefix letter
    before those is fixed to the first letter of the alphabet; all lengths up to max_length are covered.
    """
    failures = []
    letters = sorted(alphabet)
    tails = [Word(t) for length in range(max_k + 1) for t in itertools.product(letters, repeat=length)]
    for prefix_length in range(max_length + 1):
        context = min(prefix_length, max_k)
        for last in itertools.product(letters, repeat=context):
            prefix = Word((letters[0],) * (prefix_length - context) + last)
            for x, y in itertools.combinations(tails, 2):
                if x and y and x[0] == y[0]:
                    continue
                distance = len(x) + len(y)
                if distance > max_k or prefix_length + max(len(x), len(y)) > max_length:
                    continue
                for k in range(distance, max_k + 1):
                    try:
                        nomt_distinguish(prefix + x, prefix + y, k)
                    except exceptions.InvariantViolationError as _e:
                        failures.append(_e.message)
    return failures


def check_alice_implementations(grid: EnumerationGrid) -> List[str]:
    """
    The stack based diary and the naive replay record the same events on the same pages.
    """
    failures = []
    for alpha in enumerate_sentences(grid):
        for kappa in grid.kappas():
            state = AliceDiaryState(kappa)
            positions = []
            for day, word in enumerate(alpha, start=1):
                state.advance(word)
                positions.extend((day, index) for index in range(1, len(word) + 1))
            fast = {positions[i]: state.slots.get(i) for i in range(len(positions))}
            if fast != recording_slots(alpha, kappa):
                failures.append(f'kappa={kappa} alpha={render_sentence(alpha)}')
    return failures


def check_reduction(radius: int, table: CommutationTable = HEXAGON) -> List[str]:
    """
    Ball sizes and element lengths agree between the piles and the matrix oracle.
    """
    failures = []
    oracle = CayleyOracle(table)
    ball = bfs_ball(radius, table)
    expected = oracle.sphere_sizes(radius)
    found = [0] * (radius + 1)
    for element, distance in ball.items():
        found[distance] += 1
        if oracle.descent_length(element.word) != distance:
            failures.append(f'{element} has distance {distance}')
    if found != expected:
        failures.append(f'sphere sizes {found} but the oracle counts {expected}')
    return failures


def check_isometry(radius: int) -> List[str]:
    """
    d_G(g, g') = d(F_A g, F_A g') + d(F_B g, F_B g') on every pair of the ball.
    """
    from diary_embed.embed import F  # pylint: disable=import-outside-toplevel

    failures = []
    elements = list(bfs_ball(radius))
    images = {g: F(g) for g in elements}
    for g, g2 in itertools.combinations(elements, 2):
        (a, b), (a2, b2) = images[g], images[g2]
        split = sentence_tree_distance(a, a2) + sentence_tree_distance(b, b2)
        if split != group_distance(g, g2):
            failures.append(f'{g} / {g2}: {split} != {group_distance(g, g2)}')
    return failures


def random_sentence_pair(rng: random.Random, alphabet: Sequence[str] = ('a', 'b', 'c'), max_days: int = 3,
                         max_word_length: int = 3) -> Tuple[Sentence, Sentence]:
    """
    Two distinct sentences sharing a random number of first days.
    """
    def days(count: int) -> Tuple[Word, ...]:
        return tuple(Word(rng.choice(alphabet) for _ in range(rng.randint(1, max_word_length)))
                     for _ in range(count))

    common = days(rng.randint(0, max_days))
    while True:
        alpha = Sentence(common + days(rng.randint(0, max_days)))
        beta = Sentence(common + days(rng.randint(0, max_days)))
        if alpha != beta:
            return alpha, beta


def check_lower_bound(diary: BaseDiary, pairs: int, seed: int = defaults.SEED) -> List[str]:
    """
    Sample sentence pairs until the diary's criterion certifies the given number of them, and check
    d(D alpha, D beta) >= d(alpha, beta) / M on each certified pair.
    """
    rng = random.Random(seed)
    failures = []
    certified = 0
    for _ in range(pairs * 50):
        if certified == pairs:
            break
        alpha, beta = random_sentence_pair(rng)
        if diary.check(alpha, beta) is None:
            continue
        certified += 1
        if not theorem_lower_bound_holds(diary, alpha, beta):
            failures.append(f'{diary.criterion}: {render_sentence(alpha)} vs {render_sentence(beta)}')
    if certified < pairs:
        failures.append(f'{diary.criterion}: only {certified} of {pairs} sampled pairs were certified')
    return failures


def proved_linear_statistics() -> List[LinearStatistic]:
    return [get_statistic(descriptor) for descriptor in defaults.LINEAR_STATISTICS]  # type: ignore


def check_proved_constants() -> List[str]:
    constants = VirgoConstants.derive([12, 12], defaults.DELTA, defaults.J_LINEAR, defaults.N_AWL, defaults.EPSILON)
    expected = {'omega': 12, 'U': 505, 'V': 529, 'kappa': 8465, 'M': 64}
    return [f'{key}={getattr(constants, key)} expected {value}' for key, value in expected.items()
            if getattr(constants, key) != value]


def check_golden_diary() -> List[str]:
    found = render_sentence(alice_diary(3, Sentence.parse('abac|cb|accc|bcbc|a')))
    return [] if found == 'cab|bca|ccc|cbc|aba' else [f'AD_3 gave {found}']


def lemma_grid() -> EnumerationGrid:
    return EnumerationGrid(alphabet=['a', 'b'], max_days=3, max_word_length=3, kappa_min=1, kappa_max=4,
                           starred=True)


def run_selftest(radius: int = 3, failures_file: Optional[str] = None) -> Dict[str, List[str]]:
    """
    Run every oracle check.

    Returns:
        check name -> counterexamples, empty lists for passing checks
    """
    starred = lemma_grid()
    plain = EnumerationGrid(alphabet=['a', 'b'], max_days=3, max_word_length=3, kappa_min=1, kappa_max=4)
    aries = aries_diary([LastLetter(), LastLetter(config={'offset': 2})], 0.5, 2)
    virgo = virgo_diary(proved_linear_statistics(), defaults.DELTA, defaults.J_LINEAR, defaults.N_AWL,
                        defaults.EPSILON)
    taurus = taurus_diary(proved_linear_statistics(), defaults.J_LINEAR, defaults.N_AWL, defaults.EPSILON)
    checks = {
        'golden-diary': check_golden_diary,
        'proved-constants': check_proved_constants,
        'alice-implementations': lambda: check_alice_implementations(plain),
        'chapter-prefix': lambda: check_chapter_prefix_lemma(starred),
        'equal-diary-words': lambda: check_equal_diary_word_lemma(starred),
        'recorded-letters': lambda: check_recorded_letters_theorem(starred),
        'awl-recording': lambda: check_awl_recording(plain),
        'short-chapter': lambda: check_short_chapter_lemma(plain),
        'awl-distance-bound': lambda: check_awl_distance_bound(starred),
        'aries-bound': lambda: check_lower_bound(aries, 1000),
        'virgo-bound': lambda: check_lower_bound(virgo, 200),
        'taurus-bound': lambda: check_lower_bound(taurus, 200),
        'suffix-or-length': lambda: check_suffix_or_length(['a', 'b'], 30, 3),
        'reduction': lambda: check_reduction(radius),
        'isometry': lambda: check_isometry(radius),
    }
    results = {}
    for name, check in checks.items():
        logger.info(f'Running the check {name}')
        results[name] = check()
        report_counterexamples(name, results[name], failures_file)
    return results
