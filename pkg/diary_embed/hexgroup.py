"""
The hexagonal right-angled Coxeter group

    G = < a1, a2, a3, b1, b2, b3 | every generator is an involution, [a_k, b_l] = e for k != l >

and the word problem of right-angled Coxeter groups in general.

Words are processed with heaps of pieces: one pile per generator. Pushing a generator either cancels it
against its own pile top (the same generator with only commuting letters after it) or stacks it on its own
pile and a blocker on the pile of every generator it does not commute with. A generator is available for
output when the bottom of its pile is itself. Depiling the smallest available generator each time yields
the shortlex normal form.
"""
import logging
import random
import re
from collections import OrderedDict, deque
from enum import Enum
from itertools import combinations
from typing import Deque, Dict, Iterable, List, Optional, Sequence, Tuple

from diary_embed import defaults, exceptions, utils
from diary_embed.words import Word

logger = logging.getLogger(defaults.NAME)

Generator = str
GENERATORS: Tuple[Generator, ...] = ('a1', 'a2', 'a3', 'b1', 'b2', 'b3')
IDENTITY_TEXT = 'e'


class Family(Enum):
    A = 'a'
    B = 'b'

    @property
    def other(self) -> 'Family':
        return Family.B if self is Family.A else Family.A


def family_of(generator: Generator) -> Family:
    return Family(generator[0])


def index_of(generator: Generator) -> int:
    return int(generator[1:])


class CommutationTable:
    """
    The generators of a right-angled Coxeter group, in shortlex order, with the pairs that commute.
    """

    def __init__(self, generators: Sequence[Generator], commuting_pairs: Iterable[Tuple[Generator, Generator]]):
        self.generators = tuple(generators)
        self.position = {g: i for i, g in enumerate(self.generators)}
        self.commuting = set()
        for x, y in commuting_pairs:
            if x == y:
                raise exceptions.ConfigurationError(f'{x} can not commute with itself in the table')
            self.commuting.add((x, y))
            self.commuting.add((y, x))

        self.non_commuters: Dict[Generator, Tuple[Generator, ...]] = {}
        self.blocking: Dict[Generator, Tuple[Generator, ...]] = {}
        for g in self.generators:
            others = tuple(h for h in self.generators if h != g and (g, h) not in self.commuting)
            self.non_commuters[g] = others
            self.blocking[g] = (g,) + others

    def commutes(self, x: Generator, y: Generator) -> bool:
        return (x, y) in self.commuting

    def validate(self, word: Iterable[Generator]) -> Tuple[Generator, ...]:
        letters = tuple(word)
        for letter in letters:
            if letter not in self.position:
                raise exceptions.PreconditionError('hexgroup', f'{letter!r} is not a generator')
        return letters

    def cliques(self) -> List[Tuple[Generator, ...]]:
        """
        Every set of pairwise commuting generators, the empty one included.
        """
        found: List[Tuple[Generator, ...]] = [()]
        for size in range(1, len(self.generators) + 1):
            level = [c for c in combinations(self.generators, size)
                     if all(self.commutes(x, y) for x, y in combinations(c, 2))]
            if not level:
                break
            found.extend(level)
        return found


def hexagon_table() -> CommutationTable:
    pairs = [(f'a{k}', f'b{l}') for k in range(1, 4) for l in range(1, 4) if k != l]
    return CommutationTable(GENERATORS, pairs)


HEXAGON = hexagon_table()


class Piles:
    """
    Heaps of pieces of a word over a commutation table.
    """

    def __init__(self, table: CommutationTable):
        self.table = table
        self.piles: Dict[Generator, Deque[bool]] = {g: deque() for g in table.generators}
        self.count = 0

    def push(self, g: Generator):
        pile = self.piles[g]
        if pile and pile[-1]:
            # only blockers of commuting letters sit above the matching blockers, so popping tops is exact
            for h in self.table.blocking[g]:
                self.piles[h].pop()
            self.count -= 1
            return
        pile.append(True)
        for h in self.table.non_commuters[g]:
            self.piles[h].append(False)
        self.count += 1

    def extend(self, word: Iterable[Generator]) -> 'Piles':
        for g in word:
            self.push(g)
        return self

    def available(self) -> List[Generator]:
        return [g for g in self.table.generators if self.piles[g] and self.piles[g][0]]

    def pop_front(self, g: Generator):
        for h in self.table.blocking[g]:
            self.piles[h].popleft()
        self.count -= 1

    def depile(self, prefer: Optional[Family] = None) -> Word:
        """
        Empty the piles into a geodesic word.

        Args:
            prefer (Family, optional): Output available letters of this family before any other
        """
        letters = []
        while self.count:
            candidates = self.available()
            if prefer is not None:
                preferred = [g for g in candidates if family_of(g) is prefer]
                candidates = preferred or candidates
            g = candidates[0]
            letters.append(g)
            self.pop_front(g)
        return Word(letters)


def reduce(word: Iterable[Generator], table: CommutationTable = HEXAGON) -> Word:
    """
    A reduced word equal to the input in G: the shortlex normal form.

    Raises:
        PreconditionError: If a letter is not a generator
    """
    return Piles(table).extend(table.validate(word)).depile()


class GroupElement:
    """
    An element of G, held as its shortlex normal form.
    """
    __slots__ = ('word', 'table')

    def __init__(self, word: Iterable[Generator] = (), table: CommutationTable = HEXAGON):
        self.table = table
        self.word = reduce(word, table)

    @classmethod
    def parse(cls, text: str, table: CommutationTable = HEXAGON) -> 'GroupElement':
        return cls(parse_generators(text, table), table)

    @classmethod
    def identity(cls, table: CommutationTable = HEXAGON) -> 'GroupElement':
        return cls((), table)

    @property
    def length(self) -> int:
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __mul__(self, other) -> 'GroupElement':
        if isinstance(other, GroupElement):
            other = other.word
        return GroupElement(tuple(self.word) + tuple(other), self.table)

    def inverse(self) -> 'GroupElement':
        return GroupElement(reversed(self.word), self.table)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return len(self.word), tuple(self.table.position[g] for g in self.word)

    def __lt__(self, other: 'GroupElement') -> bool:
        return self.sort_key() < other.sort_key()

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElement) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __str__(self):
        return ' '.join(self.word) if self.word else IDENTITY_TEXT

    def __repr__(self):
        return f'GroupElement({str(self)!r})'

    def __reduce__(self):
        return (GroupElement, (tuple(self.word), self.table))


def parse_generators(text: str, table: CommutationTable = HEXAGON) -> Tuple[Generator, ...]:
    """
    Read generators from text such as "a1 b2 a1", "a1b2a1" or "[a1][b2]"; "e" stands for the identity.
    """
    tokens = re.findall(r'[A-Za-z]+\d*', text)
    return table.validate(t for t in tokens if t != IDENTITY_TEXT)


def canonicalize(word: Iterable[Generator], table: CommutationTable = HEXAGON) -> GroupElement:
    return GroupElement(word, table)


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    return g * h


def inverse(g: GroupElement) -> GroupElement:
    return g.inverse()


def group_distance(g: GroupElement, h: GroupElement) -> int:
    """
    Word metric distance |g^-1 h|.
    """
    return (g.inverse() * h).length


def side_left_rep(g: GroupElement, side: Family) -> Word:
    """
    The geodesic representative of g with the letters of one family moved as far left as commutations allow.

    Every side letter is then preceded by a side letter, by a letter of the other family it does not commute
    with, or by nothing.
    """
    return Piles(g.table).extend(g.word).depile(prefer=side)


def growth_series(radius: int, table: CommutationTable = HEXAGON) -> List[int]:
    """
    Sphere sizes |S(0)|, ..., |S(radius)| of the Cayley graph.

    The growth series W(t) of a right-angled Coxeter group satisfies 1 / W(t) = sum over cliques c of
    (-t / (1 + t))^|c|, so W(t) = (1 + t)^D / Q(t) with Q(t) = sum c_k (-t)^k (1 + t)^(D - k).
    """
    sizes: Dict[int, int] = {}
    for clique in table.cliques():
        sizes[len(clique)] = sizes.get(len(clique), 0) + 1
    top = max(sizes)

    def binomial_row(power: int) -> List[int]:
        row = [1]
        for _ in range(power):
            row = [a + b for a, b in zip(row + [0], [0] + row)]
        return row

    denominator = [0] * (top + 1)
    for k, count in sizes.items():
        for i, coefficient in enumerate(binomial_row(top - k)):
            denominator[i + k] += count * (-1) ** k * coefficient
    numerator = binomial_row(top)

    series: List[int] = []
    for n in range(radius + 1):
        value = numerator[n] if n < len(numerator) else 0
        value -= sum(denominator[i] * series[n - i] for i in range(1, min(n, top) + 1))
        series.append(value // denominator[0])
    return series


def bfs_ball(radius: int, table: CommutationTable = HEXAGON) -> 'OrderedDict[GroupElement, int]':
    """
    Every element within the radius, with its distance to the identity, in breadth first order.

    Generators are tried in table order, so the order is deterministic.

    Raises:
        PreconditionError: If the radius is negative
        BallCapExceededError: If the radius exceeds the cap or the estimated ball is too large
    """
    if radius < 0:
        raise exceptions.PreconditionError('bfs_ball', f'negative radius {radius}')
    cap = utils.get_bfs_cap()
    if radius > cap:
        raise exceptions.BallCapExceededError(radius, cap)
    estimate = sum(growth_series(radius, table))
    if estimate > defaults.MAX_BALL_ELEMENTS:
        raise exceptions.BallCapExceededError(radius, defaults.MAX_BALL_ELEMENTS, reason=f'{estimate} elements')

    identity = GroupElement.identity(table)
    ball: 'OrderedDict[GroupElement, int]' = OrderedDict({identity: 0})
    frontier = [identity]
    for distance in range(1, radius + 1):
        next_frontier = []
        for g in frontier:
            for s in table.generators:
                h = g * (s,)
                if h not in ball:
                    ball[h] = distance
                    next_frontier.append(h)
        frontier = next_frontier
        logger.debug(f'Sphere of radius {distance} holds {len(frontier)} elements')
    return ball


def ball_records(ball: Dict[GroupElement, int]) -> List[dict]:
    return [{'g': str(g), 'distance': d} for g, d in ball.items()]


def random_element(target_length: int, seed: int, table: CommutationTable = HEXAGON) -> GroupElement:
    """
    A seeded random element: a random word of the target length without immediate repetitions, reduced,
    redrawn until its length is at least half the target.
    """
    if target_length < 0:
        raise exceptions.PreconditionError('random_element', f'negative length {target_length}')
    rng = random.Random(seed)
    while True:
        letters: List[Generator] = []
        for _ in range(target_length):
            choices = [g for g in table.generators if not letters or g != letters[-1]]
            letters.append(rng.choice(choices))
        element = GroupElement(letters, table)
        if 2 * element.length >= target_length:
            return element
