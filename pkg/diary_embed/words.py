"""
Words, sentences and the tree metrics on them.

A word is a finite sequence of letters, a sentence a finite sequence of non-empty words (one word per day).
Words are vertices of the word-tree T_A, sentences vertices of the sentence-tree T_W; in both the distance
between two vertices is the number of edges through their longest common prefix.
"""
from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from typing import Hashable, Iterable, Tuple

from diary_embed import defaults, exceptions

logger = logging.getLogger(defaults.NAME)

Letter = Hashable


class Word(tuple):
    """
    An immutable, possibly empty, sequence of letters.

    Words are tuples: they hash, compare and can themselves be letters of a larger alphabet.
    """

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, letters)

    @classmethod
    def parse(cls, text: str) -> 'Word':
        return parse_word(text)

    @property
    def length(self) -> int:
        return len(self)

    def __getitem__(self, item):
        result = tuple.__getitem__(self, item)
        if isinstance(item, slice):
            return Word(result)
        return result

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __str__(self):
        return render_word(self)

    def __repr__(self):
        return f'Word({render_word(self)!r})'


class Sentence(tuple):
    """
    An immutable sequence of non-empty words, the i-th word being the events of day i.

    The empty sentence is the root of the sentence-tree.
    """

    def __new__(cls, words: Iterable[Iterable[Letter]] = ()):
        items = tuple(w if isinstance(w, Word) else Word(w) for w in words)
        for index, word in enumerate(items, start=1):
            if not word:
                raise exceptions.PreconditionError('Sentence', f'word {index} is empty')
        return super().__new__(cls, items)

    @classmethod
    def parse(cls, text: str) -> 'Sentence':
        return parse_sentence(text)

    @property
    def height(self) -> int:
        return len(self)

    def __getitem__(self, item):
        result = tuple.__getitem__(self, item)
        if isinstance(item, slice):
            return Sentence(result)
        return result

    def __add__(self, other):
        return Sentence(tuple.__add__(self, tuple(other)))

    def __str__(self):
        return render_sentence(self)

    def __repr__(self):
        return f'Sentence({render_sentence(self)!r})'


class Distinguisher(Enum):
    """
    Which half of the suffix-or-length pair tells two nearby words apart.
    """
    SUFFIX_DIFFERS = 'suffix-differs'
    LENGTH_EXPANSION_DIFFERS = 'length-expansion-differs'


def common_prefix_length(u: Iterable, v: Iterable) -> int:
    count = 0
    for x, y in zip(u, v):
        if x != y:
            break
        count += 1
    return count


def word_tree_distance(u: Tuple, v: Tuple) -> int:
    """
    Distance in the word-tree: |u| + |v| - 2 |longest common prefix|.
    """
    return len(u) + len(v) - 2 * common_prefix_length(u, v)


def sentence_tree_distance(alpha: Tuple, beta: Tuple) -> int:
    """
    Distance in the sentence-tree, words being compared as whole letters.
    """
    return len(alpha) + len(beta) - 2 * common_prefix_length(alpha, beta)


def split_common(alpha: Sentence, beta: Sentence) -> Tuple[Sentence, Sentence, Sentence]:
    """
    Split two sentences into their longest common prefix and the two remainders.

    Returns:
        (common, tail of alpha, tail of beta), so alpha = common + tail of alpha.
    """
    p = common_prefix_length(alpha, beta)
    return Sentence(alpha[:p]), Sentence(alpha[p:]), Sentence(beta[p:])


def prefix(alpha: Sentence, depth: int) -> Sentence:
    """
    The ancestor of alpha at the given depth, the first depth words.
    """
    if depth < 0 or depth > len(alpha):
        raise exceptions.PreconditionError('prefix', f'depth {depth} outside 0..{len(alpha)}')
    return Sentence(alpha[:depth])


def word_reverse(w: Iterable[Letter]) -> Word:
    return Word(reversed(tuple(w)))


def norm_r(u: Iterable[Letter], r: int, pad: Letter = defaults.PAD) -> Word:
    """
    Truncate or right-pad u to exactly r letters.

    Args:
        u: The word
        r (int): The target length, r >= 0
        pad: The padding letter, reserved so it never occurs in u

    Raises:
        PreconditionError: If r is negative

    Returns:
        Word: u[:r] if u is long enough otherwise u followed by pad letters
    """
    if r < 0:
        raise exceptions.PreconditionError('norm_r', f'negative length {r}')
    letters = tuple(u)
    if len(letters) >= r:
        return Word(letters[:r])
    return Word(letters + (pad,) * (r - len(letters)))


def final_letters(w: Iterable[Letter], k: int, pad: Letter = defaults.SENTINEL) -> Word:
    """
    The final k letters of w, left-padded with the sentinel when w is shorter than k.
    """
    letters = tuple(w)
    if len(letters) >= k:
        return Word(letters[len(letters) - k:])
    return Word((pad,) * (k - len(letters)) + letters)


def decimal_expansion(n: int) -> Word:
    """
    Base ten digits of n, most significant first.
    """
    if n < 0:
        raise exceptions.PreconditionError('decimal_expansion', f'negative number {n}')
    return Word(str(n))


def nomt_distinguish(w: Tuple, w_prime: Tuple, k: int) -> Distinguisher:
    """
    Two distinct words within distance k are told apart by their final k letters or, failing that,
    by the final k digits of the decimal expansion of their lengths.

    Raises:
        PreconditionError: If k < 1, the words are equal or further than k apart
        InvariantViolationError: If neither the suffix nor the length digits differ

    Returns:
        Distinguisher: The half that differs, suffix first
    """
    if k < 1:
        raise exceptions.PreconditionError('nomt_distinguish', f'k should be positive, got {k}')
    if tuple(w) == tuple(w_prime):
        raise exceptions.PreconditionError('nomt_distinguish', 'the words are equal')
    distance = word_tree_distance(tuple(w), tuple(w_prime))
    if distance > k:
        raise exceptions.PreconditionError('nomt_distinguish', f'distance {distance} exceeds {k}')

    if final_letters(w, k) != final_letters(w_prime, k):
        return Distinguisher.SUFFIX_DIFFERS
    if decimal_expansion(len(w))[-k:] != decimal_expansion(len(w_prime))[-k:]:
        return Distinguisher.LENGTH_EXPANSION_DIFFERS
    raise exceptions.InvariantViolationError(
        'suffix-or-length', f'{render_word(w)} and {render_word(w_prime)} agree on both for k={k}')


def total_letters(alpha: Iterable[Tuple]) -> int:
    return sum(len(w) for w in alpha)


def awl(alpha: Sentence) -> Fraction:
    """
    Average word length of a non-empty sentence, exactly.

    Raises:
        PreconditionError: If the sentence is empty
    """
    if not alpha:
        raise exceptions.PreconditionError('awl', 'the empty sentence has no average word length')
    return Fraction(total_letters(alpha), len(alpha))


def _check_position(operation: str, alpha: Sentence, i: int, j: int):
    if not 1 <= i <= len(alpha):
        raise exceptions.PreconditionError(operation, f'day {i} outside 1..{len(alpha)}')
    if not 1 <= j <= len(alpha[i - 1]):
        raise exceptions.PreconditionError(operation, f'letter {j} outside 1..{len(alpha[i - 1])} of day {i}')


def tail_sentence(alpha: Sentence, i: int, j: int) -> Sentence:
    """
    The events from letter j of day i onwards (both 1-based): (a w | u_{i+1} | ... | u_m) where u_i = v a w.

    The letter itself opens the first word, so the tail is never empty.
    """
    _check_position('tail_sentence', alpha, i, j)
    return Sentence((alpha[i - 1][j - 1:],) + tuple(alpha[i:]))


def head_sentence(alpha: Sentence, i: int, j: int) -> Sentence:
    """
    The events up to and including letter j of day i: (u_1 | ... | u_{i-1} | x a).
    """
    _check_position('head_sentence', alpha, i, j)
    return Sentence(tuple(alpha[:i - 1]) + (alpha[i - 1][:j],))


def tail_awl(alpha: Sentence, i: int, j: int) -> Fraction:
    """
    Average word length of the tail sentence of a letter.

    Alice's Diary records every letter whose tail average is at most kappa.
    """
    _check_position('tail_awl', alpha, i, j)
    return awl(tail_sentence(alpha, i, j))


def star(w: Iterable[Letter]) -> Word:
    return Word((defaults.STAR,) + tuple(w))


def is_starred(w: Tuple) -> bool:
    return bool(w) and w[0] == defaults.STAR and defaults.STAR not in w[1:]


def is_starred_sentence(alpha: Sentence) -> bool:
    return all(is_starred(w) for w in alpha)


_PLAIN_EXCLUDED = set('[]|, ')


def render_letter(letter: Letter) -> str:
    """
    Text of a single letter.

    Single printable ASCII characters render bare, words render as their text, composite
    tuples as bracketed comma-joined components and any other token bracketed.
    """
    if isinstance(letter, Word):
        return render_word(letter)
    if isinstance(letter, tuple):
        return '[' + ','.join(render_letter(part) for part in letter) + ']'
    text = str(letter)
    if len(text) == 1 and text.isascii() and text.isprintable() and text not in _PLAIN_EXCLUDED:
        return text
    return f'[{text}]'


def render_word(w: Iterable[Letter]) -> str:
    return ''.join(render_letter(x) for x in w)


def render_sentence(alpha: Iterable[Iterable[Letter]]) -> str:
    return defaults.WORD_SEPARATOR.join(render_word(w) for w in alpha)


def render_symbols(symbols: Iterable[Letter]) -> str:
    """
    Text of a word over a diary alphabet: one symbol per chapter, chapters separated by '|'.
    """
    return defaults.WORD_SEPARATOR.join(render_letter(s) for s in symbols)


def parse_word(text: str) -> Word:
    """
    Parse the text form of a word: bare characters or bracketed tokens such as [a1].

    Raises:
        PreconditionError: On an unterminated bracket or a word separator inside the word
    """
    letters = []
    index = 0
    text = text.strip()
    while index < len(text):
        char = text[index]
        if char == '[':
            end = text.find(']', index)
            if end < 0:
                raise exceptions.PreconditionError('parse_word', f'unterminated bracket in {text!r}')
            letters.append(text[index + 1:end])
            index = end + 1
            continue
        if char == defaults.WORD_SEPARATOR:
            raise exceptions.PreconditionError('parse_word', f'separator inside a word: {text!r}')
        if not char.isspace():
            letters.append(char)
        index += 1
    return Word(letters)


def parse_sentence(text: str) -> Sentence:
    """
    Parse the text form of a sentence, e.g. "abac|cb|accc". Surrounding parentheses are allowed.
    """
    text = text.strip()
    if text.startswith('(') and text.endswith(')'):
        text = text[1:-1].strip()
    if not text:
        return Sentence()
    return Sentence(parse_word(part) for part in text.split(defaults.WORD_SEPARATOR))
