"""
Fixed-width binary codes for the symbols of a diary alphabet.

A layout describes the shape of a diary symbol: an enumeration of atoms, a value that may be absent, a tuple
of fields or a word of bounded length. Its width follows from the alphabet sizes and page limits alone, so a
codec is one injective map from the whole diary alphabet into bit strings of a single width, whatever
sample it is later applied to.

Fields are packed in their declared order. A word stores its length, then its letters, then zeros up to the
page limit; an absent value is a zero flag followed by zeros.
"""
import json
import logging
from typing import Hashable, Iterable, List, Literal, Optional, Sequence

from pydantic import BaseModel

from diary_embed import defaults, exceptions
from diary_embed.words import Word

logger = logging.getLogger(defaults.NAME)


def _jsonable(symbol: Hashable):
    if isinstance(symbol, Word):
        return {'word': [_jsonable(s) for s in symbol]}
    if isinstance(symbol, tuple):
        return [_jsonable(s) for s in symbol]
    if isinstance(symbol, (int, str)):
        return symbol
    return str(symbol)


def symbol_key(symbol: Hashable) -> str:
    """
    Canonical structural serialization of a diary symbol.
    """
    return json.dumps(_jsonable(symbol), ensure_ascii=False, separators=(',', ':'))


def bits_for(count: int) -> int:
    """
    The number of bits that tell apart count values, at least one.
    """
    return max(1, (count - 1).bit_length())


class Layout(BaseModel):
    """
    The shape of a diary symbol, with the fields each kind uses:

    * enum: symbols, the serialized atoms in code order, and an optional wider width bits
    * optional: absent, the serialized symbol coded as all zeros, and the element layout
    * tuple: fields, packed left to right
    * word: the element layout and max_length
    """
    kind: Literal['enum', 'optional', 'tuple', 'word']
    symbols: List[str] = []
    bits: Optional[int] = None
    absent: Optional[str] = None
    fields: List['Layout'] = []
    element: Optional['Layout'] = None
    max_length: int = 0

    @classmethod
    def enum(cls, atoms: Iterable[Hashable], bits: int = None) -> 'Layout':
        """
        Raises:
            CodecError: If 2^bits codes do not cover the atoms
        """
        keys = sorted({symbol_key(atom) for atom in atoms})
        if bits is not None and (bits < 1 or len(keys) > 2 ** bits):
            raise exceptions.CodecError(f'{len(keys)} symbols do not fit in {bits} bits')
        return cls(kind='enum', symbols=keys, bits=bits)

    @classmethod
    def optional(cls, absent: Hashable, element: 'Layout') -> 'Layout':
        return cls(kind='optional', absent=symbol_key(absent), element=element)

    @classmethod
    def record(cls, fields: Sequence['Layout']) -> 'Layout':
        if not fields:
            raise exceptions.CodecError('a tuple layout needs at least one field')
        return cls(kind='tuple', fields=list(fields))

    @classmethod
    def word(cls, element: 'Layout', max_length: int) -> 'Layout':
        if max_length < 1:
            raise exceptions.CodecError(f'a word layout needs a positive length, got {max_length}')
        return cls(kind='word', element=element, max_length=max_length)

    @property
    def width(self) -> int:
        if self.kind == 'enum':
            return self.bits if self.bits is not None else bits_for(len(self.symbols))
        if self.kind == 'optional':
            return 1 + self.element.width  # type: ignore
        if self.kind == 'tuple':
            return sum(field.width for field in self.fields)
        return bits_for(self.max_length + 1) + self.max_length * self.element.width  # type: ignore

    def encode(self, symbol: Hashable) -> str:
        """
        The code of a symbol, exactly width bits long.

        Raises:
            CodecError: If the symbol does not have the shape of the layout
        """
        if self.kind == 'enum':
            key = symbol_key(symbol)
            try:
                index = self.symbols.index(key)
            except ValueError as _e:
                raise exceptions.CodecError(f'symbol {key} has no code') from _e
            return format(index, f'0{self.width}b')

        if self.kind == 'optional':
            if symbol_key(symbol) == self.absent:
                return '0' * self.width
            return '1' + self.element.encode(symbol)  # type: ignore

        if not isinstance(symbol, tuple):
            raise exceptions.CodecError(f'symbol {symbol_key(symbol)} is not a {self.kind}')

        if self.kind == 'tuple':
            if len(symbol) != len(self.fields):
                raise exceptions.CodecError(f'symbol {symbol_key(symbol)} does not have {len(self.fields)} fields')
            return ''.join(field.encode(part) for field, part in zip(self.fields, symbol))

        if len(symbol) > self.max_length:
            raise exceptions.CodecError(f'symbol {symbol_key(symbol)} is longer than {self.max_length}')
        element_width = self.element.width  # type: ignore
        letters = ''.join(self.element.encode(letter) for letter in symbol)  # type: ignore
        padding = '0' * ((self.max_length - len(symbol)) * element_width)
        return format(len(symbol), f'0{bits_for(self.max_length + 1)}b') + letters + padding


Layout.update_forward_refs()


class Codec(BaseModel):
    """
    A fixed-width binary code for every symbol of a diary alphabet, exported as JSON alongside outputs
    so recodings can be reproduced bit for bit.
    """
    layout: Layout

    @property
    def width(self) -> int:
        return self.layout.width

    @classmethod
    def fixed(cls, symbols: Iterable[Hashable], width: int) -> 'Codec':
        """
        A flat codec over explicit atoms, in the sorted order of their serializations.

        Raises:
            CodecError: If 2^width codes do not cover the symbols
        """
        return cls(layout=Layout.enum(symbols, bits=width))

    @classmethod
    def for_diary(cls, diary, alphabet: Sequence[Hashable]) -> 'Codec':
        """
        The codec of the diary alphabet of a diary reading sentences over the given letters.

        Raises:
            CodecError: If the diary does not describe its symbols
        """
        try:
            layout = diary.layout(alphabet)
        except NotImplementedError as _e:
            raise exceptions.CodecError(f'{diary!r} does not describe its symbols') from _e
        codec = cls(layout=layout)
        logger.debug(f'Codec of {diary!r}: {codec.width} bits per symbol')
        return codec

    def encode(self, symbol: Hashable) -> str:
        return self.layout.encode(symbol)


def binary_recode(symbols: Iterable[Hashable], codec: Codec) -> str:
    """
    Replace each symbol of a word over the diary alphabet by its code.

    Raises:
        CodecError: On a symbol outside the codec
    """
    return ''.join(codec.encode(symbol) for symbol in symbols)


def hex_dump(bits: str) -> str:
    """
    Hexadecimal text of a bit string, right padded with zeros to whole nibbles.
    """
    if not bits:
        return ''
    padded = bits + '0' * (-len(bits) % 4)
    return ''.join(format(int(padded[i:i + 4], 2), 'x') for i in range(0, len(padded), 4))
