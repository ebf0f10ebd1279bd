from dataclasses import dataclass
from enum import Enum, auto
from typing import Any


class TokenType(Enum):
    # Single-character tokens.
    LEFT_PAREN = auto()
    RIGHT_PAREN = auto()
    COLON = auto()
    SEMICOLON = auto()
    COMMA = auto()

    # Two character tokens.
    ARROW = auto()

    # Literals.
    IDENTIFIER = auto()
    INTEGER = auto()

    # Directives.
    POINTS = auto()
    GEN = auto()
    AUT = auto()

    NEWLINE = auto()
    EOF = auto()


@dataclass(init=True, repr=True)
class Token:
    type: TokenType
    lexeme: str
    line: int
    column: int
    index: int
    literal: Any = None


class TokenGroup:
    LINE_END = {
        TokenType.NEWLINE,
        TokenType.EOF,
    }

    CYCLE_SEPARATORS = {
        TokenType.COMMA,
    }


DIRECTIVES: dict[str, TokenType] = {
    'points': TokenType.POINTS,
    'gen':    TokenType.GEN,
    'aut':    TokenType.AUT,
}

PUNCTUATION: dict[str, TokenType] = {
    '(': TokenType.LEFT_PAREN,
    ')': TokenType.RIGHT_PAREN,
    ':': TokenType.COLON,
    ';': TokenType.SEMICOLON,
    ',': TokenType.COMMA,
}
