from typing import Any, Optional

from maxinv import exceptions
from maxinv.tokens import DIRECTIVES, PUNCTUATION, Token, TokenType
from maxinv.utils import find_line

WHITESPACE = ' \r\t\ufeff'


class Tokenizer:
    """Line-oriented scanner for group and action files."""
    source: str
    filename: str
    tokens: list[Token]
    start: int
    current: int
    line: int
    start_column: int
    column: int

    def __init__(self, source: str, filename: str = '<unknown>') -> None:
        self.source = source
        self.filename = filename
        self.tokens = []
        self.start = 0
        self.current = 0
        self.line = 1
        self.start_column = 0
        self.column = 0

    def tokenize(self) -> list[Token]:
        while not self.is_at_end():
            self.start = self.current
            self.start_column = self.column
            self.scan()
        self.tokens.append(Token(TokenType.EOF, '', self.line, self.column, self.current))
        return self.tokens

    def error(self, text: str, column: Optional[int] = None) -> SyntaxError:
        where = self.start_column if column is None else column
        return SyntaxError(text, (self.filename, self.line, where + 1,
                                  find_line(self.source, self.start)))

    def scan(self) -> None:
        c = self.advance()
        if c in PUNCTUATION:
            self.add_token(PUNCTUATION[c])
        elif c == '-':
            if self.peek() != '>':
                raise self.error(exceptions.UNEXPECTED_CHARACTER)
            self.advance()
            self.add_token(TokenType.ARROW)
        elif c == '#':
            self.skip_comment()
        elif c in WHITESPACE:
            pass
        elif c == '\n':
            self.add_token(TokenType.NEWLINE)
            self.line += 1
            self.column = 0
        elif c.isascii() and c.isdigit():
            self.point()
        elif c.isascii() and (c.isalpha() or c == '_'):
            self.word()
        else:
            raise self.error(exceptions.UNEXPECTED_CHARACTER)

    def skip_comment(self) -> None:
        while not self.is_at_end() and self.peek() != '\n':
            self.advance()

    def word(self) -> None:
        while self.peek().isascii() and (self.peek().isalnum() or self.peek() == '_'):
            self.advance()
        text = self.source[self.start:self.current]
        self.add_token(DIRECTIVES.get(text, TokenType.IDENTIFIER))

    def point(self) -> None:
        while self.peek().isascii() and self.peek().isdigit():
            self.advance()
        text = self.source[self.start:self.current]
        if len(text) > 1 and text[0] == '0':
            raise self.error(exceptions.NUMBER_NOT_ZERO)
        self.add_token(TokenType.INTEGER, int(text))

    def peek(self) -> str:
        if self.is_at_end():
            return '\0'
        return self.source[self.current]

    def is_at_end(self) -> bool:
        return self.current >= len(self.source)

    def advance(self) -> str:
        if self.is_at_end():
            raise self.error(exceptions.UNEXPECTED_EOF, self.column)
        char = self.source[self.current]
        self.current += 1
        self.column += 1
        return char

    def add_token(self, type: TokenType, literal: Any = None) -> None:
        text = self.source[self.start:self.current]
        self.tokens.append(Token(type, text, self.line, self.start_column, self.start, literal))


def tokenize(source: str, filename: str = '<unknown>') -> list[Token]:
    return Tokenizer(source, filename).tokenize()
