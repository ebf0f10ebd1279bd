import re
from dataclasses import dataclass, field
from typing import Optional

from maxinv import exceptions
from maxinv.group import Permutation
from maxinv.tokens import Token, TokenGroup, TokenType
from maxinv.utils import find_line

GENERATOR_NAME = re.compile(r'g(0|[1-9][0-9]*)')


@dataclass
class GroupSource:
    degree: int
    generators: list[Permutation] = field(default_factory=list)
    lines: list[int] = field(default_factory=list)


@dataclass
class ActionSource:
    # One entry per 'aut:' line; entry i maps group generator index -> image.
    automorphisms: list[list[Permutation]] = field(default_factory=list)
    lines: list[int] = field(default_factory=list)


class Parser:
    tokens: list[Token]
    filename: str
    source: str
    current: int

    def __init__(self, tokens: list[Token], filename: str, source: str) -> None:
        self.tokens = tokens
        self.filename = filename
        self.source = source
        self.current = 0

    def parse_group(self) -> GroupSource:
        degree: Optional[int] = None
        result = GroupSource(0)
        while not self.is_at_end():
            if self.match_(TokenType.NEWLINE):
                continue
            if self.match_(TokenType.POINTS):
                word = self.previous()
                if degree is not None:
                    raise self.error(word, exceptions.DUPLICATE_POINTS)
                self.consume(TokenType.COLON, exceptions.EXPECT_COLON % word.lexeme)
                degree = self.consume(TokenType.INTEGER, exceptions.EXPECT_POINT).literal
                if degree < 1:
                    raise self.error(self.previous(), exceptions.POINT_OUT_OF_RANGE % (degree, degree))
                result.degree = degree
            elif self.match_(TokenType.GEN):
                word = self.previous()
                if degree is None:
                    raise self.error(word, exceptions.EXPECT_POINTS)
                self.consume(TokenType.COLON, exceptions.EXPECT_COLON % word.lexeme)
                result.generators.append(self.cycles(degree))
                result.lines.append(word.line)
            else:
                raise self.error(self.peek(), exceptions.UNKNOWN_DIRECTIVE % self.peek().lexeme)
            self.end_of_line()
        if degree is None:
            raise self.error(self.peek(), exceptions.EXPECT_POINTS)
        return result

    def parse_action(self, degree: int, generator_count: int) -> ActionSource:
        result = ActionSource()
        while not self.is_at_end():
            if self.match_(TokenType.NEWLINE):
                continue
            if not self.match_(TokenType.AUT):
                raise self.error(self.peek(), exceptions.UNKNOWN_DIRECTIVE % self.peek().lexeme)
            word = self.previous()
            self.consume(TokenType.COLON, exceptions.EXPECT_COLON % word.lexeme)
            images: dict[int, Permutation] = {}
            while True:
                name = self.consume(TokenType.IDENTIFIER, exceptions.EXPECT_GENERATOR_NAME)
                match = GENERATOR_NAME.fullmatch(name.lexeme)
                if match is None or int(match.group(1)) >= generator_count:
                    raise self.error(name, exceptions.UNKNOWN_GENERATOR % name.lexeme)
                self.consume(TokenType.ARROW, exceptions.EXPECT_ARROW)
                images[int(match.group(1))] = self.cycles(degree)
                if not self.match_(TokenType.SEMICOLON):
                    break
            for index in range(generator_count):
                if index not in images:
                    raise self.error(word, exceptions.MISSING_GENERATOR % f'g{index}')
            result.automorphisms.append([images[i] for i in range(generator_count)])
            result.lines.append(word.line)
            self.end_of_line()
        return result

    def cycles(self, degree: int) -> Permutation:
        cycles: list[list[int]] = []
        seen: set[int] = set()
        while self.match_(TokenType.LEFT_PAREN):
            cycle = []
            while not self.check(TokenType.RIGHT_PAREN):
                if self.peek().type in TokenGroup.LINE_END:
                    raise self.error(self.peek(), exceptions.UNTERMINATED_CYCLE)
                point = self.consume(TokenType.INTEGER, exceptions.EXPECT_POINT)
                if point.literal >= degree:
                    raise self.error(point, exceptions.POINT_OUT_OF_RANGE % (point.literal, degree))
                if point.literal in seen:
                    raise self.error(point, exceptions.REPEATED_POINT % point.literal)
                seen.add(point.literal)
                cycle.append(point.literal)
                self.match_(*TokenGroup.CYCLE_SEPARATORS)
            self.consume(TokenType.RIGHT_PAREN, exceptions.UNTERMINATED_CYCLE)
            cycles.append(cycle)
        if not self.check_any(TokenGroup.LINE_END | {TokenType.SEMICOLON}):
            raise self.error(self.peek(), exceptions.EXPECT_CYCLE)
        return Permutation.from_cycles(cycles, degree)

    def end_of_line(self) -> None:
        if self.is_at_end():
            return
        self.consume(TokenType.NEWLINE, exceptions.EXPECT_NEWLINE)

    def match_(self, *types: TokenType) -> bool:
        if any(self.check(type) for type in types):
            self.advance()
            return True
        return False

    def consume(self, type: TokenType, message: str) -> Token:
        if self.check(type):
            return self.advance()
        raise self.error(self.peek(), message)

    def error(self, token: Token, message: str) -> SyntaxError:
        return SyntaxError(message, (self.filename, token.line,
                                     token.column + 1,
                           find_line(self.source, token.index)))

    def check(self, type: TokenType) -> bool:
        if self.is_at_end():
            return False
        return self.peek().type == type

    def check_any(self, types: set[TokenType]) -> bool:
        return self.peek().type in types

    def advance(self) -> Token:
        if not self.is_at_end():
            self.current += 1
        return self.previous()

    def is_at_end(self) -> bool:
        return self.peek().type == TokenType.EOF

    def peek(self) -> Token:
        return self.tokens[self.current]

    def previous(self) -> Token:
        return self.tokens[self.current - 1]


def parse_group_source(tokens: list[Token], filename: str = '<unknown>', source: str = '') -> GroupSource:
    parser: Parser = Parser(tokens, filename, source)
    return parser.parse_group()


def parse_action_source(tokens: list[Token], degree: int, generator_count: int,
                        filename: str = '<unknown>', source: str = '') -> ActionSource:
    parser: Parser = Parser(tokens, filename, source)
    return parser.parse_action(degree, generator_count)
