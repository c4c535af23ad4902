"""
Shared reader for the line-oriented circuit formats (.real and .qc).

Both formats share the header directives (.version, .numvars, .variables,
.inputs, .outputs, .constants, .garbage), a .begin/.end body and '#' comments.
Directives and gate keywords are case-insensitive; variable names are not.
"""

import logging
import re
from typing import Dict, List

from pydantic import BaseModel

from app.errors import (
    DuplicateVariable,
    MissingSection,
    ParseError,
    UnknownVariable,
    UnsupportedFeature,
)
from app.models.circuit import LINE_NAME_RE

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(r"\S+")


class Token(BaseModel):
    text: str
    column: int

    model_config = {"frozen": True}


class SourceLine(BaseModel):
    number: int
    tokens: List[Token]


class Directive(BaseModel):
    line: int
    args: List[Token]


class GateLine(BaseModel):
    """A body line: gate keyword plus operand tokens, with its position."""
    keyword: str
    operands: List[Token]
    line: int
    column: int


class CircuitDocument(BaseModel):
    """Header and raw gate lines of a circuit file, before name resolution."""
    variables: List[str]
    line_count: int
    directives: Dict[str, Directive] = {}
    gates: List[GateLine] = []
    last_line: int = 1

    def variable_index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.variables)}


def tokenize(text: str) -> List[SourceLine]:
    """Split into non-empty lines of tokens; '#' starts a comment. CRLF accepted."""
    lines = []
    for number, raw in enumerate(text.lstrip("\ufeff").splitlines(), start=1):
        tokens = []
        for match in _TOKEN_RE.finditer(raw):
            if match.group(0).startswith("#"):
                break
            tokens.append(Token(text=match.group(0), column=match.start() + 1))
        if tokens:
            lines.append(SourceLine(number=number, tokens=tokens))
    return lines


class CircuitDocumentReader:
    """Reads the common document structure; subclasses add format directives."""

    # directives only this format accepts, e.g. {".library"}
    extra_directives: frozenset = frozenset()
    document_class: type = CircuitDocument

    def read(self, text: str) -> CircuitDocument:
        last_line = max(1, len(text.splitlines()))

        directives: Dict[str, Directive] = {}
        gates: List[GateLine] = []
        in_body = False
        ended = False

        for source in tokenize(text):
            head = source.tokens[0]
            keyword = head.text.lower()

            if ended:
                raise ParseError(f"unexpected content after .end: {head.text!r}", source.number, head.column)

            if keyword.startswith("."):
                if in_body:
                    if keyword == ".end":
                        self._expect_no_args(source)
                        ended = True
                        continue
                    raise ParseError(f"directive {head.text} inside the gate section", source.number, head.column)
                if keyword == ".begin":
                    self._expect_no_args(source)
                    in_body = True
                    directives[keyword] = Directive(line=source.number, args=[])
                    continue
                if keyword == ".end":
                    raise ParseError(".end before .begin", source.number, head.column)
                if keyword in directives:
                    raise ParseError(f"duplicate directive {head.text}", source.number, head.column)
                self._check_directive(keyword, source)
                directives[keyword] = Directive(line=source.number, args=source.tokens[1:])
                continue

            if not in_body:
                raise ParseError(f"gate {head.text!r} before .begin", source.number, head.column)
            gates.append(GateLine(
                keyword=keyword,
                operands=source.tokens[1:],
                line=source.number,
                column=head.column,
            ))

        for section in (".numvars", ".variables", ".begin"):
            if section not in directives:
                raise MissingSection(f"missing {section}", last_line, 1)
        if not ended:
            raise MissingSection("missing .end", last_line, 1)

        line_count = self._parse_numvars(directives[".numvars"])
        variables = self._parse_variables(directives[".variables"], line_count)

        return self.document_class(
            variables=variables,
            line_count=line_count,
            directives={k: v for k, v in directives.items() if k in self.extra_directives},
            gates=gates,
            last_line=last_line,
        )

    # ── Header helpers ──

    @staticmethod
    def _expect_no_args(source: SourceLine):
        if len(source.tokens) > 1:
            raise ParseError(
                f"{source.tokens[0].text} takes no arguments", source.number, source.tokens[1].column
            )

    def _check_directive(self, keyword: str, source: SourceLine):
        if keyword in (".numvars", ".variables", ".version", ".inputs", ".outputs"):
            return
        if keyword in self.extra_directives:
            return
        if keyword in (".constants", ".garbage"):
            # Only the trivial "---" marker: no constant inputs, no garbage outputs.
            args = source.tokens[1:]
            if len(args) == 1 and set(args[0].text) == {"-"}:
                return
            column = args[0].column if args else source.tokens[0].column
            raise UnsupportedFeature(
                f"{keyword} with constant or garbage lines is not supported", source.number, column
            )
        raise UnsupportedFeature(
            f"unsupported directive {source.tokens[0].text}", source.number, source.tokens[0].column
        )

    @staticmethod
    def _parse_numvars(directive: Directive) -> int:
        args = directive.args
        if len(args) != 1:
            column = args[1].column if len(args) > 1 else 1
            raise ParseError(".numvars takes exactly one argument", directive.line, column)
        arg = args[0]
        if not (arg.text.isascii() and arg.text.isdigit()) or int(arg.text) < 1:
            raise ParseError(f"invalid line count {arg.text!r}", directive.line, arg.column)
        return int(arg.text)

    @staticmethod
    def _parse_variables(directive: Directive, line_count: int) -> List[str]:
        seen = set()
        for token in directive.args:
            if not LINE_NAME_RE.fullmatch(token.text):
                raise ParseError(f"invalid variable name {token.text!r}", directive.line, token.column)
            if token.text in seen:
                raise DuplicateVariable(f"variable {token.text!r} declared twice", directive.line, token.column)
            seen.add(token.text)
        if len(directive.args) != line_count:
            column = directive.args[-1].column if directive.args else 1
            raise ParseError(
                f".variables lists {len(directive.args)} names but .numvars is {line_count}",
                directive.line, column,
            )
        return [t.text for t in directive.args]


def resolve_operand(gate: GateLine, token: Token, index: Dict[str, int]) -> int:
    """Line index of an operand name."""
    name = token.text
    if name.startswith("-") and name[1:] in index:
        raise UnsupportedFeature(f"negative control {name!r} is not supported", gate.line, token.column)
    if name not in index:
        raise UnknownVariable(f"unknown variable {name!r}", gate.line, token.column)
    return index[name]
