"""Quiver DSL.

    quiver {
      vertices: 1, 2, 3;
      arrows:
        α: 1 -> 2;
        β: 2 -> 3;
      relations:
        β.α;
    }

Paths are written in product order (``β.α`` is α followed by β). Relation
terms may carry rational coefficients (``2*β.α - 1/2*γ``). ``//`` starts a
comment.
"""

from fractions import Fraction
from pathlib import Path as FilePath
from typing import List, Optional, Tuple, Union

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from src.core.errors import DSLSyntaxError, QuiverError
from src.core.logging import get_logger
from src.core.rational import pretty_scalar
from src.models.quiver import STAR, Arrow, Path, Quiver, Relation


logger = get_logger('parsing.quiver_dsl')

GRAMMAR = r"""
start: "quiver" "{" vertices arrows relations? "}"

vertices: "vertices" ":" name ("," name)* ";"
arrows: "arrows" ":" arrow*
arrow: arrow_name ":" name "->" name ";"
arrow_name: IDENT STAR?
relations: "relations" ":" (relation ";")*

relation: first_term signed_term*
first_term: SIGN? term
signed_term: SIGN term
term: (rational "*")? path
rational: INT ("/" INT)?
path: IDENT ("." IDENT)*
name: IDENT

SIGN: "+" | "-"
STAR: "*"
IDENT: /\w+/
INT: /\d+/

%import common.CPP_COMMENT
%import common.WS
%ignore WS
%ignore CPP_COMMENT
"""


class _Draft:
    """Parsed but not yet validated quiver data, with token positions."""
    
    def __init__(self, vertices, arrows, relations):
        self.vertices: List[Token] = vertices
        self.arrows: List[Tuple[Token, bool, Token, Token]] = arrows
        self.relations: List[Tuple[object, List[Tuple[Fraction, List[Token]]]]] = relations


class QuiverTransformer(Transformer):
    """Turns the parse tree into a ``_Draft``."""
    
    def start(self, items):
        vertices, arrows = items[0], items[1]
        relations = items[2] if len(items) > 2 else []
        return _Draft(vertices, arrows, relations)
    
    def vertices(self, items):
        return list(items)
    
    def name(self, items):
        return items[0]
    
    def arrows(self, items):
        return list(items)
    
    def arrow_name(self, items):
        return items[0], len(items) > 1
    
    def arrow(self, items):
        (token, starred), source, target = items
        return token, starred, source, target
    
    def relations(self, items):
        return list(items)
    
    @v_args(meta=True)
    def relation(self, meta, items):
        return meta, list(items)
    
    def first_term(self, items):
        if len(items) == 2:
            sign, (coefficient, path) = items
            return (-coefficient if sign == '-' else coefficient), path
        return items[0]
    
    def signed_term(self, items):
        sign, (coefficient, path) = items
        return (-coefficient if sign == '-' else coefficient), path
    
    def term(self, items):
        if len(items) == 2:
            return items[0], items[1]
        return Fraction(1), items[0]
    
    def rational(self, items):
        numerator = int(items[0])
        denominator = int(items[1]) if len(items) > 1 else 1
        if denominator == 0:
            raise DSLSyntaxError("Zero denominator", items[1].line, items[1].column)
        return Fraction(numerator, denominator)
    
    def path(self, items):
        return list(items)


_parser = Lark(GRAMMAR, parser='earley', propagate_positions=True)


def _at(token: Token, message: str) -> DSLSyntaxError:
    return DSLSyntaxError(message, token.line, token.column)


def _build(draft: _Draft) -> Quiver:
    seen_vertices = set()
    for token in draft.vertices:
        if str(token) in seen_vertices:
            raise _at(token, f"Duplicate vertex '{token}'")
        seen_vertices.add(str(token))
    vertices = tuple(str(t) for t in draft.vertices)
    
    arrows = []
    seen_arrows = set()
    for token, starred, source, target in draft.arrows:
        if starred:
            raise _at(token, f"Arrow '{token}{STAR}': names ending in '{STAR}' are reserved")
        if str(token) in seen_arrows:
            raise _at(token, f"Duplicate arrow '{token}'")
        for end in (source, target):
            if str(end) not in seen_vertices:
                raise _at(end, f"Arrow '{token}': unknown vertex '{end}'")
        seen_arrows.add(str(token))
        arrows.append(Arrow(str(token), str(source), str(target)))
    
    try:
        plain = Quiver(vertices, tuple(arrows))
    except QuiverError as e:
        first = draft.arrows[0][0] if draft.arrows else draft.vertices[0]
        raise _at(first, str(e))
    
    relations = []
    for meta, terms in draft.relations:
        try:
            for _, tokens in terms:
                for token in tokens:
                    if not plain.has_arrow(str(token)):
                        raise _at(token, f"Unknown arrow '{token}'")
            relation = Relation(tuple((c, Path(tuple(str(t) for t in tokens))) for c, tokens in terms))
            plain.with_relations([relation])
        except DSLSyntaxError:
            raise
        except QuiverError as e:
            raise DSLSyntaxError(str(e), meta.line, meta.column)
        relations.append(relation)
    return plain.with_relations(relations)


def parse_quiver(text: str) -> Quiver:
    """Parse DSL text into a validated Quiver.
    
    Args:
        text: DSL source
        
    Returns:
        The quiver, with vertex, arrow and relation lists in source order
        
    Raises:
        DSLSyntaxError: On syntax errors and on invalid quiver data, with the
            line and column of the offending token
    """
    try:
        tree = _parser.parse(text)
        draft = QuiverTransformer().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, DSLSyntaxError):
            raise e.orig_exc
        raise
    except UnexpectedEOF as e:
        raise DSLSyntaxError("Unexpected end of input", getattr(e, 'line', None), getattr(e, 'column', None))
    except UnexpectedInput as e:
        message = str(e).strip().splitlines()[0]
        raise DSLSyntaxError(message, e.line, e.column)
    quiver = _build(draft)
    logger.debug(
        f"Parsed quiver: {len(quiver.vertices)} vertices, {len(quiver.arrows)} arrows, "
        f"{len(quiver.relations)} relations"
    )
    return quiver


def parse_quiver_file(path: Union[str, FilePath]) -> Quiver:
    """Read and parse a ``.quiver`` file.
    
    Raises:
        FileNotFoundError: If the file does not exist
        DSLSyntaxError: If the contents are invalid
    """
    path = FilePath(path)
    if not path.exists():
        raise FileNotFoundError(f"Quiver file not found: {path}")
    return parse_quiver(path.read_text(encoding='utf-8'))


def _format_relation(relation: Relation) -> str:
    parts = []
    for n, (coefficient, path) in enumerate(relation.terms):
        magnitude = abs(coefficient)
        body = path.label if magnitude == 1 else f"{pretty_scalar(magnitude)}*{path.label}"
        if n == 0:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f"{'-' if coefficient < 0 else '+'} {body}")
    return ' '.join(parts)


def format_quiver(quiver: Quiver) -> str:
    """Canonical DSL text; ``parse_quiver(format_quiver(q)) == q``.
    
    Raises:
        QuiverError: For doubled quivers (starred names cannot be written)
    """
    if quiver.doubled:
        raise QuiverError("Doubled quivers have no DSL form")
    lines = ['quiver {', f"  vertices: {', '.join(quiver.vertices)};", '  arrows:']
    for arrow in quiver.arrows:
        lines.append(f"    {arrow.name}: {arrow.source} -> {arrow.target};")
    if quiver.relations:
        lines.append('  relations:')
        for relation in quiver.relations:
            lines.append(f"    {_format_relation(relation)};")
    lines.append('}')
    return '\n'.join(lines) + '\n'
