"""Text formats for dependency graphs, games, and dependence formulas.

All formats are plain ASCII and line oriented: `#` starts a comment that
runs to the end of the line and blank lines are ignored.  Every parse
error carries the 1-based line number (formula errors also carry a
column).  Printing is canonical, and parsing a printed value gives back
an equal value.

Graphs::

    players a b c d      # declaration order is significant
    edge a b
    edge b c

Games extend graphs with strategy and payoff lines::

    strategies a a1 a2
    payoff a a=a1 b=b1 1          # rationals: 1, -2, 3/4
    payoff b a=a1 b=b1 1

A payoff line must assign exactly the closed neighbourhood of its player;
unlisted cells default to 0.

Formulas::

    formula := imp
    imp     := unary ('->' imp)?          # right associative
    unary   := '!' unary | primary        # !f is sugar for f -> false
    primary := 'false' | '(' formula ')' | atom
    atom    := set '|>' set
    set     := '{' idlist? '}' | idlist
    idlist  := id (',' id)*
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import (
    FALSUM,
    Atom,
    DependencyGraph,
    Falsum,
    Formula,
    Game,
    Implication,
    InputError,
    check_label,
    check_player_name,
)

__all__ = [
    "LocalityError",
    "ParseError",
    "ScopeError",
    "format_player_set",
    "format_rational",
    "parse_atom",
    "parse_formula",
    "parse_game",
    "parse_graph",
    "parse_rational",
    "print_formula",
    "print_game",
    "print_graph",
]


class ParseError(InputError):
    """A document failed to parse; `line` (and sometimes `column`) locate it."""

    def __init__(self, line: int, message: str, column: int | None = None):
        self.line = line
        self.column = column
        self.reason = message
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


class ScopeError(ParseError):
    """A formula mentions a player that is not in the graph."""


class LocalityError(ParseError):
    """A payoff line is keyed by something other than the closed neighbourhood."""


def _logical_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.split("\n"), 1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((number, content))
    return lines


def _checked(line: int, check, value: str) -> str:
    try:
        return check(value)
    except InputError as exc:
        raise ParseError(line, str(exc)) from None


def parse_graph(text: str) -> DependencyGraph:
    players, edges = _parse_graph_lines(_logical_lines(text))
    return DependencyGraph.of(players, [e for _, e in edges])


def _parse_graph_lines(lines, extra_directives=()):
    """Shared graph front end: returns (players, [(line, edge)]) plus leftovers."""
    if not lines:
        raise ParseError(1, "empty document: expected a players line")
    number, content = lines[0]
    tokens = content.split()
    if tokens[0] != "players":
        raise ParseError(number, f"expected a players line first, got {tokens[0]!r}")
    if len(tokens) < 2:
        raise ParseError(number, "players line declares no players")
    players = []
    for name in tokens[1:]:
        _checked(number, check_player_name, name)
        if name in players:
            raise ParseError(number, f"duplicate player {name!r}")
        players.append(name)
    edges: list[tuple[int, tuple[str, str]]] = []
    rest: list[tuple[int, list[str]]] = []
    seen_pairs = set()
    for number, content in lines[1:]:
        tokens = content.split()
        directive = tokens[0]
        if directive == "players":
            raise ParseError(number, "duplicate players line")
        if directive == "edge":
            if len(tokens) != 3:
                raise ParseError(number, "edge line expects exactly two players")
            u, v = tokens[1], tokens[2]
            for name in (u, v):
                if name not in players:
                    raise ParseError(number, f"edge endpoint {name!r} is not a declared player")
            if u == v:
                raise ParseError(number, f"loop edge {u} {v} is not allowed")
            pair = frozenset((u, v))
            if pair in seen_pairs:
                raise ParseError(number, f"duplicate edge {u} {v}")
            seen_pairs.add(pair)
            edges.append((number, (u, v)))
        elif directive in extra_directives:
            rest.append((number, tokens))
        else:
            raise ParseError(number, f"unknown directive {directive!r}")
    if extra_directives:
        return players, edges, rest
    return players, edges


_RATIONAL_RE = re.compile(r"(-?\d+)(?:/(\d+))?\Z")


def parse_rational(token: str, line: int = 1) -> Fraction:
    match = _RATIONAL_RE.match(token)
    if not match:
        raise ParseError(line, f"malformed rational {token!r}")
    numerator = int(match.group(1))
    if match.group(2) is None:
        return Fraction(numerator)
    denominator = int(match.group(2))
    if denominator == 0:
        raise ParseError(line, f"rational {token!r} has a zero denominator")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    return str(value)


_ASSIGNMENT_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)=([A-Za-z0-9_]+)\Z")


def parse_game(text: str) -> Game:
    lines = _logical_lines(text)
    players, edges, rest = _parse_graph_lines(lines, extra_directives=("strategies", "payoff"))
    graph = DependencyGraph.of(players, [e for _, e in edges])

    strategies: dict[str, tuple[str, ...]] = {}
    payoff_lines = []
    for number, tokens in rest:
        if tokens[0] == "strategies":
            if len(tokens) < 3:
                raise ParseError(number, "strategies line expects a player and at least one label")
            player = tokens[1]
            if player not in graph:
                raise ParseError(number, f"strategies for undeclared player {player!r}")
            if player in strategies:
                raise ParseError(number, f"duplicate strategies line for player {player!r}")
            labels = []
            for label in tokens[2:]:
                _checked(number, check_label, label)
                if label in labels:
                    raise ParseError(number, f"duplicate strategy label {label!r}")
                labels.append(label)
            strategies[player] = tuple(labels)
        else:
            payoff_lines.append((number, tokens))

    players_line = lines[0][0]
    for player in graph.players:
        if player not in strategies:
            raise ParseError(players_line, f"player {player!r} has no strategies line")

    payoffs: dict[str, dict[tuple[str, ...], Fraction]] = {}
    for number, tokens in payoff_lines:
        if len(tokens) < 3:
            raise ParseError(number, "payoff line expects a player, assignments, and a value")
        player = tokens[1]
        if player not in graph:
            raise ParseError(number, f"payoff for undeclared player {player!r}")
        assignment: dict[str, str] = {}
        for token in tokens[2:-1]:
            match = _ASSIGNMENT_RE.match(token)
            if not match:
                raise ParseError(number, f"malformed assignment {token!r}, expected player=label")
            name, label = match.group(1), match.group(2)
            if name in assignment:
                raise ParseError(number, f"player {name!r} assigned twice")
            assignment[name] = label
        local = graph.local_order(player)
        if set(assignment) != set(local):
            raise LocalityError(
                number,
                f"payoff for {player} must assign exactly its closed neighbourhood "
                f"{{{','.join(local)}}}, got {{{','.join(sorted(assignment))}}}")
        for name, label in assignment.items():
            if label not in strategies[name]:
                raise ParseError(number, f"unknown strategy {label!r} for player {name!r}")
        key = tuple(assignment[name] for name in local)
        table = payoffs.setdefault(player, {})
        if key in table:
            raise ParseError(number, f"duplicate payoff entry for {player}")
        table[key] = parse_rational(tokens[-1], number)

    return Game(graph, strategies, payoffs)


def print_graph(graph: DependencyGraph) -> str:
    lines = ["players " + " ".join(graph.players)]
    for u, v in sorted(graph.edges, key=lambda e: (graph.index(e[0]), graph.index(e[1]))):
        lines.append(f"edge {u} {v}")
    return "\n".join(lines) + "\n"


def print_game(game: Game) -> str:
    graph = game.graph
    lines = [print_graph(graph).rstrip("\n")]
    for player in graph.players:
        lines.append(f"strategies {player} " + " ".join(game.strategies[player]))
    for player in graph.players:
        table = game.payoffs.get(player)
        if not table:
            continue
        local = graph.local_order(player)
        ranks = [{label: i for i, label in enumerate(game.strategies[w])} for w in local]
        for key in sorted(table, key=lambda k: tuple(r[l] for r, l in zip(ranks, k))):
            cells = " ".join(f"{w}={label}" for w, label in zip(local, key))
            lines.append(f"payoff {player} {cells} {format_rational(table[key])}")
    return "\n".join(lines) + "\n"


# --- formulas ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"->|\|>|[!(){},]|[A-Za-z][A-Za-z0-9_]*|\S")


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind: str, text: str, line: int, column: int):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    for line_number, raw in enumerate(text.split("\n"), 1):
        content = raw.split("#", 1)[0]
        for match in _TOKEN_RE.finditer(content):
            word = match.group(0)
            column = match.start() + 1
            if word in ("->", "|>", "!", "(", ")", "{", "}", ","):
                tokens.append(_Token(word, word, line_number, column))
            elif word == "false":
                tokens.append(_Token("false", word, line_number, column))
            elif re.match(r"[A-Za-z]", word):
                tokens.append(_Token("id", word, line_number, column))
            else:
                raise ParseError(line_number, f"unexpected character {word!r}", column)
    return tokens


class _FormulaParser:
    def __init__(self, tokens: list[_Token], graph: DependencyGraph):
        self.tokens = tokens
        self.graph = graph
        self.position = 0

    def peek(self) -> _Token | None:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def take(self) -> _Token:
        token = self.peek()
        if token is None:
            last = self.tokens[-1] if self.tokens else None
            line = last.line if last else 1
            column = last.column + len(last.text) if last else 1
            raise ParseError(line, "unexpected end of formula", column)
        self.position += 1
        return token

    def expect(self, kind: str) -> _Token:
        token = self.take()
        if token.kind != kind:
            raise ParseError(token.line, f"expected {kind!r}, got {token.text!r}", token.column)
        return token

    def formula(self) -> Formula:
        left = self.unary()
        token = self.peek()
        if token is not None and token.kind == "->":
            self.take()
            return Implication(left, self.formula())
        return left

    def unary(self) -> Formula:
        token = self.peek()
        if token is not None and token.kind == "!":
            self.take()
            return Implication(self.unary(), FALSUM)
        return self.primary()

    def primary(self) -> Formula:
        token = self.peek()
        if token is None:
            if self.tokens:
                self.take()  # raises "unexpected end of formula" with a position
            raise ParseError(1, "empty formula")
        if token.kind == "false":
            self.take()
            return FALSUM
        if token.kind == "(":
            self.take()
            inner = self.formula()
            self.expect(")")
            return inner
        return self.atom()

    def atom(self) -> Atom:
        lhs = self.player_set()
        self.expect("|>")
        rhs = self.player_set()
        return Atom(lhs, rhs)

    def player_set(self) -> frozenset[str]:
        token = self.peek()
        if token is not None and token.kind == "{":
            self.take()
            names = []
            if self.peek() is not None and self.peek().kind == "id":
                names = self.id_list()
            self.expect("}")
            return frozenset(names)
        if token is None or token.kind != "id":
            got = token.text if token else "end of input"
            line = token.line if token else 1
            column = token.column if token else None
            raise ParseError(line, f"expected a player set, got {got!r}", column)
        return frozenset(self.id_list())

    def id_list(self) -> list[str]:
        names = [self.player_name()]
        while self.peek() is not None and self.peek().kind == ",":
            self.take()
            names.append(self.player_name())
        return names

    def player_name(self) -> str:
        token = self.expect("id")
        if token.text not in self.graph:
            raise ScopeError(token.line, f"player {token.text!r} is not in the graph",
                             token.column)
        return token.text


def parse_formula(text: str, graph: DependencyGraph) -> Formula:
    parser = _FormulaParser(_tokenize(text), graph)
    result = parser.formula()
    trailing = parser.peek()
    if trailing is not None:
        raise ParseError(trailing.line, f"unexpected trailing input {trailing.text!r}",
                         trailing.column)
    return result


def parse_atom(text: str, graph: DependencyGraph) -> Atom:
    formula = parse_formula(text, graph)
    if not isinstance(formula, Atom):
        raise ParseError(1, f"expected a dependence atom, got {print_formula(formula, graph)!r}")
    return formula


def format_player_set(graph: DependencyGraph, players, braced: bool = False) -> str:
    body = ",".join(graph.sorted_players(players))
    if braced or not body:
        return "{" + body + "}"
    return body


def print_formula(formula: Formula, graph: DependencyGraph) -> str:
    """Canonical form: minimal parentheses, sets in declaration order."""
    if isinstance(formula, Falsum):
        return "false"
    if isinstance(formula, Atom):
        lhs = format_player_set(graph, formula.lhs)
        rhs = format_player_set(graph, formula.rhs)
        return f"{lhs} |> {rhs}"
    if isinstance(formula, Implication):
        antecedent = print_formula(formula.antecedent, graph)
        if isinstance(formula.antecedent, Implication):
            antecedent = f"({antecedent})"
        return f"{antecedent} -> {print_formula(formula.consequent, graph)}"
    raise InputError(f"not a formula: {formula!r}")
