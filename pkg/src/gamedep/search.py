"""Built-in example games, seeded random games, and counterexample search.

Random generation uses splitmix64 (the 64-bit finalizer-based generator with
increment 0x9E3779B97F4A7C15 and mixing constants 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB), so game streams are reproducible across platforms and
independent of Python's hash seed or the stdlib RNG.  Game `index` of a
stream with seed `s` is drawn from SplitMix64 seeded with
`(s XOR (index+1) * 0x9E3779B97F4A7C15) mod 2^64`; draws are, in order:
one strategy count per player in declaration order (uniform in
[1, max_strategies]), then for each player in declaration order one payoff
cell per local assignment in row-major order (uniform over payoff_values).
Strategy labels are "0", "1", ... per player.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .core import (
    Atom,
    DependencyGraph,
    Formula,
    Game,
    InputError,
    check_formula_scope,
)
from .prover import Hypotheses, saturate
from .semantics import determined_players, holds

__all__ = [
    "FuzzReport",
    "FuzzViolation",
    "NoneWithinBounds",
    "SearchBounds",
    "SplitMix64",
    "builtin_game",
    "builtin_graph",
    "find_counterexample",
    "fuzz_soundness",
    "random_game",
]

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64: tiny, fast, platform-independent 64-bit generator."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection to avoid modulo bias."""
        if bound <= 0:
            raise InputError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            value = self.next()
            if value < limit:
                return value % bound


def _stream(seed: int, index: int) -> SplitMix64:
    return SplitMix64((seed ^ ((index + 1) * _GOLDEN)) & MASK64)


@dataclass(frozen=True)
class SearchBounds:
    """Resource and shape limits for random and systematic game generation.

    `max_profiles` is a cumulative budget: each candidate game costs its
    profile count, and the search stops (cap_exceeded) once the next game
    would overrun the budget.
    """

    max_strategies: int = 3
    payoff_values: tuple[Fraction, ...] = (Fraction(0), Fraction(1))
    max_profiles: int = 10_000_000
    seed: int = 0
    mode: str = "random"
    sample_count: int = 4000

    def __post_init__(self) -> None:
        object.__setattr__(self, "payoff_values",
                           tuple(Fraction(v) for v in self.payoff_values))
        if self.max_strategies < 1:
            raise InputError("max_strategies must be at least 1")
        if not self.payoff_values:
            raise InputError("payoff_values must be non-empty")
        if len(set(self.payoff_values)) != len(self.payoff_values):
            raise InputError("payoff_values must be distinct")
        if self.max_profiles < 1:
            raise InputError("max_profiles must be at least 1")
        if not 0 <= self.seed <= MASK64:
            raise InputError("seed must be an unsigned 64-bit integer")
        if self.mode not in ("systematic", "random"):
            raise InputError(f"mode must be systematic or random, got {self.mode!r}")
        if self.sample_count < 1:
            raise InputError("sample_count must be at least 1")


# --- built-in graphs and games ----------------------------------------------

_GRAPHS = {
    "gamma1": ("a b c d", ["a-b", "b-c", "c-d"]),
    "gamma2": ("a b c d", ["a-b", "a-c", "b-c", "b-d", "c-d"]),
    "gamma3": ("a b c", ["a-b", "b-c"]),
    "gamma4": ("a b c d e", ["a-b", "a-c", "b-d", "c-d", "d-e"]),
    "gamma5": ("a b c d e f", ["a-d", "b-e", "c-f", "d-e", "d-f", "e-f"]),
    "triangle": ("a b c", ["a-b", "a-c", "b-c"]),
    "pair": ("a b", ["a-b"]),
}


def builtin_graph(name: str) -> DependencyGraph:
    """A named example graph: gamma1..gamma5, triangle, or pair."""
    if name not in _GRAPHS:
        raise InputError(f"unknown built-in graph {name!r}")
    players, edges = _GRAPHS[name]
    return DependencyGraph.of(players.split(),
                              [tuple(e.split("-")) for e in edges])


def _full_table(game_strategies, graph, player, reward):
    local = graph.local_order(player)
    table = {}
    for key in itertools.product(*(game_strategies[q] for q in local)):
        table[key] = Fraction(reward(dict(zip(local, key))))
    return table


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _coordination() -> Game:
    graph = builtin_graph("pair")
    strategies = {"a": ("a1", "a2"), "b": ("b1", "b2")}
    matched = lambda s: s["a"][1] == s["b"][1]
    payoffs = {p: _full_table(strategies, graph, p, matched) for p in graph.players}
    return Game.of(graph, strategies, payoffs)


def _table2() -> Game:
    graph = builtin_graph("pair")
    strategies = {"a": ("a1", "a2", "a3"), "b": ("b1", "b2")}
    # row player's a2 pairs with b2, a1 and a3 both pair with b1
    matched = lambda s: s["b"] == ("b2" if s["a"] == "a2" else "b1")
    payoffs = {p: _full_table(strategies, graph, p, matched) for p in graph.players}
    return Game.of(graph, strategies, payoffs)


def _parity() -> Game:
    graph = builtin_graph("triangle")
    strategies = {p: ("0", "1") for p in graph.players}
    even = lambda s: sum(int(x) for x in s.values()) % 2 == 0
    payoffs = {p: _full_table(strategies, graph, p, even) for p in graph.players}
    return Game.of(graph, strategies, payoffs)


def _consensus() -> Game:
    graph = builtin_graph("triangle")
    strategies = {p: ("0", "1") for p in graph.players}
    unanimous = lambda s: len(set(s.values())) == 1
    payoffs = {p: _full_table(strategies, graph, p, unanimous) for p in graph.players}
    return Game.of(graph, strategies, payoffs)


def _gamma1_mean_mod(p: int) -> Game:
    if not _is_prime(p):
        raise InputError(f"modulus {p} is not prime")
    graph = builtin_graph("gamma1")
    labels = tuple(str(i) for i in range(p))
    strategies = {v: labels for v in graph.players}
    # b and c are rewarded iff their choice solves the local linear relation;
    # a and d have constant payoff 0 (empty tables, entries default to 0)
    on_mean_b = lambda s: (2 * int(s["b"]) - int(s["a"]) - int(s["c"])) % p == 0
    on_mean_c = lambda s: (2 * int(s["c"]) - int(s["b"]) - int(s["d"])) % p == 0
    payoffs = {"a": {}, "d": {},
               "b": _full_table(strategies, graph, "b", on_mean_b),
               "c": _full_table(strategies, graph, "c", on_mean_c)}
    return Game.of(graph, strategies, payoffs)


_RPS_BEATS = {("rock", "scissors"), ("scissors", "paper"), ("paper", "rock")}


def _gamma2_rps() -> Game:
    graph = builtin_graph("gamma2")
    strategies = {v: ("rock", "paper", "scissors") for v in graph.players}
    b_wins = lambda s: s["a"] != s["d"] and (s["b"], s["c"]) in _RPS_BEATS
    c_wins = lambda s: s["a"] != s["d"] and (s["c"], s["b"]) in _RPS_BEATS
    payoffs = {"a": {}, "d": {},
               "b": _full_table(strategies, graph, "b", b_wins),
               "c": _full_table(strategies, graph, "c", c_wins)}
    return Game.of(graph, strategies, payoffs)


_MEAN_MOD_RE = re.compile(r"gamma1_mean_mod\((\d+)\)\Z")


def builtin_game(name: str) -> Game:
    """One of the named example games.

    Names: coordination, table2, parity, consensus, gamma1_mean_mod(p) for a
    prime p, gamma2_rps.
    """
    fixed = {"coordination": _coordination, "table2": _table2,
             "parity": _parity, "consensus": _consensus,
             "gamma2_rps": _gamma2_rps}
    if name in fixed:
        return fixed[name]()
    match = _MEAN_MOD_RE.match(name)
    if match:
        return _gamma1_mean_mod(int(match.group(1)))
    raise InputError(f"unknown built-in game {name!r}")


# --- random and systematic generation ---------------------------------------


def random_game(graph: DependencyGraph, bounds: SearchBounds, index: int) -> Game:
    """The game at `index` of the stream determined by (graph, bounds.seed)."""
    rng = _stream(bounds.seed, index)
    counts = [1 + rng.below(bounds.max_strategies) for _ in graph.players]
    strategies = {p: tuple(str(i) for i in range(k))
                  for p, k in zip(graph.players, counts)}
    values = bounds.payoff_values
    payoffs = {}
    for p in graph.players:
        table = {}
        for key in itertools.product(*(strategies[q] for q in graph.local_order(p))):
            table[key] = values[rng.below(len(values))]
        payoffs[p] = table
    return Game.of(graph, strategies, payoffs)


def _count_vectors(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    """All strategy-count vectors, ascending by total then lexicographically."""
    def parts(total: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if total == 0:
                yield ()
            return
        low = max(1, total - cap * (slots - 1))
        high = min(cap, total - (slots - 1))
        for first in range(low, high + 1):
            for rest in parts(total - first, slots - 1):
                yield (first,) + rest

    for total in range(n, n * cap + 1):
        yield from parts(total, n)


def _systematic_games(graph: DependencyGraph, bounds: SearchBounds) -> Iterator[Game]:
    """Canonical order: counts ascending (total, then lex); within a shape,
    payoff tables in lexicographic order over the concatenated cells (players
    in declaration order, local assignments row-major, last cell fastest)."""
    for counts in _count_vectors(len(graph.players), bounds.max_strategies):
        strategies = {p: tuple(str(i) for i in range(k))
                      for p, k in zip(graph.players, counts)}
        cells = [(p, key)
                 for p in graph.players
                 for key in itertools.product(
                     *(strategies[q] for q in graph.local_order(p)))]
        for assignment in itertools.product(bounds.payoff_values, repeat=len(cells)):
            payoffs: dict[str, dict] = {p: {} for p in graph.players}
            for (p, key), value in zip(cells, assignment):
                payoffs[p][key] = value
            yield Game.of(graph, strategies, payoffs)


@dataclass(frozen=True)
class NoneWithinBounds:
    """Search outcome when no counterexample was found; falsy."""

    games_examined: int
    cap_exceeded: bool = False

    def __bool__(self) -> bool:
        return False


def find_counterexample(graph: DependencyGraph, formula: Formula,
                        bounds: SearchBounds) -> Union[Game, NoneWithinBounds]:
    """First game within bounds where the formula fails, if there is one.

    Systematic mode walks the canonical order exhaustively; random mode walks
    the seeded stream at indices 0..sample_count-1.
    """
    check_formula_scope(graph, formula)
    if bounds.mode == "systematic":
        source = _systematic_games(graph, bounds)
    else:
        source = (random_game(graph, bounds, i) for i in range(bounds.sample_count))
    budget = bounds.max_profiles
    examined = 0
    for game in source:
        cost = game.profile_count()
        if cost > budget:
            return NoneWithinBounds(examined, cap_exceeded=True)
        budget -= cost
        examined += 1
        if not holds(game, formula):
            return game
    return NoneWithinBounds(examined)


# --- soundness fuzzing --------------------------------------------------------


@dataclass(frozen=True)
class FuzzViolation:
    index: int       # index in the random stream
    atom: Atom       # derivable atom that failed semantically
    game: Game


@dataclass(frozen=True)
class FuzzReport:
    graph: DependencyGraph
    games_tested: int
    hypotheses_satisfied: int
    violations: tuple[FuzzViolation, ...]

    def __bool__(self) -> bool:
        return not self.violations

    def text(self) -> str:
        from .parser import print_formula
        lines = [f"games tested: {self.games_tested}",
                 f"hypotheses satisfied: {self.hypotheses_satisfied}",
                 f"violations: {len(self.violations)}"]
        for v in self.violations:
            lines.append(f"game {v.index}: derived "
                         f"{print_formula(v.atom, self.graph)} does not hold")
        return "\n".join(lines) + "\n"


def fuzz_soundness(graph: DependencyGraph, hypotheses: Hypotheses | Iterable,
                   bounds: SearchBounds) -> FuzzReport:
    """Check derivable atoms against the equilibrium semantics on random games.

    For every sampled game in which all hypotheses hold, every atom the
    prover derives from them must hold as well.  Closures that add nothing
    beyond their own left side are reflexive facts and cannot fail (a
    projection always determines itself), so only proper closures are tested.
    """
    if not isinstance(hypotheses, Hypotheses):
        hypotheses = Hypotheses.of(hypotheses)
    table = saturate(graph, hypotheses)
    goals = []
    for x in range(1 << len(graph.players)):
        closed = table.closure_mask(x)
        if closed != x:
            goals.append((graph.players_of_mask(x), graph.players_of_mask(closed)))
    tested = 0
    satisfied = 0
    violations: list[FuzzViolation] = []
    for index in range(bounds.sample_count):
        game = random_game(graph, bounds, index)
        tested += 1
        if not all(holds(game, atom) for atom in hypotheses):
            continue
        satisfied += 1
        for lhs, closed in goals:
            determined = determined_players(game, lhs)
            if not closed <= determined:
                violations.append(
                    FuzzViolation(index, Atom(lhs, closed - determined), game))
    return FuzzReport(graph, tested, satisfied, tuple(violations))
