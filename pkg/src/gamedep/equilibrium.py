"""Pure strategy Nash equilibria by exhaustive unilateral deviation checking."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .core import Game, InputError, ResourceLimitError, StrategyProfile

__all__ = [
    "DEFAULT_PROFILE_CAP",
    "enumerate_equilibria",
    "equilibria",
    "is_equilibrium",
    "payoff_of",
]

DEFAULT_PROFILE_CAP = 10_000_000

_ZERO = Fraction(0)


def _layout(game: Game):
    """Per-player lookup structure: (local indices, own slot, table, labels)."""
    layout = game._cache.get("layout")
    if layout is None:
        graph = game.graph
        layout = []
        for player in graph.players:
            local = graph.local_order(player)
            indices = tuple(graph.index(w) for w in local)
            layout.append((indices,
                           local.index(player),
                           game.payoffs.get(player, {}),
                           game.strategies[player]))
        layout = tuple(layout)
        game._cache["layout"] = layout
    return layout


def payoff_of(game: Game, player: str, profile: StrategyProfile) -> Fraction:
    """Payoff of one player; reads only the closed neighbourhood of `player`."""
    indices, _, table, _ = _layout(game)[game.graph.index(player)]
    key = tuple(profile[i] for i in indices)
    return table.get(key, _ZERO)


def is_equilibrium(game: Game, profile: StrategyProfile) -> bool:
    """True iff no player can strictly improve by deviating alone.

    Ties do not disqualify: a deviation that merely matches the current
    payoff leaves the profile in equilibrium.
    """
    game.check_profile(profile)
    return _is_equilibrium(profile, _layout(game))


def _is_equilibrium(profile: StrategyProfile, layout) -> bool:
    for player_index, (indices, slot, table, labels) in enumerate(layout):
        key = tuple(profile[i] for i in indices)
        current = table.get(key, _ZERO)
        chosen = profile[player_index]
        for label in labels:
            if label == chosen:
                continue
            alternative = key[:slot] + (label,) + key[slot + 1:]
            if table.get(alternative, _ZERO) > current:
                return False
    return True


def enumerate_equilibria(game: Game,
                         max_profiles: int = DEFAULT_PROFILE_CAP) -> tuple[StrategyProfile, ...]:
    """All pure equilibria, lexicographic in player and strategy declaration order."""
    count = game.profile_count()
    if count > max_profiles:
        raise ResourceLimitError(
            f"game has {count} profiles, exceeding the cap of {max_profiles}")
    layout = _layout(game)
    found = []
    for profile in itertools.product(*(game.strategies[p] for p in game.graph.players)):
        if _is_equilibrium(profile, layout):
            found.append(profile)
    return tuple(found)


def equilibria(game: Game) -> tuple[StrategyProfile, ...]:
    """Equilibrium set of the game, computed once and cached on the instance."""
    cached = game._cache.get("equilibria")
    if cached is None:
        cached = enumerate_equilibria(game)
        game._cache["equilibria"] = cached
    return cached
