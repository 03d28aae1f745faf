"""Formula evaluation over the equilibrium set of a game.

A dependence atom `A |> B` holds when any two equilibria that agree on
the strategies of A also agree on the strategies of B.  Implication is
classical and `false` never holds, so `!f` (sugar for `f -> false`)
holds exactly when f fails.
"""

from __future__ import annotations

from typing import Iterable

from .core import Atom, Falsum, Formula, Game, Implication, InputError
from .equilibrium import equilibria

__all__ = ["depends", "determined_players", "holds"]


def depends(game: Game, lhs: Iterable[str], rhs: Iterable[str]) -> bool:
    """True iff equilibria agreeing on `lhs` always agree on `rhs`.

    Implemented by grouping the equilibrium set on the lhs projection,
    one pass, rather than comparing all pairs.
    """
    graph = game.graph
    lhs_indices = [graph.index(p) for p in graph.sorted_players(lhs)]
    rhs_indices = [graph.index(p) for p in graph.sorted_players(rhs)]
    groups: dict[tuple[str, ...], tuple[str, ...]] = {}
    for profile in equilibria(game):
        key = tuple(profile[i] for i in lhs_indices)
        reference = groups.get(key)
        if reference is None:
            groups[key] = profile
        elif any(profile[i] != reference[i] for i in rhs_indices):
            return False
    return True


def determined_players(game: Game, lhs: Iterable[str]) -> frozenset[str]:
    """The largest B with `lhs |> B` true: players constant within every lhs-group."""
    graph = game.graph
    lhs_indices = [graph.index(p) for p in graph.sorted_players(lhs)]
    candidates = set(range(len(graph.players)))
    groups: dict[tuple[str, ...], tuple[str, ...]] = {}
    for profile in equilibria(game):
        key = tuple(profile[i] for i in lhs_indices)
        reference = groups.get(key)
        if reference is None:
            groups[key] = profile
        else:
            candidates -= {i for i in candidates if profile[i] != reference[i]}
    return frozenset(graph.players[i] for i in candidates)


def holds(game: Game, formula: Formula) -> bool:
    if isinstance(formula, Falsum):
        return False
    if isinstance(formula, Atom):
        return depends(game, formula.lhs, formula.rhs)
    if isinstance(formula, Implication):
        return not holds(game, formula.antecedent) or holds(game, formula.consequent)
    raise InputError(f"not a formula: {formula!r}")
