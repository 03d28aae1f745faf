"""Derivability of dependence atoms from hypotheses over a fixed graph.

The calculus has four rule schemas over atoms `A |> B`:

* Reflexivity:       A |> B            whenever B is a subset of A
* Augmentation:      A |> B  gives  A,C |> B,C
* Transitivity:      A |> B  and  B |> C  give  A |> C
* Contiguity:        A,B |> C  gives  border(U),border(W),B |> C
                     for any cut (U, W) with A inside U and C inside W

plus the derived rule LeftMonotonicity (A |> C gives A,B |> C), which the
checker accepts and the tree builder uses as a shortcut.

The decision procedure computes, for every subset X of the vertices, the
closure cl(X) of players derivable from X, as the least fixpoint of

  (i)   cl(X) contains X,
  (ii)  if Y is a subset of cl(X) then cl(X) absorbs cl(Y)
        (hypotheses are seeded as cl(lhs) contains rhs, so this single
        rule covers both hypothesis application and transitive chaining),
  (iii) if c is in cl(X) and (U, W) is a cut with c in W, then c enters
        cl(border(U) | border(W) | (X minus U)).

Rule (iii) uses only the finest split of X across the cut; any coarser
split produces a superset of that left side and is therefore subsumed
once monotonicity (a special case of (ii)) is available.  A goal
`A |> B` is derivable iff B lies inside cl(A).  Saturation proceeds in
snapshot sweeps and records the sweep at which each fact first appeared,
which lets `derive_tree` rebuild an explicit, independently checkable
derivation by running the producing rule of each fact backwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .core import (
    Atom,
    Cut,
    DependencyGraph,
    InputError,
    PlayerSet,
    ResourceLimitError,
)
from . import parser as _parser
from .parser import ParseError, format_player_set, parse_atom

__all__ = [
    "Augmentation",
    "ByHypothesis",
    "ClosureTable",
    "Contiguity",
    "Derivation",
    "DerivationCheck",
    "Hypotheses",
    "LeftMonotonicity",
    "MAX_SATURATION_VERTICES",
    "Reflexivity",
    "Step",
    "Transitivity",
    "check_derivation",
    "derive_tree",
    "derives",
    "parse_derivation",
    "print_derivation",
    "saturate",
    "sparse",
    "sparse_set_principle",
]

MAX_SATURATION_VERTICES = 12


@dataclass(frozen=True)
class Hypotheses:
    """An ordered, deduplicated collection of assumed dependence atoms."""

    atoms: tuple[Atom, ...] = ()

    @classmethod
    def of(cls, items: Iterable[Atom | tuple]) -> "Hypotheses":
        atoms: list[Atom] = []
        for item in items:
            atom = item if isinstance(item, Atom) else Atom.of(*item)
            if atom not in atoms:
                atoms.append(atom)
        return cls(tuple(atoms))

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __contains__(self, atom: Atom) -> bool:
        return atom in self.atoms


@dataclass(frozen=True)
class ByHypothesis:
    pass


@dataclass(frozen=True)
class Reflexivity:
    pass


@dataclass(frozen=True)
class Augmentation:
    premise: int
    added: PlayerSet


@dataclass(frozen=True)
class Transitivity:
    first: int
    second: int


@dataclass(frozen=True)
class Contiguity:
    premise: int
    cut: Cut
    separated: PlayerSet  # the part of the premise lhs replaced by borders


@dataclass(frozen=True)
class LeftMonotonicity:
    premise: int
    added: PlayerSet


Justification = Union[ByHypothesis, Reflexivity, Augmentation, Transitivity,
                      Contiguity, LeftMonotonicity]


@dataclass(frozen=True)
class Step:
    atom: Atom
    rule: Justification


@dataclass(frozen=True)
class Derivation:
    steps: tuple[Step, ...]

    @property
    def conclusion(self) -> Atom:
        return self.steps[-1].atom

    def __len__(self) -> int:
        return len(self.steps)


def _check_size(graph: DependencyGraph) -> int:
    n = len(graph.players)
    if n > MAX_SATURATION_VERTICES:
        raise ResourceLimitError(
            f"graph has {n} vertices; the derivability engine is capped at "
            f"{MAX_SATURATION_VERTICES}")
    return n


def _border_table(graph: DependencyGraph) -> np.ndarray:
    n = len(graph.players)
    size = 1 << n
    ids = np.arange(size, dtype=np.int64)
    border = np.zeros(size, dtype=np.int64)
    for v, name in enumerate(graph.players):
        adj = graph.mask_of(graph.neighbors(name))
        inside = (ids >> v & 1) == 1
        escaping = (~ids & adj) != 0
        border |= np.where(inside & escaping, np.int64(1 << v), np.int64(0))
    return border


@dataclass
class ClosureTable:
    """Saturated closure of every vertex subset under the hypotheses."""

    graph: DependencyGraph
    hypotheses: Hypotheses
    _cl: np.ndarray
    _wave: np.ndarray          # _wave[X, v]: sweep where v entered cl(X), -1 if never
    _kinds: tuple[str, ...]    # sweep kinds; index 0 is the seeding
    _border: np.ndarray

    def closure_mask(self, lhs_mask: int) -> int:
        return int(self._cl[lhs_mask])

    def closure(self, lhs: Iterable[str]) -> PlayerSet:
        return self.graph.players_of_mask(self.closure_mask(self.graph.mask_of(lhs)))

    def derives(self, lhs: Iterable[str], rhs: Iterable[str]) -> bool:
        rhs_mask = self.graph.mask_of(rhs)
        return rhs_mask & ~self.closure_mask(self.graph.mask_of(lhs)) == 0


def saturate(graph: DependencyGraph,
             hypotheses: Hypotheses | Iterable) -> ClosureTable:
    """Run the closure computation to its global fixpoint."""
    n = _check_size(graph)
    if not isinstance(hypotheses, Hypotheses):
        hypotheses = Hypotheses.of(hypotheses)
    for atom in hypotheses:
        graph.check_players(atom.lhs)
        graph.check_players(atom.rhs)

    size = 1 << n
    full = size - 1
    identity = np.arange(size, dtype=np.int64)
    border = _border_table(graph)
    cl = identity.copy()
    wave = np.full((size, n), -1, dtype=np.int16)
    for v in range(n):
        wave[(identity >> v & 1) == 1, v] = 0
    for atom in hypotheses:
        lhs = graph.mask_of(atom.lhs)
        rhs = graph.mask_of(atom.rhs)
        fresh = rhs & ~int(cl[lhs])
        cl[lhs] |= rhs
        for v in range(n):
            if fresh >> v & 1:
                wave[lhs, v] = 0
    kinds = ["seed"]

    us_without = [np.array([u for u in range(size) if not u >> v & 1], dtype=np.int64)
                  for v in range(n)]

    def record(new: np.ndarray, kind: str) -> bool:
        nonlocal cl
        additions = new & ~cl
        if not additions.any():
            return False
        sweep = len(kinds)
        for v in range(n):
            rows = np.nonzero(additions & (1 << v))[0]
            if rows.size:
                wave[rows, v] = sweep
        kinds.append(kind)
        cl = new
        return True

    while True:
        progressed = False
        while True:
            new = cl.copy()
            for y in np.nonzero(cl != identity)[0]:
                contribution = cl[y]
                new[(cl & y) == y] |= contribution
            if not record(new, "chain"):
                break
            progressed = True
        new = cl.copy()
        for v in range(n):
            bit = np.int64(1 << v)
            sources = np.nonzero(cl & bit)[0]
            if not sources.size:
                continue
            us = us_without[v]
            base = border[us] | border[full ^ us]
            targets = base[:, None] | (sources[None, :] & ~us[:, None])
            flags = np.zeros(size, dtype=bool)
            flags[targets.ravel()] = True
            new[flags] |= bit
        if record(new, "contiguity"):
            progressed = True
        if not progressed:
            break

    return ClosureTable(graph, hypotheses, cl, wave, tuple(kinds), border)


def derives(graph: DependencyGraph, hypotheses: Hypotheses | Iterable,
            lhs: Iterable[str], rhs: Iterable[str]) -> bool:
    return saturate(graph, hypotheses).derives(lhs, rhs)


class _TreeBuilder:
    """Rebuilds an explicit derivation from the saturation timestamps."""

    def __init__(self, table: ClosureTable):
        self.table = table
        self.graph = table.graph
        self.n = len(table.graph.players)
        self.size = 1 << self.n
        self.full = self.size - 1
        self.ids = np.arange(self.size, dtype=np.int64)
        self.steps: list[Step] = []
        self.memo: dict[Atom, int] = {}
        self.hyp_masks = [(self.graph.mask_of(a.lhs), self.graph.mask_of(a.rhs), a)
                          for a in table.hypotheses]
        self.us_without = [
            np.array([u for u in range(self.size) if not u >> v & 1], dtype=np.int64)
            for v in range(self.n)]

    def players_of(self, mask: int) -> PlayerSet:
        return self.graph.players_of_mask(mask)

    def emit(self, atom: Atom, rule: Justification) -> int:
        index = self.memo.get(atom)
        if index is None:
            self.steps.append(Step(atom, rule))
            index = len(self.steps) - 1
            self.memo[atom] = index
        return index

    def before(self, x: int, sweep: int) -> int:
        row = self.table._wave[x]
        mask = 0
        for v in range(self.n):
            if 0 <= row[v] < sweep:
                mask |= 1 << v
        return mask

    def hypothesis_step(self, atom: Atom) -> int:
        return self.emit(atom, ByHypothesis())

    def fact(self, x: int, v: int) -> int:
        """Step index deriving `players(x) |> {v}`."""
        atom = Atom(self.players_of(x), frozenset({self.graph.players[v]}))
        cached = self.memo.get(atom)
        if cached is not None:
            return cached
        sweep = int(self.table._wave[x, v])
        if sweep < 0:
            raise AssertionError("fact requested for an underivable atom")
        kind = self.table._kinds[sweep]
        if kind == "seed":
            if x >> v & 1:
                return self.emit(atom, Reflexivity())
            for lhs, rhs, hyp_atom in self.hyp_masks:
                if lhs == x and rhs >> v & 1:
                    h = self.hypothesis_step(hyp_atom)
                    if hyp_atom == atom:
                        return h
                    projection = self.emit(Atom(hyp_atom.rhs, atom.rhs), Reflexivity())
                    return self.emit(atom, Transitivity(h, projection))
            raise AssertionError("seeded fact matches no hypothesis")
        if kind == "chain":
            y = self.find_chain_source(x, v, sweep)
            premise = self.fact(y, v)
            if y & ~x == 0:
                added = self.players_of(x & ~y)
                return self.emit(atom, LeftMonotonicity(premise, added))
            joined = self.union_step(x, y)
            return self.emit(atom, Transitivity(joined, premise))
        source, u = self.find_contiguity_source(x, v, sweep)
        premise = self.fact(source, v)
        cut = Cut(self.players_of(u), self.players_of(self.full ^ u))
        separated = self.players_of(source & u)
        return self.emit(atom, Contiguity(premise, cut, separated))

    def find_chain_source(self, x: int, v: int, sweep: int) -> int:
        known = self.before(x, sweep)
        column = self.table._wave[:, v]
        usable = ((self.ids & ~known) == 0) & (column >= 0) & (column < sweep)
        candidates = np.nonzero(usable)[0]
        if not candidates.size:
            raise AssertionError("no chain source found")
        return min((int(c) for c in candidates),
                   key=lambda m: (m.bit_count(), m))

    def find_contiguity_source(self, x: int, v: int, sweep: int) -> tuple[int, int]:
        column = self.table._wave[:, v]
        sources = [int(s) for s in np.nonzero((column >= 0) & (column < sweep))[0]]
        sources.sort(key=lambda m: (m.bit_count(), m))
        us = self.us_without[v]
        base = self.table._border[us] | self.table._border[self.full ^ us]
        for source in sources:
            matches = us[(base | (source & ~us)) == x]
            if matches.size:
                return source, int(matches.min())
        raise AssertionError("no contiguity source found")

    def union_step(self, x: int, y: int) -> int:
        """Step index deriving `players(x) |> players(y)`."""
        x_set, y_set = self.players_of(x), self.players_of(y)
        atom = Atom(x_set, y_set)
        cached = self.memo.get(atom)
        if cached is not None:
            return cached
        if y & ~x == 0:
            return self.emit(atom, Reflexivity())
        missing = [v for v in range(self.n) if (y & ~x) >> v & 1]
        if len(y_set) == 1:
            return self.fact(x, missing[0])
        if len(missing) == 1:
            premise = self.fact(x, missing[0])
            added = self.players_of(y & ~(1 << missing[0]))
            return self.emit(atom, Augmentation(premise, added))
        chain = None
        gathered = x
        for i, v in enumerate(missing):
            premise = self.fact(x, v)
            last = i == len(missing) - 1
            added_mask = (y & ~(1 << v)) if last else gathered
            target = y if last else (gathered | 1 << v)
            step = self.emit(Atom(self.players_of(x | added_mask), self.players_of(target)),
                             Augmentation(premise, self.players_of(added_mask)))
            chain = step if chain is None else self.emit(
                Atom(x_set, self.players_of(target)), Transitivity(chain, step))
            gathered |= 1 << v
        return chain

    def goal(self, lhs_mask: int, rhs_mask: int) -> int:
        atom = Atom(self.players_of(lhs_mask), self.players_of(rhs_mask))
        if atom in self.table.hypotheses:
            return self.hypothesis_step(atom)
        return self.union_step(lhs_mask, rhs_mask)

    def compact(self, root: int) -> Derivation:
        needed = set()
        stack = [root]
        while stack:
            index = stack.pop()
            if index in needed:
                continue
            needed.add(index)
            rule = self.steps[index].rule
            if isinstance(rule, (Augmentation, Contiguity, LeftMonotonicity)):
                stack.append(rule.premise)
            elif isinstance(rule, Transitivity):
                stack.extend((rule.first, rule.second))
        order = sorted(needed)
        remap = {old: new for new, old in enumerate(order)}
        rebuilt = []
        for old in order:
            atom, rule = self.steps[old].atom, self.steps[old].rule
            if isinstance(rule, Augmentation):
                rule = Augmentation(remap[rule.premise], rule.added)
            elif isinstance(rule, Transitivity):
                rule = Transitivity(remap[rule.first], remap[rule.second])
            elif isinstance(rule, Contiguity):
                rule = Contiguity(remap[rule.premise], rule.cut, rule.separated)
            elif isinstance(rule, LeftMonotonicity):
                rule = LeftMonotonicity(remap[rule.premise], rule.added)
            rebuilt.append(Step(atom, rule))
        return Derivation(tuple(rebuilt))


def derive_tree(graph: DependencyGraph, hypotheses: Hypotheses | Iterable,
                lhs: Iterable[str], rhs: Iterable[str]) -> Derivation | None:
    """An explicit derivation of `lhs |> rhs`, or None when there is none."""
    table = saturate(graph, hypotheses)
    lhs = graph.check_players(lhs)
    rhs = graph.check_players(rhs)
    if not table.derives(lhs, rhs):
        return None
    builder = _TreeBuilder(table)
    root = builder.goal(graph.mask_of(lhs), graph.mask_of(rhs))
    return builder.compact(root)


# --- checking ---------------------------------------------------------------


@dataclass(frozen=True)
class DerivationCheck:
    ok: bool
    problems: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def check_derivation(graph: DependencyGraph, hypotheses: Hypotheses | Iterable,
                     derivation: Derivation) -> DerivationCheck:
    """Validate every step against its rule schema; never raises on bad proofs."""
    if not isinstance(hypotheses, Hypotheses):
        hypotheses = Hypotheses.of(hypotheses)
    problems: list[str] = []
    steps = derivation.steps
    if not steps:
        return DerivationCheck(False, ("derivation has no steps",))

    def scope_ok(index: int, players: PlayerSet) -> bool:
        try:
            graph.check_players(players)
            return True
        except InputError as exc:
            problems.append(f"step {index + 1}: {exc}")
            return False

    def premise(index: int, reference: int) -> Atom | None:
        if not 0 <= reference < index:
            problems.append(
                f"step {index + 1}: premise {reference + 1} is not an earlier step")
            return None
        return steps[reference].atom

    for i, step in enumerate(steps):
        atom, rule = step.atom, step.rule
        if not (scope_ok(i, atom.lhs) and scope_ok(i, atom.rhs)):
            continue
        if isinstance(rule, ByHypothesis):
            if atom not in hypotheses:
                problems.append(f"step {i + 1}: atom is not among the hypotheses")
        elif isinstance(rule, Reflexivity):
            if not atom.rhs <= atom.lhs:
                problems.append(f"step {i + 1}: rhs is not a subset of lhs")
        elif isinstance(rule, Augmentation):
            source = premise(i, rule.premise)
            if source is None or not scope_ok(i, rule.added):
                continue
            if atom.lhs != source.lhs | rule.added:
                problems.append(f"step {i + 1}: lhs is not the premise lhs plus C")
            if atom.rhs != source.rhs | rule.added:
                problems.append(f"step {i + 1}: rhs is not the premise rhs plus C")
        elif isinstance(rule, Transitivity):
            first = premise(i, rule.first)
            second = premise(i, rule.second)
            if first is None or second is None:
                continue
            if first.rhs != second.lhs:
                problems.append(
                    f"step {i + 1}: middle sets do not match between the premises")
            if atom.lhs != first.lhs or atom.rhs != second.rhs:
                problems.append(f"step {i + 1}: conclusion does not chain the premises")
        elif isinstance(rule, Contiguity):
            source = premise(i, rule.premise)
            if source is None:
                continue
            if not (scope_ok(i, rule.cut.left) and scope_ok(i, rule.cut.right)
                    and scope_ok(i, rule.separated)):
                continue
            try:
                rule.cut.check(graph)
            except InputError as exc:
                problems.append(f"step {i + 1}: {exc}")
                continue
            left, right = rule.cut.left, rule.cut.right
            if not rule.separated <= left:
                problems.append(f"step {i + 1}: A is not a subset of U")
                continue
            if not rule.separated <= source.lhs:
                problems.append(f"step {i + 1}: A is not part of the premise lhs")
                continue
            if not source.rhs <= right:
                problems.append(f"step {i + 1}: premise rhs is not inside W")
                continue
            expected = (graph.border(left) | graph.border(right)
                        | (source.lhs - rule.separated))
            if atom.lhs != expected:
                problems.append(
                    f"step {i + 1}: lhs is not border(U), border(W), and the kept part")
            if atom.rhs != source.rhs:
                problems.append(f"step {i + 1}: rhs differs from the premise rhs")
        elif isinstance(rule, LeftMonotonicity):
            source = premise(i, rule.premise)
            if source is None or not scope_ok(i, rule.added):
                continue
            if atom.lhs != source.lhs | rule.added:
                problems.append(f"step {i + 1}: lhs is not the premise lhs plus the added set")
            if atom.rhs != source.rhs:
                problems.append(f"step {i + 1}: rhs differs from the premise rhs")
        else:
            problems.append(f"step {i + 1}: unknown rule {rule!r}")
    return DerivationCheck(not problems, tuple(problems))


# --- sparse sets ------------------------------------------------------------


def sparse(graph: DependencyGraph, players: Iterable[str]) -> bool:
    """True iff the players are pairwise at graph distance 3 or more."""
    members = graph.check_players(players)
    for u in members:
        near = {u} | graph.neighbors(u)
        for x in graph.neighbors(u):
            near |= graph.neighbors(x)
        if (near - {u}) & members:
            return False
    return True


def sparse_set_principle(graph: DependencyGraph,
                         players: Iterable[str]) -> Derivation | None:
    """For sparse W: from `everyone-but-w |> w` for each w, derive `V-W |> W`."""
    members = graph.check_players(players)
    if not sparse(graph, members):
        raise InputError(f"players {sorted(members)} are not sparse "
                         f"(pairwise distance at least 3 required)")
    everyone = graph.player_set()
    hypotheses = Hypotheses.of(
        Atom(everyone - {w}, frozenset({w})) for w in graph.sorted_players(members))
    return derive_tree(graph, hypotheses, everyone - members, members)


# --- serialization ----------------------------------------------------------
#
# One step per line:
#
#   <index>. <atom> [<Rule> <args>]
#
# where <index> counts from 1 in order, <atom> uses the formula grammar,
# premise arguments are step indices, and set arguments are braced:
#
#   1. a |> d [Hypothesis]
#   2. b,c |> d [Contiguity 1 cut={a,b}|{c,d} A={a}]
#
# Rules: Hypothesis | Reflexivity | Augmentation <p> C={..} |
#        Transitivity <p> <q> | Contiguity <p> cut={U}|{W} A={A} |
#        LeftMonotonicity <p> add={..}


def print_derivation(derivation: Derivation, graph: DependencyGraph) -> str:
    lines = []
    for i, step in enumerate(derivation.steps):
        atom = _parser.print_formula(step.atom, graph)
        rule = step.rule
        if isinstance(rule, ByHypothesis):
            text = "Hypothesis"
        elif isinstance(rule, Reflexivity):
            text = "Reflexivity"
        elif isinstance(rule, Augmentation):
            text = f"Augmentation {rule.premise + 1} C={format_player_set(graph, rule.added, braced=True)}"
        elif isinstance(rule, Transitivity):
            text = f"Transitivity {rule.first + 1} {rule.second + 1}"
        elif isinstance(rule, Contiguity):
            left = format_player_set(graph, rule.cut.left, braced=True)
            right = format_player_set(graph, rule.cut.right, braced=True)
            part = format_player_set(graph, rule.separated, braced=True)
            text = f"Contiguity {rule.premise + 1} cut={left}|{right} A={part}"
        elif isinstance(rule, LeftMonotonicity):
            text = f"LeftMonotonicity {rule.premise + 1} add={format_player_set(graph, rule.added, braced=True)}"
        else:
            raise InputError(f"unknown rule {rule!r}")
        lines.append(f"{i + 1}. {atom} [{text}]")
    return "\n".join(lines) + "\n"


def _parse_braced_set(token: str, prefix: str, line: int,
                      graph: DependencyGraph) -> PlayerSet:
    if not token.startswith(prefix + "{") or not token.endswith("}"):
        raise ParseError(line, f"expected {prefix}{{...}}, got {token!r}")
    body = token[len(prefix) + 1:-1]
    if not body:
        return frozenset()
    names = body.split(",")
    for name in names:
        if name not in graph:
            raise ParseError(line, f"player {name!r} is not in the graph")
    return frozenset(names)


def _parse_premise(token: str, line: int) -> int:
    if not token.isdigit() or int(token) < 1:
        raise ParseError(line, f"expected a step index, got {token!r}")
    return int(token) - 1


def parse_derivation(text: str, graph: DependencyGraph) -> Derivation:
    steps: list[Step] = []
    for number, content in _parser._logical_lines(text):
        head, bracket, tail = content.partition("[")
        if not bracket or not tail.rstrip().endswith("]"):
            raise ParseError(number, "expected '<index>. <atom> [<rule> ...]'")
        head = head.strip()
        rule_text = tail.rstrip()[:-1].strip()
        index_text, dot, atom_text = head.partition(".")
        if not dot or not index_text.isdigit():
            raise ParseError(number, "step must start with '<index>.'")
        if int(index_text) != len(steps) + 1:
            raise ParseError(number, f"step numbers must be sequential, "
                                     f"expected {len(steps) + 1}")
        try:
            atom = parse_atom(atom_text.strip(), graph)
        except ParseError as exc:
            raise ParseError(number, exc.reason) from None
        tokens = rule_text.split()
        if not tokens:
            raise ParseError(number, "missing rule name")
        name, args = tokens[0], tokens[1:]
        rule: Justification
        if name == "Hypothesis" and not args:
            rule = ByHypothesis()
        elif name == "Reflexivity" and not args:
            rule = Reflexivity()
        elif name == "Augmentation" and len(args) == 2:
            rule = Augmentation(_parse_premise(args[0], number),
                                _parse_braced_set(args[1], "C=", number, graph))
        elif name == "Transitivity" and len(args) == 2:
            rule = Transitivity(_parse_premise(args[0], number),
                                _parse_premise(args[1], number))
        elif name == "Contiguity" and len(args) == 3:
            cut_text = args[1]
            if not cut_text.startswith("cut=") or "|" not in cut_text:
                raise ParseError(number, f"expected cut={{U}}|{{W}}, got {cut_text!r}")
            left_text, _, right_text = cut_text[4:].partition("|")
            rule = Contiguity(
                _parse_premise(args[0], number),
                Cut(_parse_braced_set(left_text, "", number, graph),
                    _parse_braced_set(right_text, "", number, graph)),
                _parse_braced_set(args[2], "A=", number, graph))
        elif name == "LeftMonotonicity" and len(args) == 2:
            rule = LeftMonotonicity(_parse_premise(args[0], number),
                                    _parse_braced_set(args[1], "add=", number, graph))
        else:
            raise ParseError(number, f"malformed rule {rule_text!r}")
        steps.append(Step(atom, rule))
    if not steps:
        raise ParseError(1, "empty derivation")
    return Derivation(tuple(steps))
