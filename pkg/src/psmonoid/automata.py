"""Finite automata and two-tape transducers.

States are integers ``0..n-1`` with an optional side table of labels.  The
empty word on a transition is ``None``.  Automata are built through the
constructors and combinators below and treated as immutable afterwards.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, NamedTuple, Sequence

PAD = "$"
EPS = None


class PaddedPairSymbol(NamedTuple):
    left: Any
    right: Any

    def __str__(self) -> str:
        return f"({symbol_text(self.left)},{symbol_text(self.right)})"


def symbol_text(s) -> str:
    if s is None:
        return "ε"
    if isinstance(s, tuple) and not isinstance(s, PaddedPairSymbol):
        return "e_" + "".join(str(a) for a in s) if all(isinstance(a, int) for a in s) else str(s)
    return str(s)


def pad_right(u: Sequence, v: Sequence) -> tuple[PaddedPairSymbol, ...]:
    """Pair position-wise from the left, padding the shorter word at its end."""
    k = max(len(u), len(v))
    return tuple(
        PaddedPairSymbol(u[i] if i < len(u) else PAD, v[i] if i < len(v) else PAD) for i in range(k)
    )


def pad_left(u: Sequence, v: Sequence) -> tuple[PaddedPairSymbol, ...]:
    """Pair position-wise from the right, padding the shorter word at its start."""
    return tuple(reversed(pad_right(tuple(reversed(u)), tuple(reversed(v)))))


def unpad(pairs: Iterable[PaddedPairSymbol]) -> tuple[tuple, tuple]:
    pairs = list(pairs)
    return (
        tuple(p.left for p in pairs if p.left != PAD),
        tuple(p.right for p in pairs if p.right != PAD),
    )


def _sort_key(s):
    if isinstance(s, PaddedPairSymbol):
        return (2, _sort_key(s.left), _sort_key(s.right))
    if isinstance(s, tuple):
        return (1, len(s), s)
    if s == PAD:
        return (3,)
    return (0, s)


@dataclass
class Nfa:
    n_states: int = 0
    transitions: list = field(default_factory=list)  # state -> {label: set(states)}
    initial: set = field(default_factory=set)
    accepting: set = field(default_factory=set)
    alphabet: set = field(default_factory=set)
    labels: dict = field(default_factory=dict)

    # construction -------------------------------------------------------
    def add_state(self, label: str | None = None) -> int:
        self.transitions.append({})
        if label is not None:
            self.labels[self.n_states] = label
        self.n_states += 1
        return self.n_states - 1

    def add_transition(self, src: int, symbol, dst: int) -> None:
        if symbol is not None:
            self.alphabet.add(symbol)
        self.transitions[src].setdefault(symbol, set()).add(dst)

    def edges(self):
        for src, table in enumerate(self.transitions):
            for sym, dsts in table.items():
                for dst in dsts:
                    yield src, sym, dst

    @classmethod
    def empty(cls) -> "Nfa":
        a = cls()
        a.initial.add(a.add_state())
        return a

    @classmethod
    def epsilon(cls) -> "Nfa":
        a = cls.empty()
        a.accepting |= a.initial
        return a

    @classmethod
    def symbol(cls, *symbols) -> "Nfa":
        """Accepts exactly the one-letter words over ``symbols``."""
        a = cls()
        s, t = a.add_state(), a.add_state()
        for x in symbols:
            a.add_transition(s, x, t)
        a.initial.add(s)
        a.accepting.add(t)
        return a

    @classmethod
    def word(cls, w: Sequence) -> "Nfa":
        a = cls()
        s = a.add_state()
        a.initial.add(s)
        for x in w:
            t = a.add_state()
            a.add_transition(s, x, t)
            s = t
        a.accepting.add(s)
        return a

    def _copy_into(self, other: "Nfa") -> int:
        offset = other.n_states
        for i in range(self.n_states):
            other.add_state(self.labels.get(i))
        for src, sym, dst in self.edges():
            other.add_transition(src + offset, sym, dst + offset)
        other.alphabet |= self.alphabet
        return offset

    # regular operations --------------------------------------------------
    def union(self, *others: "Nfa") -> "Nfa":
        out = Nfa()
        for a in (self,) + others:
            off = a._copy_into(out)
            out.initial |= {s + off for s in a.initial}
            out.accepting |= {s + off for s in a.accepting}
        return out

    def concat(self, *others: "Nfa") -> "Nfa":
        out = Nfa()
        prev_accepting = None
        for a in (self,) + others:
            off = a._copy_into(out)
            if prev_accepting is None:
                out.initial |= {s + off for s in a.initial}
            else:
                for f in prev_accepting:
                    for s in a.initial:
                        out.add_transition(f, EPS, s + off)
            prev_accepting = {s + off for s in a.accepting}
        out.accepting = set(prev_accepting)
        return out

    def plus(self) -> "Nfa":
        out = Nfa()
        off = self._copy_into(out)
        out.initial = {s + off for s in self.initial}
        out.accepting = {s + off for s in self.accepting}
        for f in out.accepting:
            for s in out.initial:
                out.add_transition(f, EPS, s)
        return out

    def star(self) -> "Nfa":
        return self.plus().union(Nfa.epsilon())

    def reverse(self) -> "Nfa":
        out = Nfa()
        for i in range(self.n_states):
            out.add_state(self.labels.get(i))
        for src, sym, dst in self.edges():
            out.add_transition(dst, sym, src)
        out.alphabet |= self.alphabet
        out.initial = set(self.accepting)
        out.accepting = set(self.initial)
        return out

    # simulation ----------------------------------------------------------
    def closure(self, states: Iterable[int]) -> frozenset:
        seen = set(states)
        stack = list(seen)
        while stack:
            s = stack.pop()
            for t in self.transitions[s].get(EPS, ()):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def step(self, states: Iterable[int], symbol) -> frozenset:
        nxt = set()
        for s in states:
            nxt |= self.transitions[s].get(symbol, set())
        return self.closure(nxt)

    def accepts(self, word: Iterable) -> bool:
        current = self.closure(self.initial)
        for x in word:
            current = self.step(current, x)
            if not current:
                return False
        return bool(current & self.accepting)

    def is_deterministic(self) -> bool:
        if len(self.initial) != 1:
            return False
        return all(EPS not in t and all(len(d) == 1 for d in t.values()) for t in self.transitions)

    # transformations -----------------------------------------------------
    def determinize(self) -> "Nfa":
        """Subset construction; the result has no dead state."""
        alphabet = sorted(self.alphabet, key=_sort_key)
        start = self.closure(self.initial)
        out = Nfa(alphabet=set(self.alphabet))
        index = {start: out.add_state()}
        out.initial.add(0)
        queue = deque([start])
        while queue:
            subset = queue.popleft()
            src = index[subset]
            if subset & self.accepting:
                out.accepting.add(src)
            for sym in alphabet:
                nxt = self.step(subset, sym)
                if not nxt:
                    continue
                if nxt not in index:
                    index[nxt] = out.add_state()
                    queue.append(nxt)
                out.add_transition(src, sym, index[nxt])
        return out

    def _reachable(self, starts: Iterable[int], forward: bool) -> set:
        if forward:
            adj = [set().union(*t.values()) if t else set() for t in self.transitions]
        else:
            adj = [set() for _ in range(self.n_states)]
            for src, _, dst in self.edges():
                adj[dst].add(src)
        seen = set(starts)
        stack = list(seen)
        while stack:
            s = stack.pop()
            for t in adj[s]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    def trim(self) -> "Nfa":
        """Keep states that are both reachable and co-reachable."""
        useful = self._reachable(self.initial, True) & self._reachable(self.accepting, False)
        order = sorted(useful)
        remap = {s: i for i, s in enumerate(order)}
        out = Nfa(alphabet=set(self.alphabet))
        for s in order:
            out.add_state(self.labels.get(s))
        for src, sym, dst in self.edges():
            if src in remap and dst in remap:
                out.add_transition(remap[src], sym, remap[dst])
        out.initial = {remap[s] for s in self.initial if s in remap}
        out.accepting = {remap[s] for s in self.accepting if s in remap}
        if not out.n_states:
            return Nfa.empty()
        return out

    def intersect(self, other: "Nfa") -> "Nfa":
        a, b = self.determinize(), other.determinize()
        out = Nfa(alphabet=a.alphabet & b.alphabet)
        start = (min(a.initial), min(b.initial))
        index = {start: out.add_state()}
        out.initial.add(0)
        queue = deque([start])
        while queue:
            p, q = queue.popleft()
            src = index[(p, q)]
            if p in a.accepting and q in b.accepting:
                out.accepting.add(src)
            for sym, dp in a.transitions[p].items():
                dq = b.transitions[q].get(sym)
                if not dq:
                    continue
                nxt = (next(iter(dp)), next(iter(dq)))
                if nxt not in index:
                    index[nxt] = out.add_state()
                    queue.append(nxt)
                out.add_transition(src, sym, index[nxt])
        return out

    def minimal(self) -> "Nfa":
        """Trimmed DFA; the reverse-determinize trick yields the minimal one."""
        return self.reverse().determinize().reverse().determinize().trim()

    def is_empty(self) -> bool:
        return not (self._reachable(self.initial, True) & self.accepting)

    def words(self, max_length: int) -> list[tuple]:
        """Accepted words of length at most ``max_length``, shortlex ordered."""
        alphabet = sorted(self.alphabet, key=_sort_key)
        out = []
        layer = {(): self.closure(self.initial)}
        for _ in range(max_length + 1):
            out += [w for w, st in layer.items() if st & self.accepting]
            nxt = {}
            for w, st in layer.items():
                for sym in alphabet:
                    s2 = self.step(st, sym)
                    if s2:
                        nxt[w + (sym,)] = s2
            layer = nxt
        return sorted(out, key=lambda w: (len(w), [_sort_key(x) for x in w]))

    # export --------------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "states": list(range(self.n_states)),
            "alphabet": [symbol_text(s) for s in sorted(self.alphabet, key=_sort_key)],
            "transitions": [
                {"from": src, "label": symbol_text(sym), "to": dst}
                for src, sym, dst in sorted(self.edges(), key=lambda e: (e[0], _sort_key(e[1]) if e[1] is not None else (-1,), e[2]))
            ],
            "initial": sorted(self.initial),
            "accepting": sorted(self.accepting),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def to_dot(self, name: str = "automaton") -> str:
        lines = [f'digraph "{name}" {{', "  rankdir=LR;", '  node [shape=circle];']
        for s in range(self.n_states):
            shape = "doublecircle" if s in self.accepting else "circle"
            label = self.labels.get(s, str(s))
            lines.append(f'  {s} [shape={shape}, label="{label}"];')
        for i, s in enumerate(sorted(self.initial)):
            lines.append(f'  start{i} [shape=point]; start{i} -> {s};')
        grouped: dict = {}
        for src, sym, dst in self.edges():
            grouped.setdefault((src, dst), []).append(sym)
        for (src, dst), syms in sorted(grouped.items()):
            text = ", ".join(symbol_text(s) for s in sorted(syms, key=lambda x: (-1,) if x is None else _sort_key(x)))
            lines.append(f'  {src} -> {dst} [label="{text}"];')
        lines.append("}")
        return "\n".join(lines)


def nfa_from_dict(data: dict) -> dict:
    """JSON exports lose symbol types; this just normalizes the parsed structure."""
    return {
        "states": list(data["states"]),
        "alphabet": list(data["alphabet"]),
        "transitions": [dict(t) for t in data["transitions"]],
        "initial": list(data["initial"]),
        "accepting": list(data["accepting"]),
    }


@dataclass
class PairTransducer:
    """A finite transducer; transitions are ``(src, input, output, dst)``.

    ``direction`` records how the machine reads its tapes.  A right-to-left
    machine accepts ``(u, v)`` when its transitions spell out the reversals
    of ``u`` and ``v``.
    """

    n_states: int = 0
    transitions: list = field(default_factory=list)
    initial: set = field(default_factory=set)
    accepting: set = field(default_factory=set)
    direction: str = "ltr"
    labels: dict = field(default_factory=dict)

    def add_state(self, label: str | None = None) -> int:
        if label is not None:
            self.labels[self.n_states] = label
        self.n_states += 1
        return self.n_states - 1

    def add_transition(self, src: int, inp, out, dst: int) -> None:
        self.transitions.append((src, inp, out, dst))

    @property
    def input_alphabet(self) -> set:
        return {t[1] for t in self.transitions if t[1] is not None}

    @property
    def output_alphabet(self) -> set:
        return {t[2] for t in self.transitions if t[2] is not None}

    def _outgoing(self) -> list:
        table = [[] for _ in range(self.n_states)]
        for src, i, o, dst in self.transitions:
            table[src].append((i, o, dst))
        return table

    # atoms and combinators -----------------------------------------------
    @classmethod
    def pair(cls, inp, out) -> "PairTransducer":
        t = cls()
        s, f = t.add_state(), t.add_state()
        t.add_transition(s, inp, out, f)
        t.initial.add(s)
        t.accepting.add(f)
        return t

    @classmethod
    def identity(cls) -> "PairTransducer":
        t = cls()
        t.initial.add(t.add_state())
        t.accepting |= t.initial
        return t

    @classmethod
    def diagonal(cls, nfa: Nfa) -> "PairTransducer":
        """``{(u, u) : u accepted by nfa}``."""
        t = cls()
        for i in range(nfa.n_states):
            t.add_state(nfa.labels.get(i))
        for src, sym, dst in nfa.edges():
            t.add_transition(src, sym, sym, dst)
        t.initial = set(nfa.initial)
        t.accepting = set(nfa.accepting)
        return t

    @classmethod
    def homomorphism(cls, mapping: dict) -> "PairTransducer":
        """Maps each letter ``x`` to the word ``mapping[x]``."""
        t = cls()
        hub = t.add_state()
        t.initial.add(hub)
        t.accepting.add(hub)
        for x in sorted(mapping, key=_sort_key):
            image = tuple(mapping[x])
            if len(image) <= 1:
                t.add_transition(hub, x, image[0] if image else None, hub)
                continue
            s = t.add_state()
            t.add_transition(hub, x, image[0], s)
            for y in image[1:-1]:
                s2 = t.add_state()
                t.add_transition(s, None, y, s2)
                s = s2
            t.add_transition(s, None, image[-1], hub)
        return t

    def _copy_into(self, other: "PairTransducer") -> int:
        off = other.n_states
        for i in range(self.n_states):
            other.add_state(self.labels.get(i))
        for src, i, o, dst in self.transitions:
            other.add_transition(src + off, i, o, dst + off)
        return off

    def _same_direction(self, others) -> None:
        if any(o.direction != self.direction for o in others):
            raise ValueError("cannot combine transducers reading in different directions")

    def union(self, *others: "PairTransducer") -> "PairTransducer":
        self._same_direction(others)
        out = PairTransducer(direction=self.direction)
        for t in (self,) + others:
            off = t._copy_into(out)
            out.initial |= {s + off for s in t.initial}
            out.accepting |= {s + off for s in t.accepting}
        return out

    def concat(self, *others: "PairTransducer") -> "PairTransducer":
        self._same_direction(others)
        out = PairTransducer(direction=self.direction)
        prev = None
        for t in (self,) + others:
            off = t._copy_into(out)
            if prev is None:
                out.initial |= {s + off for s in t.initial}
            else:
                for f in prev:
                    for s in t.initial:
                        out.add_transition(f, None, None, s + off)
            prev = {s + off for s in t.accepting}
        out.accepting = set(prev)
        return out

    def star(self) -> "PairTransducer":
        out = PairTransducer(direction=self.direction)
        off = self._copy_into(out)
        hub = out.add_state()
        out.initial.add(hub)
        out.accepting.add(hub)
        for s in self.initial:
            out.add_transition(hub, None, None, s + off)
        for f in self.accepting:
            out.add_transition(f + off, None, None, hub)
        return out

    def inverse(self) -> "PairTransducer":
        out = PairTransducer(self.n_states, [(s, o, i, d) for s, i, o, d in self.transitions],
                             set(self.initial), set(self.accepting), self.direction, dict(self.labels))
        return out

    def reverse_arrows(self) -> "PairTransducer":
        return PairTransducer(self.n_states, [(d, i, o, s) for s, i, o, d in self.transitions],
                              set(self.accepting), set(self.initial), self.direction, dict(self.labels))

    def left_to_right(self) -> "PairTransducer":
        """Same relation, read left to right."""
        if self.direction == "ltr":
            return self
        out = self.reverse_arrows()
        out.direction = "ltr"
        return out

    def reversed_relation(self) -> "PairTransducer":
        """``{(rev u, rev v)}`` as a left-to-right machine."""
        t = self.left_to_right().reverse_arrows()
        t.direction = "ltr"
        return t

    def compose(self, other: "PairTransducer") -> "PairTransducer":
        """``{(u, w) : (u, v) in self and (v, w) in other}``."""
        a, b = self.left_to_right(), other.left_to_right()
        a_out, b_out = a._outgoing(), b._outgoing()
        out = PairTransducer()
        index: dict = {}
        queue: deque = deque()

        def state(p, q):
            if (p, q) not in index:
                index[(p, q)] = out.add_state(f"{a.labels.get(p, p)}|{b.labels.get(q, q)}")
                queue.append((p, q))
            return index[(p, q)]

        for p in sorted(a.initial):
            for q in sorted(b.initial):
                out.initial.add(state(p, q))
        while queue:
            p, q = queue.popleft()
            src = index[(p, q)]
            if p in a.accepting and q in b.accepting:
                out.accepting.add(src)
            for i, mid, p2 in a_out[p]:
                if mid is None:
                    out.add_transition(src, i, None, state(p2, q))
                else:
                    for j, o, q2 in b_out[q]:
                        if j == mid:
                            out.add_transition(src, i, o, state(p2, q2))
            for j, o, q2 in b_out[q]:
                if j is None:
                    out.add_transition(src, None, o, state(p, q2))
        return out.trim()

    def trim(self) -> "PairTransducer":
        fwd = [set() for _ in range(self.n_states)]
        bwd = [set() for _ in range(self.n_states)]
        for s, _, _, d in self.transitions:
            fwd[s].add(d)
            bwd[d].add(s)

        def reach(starts, adj):
            seen = set(starts)
            stack = list(seen)
            while stack:
                for t in adj[stack.pop()]:
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
            return seen

        useful = reach(self.initial, fwd) & reach(self.accepting, bwd)
        order = sorted(useful)
        remap = {s: k for k, s in enumerate(order)}
        out = PairTransducer(direction=self.direction)
        for s in order:
            out.add_state(self.labels.get(s))
        for s, i, o, d in self.transitions:
            if s in remap and d in remap:
                out.add_transition(remap[s], i, o, remap[d])
        out.initial = {remap[s] for s in self.initial if s in remap}
        out.accepting = {remap[s] for s in self.accepting if s in remap}
        return out

    # projections and simulation ------------------------------------------
    def _project(self, take_output: bool) -> Nfa:
        t = self.left_to_right()
        out = Nfa()
        for k in range(t.n_states):
            out.add_state(t.labels.get(k))
        for s, i, o, d in t.transitions:
            out.add_transition(s, o if take_output else i, d)
        out.initial = set(t.initial)
        out.accepting = set(t.accepting)
        return out.trim()

    def domain(self) -> Nfa:
        return self._project(False)

    def image(self) -> Nfa:
        return self._project(True)

    def accepts(self, u: Sequence, v: Sequence) -> bool:
        t = self.left_to_right()
        u, v = tuple(u), tuple(v)
        table = t._outgoing()
        start = [(s, 0, 0) for s in t.initial]
        seen = set(start)
        stack = list(start)
        while stack:
            s, i, j = stack.pop()
            if i == len(u) and j == len(v) and s in t.accepting:
                return True
            for a, b, d in table[s]:
                if a is not None and (i >= len(u) or u[i] != a):
                    continue
                if b is not None and (j >= len(v) or v[j] != b):
                    continue
                nxt = (d, i + (a is not None), j + (b is not None))
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return False

    def outputs(self, u: Sequence, max_extra: int = 2) -> set:
        """Every ``v`` with ``(u, v)`` accepted and ``|v| <= |u| + max_extra``."""
        t = self.left_to_right()
        u = tuple(u)
        limit = len(u) + max_extra
        table = t._outgoing()
        start = [(s, 0, ()) for s in t.initial]
        seen = set(start)
        stack = list(start)
        found = set()
        while stack:
            s, i, v = stack.pop()
            if i == len(u) and s in t.accepting:
                found.add(v)
            for a, b, d in table[s]:
                if a is not None and (i >= len(u) or u[i] != a):
                    continue
                v2 = v + (b,) if b is not None else v
                if len(v2) > limit:
                    continue
                nxt = (d, i + (a is not None), v2)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return found


def _viability(table: list):
    """Memoized test: can some run from ``q`` consume both buffers completely?

    Letters beyond the end of a buffer are unconstrained, since they may
    arrive later on the padded tape.
    """
    memo: dict = {}

    def viable(q, bu, bv) -> bool:
        key = (q, bu, bv)
        if key in memo:
            return memo[key]
        start = (q, 0, 0)
        seen = {start}
        stack = [start]
        ok = False
        while stack and not ok:
            s, i, j = stack.pop()
            if i == len(bu) and j == len(bv):
                ok = True
                break
            for a, b, d in table[s]:
                ni, nj = i, j
                if a is not None and i < len(bu):
                    if bu[i] != a:
                        continue
                    ni += 1
                if b is not None and j < len(bv):
                    if bv[j] != b:
                        continue
                    nj += 1
                nxt = (d, ni, nj)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        memo[key] = ok
        return ok

    return viable


def padded_automaton(t: PairTransducer, coding: str = "right", max_lag: int = 8) -> Nfa:
    """Compile a rational relation of bounded length difference to a padded automaton.

    The automaton reads the padded encoding and buffers letters that the
    transducer has not consumed yet.  Buffers that no run of ``t`` could
    consume are dropped at once, and runs whose buffers exceed ``max_lag``
    letters on either tape are cut.  The result is exact for relations that
    some run of ``t`` realizes within that lag; every construction in this
    package is checked against the tableau oracle.
    """
    if coding in ("left", "dl"):
        return padded_automaton(t.reversed_relation(), "right", max_lag).reverse().trim()
    if coding not in ("right", "dr"):
        raise ValueError(f"unknown coding {coding!r}")
    t = t.left_to_right()
    table = t._outgoing()
    viable = _viability(table)
    left_syms = sorted(t.input_alphabet, key=_sort_key) + [PAD]
    right_syms = sorted(t.output_alphabet, key=_sort_key) + [PAD]
    out = Nfa()
    index: dict = {}
    queue: deque = deque()

    def state(cfg):
        if cfg not in index:
            index[cfg] = out.add_state()
            queue.append(cfg)
        return index[cfg]

    for q in sorted(t.initial):
        out.initial.add(state((q, (), (), False, False)))
    while queue:
        cfg = queue.popleft()
        q, bu, bv, eu, ev = cfg
        src = index[cfg]
        if q in t.accepting and not bu and not bv:
            out.accepting.add(src)
        for a, b, d in table[q]:
            if a is not None and (not bu or bu[0] != a):
                continue
            if b is not None and (not bv or bv[0] != b):
                continue
            nxt = (d, bu[1:] if a is not None else bu, bv[1:] if b is not None else bv, eu, ev)
            out.add_transition(src, EPS, state(nxt))
        for x in left_syms:
            if eu and x != PAD:
                continue
            for y in right_syms:
                if (ev and y != PAD) or (x == PAD and y == PAD):
                    continue
                nu = bu if x == PAD else bu + (x,)
                nv = bv if y == PAD else bv + (y,)
                if len(nu) > max_lag or len(nv) > max_lag or not viable(q, nu, nv):
                    continue
                nxt = (q, nu, nv, eu or x == PAD, ev or y == PAD)
                out.add_transition(src, PaddedPairSymbol(x, y), state(nxt))
    return out.trim()


def find_partner(dfa: Nfa, u: Sequence, max_extra: int = 1) -> tuple | None:
    """The ``v`` whose right-padded pairing with ``u`` the automaton accepts.

    Runs layer by layer over the letters of ``u`` while guessing the second
    tape, keeping one back pointer per reached state.
    """
    rights = sorted({s.right for s in dfa.alphabet}, key=_sort_key)
    layer = {s: None for s in dfa.closure(dfa.initial)}
    history = []
    padded_u = list(u) + [PAD] * max_extra
    for k, x in enumerate(padded_u):
        if k >= len(u) and (layer.keys() & dfa.accepting):
            break
        nxt: dict = {}
        for s in layer:
            for y in rights:
                for d in dfa.step([s], PaddedPairSymbol(x, y)):
                    if d not in nxt:
                        nxt[d] = (s, y)
        history.append(nxt)
        layer = nxt
        if not layer:
            return None
    hits = sorted(layer.keys() & dfa.accepting)
    if not hits:
        return None
    s = hits[0]
    v = []
    for nxt in reversed(history):
        s, y = nxt[s]
        v.append(y)
    return tuple(y for y in reversed(v) if y != PAD)
