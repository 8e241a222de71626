"""Braid words, wiring diagrams, and upper linking numbers.

A wiring diagram records a sweep of an arrangement: an initial top-to-bottom
order of the lines, then one event per singular point.  Each event carries a
braid word (crossings that happen before the point is reached) followed by
the point itself, where the incident lines meet in a contiguous block and
exchange positions through a positive half-twist.

Upper linking numbers are read off such diagrams: a crossing contributes the
meridian of its over-strand, with the letter's sign, whenever the chosen
line passes under.  For a positive letter i the strand arriving at position
i crosses over the strand at position i + 1; this orientation is pinned by
the bundled reference tables.
"""

from __future__ import annotations

from .errors import ArrlinkError


class InconsistentWiring(ArrlinkError):
    """Event supports do not match the declared singular points."""


class NonContiguousSupport(ArrlinkError):
    """A point's lines are not adjacent when the sweep reaches it."""


class LineNotInSupport(ArrlinkError):
    """Requested a point-to-line edge whose line misses the point."""


class LineAbsent(ArrlinkError):
    """The chosen line is not carried by any strand."""


class BraidWord:
    """Signed crossing positions on k strands; letter i acts at (|i|, |i|+1)."""

    __slots__ = ("k", "letters")

    def __init__(self, k: int, letters=()):
        letters = tuple(letters)
        for let in letters:
            if let == 0 or not 1 <= abs(let) <= k - 1:
                raise ArrlinkError(f"letter {let} out of range on {k} strands")
        self.k = k
        self.letters = letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.k == other.k and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.k, self.letters))

    def __repr__(self) -> str:
        return f"BraidWord(k={self.k}, {list(self.letters)})"


class StrandState:
    """Mutable position -> line assignment, 1-based positions."""

    __slots__ = ("order", "nlines")

    def __init__(self, lines, nlines: int | None = None):
        order = list(lines)
        if len(set(order)) != len(order):
            raise ArrlinkError("strand labels repeat")
        self.order = order
        self.nlines = len(order) if nlines is None else nlines

    @property
    def k(self) -> int:
        return len(self.order)

    def line_at(self, pos: int) -> int:
        return self.order[pos - 1]

    def position_of(self, line: int) -> int:
        try:
            return self.order.index(line) + 1
        except ValueError:
            raise LineAbsent(f"line {line} not on any strand") from None

    def carries(self, line: int) -> bool:
        return line in self.order

    def apply_letter(self, letter: int) -> None:
        i = abs(letter)
        self.order[i - 1], self.order[i] = self.order[i], self.order[i - 1]

    def apply_word(self, word: BraidWord) -> None:
        if word.k != self.k:
            raise ArrlinkError(f"word on {word.k} strands, state has {self.k}")
        for let in word:
            self.apply_letter(let)

    def copy(self) -> "StrandState":
        return StrandState(self.order, self.nlines)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StrandState):
            return NotImplemented
        return self.order == other.order and self.nlines == other.nlines

    def __repr__(self) -> str:
        return f"StrandState({self.order})"


class MeridianSum:
    """Integer combination of line meridians, modulo the all-lines relation.

    Two sums are equal when they differ by a constant on every coordinate,
    since the meridians of all n lines add up to zero.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=()):
        vals = [0] * n
        if isinstance(coeffs, dict):
            for line, c in coeffs.items():
                vals[line - 1] = c
        else:
            for i, c in enumerate(coeffs):
                vals[i] = c
        self.n = n
        self.coeffs = tuple(vals)

    @classmethod
    def meridian(cls, n: int, line: int) -> "MeridianSum":
        return cls(n, {line: 1})

    def _check(self, other: "MeridianSum") -> None:
        if not isinstance(other, MeridianSum) or other.n != self.n:
            raise ArrlinkError("meridian sums over different line sets")

    def __add__(self, other) -> "MeridianSum":
        self._check(other)
        return MeridianSum(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other) -> "MeridianSum":
        self._check(other)
        return MeridianSum(self.n, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "MeridianSum":
        return MeridianSum(self.n, [-a for a in self.coeffs])

    def __rmul__(self, s: int) -> "MeridianSum":
        return MeridianSum(self.n, [s * a for a in self.coeffs])

    def is_zero(self) -> bool:
        return len(set(self.coeffs)) == 1

    def canonical(self) -> tuple[int, ...]:
        """Representative with minimum coordinate zero."""
        base = min(self.coeffs)
        return tuple(a - base for a in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MeridianSum):
            return NotImplemented
        return self.n == other.n and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.n, self.canonical()))

    def pair(self, character, modulus: int) -> int:
        """Evaluate a character (value on each meridian) on this sum.

        Well-defined only when the character kills the all-lines relation.
        """
        if len(character) != self.n:
            raise ArrlinkError("character length differs from line count")
        if sum(character) % modulus:
            raise ArrlinkError("character does not kill the meridian relation")
        return sum(a * v for a, v in zip(self.coeffs, character)) % modulus

    def __repr__(self) -> str:
        terms = []
        for line, c in enumerate(self.coeffs, start=1):
            if c == 1:
                terms.append(f"+m{line}")
            elif c == -1:
                terms.append(f"-m{line}")
            elif c:
                terms.append(f"{c:+d}*m{line}")
        return "MeridianSum(" + ("".join(terms) or "0") + ")"


def half_twist(state: StrandState, support) -> BraidWord:
    """Positive half-twist on the contiguous block carrying the support.

    Returns the block-reversing word (sigma_a..sigma_{a+m-2})(..)...(sigma_a)
    and applies it to the state.
    """
    positions = sorted(state.position_of(line) for line in support)
    a, m = positions[0], len(positions)
    if positions != list(range(a, a + m)):
        raise NonContiguousSupport(
            f"lines {sorted(support)} sit at positions {positions}"
        )
    letters = []
    for j in range(m - 1, 0, -1):
        letters.extend(range(a, a + j))
    word = BraidWord(state.k, letters)
    state.apply_word(word)
    return word


class WiringDiagram:
    """Initial strand order plus one (braid, support) event per singular point.

    Validation replays the sweep: each event's braid is applied, the support
    lines must then form a contiguous block in the printed top-to-bottom
    order, and the block goes through a positive half-twist before the next
    event.  When a combinatorics is supplied the event supports must match
    its singular points exactly.
    """

    __slots__ = ("strands", "events", "comb")

    def __init__(self, strands, events, comb=None):
        self.strands = tuple(strands)
        n = len(self.strands)
        if sorted(self.strands) != list(range(1, n + 1)):
            raise ArrlinkError("strand labels must be a permutation of 1..n")
        evts = []
        for braid, support in events:
            word = braid if isinstance(braid, BraidWord) else BraidWord(n, braid)
            if word.k != n:
                raise ArrlinkError("event braid on wrong strand count")
            evts.append((word, tuple(support)))
        self.events = tuple(evts)
        self.comb = comb
        if comb is not None:
            if comb.n != n:
                raise InconsistentWiring(f"{n} strands for {comb.n} lines")
            listed = sorted(tuple(sorted(s)) for _, s in self.events)
            if listed != list(comb.supports):
                raise InconsistentWiring("event supports differ from singular points")
        self._replay()  # contiguity check

    @property
    def nlines(self) -> int:
        return len(self.strands)

    def _replay(self):
        state = StrandState(self.strands)
        for word, support in self.events:
            state.apply_word(word)
            top = state.position_of(support[0])
            block = [state.line_at(top + d) for d in range(len(support))] if (
                top + len(support) - 1 <= state.k
            ) else []
            if tuple(block) != tuple(support):
                raise NonContiguousSupport(
                    f"support {support} not a contiguous block (state {state.order})"
                )
            half_twist(state, support)
        return state

    def event_index(self, support) -> int:
        """Index of the event whose support equals the given line set."""
        want = tuple(sorted(support))
        for i, (_, s) in enumerate(self.events):
            if tuple(sorted(s)) == want:
                return i
        raise ArrlinkError(f"no event with support {want}")

    def relabel(self, sigma) -> "WiringDiagram":
        """The same geometric sweep with every line renamed by sigma."""
        from .combinatorics import perm_act

        sigma = tuple(sigma)
        if sorted(sigma) != list(range(1, self.nlines + 1)):
            raise ArrlinkError(f"not a permutation of 1..{self.nlines}: {sigma}")
        strands = tuple(sigma[s - 1] for s in self.strands)
        events = [
            (word, tuple(sigma[l - 1] for l in support))
            for word, support in self.events
        ]
        comb = perm_act(sigma, self.comb) if self.comb is not None else None
        return WiringDiagram(strands, events, comb)

    def __repr__(self) -> str:
        return f"WiringDiagram({len(self.strands)} strands, {len(self.events)} events)"


def strand_delete(word: BraidWord, state: StrandState, keep) -> tuple[BraidWord, StrandState]:
    """Restrict a braid to the kept lines.

    Letters whose two strands are both kept are reindexed to their position
    among survivors; letters touching a deleted strand disappear.  Returns
    the restricted word and the restricted start state.
    """
    kept = set(keep)
    if not kept:
        raise ArrlinkError("must keep at least one strand")
    st = state.copy()
    letters = []
    for let in word:
        i = abs(let)
        upper, lower = st.line_at(i), st.line_at(i + 1)
        if upper in kept and lower in kept:
            pos = sum(1 for p in range(1, i) if st.line_at(p) in kept) + 1
            letters.append(pos if let > 0 else -pos)
        st.apply_letter(let)
    new_order = [line for line in state.order if line in kept]
    new_state = StrandState(new_order, state.nlines)
    return BraidWord(len(new_order), letters), new_state


def edge_braid(w: WiringDiagram, index: int, line: int) -> tuple[BraidWord, StrandState, int]:
    """Braid of a point-to-line edge: the sweep up to event `index` (0-based),
    with the half-twist of each earlier point inserted, restricted to the
    chosen line and the lines missing the point.

    Returns (word, start state of the restricted diagram, start position of
    the line).
    """
    word_i, support = w.events[index]
    if line not in support:
        raise LineNotInSupport(f"line {line} missing from {sorted(support)}")
    state = StrandState(w.strands)
    letters = []
    for j in range(index + 1):
        bj, sj = w.events[j]
        letters.extend(bj.letters)
        state.apply_word(bj)
        if j == index:
            break
        letters.extend(half_twist(state, sj).letters)
    keep = {line} | (set(w.strands) - set(support))
    full = BraidWord(w.nlines, letters)
    sub, start = strand_delete(full, StrandState(w.strands), keep)
    return sub, start, start.position_of(line)


def ulk_braid(word: BraidWord, state: StrandState, line: int) -> MeridianSum:
    """Signed sum of meridians of the strands crossing over the chosen line."""
    st = state.copy()
    if not st.carries(line):
        raise LineAbsent(f"line {line} not on any strand")
    total = MeridianSum(st.nlines)
    for let in word:
        i = abs(let)
        upper, lower = st.line_at(i), st.line_at(i + 1)
        over, under = (upper, lower) if let > 0 else (lower, upper)
        if under == line:
            sign = 1 if let > 0 else -1
            total = total + sign * MeridianSum.meridian(st.nlines, over)
        st.apply_letter(let)
    return total
