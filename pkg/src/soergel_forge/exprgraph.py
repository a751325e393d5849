"""Expression graphs for elements of S_{n+1}.

Vertices of the expanded graph are reduced words; edges are single braid
moves (i,j,i <-> j,i,j for adjacent i,j) or commutation moves (i,j <-> j,i
for distant i,j).  The conflated graph is the quotient by commutation
moves, with braid edges oriented from the lexicographically smaller pattern
(i, i+1, i) to (i+1, i, i+1).

The named path families below (flips F_{i,j}, the FR_i paths, the source-to-
sink path V_J) follow the explicit recursions used to build the parabolic
projector downstream; between flips, commutation moves are inserted by a
greedy shortest-rearrangement routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import coxeter

Word = tuple

ADJACENT = "adjacent"
DISTANT = "distant"


# -- paths -------------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    kind: str   # ADJACENT or DISTANT
    pos: int    # 0-based offset of the leftmost changed letter
    forward: bool = True  # braid steps: True if (i,i+1,i) -> (i+1,i,i+1)


def apply_step(word, step):
    w = list(word)
    p = step.pos
    if step.kind == DISTANT:
        a, b = w[p], w[p + 1]
        if abs(a - b) < 2:
            raise ValueError(f"letters at {p} are not distant in {word}")
        w[p], w[p + 1] = b, a
    else:
        a, b, c = w[p:p + 3]
        if a != c or abs(a - b) != 1:
            raise ValueError(f"no braid pattern at {p} in {word}")
        w[p:p + 3] = [b, a, b]
    return tuple(w)


def step_at(word, pos, kind):
    """Build a Step at a position, inferring the braid direction."""
    if kind == DISTANT:
        return Step(DISTANT, pos)
    a, b = word[pos], word[pos + 1]
    return Step(ADJACENT, pos, forward=a < b)


@dataclass(frozen=True)
class Path:
    start: Word
    steps: tuple

    def vertices(self):
        out = [self.start]
        for s in self.steps:
            out.append(apply_step(out[-1], s))
        return out

    @property
    def end(self):
        w = self.start
        for s in self.steps:
            w = apply_step(w, s)
        return w

    def length(self):
        """Number of braid steps (commutation moves do not count)."""
        return sum(1 for s in self.steps if s.kind == ADJACENT)

    def is_oriented(self):
        return all(s.forward for s in self.steps if s.kind == ADJACENT)

    def is_reverse_oriented(self):
        return not any(s.forward for s in self.steps if s.kind == ADJACENT)

    def reverse(self):
        """Run the path backwards."""
        steps = []
        verts = self.vertices()
        for s, w in zip(reversed(self.steps), reversed(verts[:-1])):
            if s.kind == DISTANT:
                steps.append(s)
            else:
                steps.append(Step(ADJACENT, s.pos, forward=not s.forward))
        return Path(verts[-1], tuple(steps))

    def then(self, other):
        if self.end != other.start:
            raise ValueError("paths do not compose")
        return Path(self.start, self.steps + other.steps)

    def shifted(self, offset, left, right):
        """Embed into a larger word: left + start + right."""
        steps = tuple(Step(s.kind, s.pos + offset, s.forward)
                      for s in self.steps)
        return Path(tuple(left) + self.start + tuple(right), steps)

    @staticmethod
    def empty(word):
        return Path(tuple(word), ())


def commutation_moves(u, w):
    """A path of commutation moves from u to w; raises if the words are
    not in the same commutation class (greedy leftmost extraction)."""
    u = list(u)
    w = list(w)
    if sorted(u) != sorted(w):
        raise ValueError("words are not rearrangements")
    steps = []
    for t in range(len(w)):
        letter = w[t]
        k = None
        for p in range(t, len(u)):
            if u[p] == letter:
                if all(abs(u[q] - letter) >= 2 for q in range(t, p)):
                    k = p
                break
            if abs(u[p] - letter) < 2:
                break
        if k is None:
            raise ValueError(f"{u} and {w} are not commutation-equivalent")
        for p in range(k - 1, t - 1, -1):
            u[p], u[p + 1] = u[p + 1], u[p]
            steps.append(Step(DISTANT, p))
    return steps


def commutation_path(u, w):
    return Path(tuple(u), tuple(commutation_moves(u, w)))


# -- graphs ------------------------------------------------------------------

class ExpandedGraph:
    """All reduced words of w with braid and commutation edges."""

    def __init__(self, w):
        self.element = tuple(w)
        self.n = len(w) - 1
        self.vertices = coxeter.reduced_words(self.element)
        self._index = {v: k for k, v in enumerate(self.vertices)}
        self.edges = []
        seen = set()
        for v in self.vertices:
            for step in moves_at(v):
                u = apply_step(v, step)
                key = (min(v, u), max(v, u), step.kind, step.pos)
                if key not in seen:
                    seen.add(key)
                    if step.kind == ADJACENT:
                        src = v if step.forward else u
                        self.edges.append((src, apply_step(src, step_at(src, step.pos, ADJACENT)), ADJACENT, step.pos))
                    else:
                        self.edges.append((min(v, u), max(v, u), DISTANT, step.pos))

    def neighbors(self, v):
        for step in moves_at(v):
            yield apply_step(v, step), step

    def is_connected(self):
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for u, _ in self.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self.vertices)

    def to_json(self):
        cg = conflate(self)
        return {
            "vertices": [list(v) for v in self.vertices],
            "edges": [{"u": list(u), "v": list(v), "kind": k, "pos": p}
                      for u, v, k, p in self.edges],
            "source": list(cg.source_rep) if cg.source_rep else None,
            "sink": list(cg.sink_rep) if cg.sink_rep else None,
        }

    def to_dot(self):
        lines = ["digraph expr {"]
        for v in self.vertices:
            lines.append(f'  "{word_str(v)}";')
        for u, v, k, p in self.edges:
            if k == ADJACENT:
                lines.append(f'  "{word_str(u)}" -> "{word_str(v)}";')
            else:
                lines.append(
                    f'  "{word_str(u)}" -> "{word_str(v)}" '
                    "[style=dashed, dir=none];")
        lines.append("}")
        return "\n".join(lines)


def word_str(w):
    return ",".join(map(str, w)) if any(x > 9 for x in w) else "".join(map(str, w))


def moves_at(word):
    out = []
    for p in range(len(word) - 1):
        if abs(word[p] - word[p + 1]) >= 2:
            out.append(Step(DISTANT, p))
    for p in range(len(word) - 2):
        a, b, c = word[p:p + 3]
        if a == c and abs(a - b) == 1:
            out.append(Step(ADJACENT, p, forward=a < b))
    return out


class ConflatedGraph:
    """Quotient of the expanded graph by commutation moves."""

    def __init__(self, expanded):
        self.expanded = expanded
        parent = {v: v for v in expanded.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for u, v, kind, _ in expanded.edges:
            if kind == DISTANT:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)

        groups = {}
        for v in expanded.vertices:
            groups.setdefault(find(v), []).append(v)
        self.classes = tuple(tuple(sorted(g))
                             for _, g in sorted(groups.items()))
        self.class_of = {}
        for k, cls in enumerate(self.classes):
            for v in cls:
                self.class_of[v] = k
        self.reps = tuple(cls[0] for cls in self.classes)

        edges = set()
        for u, v, kind, _ in expanded.edges:
            if kind == ADJACENT:
                edges.add((self.class_of[u], self.class_of[v]))
        self.edges = tuple(sorted(edges))

        outs = {k: 0 for k in range(len(self.classes))}
        ins = {k: 0 for k in range(len(self.classes))}
        for a, b in self.edges:
            outs[a] += 1
            ins[b] += 1
        self.sources = [k for k in range(len(self.classes)) if ins[k] == 0]
        self.sinks = [k for k in range(len(self.classes)) if outs[k] == 0]
        self.source_rep = self.reps[self.sources[0]] if len(self.sources) == 1 else None
        self.sink_rep = self.reps[self.sinks[0]] if len(self.sinks) == 1 else None

    def to_json(self):
        return {
            "classes": [[list(w) for w in cls] for cls in self.classes],
            "edges": [{"u": a, "v": b} for a, b in self.edges],
            "sources": self.sources,
            "sinks": self.sinks,
        }

    def to_dot(self):
        lines = ["digraph conflated {"]
        for rep in self.reps:
            lines.append(f'  "{word_str(rep)}";')
        for a, b in self.edges:
            lines.append(f'  "{word_str(self.reps[a])}" -> "{word_str(self.reps[b])}";')
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def build_expanded(w):
    return ExpandedGraph(tuple(w))


def conflate(expanded):
    return ConflatedGraph(expanded)


@lru_cache(maxsize=None)
def parabolic_graph(J, n):
    w, _ = coxeter.longest(J, n)
    g = build_expanded(w)
    return g, conflate(g)


def source_sink(J, n):
    """Unique source and sink classes of the conflated graph of w_J."""
    _, cg = parabolic_graph(tuple(sorted(J)), n)
    if len(cg.sources) != 1 or len(cg.sinks) != 1:
        raise ArithmeticError(f"source/sink not unique for J={J}")
    return cg.classes[cg.sources[0]], cg.classes[cg.sinks[0]]


# -- canonical vertices -------------------------------------------------------

def _interval(J):
    run = coxeter.runs(J)
    if len(run) != 1:
        raise ValueError(f"J={J} is not connected")
    return run[0][0], run[0][-1]


def asc(a, b):
    return tuple(range(a, b + 1))


def desc(b, a):
    return tuple(range(b, a - 1, -1))


def s_right(J):
    a, b = _interval(J)
    out = ()
    for m in range(a, b + 1):
        out += desc(m, a)
    return out


def t_right(J):
    a, b = _interval(J)
    out = ()
    for m in range(b, a - 1, -1):
        out += asc(m, b)
    return out


def s_left(J):
    return tuple(reversed(s_right(J)))


def t_left(J):
    return tuple(reversed(t_right(J)))


def s_right_variant(J, i):
    """Begins like s_left down to the block of i, ends with s_right there."""
    a, b = _interval(J)
    if not a <= i <= b:
        raise ValueError(f"index {i} not in J")
    out = ()
    for m in range(b, i, -1):
        out += asc(a, m)
    return out + s_right(tuple(range(a, i + 1)))


def t_right_variant(J, i):
    a, b = _interval(J)
    if not a <= i <= b:
        raise ValueError(f"index {i} not in J")
    out = ()
    for m in range(a, i):
        out += desc(b, m)
    return out + t_right(tuple(range(i, b + 1)))


def canonical_vertex(J, which, i=None):
    """The named representatives: which in {sR, sL, tR, tL}, with the
    optional splice index for the sR/tR variants."""
    J = tuple(sorted(J))
    if i is not None:
        if which == "sR":
            return s_right_variant(J, i)
        if which == "tR":
            return t_right_variant(J, i)
        raise ValueError("variants exist only for sR and tR")
    return {"sR": s_right, "sL": s_left, "tR": t_right, "tL": t_left}[which](J)


# -- named path families ------------------------------------------------------

def flip_path(i, j, at, offset):
    """The flip F_{i,j}: braids the middle repeatedly, turning the segment
    asc(i..j)+desc(j-1..i) into desc(j..i)+asc(i+1..j).  Braid count j-i."""
    at = tuple(at)
    want = asc(i, j) + desc(j - 1, i)
    if at[offset:offset + len(want)] != want:
        raise ValueError(f"no flip segment for F_{i},{j} at {offset} in {at}")
    steps = []
    cur = at

    def push(step):
        nonlocal cur
        steps.append(step)
        cur = apply_step(cur, step)

    jj, off = j, offset
    while jj > i:
        c = off + (jj - i - 1)
        push(step_at(cur, c, ADJACENT))
        for p in range(c - 1, off - 1, -1):
            push(Step(DISTANT, p))
        for p in range(c + 2, off + 2 * (jj - i)):
            push(Step(DISTANT, p))
        jj -= 1
        off += 1
    return Path(at, tuple(steps))


def _v_tail(a, b, left, right):
    """The flip cascade from t_right((a,b-1)) + desc(b..a) to t_right((a,b)),
    embedded as left + ... + right.  Returns the path."""
    start = t_right(tuple(range(a, b))) + desc(b, a)
    path = Path.empty(tuple(left) + start + tuple(right))
    cur = path.end
    suffix = ()
    for m in range(a, b):
        prefix = t_right(tuple(range(m + 1, b))) if m + 1 <= b - 1 else ()
        target = tuple(left) + prefix + asc(m, b) + desc(b - 1, m) \
            + suffix + tuple(right)
        path = path.then(commutation_path(cur, target))
        path = path.then(flip_path(m, b, target, len(left) + len(prefix)))
        cur = path.end
        suffix = asc(m, b) + suffix
    target = tuple(left) + t_right(tuple(range(a, b + 1))) + tuple(right)
    path = path.then(commutation_path(cur, target))
    return path


def _v_path_connected(a, b):
    if a == b:
        return Path.empty((a,))
    sub = _v_path_connected(a, b - 1)
    path = sub.shifted(0, (), desc(b, a))
    return path.then(_v_tail(a, b, (), ()))


@lru_cache(maxsize=None)
def v_path(J):
    """Oriented path from s_right(J) to t_right(J); horizontal concatenation
    over connected components for disconnected J."""
    J = tuple(sorted(J))
    run_list = coxeter.runs(J)
    paths = [_v_path_connected(r[0], r[-1]) for r in run_list]
    starts = [p.start for p in paths]
    total = Path.empty(sum(starts, ()))
    offset = 0
    for k, p in enumerate(paths):
        left = total.end[:offset]
        right = sum((q.end for q in paths[:k]), ())  # unused; placeholder
        prefix_len = offset
        left_word = total.end[:prefix_len]
        right_word = total.end[prefix_len + len(p.start):]
        total = total.then(p.shifted(prefix_len, left_word, right_word))
        offset += len(p.start)
    return total


@lru_cache(maxsize=None)
def fr_path(J, i, endpoint):
    """The flip family bringing the letter i to the far right.

    endpoint "source": oriented path from s_right(J) to a word ending in i.
    endpoint "sink": reverse-oriented path from t_right(J) to a word ending
    in i.  Defined only at the source and sink representatives.
    """
    J = tuple(sorted(J))
    run_list = coxeter.runs(J)
    run = next((r for r in run_list if i in r), None)
    if run is None:
        raise ValueError(f"index {i} not in J={J}")
    if len(run_list) > 1:
        # act on i's component, identity elsewhere
        inner = fr_path(run, i, endpoint)
        which = run_list.index(run)
        left = sum(((s_right(r) if endpoint == "source" else t_right(r))
                    for r in run_list[:which]), ())
        right = sum(((s_right(r) if endpoint == "source" else t_right(r))
                     for r in run_list[which + 1:]), ())
        # bring i's component to the far right by commutations, then flip
        start = left + inner.start + right
        moved = left + right + inner.start
        path = commutation_path(start, moved)
        return path.then(inner.shifted(len(left) + len(right), left + right, ()))
    a, b = run[0], run[-1]
    if endpoint == "source":
        if i == a:
            return Path.empty(s_right(run))
        variant = s_right_variant(run, i)
        path = commutation_path(s_right(run), variant)
        prefix = len(variant) - len(s_right(tuple(range(a, i + 1))))
        cur = path.end
        for m in range(a + 1, i + 1):
            off = prefix + (m - 1 - a) * (m - a) // 2
            path = path.then(flip_path(a, m, cur, off))
            cur = path.end
        return path
    if endpoint == "sink":
        if i == b:
            return Path.empty(t_right(run))
        variant = t_right_variant(run, i)
        path = commutation_path(t_right(run), variant)
        prefix = len(variant) - len(t_right(tuple(range(i, b + 1))))
        tail = _v_tail(i, b, variant[:prefix], ())
        return path.then(tail.reverse())
    raise ValueError("endpoint must be 'source' or 'sink'")


def oriented_path(x, y):
    """Some oriented path between two words (commutations free, braids
    forward only), or None."""
    from collections import deque
    x, y = tuple(x), tuple(y)
    prev = {x: None}
    queue = deque([x])
    while queue:
        w = queue.popleft()
        if w == y:
            break
        for step in moves_at(w):
            if step.kind == ADJACENT and not step.forward:
                continue
            u = apply_step(w, step)
            if u not in prev:
                prev[u] = (w, step)
                queue.append(u)
    if y not in prev:
        return None
    steps = []
    w = y
    while prev[w] is not None:
        pw, step = prev[w]
        steps.append(step)
        w = pw
    return Path(x, tuple(reversed(steps)))


def oriented_path_between_classes(J, n, cx, cy):
    """Oriented path between representatives of two conflated classes."""
    _, cg = parabolic_graph(tuple(sorted(J)), n)
    return oriented_path(cg.reps[cx], cg.reps[cy])


@lru_cache(maxsize=None)
def rewrite_path_for_i(J, i):
    """Oriented path s_J -> x -> y -> t_J with FR_i at both ends and a
    middle that never touches the rightmost letter."""
    from collections import deque
    J = tuple(sorted(J))
    s_part = fr_path(J, i, "source")
    t_part = fr_path(J, i, "sink")
    x, y = s_part.end, t_part.end
    if x == y:
        return s_part.then(t_part.reverse())
    d = len(x)
    prev = {x: None}
    queue = deque([x])
    while queue and y not in prev:
        w = queue.popleft()
        for step in moves_at(w):
            if step.kind == ADJACENT and (not step.forward or step.pos > d - 4):
                continue
            if step.kind == DISTANT and step.pos > d - 3:
                continue
            u = apply_step(w, step)
            if u not in prev:
                prev[u] = (w, step)
                queue.append(u)
    if y not in prev:
        raise ArithmeticError(f"no protected middle path for J={J}, i={i}")
    steps = []
    w = y
    while prev[w] is not None:
        pw, step = prev[w]
        steps.append(step)
        w = pw
    middle = Path(x, tuple(reversed(steps)))
    return s_part.then(middle).then(t_part.reverse())


# -- cycle census --------------------------------------------------------------

def classify_cycles(expanded):
    """Pattern-matched census of the four local cycle types."""
    squares = set()
    hexagons = set()
    octagons = set()
    zamolodchikov = set()

    def window_disjoint(s1, s2):
        w1 = 2 if s1.kind == DISTANT else 3
        w2 = 2 if s2.kind == DISTANT else 3
        return s1.pos + w1 <= s2.pos or s2.pos + w2 <= s1.pos

    for w in expanded.vertices:
        steps = moves_at(w)
        for k1 in range(len(steps)):
            for k2 in range(k1 + 1, len(steps)):
                s1, s2 = steps[k1], steps[k2]
                if window_disjoint(s1, s2):
                    corners = frozenset({
                        w, apply_step(w, s1), apply_step(w, s2),
                        apply_step(apply_step(w, s1), s2)})
                    if len(corners) == 4:
                        squares.add(corners)
        for p in range(len(w) - 2):
            trio = w[p:p + 3]
            if all(abs(trio[q] - trio[r]) >= 2
                   for q in range(3) for r in range(q + 1, 3)):
                hexagons.add((p, w[:p], w[p + 3:], frozenset(trio)))
        for p in range(len(w) - 3):
            quad = w[p:p + 4]
            for pat in (quad, tuple(reversed(quad))):
                x, yy, x2, z = pat
                if x == x2 and abs(x - yy) == 1 and abs(z - x) >= 2 \
                        and abs(z - yy) >= 2:
                    octagons.add((p, w[:p], w[p + 4:],
                                  (frozenset((x, yy)), z)))
        for p in range(len(w) - 5):
            window = w[p:p + 6]
            letters = sorted(set(window))
            if len(letters) == 3 and letters[1] == letters[0] + 1 \
                    and letters[2] == letters[0] + 2:
                n = expanded.n
                if coxeter.is_reduced(window, n) and \
                        coxeter.evaluate(window, n) == coxeter.longest(
                            tuple(letters), n)[0]:
                    zamolodchikov.add((p, w[:p], w[p + 6:], tuple(letters)))

    return {
        "disjoint_square": len(squares),
        "distant_hexagon": len(hexagons),
        "distant_octagon": len(octagons),
        "zamolodchikov": len(zamolodchikov),
    }
