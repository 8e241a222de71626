"""Tensor linking groups: edge-indexed character systems and their kernels.

A tensor assigns to every incidence-graph edge (P -> L) a character on the
line meridians with values in Z/n.  The defining constraints are linear:
each character kills the all-meridians relation, characters around any
vertex sum to zero, a character vanishes on the lines through its own point
(condition I), and it sums to zero over every singular point of its line
(condition II).  The tensor linking group is the kernel of that system.

Kernels are computed by sparse substitution: over a prime modulus this is
ordinary Gauss-Jordan; over Z or a composite modulus, unit pivots are
eliminated the same way and the small residual system goes through a
diagonalization with tracked column operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .combinatorics import Combinatorics
from .errors import ArrlinkError

Edge = tuple[tuple[int, ...], int]


def edges_of(comb: Combinatorics) -> list[Edge]:
    """Incidence-graph edges in lexicographic (support, line) order."""
    return [(s, line) for s in comb.supports for line in s]


def edge_key(edge: Edge) -> str:
    support, line = edge
    return "P{" + ",".join(map(str, support)) + "}->L" + str(line)


def parse_edge_key(key: str) -> Edge:
    head, _, tail = key.partition("->")
    if not head.startswith("P{") or not head.endswith("}") or not tail.startswith("L"):
        raise ArrlinkError(f"bad edge key {key!r}")
    support = tuple(int(x) for x in head[2:-1].split(","))
    return support, int(tail[1:])


class Tensor:
    """Per-edge characters over Z/n, indexed by the edges of a combinatorics."""

    __slots__ = ("comb", "modulus", "values")

    def __init__(self, comb: Combinatorics, modulus: int, values: dict):
        self.comb = comb
        self.modulus = modulus
        vals = {}
        for edge in edges_of(comb):
            vec = values.get(edge)
            if vec is None:
                raise ArrlinkError(f"missing edge {edge_key(edge)}")
            if len(vec) != comb.n:
                raise ArrlinkError(f"character length {len(vec)} != {comb.n}")
            vals[edge] = tuple(v % modulus for v in vec)
        self.values = vals

    def __getitem__(self, edge: Edge) -> tuple[int, ...]:
        return self.values[edge]

    def scale(self, s: int) -> "Tensor":
        return Tensor(
            self.comb,
            self.modulus,
            {e: tuple(s * v for v in vec) for e, vec in self.values.items()},
        )

    def is_zero(self) -> bool:
        return all(all(v == 0 for v in vec) for vec in self.values.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (
            self.comb == other.comb
            and self.modulus == other.modulus
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash(
            (self.comb, self.modulus, tuple(sorted(self.values.items())))
        )

    def serialize(self) -> dict:
        return {edge_key(e): list(vec) for e, vec in sorted(self.values.items())}

    @classmethod
    def deserialize(cls, comb: Combinatorics, modulus: int, data: dict) -> "Tensor":
        values = {parse_edge_key(k): tuple(v) for k, v in data.items()}
        return cls(comb, modulus, values)

    def __repr__(self) -> str:
        nz = sum(1 for v in self.values.values() if any(v))
        return f"Tensor(mod {self.modulus}, {nz} nonzero characters)"


@dataclass(frozen=True)
class ModMatrix:
    """Sparse constraint rows over Z (reduced mod `modulus` on use; 0 = Z)."""

    rows: tuple
    labels: tuple
    ncols: int
    modulus: int = 0
    comb: Combinatorics | None = None


def matrix_from_rows(rows, ncols: int | None = None, modulus: int = 0) -> ModMatrix:
    """Wrap dense integer rows (lists) as a ModMatrix."""
    if ncols is None:
        ncols = max((len(r) for r in rows), default=0)
    sparse = tuple({j: v for j, v in enumerate(r) if v} for r in rows)
    labels = tuple(("row", i) for i in range(len(rows)))
    return ModMatrix(sparse, labels, ncols, modulus)


def tlg_matrix(comb: Combinatorics, n: int) -> ModMatrix:
    """The full constraint system; columns indexed edge-major, line-minor.

    The rows are integer forms, so the same matrix serves any modulus; n is
    recorded for the coefficient ring (0 means work over the integers).
    """
    if n != 0 and n < 2:
        raise ArrlinkError("modulus must be 0 (integers) or at least 2")
    edges = edges_of(comb)
    eidx = {e: i for i, e in enumerate(edges)}
    nlines = comb.n

    def col(edge: Edge, line: int) -> int:
        return eidx[edge] * nlines + (line - 1)

    rows: list[dict[int, int]] = []
    labels: list[tuple] = []
    for e in edges:
        rows.append({col(e, k): 1 for k in range(1, nlines + 1)})
        labels.append(("sum", e))
    for s in comb.supports:
        for k in range(1, nlines + 1):
            rows.append({col((s, line), k): -1 for line in s})
            labels.append(("point", s, k))
    for line in range(1, nlines + 1):
        incident = [s for s in comb.supports if line in s]
        for k in range(1, nlines + 1):
            rows.append({col((s, line), k): 1 for s in incident})
            labels.append(("line", line, k))
    for e in edges:
        support, _ = e
        for lp in support:
            rows.append({col(e, lp): 1})
            labels.append(("condI", e, lp))
    for e in edges:
        _, line = e
        for s2 in comb.supports:
            if line in s2:
                rows.append({col(e, lp): 1 for lp in s2})
                labels.append(("condII", e, s2))
    return ModMatrix(tuple(rows), tuple(labels), len(edges) * nlines, n, comb)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _substitute(row: dict[int, int], sub: dict[int, dict[int, int]], p: int = 0):
    """Rewrite pivot variables in a row through the solved forms.

    p = 0 works over the integers; otherwise coefficients stay reduced mod p.
    """
    out: dict[int, int] = {}
    for c, a in row.items():
        if c in sub:
            for f, v in sub[c].items():
                w = out.get(f, 0) + a * v
                if p:
                    w %= p
                if w:
                    out[f] = w
                else:
                    out.pop(f, None)
        else:
            w = out.get(c, 0) + a
            if p:
                w %= p
            if w:
                out[c] = w
            else:
                out.pop(c, None)
    return out


def _insert_pivot(c, solved, sub, users, p: int = 0):
    """Record x_c = sum solved[f] * x_f and rewrite c out of older pivots."""
    for d in users.pop(c, set()):
        a = sub[d].pop(c)
        for f, v in solved.items():
            w = sub[d].get(f, 0) + a * v
            if p:
                w %= p
            if w:
                sub[d][f] = w
                users.setdefault(f, set()).add(d)
            else:
                del sub[d][f]
                users[f].discard(d)
    sub[c] = dict(solved)
    for f in solved:
        users.setdefault(f, set()).add(c)


def kernel_mod(matrix: ModMatrix, n: int) -> list[tuple[int, ...]]:
    """Generators of the right kernel over Z/n (n = 0 means over Z).

    For prime n this is a basis.  For composite n the result generates the
    solution group (orders may vary); every returned vector satisfies all
    the rows mod n.
    """
    if n != 0 and n < 2:
        raise ArrlinkError("modulus must be 0 (integers) or at least 2")
    if _is_prime(n):
        return _kernel_prime(matrix, n)
    return _kernel_unit_pivot(matrix, n)


def _kernel_prime(matrix: ModMatrix, p: int) -> list[tuple[int, ...]]:
    sub: dict[int, dict[int, int]] = {}
    users: dict[int, set] = {}
    for row in matrix.rows:
        r = _substitute(row, sub, p)
        if not r:
            continue
        c = min(r)
        a_inv = pow(r.pop(c), -1, p)
        solved = {f: w for f, v in r.items() if (w := (-a_inv * v) % p)}
        _insert_pivot(c, solved, sub, users, p)
    free = [c for c in range(matrix.ncols) if c not in sub]
    basis = []
    for f in free:
        vec = [0] * matrix.ncols
        vec[f] = 1
        for c, solved in sub.items():
            v = solved.get(f)
            if v:
                vec[c] = v % p
        basis.append(tuple(vec))
    return basis


def _unit_pivot_reduce(matrix: ModMatrix):
    """Eliminate variables with +-1 pivots over Z; return (sub, residual).

    Row operations only, so the kernel is unchanged.  The residual rows
    involve only unpivoted columns.
    """
    sub: dict[int, dict[int, int]] = {}
    users: dict[int, set] = {}
    residual: list[dict[int, int]] = []
    queue = [dict(row) for row in matrix.rows]
    while queue:
        deferred = []
        progressed = False
        for row in queue:
            r = _substitute(row, sub)
            if not r:
                continue
            unit_cols = [c for c, v in r.items() if v in (1, -1)]
            if not unit_cols:
                deferred.append(r)
                continue
            progressed = True
            c = min(unit_cols)
            a = r.pop(c)
            solved = {f: -v * a for f, v in r.items()}  # a in {1,-1} so 1/a = a
            _insert_pivot(c, solved, sub, users)
        if not progressed:
            residual = [r for r in (_substitute(d, sub) for d in deferred) if r]
            break
        queue = deferred
    else:
        residual = []
    return sub, residual


def smith_diagonalize(mat: list[list[int]]):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (diag, V) with U * mat * V diagonal; only the column operations
    V are tracked since kernels live on the column side.  diag[i] pairs with
    column i of V, so no divisibility normalization happens here; feed the
    diagonal to divisibility_chain for reporting.
    """
    m = [list(row) for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    V = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def col_op(j, k, q):  # col_j -= q * col_k
        for i in range(rows):
            m[i][j] -= q * m[i][k]
        for i in range(cols):
            V[i][j] -= q * V[i][k]

    def col_swap(j, k):
        for i in range(rows):
            m[i][j], m[i][k] = m[i][k], m[i][j]
        for i in range(cols):
            V[i][j], V[i][k] = V[i][k], V[i][j]

    k = 0
    while k < rows and k < cols:
        # find smallest nonzero entry in the remaining block
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        m[k], m[i0] = m[i0], m[k]
        col_swap(k, j0)
        while True:
            done = True
            for i in range(k + 1, rows):
                if m[i][k]:
                    q = m[i][k] // m[k][k]
                    for j in range(k, cols):
                        m[i][j] -= q * m[k][j]
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        done = False
            for j in range(k + 1, cols):
                if m[k][j]:
                    q = m[k][j] // m[k][k]
                    col_op(j, k, q)
                    if m[k][j]:
                        col_swap(k, j)
                        done = False
            if done:
                break
        k += 1
    return [abs(m[i][i]) for i in range(k)], V


def divisibility_chain(diag: list[int]) -> list[int]:
    """Normalize nonzero diagonal entries so each divides the next."""
    chain = [abs(d) for d in diag if d]
    changed = True
    while changed:
        changed = False
        for i in range(len(chain) - 1):
            a, b = chain[i], chain[i + 1]
            if b % a != 0:
                g = gcd(a, b)
                chain[i], chain[i + 1] = g, a * b // g
                changed = True
    return chain


def _expand_through_sub(free_cols, free_vec, sub, ncols, reduce_mod=0):
    vec = [0] * ncols
    for f, v in zip(free_cols, free_vec):
        vec[f] = v
    for c, solved in sub.items():
        acc = 0
        for f, v in solved.items():
            fv = vec[f]
            if fv:
                acc += v * fv
        vec[c] = acc
    if reduce_mod:
        vec = [v % reduce_mod for v in vec]
    return tuple(vec)


def _snf_data(matrix: ModMatrix):
    """Unit-pivot reduction plus SNF of the residual block.

    Returns (sub, free, diag, V): solved pivot forms, the free columns in
    order, and the diagonalization of the residual system on them.
    """
    sub, residual = _unit_pivot_reduce(matrix)
    free = sorted(c for c in range(matrix.ncols) if c not in sub)
    fidx = {f: i for i, f in enumerate(free)}
    if residual:
        dense = [[0] * len(free) for _ in residual]
        for i, r in enumerate(residual):
            for c, v in r.items():
                dense[i][fidx[c]] = v
        diag, V = smith_diagonalize(dense)
    else:
        diag = []
        V = [[1 if i == j else 0 for j in range(len(free))] for i in range(len(free))]
    return sub, free, diag, V


def _kernel_unit_pivot(matrix: ModMatrix, n: int) -> list[tuple[int, ...]]:
    sub, free, diag, V = _snf_data(matrix)
    gens = []
    for i in range(len(free)):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            scale = 1
        else:
            scale = n // gcd(d, n)
            if scale == n:
                continue  # only the zero solution in this direction
        free_vec = [scale * V[r][i] for r in range(len(free))]
        vec = _expand_through_sub(free, free_vec, sub, matrix.ncols, reduce_mod=n)
        if any(vec):
            gens.append(vec)
    return gens


@dataclass
class IntegralKernel:
    """Integer kernel of a constraint system plus its invariant factors."""

    basis: list[tuple[int, ...]]
    invariant_factors: list[int]
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    def lifts(self, vector, modulus: int) -> bool:
        """Whether a mod-n kernel vector is the reduction of an integer one."""
        if not _is_prime(modulus):
            raise ArrlinkError("lift test implemented for prime moduli only")
        target = [v % modulus for v in vector]
        rows = [[b[j] % modulus for b in self.basis] for j in range(self.ncols)]
        # solve rows * x = target over F_p by elimination
        aug = [row + [t] for row, t in zip(rows, target)]
        cols = len(self.basis)
        pivot_row = 0
        for c in range(cols):
            sel = None
            for r in range(pivot_row, len(aug)):
                if aug[r][c] % modulus:
                    sel = r
                    break
            if sel is None:
                continue
            aug[pivot_row], aug[sel] = aug[sel], aug[pivot_row]
            inv = pow(aug[pivot_row][c], -1, modulus)
            aug[pivot_row] = [v * inv % modulus for v in aug[pivot_row]]
            for r in range(len(aug)):
                if r != pivot_row and aug[r][c] % modulus:
                    f = aug[r][c]
                    aug[r] = [
                        (v - f * w) % modulus for v, w in zip(aug[r], aug[pivot_row])
                    ]
            pivot_row += 1
        for r in range(pivot_row, len(aug)):
            if aug[r][-1] % modulus:
                return False
        return True


def tlg_integral(comb: Combinatorics) -> IntegralKernel:
    """Integer kernel of the constraint system, via unit pivots plus SNF."""
    matrix = tlg_matrix(comb, 0)
    sub, free, diag, V = _snf_data(matrix)
    basis = []
    for i in range(len(free)):
        d = diag[i] if i < len(diag) else 0
        if d != 0:
            continue
        free_vec = [V[r][i] for r in range(len(free))]
        vec = _expand_through_sub(free, free_vec, sub, matrix.ncols)
        basis.append(vec)
    factors = [1] * len(sub) + divisibility_chain(diag)
    return IntegralKernel(basis, factors, matrix.ncols)


def _vector_to_tensor(comb: Combinatorics, modulus: int, vec) -> Tensor:
    edges = edges_of(comb)
    n = comb.n
    values = {
        e: tuple(vec[i * n + k] for k in range(n)) for i, e in enumerate(edges)
    }
    return Tensor(comb, modulus, values)


def tensor_to_vector(tensor: Tensor) -> tuple[int, ...]:
    edges = edges_of(tensor.comb)
    out = []
    for e in edges:
        out.extend(tensor.values[e])
    return tuple(out)


def tlg_compute(comb: Combinatorics, modulus: int) -> list[Tensor]:
    """Generators of the tensor linking group over Z/modulus.

    The raw mod-n solution space of the constraint system splits into the
    reductions of integer solutions (which exist at every modulus and carry
    no arithmetic information about n) and the part coming from invariant
    factors of the system sharing a divisor with n.  The group reported
    here is the second part: generators are the SNF columns whose diagonal
    entry d satisfies d != 0 and gcd(d, n) > 1, scaled by n/gcd(d, n).
    Reductions of the integer kernel are available via tlg_integral.

    For a prime modulus each generator is normalized so its first nonzero
    coordinate (edge-major order) is 1.
    """
    if modulus < 2:
        raise ArrlinkError("modulus must be at least 2")
    matrix = tlg_matrix(comb, modulus)
    sub, free, diag, V = _snf_data(matrix)
    tensors = []
    for i, d in enumerate(diag):
        if d == 0:
            continue
        g = gcd(d, modulus)
        if g == 1:
            continue
        scale = modulus // g
        free_vec = [scale * V[r][i] for r in range(len(free))]
        vec = _expand_through_sub(free, free_vec, sub, matrix.ncols, reduce_mod=modulus)
        if not any(vec):
            continue
        if _is_prime(modulus):
            lead = next(v for v in vec if v)
            if lead != 1:
                inv = pow(lead, -1, modulus)
                vec = tuple(v * inv % modulus for v in vec)
        tensors.append(_vector_to_tensor(comb, modulus, vec))
    for t in tensors:
        violations = tensor_validate(comb, t)
        if violations:
            raise ArrlinkError(f"kernel vector fails validation: {violations[:3]}")
    return tensors


def tensor_validate(comb: Combinatorics, tensor: Tensor) -> list[tuple]:
    """All violated constraints, empty when the tensor is valid."""
    if tensor.comb != comb:
        raise ArrlinkError("tensor indexed by a different combinatorics")
    n = tensor.modulus
    out = []
    for e, vec in tensor.values.items():
        if sum(vec) % n:
            out.append(("sum", e))
    for s in comb.supports:
        total = [0] * comb.n
        for line in s:
            for k, v in enumerate(tensor.values[(s, line)]):
                total[k] += v
        if any(v % n for v in total):
            out.append(("point", s))
    for line in range(1, comb.n + 1):
        total = [0] * comb.n
        for s in comb.supports:
            if line in s:
                for k, v in enumerate(tensor.values[(s, line)]):
                    total[k] += v
        if any(v % n for v in total):
            out.append(("line", line))
    for e, vec in tensor.values.items():
        support, _ = e
        for lp in support:
            if vec[lp - 1] % n:
                out.append(("condI", e, lp))
    for e, vec in tensor.values.items():
        _, line = e
        for s2 in comb.supports:
            if line in s2 and sum(vec[lp - 1] for lp in s2) % n:
                out.append(("condII", e, s2))
    return out
