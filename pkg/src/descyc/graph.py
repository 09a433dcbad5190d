"""Full enumeration and component analysis of the Schubert-problem graph.

Vertices are length-sum triples packed into a single integer,
(rank(u) * n! + rank(v)) * n! + rank(w) with lexicographic permutation ranks,
kept in one sorted array.  Triangles are generated from base triples (length
sum one short) and their all-ascending columns, so each triangle is produced
exactly once; connectivity is delegated to scipy's compressed-sparse
connected-components routine over the dense vertex positions.

Degree 6 is the supported maximum: ~8.9M vertices fit comfortably in memory
as flat arrays, while degree 7 is roughly 343 times bigger and out of budget.
"""

from __future__ import annotations

import json
import signal
import threading
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from descyc.perm import all_perms, length
from descyc.problems import SchubertProblem, easy_problem
from descyc.schubert import symmetric_number

MIN_DEGREE = 2
MAX_DEGREE = 6


class UnsupportedDegreeError(ValueError):
    pass


class OracleMismatchError(AssertionError):
    """A computed intersection number contradicts a structural claim."""


def _check_degree(n: int) -> None:
    if not MIN_DEGREE <= n <= MAX_DEGREE:
        raise UnsupportedDegreeError(
            f"degree {n} unsupported: the graph is built for {MIN_DEGREE} <= n <= "
            f"{MAX_DEGREE} (degree 7 is ~343x larger and out of budget)"
        )


def poincare_vertex_count(n: int) -> int:
    """Coefficient of q^(n(n-1)/2) in the cube of the q-factorial.

    An independent cross-check for the enumeration: the q-factorial cube
    counts length-sum triples degree by degree.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    fact = [1]
    for i in range(1, n + 1):
        fact = [sum(fact[k - j] for j in range(i) if 0 <= k - j < len(fact))
                for k in range(len(fact) + i - 1)]
    out = [0] * (3 * len(fact) - 2)
    for a, x in enumerate(fact):
        for b, y in enumerate(fact):
            for c, z in enumerate(fact):
                out[a + b + c] += x * y * z
    return out[n * (n - 1) // 2]


@dataclass(frozen=True)
class _Tables:
    n: int
    fact: int
    lengths: np.ndarray          # int16 per rank
    asc: np.ndarray              # bool, shape (n-1, n!): ascends at column
    mult: np.ndarray             # int32, shape (n-1, n!): rank after swap
    ranks_by_length: tuple[np.ndarray, ...]
    single_descent_pos: np.ndarray  # int8 per rank; 0 unless exactly one descent
    grassmannian: np.ndarray     # bool per rank: at most one descent


@lru_cache(maxsize=None)
def _tables(n: int) -> _Tables:
    perms = all_perms(n)
    fact = len(perms)
    index = {p: r for r, p in enumerate(perms)}
    lengths = np.array([length(p) for p in perms], dtype=np.int16)
    asc = np.zeros((n - 1, fact), dtype=bool)
    mult = np.zeros((n - 1, fact), dtype=np.int32)
    sd_pos = np.zeros(fact, dtype=np.int8)
    grass = np.zeros(fact, dtype=bool)
    for r, p in enumerate(perms):
        descents = [i for i in range(1, n) if p[i - 1] > p[i]]
        grass[r] = len(descents) <= 1
        if len(descents) == 1:
            sd_pos[r] = descents[0]
        for i in range(1, n):
            asc[i - 1, r] = p[i - 1] < p[i]
            word = list(p)
            word[i - 1], word[i] = word[i], word[i - 1]
            mult[i - 1, r] = index[tuple(word)]
    max_len = n * (n - 1) // 2
    by_len = tuple(
        np.nonzero(lengths == l)[0].astype(np.int64) for l in range(max_len + 1)
    )
    return _Tables(n, fact, lengths, asc, mult, by_len, sd_pos, grass)


def pack_problem(p: SchubertProblem) -> int:
    t = _tables(p.n)
    perms = all_perms(p.n)
    idx = {q: r for r, q in enumerate(perms)}
    return (idx[p.u] * t.fact + idx[p.v]) * t.fact + idx[p.w]


def unpack_id(vid: int, n: int) -> SchubertProblem:
    fact = _tables(n).fact
    perms = all_perms(n)
    uv, rw = divmod(int(vid), fact)
    ru, rv = divmod(uv, fact)
    return SchubertProblem(perms[ru], perms[rv], perms[rw])


def _length_blocks(n: int, total: int):
    """All (a, b, c) length triples with a + b + c == total, in sorted order."""
    max_len = n * (n - 1) // 2
    for a in range(min(total, max_len) + 1):
        for b in range(min(total - a, max_len) + 1):
            c = total - a - b
            if 0 <= c <= max_len:
                yield a, b, c


@dataclass
class _VertexData:
    ids: np.ndarray          # sorted int64 packed ids
    trivial: np.ndarray      # bool, aligned with ids
    gproblem: np.ndarray     # bool: first two args single-descent, same place
    gperm: np.ndarray        # bool: a <=1-descent permutation in slot 1 or 2


@lru_cache(maxsize=2)
def _vertex_data(n: int) -> _VertexData:
    _check_degree(n)
    t = _tables(n)
    F = t.fact
    goal = n * (n - 1) // 2
    id_chunks, triv_chunks, gp_chunks, gq_chunks = [], [], [], []
    for a, b, c in _length_blocks(n, goal):
        ra, rb, rc = t.ranks_by_length[a], t.ranks_by_length[b], t.ranks_by_length[c]
        if not (len(ra) and len(rb) and len(rc)):
            continue
        U = ra[:, None, None]
        V = rb[None, :, None]
        W = rc[None, None, :]
        ids = ((U * F + V) * F + W).ravel()
        shape = (len(ra), len(rb), len(rc))
        triv = np.zeros(shape, dtype=bool)
        for col in range(n - 1):
            av = t.asc[col]
            triv |= av[ra][:, None, None] & av[rb][None, :, None] & av[rc][None, None, :]
        gp2 = (t.single_descent_pos[ra][:, None] > 0) & (
            t.single_descent_pos[ra][:, None] == t.single_descent_pos[rb][None, :]
        )
        gq2 = t.grassmannian[ra][:, None] | t.grassmannian[rb][None, :]
        id_chunks.append(ids)
        triv_chunks.append(triv.ravel())
        gp_chunks.append(np.broadcast_to(gp2[:, :, None], shape).ravel())
        gq_chunks.append(np.broadcast_to(gq2[:, :, None], shape).ravel())
    ids = np.concatenate(id_chunks)
    order = np.argsort(ids)
    return _VertexData(
        ids=ids[order],
        trivial=np.concatenate(triv_chunks)[order],
        gproblem=np.concatenate(gp_chunks)[order],
        gperm=np.concatenate(gq_chunks)[order],
    )


def vertex_count(n: int) -> int:
    """Number of graph vertices at degree n, from the actual enumeration."""
    return int(len(_vertex_data(n).ids))


def iter_vertices(n: int):
    """Stream every vertex exactly once, in packed-id (lexicographic) order."""
    _check_degree(n)
    for vid in _vertex_data(n).ids:
        yield unpack_id(vid, n)


@dataclass
class ComponentReport:
    """Connected-component analysis of the degree-n problem graph."""

    n: int
    ids: np.ndarray
    labels: np.ndarray
    trivial: np.ndarray
    num_components: int
    sizes: np.ndarray
    comp_has_trivial: np.ndarray
    comp_has_gproblem: np.ndarray
    comp_has_gperm: np.ndarray
    first_member: np.ndarray        # index into ids of the smallest member
    easy_label: int
    triangle_count: int
    values: dict[int, "int | str"] = dc_field(default_factory=dict)
    trivial_sample_values: dict[int, int] = dc_field(default_factory=dict)

    @property
    def vertex_count(self) -> int:
        return int(len(self.ids))

    @property
    def dc_trivial_vertex_count(self) -> int:
        return int(self.trivial.sum())

    def dc_trivial_free_labels(self) -> np.ndarray:
        return np.nonzero(~self.comp_has_trivial)[0]

    def label_of(self, p: SchubertProblem) -> int:
        pos = int(np.searchsorted(self.ids, pack_problem(p)))
        if pos >= len(self.ids) or self.ids[pos] != pack_problem(p):
            raise KeyError(f"{p} is not a vertex of the degree-{self.n} graph")
        return int(self.labels[pos])

    def smallest_member(self, label: int) -> SchubertProblem:
        return unpack_id(self.ids[self.first_member[label]], self.n)

    def members(self, label: int, limit: int | None = None):
        idx = np.nonzero(self.labels == label)[0]
        if limit is not None:
            idx = idx[:limit]
        return [unpack_id(self.ids[i], self.n) for i in idx]

    def to_json_obj(self) -> dict:
        free = sorted(
            self.dc_trivial_free_labels(),
            key=lambda l: (-int(self.sizes[l]), int(self.first_member[l])),
        )
        comps = []
        for l in free:
            comps.append({
                "size": int(self.sizes[l]),
                "easy": bool(l == self.easy_label),
                "has_trivial": bool(self.comp_has_trivial[l]),
                "singleton": bool(self.sizes[l] == 1),
                "grassmannian_problem": bool(self.comp_has_gproblem[l]),
                "grassmannian_permutation": bool(self.comp_has_gperm[l]),
                "value": self.values.get(int(l)),
                "sample": self.smallest_member(int(l)).to_obj(),
            })
        free_mask = ~self.comp_has_trivial
        return {
            "n": self.n,
            "vertices": self.vertex_count,
            "dc_trivial": self.dc_trivial_vertex_count,
            "components": comps,
            "aggregates": {
                "component_count": self.num_components,
                "dc_trivial_free_components": int(free_mask.sum()),
                "dc_trivial_free_vertices": int(self.sizes[free_mask].sum()),
                "easy_component_size": int(self.sizes[self.easy_label]),
                "dc_trivial_free_singletons": int(
                    ((self.sizes == 1) & free_mask).sum()
                ),
                "triangles": self.triangle_count,
            },
        }


def build_components(n: int) -> ComponentReport:
    """Enumerate the graph and label its connected components.

    Triangles come from base triples: for every length-sum-minus-one triple
    and every column where all three arguments ascend, the three completions
    are vertices with equal intersection number; the first is unioned with the
    second and the second with the third.
    """
    _check_degree(n)
    t = _tables(n)
    F = t.fact
    data = _vertex_data(n)
    ids = data.ids
    nv = len(ids)
    goal = n * (n - 1) // 2
    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []
    triangles = 0
    for a, b, c in _length_blocks(n, goal - 1):
        ra, rb, rc = t.ranks_by_length[a], t.ranks_by_length[b], t.ranks_by_length[c]
        if not (len(ra) and len(rb) and len(rc)):
            continue
        for col in range(n - 1):
            av = t.asc[col]
            sa, sb, sc = ra[av[ra]], rb[av[rb]], rc[av[rc]]
            if not (len(sa) and len(sb) and len(sc)):
                continue
            ma, mb, mc = t.mult[col][sa], t.mult[col][sb], t.mult[col][sc]
            U, V, W = sa[:, None, None], sb[None, :, None], sc[None, None, :]
            e1 = ((ma[:, None, None] * F + V) * F + W).ravel()
            e2 = ((U * F + mb[None, :, None]) * F + W).ravel()
            e3 = ((U * F + V) * F + mc[None, None, :]).ravel()
            triangles += len(e1)
            for x, y in ((e1, e2), (e2, e3)):
                px = np.searchsorted(ids, x)
                py = np.searchsorted(ids, y)
                if not (np.all(ids[px] == x) and np.all(ids[py] == y)):
                    raise AssertionError("triangle completion is not a vertex")
                rows.append(px.astype(np.int32))
                cols.append(py.astype(np.int32))
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
    else:
        r = c = np.zeros(0, dtype=np.int32)
    graph = coo_matrix(
        (np.ones(len(r), dtype=np.int8), (r, c)), shape=(nv, nv)
    )
    num, labels = connected_components(graph, directed=False)
    sizes = np.bincount(labels, minlength=num).astype(np.int64)
    comp_triv = np.zeros(num, dtype=bool)
    comp_triv[labels[data.trivial]] = True
    comp_gp = np.zeros(num, dtype=bool)
    comp_gp[labels[data.gproblem]] = True
    comp_gq = np.zeros(num, dtype=bool)
    comp_gq[labels[data.gperm]] = True
    _, first = np.unique(labels, return_index=True)
    easy_id = pack_problem(easy_problem(n))
    easy_pos = int(np.searchsorted(ids, easy_id))
    return ComponentReport(
        n=n,
        ids=ids,
        labels=labels.astype(np.int32),
        trivial=data.trivial,
        num_components=int(num),
        sizes=sizes,
        comp_has_trivial=comp_triv,
        comp_has_gproblem=comp_gp,
        comp_has_gperm=comp_gq,
        first_member=first,
        easy_label=int(labels[easy_pos]),
        triangle_count=int(triangles),
    )


class _Timeout:
    """SIGALRM-based wall-clock guard; a no-op off the main thread."""

    def __init__(self, seconds: float | None):
        self.seconds = seconds
        self.armed = False

    def __enter__(self):
        if self.seconds and threading.current_thread() is threading.main_thread():
            def _handler(signum, frame):
                raise TimeoutError
            self._old = signal.signal(signal.SIGALRM, _handler)
            signal.setitimer(signal.ITIMER_REAL, self.seconds)
            self.armed = True
        return self

    def __exit__(self, *exc):
        if self.armed:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, self._old)
        return False


def classify_component_values(
    report: ComponentReport,
    trivial_samples: int = 5,
    seed: int = 0,
    timeout_s: float | None = 120.0,
) -> ComponentReport:
    """Annotate every dc-trivial-free component with its intersection number.

    The oracle runs on the smallest-index member of each component.  A few
    dc-trivial-containing components are sampled as well and must come out
    zero; a nonzero there contradicts the move system and raises.  Components
    whose oracle call exceeds the timeout are marked "unknown", never guessed.
    """
    for label in report.dc_trivial_free_labels():
        rep = report.smallest_member(int(label))
        try:
            with _Timeout(timeout_s):
                value = symmetric_number(*rep.args)
        except TimeoutError:
            report.values[int(label)] = "unknown"
            continue
        if value < 0:
            raise OracleMismatchError(f"negative intersection number at {rep}")
        report.values[int(label)] = int(value)
    trivial_labels = np.nonzero(report.comp_has_trivial)[0]
    rng = np.random.default_rng(seed)
    take = min(trivial_samples, len(trivial_labels))
    picks = rng.choice(trivial_labels, size=take, replace=False) if take else []
    for label in picks:
        rep = report.smallest_member(int(label))
        value = symmetric_number(*rep.args)
        if value != 0:
            raise OracleMismatchError(
                f"component containing an all-ascending column has value {value} at {rep}"
            )
        report.trivial_sample_values[int(label)] = int(value)
    return report


@dataclass(frozen=True)
class GrassmannianCensus:
    """Counts of dc-trivial-free components seen by the Grassmannian lens.

    The headline counts exclude the easy component: the interesting question
    is which of the *other* components a Grassmannian-style rule could reach.
    """

    problem_components_excl_easy: int
    permutation_components_excl_easy: int
    easy_has_problem: bool
    easy_has_permutation: bool


def grassmannian_census(report: ComponentReport) -> GrassmannianCensus:
    free = report.dc_trivial_free_labels()
    other = free[free != report.easy_label]
    return GrassmannianCensus(
        problem_components_excl_easy=int(report.comp_has_gproblem[other].sum()),
        permutation_components_excl_easy=int(report.comp_has_gperm[other].sum()),
        easy_has_problem=bool(report.comp_has_gproblem[report.easy_label]),
        easy_has_permutation=bool(report.comp_has_gperm[report.easy_label]),
    )


def save_report(report: ComponentReport, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(report.to_json_obj(), fh, indent=2)
        fh.write("\n")


def save_labels(report: ComponentReport, path: str) -> None:
    """Binary dump: little-endian 32-bit labels aligned with the sorted ids."""
    with open(path, "wb") as fh:
        fh.write(report.labels.astype("<i4").tobytes())
