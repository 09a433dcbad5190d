import itertools
import json

import numpy as np
import pytest

from descyc.graph import (
    GrassmannianCensus,
    UnsupportedDegreeError,
    build_components,
    classify_component_values,
    grassmannian_census,
    iter_vertices,
    pack_problem,
    poincare_vertex_count,
    save_labels,
    save_report,
    unpack_id,
    vertex_count,
)
from descyc.perm import all_perms, length
from descyc.problems import (
    SchubertProblem,
    apply_move,
    easy_problem,
    is_dc_trivial,
    legal_moves,
)


def test_poincare_counts():
    assert poincare_vertex_count(2) == 3
    assert poincare_vertex_count(3) == 35
    assert poincare_vertex_count(4) == 1115
    assert poincare_vertex_count(5) == 74199
    assert poincare_vertex_count(6) == 8881334
    assert poincare_vertex_count(1) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_vertex_count_matches_poincare(n):
    assert vertex_count(n) == poincare_vertex_count(n)


def test_unsupported_degrees():
    with pytest.raises(UnsupportedDegreeError):
        vertex_count(7)
    with pytest.raises(UnsupportedDegreeError):
        build_components(1)


def test_enumeration_small_degrees_exact():
    vs2 = list(iter_vertices(2))
    assert len(vs2) == 3
    assert {tuple(p.args) for p in vs2} == {
        (((2, 1)), (1, 2), (1, 2)),
        ((1, 2), (2, 1), (1, 2)),
        ((1, 2), (1, 2), (2, 1)),
    }
    brute = {
        t
        for t in itertools.product(all_perms(3), repeat=3)
        if sum(map(length, t)) == 3
    }
    assert {p.args for p in iter_vertices(3)} == brute


def test_pack_unpack_roundtrip():
    for p in iter_vertices(3):
        assert unpack_id(pack_problem(p), 3) == p


def test_components_structure_n3(components):
    r = components(3)
    assert r.vertex_count == 35
    assert r.dc_trivial_vertex_count == 14
    free = r.dc_trivial_free_labels()
    assert len(free) == 1
    assert int(r.sizes[free[0]]) == 21
    assert r.easy_label == free[0]
    assert int(r.sizes.sum()) == 35


def test_components_match_bruteforce_bfs(components):
    for n in (3, 4):
        r = components(n)
        seen: dict[tuple, int] = {}
        sizes = []
        for start in iter_vertices(n):
            if start.args in seen:
                continue
            cid = len(sizes)
            stack = [start]
            seen[start.args] = cid
            size = 0
            while stack:
                p = stack.pop()
                size += 1
                assert r.label_of(p) == r.label_of(start)
                for m in legal_moves(p):
                    q = apply_move(p, m)
                    if q.args not in seen:
                        seen[q.args] = cid
                        stack.append(q)
            sizes.append(size)
        assert len(sizes) == r.num_components
        assert sorted(sizes) == sorted(int(s) for s in r.sizes)


@pytest.mark.parametrize("n", [4, 5])
def test_every_component_trivial_or_easy_small_degrees(n, components):
    r = components(n)
    free = r.dc_trivial_free_labels()
    assert list(free) == [r.easy_label]


def test_component_argument_permutation_symmetry(components):
    # simultaneous argument shuffles map components onto components
    for n in (3, 4):
        r = components(n)
        for perm_idx in itertools.permutations((0, 1, 2)):
            mapping = {}
            for p in iter_vertices(n):
                args = p.args
                q = SchubertProblem(*(args[i] for i in perm_idx))
                src, dst = r.label_of(p), r.label_of(q)
                assert mapping.setdefault(src, dst) == dst


def test_classification_n3(components):
    r = classify_component_values(components(3), trivial_samples=4, seed=1)
    assert r.values[r.easy_label] == 1
    assert all(v == 0 for v in r.trivial_sample_values.values())


def test_grassmannian_census_n3(components):
    c = grassmannian_census(components(3))
    assert isinstance(c, GrassmannianCensus)
    assert c.easy_has_problem       # e.g. (213, 213, 132) sits in the 21-vertex component
    assert c.problem_components_excl_easy == 0


def test_dc_trivial_mask_agrees_with_predicate(components):
    r = components(4)
    for pos in range(0, r.vertex_count, 37):
        p = unpack_id(r.ids[pos], 4)
        assert bool(r.trivial[pos]) == is_dc_trivial(p)[0]


def test_easy_vertex_triangle_count(components):
    # (id, id, w_0) at n=4: six legal moves arranged in one triangle per column
    r = components(4)
    e = easy_problem(4)
    assert len(legal_moves(e)) == 6
    neighbors = {apply_move(e, m).args for m in legal_moves(e)}
    assert len(neighbors) == 6
    assert all(r.label_of(SchubertProblem(*t)) == r.easy_label for t in neighbors)


def test_report_and_labels_roundtrip(tmp_path, components):
    r = components(3)
    rpath = tmp_path / "report.json"
    lpath = tmp_path / "labels.bin"
    save_report(r, str(rpath))
    save_labels(r, str(lpath))
    obj = json.loads(rpath.read_text())
    assert obj["n"] == 3 and obj["vertices"] == 35 and obj["dc_trivial"] == 14
    assert len(obj["components"]) == 1
    comp = obj["components"][0]
    assert comp["size"] == 21 and comp["easy"] and not comp["has_trivial"]
    assert comp["grassmannian_problem"] and not comp["singleton"]
    assert set(comp["sample"]) == {"u", "v", "w"}
    raw = np.frombuffer(lpath.read_bytes(), dtype="<i4")
    assert np.array_equal(raw, r.labels)


def test_iter_vertices_sorted_and_valid():
    prev = -1
    for p in iter_vertices(3):
        vid = pack_problem(p)
        assert p.is_vertex
        assert vid > prev
        prev = vid
