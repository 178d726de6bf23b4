import pytest

from tautilt.algebra import Quiver, build_algebra
from tautilt.catalog import build_catalog
from tautilt.errors import CapExceededError
from tautilt.families import type_a_square
from tautilt.tilting import (complete_to_pair, enumerate_stau, g_vector_of_module,
                             g_vector_of_pair, hasse, is_support_tau_tilting, is_tau_rigid,
                             is_tau_tilting, is_tilting, tau_tilting_modules, tilting_modules)


def ref_of(cat, *dim_vectors):
    out = []
    for dv in dim_vectors:
        matches = [i for i, e in enumerate(cat.entries) if e.dims == dv]
        assert len(matches) == 1, f"ambiguous dim vector {dv}"
        out.append(matches[0])
    return tuple(sorted(out))


def test_regular_module_is_tau_rigid(cat_lambda3):
    ref = tuple(sorted(cat_lambda3.projective_index.values()))
    assert is_tau_rigid(cat_lambda3, ref)
    assert is_tau_tilting(cat_lambda3, ref)
    assert is_tilting(cat_lambda3, ref)


def test_incompatible_simples(cat_a2):
    ref = ref_of(cat_a2, (1, 0), (0, 1))
    assert not is_tau_rigid(cat_a2, ref)


def test_every_entry_of_linear_family_is_rigid():
    for n in (2, 3, 4, 5):
        cat = build_catalog(type_a_square(n))
        assert all(cat.self_rigid(i) for i in range(cat.size))


def test_zero_module_pair(cat_lambda3):
    assert is_support_tau_tilting(cat_lambda3, ())
    pair = complete_to_pair(cat_lambda3, ())
    assert pair.proj_part == ("1", "2", "3")
    assert pair.g == (-1, -1, -1)


def test_example_tau_tilting_membership(cat_example_b):
    cat = cat_example_b
    # P1 + new simple + the two fork simples
    ref = ref_of(cat, (1, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert is_tau_tilting(cat, ref)
    assert not is_tilting(cat, ref)


def test_example_base_tau_tilt_set(example_base):
    # The five full-support modules over the hereditary fork, frozen by
    # dimension-vector multisets (vertex order 2, 3, 4).  Oracle: the AR
    # meshes give tau([2/3]) = S4, tau([2/4]) = S3 and tau(S2) = P2, so the
    # compatibility graph forbids exactly {S2, P2}, {S3, [2/4]}, {S4, [2/3]}
    # and the simple pairs {S_i, S2}; its size-3 cliques are the set below.
    cat = build_catalog(example_base)
    pairs = enumerate_stau(cat)
    got = {tuple(sorted(cat.entries[i].dims for i in m)) for m in tau_tilting_modules(pairs)}
    expected = {
        tuple(sorted([(0, 1, 0), (0, 0, 1), (1, 1, 1)])),  # S3 + S4 + P2
        tuple(sorted([(0, 0, 1), (1, 0, 1), (1, 1, 1)])),  # S4 + [2/4] + P2
        tuple(sorted([(0, 1, 0), (1, 1, 0), (1, 1, 1)])),  # S3 + [2/3] + P2
        tuple(sorted([(1, 1, 0), (1, 0, 1), (1, 1, 1)])),  # [2/3] + [2/4] + P2
        tuple(sorted([(1, 0, 0), (1, 1, 0), (1, 0, 1)])),  # S2 + [2/3] + [2/4]
    }
    assert got == expected
    # hereditary: the same five modules are the tilting modules
    assert len(tilting_modules(cat, pairs)) == 5
    got_tilt = {tuple(sorted(cat.entries[i].dims for i in m))
                for m in tilting_modules(cat, pairs)}
    assert got_tilt == expected


@pytest.mark.parametrize("n,expected", [(1, 2), (2, 5), (3, 12), (4, 29),
                                        (5, 70), (6, 169), (7, 408), (8, 985)])
def test_linear_family_pair_counts(n, expected):
    cat = build_catalog(type_a_square(n))
    assert len(enumerate_stau(cat)) == expected


def test_single_vertex_enumeration(single_vertex):
    cat = build_catalog(single_vertex)
    pairs = enumerate_stau(cat)
    assert len(pairs) == 2


def test_tilting_counts_linear_family():
    for n in (2, 3, 4, 5):
        cat = build_catalog(type_a_square(n))
        pairs = enumerate_stau(cat)
        assert len(tilting_modules(cat, pairs)) == 2


def test_enumeration_cap(cat_lambda3):
    with pytest.raises(CapExceededError):
        enumerate_stau(cat_lambda3, cap=3)


def test_g_vector_examples(cat_a2, a2):
    s2 = cat_a2.simple_index["2"]
    assert g_vector_of_module(cat_a2, (s2,)) == (-1, 1)
    assert g_vector_of_pair(cat_a2, (s2,), ("1",)) == (-2, 1)
    regular = tuple(sorted(cat_a2.projective_index.values()))
    assert g_vector_of_pair(cat_a2, regular, ()) == (1, 1)


def test_g_vectors_injective_and_pairs_sorted(cat_example_b):
    pairs = enumerate_stau(cat_example_b)
    gs = [p.g for p in pairs]
    assert len(set(gs)) == len(gs)
    assert gs == sorted(gs)


def test_tau_tilting_subset_matches_predicate(cat_d4):
    pairs = enumerate_stau(cat_d4)
    via_pairs = set(tau_tilting_modules(pairs))
    via_predicate = {p.modules for p in pairs if is_tau_tilting(cat_d4, p.modules)
                     and not p.proj_part}
    assert via_pairs == via_predicate
    for p in pairs:
        assert (not p.proj_part) == is_tau_tilting(cat_d4, p.modules)


def test_maximality_of_tau_tilting_modules(cat_example_b):
    pairs = enumerate_stau(cat_example_b)
    for m in tau_tilting_modules(pairs):
        others = set(range(cat_example_b.size)) - set(m)
        for extra in others:
            assert not is_tau_rigid(cat_example_b, tuple(sorted(m + (extra,))))


def freeze_pair(cat, pair):
    mods = tuple(sorted(cat.entries[i].dims for i in pair.modules))
    return (mods, tuple(sorted(pair.proj_part)))


def test_hasse_of_a2_matches_figure(cat_a2):
    h = hasse(cat_a2)
    assert len(h.pairs) == 5 and len(h.arrows) == 5
    key = {freeze_pair(cat_a2, p): i for i, p in enumerate(h.pairs)}
    P1, P2, S1, S2 = (1, 0), (1, 1), (1, 0), (0, 1)
    regular = key[((P1, P2) if (P1, P2) == tuple(sorted([P1, P2])) else (P2, P1), ())]
    p2s2 = key[(tuple(sorted([P2, S2])), ())]
    s1 = key[(((1, 0),), ("2",))]
    s2 = key[(((0, 1),), ("1",))]
    zero = key[((), ("1", "2"))]
    expected = {(regular, s1), (regular, p2s2), (p2s2, s2), (s1, zero), (s2, zero)}
    assert set(h.arrows) == expected


def test_hasse_of_lambda3(cat_lambda3):
    h = hasse(cat_lambda3)
    assert len(h.pairs) == 12


def test_hasse_single_vertex(single_vertex):
    cat = build_catalog(single_vertex)
    h = hasse(cat)
    assert len(h.pairs) == 2 and len(h.arrows) == 1


def test_hasse_regularity_and_boundary(cat_example_b, example_b):
    h = hasse(cat_example_b)
    n = example_b.n_vertices
    degree = {i: 0 for i in range(len(h.pairs))}
    indeg = {i: 0 for i in range(len(h.pairs))}
    outdeg = {i: 0 for i in range(len(h.pairs))}
    for a, b in h.arrows:
        degree[a] += 1
        degree[b] += 1
        outdeg[a] += 1
        indeg[b] += 1
    assert all(d == n for d in degree.values())
    sources = [i for i in range(len(h.pairs)) if indeg[i] == 0]
    sinks = [i for i in range(len(h.pairs)) if outdeg[i] == 0]
    assert len(sources) == 1 and len(sinks) == 1
    assert h.pairs[sources[0]].proj_part == ()
    assert h.pairs[sinks[0]].modules == ()


def test_hereditary_linear_counts_are_catalan():
    # orientation-independent classical counts: C(n+1) pairs, C(n) tilting
    from math import comb

    from tautilt.algebra import Arrow, Quiver

    def catalan(k):
        return comb(2 * k, k) // (k + 1)

    for n in (2, 3, 4):
        alg = build_algebra(
            Quiver([str(i) for i in range(1, n + 1)],
                   [Arrow(f"a{k}", str(k + 1), str(k)) for k in range(1, n)]))
        cat = build_catalog(alg)
        assert cat.size == n * (n + 1) // 2
        pairs = enumerate_stau(cat)
        assert len(pairs) == catalan(n + 1)
        assert len(tau_tilting_modules(pairs)) == catalan(n)
        assert len(tilting_modules(cat, pairs)) == catalan(n)


def test_empty_algebra_enumeration():
    empty = build_algebra(Quiver([], []))
    cat = build_catalog(empty)
    pairs = enumerate_stau(cat)
    assert len(pairs) == 1
    assert pairs[0].modules == () and pairs[0].proj_part == ()
    h = hasse(cat, pairs)
    assert len(h.arrows) == 0
