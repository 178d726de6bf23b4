import json

import pytest

from tautilt.counting import REPORTED_D
from tautilt.errors import PreconditionError
from tautilt.families import type_a_square, type_d_square
from tautilt.verify import (ExtensionContext, recurrence_check, reports_to_json,
                            reproduce_tables, run_claims, select_doubled_subset,
                            verify_classification, verify_count_equations,
                            verify_hasse_gluing, verify_tilting_transfer)


@pytest.fixture(scope="module")
def fork_ctx(example_base):
    return ExtensionContext(example_base, "2")


@pytest.fixture(scope="module")
def single_ctx(single_vertex):
    return ExtensionContext(single_vertex, "1")


@pytest.fixture(scope="module")
def a2_ctx(a2):
    return ExtensionContext(a2, "2")


def test_context_construction(fork_ctx):
    assert fork_ctx.extended.n_vertices == 4
    assert fork_ctx.quotient.n_vertices == 2
    assert fork_ctx.doubled.n_vertices == 4
    assert fork_ctx.extended.quiver.is_source(fork_ctx.new_vertex)


def test_context_requires_source(lambda3):
    with pytest.raises(PreconditionError):
        ExtensionContext(lambda3, "2")


def test_classification_on_fork(fork_ctx):
    rep = verify_classification(fork_ctx)
    assert rep.status == "pass"
    assert rep.counts == {"tau_tilt_base": 5, "tau_tilt_quotient": 1,
                          "tau_tilt_extended": 6}


def test_classification_on_single_vertex(single_ctx):
    rep = verify_classification(single_ctx)
    assert rep.status == "pass"
    # the zero-vertex quotient contributes exactly the empty module
    assert rep.counts == {"tau_tilt_base": 1, "tau_tilt_quotient": 1,
                          "tau_tilt_extended": 2}


def test_classification_on_a2(a2_ctx):
    rep = verify_classification(a2_ctx)
    assert rep.status == "pass"
    assert rep.counts["tau_tilt_extended"] == 3


def test_count_equations_examples(fork_ctx, a2_ctx):
    rep = verify_count_equations(a2_ctx)
    assert rep.status == "pass"
    assert rep.counts["stau_extended"] == 12
    assert rep.counts["stau_base"] == 5
    assert rep.counts["stau_quotient"] == 2
    rep2 = verify_count_equations(fork_ctx)
    assert rep2.status == "pass"
    assert rep2.counts["stau_extended"] == 32 == 2 * 14 + 4


def family_algebra(kind, n):
    return type_a_square(n) if kind == "A2" else type_d_square(n)


def test_count_equations_on_families():
    for kind, ns in (("A2", (2, 3, 4)), ("D2", (5, 6))):
        for n in ns:
            ctx = ExtensionContext(family_algebra(kind, n), str(n))
            assert verify_count_equations(ctx).status == "pass"


def test_tilting_transfer(fork_ctx, a2_ctx):
    assert verify_tilting_transfer(fork_ctx).status == "pass"
    assert verify_tilting_transfer(a2_ctx).status == "pass"


def test_tilting_transfer_requires_non_sink(single_ctx):
    with pytest.raises(PreconditionError):
        verify_tilting_transfer(single_ctx)


def test_tilting_counts_along_families():
    # the linear family keeps two tilting modules, the fork family five
    for n in (3, 4, 5):
        ctx = ExtensionContext(type_a_square(n), str(n))
        rep = verify_tilting_transfer(ctx)
        assert rep.status == "pass" and rep.counts["tilt_extended"] == 2
    for n in (5, 6):
        ctx = ExtensionContext(type_d_square(n), str(n))
        rep = verify_tilting_transfer(ctx)
        assert rep.status == "pass" and rep.counts["tilt_extended"] == 5


def test_selected_subset_on_a2(a2_ctx):
    h = a2_ctx.enum("doubled").hasse()
    subset = select_doubled_subset(a2_ctx, h)
    assert len(subset) == 2
    cat = a2_ctx.enum("doubled").catalog
    s_iso = cat.simple_index[a2_ctx.isolated_vertex]
    picked = {h.pairs[i].modules for i in subset}
    # the isolated simple alone, and together with the old sink simple
    s1 = cat.simple_index["1"]
    assert picked == {(s_iso,), tuple(sorted((s1, s_iso)))}


def test_hasse_gluing_small(fork_ctx, single_ctx, a2_ctx):
    for ctx in (single_ctx, a2_ctx, fork_ctx):
        rep = verify_hasse_gluing(ctx)
        assert rep.status == "pass"
        assert rep.counts["glued"] == rep.counts["hasse_extended"]


def test_run_claims_skips_tilting_at_sink(single_ctx):
    reports = run_claims(single_ctx)
    by_claim = {r.claim: r for r in reports}
    assert by_claim["tilting-transfer"].status == "skipped"
    assert all(r.status == "pass" for r in reports if r.claim != "tilting-transfer")


def test_reports_serialize(fork_ctx):
    reports = run_claims(fork_ctx, claims=("count-equations",))
    doc = json.loads(reports_to_json(reports))
    assert doc[0]["claim"] == "count-equations"
    assert doc[0]["status"] == "pass"


def test_recurrences_linear():
    rep = recurrence_check("A2", 6)
    assert rep.status == "pass"
    assert rep.counts["A2_6_stau"] == 169


def test_recurrences_fork():
    rep = recurrence_check("D2", 7)
    assert rep.status == "pass"
    assert rep.counts["D2_5_tau"] == 11  # base case checked through its context


def test_recurrence_needs_room():
    with pytest.raises(PreconditionError):
        recurrence_check("A2", 2)


def test_reproduce_tables_small():
    result = reproduce_tables(4, 5)
    assert [r.tau_tilt for r in result.table_a.rows] == [1, 2, 3, 5]
    assert [r.stau for r in result.table_a.rows] == [2, 5, 12, 29]
    assert [r.tau_tilt for r in result.table_d.rows] == [6, 11]
    assert [r.stau for r in result.table_d.rows] == [32, 78]
    assert result.discrepancies == []
    assert result.hard_failures == 0


def test_reproduce_tables_flags_reported_misprint():
    result = reproduce_tables(3, 6)
    flagged = [d for d in result.discrepancies]
    assert len(flagged) == 1
    d = flagged[0]
    assert (d.family, d.n, d.row) == ("D2", 6, "stau")
    assert d.reported == REPORTED_D[6][1] == 118
    assert d.computed == 188
    assert d.corroborated
    assert result.hard_failures == 0
    assert "118" in result.render() and "188" in result.render()


def test_reproduce_tables_is_idempotent():
    assert reproduce_tables(3, 5).render() == reproduce_tables(3, 5).render()
