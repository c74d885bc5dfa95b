"""Tests for the invariant engine: identities, explicit isomorphisms, mutation sensitivity."""
import random

import pytest

from sl3graphs import (
    Box,
    CategoryId,
    Edge,
    Functor,
    NoKnownMapError,
    NotSemisimpleCategoryError,
    WindowTooSmallError,
    check_commute,
    check_iso_family,
    check_n1_n2_distinct,
    check_pf,
    check_strong_connectivity,
    check_theta_positivity,
    check_transpose,
    default_box,
    generate,
)
from sl3graphs.graphs import SEMISIMPLE, out_complete
from sl3graphs.verify import check_middle_iso, iso_map, middle_iso, middle_iso_inv

ALL_CATS = list(CategoryId)


def std_graphs(cat, n=22):
    box = default_box(cat, n)
    return generate(cat, Functor.F, box), generate(cat, Functor.G, box), box


class TestPf:
    @pytest.mark.parametrize("cat", ALL_CATS)
    def test_passes_everywhere(self, cat):
        gf, gg, _ = std_graphs(cat)
        assert check_pf(gf).passed
        assert check_pf(gg).passed

    def test_perturbed_graph_fails_with_source_counterexample(self):
        gf, _, _ = std_graphs(CategoryId.N1)
        victims = [i for i, e in enumerate(gf.edges) if e.src in out_complete(gf)]
        i = victims[len(victims) // 2]
        edges = list(gf.edges)
        edges[i] = edges[i]._replace(mult=edges[i].mult + 1)
        report = check_pf(gf.with_edges(edges))
        assert not report.passed
        assert gf.edges[i].src in report.counterexamples


class TestCommute:
    @pytest.mark.parametrize("cat", ALL_CATS)
    def test_passes(self, cat):
        _, _, box = std_graphs(cat)
        assert check_commute(cat, box).passed

    def test_perturbed_whittaker_fails(self):
        from sl3graphs import interior
        cat = CategoryId.WHITTAKER1
        box = default_box(cat, 22)
        gf = generate(cat, Functor.F, box)
        gg = generate(cat, Functor.G, box)
        inner = interior(gf, 2)  # mutation must sit where the path counts are checked
        pick = next(i for i, e in enumerate(gf.edges) if e.src in inner and e.src != e.dst)
        edges = list(gf.edges)
        edges[pick] = edges[pick]._replace(mult=2)
        bad = gf.with_edges(edges)
        assert not check_commute(cat, box, 2, bad, gg).passed

    def test_window_too_small(self):
        with pytest.raises(WindowTooSmallError):
            check_commute(CategoryId.REGULAR, Box(0, 1, 0, 1))


class TestTranspose:
    @pytest.mark.parametrize("cat", sorted(SEMISIMPLE, key=lambda c: c.value))
    def test_passes_for_double_arrow_free(self, cat):
        gf, gg, box = std_graphs(cat)
        assert check_transpose(cat, box, gf, gg).passed

    @pytest.mark.parametrize("cat", [c for c in ALL_CATS if c not in SEMISIMPLE])
    def test_rejected_for_doubled_arrow_families(self, cat):
        with pytest.raises(NotSemisimpleCategoryError):
            check_transpose(cat, default_box(cat, 20))

    def test_forced_n1_report_fails_factually(self):
        box = default_box(CategoryId.N1, 20)
        report = check_transpose(CategoryId.N1, box, force=True)
        assert not report.passed
        assert report.counterexamples


class TestConnectivity:
    @pytest.mark.parametrize("cat", ALL_CATS)
    def test_passes(self, cat):
        gf, _, _ = std_graphs(cat, 25)
        assert check_strong_connectivity(gf, margin=5).passed

    def test_severed_window_fails(self):
        gf, _, _ = std_graphs(CategoryId.REGULAR, 25)
        kept = [e for e in gf.edges if not (e.src[0] < 12 and e.dst[0] >= 12)]
        report = check_strong_connectivity(gf.with_edges(kept), margin=5)
        assert not report.passed

    def test_margin_floor(self):
        gf, _, _ = std_graphs(CategoryId.REGULAR)
        with pytest.raises(WindowTooSmallError):
            check_strong_connectivity(gf, margin=2)


class TestIsoFamily:
    PAIRS = [
        (CategoryId.M1, CategoryId.M3), (CategoryId.M3, CategoryId.M5),
        (CategoryId.M1, CategoryId.M5), (CategoryId.M2, CategoryId.M4),
        (CategoryId.M4, CategoryId.M6), (CategoryId.M2, CategoryId.M6),
    ]

    @pytest.mark.parametrize("left,right", PAIRS)
    def test_forward_and_backward(self, left, right):
        box = Box(-10, 10, -10, 10)
        assert check_iso_family(left, right, box).passed
        assert check_iso_family(right, left, box).passed

    def test_wall_maps_to_wall(self):
        psi = iso_map(CategoryId.M1, CategoryId.M3)
        for q in range(-8, 9):
            image = psi(0, q)
            assert image[1] == 0  # the p=0 wall lands on the q=0 wall

    def test_doubled_lines_correspond(self):
        psi = iso_map(CategoryId.M2, CategoryId.M4)
        for q in range(-8, 9):
            image = psi(-2, q)
            assert image[1] == -2  # the p=-2 doubled line lands on q=-2

    def test_maps_are_unimodular(self):
        for (left, right), psi in [((l, r), iso_map(l, r)) for l, r in self.PAIRS]:
            o = psi(0, 0)
            a = (psi(1, 0)[0] - o[0], psi(1, 0)[1] - o[1])
            b = (psi(0, 1)[0] - o[0], psi(0, 1)[1] - o[1])
            det = a[0] * b[1] - a[1] * b[0]
            assert o == (0, 0) and abs(det) == 1, (left, right)

    def test_cross_class_pairs_rejected(self):
        with pytest.raises(NoKnownMapError):
            check_iso_family(CategoryId.M1, CategoryId.M2, Box(-5, 5, -5, 5))
        with pytest.raises(NoKnownMapError):
            check_iso_family(CategoryId.N1, CategoryId.N2, Box(-5, 5, -5, 5))


class TestMiddleIso:
    def test_edge_exact_on_large_window(self):
        report = check_middle_iso(Box(-30, -1, 0, 29))
        assert report.passed

    def test_bijection_and_gluing(self):
        seen = set()
        for p in range(-40, 0):
            for q in range(0, 40):
                w = middle_iso(p, q)
                assert w[0] >= 0 and w[1] <= -1
                assert middle_iso_inv(*w) == (p, q)
                assert w not in seen
                seen.add(w)

    def test_exchanges_wall_chain_and_diagonal_chain(self):
        # the wall column lands on the anti-diagonal and the anti-diagonal on the wall row
        for k in range(0, 12):
            a, b = middle_iso(-1, k)
            assert a + b == -2
        for p in range(-12, -2):
            a, b = middle_iso(p, -p - 2)
            assert b == -1

    def test_preserves_eigenvector_values(self):
        from sl3graphs import pf_value
        for p in range(-25, 0):
            for q in range(0, 25):
                assert pf_value(CategoryId.N1, (p, q)) == \
                    pf_value(CategoryId.N2, middle_iso(p, q))


class TestN1N2Distinct:
    def test_claim_is_refuted_but_chains_hold(self):
        report = check_n1_n2_distinct(24)
        assert not report.passed
        assert "isomorphic via middle_iso" in report.detail
        assert all(tag == "refuted-by-isomorphism" for tag, _ in report.counterexamples)
        # the chain orientation facts themselves hold (no chain counterexamples)
        assert not any("chain" in str(c) or "orientation" in str(c)
                       for c in report.counterexamples)

    def test_window_floor(self):
        with pytest.raises(WindowTooSmallError):
            check_n1_n2_distinct(12)


class TestThetaPositivity:
    @pytest.mark.parametrize("cat", ALL_CATS)
    def test_adjoint_label_passes(self, cat):
        assert check_theta_positivity(cat, (1, 1), default_box(cat, 22)).passed

    @pytest.mark.parametrize("label", [(0, 0), (2, 0), (0, 2), (2, 1), (2, 2)])
    def test_more_labels_on_bottom_family(self, label):
        assert check_theta_positivity(CategoryId.N3, label, default_box(CategoryId.N3, 24)).passed

    def test_trivial_label_is_identity(self):
        import numpy as np
        from sl3graphs.verify import _adjacency
        from sl3graphs.grothendieck import upoly
        box = default_box(CategoryId.REGULAR, 10)
        gf = generate(CategoryId.REGULAR, Functor.F, box)
        n = len(gf.vertices)
        theta = np.zeros((n, n), dtype=np.int64)
        for (a, b), c in upoly(0, 0).coeffs.items():
            assert (a, b) == (0, 0) and c == 1
            theta += c * np.eye(n, dtype=np.int64)
        assert np.array_equal(theta, np.eye(n, dtype=np.int64))
        assert check_theta_positivity(CategoryId.REGULAR, (0, 0), box).passed

    def test_matches_direct_tensor_rule_on_regular(self):
        # columns of the adjoint operator reproduce the tensor multiplicities
        import numpy as np
        from sl3graphs.verify import _adjacency
        from sl3graphs.grothendieck import tensor, upoly
        from sl3graphs.graphs import interior
        box = default_box(CategoryId.REGULAR, 14)
        gf = generate(CategoryId.REGULAR, Functor.F, box)
        gg = generate(CategoryId.REGULAR, Functor.G, box)
        mf, mg = _adjacency(gf), _adjacency(gg)
        n = len(gf.vertices)
        theta = np.zeros((n, n), dtype=np.int64)
        for (a, b), c in upoly(1, 1).coeffs.items():
            term = np.eye(n, dtype=np.int64)
            for _ in range(a):
                term = mf @ term
            for _ in range(b):
                term = mg @ term
            theta += c * term
        idx = gf.vertex_index
        for v in sorted(interior(gf, 2)):
            expected = tensor((1, 1), v)
            col = theta[:, idx[v]]
            got = {gf.vertices[i]: int(col[i]) for i in range(n) if col[i]}
            assert got == expected, v

    def test_label_bound(self):
        with pytest.raises(ValueError):
            check_theta_positivity(CategoryId.REGULAR, (7, 0), default_box(CategoryId.REGULAR, 22))


class TestMutationSensitivity:
    def _checks_catch(self, cat, graph_f, graph_g, box):
        if not check_pf(graph_f).passed:
            return True
        if not check_commute(cat, box, 2, graph_f, graph_g).passed:
            return True
        if cat in SEMISIMPLE and not check_transpose(cat, box, graph_f, graph_g).passed:
            return True
        if cat in (CategoryId.WHITTAKER1, CategoryId.WHITTAKER2):
            if any(graph_f.out_multiplicity(v) != 3 for v in out_complete(graph_f)):
                return True
        return False

    def test_random_single_edge_mutations_are_caught(self):
        rng = random.Random(2024)
        cats = ALL_CATS
        caught = 0
        trials = 0
        for cat in cats:
            box = default_box(cat, 20)
            gf = generate(cat, Functor.F, box)
            gg = generate(cat, Functor.G, box)
            checkable = out_complete(gf)
            candidates = [i for i, e in enumerate(gf.edges) if e.src in checkable]
            for _ in range(10):
                i = rng.choice(candidates)
                edges = list(gf.edges)
                e = edges[i]
                if e.mult > 1 and rng.random() < 0.5:
                    edges[i] = e._replace(mult=e.mult - 1)
                elif rng.random() < 0.8:
                    edges[i] = e._replace(mult=e.mult + 1)
                else:
                    del edges[i]
                mutated = gf.with_edges(edges)
                trials += 1
                assert self._checks_catch(cat, mutated, gg, box), (cat, gf.edges[i])
                caught += 1
        assert trials >= 100 and caught == trials
