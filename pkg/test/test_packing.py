'''
This module tests the packing module.
'''
#pylint: disable=invalid-name
#pylint: disable=line-too-long

import unittest

from hypothesis import given, settings

from src.families import FamilyId, Tag, generate, witness_coloring
from src.graph import Graph, complete_graph, cycle_graph, delete_edge, delete_vertex, disjoint_union, path_graph, star_graph
from src.packing import (PackingColoring, Shape, chi_rho, chi_rho_closed_form, find_k_packing_coloring, format_coloring,
                         is_valid, lower_bound, parse_coloring)
from test.strategies import atlas, graphs

class TestIsValid(unittest.TestCase):
    '''Tests is_valid.'''
    def test_is_valid_t_coloring_returns_true(self):
        '''Tests the recorded 3-packing coloring of T.'''
        self.assertTrue(is_valid(generate(FamilyId(Tag.T)), witness_coloring(FamilyId(Tag.T))))

    def test_is_valid_h9_coloring_returns_true(self):
        '''Tests the recorded 4-packing coloring of H9.'''
        self.assertTrue(is_valid(generate(FamilyId(Tag.H9)), witness_coloring(FamilyId(Tag.H9))))

    def test_is_valid_adjacent_equal_colors_returns_false(self):
        '''Tests K3 colored (1, 1, 2).'''
        self.assertFalse(is_valid(complete_graph(3), PackingColoring((1, 1, 2), 2)))

    def test_is_valid_color_2_at_distance_2_returns_false(self):
        '''Tests the ends of P3 may not both take color 2.'''
        self.assertFalse(is_valid(path_graph(3), PackingColoring((2, 1, 2), 2)))

    def test_is_valid_color_above_k_returns_false(self):
        '''Tests colors must lie in 1..k.'''
        self.assertFalse(is_valid(path_graph(3), PackingColoring((1, 2, 3), 2)))

    def test_is_valid_unassigned_vertex_raises_value_error(self):
        '''Tests a partial coloring is rejected.'''
        with self.assertRaises(ValueError):
            is_valid(path_graph(3), PackingColoring((1, 0, 1), 2))

    def test_is_valid_wrong_length_raises_value_error(self):
        '''Tests a coloring of another graph is rejected.'''
        with self.assertRaises(ValueError):
            is_valid(path_graph(3), PackingColoring((1, 2), 2))

class TestFindKPackingColoring(unittest.TestCase):
    '''Tests find_k_packing_coloring.'''
    def test_find_k_packing_coloring_c8_3_returns_valid_coloring(self):
        '''Tests C8 has a 3-packing coloring.'''
        coloring = find_k_packing_coloring(cycle_graph(8), 3)
        self.assertIsNotNone(coloring)
        self.assertTrue(is_valid(cycle_graph(8), coloring))

    def test_find_k_packing_coloring_c5_3_returns_none(self):
        '''Tests C5 has no 3-packing coloring.'''
        self.assertIsNone(find_k_packing_coloring(cycle_graph(5), 3))

    def test_find_k_packing_coloring_k3_2_returns_none(self):
        '''Tests K3 has no 2-packing coloring.'''
        self.assertIsNone(find_k_packing_coloring(complete_graph(3), 2))

    def test_find_k_packing_coloring_zero_colors_raises_value_error(self):
        '''Tests k must be positive.'''
        with self.assertRaises(ValueError):
            find_k_packing_coloring(path_graph(2), 0)

    def test_find_k_packing_coloring_empty_graph_returns_empty_coloring(self):
        '''Tests the empty graph is trivially colored.'''
        self.assertEqual((), find_k_packing_coloring(Graph(0), 1).assignment)

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_order=8))
    def test_find_k_packing_coloring_witness_is_valid(self, g):
        '''Tests every coloring returned is valid and within k colors.'''
        for k in range(1, g.order + 1):
            coloring = find_k_packing_coloring(g, k)
            if coloring is not None:
                self.assertTrue(is_valid(g, coloring))
                self.assertLessEqual(coloring.colors_used, k)

class TestChiRho(unittest.TestCase):
    '''Tests chi_rho.'''
    def test_chi_rho_examples(self):
        '''Tests K4, P4, P1, X(5) and Y(5).'''
        cases = ((complete_graph(4), 4), (path_graph(4), 3), (Graph(1), 1),
                 (generate(FamilyId(Tag.X, n=5)), 3), (generate(FamilyId(Tag.Y, n=5)), 3))
        for g, expected in cases:
            with self.subTest(g=g):
                result = chi_rho(g)
                self.assertEqual(expected, result.value)
                self.assertTrue(is_valid(g, result.witness))

    def test_chi_rho_empty_graph_raises_value_error(self):
        '''Tests the empty graph has no packing chromatic number.'''
        with self.assertRaises(ValueError):
            chi_rho(Graph(0))

    def test_chi_rho_trace_reports_exhausted_bounds(self):
        '''Tests the trace of C5, which needs one color above its bound.'''
        self.assertIn('k=3..3 exhausted, chi=4', chi_rho(cycle_graph(5)).lower_bound_trace)
        self.assertIn('bound attained', chi_rho(path_graph(4)).lower_bound_trace)

    def test_chi_rho_matches_closed_forms(self):
        '''Tests paths and cycles up to 16 vertices and cliques up to 8.'''
        for n in range(1, 17):
            with self.subTest(n=n):
                self.assertEqual(chi_rho_closed_form(Shape.PATH, n), chi_rho(path_graph(n)).value)
                if n >= 3:
                    self.assertEqual(chi_rho_closed_form(Shape.CYCLE, n), chi_rho(cycle_graph(n)).value)
                if n <= 8:
                    self.assertEqual(chi_rho_closed_form(Shape.CLIQUE, n), chi_rho(complete_graph(n)).value)

    def test_chi_rho_is_minimal_on_atlas(self):
        '''Tests no coloring with one color fewer exists, for every graph up to 6 vertices.'''
        for g in atlas(1, 6):
            value = chi_rho(g).value
            if value > 1:
                self.assertIsNone(find_k_packing_coloring(g, value - 1))

    @settings(max_examples=300, deadline=None)
    @given(graphs(max_order=8))
    def test_chi_rho_does_not_grow_under_deletion(self, g):
        '''Tests vertex and edge deletions never raise the packing chromatic number.'''
        value = chi_rho(g).value
        if g.order > 1:
            for v in range(g.order):
                self.assertLessEqual(chi_rho(delete_vertex(g, v)).value, value)
        for e in g.edge_list:
            self.assertLessEqual(chi_rho(delete_edge(g, e)).value, value)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_order=5), graphs(max_order=4))
    def test_chi_rho_of_union_is_max_over_components(self, g, h):
        '''Tests the per-component solution against the monolithic search.'''
        union = disjoint_union(g, h)
        value = chi_rho(union).value
        self.assertEqual(max(chi_rho(g).value, chi_rho(h).value), value)
        if value > 1:
            self.assertIsNone(find_k_packing_coloring(union, value - 1))

class TestBounds(unittest.TestCase):
    '''Tests lower_bound and chi_rho_closed_form.'''
    def test_lower_bound_examples(self):
        '''Tests stars, paths, edgeless graphs, cliques and the empty graph.'''
        cases = ((star_graph(5), 2), (path_graph(4), 3), (Graph(4), 1), (complete_graph(5), 5), (Graph(0), 0))
        for g, expected in cases:
            with self.subTest(g=g):
                self.assertEqual(expected, lower_bound(g))

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_order=8))
    def test_lower_bound_never_exceeds_chi_rho(self, g):
        '''Tests soundness of the bound.'''
        self.assertLessEqual(lower_bound(g), chi_rho(g).value)

    def test_chi_rho_closed_form_examples(self):
        '''Tests C12, C7, P3 and K6.'''
        self.assertEqual(3, chi_rho_closed_form(Shape.CYCLE, 12))
        self.assertEqual(4, chi_rho_closed_form(Shape.CYCLE, 7))
        self.assertEqual(3, chi_rho_closed_form(Shape.CYCLE, 3))
        self.assertEqual(2, chi_rho_closed_form(Shape.PATH, 3))
        self.assertEqual(6, chi_rho_closed_form(Shape.CLIQUE, 6))

    def test_chi_rho_closed_form_short_cycle_raises_value_error(self):
        '''Tests cycles need 3 vertices.'''
        with self.assertRaises(ValueError):
            chi_rho_closed_form(Shape.CYCLE, 2)

    def test_chi_rho_closed_form_zero_order_raises_value_error(self):
        '''Tests the order must be positive.'''
        with self.assertRaises(ValueError):
            chi_rho_closed_form(Shape.PATH, 0)

class TestColoringText(unittest.TestCase):
    '''Tests format_coloring and parse_coloring.'''
    def test_format_coloring_lines(self):
        '''Tests one "vertex color" line per vertex.'''
        self.assertEqual('0 1\n1 2\n2 1\n', format_coloring(PackingColoring((1, 2, 1), 2)))

    def test_parse_coloring_reads_lines(self):
        '''Tests reading back a written coloring.'''
        self.assertEqual(PackingColoring((1, 3, 2), 3), parse_coloring('0 1\n1 3\n\n2 2\n', 3))

    def test_parse_coloring_errors(self):
        '''Tests malformed lines and vertices out of range.'''
        for text in ('0 x\n', '0 1 2\n', '5 1\n'):
            with self.subTest(text=text):
                with self.assertRaises(ValueError):
                    parse_coloring(text, 3)

    def test_from_labels_unknown_label_raises_value_error(self):
        '''Tests labels must name vertices.'''
        with self.assertRaises(ValueError):
            PackingColoring.from_labels(generate(FamilyId(Tag.T)), {'q': 1})

if __name__ == '__main__':
    unittest.main()
