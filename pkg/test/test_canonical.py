'''
This module tests the canonical module.
'''
#pylint: disable=invalid-name
#pylint: disable=line-too-long

import unittest
from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from src.canonical import are_isomorphic, canonical_form, canonical_graph, isomorphism
from src.families import FamilyId, Tag, generate
from src.graph import Graph, cycle_graph, path_graph, relabel, star_graph
from test.strategies import atlas, graphs

@st.composite
def relabeled_pairs(draw, max_order: int = 7):
    '''A graph and a random relabeling of it.'''
    g = draw(graphs(max_order=max_order))
    return g, relabel(g, draw(st.permutations(range(g.order))))

class TestCanonicalForm(unittest.TestCase):
    '''Tests canonical_form.'''
    def test_canonical_form_every_relabeling_of_small_graphs_agrees(self):
        '''Tests every permutation of every graph up to 5 vertices gives one certificate.'''
        for g in atlas(1, 5):
            certificate = canonical_form(g).certificate
            for permutation in permutations(range(g.order)):
                self.assertEqual(certificate, canonical_form(relabel(g, permutation)).certificate)

    @settings(max_examples=300, deadline=None)
    @given(relabeled_pairs())
    def test_canonical_form_is_relabeling_invariant(self, pair):
        '''Tests random relabelings of graphs up to 7 vertices.'''
        g, h = pair
        self.assertEqual(canonical_form(g).certificate, canonical_form(h).certificate)
        self.assertEqual(canonical_graph(g), canonical_graph(h))

    def test_canonical_form_c4_and_p4_differ(self):
        '''Tests C4 and P4 are told apart.'''
        self.assertNotEqual(canonical_form(cycle_graph(4)), canonical_form(path_graph(4)))

    def test_canonical_form_p4_and_star_differ(self):
        '''Tests P4 and K1,3 are told apart.'''
        self.assertNotEqual(canonical_form(path_graph(4)), canonical_form(star_graph(3)))

    def test_canonical_form_distinct_atlas_graphs_differ(self):
        '''Tests the atlas graphs, pairwise non-isomorphic, get distinct certificates.'''
        certificates = [canonical_form(g).certificate for g in atlas(1, 7)]
        self.assertEqual(len(certificates), len(set(certificates)))

    def test_canonical_form_labeling_maps_onto_canonical_edges(self):
        '''Tests the labeling carries the edges onto the canonical edge set.'''
        g = generate(FamilyId(Tag.H7))
        form = canonical_form(g)
        self.assertEqual(form.edges, relabel(g, form.labeling).edges)

    def test_canonical_form_order_13_raises_value_error(self):
        '''Tests the order limit.'''
        with self.assertRaises(ValueError):
            canonical_form(path_graph(13))

class TestIsomorphism(unittest.TestCase):
    '''Tests isomorphism and are_isomorphic.'''
    def test_are_isomorphic_h3_and_h9_returns_false(self):
        '''Tests two graphs with equal order are told apart.'''
        self.assertFalse(are_isomorphic(generate(FamilyId(Tag.H3)), generate(FamilyId(Tag.H9))))

    def test_are_isomorphic_h5_and_h6_returns_false(self):
        '''Tests graphs with different sizes are told apart.'''
        self.assertFalse(are_isomorphic(generate(FamilyId(Tag.H5)), generate(FamilyId(Tag.H6))))

    def test_are_isomorphic_relabeled_cycle_returns_true(self):
        '''Tests C6 against a relabeling of itself.'''
        self.assertTrue(are_isomorphic(cycle_graph(6), relabel(cycle_graph(6), [3, 5, 1, 0, 2, 4])))

    def test_isomorphism_different_order_returns_none(self):
        '''Tests the order precheck.'''
        self.assertIsNone(isomorphism(Graph(2), Graph(3)))

    @settings(max_examples=100, deadline=None)
    @given(relabeled_pairs())
    def test_isomorphism_maps_edges_onto_edges(self, pair):
        '''Tests the returned map is a bijection preserving adjacency.'''
        g, h = pair
        mapping = isomorphism(g, h)
        self.assertIsNotNone(mapping)
        self.assertEqual(sorted(mapping.values()), list(range(h.order)))
        self.assertEqual(h.edges, frozenset(tuple(sorted((mapping[u], mapping[v]))) for u, v in g.edges))

    @settings(max_examples=150, deadline=None)
    @given(graphs(min_order=4, max_order=6), graphs(min_order=4, max_order=6))
    def test_are_isomorphic_matches_brute_force_bijections(self, g, h):
        '''Tests agreement with a search over every vertex bijection and with the certificates.'''
        expected = g.order == h.order and any(relabel(g, p).edges == h.edges for p in permutations(range(g.order)))
        self.assertEqual(expected, are_isomorphic(g, h))
        self.assertEqual(expected, canonical_form(g).certificate == canonical_form(h).certificate)

    def test_isomorphism_empty_graphs_returns_empty_map(self):
        '''Tests the order 0 case.'''
        self.assertEqual({}, isomorphism(Graph(0), Graph(0)))

if __name__ == '__main__':
    unittest.main()
