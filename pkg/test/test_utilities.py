'''
This module tests the utilities module.
'''
#pylint: disable=invalid-name
#pylint: disable=line-too-long

import unittest

from src.utilities import chunked, is_in_range, is_not_negative, is_positive, is_residue, repeating_pattern

class TestIsNotNegative(unittest.TestCase):
    '''Tests the is_not_negative function.'''
    def test_is_not_negative_returns_true_for_zero_value(self):
        '''Tests is_not_negative returns true for zero value.'''
        self.assertTrue(is_not_negative(0))

    def test_is_not_negative_returns_true_for_positive_value(self):
        '''Tests is_not_negative returns true for positive value.'''
        self.assertTrue(is_not_negative(1))

    def test_is_not_negative_returns_false_for_negative_value(self):
        '''Tests is_not_negative returns false for negative value.'''
        self.assertFalse(is_not_negative(-1))

    def test_is_not_negative_returns_false_for_any_negative_argument(self):
        '''Tests is_not_negative checks every argument.'''
        self.assertFalse(is_not_negative(1, 2, -3))

class TestIsPositive(unittest.TestCase):
    '''Tests the is_positive function.'''
    def test_is_positive_returns_true_for_positive_value(self):
        '''Tests is_positive returns true for positive value.'''
        self.assertTrue(is_positive(1))

    def test_is_positive_returns_false_for_zero_value(self):
        '''Tests is_positive returns false for zero value.'''
        self.assertFalse(is_positive(0))

    def test_is_positive_returns_false_for_negative_value(self):
        '''Tests is_positive returns false for negative value.'''
        self.assertFalse(is_positive(-1))

class TestIsInRange(unittest.TestCase):
    '''Tests the is_in_range function.'''
    def test_is_in_range_bounds_are_inclusive(self):
        '''Tests both ends of the range hold.'''
        self.assertTrue(is_in_range(1, (1, 12)))
        self.assertTrue(is_in_range(12, (1, 12)))

    def test_is_in_range_outside_returns_false(self):
        '''Tests values beyond the range.'''
        self.assertFalse(is_in_range(0, (1, 12)))
        self.assertFalse(is_in_range(13, (1, 12)))

    def test_is_in_range_reverse_order_returns_false(self):
        '''Tests a reversed range holds nothing.'''
        self.assertFalse(is_in_range(1, (2, 0)))

    def test_is_in_range_single_value_returns_false(self):
        '''Tests a malformed range holds nothing.'''
        self.assertFalse(is_in_range(0, (0,)))

class TestIsResidue(unittest.TestCase):
    '''Tests the is_residue function.'''
    def test_is_residue_examples(self):
        '''Tests residues modulo 4.'''
        self.assertTrue(is_residue(6, 4, (2,)))
        self.assertTrue(is_residue(9, 4, (0, 1, 2)))
        self.assertFalse(is_residue(7, 4, (0, 1, 2)))

class TestRepeatingPattern(unittest.TestCase):
    '''Tests the repeating_pattern function.'''
    def test_repeating_pattern_wraps(self):
        '''Tests the pattern restarts after its last item.'''
        self.assertEqual([1, 2, 1, 3, 1, 2], repeating_pattern((1, 2, 1, 3), 6))

    def test_repeating_pattern_zero_length_returns_empty(self):
        '''Tests no items for length 0.'''
        self.assertEqual([], repeating_pattern((1,), 0))

    def test_repeating_pattern_empty_pattern_raises_value_error(self):
        '''Tests an empty pattern is rejected.'''
        with self.assertRaises(ValueError):
            repeating_pattern((), 3)

    def test_repeating_pattern_negative_length_raises_value_error(self):
        '''Tests a negative length is rejected.'''
        with self.assertRaises(ValueError):
            repeating_pattern((1,), -1)

class TestChunked(unittest.TestCase):
    '''Tests the chunked function.'''
    def test_chunked_last_chunk_is_short(self):
        '''Tests the remainder forms the final chunk.'''
        self.assertEqual([[1, 2], [3, 4], [5]], list(chunked([1, 2, 3, 4, 5], 2)))

    def test_chunked_zero_size_raises_value_error(self):
        '''Tests the chunk size must be positive.'''
        with self.assertRaises(ValueError):
            list(chunked([1], 0))

if __name__ == '__main__':
    unittest.main()
