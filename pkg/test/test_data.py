'''Tests the data module.'''

import os
import tempfile
import unittest
from dataclasses import dataclass, field
from typing import Any, List, Sequence, Tuple

from src.data import REGISTRY, Log, flush_registry, logger

@dataclass
class Tally:
    '''Minimal loggable output.'''
    values: List[int] = field(default_factory=list)

    @property
    def name(self) -> str:
        '''Log name.'''
        return 'tally'

    @property
    def output_headers(self) -> Tuple[str, ...]:
        '''Log header row.'''
        return ('value',)

    def rows(self) -> List[Sequence[Any]]:
        '''One row per value.'''
        return [(v,) for v in self.values]

@logger
def count_to(n: int) -> Tally:
    '''Logged test function.'''
    return Tally(list(range(1, n + 1)))

class TestLog(unittest.TestCase):
    '''Test the log class.'''
    def test_default_data(self):
        '''Test that the default data is an empty list.'''
        self.assertEqual([], Log().data)

    def test_default_csv_path(self):
        '''Test that the default csv path is an empty string.'''
        self.assertEqual('', Log().csv_path)

    def test_default_data_headers(self):
        '''Test that the default data headers is an empty tuple.'''
        self.assertEqual((), Log().data_headers)

    def test_flush_writes_header_and_rows(self):
        '''Test that flush writes the headers, tuple rows and scalar rows.'''
        log = Log(data=[(1, 2), 3], data_headers=('a', 'b'))
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'log.csv')
            log.flush(path)
            with open(path, 'r', encoding='utf-8') as log_file:
                self.assertEqual(['a,b', '1,2', '3'], log_file.read().splitlines())
        self.assertEqual(path, log.csv_path)

class TestLogger(unittest.TestCase):
    '''Tests the logger decorator.'''
    def setUp(self):
        REGISTRY.clear()

    def tearDown(self):
        REGISTRY.clear()

    def test_logger_registers_rows_under_output_name(self):
        '''Test that repeated calls extend one registered log.'''
        count_to(2)
        count_to(1)
        self.assertEqual([(1,), (2,), (1,)], REGISTRY['tally'].data)
        self.assertEqual(('value',), REGISTRY['tally'].data_headers)

    def test_logger_uses_given_log(self):
        '''Test that an explicit log receives the rows.'''
        log = Log()
        # pylint: disable=unexpected-keyword-arg
        count_to(3, log=log)
        self.assertEqual([(1,), (2,), (3,)], log.data)
        self.assertIs(log, REGISTRY['tally'])

    def test_logger_returns_output(self):
        '''Test that the wrapped function result is passed through.'''
        self.assertEqual([1, 2], count_to(2).values)

    def test_flush_registry_writes_one_file_per_log(self):
        '''Test that every registered log is written to <name>.csv.'''
        count_to(1)
        with tempfile.TemporaryDirectory() as directory:
            target = os.path.join(directory, 'logs')
            self.assertEqual([os.path.join(target, 'tally.csv')], flush_registry(target))
            self.assertTrue(os.path.exists(os.path.join(target, 'tally.csv')))

if __name__ == '__main__':
    unittest.main()
