'''Supports data logging.'''
import csv
import os
from functools import wraps
from typing import Any, Callable, Dict, List, Optional, Protocol, Sequence, Tuple
from dataclasses import dataclass, field

class Loggable(Protocol):
    '''Output of a logged function: a name to register under, headers and CSV rows.'''
    @property
    def name(self) -> str:
        '''Key of the log in the REGISTRY.'''
    @property
    def output_headers(self) -> Tuple[str, ...]:
        '''CSV header row.'''
    def rows(self) -> List[Sequence[Any]]:
        '''CSV data rows.'''

@dataclass
class Log:
    '''
    Stores data for a log file.
    '''
    csv_path: str = ''
    data: List[Any] = field(default_factory=list)
    data_headers: Tuple[str, ...] = field(default_factory=tuple)

    def flush(self, csv_path: str) -> None:
        '''Write the data to a log file.'''
        self.csv_path = csv_path
        with open(csv_path, 'w', newline='', encoding='utf-8') as log_file:
            writer = csv.writer(log_file)
            writer.writerow(self.data_headers)
            for row in self.data:
                if isinstance(row, (tuple, list)):
                    writer.writerow(row)
                else:
                    writer.writerow((row,))

def logger(function: Callable[..., Loggable]) -> Callable[..., Loggable]:
    '''Logging decorator that wraps a verification and stores the rows of its report.'''
    @wraps(function)
    def wrapper(*args, log: Optional[Log] = None, **kwargs):
        output = function(*args, **kwargs)
        if log is None:
            log = REGISTRY.get(output.name, Log())
        log.data_headers = output.output_headers
        REGISTRY[output.name] = log
        log.data.extend(output.rows())
        return output
    return wrapper

def flush_registry(directory: str) -> List[str]:
    '''Writes every registered log to <directory>/<name>.csv and returns the paths.'''
    os.makedirs(directory, exist_ok=True)
    paths = []
    for name, log in sorted(REGISTRY.items()):
        path = os.path.join(directory, f'{name}.csv')
        log.flush(path)
        paths.append(path)
    return paths

REGISTRY: Dict[str, Log] = {}
