'''Small validators and sequence helpers shared across the toolkit.'''

from typing import Iterable, Iterator, List, Sequence, Tuple, TypeVar

T = TypeVar('T')

def is_not_negative(*args: int) -> bool:
    '''Tests if all arguments are not negative.

    Returns:
        bool: True if arguments are not negative, False otherwise.
    '''
    for x in args:  #pylint: disable=invalid-name
        if x < 0:
            return False
    return True

def is_positive(*args: int) -> bool:
    '''Tests if all arguments are positive.

    Returns:
        bool: True if arguments are positive, False otherwise.
    '''
    for x in args:  #pylint: disable=invalid-name
        if x <= 0:
            return False
    return True

def is_in_range(value: int, rng: Tuple[int, int]) -> bool:
    '''Tests if rng[0] <= value <= rng[1].

    Returns:
        bool: True if the range is valid and holds the value, False otherwise.
    '''
    if len(rng) != 2 or rng[0] > rng[1]:
        return False
    return rng[0] <= value <= rng[1]

def is_residue(value: int, modulus: int, residues: Iterable[int]) -> bool:
    '''Tests if value mod modulus is one of residues.'''
    return value % modulus in set(residues)

def repeating_pattern(pattern: Sequence[T], length: int) -> List[T]:
    '''
    Repeats pattern until length items are produced.

    Arguments:
        pattern: Sequence[T] ~ the cycle of values, e.g. colors (1, 2, 1, 3)
        length: int ~ number of items to produce
    Returns:
        items: List[T] ~ pattern[i % len(pattern)] for i in 0..length-1
    '''
    if not pattern:
        raise ValueError('The pattern must not be empty.')
    if not is_not_negative(length):
        raise ValueError(f'The length: {length} must not be negative.')
    return [pattern[i % len(pattern)] for i in range(length)]

def chunked(items: Sequence[T], size: int) -> Iterator[Sequence[T]]:
    '''Splits items into consecutive slices of at most size items.'''
    if not is_positive(size):
        raise ValueError(f'The chunk size: {size} must be positive.')
    for start in range(0, len(items), size):
        yield items[start:start + size]
