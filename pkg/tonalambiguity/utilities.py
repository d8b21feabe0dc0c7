""" Non-domain convenience and formatting functions.

"""

from decimal import Decimal, ROUND_HALF_EVEN
from fractions import Fraction

import numpy as np

import config


def round_half_even(x, digits):
    """ Rounds to *digits* decimal places, ties to even.

    The rounding acts on the shortest decimal representation of the float, so that printed tables do not depend on binary noise in the last place.

    Parameters
    ----------
    x : float
        The value to round.
    digits : int
        Number of decimal places.

    Returns
    -------
    Decimal

    Examples
    --------
    >>> str(round_half_even(2.584962500721156, 2))
    '2.58'
    >>> str(round_half_even(0.125, 2))
    '0.12'
    """
    quantum = Decimal(1).scaleb(-digits)
    return Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_HALF_EVEN)

def format_number(x, digits=None):
    """ Formats a value for printed tables.

    Parameters
    ----------
    x : float, int or None
        The value. *None* marks an absent combination and prints as :data:`config.absent_marker`.
    digits : int, optional
        Decimal places. Integers are printed as they are if *digits* is None. Default is :data:`config.printed_digits` for floats.

    Returns
    -------
    str

    Examples
    --------
    >>> format_number(None)
    '--'
    >>> format_number(6)
    '6'
    >>> format_number(4.116908, 2)
    '4.12'
    """
    if x is None:
        return config.absent_marker
    if digits is None:
        if isinstance(x, (int, np.integer)):
            return str(int(x))
        digits = config.printed_digits
    return str(round_half_even(x, digits))

class Probability(Fraction):
    """ A :class:`fractions.Fraction` that remembers its unreduced population.

    Trichord tables print probabilities over the full population of 35 trichords (``2/35``, ``0/35``) rather than in lowest terms, so the denominator is kept alongside the exact value.

    Parameters
    ----------
    count : int
        Number of favourable cases.
    population : int
        Total number of cases.
    """

    def __new__(cls, count, population):
        self = super().__new__(cls, count, population)
        self.count = count
        self.population = population
        return self

    def __str__(self):
        return '{}/{}'.format(self.count, self.population)

def format_probability(prob, digits=None):
    """ Formats a :class:`Probability` as ``decimal (count/population)``.

    Examples
    --------
    >>> format_probability(Probability(3, 21))
    '0.143 (3/21)'
    """
    if digits is None:
        digits = config.probability_digits
    return '{} ({}/{})'.format(
        round_half_even(float(prob), digits), prob.count, prob.population
    )

def check_normalized(arr, epsabs=1e-12):
    """ Checks that a distribution sums to one.

    Parameters
    ----------
    arr : ndarray
        The probabilities.
    epsabs : float
        The tolerance on the sum.

    Returns
    -------
    None

    """
    total = np.sum(arr)
    if np.any(arr < 0):
        raise ValueError('probabilities must be non-negative.')
    if abs(total - 1) > epsabs:
        print('Sum of probabilities is: ', total)
        raise RuntimeError('Probabilities do not sum to one.')

    return None
