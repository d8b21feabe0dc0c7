""" Configuration and defaults.

"""

import os


# Location of all data files shipped with tonalambiguity. Change this to
# make tonalambiguity look for the reference scale registry elsewhere.

data_path = os.path.join(
    os.path.dirname(os.path.abspath(__file__)), 'tonalambiguity', 'data'
)

# Global variables for data.
glob_reference_scales = None

#############################################################################
#############################################################################
# Defaults                                                                  #
#############################################################################
#############################################################################

default_edo = 12
"""Chromatic size used when none is given (12-EDO)."""
max_edo = 64
"""Largest chromatic size supported. Sets are stored as bit masks, and vectorized
containment tests use ``numpy.uint64``, i.e. one 64-bit word."""
default_draws = 8
"""Default melody length *n* for the draws-with-repetition model."""
default_nmax = 32
"""Default length of convergence curves."""
default_auc_baseline = 'asymptote'
"""Default baseline subtracted from convergence curves before integrating."""
default_auc_range = (1, 32)
"""Default integration range (in draws) for the area under the convergence curve."""
printed_digits = 2
"""Decimal places for printed bits and tonic counts."""
reported_bits_digits = 2
"""Decimal places to which an expected information is rounded before the
reported tonic count :math:`c / 2^{E}` is formed (set-level TAI and the
tonic count after *n* draws). Exact values are kept alongside."""
census_digits = 1
"""Decimal places for printed census averages."""
probability_digits = 3
"""Decimal places for printed probabilities."""
absent_marker = '--'
"""Printed in place of a value for combinations absent from a set."""
large_set_warning = 20
"""Sets with more members than this trigger a warning before subset enumeration."""


def load_data(data_type):
    """ Loads data from the shipped files.

    Parameters
    ----------
    data_type : {'reference_scales'}
        Type of data to load. The options are:

        - *'reference_scales'* -- The seven reference scales in 12-EDO (Major, Asc. Melodic Minor, Harmonic Minor, Whole-Tone, Octatonic, Major Pentatonic and Augmented), as a :class:`.ScaleFamily`.

    Returns
    --------
    ScaleFamily
        The loaded family. Loaded once, then served from a module-level cache.

    """

    global glob_reference_scales

    if data_type == 'reference_scales':

        if glob_reference_scales is None:

            # Imported here: family.py imports this module.
            from tonalambiguity.family import load_family

            glob_reference_scales = load_family(
                os.path.join(data_path, 'reference_scales.txt')
            )

        return glob_reference_scales

    else:

        raise ValueError('invalid data_type.')
