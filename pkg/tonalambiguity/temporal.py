"""Ambiguity as a function of the number of notes heard.

Notes are drawn uniformly with repetition from the *m* members of a set. After *n* draws exactly *k* distinct pitches have been heard with probability

.. math::
   P_k = m^{-n} \\, S(n, k) \\binom{m}{k} k! ,

where :math:`S(n, k)` is a Stirling number of the second kind, and the expected information is :math:`\\mathbb{E}_S[I \\mid n] = \\sum_k P_k \\, \\mathbb{E}_{\\Omega_k(S)}[I]`.

"""

import math
from collections import namedtuple
from fractions import Fraction

import numpy as np
import matplotlib.pyplot as plt
from scipy.integrate import trapezoid
from scipy.stats import pearsonr

import config
from tonalambiguity import pcset as pcs
from tonalambiguity import measure
from tonalambiguity.utilities import check_normalized

# Rows S(n, 0), ..., S(n, n), grown on demand.
_stirling_rows = [(1,)]

def stirling2(n, k):
    """Stirling number of the second kind :math:`S(n, k)`.

    Exact, by the recurrence :math:`S(n, k) = k S(n-1, k) + S(n-1, k-1)` on Python integers.

    Parameters
    ----------
    n : int
        Number of elements, >= 0.
    k : int
        Number of blocks, >= 0.

    Returns
    -------
    int

    Examples
    --------
    >>> stirling2(8, 2), stirling2(4, 2), stirling2(5, 5), stirling2(3, 0)
    (127, 7, 1, 0)
    """
    if n < 0 or k < 0:
        raise ValueError('n and k must be non-negative.')
    if k > n:
        return 0

    while len(_stirling_rows) <= n:
        prev = _stirling_rows[-1]
        i    = len(prev)
        row  = [0]*(i + 1)
        for j in range(1, i + 1):
            row[j] = (j*prev[j] if j < i else 0) + prev[j - 1]
        _stirling_rows.append(tuple(row))

    return _stirling_rows[n][k]


class DrawDistribution:
    """Distribution of the number of distinct pitches after *n* draws from *m*.

    Parameters
    ----------
    n : int
        Number of draws.
    m : int
        Set cardinality.
    probabilities : ndarray
        :math:`P_1, \\ldots, P_m`.

    """

    def __init__(self, n, m, probabilities):

        probabilities = np.asarray(probabilities, dtype=float)
        if probabilities.size != m:
            raise TypeError('probabilities must have length m.')
        check_normalized(probabilities)

        self.n = n
        self.m = m
        self.probabilities = probabilities

    def __getitem__(self, k):
        if k < 1 or k > self.m:
            return 0.
        return self.probabilities[k - 1]

    def expected_distinct(self):
        """Mean number of distinct pitches, :math:`m (1 - (1 - 1/m)^n)`."""
        return float(np.dot(np.arange(1, self.m + 1), self.probabilities))


def distinct_count_distribution(n, m):
    """Occupancy distribution of *n* uniform draws over *m* pitches.

    Each :math:`P_k` is formed as an exact fraction and only then converted to a float.

    Parameters
    ----------
    n : int
        Number of draws, >= 1.
    m : int
        Set cardinality, >= 1.

    Returns
    -------
    DrawDistribution

    Examples
    --------
    >>> dist = distinct_count_distribution(8, 7)
    >>> [round(float(p), 3) for p in dist.probabilities]
    [0.0, 0.001, 0.035, 0.248, 0.459, 0.233, 0.024]
    >>> distinct_count_distribution(3, 2).probabilities.tolist()
    [0.25, 0.75]
    """
    if n < 1 or m < 1:
        raise ValueError('n and m must be at least 1.')

    total = m**n
    probabilities = [
        float(Fraction(
            stirling2(n, k) * math.comb(m, k) * math.factorial(k), total
        ))
        for k in range(1, m + 1)
    ]
    return DrawDistribution(n, m, probabilities)

def default_draw_length():
    """Default melody length, :data:`config.default_draws`."""
    return config.default_draws

def expected_info_after_draws(pcset, n, profile=None):
    """Expected information after *n* draws from the set.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*, non-empty.
    n : int
        Number of draws, >= 1.
    profile : CardinalityProfile, optional
        A profile of *S* already computed.

    Returns
    -------
    AmbiguityValue
        *tonic_count* is :math:`\\bar{t}_n(S)`; *reported_tonic_count* is formed from the rounded bits.

    Examples
    --------
    >>> value = expected_info_after_draws(pcs.parse_pcset('024579E'), 8)
    >>> round(value.bits, 2), round(value.reported_tonic_count, 2)
    (2.95, 1.55)
    >>> round(value.tonic_count, 4)
    1.5582
    """
    m = pcset.cardinality
    if n < 1:
        raise ValueError('n must be at least 1.')
    if m == 0:
        raise ValueError('the set must be non-empty.')
    if n == 1:
        return measure.AmbiguityValue.from_count(m, pcset.edo)

    if profile is None:
        profile = measure.cardinality_profile(pcset)
    dist = distinct_count_distribution(n, m)

    bits = math.fsum(dist.probabilities * profile.bits)
    # Convex combination of values in [0, log2 c].
    bits = min(max(bits, 0.), math.log2(pcset.edo))
    return measure.AmbiguityValue(bits, pcset.edo)


CurvePoint = namedtuple('CurvePoint', ['n', 'bits', 'tonics'])

class ConvergenceCurve:
    """Expected bits and candidate tonics for n = 1 ... *n_max* draws.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*.
    points : list of CurvePoint
        One point per *n*, starting at 1.

    Attributes
    ----------
    set : PitchClassSet
    points : list of CurvePoint
    asymptote : int
        Limit of the tonic count, the symmetry order of *S*.
    """

    def __init__(self, pcset, points):

        if [p.n for p in points] != list(range(1, len(points) + 1)):
            raise TypeError('points must cover n = 1 ... n_max in order.')

        self.set       = pcset
        self.points    = points
        self.asymptote = pcs.symmetry_order(pcset)

    def __len__(self):
        return len(self.points)

    @property
    def n_max(self):
        return len(self.points)

    @property
    def n(self):
        return np.array([p.n for p in self.points])

    @property
    def bits(self):
        return np.array([p.bits for p in self.points])

    @property
    def tonics(self):
        return np.array([p.tonics for p in self.points])


def convergence_curve(pcset, n_max=None, profile=None):
    """Convergence of :math:`\\bar{t}_n(S)` as notes are drawn.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*.
    n_max : int, optional
        Last number of draws. Default is :data:`config.default_nmax`.
    profile : CardinalityProfile, optional
        A profile of *S* already computed.

    Returns
    -------
    ConvergenceCurve
    """
    if n_max is None:
        n_max = config.default_nmax
    if n_max < 1:
        raise ValueError('n_max must be at least 1.')
    if profile is None:
        profile = measure.cardinality_profile(pcset)

    points = []
    for n in range(1, n_max + 1):
        value = expected_info_after_draws(pcset, n, profile=profile)
        points.append(CurvePoint(n, value.bits, value.tonic_count))

    return ConvergenceCurve(pcset, points)

def auc(curve, baseline=None, n_range=None):
    """Area under a convergence curve.

    Parameters
    ----------
    curve : ConvergenceCurve
        The curve.
    baseline : {'asymptote', 'unity', 'zero'}, optional
        Value subtracted from the tonic count before integrating: the symmetry order of the set, 1 or 0. Default is :data:`config.default_auc_baseline`.
    n_range : tuple of int, optional
        Inclusive range (n_start, n_end) of draws. Default is :data:`config.default_auc_range`.

    Returns
    -------
    float
        Trapezoidal area.

    Notes
    -----
    Only the ordering of areas between sets and their correlation with the TAI are meaningful; the absolute value depends on *baseline* and *n_range*.
    """
    if baseline is None:
        baseline = config.default_auc_baseline
    if n_range is None:
        n_range = config.default_auc_range

    if baseline == 'asymptote':
        base = curve.asymptote
    elif baseline == 'unity':
        base = 1.
    elif baseline == 'zero':
        base = 0.
    else:
        raise ValueError('invalid baseline.')

    n_start, n_end = n_range
    if n_start < 1 or n_end < n_start or n_end > curve.n_max:
        raise ValueError(
            'range ({}, {}) lies outside the curve (1, {}).'.format(
                n_start, n_end, curve.n_max
            )
        )

    y = curve.tonics[n_start - 1:n_end] - base
    x = curve.n[n_start - 1:n_end]
    return float(trapezoid(y, x))

def curve_sweep(sets, n_max=None, use_tqdm=False):
    """Convergence curves for many sets, in the order given.

    Parameters
    ----------
    sets : list of PitchClassSet
        The sets.
    n_max : int, optional
        Last number of draws. Default is :data:`config.default_nmax`.
    use_tqdm : bool, optional
        Shows a progress bar if *True*. Default is *False*.

    Returns
    -------
    list of ConvergenceCurve
    """
    if use_tqdm:
        from tqdm import tqdm
        sets = tqdm(sets, desc='curves')

    return [convergence_curve(s, n_max) for s in sets]


CorrelationReport = namedtuple(
    'CorrelationReport', ['sets', 'auc', 'tai', 'r_squared']
)
"""AUC and TAI of every Tn-class of one cardinality, and their squared Pearson correlation."""

def auc_tai_correlation(
    edo, cardinality, baseline=None, n_range=None, use_tqdm=False
):
    """Correlation between AUC and TAI over all Tn-classes of a cardinality.

    Parameters
    ----------
    edo : int
        The chromatic size *c*.
    cardinality : int
        Cardinality of the sets.
    baseline : {'asymptote', 'unity', 'zero'}, optional
        See :func:`auc`.
    n_range : tuple of int, optional
        See :func:`auc`.
    use_tqdm : bool, optional
        Shows a progress bar if *True*. Default is *False*.

    Returns
    -------
    CorrelationReport
    """
    if n_range is None:
        n_range = config.default_auc_range

    sets = pcs.tn_class_census(edo, cardinality)
    it   = sets
    if use_tqdm:
        from tqdm import tqdm
        it = tqdm(sets, desc='classes')

    auc_arr = np.zeros(len(sets))
    tai_arr = np.zeros(len(sets))
    for i, s in enumerate(it):
        profile    = measure.cardinality_profile(s)
        curve      = convergence_curve(s, n_range[1], profile=profile)
        auc_arr[i] = auc(curve, baseline, n_range)
        tai_arr[i] = measure.tai(s, profile).tai

    r = pearsonr(auc_arr, tai_arr)[0]
    return CorrelationReport(sets, auc_arr, tai_arr, float(r**2))

def plot_convergence(curves, ax=None, **kwargs):
    """Plots tonic counts of convergence curves against the number of draws.

    Parameters
    ----------
    curves : list of ConvergenceCurve
        The curves, each labelled by its set.
    ax : matplotlib.axes.Axes, optional
        The axes to draw on. A new figure is made if *None*.
    **kwargs : optional
        Passed to ``matplotlib.pyplot.plot``.

    Returns
    -------
    matplotlib.figure.Figure
    """
    if ax is None:
        fig, ax = plt.subplots()
    else:
        fig = ax.figure

    for curve in curves:
        ax.plot(curve.n, curve.tonics, label=str(curve.set), **kwargs)

    ax.set_xlabel('Notes drawn')
    ax.set_ylabel('Candidate tonics')
    ax.set_ylim(bottom=0)
    if len(curves) <= 10:
        ax.legend()

    return fig
