"""Candidate transpositions, information gain and the Tonal Ambiguity Index.

For a set :math:`S \\subset \\mathbb{Z}_c` and an observed combination *X*, the number of candidate transpositions is

.. math::
   t_S(X) = \\left| \\{ \\tau \\in \\mathbb{Z}_c : X \\subseteq \\tau + S \\} \\right| ,

the information gained from *X* is :math:`I_S(X) = \\log_2 (c / t_S(X))` bits, and averaging over the non-empty subsets of *S* gives the Tonal Ambiguity Index :math:`\\bar{t}(S) = c / 2^{\\mathbb{E}_S[I]}`.

"""

import math
import warnings
from collections import namedtuple

import numpy as np
from scipy.stats import entropy

import config
from tonalambiguity import pcset as pcs
from tonalambiguity.utilities import (
    Probability, check_normalized, round_half_even
)


class AbsentCombinationError(ValueError):
    """Raised when a combination occurs in no transposition of the set."""

class InconsistentPriorError(ValueError):
    """Raised when the evidence leaves no tonic with positive prior mass."""


CardinalityRow = namedtuple(
    'CardinalityRow',
    [
        'k', 'combination_count', 'expected_bits', 'expected_tonics',
        'mean_tonics', 'class_breakdown'
    ]
)
"""Expected information over the *k*-subsets of a set.

*expected_tonics* is :math:`c / 2^{\\text{expected\\_bits}}` (geometric mean of *t*), *mean_tonics* the arithmetic mean of *t*, and *class_breakdown* a list of :class:`ClassInformation` (or *None* when not requested)."""

ClassInformation = namedtuple(
    'ClassInformation', ['tn_class', 't', 'bits', 'probability']
)
"""One Tn-class of combinations: its :class:`.TnClass`, *t*, the information in bits (*None* if absent) and the :class:`.Probability` of drawing it."""


def reported_tonic_count(bits, edo):
    """Tonic count :math:`c / 2^{E}` with *E* first rounded to :data:`config.reported_bits_digits` places.

    Printed set-level values are formed this way, so a printed TAI agrees with the printed expected information it comes from.

    Examples
    --------
    >>> round(reported_tonic_count(2.313942, 12), 4)
    2.4199
    """
    rounded = float(round_half_even(bits, config.reported_bits_digits))
    return edo / 2**rounded


class AmbiguityValue:
    """Information in bits together with the equivalent number of candidate tonics.

    Parameters
    ----------
    bits : float
        Information in bits.
    edo : int
        The chromatic size *c*.

    Attributes
    ----------
    bits : float
    tonic_count : float
        :math:`c / 2^{\\text{bits}}`.
    reported_tonic_count : float
        The tonic count for printing, see :func:`reported_tonic_count`.
    edo : int
    """

    def __init__(self, bits, edo):

        if bits < 0 or bits > math.log2(edo) + 1e-12:
            raise ValueError('bits must lie between 0 and log2(edo).')

        self.bits        = float(bits)
        self.edo         = edo
        self.tonic_count = edo / 2**self.bits
        self.reported_tonic_count = reported_tonic_count(self.bits, edo)

    @classmethod
    def from_count(cls, t, edo):
        """From a count *t* of candidate tonics; both tonic counts are then exactly *t*."""
        if t < 1 or t > edo:
            raise ValueError('t must lie between 1 and edo.')
        value = cls(math.log2(edo / t), edo)
        value.tonic_count = float(t)
        value.reported_tonic_count = float(t)
        return value

    def __repr__(self):
        return 'AmbiguityValue(bits={:.6f}, tonic_count={:.6f})'.format(
            self.bits, self.tonic_count
        )


class CardinalityProfile:
    """Expected information of a set at every cardinality 1 to *m*.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*.
    rows : list of CardinalityRow
        One row per *k*, in increasing *k*.

    Attributes
    ----------
    set : PitchClassSet
    rows : list of CardinalityRow
    """

    def __init__(self, pcset, rows):

        if [row.k for row in rows] != list(range(1, len(pcset) + 1)):
            raise TypeError('rows must cover k = 1 ... m in order.')

        self.set  = pcset
        self.rows = rows

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, k):
        return self.rows[k - 1]

    @property
    def bits(self):
        """Expected bits by *k*, as an array."""
        return np.array([row.expected_bits for row in self.rows])

    @property
    def tonics(self):
        """Expected candidate tonics by *k*, as an array."""
        return np.array([row.expected_tonics for row in self.rows])


class SetReport:
    """Set-level summary: :math:`\\mathbb{E}_S[I]`, TAI, NMI and NA.

    Attributes
    ----------
    set : PitchClassSet
    profile : CardinalityProfile
    expected_bits_overall : float
        :math:`\\mathbb{E}_S[I]`.
    tai : float
        :math:`c / 2^{\\mathbb{E}_S[I]}`.
    reported_tai : float
        The TAI for printing, from :math:`\\mathbb{E}_S[I]` rounded as in :func:`reported_tonic_count`.
    nmi : float
        :math:`\\mathbb{E}_S[I] / \\log_2 c` (0 when *c* = 1).
    na : float
        1 - *nmi*.
    """

    def __init__(self, pcset, profile, expected_bits_overall):

        edo = pcset.edo

        self.set     = pcset
        self.profile = profile
        self.expected_bits_overall = expected_bits_overall
        self.tai = edo / 2**expected_bits_overall
        self.reported_tai = reported_tonic_count(expected_bits_overall, edo)
        if edo > 1:
            self.nmi = expected_bits_overall / math.log2(edo)
        else:
            self.nmi = 0.
        self.na = 1. - self.nmi

    def __repr__(self):
        return 'SetReport({}, tai={:.4f})'.format(self.set, self.tai)


class TonicPrior:
    """A prior distribution over the *c* candidate tonics (transpositions).

    Parameters
    ----------
    probabilities : array_like
        Non-negative probabilities indexed by :math:`\\tau \\in \\mathbb{Z}_c`, summing to 1.
    """

    def __init__(self, probabilities):

        probabilities = np.asarray(probabilities, dtype=float)
        if probabilities.ndim != 1 or probabilities.size < 1:
            raise TypeError('probabilities must be a non-empty 1D array.')
        check_normalized(probabilities)

        self.probabilities = probabilities

    @property
    def edo(self):
        return self.probabilities.size

    @classmethod
    def uniform(cls, edo):
        return cls(np.full(edo, 1/edo))

    @classmethod
    def point(cls, edo, tau):
        probabilities = np.zeros(edo)
        probabilities[tau % edo] = 1.
        return cls(probabilities)

    @classmethod
    def from_weights(cls, weights):
        """Normalizes non-negative weights into a prior."""
        weights = np.asarray(weights, dtype=float)
        if np.any(weights < 0) or np.sum(weights) <= 0:
            raise ValueError('weights must be non-negative with positive sum.')
        return cls(weights / np.sum(weights))

    def entropy(self):
        """Shannon entropy :math:`H(T)` in bits."""
        return float(entropy(self.probabilities, base=2))


#############################################################################
#############################################################################
# Candidate transpositions                                                  #
#############################################################################
#############################################################################

def _check_pair(pcset, combo):

    if pcset.edo != combo.edo:
        raise TypeError('set and combination belong to different chromatic sizes.')
    if pcset.cardinality == 0:
        raise ValueError('the set must be non-empty.')

def candidate_transpositions(pcset, combo):
    """All :math:`\\tau` with :math:`X \\subseteq \\tau + S`, in increasing order.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*, non-empty.
    combo : PitchClassSet
        The combination *X*. It need not be a subset of *S*.

    Returns
    -------
    list of int

    Examples
    --------
    >>> major = pcs.parse_pcset('024579E')
    >>> candidate_transpositions(major, pcs.parse_pcset('06'))
    [1, 7]
    >>> len(candidate_transpositions(major, pcs.PitchClassSet()))
    12
    """
    _check_pair(pcset, combo)
    edo = pcset.edo
    return [
        tau for tau in range(edo)
        if combo.mask & pcs.rotate_mask(pcset.mask, tau, edo) == combo.mask
    ]

def tonal_ambiguity(pcset, combo):
    """:math:`t_S(X)`, the number of candidate transpositions; 0 if *X* occurs in no transposition of *S*.

    Examples
    --------
    >>> major = pcs.parse_pcset('024579E')
    >>> tonal_ambiguity(major, pcs.parse_pcset('05')), tonal_ambiguity(major, pcs.parse_pcset('012'))
    (6, 0)
    """
    return len(candidate_transpositions(pcset, combo))

def candidate_counts(pcset, masks):
    """:math:`t_S(X)` for many combinations at once.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*, non-empty.
    masks : array_like of int
        Bit masks of the combinations, all in the chromatic size of *S*.

    Returns
    -------
    ndarray of int
    """
    if pcset.cardinality == 0:
        raise ValueError('the set must be non-empty.')
    masks = np.asarray(masks, dtype=np.uint64)
    rot   = pcs.rotations(pcset)
    contained = (masks[:, None] & rot[None, :]) == masks[:, None]
    return np.count_nonzero(contained, axis=1)

def self_information(pcset, combo):
    """Information gained about the tonic from observing *X* within *S*.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*.
    combo : PitchClassSet
        The combination *X*.

    Returns
    -------
    AmbiguityValue
        *bits* is :math:`\\log_2 (c / t_S(X))`, *tonic_count* is :math:`t_S(X)`.

    Raises
    ------
    AbsentCombinationError
        If :math:`t_S(X) = 0`.

    Examples
    --------
    >>> major = pcs.parse_pcset('024579E')
    >>> self_information(major, pcs.parse_pcset('05')).bits
    1.0
    """
    t = tonal_ambiguity(pcset, combo)
    if t == 0:
        raise AbsentCombinationError(
            'combination {} absent from all transpositions of {}.'.format(
                combo, pcset
            )
        )
    return AmbiguityValue.from_count(t, pcset.edo)


#############################################################################
#############################################################################
# Expectations                                                              #
#############################################################################
#############################################################################

def _subset_masks(pcset, k):

    return np.array(
        [x.mask for x in pcs.subsets_of_cardinality(pcset, k)],
        dtype=np.uint64
    )

def class_breakdown(pcset, k):
    """The *k*-subsets of *S* grouped by Tn-class.

    *t* is evaluated at the normal form; translation invariance makes it the same for every instance.

    Returns
    -------
    list of ClassInformation
        Probabilities are multiplicity / :math:`\\binom{m}{k}`.
    """
    population = math.comb(pcset.cardinality, k)
    breakdown = []
    for tn_class in pcs.subset_classes(pcset, k):
        t = tonal_ambiguity(pcset, tn_class.representative)
        breakdown.append(ClassInformation(
            tn_class, t, math.log2(pcset.edo / t),
            Probability(tn_class.multiplicity, population)
        ))
    return breakdown

def expected_info_at_cardinality(pcset, k, breakdown=True):
    """Expected information :math:`\\mathbb{E}_{\\Omega_k(S)}[I]` over all *k*-subsets of *S*.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*.
    k : int
        1 <= *k* <= *m*.
    breakdown : bool, optional
        If *True*, also groups the subsets by Tn-class. Default is *True*.

    Returns
    -------
    CardinalityRow

    Examples
    --------
    >>> row = expected_info_at_cardinality(pcs.parse_pcset('024579E'), 2)
    >>> round(row.expected_bits, 2), round(row.expected_tonics, 1)
    (1.54, 4.1)
    >>> [info.tn_class.multiplicity for info in row.class_breakdown]
    [2, 5, 4, 3, 6, 1]
    """
    m = pcset.cardinality
    if k < 1 or k > m:
        raise ValueError('k must lie between 1 and {}.'.format(m))

    edo    = pcset.edo
    counts = candidate_counts(pcset, _subset_masks(pcset, k))
    bits   = np.log2(edo / counts)

    expected_bits = math.fsum(bits) / counts.size

    return CardinalityRow(
        k, counts.size, expected_bits, edo / 2**expected_bits,
        math.fsum(counts) / counts.size,
        class_breakdown(pcset, k) if breakdown else None
    )

def mean_candidate_count(pcset, k):
    """Arithmetic mean of :math:`t_S(X)` over the *k*-subsets of *S*."""
    return expected_info_at_cardinality(pcset, k, breakdown=False).mean_tonics

def cardinality_profile(pcset, breakdown=False):
    """Expected information of *S* at every cardinality.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*, non-empty.
    breakdown : bool, optional
        If *True*, rows carry their Tn-class breakdown. Default is *False*.

    Returns
    -------
    CardinalityProfile

    Examples
    --------
    >>> profile = cardinality_profile(pcs.parse_pcset('02479'))
    >>> [round(float(t), 2) for t in profile.tonics]
    [5.0, 2.78, 1.83, 1.32, 1.0]
    """
    m = pcset.cardinality
    if m == 0:
        raise ValueError('the set must be non-empty.')
    if m > config.large_set_warning:
        warnings.warn(
            'enumerating all {} subsets of a {}-note set.'.format(2**m - 1, m)
        )
    rows = [
        expected_info_at_cardinality(pcset, k, breakdown=breakdown)
        for k in range(1, m + 1)
    ]
    return CardinalityProfile(pcset, rows)

def set_expected_info(pcset, profile=None):
    """Set-level expected information :math:`\\mathbb{E}_S[I]` in bits.

    Each cardinality is weighted by its share :math:`\\binom{m}{k} / (2^m - 1)` of the non-empty subsets.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*.
    profile : CardinalityProfile, optional
        A profile of *S* already computed.

    Returns
    -------
    float
    """
    if profile is None:
        profile = cardinality_profile(pcset)
    m = pcset.cardinality
    total = 2**m - 1
    return math.fsum(
        row.combination_count * row.expected_bits for row in profile
    ) / total

def tai(pcset, profile=None):
    """The Tonal Ambiguity Index of *S* and its normalized forms.

    Returns
    -------
    SetReport

    Examples
    --------
    >>> report = tai(pcs.parse_pcset('024579E'))
    >>> round(report.tai, 4), round(report.reported_tai, 2)
    (2.4133, 2.42)
    >>> tai(pcs.parse_pcset('02468T')).tai
    6.0
    """
    if profile is None:
        profile = cardinality_profile(pcset)
    return SetReport(pcset, profile, set_expected_info(pcset, profile))

def diagnostic_combinations(pcset, k):
    """Tn-classes of *k*-subsets of *S* whose instances leave a single transposition.

    Examples
    --------
    >>> [c.name for c in diagnostic_combinations(pcs.parse_pcset('024579E'), 3)]
    ['016', '026', '036', '046', '056']
    """
    return [
        info.tn_class for info in class_breakdown(pcset, k) if info.t == 1
    ]

def class_table(pcset, k, include_absent=True):
    """One row per Tn-class of *k*-subsets of the chromatic universe.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*.
    k : int
        The cardinality.
    include_absent : bool, optional
        If *False*, classes with no instance in *S* are left out. Default is *True*.

    Returns
    -------
    list of ClassInformation
        Absent classes have *t* = 0 and *bits* = *None*.
    """
    population = math.comb(pcset.cardinality, k)
    present = {
        tn_class.representative: tn_class.multiplicity
        for tn_class in pcs.subset_classes(pcset, k)
    }

    table = []
    for rep in pcs.tn_class_census(pcset.edo, k):
        multiplicity = present.get(rep, 0)
        if multiplicity == 0 and not include_absent:
            continue
        t = tonal_ambiguity(pcset, rep)
        bits = math.log2(pcset.edo / t) if t > 0 else None
        table.append(ClassInformation(
            pcs.TnClass(rep, multiplicity), t, bits,
            Probability(multiplicity, population)
        ))
    return table


#############################################################################
#############################################################################
# Non-uniform priors                                                        #
#############################################################################
#############################################################################

def info_gain_with_prior(pcset, combo, prior):
    """Information gained about the tonic under a non-uniform prior.

    The posterior is the prior restricted to the candidate transpositions and renormalized; the gain is :math:`H(T) - H(T \\mid X)`. With a uniform prior this reduces to :func:`self_information`.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*.
    combo : PitchClassSet
        The combination *X*.
    prior : TonicPrior
        Prior over the *c* transpositions.

    Returns
    -------
    float
        Bits.

    Raises
    ------
    InconsistentPriorError
        If no candidate transposition has positive prior mass.
    """
    if prior.edo != pcset.edo:
        raise TypeError('prior and set belong to different chromatic sizes.')

    candidates = candidate_transpositions(pcset, combo)
    posterior  = np.zeros(pcset.edo)
    posterior[candidates] = prior.probabilities[candidates]

    mass = np.sum(posterior)
    if mass <= 0:
        raise InconsistentPriorError('evidence inconsistent with prior.')

    return prior.entropy() - float(entropy(posterior / mass, base=2))
