"""Pitch-class sets over the chromatic universe of an equal division of the octave.

Sets are stored as characteristic bit masks of width *c* (bit *i* set when pitch class *i* is a member), so that transposition is a bit rotation and containment is a single AND. The width is capped at :data:`config.max_edo`.

Text forms are the compact digit form (``024579E``, with ``T`` = 10 and ``E`` = 11, valid only for *c* <= 12) and the comma-separated list (``0,2,4,5,7,9,11``).

"""

import math
from itertools import combinations

import numpy as np

import config


class PitchClassParseError(ValueError):
    """Raised when a pitch-class set cannot be read from text."""


compact_digits = {
    '0': 0, '1': 1, '2': 2, '3': 3, '4': 4, '5': 5, '6': 6, '7': 7,
    '8': 8, '9': 9, 'T': 10, 't': 10, 'E': 11, 'e': 11
}
"""Alphabet of the compact digit form."""

compact_chars = '0123456789TE'
"""Characters written for pitch classes 0 to 11 in the compact digit form."""


def _check_edo(edo):

    if isinstance(edo, bool) or not isinstance(edo, (int, np.integer)):
        raise TypeError('edo must be an integer.')
    if edo < 1 or edo > config.max_edo:
        raise ValueError(
            'edo must lie between 1 and {}.'.format(config.max_edo)
        )

def rotate_mask(mask, tau, edo):
    """Rotates a bit mask by *tau* steps within a word of width *edo*.

    Parameters
    ----------
    mask : int
        The characteristic bit mask.
    tau : int
        The transposition, reduced mod *edo*.
    edo : int
        The chromatic size.

    Returns
    -------
    int

    Examples
    --------
    >>> rotate_mask(0b10010001, 5, 12) == (1 << 5) | (1 << 9) | (1 << 0)
    True
    """
    tau %= edo
    if tau == 0:
        return mask
    full = (1 << edo) - 1
    return ((mask << tau) | (mask >> (edo - tau))) & full


class PitchClassSet:
    """A set of pitch classes in :math:`\\mathbb{Z}_c`.

    Instances are immutable values: every operation returns a new set. The same type is used for observed combinations *X*, which may be empty.

    Parameters
    ----------
    members : iterable of int
        The pitch classes, each in [0, *edo*). Order does not matter.
    edo : int, optional
        The chromatic size *c*. Default is :data:`config.default_edo`.

    Attributes
    ----------
    edo : int
        The chromatic size *c*.
    mask : int
        The characteristic bit mask.
    members : tuple of int
        Sorted members.

    Examples
    --------
    >>> major = PitchClassSet([0, 2, 4, 5, 7, 9, 11])
    >>> len(major), major.edo
    (7, 12)
    >>> str(major)
    '024579E'
    """

    def __init__(self, members=(), edo=None):

        if edo is None:
            edo = config.default_edo
        _check_edo(edo)

        mask = 0
        for pc in members:
            if isinstance(pc, bool) or not isinstance(pc, (int, np.integer)):
                raise TypeError('pitch classes must be integers.')
            if pc < 0 or pc >= edo:
                raise ValueError(
                    'pitch class {} lies outside [0, {}).'.format(pc, edo)
                )
            if mask >> int(pc) & 1:
                raise ValueError('duplicate pitch class {}.'.format(pc))
            mask |= 1 << int(pc)

        self._edo  = int(edo)
        self._mask = mask

    @classmethod
    def from_mask(cls, mask, edo=None):
        """Builds a set directly from its bit mask."""
        if edo is None:
            edo = config.default_edo
        _check_edo(edo)
        if mask < 0 or mask >> edo:
            raise ValueError('mask has bits outside the chromatic range.')
        pcset = cls.__new__(cls)
        pcset._edo  = int(edo)
        pcset._mask = int(mask)
        return pcset

    @property
    def edo(self):
        return self._edo

    @property
    def mask(self):
        return self._mask

    @property
    def members(self):
        return tuple(i for i in range(self._edo) if self._mask >> i & 1)

    @property
    def cardinality(self):
        return bin(self._mask).count('1')

    def __len__(self):
        return self.cardinality

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, pc):
        return 0 <= pc < self._edo and bool(self._mask >> pc & 1)

    def __eq__(self, other):
        if not isinstance(other, PitchClassSet):
            return NotImplemented
        return self._edo == other._edo and self._mask == other._mask

    def __hash__(self):
        return hash((self._edo, self._mask))

    def __repr__(self):
        return 'PitchClassSet({}, edo={})'.format(
            list(self.members), self._edo
        )

    def __str__(self):
        return format_pcset(self)

    def sort_key(self):
        """Key ordering sets by cardinality, then lexicographically by members."""
        return (self.cardinality, self.members)

    def issubset(self, other):
        """Returns *True* if every member of this set is in *other*.

        Raises
        ------
        TypeError
            If the chromatic sizes differ.
        """
        if self._edo != other.edo:
            raise TypeError('sets belong to different chromatic sizes.')
        return self._mask & other.mask == self._mask

    def transpose(self, tau):
        """See :func:`transpose`."""
        return transpose(self, tau)

    def complement(self):
        """Returns the pitch classes of the chromatic universe not in this set."""
        full = (1 << self._edo) - 1
        return PitchClassSet.from_mask(full & ~self._mask, self._edo)

    def to_string(self, compact=None):
        """See :func:`format_pcset`."""
        return format_pcset(self, compact=compact)


Combination = PitchClassSet
"""Observed combinations share the representation of pitch-class sets."""


class TnClass:
    """A transposition class together with its multiplicity in a context set.

    Parameters
    ----------
    representative : PitchClassSet
        The class in normal form (first element 0).
    multiplicity : int, optional
        Number of subsets of the context set belonging to the class. Default is 0.
    """

    def __init__(self, representative, multiplicity=0):

        if (
            representative.cardinality > 0
            and normal_form(representative) != representative
        ):
            raise ValueError('representative must be in normal form.')

        self.representative = representative
        self.multiplicity   = multiplicity

    @property
    def name(self):
        return format_pcset(self.representative)

    @property
    def cardinality(self):
        return self.representative.cardinality

    def __eq__(self, other):
        if not isinstance(other, TnClass):
            return NotImplemented
        return (
            self.representative == other.representative
            and self.multiplicity == other.multiplicity
        )

    def __hash__(self):
        return hash((self.representative, self.multiplicity))

    def __repr__(self):
        return 'TnClass({!r}, multiplicity={})'.format(
            self.name, self.multiplicity
        )


#############################################################################
#############################################################################
# Text forms                                                                #
#############################################################################
#############################################################################

def parse_pcset(text, edo=None, allow_empty=False):
    """Reads a pitch-class set from text.

    Parameters
    ----------
    text : str
        Either the compact digit form (one character per pitch class, ``T`` = 10, ``E`` = 11; only for *edo* <= 12) or a comma-separated list of integers. Text without a comma is read as a single integer when *edo* > 12.
    edo : int, optional
        The chromatic size *c*. Default is :data:`config.default_edo`.
    allow_empty : bool, optional
        If *True*, empty text yields the empty set. Default is *False*.

    Returns
    -------
    PitchClassSet

    Raises
    ------
    PitchClassParseError
        For characters outside the alphabet, values not below *edo*, duplicate members, or empty text when not allowed.

    Examples
    --------
    >>> parse_pcset('024579E', 12).members
    (0, 2, 4, 5, 7, 9, 11)
    >>> parse_pcset('0,4,7', 19).members
    (0, 4, 7)
    """

    if edo is None:
        edo = config.default_edo
    _check_edo(edo)

    if not isinstance(text, str):
        raise TypeError('text must be a string.')
    text = text.strip()

    if text == '':
        if allow_empty:
            return PitchClassSet((), edo)
        raise PitchClassParseError('empty pitch-class set.')

    if ',' in text or edo > 12:
        values = []
        for item in text.split(','):
            item = item.strip()
            try:
                values.append(int(item))
            except ValueError:
                raise PitchClassParseError(
                    'invalid pitch class {!r}.'.format(item)
                ) from None
    else:
        values = []
        for char in text:
            if char not in compact_digits:
                raise PitchClassParseError(
                    'invalid character {!r} in compact form.'.format(char)
                )
            values.append(compact_digits[char])

    seen = set()
    for pc in values:
        if pc < 0 or pc >= edo:
            raise PitchClassParseError(
                'pitch class {} lies outside [0, {}).'.format(pc, edo)
            )
        if pc in seen:
            raise PitchClassParseError('duplicate pitch class {}.'.format(pc))
        seen.add(pc)

    return PitchClassSet(values, edo)

def format_pcset(pcset, compact=None):
    """Writes a pitch-class set as text.

    Parameters
    ----------
    pcset : PitchClassSet
        The set to write.
    compact : bool, optional
        Compact digit form if *True*, comma list if *False*. Default is compact exactly when *edo* <= 12.

    Returns
    -------
    str

    Examples
    --------
    >>> format_pcset(PitchClassSet([0, 2, 4, 6, 8, 10]))
    '02468T'
    >>> format_pcset(PitchClassSet([0, 5, 13], edo=19))
    '0,5,13'
    """
    if compact is None:
        compact = pcset.edo <= 12
    if compact:
        if pcset.edo > 12:
            raise ValueError('compact form requires edo <= 12.')
        return ''.join(compact_chars[pc] for pc in pcset.members)
    return ','.join(str(pc) for pc in pcset.members)


#############################################################################
#############################################################################
# Set algebra                                                               #
#############################################################################
#############################################################################

def transpose(pcset, tau):
    """Returns :math:`\\tau + S`.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*.
    tau : int
        The transposition, reduced mod *c*.

    Returns
    -------
    PitchClassSet

    Examples
    --------
    >>> transpose(PitchClassSet([0, 4, 7]), 5).members
    (0, 5, 9)
    """
    return PitchClassSet.from_mask(
        rotate_mask(pcset.mask, tau, pcset.edo), pcset.edo
    )

def rotations(pcset):
    """Returns the masks of all *c* transpositions of a set.

    Entry :math:`\\tau` is the mask of :math:`\\tau + S`.

    Parameters
    ----------
    pcset : PitchClassSet

    Returns
    -------
    ndarray of uint64
    """
    return np.array(
        [rotate_mask(pcset.mask, tau, pcset.edo) for tau in range(pcset.edo)],
        dtype=np.uint64
    )

def subsets_of_cardinality(pcset, k):
    """All *k*-subsets of a set, in lexicographic order of sorted members.

    Parameters
    ----------
    pcset : PitchClassSet
        The set *S*.
    k : int
        The cardinality, 0 <= *k* <= \\|S\\|.

    Returns
    -------
    list of PitchClassSet

    Examples
    --------
    >>> len(subsets_of_cardinality(parse_pcset('024579E'), 3))
    35
    >>> [str(x) for x in subsets_of_cardinality(parse_pcset('047'), 2)]
    ['04', '07', '47']
    """
    if k < 0 or k > pcset.cardinality:
        raise ValueError(
            'k must lie between 0 and {}.'.format(pcset.cardinality)
        )
    return [
        PitchClassSet(combo, pcset.edo)
        for combo in combinations(pcset.members, k)
    ]

def interval_vector(pcset):
    """Counts the unordered pairs of a set at each interval class.

    Parameters
    ----------
    pcset : PitchClassSet

    Returns
    -------
    ndarray of int
        Entry *i* counts interval class *i* + 1, for interval classes 1 to :math:`\\lfloor c/2 \\rfloor`.

    Examples
    --------
    >>> interval_vector(parse_pcset('024579E')).tolist()
    [2, 5, 4, 3, 6, 1]
    """
    edo = pcset.edo
    counts = np.zeros(edo // 2, dtype=int)
    for a, b in combinations(pcset.members, 2):
        d = (b - a) % edo
        counts[min(d, edo - d) - 1] += 1
    return counts

def normal_form(combo):
    """The normal form of a combination under transposition.

    Among the rotations of the sorted members, the one with the smallest span is chosen; ties go to successively smaller intervals from the first element (lexicographic order), and the result is transposed to start at 0. Inversion is not applied, so 037 and 047 are distinct.

    Parameters
    ----------
    combo : PitchClassSet
        A non-empty combination.

    Returns
    -------
    PitchClassSet

    Examples
    --------
    >>> str(normal_form(parse_pcset('0158')))
    '0158'
    >>> str(normal_form(parse_pcset('047')))
    '047'
    >>> str(normal_form(parse_pcset('8E3')))
    '037'
    """
    members = combo.members
    if len(members) == 0:
        raise ValueError('normal form of the empty set is undefined.')

    edo  = combo.edo
    best = None
    for i in range(len(members)):
        rotated = members[i:] + tuple(pc + edo for pc in members[:i])
        shifted = tuple(pc - rotated[0] for pc in rotated)
        key = (shifted[-1], shifted)
        if best is None or key < best:
            best = key

    return PitchClassSet(best[1], edo)

def is_normal_form(combo):
    """Returns *True* if a combination equals its own normal form."""
    return combo.cardinality > 0 and normal_form(combo) == combo

def symmetry_order(pcset):
    """Number of transpositions mapping a set onto itself.

    Parameters
    ----------
    pcset : PitchClassSet
        A non-empty set.

    Returns
    -------
    int
        Divides *c*; 1 for sets with uniqueness.

    Examples
    --------
    >>> symmetry_order(parse_pcset('02468T'))
    6
    >>> symmetry_order(parse_pcset('024579E'))
    1
    """
    if pcset.cardinality == 0:
        raise ValueError('symmetry order of the empty set is undefined.')
    return sum(
        1 for tau in range(pcset.edo)
        if rotate_mask(pcset.mask, tau, pcset.edo) == pcset.mask
    )

def orbit_size(pcset):
    """Number of distinct transpositions of a set, *c* / symmetry order."""
    return pcset.edo // symmetry_order(pcset)


#############################################################################
#############################################################################
# Tn-classes                                                                #
#############################################################################
#############################################################################

def tn_class_census(edo, k):
    """One representative per Tn-class of *k*-subsets of :math:`\\mathbb{Z}_c`.

    Every class has exactly one normal form, and the normal form contains 0, so the census keeps the 0-containing subsets that are already normal.

    Parameters
    ----------
    edo : int
        The chromatic size *c*.
    k : int
        The cardinality, 1 <= *k* <= *c*.

    Returns
    -------
    list of PitchClassSet
        Representatives in normal form, in lexicographic order.

    Examples
    --------
    >>> len(tn_class_census(12, 7))
    66
    >>> [str(x) for x in tn_class_census(12, 2)]
    ['01', '02', '03', '04', '05', '06']
    """
    _check_edo(edo)
    if k < 1 or k > edo:
        raise ValueError('k must lie between 1 and {}.'.format(edo))

    census = []
    for rest in combinations(range(1, edo), k - 1):
        combo = PitchClassSet((0,) + rest, edo)
        if is_normal_form(combo):
            census.append(combo)
    return census

def _totient(n):

    return sum(1 for i in range(1, n + 1) if math.gcd(i, n) == 1)

def tn_class_count(edo, k):
    """Number of Tn-classes of *k*-subsets, by Burnside's lemma.

    .. math::
       \\frac{1}{c} \\sum_{d \\mid \\gcd(c, k)} \\varphi(d) \\binom{c/d}{k/d}

    Examples
    --------
    >>> tn_class_count(12, 5), tn_class_count(12, 3)
    (66, 19)
    """
    g = math.gcd(edo, k)
    total = sum(
        _totient(d) * math.comb(edo // d, k // d)
        for d in range(1, g + 1) if g % d == 0
    )
    return total // edo

def subset_classes(pcset, k):
    """Groups the *k*-subsets of a set by Tn-class.

    Parameters
    ----------
    pcset : PitchClassSet
        The context set *S*.
    k : int
        The cardinality, 1 <= *k* <= \\|S\\|.

    Returns
    -------
    list of TnClass
        Classes in lexicographic order of representative; multiplicities sum to :math:`\\binom{m}{k}`.

    Examples
    --------
    >>> [(c.name, c.multiplicity) for c in subset_classes(parse_pcset('024579E'), 2)]
    [('01', 2), ('02', 5), ('03', 4), ('04', 3), ('05', 6), ('06', 1)]
    """
    if k < 1:
        raise ValueError('k must be at least 1.')
    counts = {}
    for combo in subsets_of_cardinality(pcset, k):
        rep = normal_form(combo)
        counts[rep] = counts.get(rep, 0) + 1
    return [
        TnClass(rep, counts[rep])
        for rep in sorted(counts, key=lambda x: x.members)
    ]
