"""Telling scales apart: survivors of a combination within a family of sets.

A family :math:`\\mathcal{F}` is a named list of sets in one chromatic size. After hearing *X*, the sets that survive are those with :math:`t_S(X) \\geq 1`, and the gain in identifying the set is

.. math::
   D_{\\mathcal{F}}(X) = \\log_2 \\frac{|\\mathcal{F}|}{t_{\\mathcal{F}}(X)} ,

with :math:`t_{\\mathcal{F}}(X)` the number of survivors.

"""

import math
import sys
from collections import namedtuple

import numpy as np

import config
from tonalambiguity import pcset as pcs
from tonalambiguity import measure


registry_abbreviations = {
    'Major': 'M', 'Asc. Melodic Minor': 'mm', 'Harmonic Minor': 'hm',
    'Whole-Tone': 'WT', 'Octatonic': 'O', 'Major Pentatonic': 'P',
    'Augmented': 'A'
}
"""Column labels of the reference scales."""

scale_aliases = {
    'major': 'Major', 'pentatonic': 'Major Pentatonic',
    'octatonic': 'Octatonic', 'whole-tone': 'Whole-Tone',
    'harmonic-minor': 'Harmonic Minor',
    'melodic-minor': 'Asc. Melodic Minor', 'augmented': 'Augmented'
}
"""Short names accepted in place of reference scales in 12-EDO."""


class ScaleFamily:
    """An ordered, named family of pitch-class sets of one chromatic size.

    Parameters
    ----------
    entries : list of tuple
        Pairs (name, :class:`.PitchClassSet`).

    Examples
    --------
    >>> fam = ScaleFamily([('a', pcs.parse_pcset('0')), ('b', pcs.parse_pcset('01'))])
    >>> len(fam), fam.names, str(fam['b'])
    (2, ['a', 'b'], '01')
    """

    def __init__(self, entries):

        entries = list(entries)
        if len(entries) == 0:
            raise ValueError('a family needs at least one set.')

        names = [name for name, _ in entries]
        if len(set(names)) != len(names):
            raise ValueError('set names must be unique.')
        if len({s.edo for _, s in entries}) != 1:
            raise TypeError('all sets must share one chromatic size.')
        if any(s.cardinality == 0 for _, s in entries):
            raise ValueError('family members must be non-empty.')

        self.entries = entries
        self._index  = {name: s for name, s in entries}

    @property
    def edo(self):
        return self.entries[0][1].edo

    @property
    def names(self):
        return [name for name, _ in self.entries]

    @property
    def sets(self):
        return [s for _, s in self.entries]

    @property
    def abbreviations(self):
        """Column labels; the registry's short forms where they exist."""
        return [registry_abbreviations.get(name, name) for name in self.names]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError('no set named {!r} in family.'.format(name))

    def __contains__(self, name):
        return name in self._index

    def without(self, *names):
        """A new family with the named sets left out."""
        for name in names:
            if name not in self._index:
                raise KeyError('no set named {!r} in family.'.format(name))
        return ScaleFamily(
            [(n, s) for n, s in self.entries if n not in names]
        )

    def __repr__(self):
        return 'ScaleFamily({})'.format(
            ', '.join('{}={}'.format(n, s) for n, s in self.entries)
        )


SurvivorReport = namedtuple(
    'SurvivorReport', ['combination', 'survivors', 'gain_bits']
)
"""Sets surviving a combination: *survivors* is a list of (name, t) and *gain_bits* is :math:`D_{\\mathcal{F}}(X)`."""

AppendixRow = namedtuple(
    'AppendixRow', ['combo', 'per_scale_t', 'possible_sets']
)
"""One Tn-class: *per_scale_t* maps set names to *t* (*None* where absent)."""

DisambiguationStats = namedtuple(
    'DisambiguationStats', ['k', 'average', 'min', 'max', 'population']
)
"""Average and range of the number of surviving sets over the combination classes of cardinality *k*; *population* is the number of classes averaged."""

census_conventions = ('class', 'subset', 'instance')
"""Weightings of combination classes when averaging survivor counts.

- *'class'* -- every combination Tn-class occurring in the family counts once.
- *'subset'* -- every *k*-subset of the chromatic universe occurring in the family counts once, so classes weigh by their orbit size.
- *'instance'* -- classes weigh by their number of *k*-subsets among the members of the family.
"""


#############################################################################
#############################################################################
# Family files                                                              #
#############################################################################
#############################################################################

def parse_family(text):
    """Reads a family from its line-oriented text form.

    The first meaningful line is ``edo = N``; every further line is ``name = setspec``. Blank lines and text after ``#`` are ignored.

    Parameters
    ----------
    text : str
        The family definition.

    Returns
    -------
    ScaleFamily

    Raises
    ------
    PitchClassParseError
        On a malformed line, a missing ``edo`` line, a bad set or a repeated name.

    Examples
    --------
    >>> fam = parse_family('edo = 19\\n# two sets\\nA = 0,3,6\\nB = 0,5,11,14')
    >>> fam.edo, fam.names
    (19, ['A', 'B'])
    """
    edo     = None
    entries = []
    names   = set()

    for lineno, line in enumerate(text.splitlines(), start=1):

        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise pcs.PitchClassParseError(
                'line {}: expected "name = value".'.format(lineno)
            )
        key, value = (part.strip() for part in line.split('=', 1))

        if edo is None:
            if key != 'edo':
                raise pcs.PitchClassParseError(
                    'line {}: the first entry must be "edo = N".'.format(lineno)
                )
            try:
                edo = int(value)
            except ValueError:
                raise pcs.PitchClassParseError(
                    'line {}: invalid edo {!r}.'.format(lineno, value)
                )
            if edo < 1 or edo > config.max_edo:
                raise pcs.PitchClassParseError(
                    'line {}: edo must lie between 1 and {}.'.format(
                        lineno, config.max_edo
                    )
                )
            continue

        if not key or key in names:
            raise pcs.PitchClassParseError(
                'line {}: missing or repeated name {!r}.'.format(lineno, key)
            )
        names.add(key)
        entries.append((key, pcs.parse_pcset(value, edo)))

    if edo is None or not entries:
        raise pcs.PitchClassParseError('family defines no sets.')

    return ScaleFamily(entries)

def load_family(path):
    """Reads a family file. See :func:`parse_family`."""
    with open(path, 'r') as f:
        return parse_family(f.read())

def reference_scales(edo=12):
    """The seven reference scales in 12-EDO.

    Returns
    -------
    ScaleFamily
        Major, Asc. Melodic Minor, Harmonic Minor, Whole-Tone, Octatonic, Major Pentatonic and Augmented.
    """
    if edo != 12:
        raise ValueError('reference scales exist for 12-EDO only.')
    return config.load_data('reference_scales')

def common_pool(edo=12):
    """The reference scales without the augmented scale."""
    return reference_scales(edo).without('Augmented')

def parse_scale(text, edo=None):
    """Reads a set, accepting :data:`scale_aliases` in 12-EDO.

    Examples
    --------
    >>> str(parse_scale('harmonic-minor')), str(parse_scale('0,4,7'))
    ('023578E', '047')
    """
    if edo is None:
        edo = config.default_edo
    alias = scale_aliases.get(text.strip().lower())
    if alias is not None and edo == 12:
        return reference_scales()[alias]
    return pcs.parse_pcset(text, edo)

def census_family(edo, cardinality):
    """Every Tn-class of *cardinality*-subsets as a family, named by normal form."""
    return ScaleFamily(
        [(str(s), s) for s in pcs.tn_class_census(edo, cardinality)]
    )


#############################################################################
#############################################################################
# Survivors                                                                 #
#############################################################################
#############################################################################

def family_survivors(family, combo):
    """Members of a family that survive a combination.

    Parameters
    ----------
    family : ScaleFamily
        The family :math:`\\mathcal{F}`.
    combo : PitchClassSet
        The combination *X*.

    Returns
    -------
    SurvivorReport

    Raises
    ------
    AbsentCombinationError
        If *X* occurs in no member.

    Examples
    --------
    >>> report = family_survivors(reference_scales(), pcs.parse_pcset('0167'))
    >>> report.survivors
    [('Octatonic', 4)]
    """
    survivors = []
    for name, s in family:
        t = measure.tonal_ambiguity(s, combo)
        if t > 0:
            survivors.append((name, t))

    if not survivors:
        raise measure.AbsentCombinationError(
            'combination {} occurs in no member of the family.'.format(combo)
        )

    gain = math.log2(len(family) / len(survivors))
    return SurvivorReport(combo, survivors, gain)

def _class_occurrences(family, k, use_tqdm=False):
    """Combination classes of cardinality *k* found in each member, with multiplicities.

    Returns a dict from representative to a list of (member index, multiplicity).
    """
    members = enumerate(family.sets)
    if use_tqdm:
        from tqdm import tqdm
        members = tqdm(members, total=len(family), desc='sets')

    occurrences = {}
    for i, s in members:
        if k > s.cardinality:
            continue
        for tn_class in pcs.subset_classes(s, k):
            occurrences.setdefault(tn_class.representative, []).append(
                (i, tn_class.multiplicity)
            )
    return occurrences

def survivor_counts(family, k, use_tqdm=False):
    """Number of surviving members for every combination class of cardinality *k*.

    Parameters
    ----------
    family : ScaleFamily
        The family.
    k : int
        Cardinality of the combinations.
    use_tqdm : bool, optional
        Shows a progress bar over the members if *True*. Default is *False*.

    Returns
    -------
    list of tuple
        Pairs (representative, count) for classes occurring in at least one member, in lexicographic order.
    """
    occurrences = _class_occurrences(family, k, use_tqdm)
    return [
        (rep, len(occurrences[rep]))
        for rep in sorted(occurrences, key=lambda x: x.members)
    ]

def disambiguation_profile(family, k, convention='class', use_tqdm=False):
    """Average and range of the number of surviving members at cardinality *k*.

    Parameters
    ----------
    family : ScaleFamily
        The family.
    k : int
        Cardinality of the combinations.
    convention : {'class', 'subset', 'instance'}, optional
        Weighting of combination classes; see :data:`census_conventions`. Default is *'class'*.
    use_tqdm : bool, optional
        Shows a progress bar over the members if *True*. Default is *False*.

    Returns
    -------
    DisambiguationStats
    """
    if convention not in census_conventions:
        raise ValueError('invalid convention.')
    if k < 1:
        raise ValueError('k must be at least 1.')

    occurrences = _class_occurrences(family, k, use_tqdm)
    if not occurrences:
        raise ValueError('no member of the family has {} notes.'.format(k))

    reps    = sorted(occurrences, key=lambda x: x.members)
    counts  = np.array([len(occurrences[rep]) for rep in reps])

    if convention == 'class':
        weights = np.ones(len(reps))
    elif convention == 'subset':
        weights = np.array([pcs.orbit_size(rep) for rep in reps])
    else:
        weights = np.array(
            [sum(mult for _, mult in occurrences[rep]) for rep in reps]
        )

    average = float(np.sum(weights*counts) / np.sum(weights))
    return DisambiguationStats(
        k, average, int(np.min(counts)), int(np.max(counts)), len(reps)
    )

def common_pool_profile(family=None, k=1, convention='class'):
    """:func:`disambiguation_profile` over a small family, by default :func:`common_pool`.

    Examples
    --------
    >>> stats = common_pool_profile(k=2)
    >>> round(stats.average, 1), stats.min, stats.max
    (5.2, 4, 6)
    """
    if family is None:
        family = common_pool()
    return disambiguation_profile(family, k, convention)

def census_disambiguation(
    edo, set_cardinality, combo_cardinality, convention='class',
    use_tqdm=False, verbose=False
):
    """:func:`disambiguation_profile` over every Tn-class of sets of one cardinality.

    Parameters
    ----------
    edo : int
        The chromatic size *c*.
    set_cardinality : int
        Cardinality of the candidate sets (7 for the 66 heptachords of 12-EDO).
    combo_cardinality : int
        Cardinality of the combinations.
    convention : {'class', 'subset', 'instance'}, optional
        See :data:`census_conventions`. Default is *'class'*.
    use_tqdm : bool, optional
        Shows a progress bar over the set classes if *True*. Default is *False*.
    verbose : bool, optional
        Prints a banner to stderr if *True*.

    Returns
    -------
    DisambiguationStats
    """
    family = census_family(edo, set_cardinality)
    if verbose:
        print(
            '****** Census over {} set classes, k = {} ******'.format(
                len(family), combo_cardinality
            ), file=sys.stderr
        )
    return disambiguation_profile(
        family, combo_cardinality, convention, use_tqdm
    )

def census_survivors(edo, set_cardinality, combo_cardinality, use_tqdm=False):
    """Survivor counts of every combination class among all set classes of one cardinality.

    Shows a progress bar over the set classes if *use_tqdm* is *True*.

    Examples
    --------
    >>> counts = dict((str(rep), n) for rep, n in census_survivors(12, 7, 5))
    >>> counts['01369']
    13
    """
    return survivor_counts(
        census_family(edo, set_cardinality), combo_cardinality, use_tqdm
    )


#############################################################################
#############################################################################
# Appendix                                                                  #
#############################################################################
#############################################################################

def _appendix_classes(family, k, method):

    if method == 'subsets':
        return sorted(_class_occurrences(family, k), key=lambda x: x.members)
    elif method == 'census':
        return [
            rep for rep in pcs.tn_class_census(family.edo, k)
            if any(measure.tonal_ambiguity(s, rep) > 0 for s in family.sets)
        ]
    else:
        raise ValueError('invalid method.')

def appendix_table(
    family=None, max_cardinality=6, method='subsets', use_tqdm=False,
    verbose=False
):
    """Every Tn-class up to a cardinality occurring in a family, with *t* in each member.

    Parameters
    ----------
    family : ScaleFamily, optional
        The family. Default is :func:`reference_scales`.
    max_cardinality : int, optional
        Largest combination cardinality. Default is 6.
    method : {'subsets', 'census'}, optional
        *'subsets'* collects the classes of the members' subsets; *'census'* filters all Tn-classes of the chromatic universe by occurrence. Both give the same rows.
    use_tqdm : bool, optional
        Shows a progress bar over cardinalities if *True*. Default is *False*.
    verbose : bool, optional
        Prints a banner to stderr if *True*.

    Returns
    -------
    list of AppendixRow
        Ordered by cardinality, then lexicographically by representative.
    """
    if family is None:
        family = reference_scales()
    if max_cardinality < 1:
        raise ValueError('max_cardinality must be at least 1.')

    if verbose:
        print(
            '****** Appendix for {} sets, k = 1 ... {} ******'.format(
                len(family), max_cardinality
            ), file=sys.stderr
        )

    cardinalities = range(1, min(max_cardinality, family.edo) + 1)
    if use_tqdm:
        from tqdm import tqdm
        cardinalities = tqdm(cardinalities, desc='cardinality')

    rows = []
    for k in cardinalities:
        for rep in _appendix_classes(family, k, method):
            per_scale_t = {}
            for name, s in family:
                t = measure.tonal_ambiguity(s, rep)
                per_scale_t[name] = t if t > 0 else None
            possible = sum(1 for t in per_scale_t.values() if t is not None)
            rows.append(AppendixRow(rep, per_scale_t, possible))

    return rows

def diagnostic_rows(rows):
    """Rows whose combination occurs in exactly one member of the family."""
    return [row for row in rows if row.possible_sets == 1]
