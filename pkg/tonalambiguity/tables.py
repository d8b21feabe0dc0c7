"""Generators for the reference tables of tonal ambiguity values.

Each generator recomputes its table from scratch and returns an :class:`.OutputDocument`. Printed cells follow :data:`config.printed_digits` (bits and tonic counts), :data:`config.census_digits` (census averages) and :data:`config.probability_digits`.

"""

import config
from tonalambiguity import measure
from tonalambiguity import family as fam
from tonalambiguity.output import Table, OutputDocument
from tonalambiguity.utilities import format_number, format_probability


def _major():

    return fam.reference_scales()['Major']

def dyad_table(pcset=None):
    """Candidate transpositions, bits, instances and probability of every dyad class.

    Parameters
    ----------
    pcset : PitchClassSet, optional
        The set. Default is the major scale.

    Returns
    -------
    OutputDocument
    """
    if pcset is None:
        pcset = _major()

    rows, raw = [], []
    for info in measure.class_table(pcset, 2, include_absent=True):
        name = info.tn_class.name
        rows.append([
            name, format_number(info.t), format_number(info.bits),
            format_number(info.tn_class.multiplicity), str(info.probability)
        ])
        raw.append([
            name, info.t, info.bits, info.tn_class.multiplicity,
            float(info.probability)
        ])

    return OutputDocument(Table(
        'Dyads in {}'.format(pcset),
        ['combination', 't', 'bits', 'instances', 'probability'], rows, raw
    ))

def trichord_table(pcset=None):
    """Bits, probability and instances of every trichord class, absent classes included.

    Parameters
    ----------
    pcset : PitchClassSet, optional
        The set. Default is the major scale.

    Returns
    -------
    OutputDocument
    """
    if pcset is None:
        pcset = _major()

    rows, raw = [], []
    for info in measure.class_table(pcset, 3, include_absent=True):
        name = info.tn_class.name
        rows.append([
            name, format_number(info.bits),
            format_probability(info.probability),
            format_number(info.tn_class.multiplicity)
        ])
        raw.append([
            name, info.bits, float(info.probability),
            info.tn_class.multiplicity
        ])

    return OutputDocument(Table(
        'Trichords in {}'.format(pcset),
        ['combination', 'bits', 'probability', 'instances'], rows, raw
    ))

def diatonic_table(pcset=None):
    """Expected bits and candidate tonics at every cardinality of one set, and the set summary.

    Parameters
    ----------
    pcset : PitchClassSet, optional
        The set. Default is the major scale.

    Returns
    -------
    OutputDocument
        Two tables: the cardinality profile and the set-level values.
    """
    if pcset is None:
        pcset = _major()

    report = measure.tai(pcset)

    rows, raw = [], []
    for row in report.profile:
        rows.append([
            str(row.k), str(row.combination_count),
            format_number(row.expected_bits),
            format_number(row.expected_tonics, config.census_digits)
        ])
        raw.append([
            row.k, row.combination_count, row.expected_bits,
            row.expected_tonics
        ])
    profile = Table(
        'Expected information in {}'.format(pcset),
        ['k', 'combinations', 'bits', 'tonics'], rows, raw
    )

    summary = Table(
        'Set summary for {}'.format(pcset),
        ['expected_bits', 'tai', 'nmi', 'na'],
        [[
            format_number(report.expected_bits_overall),
            format_number(report.reported_tai), format_number(report.nmi),
            format_number(report.na)
        ]],
        [[report.expected_bits_overall, report.tai, report.nmi, report.na]]
    )
    return OutputDocument([profile, summary])

def interpretation_table(title, family):
    """Expected candidate tonics by cardinality for each member of a family, and a *Set* row of TAIs.

    Cells past a member's cardinality print as :data:`config.absent_marker`.
    """
    reports = [measure.tai(s) for s in family.sets]
    k_max   = max(s.cardinality for s in family.sets)

    rows, raw = [], []
    for k in range(1, k_max + 1):
        values = [
            r.profile[k].expected_tonics if k <= len(r.profile) else None
            for r in reports
        ]
        rows.append([str(k)] + [format_number(v) for v in values])
        raw.append([k] + values)

    rows.append(['Set'] + [format_number(r.reported_tai) for r in reports])
    raw.append(['Set'] + [r.tai for r in reports])

    columns = ['k'] + [
        '{} ({})'.format(name, s) for name, s in family
    ]
    return OutputDocument(Table(title, columns, rows, raw))

def uniqueness_table():
    """:func:`interpretation_table` for the scales with uniqueness."""
    reference = fam.reference_scales()
    family = fam.ScaleFamily([
        (name, reference[name]) for name in
        ('Major', 'Major Pentatonic', 'Asc. Melodic Minor', 'Harmonic Minor')
    ])
    return interpretation_table('Tonal interpretations, common scales', family)

def limited_transposition_table():
    """:func:`interpretation_table` for the modes of limited transposition."""
    reference = fam.reference_scales()
    family = fam.ScaleFamily([
        (name, reference[name]) for name in
        ('Whole-Tone', 'Octatonic', 'Augmented')
    ])
    return interpretation_table(
        'Tonal interpretations, modes of limited transposition', family
    )

def ambiguity_table(family=None):
    """TAI, NMI and NA of every member of a family, from least to most ambiguous.

    Parameters
    ----------
    family : ScaleFamily, optional
        Default is the reference scales.

    Returns
    -------
    OutputDocument
    """
    if family is None:
        family = fam.reference_scales()

    reports = sorted(
        ((name, measure.tai(s)) for name, s in family),
        key=lambda item: item[1].tai
    )
    rows = [
        [
            name, str(r.set), format_number(r.reported_tai),
            format_number(r.nmi), format_number(r.na)
        ] for name, r in reports
    ]
    raw = [[name, str(r.set), r.tai, r.nmi, r.na] for name, r in reports]

    return OutputDocument(Table(
        'Ambiguity values', ['set', 'pcset', 'tai', 'nmi', 'na'], rows, raw
    ))

def _stats_table(title, stats_list):

    rows = [
        [
            str(s.k), format_number(s.average, config.census_digits),
            str(s.min), str(s.max)
        ] for s in stats_list
    ]
    raw = [[s.k, s.average, s.min, s.max] for s in stats_list]
    return OutputDocument(
        Table(title, ['k', 'average', 'min', 'max'], rows, raw)
    )

def heptachord_table(
    convention='class', edo=12, set_cardinality=7, use_tqdm=False
):
    """Surviving set classes on average (and range) among all set classes of one cardinality.

    Parameters
    ----------
    convention : {'class', 'subset', 'instance'}, optional
        See :data:`.census_conventions`. Default is *'class'*.
    edo : int, optional
        Default is 12.
    set_cardinality : int, optional
        Default is 7.
    use_tqdm : bool, optional
        Shows progress bars if *True*. Default is *False*.

    Returns
    -------
    OutputDocument
    """
    stats_list = [
        fam.census_disambiguation(
            edo, set_cardinality, k, convention, use_tqdm=use_tqdm
        )
        for k in range(1, set_cardinality)
    ]
    return _stats_table(
        'Identifying {}-note sets ({} convention)'.format(
            set_cardinality, convention
        ), stats_list
    )

def common_pool_table(family=None, convention='class', max_cardinality=6):
    """Surviving common scales on average (and range) by combination cardinality."""
    if family is None:
        family = fam.common_pool()
    stats_list = [
        fam.common_pool_profile(family, k, convention)
        for k in range(1, max_cardinality + 1)
    ]
    return _stats_table('Viable common sets', stats_list)

def appendix(family=None, max_cardinality=6, method='subsets', use_tqdm=False):
    """Every Tn-class up to *max_cardinality* in a family, with *t* per member and the number of possible sets.

    Returns
    -------
    OutputDocument
    """
    if family is None:
        family = fam.reference_scales()

    rows, raw = [], []
    for row in fam.appendix_table(
        family, max_cardinality, method=method, use_tqdm=use_tqdm
    ):
        values = [row.per_scale_t[name] for name in family.names]
        rows.append(
            [str(row.combo)] + [format_number(v) for v in values]
            + [str(row.possible_sets)]
        )
        raw.append([str(row.combo)] + values + [row.possible_sets])

    return OutputDocument(Table(
        'Possible transpositions by combination',
        ['combo'] + family.abbreviations + ['possible_sets'], rows, raw
    ))


selectors = ('t1', 't2', 'diatonic', 't3', 't4', 't5', 't6', 't7', 'appendix')
"""Table names accepted by :func:`generate`."""

def generate(which, family=None, convention='class', use_tqdm=False):
    """Regenerates a table by name.

    Parameters
    ----------
    which : str
        One of :data:`selectors`.
    family : ScaleFamily, optional
        Replaces the reference scales for *'t5'* and *'appendix'*, and the common pool for *'t7'*.
    convention : {'class', 'subset', 'instance'}, optional
        Census convention for *'t6'* and *'t7'*.
    use_tqdm : bool, optional
        Progress bars for the long sweeps of *'t6'* and *'appendix'*.

    Returns
    -------
    OutputDocument
    """
    if which == 't1':
        return dyad_table()
    elif which == 't2':
        return trichord_table()
    elif which == 'diatonic':
        return diatonic_table()
    elif which == 't3':
        return uniqueness_table()
    elif which == 't4':
        return limited_transposition_table()
    elif which == 't5':
        return ambiguity_table(family)
    elif which == 't6':
        return heptachord_table(convention, use_tqdm=use_tqdm)
    elif which == 't7':
        return common_pool_table(family, convention)
    elif which == 'appendix':
        return appendix(family, use_tqdm=use_tqdm)
    else:
        raise ValueError('invalid table {!r}.'.format(which))
