import math
import os

import pytest
from pytest import approx

import config
from tonalambiguity import pcset as pcs
from tonalambiguity import measure
from tonalambiguity import family as fam
from tonalambiguity.pcset import parse_pcset, PitchClassParseError

appendix_path = os.path.join(os.path.dirname(__file__), 'data', 'appendix.txt')

def load_appendix():

    rows = []
    with open(appendix_path) as f:
        for line in f:
            if line.startswith('#') or not line.strip():
                continue
            cells = line.split()
            values = [None if c == '--' else int(c) for c in cells[1:8]]
            rows.append((cells[0], values, int(cells[8])))
    return rows

def test_reference_scales():

    scales = fam.reference_scales()
    assert len(scales) == 7
    assert scales.names == [
        'Major', 'Asc. Melodic Minor', 'Harmonic Minor', 'Whole-Tone',
        'Octatonic', 'Major Pentatonic', 'Augmented'
    ]
    assert str(scales['Harmonic Minor']) == '023578E'
    assert str(scales['Augmented']) == '03478E'
    assert scales.abbreviations == ['M', 'mm', 'hm', 'WT', 'O', 'P', 'A']
    assert fam.reference_scales() is scales
    with pytest.raises(ValueError):
        fam.reference_scales(19)

def test_load_data_invalid():

    with pytest.raises(ValueError):
        config.load_data('scales')

def test_common_pool():

    pool = fam.common_pool()
    assert len(pool) == 6
    assert 'Augmented' not in pool

def test_scale_family_errors():

    a = parse_pcset('047')
    with pytest.raises(ValueError):
        fam.ScaleFamily([])
    with pytest.raises(ValueError):
        fam.ScaleFamily([('a', a), ('a', a)])
    with pytest.raises(TypeError):
        fam.ScaleFamily([('a', a), ('b', parse_pcset('0,4', 19))])
    with pytest.raises(KeyError):
        fam.reference_scales()['Dorian']
    with pytest.raises(KeyError):
        fam.reference_scales().without('Dorian')

def test_parse_family():

    text = '\n'.join([
        '# a custom family', '', 'edo = 19',
        'Diatonic19 = 0,3,6,8,11,14,17  # seven steps', 'Triad = 0,6,11'
    ])
    family = fam.parse_family(text)
    assert family.edo == 19
    assert family.names == ['Diatonic19', 'Triad']
    assert family.abbreviations == ['Diatonic19', 'Triad']
    assert family['Triad'].members == (0, 6, 11)

@pytest.mark.parametrize('text', [
    'Major = 024579E',
    'edo = 12\n',
    'edo = twelve\nA = 047',
    'edo = 12\nA = 047\nA = 037',
    'edo = 12\nA 047',
    'edo = 12\nA = 04X',
])
def test_parse_family_errors(text):

    with pytest.raises(PitchClassParseError):
        fam.parse_family(text)

def test_load_family(tmp_path):

    path = tmp_path / 'pool.txt'
    path.write_text('edo = 12\nMajor = 024579E\nWhole-Tone = 02468T\n')
    family = fam.load_family(str(path))
    assert family.names == ['Major', 'Whole-Tone']

def test_parse_scale_aliases():

    assert str(fam.parse_scale('major')) == '024579E'
    assert str(fam.parse_scale('Whole-Tone')) == '02468T'
    assert str(fam.parse_scale('octatonic')) == '0235689E'
    with pytest.raises(PitchClassParseError):
        fam.parse_scale('major', 19)

def test_family_survivors():

    report = fam.family_survivors(fam.reference_scales(), parse_pcset('0167'))
    assert report.survivors == [('Octatonic', 4)]
    assert report.gain_bits == approx(math.log2(7))

    report = fam.family_survivors(fam.common_pool(), parse_pcset('0145'))
    assert report.survivors == [('Harmonic Minor', 1)]

    report = fam.family_survivors(fam.common_pool(), parse_pcset('7'))
    assert len(report.survivors) == 6
    assert report.gain_bits == 0.

    with pytest.raises(measure.AbsentCombinationError):
        fam.family_survivors(fam.reference_scales(), parse_pcset('012'))

def test_survivors_shrink_with_growing_combinations():

    scales = fam.reference_scales()
    chain = ['0', '04', '047', '0457', '02457']
    previous = set(scales.names)
    for spec in chain:
        report = fam.family_survivors(scales, parse_pcset(spec))
        names = {name for name, _ in report.survivors}
        assert names <= previous
        assert 0 <= report.gain_bits <= math.log2(7)
        previous = names

@pytest.mark.parametrize('k,average,lo,hi', [
    (1, '6.0', 6, 6), (2, '5.2', 4, 6), (3, '4.1', 3, 5),
    (4, '2.9', 1, 5), (5, '1.9', 1, 4), (6, '1.3', 1, 2),
])
def test_common_pool_profile(k, average, lo, hi):

    stats = fam.common_pool_profile(k=k)
    assert '{:.1f}'.format(stats.average) == average
    assert (stats.min, stats.max) == (lo, hi)

def test_census_single_notes_and_dyads():

    for k in [1, 2]:
        stats = fam.census_disambiguation(12, 7, k)
        assert (stats.average, stats.min, stats.max) == (66., 66, 66)

heptachord_rows = [
    (3, '62.7', 39, 66), (4, '42.0', 14, 48), (5, '19.3', 13, 21),
    (6, '5.7', 1, 6),
]

def test_census_ranges():

    for k, _, lo, hi in heptachord_rows:
        stats = fam.census_disambiguation(12, 7, k)
        assert (stats.min, stats.max) == (lo, hi)

def test_census_averages_class_convention():

    cells = [
        '{:.1f}'.format(fam.census_disambiguation(12, 7, k, 'class').average)
        for k, _, _, _ in heptachord_rows
    ]
    assert cells == [average for _, average, _, _ in heptachord_rows]

def test_census_progress_bars(capsys):

    assert fam.census_disambiguation(12, 7, 6, use_tqdm=True) == \
        fam.census_disambiguation(12, 7, 6)
    assert fam.census_survivors(12, 7, 6, use_tqdm=True) == \
        fam.census_survivors(12, 7, 6)
    out, err = capsys.readouterr()
    assert out == ''
    assert 'sets' in err

def test_most_diagnostic_pentachord():

    counts = dict(
        (str(rep), n) for rep, n in fam.census_survivors(12, 7, 5)
    )
    assert counts['01369'] == 13
    assert min(counts.values()) == 13

def test_census_conventions_agree_on_ranges():

    for convention in fam.census_conventions:
        stats = fam.census_disambiguation(12, 7, 6, convention)
        assert (stats.min, stats.max) == (1, 6)
        assert stats.population == 80
    with pytest.raises(ValueError):
        fam.census_disambiguation(12, 7, 3, 'median')

def test_appendix_matches_golden_rows():

    scales = fam.reference_scales()
    rows = fam.appendix_table(scales)
    golden = load_appendix()

    assert [str(row.combo) for row in rows] == [g[0] for g in golden]
    for row, (name, values, possible) in zip(rows, golden):
        assert [row.per_scale_t[n] for n in scales.names] == values, name
        assert row.possible_sets == possible, name

def test_appendix_methods_agree():

    by_subsets = fam.appendix_table(method='subsets')
    by_census = fam.appendix_table(method='census')
    assert by_subsets == by_census
    with pytest.raises(ValueError):
        fam.appendix_table(method='guess')

def test_appendix_consistency():

    scales = fam.reference_scales()
    for row in fam.appendix_table(scales):
        present = [t for t in row.per_scale_t.values() if t is not None]
        assert row.possible_sets == len(present)
        assert all(t >= 1 for t in present)
        # Any transposed instance gives the same t.
        shifted = row.combo.transpose(5)
        for name, s in scales:
            t = measure.tonal_ambiguity(s, shifted)
            assert (t if t > 0 else None) == row.per_scale_t[name]

def test_diagnostic_rows():

    names = [str(r.combo) for r in fam.diagnostic_rows(fam.appendix_table())]
    for name in ['0167', '01347', '03478', '02468T']:
        assert name in names
    assert '0145' not in names
