""" The tonalambiguity command-line front end.

Usage::

    python main.py interpretations 024579E 05
    python main.py tai major 02479 --draws 8
    python main.py tables t5 --format markdown
    python main.py curve 0235689E --nmax 32 --auc
    python main.py survivors 0145 --pool common

Exit codes are 0 on success, 2 on usage or parse errors and 3 on domain errors (a combination absent from every transposition, an inconsistent prior).

"""

import argparse
import sys

import config

from tonalambiguity import pcset as pcs
from tonalambiguity import measure
from tonalambiguity import temporal
from tonalambiguity import family as fam
from tonalambiguity import tables
from tonalambiguity.output import Table, OutputDocument, formats
from tonalambiguity.utilities import format_number


exit_ok     = 0
exit_usage  = 2
exit_domain = 3


def _parse_sets(specs, edo):

    return [fam.parse_scale(spec, edo) for spec in specs]

def _load_family(args):

    if getattr(args, 'family', None):
        return fam.load_family(args.family)
    return None

def _banner(args, text):

    if args.verbose:
        print('****** {} ******'.format(text), file=sys.stderr)


#############################################################################
#############################################################################
# Commands                                                                  #
#############################################################################
#############################################################################

def cmd_interpretations(args):
    """Candidate transpositions, *t*, bits and tonic count of one combination in one set.

    Returns
    -------
    tuple
        (:class:`.OutputDocument`, exit code). The document is produced even when the combination is absent, with *t* = 0 and no bits value.
    """
    pcset = fam.parse_scale(args.set, args.edo)
    combo = pcs.parse_pcset(args.combo, args.edo, allow_empty=True)

    taus = measure.candidate_transpositions(pcset, combo)
    t    = len(taus)
    bits = None
    tonics = None
    if t > 0:
        value  = measure.self_information(pcset, combo)
        bits   = value.bits
        tonics = value.tonic_count

    columns = ['set', 'combination', 'transpositions', 't', 'bits', 'tonics']
    row = [
        str(pcset), str(combo), ' '.join(str(tau) for tau in taus),
        format_number(t), format_number(bits), format_number(tonics)
    ]
    raw = [str(pcset), str(combo), taus, t, bits, tonics]

    if args.prior is not None:
        weights = [float(w) for w in args.prior.split(',')]
        prior   = measure.TonicPrior.from_weights(weights)
        gain = None
        if t > 0:
            gain = measure.info_gain_with_prior(pcset, combo, prior)
        columns.append('prior_bits')
        row.append(format_number(gain))
        raw.append(gain)

    doc = OutputDocument(Table('Interpretations', columns, [row], [raw]))
    return doc, (exit_ok if t > 0 else exit_domain)

def cmd_tai(args):
    """TAI, NMI, NA and the length-conditioned tonic count of each set, then each set's cardinality profile."""
    sets  = _parse_sets(args.sets, args.edo)
    draws = args.draws if args.draws is not None else temporal.default_draw_length()

    summary_rows, summary_raw = [], []
    profiles = []
    for s in sets:
        _banner(args, 'Set {}'.format(s))
        report = measure.tai(s)
        after  = temporal.expected_info_after_draws(s, draws, report.profile)
        summary_rows.append([
            str(s), format_number(report.expected_bits_overall),
            format_number(report.reported_tai), format_number(report.nmi),
            format_number(report.na), format_number(after.reported_tonic_count)
        ])
        summary_raw.append([
            str(s), report.expected_bits_overall, report.tai, report.nmi,
            report.na, after.tonic_count
        ])

        rows = [
            [
                str(row.k), str(row.combination_count),
                format_number(row.expected_bits),
                format_number(row.expected_tonics),
                format_number(row.mean_tonics)
            ] for row in report.profile
        ]
        raw = [
            [
                row.k, row.combination_count, row.expected_bits,
                row.expected_tonics, row.mean_tonics
            ] for row in report.profile
        ]
        profiles.append(Table(
            'Profile of {}'.format(s),
            ['k', 'combinations', 'bits', 'tonics', 'mean_t'], rows, raw
        ))

    summary = Table(
        'Tonal Ambiguity Index',
        ['set', 'bits', 'tai', 'nmi', 'na', 'tonics_n{}'.format(draws)],
        summary_rows, summary_raw
    )
    return OutputDocument([summary] + profiles), exit_ok

def cmd_tables(args):
    """Regenerates a reference table."""
    _banner(args, 'Table {}'.format(args.which))
    doc = tables.generate(
        args.which, family=_load_family(args), convention=args.convention,
        use_tqdm=args.verbose
    )
    return doc, exit_ok

def cmd_curve(args):
    """Convergence curves, optionally with their areas and a plot."""
    if args.all_tnclasses is not None:
        sets = pcs.tn_class_census(args.edo, args.all_tnclasses)
    else:
        if not args.sets:
            raise ValueError('give sets or --all-tnclasses.')
        sets = _parse_sets(args.sets, args.edo)

    n_range = tuple(args.auc_range) if args.auc_range else config.default_auc_range
    if args.auc and n_range[1] > args.nmax:
        raise ValueError('--auc-range must lie within --nmax.')

    curves = temporal.curve_sweep(sets, args.nmax, use_tqdm=args.verbose)

    rows, raw = [], []
    for curve in curves:
        for p in curve.points:
            rows.append([
                str(curve.set), str(p.n), format_number(p.bits),
                format_number(p.tonics)
            ])
            raw.append([str(curve.set), p.n, p.bits, p.tonics])
    out = [Table('Convergence curves', ['set', 'n', 'bits', 'tonics'], rows, raw)]

    if args.auc:
        auc_rows, auc_raw = [], []
        for curve in curves:
            area = temporal.auc(curve, args.auc_baseline, n_range)
            report = measure.tai(curve.set)
            auc_rows.append([
                str(curve.set), format_number(area),
                format_number(report.reported_tai)
            ])
            auc_raw.append([str(curve.set), area, report.tai])
        out.append(Table(
            'Area under the curve ({}, {}-{})'.format(
                args.auc_baseline, n_range[0], n_range[1]
            ), ['set', 'auc', 'tai'], auc_rows, auc_raw
        ))

        if args.all_tnclasses is not None:
            report = temporal.auc_tai_correlation(
                args.edo, args.all_tnclasses, args.auc_baseline, n_range
            )
            out.append(Table(
                'Correlation of AUC and TAI', ['classes', 'r_squared'],
                [[str(len(report.sets)), str(round(report.r_squared, 4))]],
                [[len(report.sets), report.r_squared]]
            ))

    if args.plot:
        fig = temporal.plot_convergence(curves)
        fig.savefig(args.plot)

    return OutputDocument(out), exit_ok

def cmd_survivors(args):
    """Members of a family surviving a combination, with the disambiguation gain."""
    family = _load_family(args)
    if family is None:
        if args.pool == 'common':
            family = fam.common_pool()
        else:
            family = fam.reference_scales()

    combo  = pcs.parse_pcset(args.combo, family.edo)
    report = fam.family_survivors(family, combo)

    rows = [[name, str(t)] for name, t in report.survivors]
    raw  = [[name, t] for name, t in report.survivors]
    survivors = Table(
        'Survivors of {}'.format(combo), ['set', 't'], rows, raw
    )
    gain = Table(
        'Disambiguation gain', ['family_size', 'survivors', 'bits'],
        [[
            str(len(family)), str(len(report.survivors)),
            format_number(report.gain_bits)
        ]],
        [[len(family), len(report.survivors), report.gain_bits]]
    )
    return OutputDocument([survivors, gain]), exit_ok


#############################################################################
#############################################################################
# Entry point                                                               #
#############################################################################
#############################################################################

def build_parser():
    """The argument parser, one subcommand per ``cmd_*`` function."""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--edo', type=int, default=config.default_edo,
        help='chromatic size (default: %(default)s)'
    )
    common.add_argument(
        '--format', choices=formats, default='csv',
        help='output format (default: %(default)s)'
    )
    common.add_argument(
        '--verbose', action='store_true',
        help='progress messages on stderr'
    )

    parser = argparse.ArgumentParser(
        prog='tonalambiguity',
        description='Tonal ambiguity of pitch-class sets.'
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser(
        'interpretations', parents=[common],
        help='candidate transpositions of a combination in a set'
    )
    p.add_argument('set')
    p.add_argument('combo')
    p.add_argument(
        '--prior', default=None,
        help='comma-separated tonic weights for a non-uniform prior'
    )
    p.set_defaults(func=cmd_interpretations)

    p = sub.add_parser(
        'tai', parents=[common], help='Tonal Ambiguity Index of sets'
    )
    p.add_argument('sets', nargs='+')
    p.add_argument(
        '--draws', type=int, default=None,
        help='melody length n (default: {})'.format(config.default_draws)
    )
    p.set_defaults(func=cmd_tai)

    p = sub.add_parser(
        'tables', parents=[common], help='regenerate a reference table'
    )
    p.add_argument('which', choices=tables.selectors)
    p.add_argument('--family', default=None, help='family definition file')
    p.add_argument(
        '--convention', choices=fam.census_conventions, default='class',
        help='census averaging for t6 and t7 (default: %(default)s)'
    )
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser(
        'curve', parents=[common], help='convergence curves'
    )
    p.add_argument('sets', nargs='*')
    p.add_argument(
        '--nmax', type=int, default=config.default_nmax,
        help='last number of draws (default: %(default)s)'
    )
    p.add_argument(
        '--all-tnclasses', type=int, default=None, metavar='K',
        help='every Tn-class of cardinality K'
    )
    p.add_argument('--auc', action='store_true', help='add areas under the curves')
    p.add_argument(
        '--auc-baseline', choices=('asymptote', 'unity', 'zero'),
        default=config.default_auc_baseline
    )
    p.add_argument(
        '--auc-range', type=int, nargs=2, default=None,
        metavar=('START', 'END')
    )
    p.add_argument('--plot', default=None, help='save a plot to this file')
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser(
        'survivors', parents=[common],
        help='scales surviving a combination'
    )
    p.add_argument('combo')
    p.add_argument('--family', default=None, help='family definition file')
    p.add_argument('--pool', choices=('common', 'all'), default='all')
    p.set_defaults(func=cmd_survivors)

    return parser

def main(argv=None):
    """Runs one command and returns its exit code.

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name. Default is ``sys.argv[1:]``.

    Returns
    -------
    int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code

    try:
        doc, code = args.func(args)
    except pcs.PitchClassParseError as err:
        print('error: {}'.format(err), file=sys.stderr)
        return exit_usage
    except (
        measure.AbsentCombinationError, measure.InconsistentPriorError,
        OverflowError
    ) as err:
        print('error: {}'.format(err), file=sys.stderr)
        return exit_domain
    except (ValueError, KeyError, TypeError, OSError) as err:
        print('error: {}'.format(err), file=sys.stderr)
        return exit_usage

    sys.stdout.write(doc.render(args.format))
    return code


if __name__ == '__main__':
    sys.exit(main())
