"""Tables of printed cells and their serialization to CSV, JSON and Markdown.

Printed cells are strings, already rounded; full-precision values travel alongside in *raw*. Serialization is deterministic: identical documents give byte-identical text.

"""

import csv
import io
import json

import numpy as np


formats = ('csv', 'json', 'markdown')
"""Supported output formats."""


class Table:
    """A titled table.

    Parameters
    ----------
    title : str
        The table title.
    columns : list of str
        Column headers.
    rows : list of list of str
        Printed cells, one list per row.
    raw : list of list, optional
        Full-precision values parallel to *rows*. Defaults to *rows*.
    """

    def __init__(self, title, columns, rows, raw=None):

        if any(len(row) != len(columns) for row in rows):
            raise TypeError('every row must have one cell per column.')
        if raw is None:
            raw = [list(row) for row in rows]
        if len(raw) != len(rows):
            raise TypeError('raw must have one entry per row.')

        self.title   = title
        self.columns = list(columns)
        self.rows    = [[str(cell) for cell in row] for row in rows]
        self.raw     = raw

    def column(self, name):
        """Printed cells of one column."""
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def row(self, key):
        """The first row whose first cell is *key*."""
        for row in self.rows:
            if row[0] == key:
                return row
        raise KeyError('no row {!r} in table {!r}.'.format(key, self.title))

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        return 'Table({!r}, {} rows)'.format(self.title, len(self.rows))


class OutputDocument:
    """One or more tables rendered in a single format.

    Parameters
    ----------
    tables : list of Table
        The tables, in output order.
    """

    def __init__(self, tables):

        if isinstance(tables, Table):
            tables = [tables]
        self.tables = list(tables)

    def __getitem__(self, i):
        return self.tables[i]

    def __len__(self):
        return len(self.tables)

    def render(self, fmt='csv'):
        """The document as text in *fmt*, one of :data:`formats`."""
        if fmt == 'csv':
            return self.to_csv()
        elif fmt == 'json':
            return self.to_json()
        elif fmt == 'markdown':
            return self.to_markdown()
        else:
            raise ValueError('invalid format.')

    def to_csv(self):
        """CSV with a header row; several tables are separated by a blank line and each introduced by ``# title``."""
        buf    = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        many   = len(self.tables) > 1
        for i, table in enumerate(self.tables):
            if i > 0:
                buf.write('\n')
            if many:
                buf.write('# {}\n'.format(table.title))
            writer.writerow(table.columns)
            writer.writerows(table.rows)
        return buf.getvalue()

    def to_json(self):
        """A single JSON document; *raw* keeps full-precision values."""
        payload = {
            'tables': [
                {
                    'title': table.title, 'columns': table.columns,
                    'rows': table.rows, 'raw': table.raw
                } for table in self.tables
            ]
        }
        return json.dumps(
            payload, sort_keys=True, indent=2, default=_to_builtin
        ) + '\n'

    def to_markdown(self):
        """Pipe tables, each under a ``### title`` heading."""
        blocks = []
        for table in self.tables:
            lines = ['### {}'.format(table.title), '']
            lines.append('| ' + ' | '.join(table.columns) + ' |')
            lines.append('|' + '|'.join('---' for _ in table.columns) + '|')
            for row in table.rows:
                lines.append('| ' + ' | '.join(row) + ' |')
            blocks.append('\n'.join(lines))
        return '\n\n'.join(blocks) + '\n'


def _to_builtin(obj):

    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError('cannot serialize {!r}.'.format(obj))

def read_csv(text):
    """Parses the output of :meth:`OutputDocument.to_csv`.

    Parameters
    ----------
    text : str
        CSV text.

    Returns
    -------
    OutputDocument
        Tables with printed cells only; untitled single tables get an empty title.

    Examples
    --------
    >>> doc = read_csv('k,t\\n1,7\\n2,4.12\\n')
    >>> doc[0].columns, doc[0].rows
    (['k', 't'], [['1', '7'], ['2', '4.12']])
    """
    tables = []
    for block in text.strip('\n').split('\n\n'):
        lines = block.split('\n')
        title = ''
        if lines and lines[0].startswith('# '):
            title = lines[0][2:]
            lines = lines[1:]
        records = list(csv.reader(lines))
        if not records:
            continue
        tables.append(Table(title, records[0], records[1:]))
    return OutputDocument(tables)
