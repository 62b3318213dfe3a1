import json
from timeit import default_timer

import pandas as pd
from tabulate import tabulate

from indexlab import MalformedInputError

FORMATS = ('json', 'csv', 'md')

JSON_SEPARATORS = (',', ': ')


def dumps(obj):
    """ Serialize to JSON with sorted keys, so equal values give equal bytes. """
    return json.dumps(obj, sort_keys=True, indent=2, separators=JSON_SEPARATORS)


def loads(text):
    try:
        return json.loads(text)
    except ValueError as e:
        raise MalformedInputError("Malformed JSON: %s" % e)


def load_file(path):
    try:
        with open(path) as f:
            return loads(f.read())
    except (IOError, OSError) as e:
        raise MalformedInputError("Cannot read %s: %s" % (path, e))


def render_table(records, columns, fmt):
    """ Render rows as CSV or as a markdown table. """
    df = pd.DataFrame.from_records(records, columns=columns)
    if fmt == 'csv':
        return df.to_csv(index=False)
    if fmt == 'md':
        return tabulate(df, headers="keys", tablefmt="pipe", showindex=False)
    raise ValueError("Tables are rendered as csv or md, not %r." % fmt)


class Timer(object):
    """ Wall-clock timer for a ``with`` block, in milliseconds. """

    def __enter__(self):
        self.start = default_timer()
        self.ms = None
        return self

    def __exit__(self, *args):
        self.ms = int(round(1000 * (default_timer() - self.start)))
