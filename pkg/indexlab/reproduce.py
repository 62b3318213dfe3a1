""" Named reproductions checked against bundled expected outcomes.

Expected outcomes live in ``indexlab/data/expected.json``; each entry holds a
one-line claim, the parameters of the computation, a ``slow`` flag and the
expected observations. A reproduction passes when every expected key is
observed with the expected value.

"""
from collections import namedtuple
import logging
import os
import re

from indexlab import SelfCheckError, UnknownExampleError
from indexlab.catalog import named_algebra
from indexlab.exactlinalg import MONTECARLO, SYMBOLIC, unit_vector
from indexlab.gnib import (
    GNIB, INCONCLUSIVE, NO_GNIB, as_options,
    charbonnel_check, delta_certificate, gnib_at, gnib_check)
from indexlab.liealg import (
    EQUAL, adjoint, check_nilpotent_certificate, check_vinberg, coadjoint,
    coadjoint_parity, direct_sum, dual, gib_evidence, index, index_of_algebra,
    m_copies, quotient_module, sl2_irrep, stabilizer, standard,
    tensor_product)
from indexlab.orbits import (
    Partition, enumerate_orbit_reps, jordan_types, validate_rep)
from indexlab.pairs import borel_gl, make_pair
from indexlab.utils import Timer, load_file, render_table

logger = logging.getLogger(__name__)

EXPECTED = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                        'data', 'expected.json')
VERSION = 1

PASS = 'pass'
MISMATCH = 'mismatch'

TABLE_COLUMNS = ['example', 'status', 'ms']

Outcome = namedtuple('Outcome', ['observed', 'inconclusive', 'expected'])


def outcome(observed, inconclusive=False, expected=None):
    return Outcome(observed, inconclusive, expected)


class Context(object):
    """ What a reproducer may read besides its own parameters. """

    def __init__(self, options, max_n=None, samples=100, expected=None):
        self.options = options
        self.max_n = max_n
        self.samples = samples
        self.expected = expected

    @property
    def seed(self):
        return self.options.seed

    def exact_kwargs(self):
        """ Symbolic elimination unless Monte-Carlo was asked for explicitly. """
        mode = MONTECARLO if self.options.mode == MONTECARLO else SYMBOLIC
        return self.options.kwargs(mode)

    def fits(self, size):
        return self.max_n is None or size <= self.max_n


_reproducers = {}


def reproducer(name):
    def register(f):
        _reproducers[name] = f
        return f
    return register


def load_expected(path=None):
    """ The bundled expected outcomes, keyed by example id. """
    data = load_file(path or EXPECTED)
    if data.get('version') != VERSION:
        raise SelfCheckError("Expected-outcome data has version %r, not %d."
                             % (data.get('version'), VERSION))
    return data['examples']


def example_ids(include_slow=True, expected=None):
    expected = load_expected() if expected is None else expected
    return sorted(k for k, v in expected.items() if include_slow or not v['slow'])


def matches(observed, expected):
    """ Whether every key of ``expected`` is observed with its value. """
    if isinstance(expected, dict):
        return (isinstance(observed, dict)
                and all(k in observed and matches(observed[k], v)
                        for k, v in expected.items()))
    return observed == expected


class Reproduction(object):
    def __init__(self, example_id, claim, status, observed, expected, ms=None):
        self.example_id = example_id
        self.claim = claim
        self.status = status
        self.observed = observed
        self.expected = expected
        self.ms = ms

    @property
    def passed(self):
        return self.status == PASS

    def row(self):
        return {'example': self.example_id, 'status': self.status, 'ms': self.ms}

    def to_dict(self):
        return {'example': self.example_id, 'claim': self.claim,
                'status': self.status, 'observed': self.observed,
                'expected': self.expected}

    def __repr__(self):
        return "Reproduction(%s, %s)" % (self.example_id, self.status)


def reproduce(example_id, options=None, max_n=None, samples=100, expected=None,
              **kwargs):
    """ Run one named reproduction and compare it with its expected outcome.

    Parameters
    ----------
    example_id: str
    options: IndexOptions (optional)
        Or the same settings as keyword arguments.
    max_n: int (optional)
        Skip the parts of a sweep whose matrices are larger than this.
    samples: int
        Random points for sampled good index behaviour.
    expected: dict (optional)
        Expected outcomes keyed by id; the bundled data by default.

    Returns
    -------
    result: Reproduction

    """
    expected = load_expected() if expected is None else expected
    if example_id not in expected or example_id not in _reproducers:
        raise UnknownExampleError("Unknown example %r; expected one of %s."
                                  % (example_id, ', '.join(sorted(expected))))
    entry = expected[example_id]
    context = Context(as_options(options, **kwargs), max_n=max_n, samples=samples,
                      expected=entry['expected'])

    logger.info("reproducing %s", example_id)
    with Timer() as timer:
        result = _reproducers[example_id](entry['params'], context)
    target = entry['expected'] if result.expected is None else result.expected

    if matches(result.observed, target):
        status = PASS
    elif result.inconclusive:
        status = INCONCLUSIVE
    else:
        status = MISMATCH
    logger.info("%s: %s in %d ms", example_id, status, timer.ms)
    return Reproduction(example_id, entry['claim'], status, result.observed,
                        target, ms=timer.ms)


def summary_table(results, fmt='md'):
    return render_table([r.row() for r in results], TABLE_COLUMNS, fmt)


@reproducer('borel-gl4')
def borel_covector(params, context):
    n = params['n']
    alg = borel_gl(n)
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    # trace pairing with the subdiagonal ones
    xi = [1 if j == i + 1 else 0 for i, j in positions]
    kw = context.exact_kwargs()

    stab = stabilizer(coadjoint(alg), xi)
    return outcome({
        'index': index_of_algebra(alg, **kw).index,
        'stabilizer_dim': stab.dim,
        'abelian': stab.is_abelian(),
        'stabilizer_index': index_of_algebra(stab, **kw).index,
        'parity': coadjoint_parity(alg, xi, **kw),
    })


@reproducer('sl2xsl2')
def binary_forms(params, context):
    d1, d2 = params['degrees']
    rep = tensor_product(sl2_irrep(d1), sl2_irrep(d2))
    # (x^d1 + y^d1) (x) x^d2
    v = [a + b for a, b in zip(unit_vector(rep.dim, 0),
                               unit_vector(rep.dim, d1 * (d2 + 1)))]
    check = check_vinberg(rep, v, **context.exact_kwargs())
    quotient = quotient_module(rep, v)

    # h acts by the weight of the second factor only
    h = [0] * (rep.algebra.dim - 1) + [1]
    return outcome({
        'lhs': check.lhs.index,
        'rhs': check.rhs.index,
        'quotient_dim': check.quotient_dim,
        'stabilizer_dim': stabilizer(rep, v).dim,
        'quotient_action_trivial': all(a.is_zero() for a in quotient.action),
        'nilpotent': check_nilpotent_certificate(rep, v, h),
        'status': check.status,
    })


def _structured_points(rep, blocks):
    """ Degenerate points of a sum of ``blocks`` equal modules: zero and unit tuples. """
    size = rep.dim // blocks
    points = [[0] * rep.dim]
    for k in range(1, blocks + 1):
        point = [0] * rep.dim
        for b in range(k):
            point[b * size + b % size] = 1
        points.append(point)
    return points


def _gib(rep, points, context):
    lhs = index(dual(rep), **context.exact_kwargs())
    evidence = gib_evidence(rep, samples=context.samples, seed=context.seed, lhs=lhs)
    structured = all(check_vinberg(rep, v, lhs=lhs, seed=context.seed).status == EQUAL
                     for v in points)
    return evidence.all_equal and structured


@reproducer('mV-gib')
def many_copies(params, context):
    indices = {}
    gib = True
    for name in params['algebras']:
        alg = named_algebra(name)
        module = dual(standard(alg))
        indices[name] = {}
        for m in params['copies']:
            rep = m_copies(module, m)
            indices[name][str(m)] = index(rep, **context.exact_kwargs()).index
            gib = gib and _gib(rep, _structured_points(rep, m), context)
    return outcome({'index': indices, 'gib': gib})


@reproducer('sum-gib')
def sum_with_gib(params, context):
    alg = named_algebra(params['algebra'])
    copies = m_copies(dual(standard(alg)), params['copies'])
    total = direct_sum(adjoint(alg), copies)
    points = [[0] * total.dim,
              [0] * alg.dim + _structured_points(copies, params['copies'])[-1],
              [1] * alg.dim + [0] * copies.dim]
    return outcome({
        'index': index(dual(total), **context.exact_kwargs()).index,
        'formula': total.dim - alg.dim,
        'gib': _gib(total, points, context),
    })


def _overall(overalls):
    if NO_GNIB in overalls:
        return NO_GNIB
    if all(o == GNIB for o in overalls):
        return GNIB
    return INCONCLUSIVE


def nonzero_orbits(report):
    """ Distinct ids of the nonzero orbits swept in ``report``. """
    return sorted(set(v.orbit_id for v in report.verdicts if v.report is not None))


@reproducer('rank1-orbits')
def rank_one(params, context):
    counts = {'gl/glpq': set(), 'sp/sppq': set(), 'so/sopq': set()}
    overalls = []
    for n in params['sizes']:
        for family, size in (('gl/glpq', n), ('sp/sppq', 2 * n), ('so/sopq', n)):
            if not context.fits(size):
                continue
            pair = make_pair(family, p=n - 1, q=1)
            report = gnib_check(pair, options=context.options)
            counts[family].add(len(nonzero_orbits(report)))
            overalls.append(report.overall)

    observed = dict((f, c.pop() if len(c) == 1 else sorted(c))
                    for f, c in counts.items() if c)
    overall = _overall(overalls)
    return outcome({'counts': observed, 'overall': overall},
                   inconclusive=overall == INCONCLUSIVE)


def _rank_three(params, context):
    pair = make_pair(params['family'], p=params['p'], q=params['q'])
    for rep in enumerate_orbit_reps(pair):
        if rep.orbit_id == params['orbit']:
            break
    else:
        raise SelfCheckError("No orbit %s in %s." % (params['orbit'], pair.label))
    validate_rep(rep, pair)
    verdict = gnib_at(pair, rep, options=context.options)
    return outcome({'rank': verdict.rank, 'index': verdict.index,
                    'status': verdict.status,
                    'dim_g_e0': verdict.report.algebra_dim,
                    'dim_g_e1': verdict.report.module_dim},
                   inconclusive=verdict.status == INCONCLUSIVE)


for _name in ('rk3-gl', 'rk3-so', 'rk3-sp'):
    reproducer(_name)(_rank_three)


_gl_size = re.compile(r'^\(gl_(\d+),')


@reproducer('sl-n-table')
def gl_table(params, context):
    top = params['max_n'] if context.max_n is None else context.max_n
    observed = {}
    for n in range(2, top + 1):
        pairs = [make_pair('gl/so', n=n)]
        if n % 2 == 0:
            pairs.append(make_pair('gl/sp', n=n // 2))
        pairs.extend(make_pair('gl/glpq', p=m, q=n - m) for m in range(1, n // 2 + 1))
        for pair in pairs:
            observed[pair.label] = gnib_check(pair, options=context.options).overall

    def size(label):
        return int(_gl_size.match(label).group(1))

    return outcome(observed, inconclusive=INCONCLUSIVE in observed.values(),
                   expected=dict((k, v) for k, v in context.expected.items()
                                 if size(k) <= top))


def _sweep(params, context, with_witness=False):
    overalls = {}
    witnesses = []
    for size in params['sizes']:
        pair = make_pair(params['family'], **size)
        if not context.fits(pair.ambient):
            continue
        report = gnib_check(pair, options=context.options, with_witness=with_witness)
        overalls[pair.label] = report.overall
        witnesses.extend(v.witness for v in report.verdicts if v.witness is not None)

    overall = _overall(list(overalls.values()))
    observed = {'overall': overall, 'pairs': overalls}
    if with_witness:
        observed['witness_matches'] = all(w.matches for w in witnesses)
    return outcome(observed, inconclusive=overall == INCONCLUSIVE)


@reproducer('outer-so')
def outer_symmetric(params, context):
    return _sweep(params, context, with_witness=True)


for _name in ('outer-sp', 'inner-sp-gl', 'inner-so-gl', 'remark-gl2',
              'remark-gl33', 'remark-so33', 'remark-so2', 'remark-sp4',
              'remark-sp66'):
    reproducer(_name)(_sweep)


def _delta(params, context):
    observed = {}
    for text in params['partitions']:
        partition = Partition.parse(text)
        if not context.fits(partition.total):
            continue
        certificate = delta_certificate(params['type'], partition,
                                        options=context.options)
        record = certificate.record
        observed[text] = {'delta': record.delta, 'dim_g4': record.dim_g4,
                          'pair': record.pair.label, 'positive': record.delta > 0,
                          'verdict': certificate.verdict}
    return outcome(observed)


for _name in ('delta-gl', 'delta-so', 'delta-sp'):
    reproducer(_name)(_delta)


@reproducer('charbonnel')
def centralizer_index(params, context):
    records = []
    for kind, top in sorted(params['sizes'].items()):
        if context.max_n is not None:
            top = min(top, context.max_n)
        step = 2 if kind == 'sp' else 1
        for n in range(1 if kind == 'gl' else 2, top + 1, step):
            for partition in jordan_types(kind, n):
                records.append(charbonnel_check(kind, partition, options=context.options))
    unresolved = [r for r in records if not r.equal and not r.report.exact]
    return outcome({'all_equal': all(r.equal for r in records),
                    'checked': len(records)},
                   inconclusive=bool(unresolved))
