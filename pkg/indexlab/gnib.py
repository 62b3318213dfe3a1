""" Good nilpotent index behaviour of isotropy representations.

A symmetric pair has GNIB when ind(g_e0, g_e1) = rk(G/G0) for every
nilpotent e in g1. The Vinberg inequality gives ind(g_e0, g_e1) >= rk(G/G0),
so a Monte-Carlo upper bound equal to the rank already certifies equality;
an exact index above the rank certifies failure.

"""
import logging

from indexlab import PreconditionError, SelfCheckError, SizeGuardError
from indexlab.exactlinalg import (
    DEFAULT_BOX, DEFAULT_TRIALS, MAX_SYMBOLIC_DIM, MAX_SYMBOLIC_VARS,
    MONTECARLO, SYMBOLIC, RationalMatrix)
from indexlab.exactlinalg import rank as matrix_rank
from indexlab.liealg import MatrixLieAlgebra, adjoint, index
from indexlab.orbits import (
    Partition, delta, enumerate_orbit_reps, nilpotent_in_classical,
    validate_rep)
from indexlab.orbits.adapted import PAIR
from indexlab.pairs import (
    centralizer_basis, classical_algebra, graded_centralizer, isotropy_rep,
    rank_of_algebra, rank_table, symmetric_rank)
from indexlab.utils import Timer, render_table

logger = logging.getLogger(__name__)

AUTO = 'auto'
MODES = (MONTECARLO, SYMBOLIC, AUTO)

EQUAL_CERTIFIED = 'equal-certified'
UNEQUAL_CERTIFIED = 'unequal-certified'
INCONCLUSIVE = 'inconclusive'

GNIB = 'GNIB'
NO_GNIB = 'no-GNIB'

TABLE_COLUMNS = ['orbit', 'rank', 'index', 'lower', 'upper', 'status', 'mode', 'ms']


class IndexOptions(object):
    """ Rank-engine settings shared by every index computation of a run. """

    def __init__(self, mode=AUTO, seed=None, trials=DEFAULT_TRIALS,
                 box=DEFAULT_BOX, max_dim=MAX_SYMBOLIC_DIM,
                 max_vars=MAX_SYMBOLIC_VARS, force=False):
        if mode not in MODES:
            raise PreconditionError("Unknown mode %r; expected one of %s."
                                    % (mode, ', '.join(MODES)))
        self.mode = mode
        self.seed = seed
        self.trials = trials
        self.box = box
        self.max_dim = max_dim
        self.max_vars = max_vars
        self.force = force

    def kwargs(self, mode):
        return dict(mode=mode, seed=self.seed, trials=self.trials, box=self.box,
                    max_dim=self.max_dim, max_vars=self.max_vars, force=self.force)

    def index(self, rep, target=None):
        """ Index of ``rep``, escalating to symbolic mode when ``target`` is not met.

        In auto mode a Monte-Carlo result whose upper bound differs from
        ``target`` is recomputed symbolically; a size-guard refusal keeps the
        Monte-Carlo result. Without a target every Monte-Carlo result is
        escalated.

        """
        first = SYMBOLIC if self.mode == SYMBOLIC else MONTECARLO
        report = index(rep, **self.kwargs(first))
        if self.mode == AUTO and not report.exact and report.upper != target:
            logger.info("escalating %r to symbolic elimination", rep)
            try:
                report = index(rep, **self.kwargs(SYMBOLIC))
            except SizeGuardError as e:
                logger.info("symbolic elimination refused: %s", e)
        return report

    def rank(self, pair):
        """ rk(G/G0) from the table, checked against ind(g0, g1). """
        expected = rank_table(pair.family, pair.params)
        return checked_rank(pair, self.index(isotropy_rep(pair), target=expected))


def checked_rank(pair, report):
    """ The table rank of ``pair`` after comparing it with ``report`` on ind(g0, g1).

    A sampled report above the rank is not a contradiction and is only logged.

    """
    expected = rank_table(pair.family, pair.params)
    if report.upper < expected or (report.exact and report.index != expected):
        raise SelfCheckError("Computed ind(g0, g1) = %d for %s, the rank table "
                             "says %d." % (report.index, pair.label, expected))
    if report.upper != expected:
        logger.warning("ind(g0, g1) for %s is only bounded by [%d, %d]",
                       pair.label, report.lower, report.upper)
    return expected


def as_options(options=None, **kwargs):
    if isinstance(options, IndexOptions):
        return options
    return IndexOptions(**kwargs)


class OrbitVerdict(object):
    """ The outcome of comparing ind(g_e0, g_e1) with the rank on one orbit. """

    def __init__(self, orbit_id, rank, status, report=None, mode='trivial',
                 witness=None, ms=None):
        self.orbit_id = orbit_id
        self.rank = rank
        self.status = status
        self.report = report
        self.mode = mode
        self.witness = witness
        self.ms = ms

    @property
    def index(self):
        return self.rank if self.report is None else self.report.index

    @property
    def lower(self):
        return self.rank if self.report is None else max(self.rank, self.report.lower)

    @property
    def upper(self):
        return self.rank if self.report is None else self.report.upper

    def row(self):
        return {'orbit': self.orbit_id, 'rank': self.rank, 'index': self.index,
                'lower': self.lower, 'upper': self.upper, 'status': self.status,
                'mode': self.mode, 'ms': self.ms}

    def to_dict(self):
        d = self.row()
        del d['ms']
        d['certificate'] = (None if self.report is None
                            else self.report.certificate.to_dict())
        if self.witness is not None:
            d['witness'] = self.witness.to_dict()
        return d

    def __repr__(self):
        return "OrbitVerdict(%s, %s)" % (self.orbit_id, self.status)


def _status(report, target):
    if report.upper < target:
        raise SelfCheckError("Index bound %d is below the rank %d." % (report.upper, target))
    if report.upper == target:
        return EQUAL_CERTIFIED
    if report.exact:
        return UNEQUAL_CERTIFIED
    return INCONCLUSIVE


def gnib_at(pair, rep, rank=None, options=None, with_witness=False, **kwargs):
    """ Compare ind(g_e0, g_e1) with rk(G/G0) at one orbit representative.

    Parameters
    ----------
    pair: SymmetricPair
    rep: OrbitRep
        Assumed validated against ``pair``.
    rank: int (optional)
        rk(G/G0); read from the rank table when omitted.
    options: IndexOptions (optional)
        Or the same settings as keyword arguments.
    with_witness: bool
        Also evaluate the explicit covector for the families that have one.

    Returns
    -------
    verdict: OrbitVerdict

    """
    options = as_options(options, **kwargs)
    if rank is None:
        rank = symmetric_rank(pair, check=False)

    with Timer() as timer:
        if rep.e.is_zero():
            verdict = OrbitVerdict(rep.orbit_id, rank, EQUAL_CERTIFIED)
        else:
            centralizer = graded_centralizer(pair, rep.e)
            report = options.index(centralizer.rep, rank)
            verdict = OrbitVerdict(rep.orbit_id, rank, _status(report, rank),
                                   report=report, mode=report.certificate.mode)
            if with_witness:
                verdict.witness = witness(pair, rep, centralizer, rank)
    verdict.ms = timer.ms
    logger.info("%s %s: %s (index %d, rank %d)", pair.label, rep.orbit_id,
                verdict.status, verdict.index, rank)
    return verdict


class PairReport(object):
    """ Verdicts over all enumerated orbits of a pair. """

    def __init__(self, pair, rank, verdicts):
        self.family = pair.family
        self.params = dict(pair.params)
        self.label = pair.label
        self.rank = rank
        self.verdicts = sorted(verdicts, key=lambda v: v.orbit_id)

    @property
    def overall(self):
        statuses = [v.status for v in self.verdicts]
        if UNEQUAL_CERTIFIED in statuses:
            return NO_GNIB
        if all(s == EQUAL_CERTIFIED for s in statuses):
            return GNIB
        return INCONCLUSIVE

    @property
    def gib(self):
        """ GNIB implies GIB for isotropy representations; None if unknown. """
        return True if self.overall == GNIB else None

    def counts(self):
        counts = dict((s, 0) for s in (EQUAL_CERTIFIED, UNEQUAL_CERTIFIED, INCONCLUSIVE))
        for v in self.verdicts:
            counts[v.status] += 1
        return counts

    def to_dict(self):
        return {'family': self.family, 'params': self.params, 'pair': self.label,
                'rank': self.rank, 'overall': self.overall, 'gib': self.gib,
                'orbits': [v.to_dict() for v in self.verdicts]}

    def table(self, fmt='md'):
        return render_table([v.row() for v in self.verdicts], TABLE_COLUMNS, fmt)


def gnib_check(pair, options=None, with_witness=False, validate=True, **kwargs):
    """ Sweep every nilpotent orbit of ``pair``.

    The rank of G/G0 is taken from the table and self-checked against
    ind(g0, g1) first.

    """
    options = as_options(options, **kwargs)
    target = options.rank(pair)
    verdicts = []
    for rep in enumerate_orbit_reps(pair):
        if validate:
            validate_rep(rep, pair)
        verdicts.append(gnib_at(pair, rep, rank=target, options=options,
                                with_witness=with_witness))
    report = PairReport(pair, target, verdicts)
    logger.info("%s: %s over %d orbits", pair.label, report.overall, len(verdicts))
    return report


class Witness(object):
    """ An explicit covector alpha on g_e vanishing on g_e0. """

    def __init__(self, coefficients, dim, rank):
        self.coefficients = coefficients
        self.dim = dim
        self.rank = rank

    @property
    def matches(self):
        return self.dim == self.rank

    def to_dict(self):
        return {'terms': len(self.coefficients), 'dim': self.dim,
                'rank': self.rank, 'matches': self.matches}


def witness_coefficients(family, basis):
    """ alpha as a dict (i, j, s) -> a, meaning a * c_i^{j,s}.

    c_i^{j,s}(phi) is the coefficient of e^s.w_j in phi(w_i). Returns None
    for families without an explicit covector.

    """
    chains, partner = basis.chains, basis.partner
    terms = {}
    if family == 'gl/so':
        for i, chain in enumerate(chains):
            terms[(i, i, chain.length - 1)] = i + 1
        return terms

    # one value per group, shared by partner chains
    values = []
    for k, group in enumerate(basis.groups):
        values.extend([k + 1] * (2 if group.kind == PAIR else 1))

    if family == 'gl/sp':
        for i, chain in enumerate(chains):
            terms[(i, i, chain.length - 1)] = values[i]
        return terms
    if family == 'sp/gln':
        for i, chain in enumerate(chains):
            d = chain.length - 1
            if partner[i] == i:
                terms[(i, i, d)] = values[i]
            else:
                terms[(i, partner[i], d)] = values[i]
        return terms
    if family == 'so/gln' and len(chains) == 2:
        return terms
    return None


def witness(pair, rep, centralizer=None, rank=None):
    """ Evaluate the explicit covector at ``rep``; None if there is none. """
    basis = rep.basis
    if basis is None:
        return None
    terms = witness_coefficients(pair.family, basis)
    if terms is None:
        return None
    centralizer = centralizer or graded_centralizer(pair, rep.e)
    rank = symmetric_rank(pair, check=False) if rank is None else rank

    def alpha(phi):
        m = basis.chain_coordinates(phi)
        return sum(a * m[basis.index(j, s), basis.index(i, 0)]
                   for (i, j, s), a in terms.items())

    if any(alpha(x) for x in centralizer.g_e0.basis):
        raise SelfCheckError("Witness for %s does not vanish on g_e0." % rep.orbit_id)

    rows = [[alpha(x.commutator(y)) for y in centralizer.basis]
            for x in centralizer.g_e1]
    dim = len(rows) - matrix_rank(
        RationalMatrix(rows, rows=len(rows), cols=len(centralizer.basis)))
    return Witness(terms, dim, rank)


class DeltaCertificate(object):
    """ delta for one height-four nilpotent and the verdict it gives.

    ``index`` is ind(g_e0, g_e1) of the glued pair. The verdict is
    ``certified`` when that index is exact, since the rank comes from the
    table.

    """

    def __init__(self, kind, partition, record, rank):
        self.kind = kind
        self.partition = partition
        self.record = record
        self.rank = rank

    @property
    def index(self):
        return self.record.centralizer.index

    @property
    def certified(self):
        return self.record.centralizer.exact

    @property
    def verdict(self):
        return NO_GNIB if self.record.delta > 0 else INCONCLUSIVE

    def to_dict(self):
        d = self.record.to_dict()
        d.update({'type': self.kind, 'partition': list(self.partition),
                  'rank': self.rank, 'index': self.index,
                  'certified': self.certified, 'verdict': self.verdict})
        return d


def delta_certificate(kind, partition, options=None, **kwargs):
    """ delta for the nilpotent of type ``partition`` in gl, so or sp.

    A positive delta is a no-GNIB certificate for the glued pair. In auto
    mode ind(g_e0, g_e1) is computed symbolically and the other indices are
    sampled; a size-guard refusal falls back to sampling throughout. The
    rank is checked against the same ind(g0, g1) that enters delta.

    """
    options = as_options(options, **kwargs)
    partition = Partition(partition)
    e, _ = nilpotent_in_classical(kind, partition)
    alg = classical_algebra(kind, partition.total)
    first = SYMBOLIC if options.mode == SYMBOLIC else MONTECARLO
    if options.mode == AUTO:
        try:
            record = delta(alg, e, symbolic=('centralizer',), **options.kwargs(first))
        except SizeGuardError as err:
            logger.info("symbolic elimination refused: %s", err)
            record = delta(alg, e, **options.kwargs(first))
    else:
        record = delta(alg, e, **options.kwargs(first))
    target = checked_rank(record.pair, record.isotropy)
    if record.centralizer.upper < target:
        raise SelfCheckError("ind(g_e0, g_e1) bound %d is below the rank %d."
                             % (record.centralizer.upper, target))
    certificate = DeltaCertificate(kind, partition, record, target)
    logger.info("delta certificate %s_%d (%s): delta = %d, %s", kind,
                partition.total, partition, record.delta, certificate.verdict)
    return certificate


class CharbonnelRecord(object):
    def __init__(self, kind, partition, report, rank):
        self.kind = kind
        self.partition = partition
        self.report = report
        self.rank = rank

    @property
    def equal(self):
        return self.report.upper == self.rank

    def to_dict(self):
        return {'type': self.kind, 'partition': list(self.partition),
                'index': self.report.index, 'rank': self.rank, 'equal': self.equal,
                'exact': self.report.exact}


def charbonnel_check(kind, partition, options=None, **kwargs):
    """ ind g_e against rk g for the nilpotent of type ``partition``. """
    options = as_options(options, **kwargs)
    partition = Partition(partition)
    e, _ = nilpotent_in_classical(kind, partition)
    n = partition.total
    alg = classical_algebra(kind, n)
    centralizer = MatrixLieAlgebra(centralizer_basis(alg.basis, e, n),
                                   label='%s_e' % alg.label, ambient=n, check=False)
    target = rank_of_algebra(kind, n)
    report = options.index(adjoint(centralizer), target)
    if report.upper < target:
        raise SelfCheckError("ind g_e bound %d is below rk g = %d." % (report.upper, target))
    return CharbonnelRecord(kind, partition, report, target)
