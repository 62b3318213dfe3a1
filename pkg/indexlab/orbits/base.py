import logging

from indexlab import OrbitValidationError, UnsupportedFamilyError
from indexlab.exactlinalg import rank
from indexlab.liealg import is_nilpotent
from indexlab.orbits.adapted import Partition
from indexlab.orbits.ab_diagrams import gl_glpq_orbits
from indexlab.orbits.classical import gl_so_orbits, gl_sp_orbits
from indexlab.orbits.decorated import so_gln_orbits, sp_gln_orbits
from indexlab.orbits.signed import so_sopq_orbits, sp_sppq_orbits
from indexlab.pairs import canonical_family

logger = logging.getLogger(__name__)

_enumerators = {
    'gl/so': gl_so_orbits,
    'gl/sp': gl_sp_orbits,
    'sp/gln': sp_gln_orbits,
    'so/gln': so_gln_orbits,
    'gl/glpq': gl_glpq_orbits,
    'so/sopq': so_sopq_orbits,
    'sp/sppq': sp_sppq_orbits,
}


def orbit_families():
    return sorted(_enumerators)


def enumerate_orbit_reps(pair, validate=False):
    """ Representatives of the nilpotent G0-orbits in g1, including e = 0.

    Every orbit is covered; one orbit may appear under several decorations.
    The result is sorted by Jordan type (largest parts first), then by
    decoration.

    Parameters
    ----------
    pair: SymmetricPair
    validate: bool
        Run ``validate_rep`` on every representative.

    """
    family = canonical_family(pair.family)
    if family not in _enumerators:
        raise UnsupportedFamilyError("No orbit enumeration for %r." % family)

    reps = sorted(_enumerators[family](pair), key=lambda r: r.sort_key)
    logger.info("%d nilpotent orbit representatives in %s", len(reps), pair.label)
    if validate:
        for rep in reps:
            validate_rep(rep, pair)
    return reps


def jordan_type(e):
    """ Jordan type of a nilpotent matrix from the ranks of its powers.

    Returns None when ``e`` is not nilpotent.

    """
    n = e.rows
    ranks = [n]
    power = None
    while ranks[-1] > 0:
        if len(ranks) > n + 1:
            return None
        power = e if power is None else power.dot(e)
        r = rank(power)
        if r == ranks[-1]:
            return None
        ranks.append(r)

    # at_least[k] is the number of blocks of size >= k + 1
    at_least = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)] + [0]
    parts = []
    for k in range(len(at_least) - 1, 0, -1):
        parts.extend([k] * (at_least[k - 1] - at_least[k]))
    return Partition(parts)


def validate_rep(rep, pair):
    """ Check a representative against its pair.

    Checks, by name: 'nilpotent', 'anti-invariant' (sigma(e) = -e),
    'in-algebra' (e in g1), 'jordan-type', 'form' (e self-adjoint for outer
    pairs and skew-adjoint otherwise) and 'isometry' (the adapted basis maps
    its Gram matrix onto the form).

    Returns
    -------
    certificate: dict
        Maps every check that ran to True.

    Raises
    ------
    OrbitValidationError
        Listing every violated check.

    """
    e = rep.e
    checks = {}
    checks['nilpotent'] = is_nilpotent(e)
    checks['anti-invariant'] = pair.sigma.apply(e) == -e
    checks['in-algebra'] = pair.in_g1(e)
    checks['jordan-type'] = checks['nilpotent'] and jordan_type(e) == rep.partition

    if rep.form is not None:
        J = rep.form.matrix
        sign = 1 if pair.sigma.kind == 'outer' else -1
        checks['form'] = e.T.dot(J) == J.dot(e) * sign
        basis = rep.basis
        if basis is not None and basis.gram is not None:
            P = basis.transform
            checks['isometry'] = P.T.dot(J).dot(P) == basis.gram

    violations = sorted(name for name, ok in checks.items() if not ok)
    if violations:
        raise OrbitValidationError(
            "Orbit %s of %s fails: %s." % (rep.orbit_id, pair.label, ', '.join(violations)),
            violations)
    return checks
