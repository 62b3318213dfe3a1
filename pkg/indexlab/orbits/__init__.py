from indexlab.orbits.base import (
    enumerate_orbit_reps, jordan_type, orbit_families, validate_rep)

from indexlab.orbits.adapted import (
    AdaptedBasis, OrbitRep, Partition, partitions)
from indexlab.orbits.ab_diagrams import ABDiagram, ab_diagrams
from indexlab.orbits.classical import (
    admissible, jordan_types, nilpotent_in_classical)
from indexlab.orbits.grading import (
    AdGrading, ad_grading, delta, glue_mod4, height, height_four_element,
    height_four_partition)
