"""Constructive colorers and the validity predicates they are checked against."""
from .circular import (CircularPalette, ThreadExtension, check_circular_hypothesis,
                       circular_color, color_thread, extend_thread, forbidden_bound)
from .lists import color_sequence, cycle_order, degeneracy_color, list_color_even_cycle
from .planar import square_bound, square_color_planar, total_compose
from .sparse import acyclic_6list, if_partition, improper_2list, star_color4
from .validate import KINDS, Coloring, Violation, is_valid, validate
