"""Exact engine for Deligne's category uRep(O_delta).

Partitions label the indecomposable objects R(lam).  The diagram layer
computes weight and cap diagrams and the invariant k(lam); the ring layer
multiplies in the Grothendieck rings K_delta and K_t; ``ideal`` and ``osp``
classify thick ideals and orthosymplectic tensors; ``brauer`` is an
independent check through explicit Brauer-algebra idempotents.
"""

from .diagram import (
    Cap,
    CapDiagram,
    InvalidDiagramError,
    KInvariants,
    Mark,
    WeightDiagram,
    box_move,
    cap_diagram,
    dprime,
    k_invariants,
    partition_of,
    rev,
    rev_at,
    rev_images,
    weight_diagram,
)
from .ideal import ThickIdeal, ideal_generated_by, is_k_minimal, is_negligible, k_minimal_partitions
from .osp import SuperRank, ds_image, is_nonzero, is_projective_tensor, k_zero_specialization, lambda_r, tensor_summands
from .partition import EMPTY, BOX, Partition, parse_partition
from .ring import GENERIC, RingElement, bilinear_form, lift, tensor_at, tensor_generic, unlift

__version__ = "0.1.0"
