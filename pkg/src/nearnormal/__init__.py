"""Near-normal sequences: representation, encoding, canonical forms,
exhaustive enumeration, and the classification table for even n <= 30."""

__version__ = "0.1.0"

from .seqcore import (  # noqa: F401
    Quadruple,
    alpha,
    alternate,
    alt_sum,
    bs_defect,
    from_string,
    is_base_sequences,
    is_near_normal,
    make_near_normal,
    negate,
    npaf,
    reverse,
    seq,
    seq_sum,
    to_string,
)
from .codec import (  # noqa: F401
    NnCode,
    decode_nn,
    decode_pair,
    encode_nn,
    encode_pair,
    format_code,
    parse_code,
)
from .canon import CanonicalWitness, canonicalize, is_canonical  # noqa: F401
from .transform import (  # noqa: F401
    Group,
    GroupElem,
    apply_generator,
    apply_nn_move,
    nn_neighbors,
    orbit_bfs,
)
from .classify import (  # noqa: F401
    ClassRecord,
    NpafIndex,
    build_npaf_index,
    enumerate_bs_canonical,
    enumerate_nn_classes,
    partition_nn,
)
from .tables import table1_rows, verify_row, verify_table  # noqa: F401
