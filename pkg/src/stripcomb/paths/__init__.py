"""Ground-truth enumerators for strip paths, walks and corridor tables."""

from .corridor import corridor_closed, corridor_closed_t, corridor_table, corridor_table_t, table_rows
from .strip import (
    enumerate_strip,
    partition_prefixes,
    weight_counts,
    weight_poly_bruteforce,
    weight_poly_bruteforce_q,
    weight_up_prefix,
)
from .walks import adjacency_matrix, adjacency_walks, bounded_dyck, walk_counts

__all__ = [
    "corridor_closed",
    "corridor_closed_t",
    "corridor_table",
    "corridor_table_t",
    "table_rows",
    "enumerate_strip",
    "partition_prefixes",
    "weight_counts",
    "weight_poly_bruteforce",
    "weight_poly_bruteforce_q",
    "weight_up_prefix",
    "adjacency_matrix",
    "adjacency_walks",
    "bounded_dyck",
    "walk_counts",
]
