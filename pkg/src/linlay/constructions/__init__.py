"""Explicit layouts of complete and complete bipartite graphs."""

from .base import BipartiteLabels, Construction, Diagnosis, diagnose
from .complete import deque_layout_Kn, merge_stacks_to_deques, stack_layout_Kn
from .deque_knn import DEQUE_KNN_MIN, deque_knn_construction, deque_layout_Knn
from .rique_kn import RIQUE_KN_MIN, rique_kn_construction, rique_layout_Kn
from .rique_knn import RIQUE_KNN_MIN, rique_knn_construction, rique_layout_Knn

__all__ = [
    "BipartiteLabels", "Construction", "Diagnosis", "diagnose",
    "stack_layout_Kn", "merge_stacks_to_deques", "deque_layout_Kn",
    "DEQUE_KNN_MIN", "deque_knn_construction", "deque_layout_Knn",
    "RIQUE_KN_MIN", "rique_kn_construction", "rique_layout_Kn",
    "RIQUE_KNN_MIN", "rique_knn_construction", "rique_layout_Knn",
]
